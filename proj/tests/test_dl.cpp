#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "../src/dl.hpp"
#include "../src/vertex_complex.hpp"

using namespace ramlat;

namespace {

constexpr std::uint64_t kBudget = 300'000'000;

std::vector<FqSubspace> all_points(const SymplecticSpace& sp, const FqFieldPtr& F) {
  std::vector<FqSubspace> out;
  for (const FqSubspace& U : enumerate_isotropic(sp, F, sp.m(), kBudget))
    if (in_S(sp, U)) out.push_back(U);
  return out;
}

} // namespace

TEST_CASE("membership in S") {
  SUBCASE("rational points always belong") {
    SymplecticSpace sp = standard_symplectic_space(3, 2);
    auto F = make_fq_field(3, 2);
    auto F3 = make_fq_field(3, 1);
    for (const FqSubspace& U : enumerate_isotropic(sp, F3, 2, kBudget)) {
      FqSubspace lifted(F, 4, U.rows());
      CHECK(in_S(sp, lifted));
    }
  }
  SUBCASE("a curve for m = 1") {
    SymplecticSpace sp = standard_symplectic_space(3, 1);
    auto F9 = make_fq_field(3, 2);
    auto lines = enumerate_isotropic(sp, F9, 1, kBudget);
    CHECK(lines.size() == 10);
    for (const FqSubspace& U : lines) CHECK(in_S(sp, U));
  }
  SUBCASE("a proper subvariety for m = 2") {
    SymplecticSpace sp = standard_symplectic_space(2, 2);
    auto F4 = make_fq_field(2, 2);
    int outside = 0;
    for (const FqSubspace& U : enumerate_isotropic(sp, F4, 2, kBudget))
      if (!in_S(sp, U)) ++outside;
    CHECK(outside > 0);
  }
  SUBCASE("rejects non-lagrangians") {
    SymplecticSpace sp = standard_symplectic_space(3, 2);
    auto F3 = make_fq_field(3, 1);
    FqSubspace line(F3, 4, {{1, 0, 0, 0}});
    CHECK_THROWS_AS(in_S(sp, line), Error);
    FqSubspace notiso(F3, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_WITH_AS(in_S(sp, notiso), "membership in S needs a lagrangian", Error);
  }
}

TEST_CASE("stratum chains") {
  SymplecticSpace sp = standard_symplectic_space(3, 1);
  auto F9 = make_fq_field(3, 2);
  for (const FqSubspace& U : enumerate_isotropic(sp, F9, 1, kBudget)) {
    StratumChain c = stratum_of(sp, U);
    if (is_rational(U)) {
      CHECK(c.i == 0);
      CHECK(c.dims == std::vector<int>{1});
      CHECK(c.component == U);
    } else {
      CHECK(c.i == 1);
      CHECK(c.dims == std::vector<int>{1, 0});
      CHECK(c.component.dim() == 0);
    }
  }

  SymplecticSpace sp2 = standard_symplectic_space(2, 2);
  auto F4 = make_fq_field(2, 2);
  int seen_violation = 0;
  for (const FqSubspace& U : enumerate_isotropic(sp2, F4, 2, kBudget)) {
    if (in_S(sp2, U)) {
      StratumChain c = stratum_of(sp2, U);
      CHECK(c.i <= 2);
      CHECK(static_cast<int>(c.dims.size()) == c.i + 1);
      for (int j = 0; j <= c.i; ++j) CHECK(c.dims[static_cast<std::size_t>(j)] == 2 - j);
      CHECK(is_rational(c.component));
      CHECK(is_isotropic(sp2, c.component));
      CHECK(component_of(sp2, U) == c.component);
      CHECK(frobenius(c.component) == c.component);
    } else {
      // outside S the first drop is at least two
      CHECK_THROWS_WITH_AS(stratum_of(sp2, U), "intersection chain drops by more than one",
                           Error);
      ++seen_violation;
    }
  }
  CHECK(seen_violation > 0);
}

TEST_CASE("growth chains and duality with the intersection chain") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 2}}) {
    SymplecticSpace sp = standard_symplectic_space(p, 2);
    auto F = make_fq_field(p, k);
    for (const FqSubspace& U : all_points(sp, F)) {
      StratumChain c = stratum_of(sp, U);
      TChain t = t_chain(sp, U);
      CHECK(t.d == c.i);
      CHECK(t.d == 2 - c.component.dim());
      CHECK(static_cast<int>(t.dims.size()) == t.d + 1);
      for (int j = 0; j <= t.d; ++j) CHECK(t.dims[static_cast<std::size_t>(j)] == 2 + j);
      CHECK(t.stable == perp(sp, c.component));
      CHECK(frobenius(t.stable) == t.stable);
      CHECK(t.stable.contains(U));
    }
  }
}

TEST_CASE("point censuses") {
  SUBCASE("m = 1 is a projective line") {
    SymplecticSpace sp = standard_symplectic_space(3, 1);
    StratumReport r1 = count_points(sp, make_fq_field(3, 1), kBudget);
    CHECK(r1.total == 4);
    CHECK(r1.counts == std::vector<std::uint64_t>{4, 0});
    REQUIRE(r1.components.size() == 2);
    CHECK(r1.components[0].size() == 4);
    for (const auto& c : r1.components[0]) CHECK(c.count == 1);
    REQUIRE(r1.components[1].size() == 1);
    CHECK(r1.components[1][0].w.dim() == 0);
    CHECK(r1.components[1][0].count == 0);

    StratumReport r2 = count_points(sp, make_fq_field(3, 2), kBudget);
    CHECK(r2.total == 10);
    CHECK(r2.counts == std::vector<std::uint64_t>{4, 6});
    CHECK(r2.components[1][0].count == 6);

    SymplecticSpace spb = standard_symplectic_space(2, 1);
    StratumReport r3 = count_points(spb, make_fq_field(2, 3), kBudget);
    CHECK(r3.total == 9);
    CHECK(r3.counts == std::vector<std::uint64_t>{3, 6});
  }
  SUBCASE("over the prime field every point is rational") {
    for (std::uint64_t p : {2ull, 3ull}) {
      SymplecticSpace sp = standard_symplectic_space(p, 2);
      StratumReport r = count_points(sp, make_fq_field(p, 1), kBudget);
      std::uint64_t lag = (p + 1) * (p * p + 1);
      CHECK(r.total == lag);
      CHECK(r.counts == std::vector<std::uint64_t>{lag, 0, 0});
      CHECK(r.components[0].size() == lag);
      for (const auto& c : r.components[0]) CHECK(c.count == 1);
    }
  }
  SUBCASE("quadratic extension censuses for m = 2") {
    for (std::uint64_t p : {2ull, 3ull}) {
      SymplecticSpace sp = standard_symplectic_space(p, 2);
      StratumReport r = count_points(sp, make_fq_field(p, 2), kBudget);
      std::uint64_t q = p * p;
      std::uint64_t rational_lagrangians = (p + 1) * (p * p + 1);
      std::uint64_t rational_lines = (p * p * p * p - 1) / (p - 1);
      std::uint64_t new_quotient_points = (q + 1) - (p + 1); // P^1(F_q) minus P^1(F_p)
      CHECK(r.counts[0] == rational_lagrangians);
      CHECK(r.counts[1] == rational_lines * new_quotient_points);
      // over a quadratic extension frobenius is an involution on points, so
      // U meet Phi(U) is automatically stable and the chain never reaches
      // depth two: the top stratum has no points here
      CHECK(r.counts[2] == 0);
      CHECK(r.total == r.counts[0] + r.counts[1]);
      // stratum-1 points distribute evenly over the line components
      CHECK(r.components[1].size() == rational_lines);
      for (const auto& c : r.components[1]) CHECK(c.count == new_quotient_points);
      // the top component is the single zero subspace
      REQUIRE(r.components[2].size() == 1);
      CHECK(r.components[2][0].count == r.counts[2]);
      // strata partition: component sums reproduce the stratum counts
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        std::uint64_t sum = 0;
        for (const auto& c : r.components[i]) sum += c.count;
        CHECK(sum == r.counts[i]);
      }
    }
  }
  SUBCASE("every component of every nonzero stratum is hit for small censuses") {
    for (int k : {2, 3}) {
      SymplecticSpace sp = standard_symplectic_space(2, 2);
      StratumReport r = count_points(sp, make_fq_field(2, k), kBudget);
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        if (r.counts[i] == 0) continue;
        for (const auto& c : r.components[i]) CHECK(c.count > 0);
      }
      if (k == 3) {
        // depth two would force v, Phi(v), Phi^2(v) to be pairwise orthogonal
        // when the inverse of frobenius is its square, and a three-dimensional
        // isotropic subspace cannot fit in a four-dimensional symplectic space
        CHECK(r.counts == std::vector<std::uint64_t>{15, 90, 0});
      }
    }
  }
  SUBCASE("all strata appear over the quartic extension") {
    SymplecticSpace sp = standard_symplectic_space(3, 2);
    StratumReport r = count_points(sp, make_fq_field(3, 4), kBudget);
    CHECK(r.counts.size() == 3);
    CHECK(r.counts[0] > 0);
    CHECK(r.counts[1] > 0);
    CHECK(r.counts[2] > 0);
    CHECK(r.total == r.counts[0] + r.counts[1] + r.counts[2]);
    CHECK(r.counts[0] == 40); // the rational points
  }
}

TEST_CASE("closures") {
  SymplecticSpace sp = standard_symplectic_space(2, 2);
  auto F4 = make_fq_field(2, 2);
  auto F2 = make_fq_field(2, 1);
  auto S = all_points(sp, F4);

  SUBCASE("the zero subspace closes up the whole variety") {
    auto full = closure_points(sp, zero_subspace(F2, 4), F4, kBudget);
    CHECK(full.size() == S.size());
    CHECK(std::equal(full.begin(), full.end(), S.begin()));
  }
  SUBCASE("a rational lagrangian closes up only itself") {
    auto lags = enumerate_isotropic(sp, F2, 2, kBudget);
    for (const FqSubspace& W : lags) {
      auto pts = closure_points(sp, W, F4, kBudget);
      REQUIRE(pts.size() == 1);
      CHECK(pts[0] == FqSubspace(F4, 4, W.rows()));
    }
  }
  SUBCASE("closure of a line matches the quotient curve") {
    auto lines = enumerate_isotropic(sp, F2, 1, kBudget);
    for (const FqSubspace& W : lines) {
      auto pts = closure_points(sp, W, F4, kBudget);
      CHECK(pts.size() == 5); // the projective line over F_4
      // the quotient map is a stratum-preserving bijection onto the m = 1
      // variety of W-perp over W
      SymplecticQuotient quo = quotient_space(sp, W);
      CHECK(quo.space().m() == 1);
      std::set<FqSubspace> images;
      for (const FqSubspace& U : pts) {
        FqSubspace img = quo.project(U);
        CHECK(in_S(quo.space(), img));
        CHECK(stratum_of(quo.space(), img).i == stratum_of(sp, U).i);
        images.insert(img);
      }
      CHECK(images.size() == pts.size());
      CHECK(images.size() == all_points(quo.space(), F4).size());
    }
  }
  SUBCASE("validation") {
    FqSubspace bad(F4, 4, {{1, 2, 0, 0}});
    CHECK_THROWS_AS(closure_points(sp, bad, F4, kBudget), Error);
    FqSubspace notiso(F2, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(closure_points(sp, notiso, F4, kBudget), Error);
  }
}

TEST_CASE("minimal vertex lattices of points") {
  FieldParams fp(3, 12);
  SpacePtr hs = standard_space(fp, 2, SpaceVariant::split_even);
  HermitianLattice L2 = standard_vertex_lattice(hs, 2);
  InducedSymplectic q = induced_symplectic_space(L2);
  std::vector<std::vector<std::uint16_t>> g(2, std::vector<std::uint16_t>(2, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g[i][j] = static_cast<std::uint16_t>(q.gram()[i][j]);
  SymplecticSpace isp(3, 1, g);

  auto type0 = sub_vertex_lattices(L2);
  std::set<std::vector<std::uint64_t>> special;
  for (const auto& [M, t] : type0)
    if (t == 0) special.insert(M.canonical_key());

  auto F9 = make_fq_field(3, 2);
  int rational_count = 0, top_count = 0;
  for (const FqSubspace& U : enumerate_isotropic(isp, F9, 1, kBudget)) {
    HermitianLattice min = minimal_vertex_of_point(L2, U);
    TChain t = t_chain(isp, U);
    CHECK(vertex_type(min) == 2 * t.d);
    CHECK(lattice_contains(L2, min));
    if (is_rational(U)) {
      ++rational_count;
      CHECK(vertex_type(min) == 0);
      CHECK(special.count(min.canonical_key()) == 1);
    } else {
      ++top_count;
      CHECK(min == L2);
    }
  }
  CHECK(rational_count == 4);
  CHECK(top_count == 6);

  // a non-vertex lattice is rejected before any quotient is formed
  CHECK_THROWS_AS(minimal_vertex_of_point(L2.scaled_by_pi(-1), zero_subspace(F9, 2)), Error);
}

TEST_CASE("flag side of the resolution") {
  SUBCASE("for m = 1 the flags are the points") {
    SymplecticSpace sp = standard_symplectic_space(3, 1);
    auto F9 = make_fq_field(3, 2);
    auto flags = xbar_flags(sp, F9, kBudget);
    auto lines = enumerate_isotropic(sp, F9, 1, kBudget);
    REQUIRE(flags.size() == lines.size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
      CHECK(flags[i].members().size() == 1);
      CHECK(resolution_endpoint(flags[i]) == lines[i]);
    }
  }
  SUBCASE("the endpoint map is onto S and injective over the top stratum") {
    SymplecticSpace sp = standard_symplectic_space(2, 2);
    auto F16 = make_fq_field(2, 4);
    auto flags = xbar_flags(sp, F16, kBudget);
    std::set<FqSubspace> endpoints;
    for (const IsotropicFlag& f : flags) {
      CHECK(f.members().size() == 2);
      CHECK(f.members()[1].contains(f.members()[0]));
      FqSubspace end = resolution_endpoint(f);
      CHECK(in_S(sp, end));
      endpoints.insert(end);
    }
    auto S = all_points(sp, F16);
    CHECK(endpoints.size() == S.size());
    for (const FqSubspace& U : S) CHECK(endpoints.count(U) == 1);

    // strict flags: the inner member is exactly F_2 meet its translate and
    // itself moves; these biject with the top stratum
    std::set<FqSubspace> strict_endpoints;
    std::size_t strict = 0;
    for (const IsotropicFlag& f : flags) {
      const FqSubspace& F1 = f.members()[0];
      const FqSubspace& F2s = f.members()[1];
      if (subspace_intersection(F2s, frobenius(F2s)) != F1) continue;
      if (subspace_intersection(F1, frobenius(F1)).dim() != 0) continue;
      ++strict;
      strict_endpoints.insert(resolution_endpoint(f));
      CHECK(stratum_of(sp, resolution_endpoint(f)).i == 2);
    }
    StratumReport r = count_points(sp, F16, kBudget);
    CHECK(r.counts[2] > 0); // the bijection below is not vacuous
    CHECK(strict == r.counts[2]);
    CHECK(strict_endpoints.size() == strict);
  }
  SUBCASE("flag validation") {
    SymplecticSpace sp = standard_symplectic_space(2, 2);
    auto F2 = make_fq_field(2, 1);
    FqSubspace l1(F2, 4, {{1, 0, 0, 0}});
    FqSubspace l2(F2, 4, {{0, 1, 0, 0}});
    FqSubspace lag(F2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK_NOTHROW(IsotropicFlag(sp, {l1, lag}));
    CHECK_NOTHROW(IsotropicFlag(sp, {l2, lag}));
    CHECK_THROWS_AS(IsotropicFlag(sp, {l1}), Error);
    CHECK_THROWS_AS(IsotropicFlag(sp, {lag, lag}), Error);
    FqSubspace other(F2, 4, {{0, 0, 1, 0}});
    CHECK_THROWS_AS(IsotropicFlag(sp, {other, lag}), Error);
    FqSubspace notiso(F2, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(IsotropicFlag(sp, {l1, notiso}), Error);
  }
}
