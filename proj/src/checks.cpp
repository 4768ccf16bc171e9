#include "checks.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "dl.hpp"
#include "vertex_complex.hpp"
#include "weyl.hpp"

namespace ramlat {

namespace {

constexpr std::uint64_t kCheckBudget = 50'000'000;

void req(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

std::string tag(std::uint64_t p, int a, int b) {
  return " at p=" + std::to_string(p) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// ---- 1: standard-form classification ---------------------------------------

void check_classification() {
  for (std::uint64_t p : {3ull, 5ull}) {
    FieldParams fp(p, 12);
    for (int n : {2, 4}) {
      SpaceClass split = classify_space(*standard_space(fp, n, SpaceVariant::split_even));
      req(split.split, "split standard form not classified as split" + tag(p, n, 0));
      SpaceClass non = classify_space(*standard_space(fp, n, SpaceVariant::non_split_even));
      req(!non.split, "non-split standard form classified as split" + tag(p, n, 0));
    }
  }
}

// ---- 2: maximal type by closure of super-lattice enumeration ---------------

void check_max_type() {
  FieldParams fp(3, 12);
  struct Row {
    int n;
    SpaceVariant variant;
    int expected;
  };
  for (const Row& row : {Row{2, SpaceVariant::split_even, 2},
                         Row{2, SpaceVariant::non_split_even, 0},
                         Row{4, SpaceVariant::split_even, 4},
                         Row{4, SpaceVariant::non_split_even, 2},
                         Row{3, SpaceVariant::odd_dim, 2}}) {
    SpacePtr space = standard_space(fp, row.n, row.variant);
    HermitianLattice L0 = standard_vertex_lattice(space, 0);
    std::set<std::vector<std::uint64_t>> seen{L0.canonical_key()};
    std::vector<HermitianLattice> work{L0};
    int max_seen = 0;
    while (!work.empty()) {
      HermitianLattice L = work.back();
      work.pop_back();
      for (const TypedLattice& s : super_vertex_lattices(L)) {
        req(vertex_type(s.lattice) == s.type, "super-lattice type tag mismatch");
        req(s.type % 2 == 0,
            "vertex predicate accepted an odd type " + std::to_string(s.type));
        if (seen.insert(s.lattice.canonical_key()).second) {
          max_seen = std::max(max_seen, s.type);
          work.push_back(s.lattice);
        }
      }
    }
    req(max_seen == row.expected, "closure reached maximal type " + std::to_string(max_seen) +
                                      " instead of " + std::to_string(row.expected) + " for n=" +
                                      std::to_string(row.n));
    req(max_seen == max_vertex_type(*space),
        "closure disagrees with the classified maximal type for n=" + std::to_string(row.n));
  }
}

// ---- 3: incidence counts between types 0 and 2 -----------------------------

void check_incidence() {
  FieldParams fp(3, 12);
  struct Conf {
    int n;
    SpaceVariant variant;
    std::size_t subs0_per_2;
    std::size_t supers2_per_0;
  };
  for (const Conf& c : {Conf{2, SpaceVariant::split_even, 4, 2},
                        Conf{3, SpaceVariant::odd_dim, 4, 4}}) {
    SpacePtr space = standard_space(fp, c.n, c.variant);
    HermitianLattice L2 = standard_vertex_lattice(space, 2);

    std::set<HermitianLattice> type2{L2}, type0;
    for (const TypedLattice& s : sub_vertex_lattices(L2))
      if (s.type == 0) type0.insert(s.lattice);
    // widen the sample: every type-2 lattice over each of those type-0s
    for (const HermitianLattice& Z : type0)
      for (const TypedLattice& s : super_vertex_lattices(Z))
        if (s.type == 2) type2.insert(s.lattice);

    for (const HermitianLattice& T : type2) {
      std::size_t zeros = 0;
      for (const TypedLattice& s : sub_vertex_lattices(T))
        if (s.type == 0) ++zeros;
      req(zeros == c.subs0_per_2, "a type-2 lattice has " + std::to_string(zeros) +
                                      " type-0 sublattices, wanted " +
                                      std::to_string(c.subs0_per_2) + " for n=" +
                                      std::to_string(c.n));
    }
    for (const HermitianLattice& Z : type0) {
      std::size_t twos = 0;
      for (const TypedLattice& s : super_vertex_lattices(Z))
        if (s.type == 2) ++twos;
      req(twos == c.supers2_per_0, "a type-0 lattice has " + std::to_string(twos) +
                                       " type-2 superlattices, wanted " +
                                       std::to_string(c.supers2_per_0) + " for n=" +
                                       std::to_string(c.n));
    }
  }
}

// ---- 4: the radius-2 ball of the top-type adjacency graph is a tree --------

void check_tree() {
  FieldParams fp(3, 12);
  SpacePtr space = standard_space(fp, 2, SpaceVariant::split_even);
  HermitianLattice L2 = standard_vertex_lattice(space, 2);
  VertexComplexGraph g = build_ball(L2, 2, ComplexKind::L);
  req(g.nodes.size() == 17, "ball has " + std::to_string(g.nodes.size()) + " nodes, wanted 17");
  req(g.edges.size() == 16, "ball has " + std::to_string(g.edges.size()) + " edges, wanted 16");

  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (const auto& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  // connected with nodes-1 edges == tree (so: no cycles)
  std::vector<char> vis(g.nodes.size(), 0);
  std::vector<std::size_t> stack{g.center};
  vis[g.center] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  req(reached == g.nodes.size(), "ball is not connected");
  std::map<std::size_t, int> degree_census;
  for (const auto& a : adj) degree_census[a.size()]++;
  req(degree_census == std::map<std::size_t, int>{{1, 12}, {4, 5}},
      "ball is not a 4-regular tree fragment (degree census off)");
}

// ---- 5: the m = 1 point count is a projective line -------------------------

void check_projective_line() {
  for (std::uint64_t p : {3ull, 5ull}) {
    SymplecticSpace sp = standard_symplectic_space(p, 1);
    std::uint64_t q = 1;
    for (int k = 1; k <= 3; ++k) {
      q *= p;
      StratumReport r = count_points(sp, make_fq_field(p, k), kCheckBudget);
      req(r.total == q + 1, "m=1 census over k=" + std::to_string(k) + " gave " +
                                std::to_string(r.total) + ", wanted " + std::to_string(q + 1) +
                                tag(p, 1, k));
    }
  }
}

// ---- 6: stratification censuses partition S and close up correctly ---------

struct CensusParams {
  int m;
  std::uint64_t p;
  int k;
};

const std::vector<CensusParams> kCensusList = {
    {2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 3, 1}, {2, 3, 2}};

void check_census() {
  for (const CensusParams& cp : kCensusList) {
    SymplecticSpace sp = standard_symplectic_space(cp.p, cp.m);
    FqFieldPtr field = make_fq_field(cp.p, cp.k);
    FqFieldPtr prime = make_fq_field(cp.p, 1);
    StratumReport r = count_points(sp, field, kCheckBudget);

    // the strata partition S: every point lands in exactly one stratum count
    std::uint64_t recount = 0;
    for (const FqSubspace& U : enumerate_isotropic(sp, field, cp.m, kCheckBudget))
      if (in_S(sp, U)) ++recount;
    std::uint64_t across = 0;
    for (std::uint64_t c : r.counts) across += c;
    req(recount == r.total && across == r.total,
        "strata do not partition the point set" + tag(cp.p, cp.m, cp.k));

    // one component per rational isotropic subspace of the right dimension
    for (int i = 0; i <= cp.m; ++i) {
      std::size_t expected =
          enumerate_isotropic(sp, prime, cp.m - i, kCheckBudget).size();
      req(r.components[static_cast<std::size_t>(i)].size() == expected,
          "stratum " + std::to_string(i) + " has the wrong component census" +
              tag(cp.p, cp.m, cp.k));
      std::uint64_t sum = 0;
      for (const StratumComponent& c : r.components[static_cast<std::size_t>(i)])
        sum += c.count;
      req(sum == r.counts[static_cast<std::size_t>(i)],
          "component counts do not add up in stratum " + std::to_string(i) +
              tag(cp.p, cp.m, cp.k));
    }

    // closures restrict to the quotient point set, stratum by stratum
    for (int j = 0; j <= cp.m; ++j) {
      for (const FqSubspace& W : enumerate_isotropic(sp, prime, j, kCheckBudget)) {
        std::vector<FqSubspace> pts = closure_points(sp, W, field, kCheckBudget);
        SymplecticQuotient quo = quotient_space(sp, W);
        std::set<FqSubspace> qpoints;
        for (const FqSubspace& V :
             enumerate_isotropic(quo.space(), field, quo.space().m(), kCheckBudget))
          if (in_S(quo.space(), V)) qpoints.insert(V);
        req(pts.size() == qpoints.size(),
            "closure size disagrees with the quotient point count" + tag(cp.p, cp.m, cp.k));
        std::set<FqSubspace> images;
        for (const FqSubspace& U : pts) {
          FqSubspace img = quo.project(U);
          req(qpoints.count(img) == 1, "closure point projects outside the quotient set");
          req(stratum_of(quo.space(), img).i == stratum_of(sp, U).i,
              "closure projection does not preserve the stratum" + tag(cp.p, cp.m, cp.k));
          images.insert(img);
        }
        req(images.size() == pts.size(), "closure projection is not injective");
      }
    }
  }
}

// ---- 7: the growth chain, its duality, and the minimal vertex lattice ------

void symplectic_chain_legs(const SymplecticSpace& sp, FqFieldPtr field,
                           const std::string& where, std::vector<FqSubspace>* store) {
  int m = sp.m();
  for (const FqSubspace& U : enumerate_isotropic(sp, field, m, kCheckBudget)) {
    if (!in_S(sp, U)) continue;
    StratumChain c = stratum_of(sp, U);
    TChain t = t_chain(sp, U);
    req(t.d == c.i, "growth and intersection chains stabilize at different depths" + where);
    req(t.d <= m, "growth chain exceeded the isotropic bound" + where);
    for (std::size_t j = 0; j < t.dims.size(); ++j)
      req(t.dims[j] == m + static_cast<int>(j),
          "growth chain does not grow by exactly one" + where);
    req(t.stable == perp(sp, c.component),
        "stable subspace is not the perp of the component" + where);
    req(t.stable.contains(U), "stable subspace does not contain the point" + where);
    if (store) store->push_back(U);
  }
}

void check_chains() {
  // symplectic legs on every census parameter set
  for (const CensusParams& cp : kCensusList) {
    SymplecticSpace sp = standard_symplectic_space(cp.p, cp.m);
    symplectic_chain_legs(sp, make_fq_field(cp.p, cp.k), tag(cp.p, cp.m, cp.k), nullptr);
  }
  // lattice leg through the induced quotient, odd residue characteristic
  struct LatticeLeg {
    std::uint64_t p;
    int n; // 2m
            // k runs over 1..2
  };
  for (const LatticeLeg& leg : {LatticeLeg{3, 4}, LatticeLeg{5, 2}}) {
    FieldParams fp(leg.p, 12);
    SpacePtr space = standard_space(fp, leg.n, SpaceVariant::split_even);
    HermitianLattice L = standard_vertex_lattice(space, leg.n);
    InducedSymplectic q = induced_symplectic_space(L);
    std::vector<std::vector<std::uint16_t>> gram;
    for (const auto& row : q.gram()) {
      std::vector<std::uint16_t> r16;
      for (std::uint64_t x : row) r16.push_back(static_cast<std::uint16_t>(x));
      gram.push_back(std::move(r16));
    }
    SymplecticSpace sp(leg.p, leg.n / 2, gram);
    for (int k = 1; k <= 2; ++k) {
      FqFieldPtr field = make_fq_field(leg.p, k);
      std::vector<FqSubspace> points;
      symplectic_chain_legs(sp, field, tag(leg.p, leg.n / 2, k), &points);
      for (const FqSubspace& U : points) {
        TChain t = t_chain(sp, U);
        HermitianLattice mini = minimal_vertex_of_point(L, U);
        req(vertex_type(mini) == 2 * t.d,
            "minimal vertex lattice has the wrong type" + tag(leg.p, leg.n / 2, k));
        req(lattice_contains(L, mini) && lattice_contains(mini, dual_lattice(L)),
            "minimal vertex lattice is not between the lattice and its dual" +
                tag(leg.p, leg.n / 2, k));
        // it is exactly the preimage of the stable subspace
        std::vector<std::vector<std::uint64_t>> rows;
        for (const FqVector& row : t.stable.rows()) {
          std::vector<std::uint64_t> wide;
          for (FqElem x : row) wide.push_back(x);
          rows.push_back(std::move(wide));
        }
        req(mini == q.preimage(rows),
            "minimal vertex lattice is not the preimage of the stable subspace" +
                tag(leg.p, leg.n / 2, k));
      }
    }
  }
}

// ---- 8: the dimension attached to the stratum words ------------------------

void check_dimension_formula() {
  for (int m = 1; m <= 4; ++m) {
    for (int i = 0; i <= m; ++i) {
      int d = dim_DL(stratum_parabolic(m, i), stratum_word(m, i));
      req(d == i, "dimension of stratum word " + std::to_string(i) + " in rank " +
                      std::to_string(m) + " came out " + std::to_string(d));
    }
    req(coxeter_element(m).length() == m, "coxeter element of rank " + std::to_string(m) +
                                              " does not have length " + std::to_string(m));
  }
}

// ---- 9: the flag resolution hits every point, bijectively on top -----------

void check_resolution() {
  SymplecticSpace sp = standard_symplectic_space(2, 2);
  FqFieldPtr field = make_fq_field(2, 2);
  std::vector<IsotropicFlag> flags = xbar_flags(sp, field, kCheckBudget);

  std::set<FqSubspace> points;
  for (const FqSubspace& U : enumerate_isotropic(sp, field, 2, kCheckBudget))
    if (in_S(sp, U)) points.insert(U);

  std::set<FqSubspace> endpoints;
  std::set<FqSubspace> strict_endpoints;
  std::size_t strict = 0;
  for (const IsotropicFlag& f : flags) {
    FqSubspace end = resolution_endpoint(f);
    req(points.count(end) == 1, "flag endpoint is not a point of S");
    endpoints.insert(end);
    bool is_strict = subspace_intersection(end, frobenius(end)) == f.members()[0] &&
                     subspace_intersection(f.members()[0], frobenius(f.members()[0])).dim() == 0;
    if (is_strict) {
      ++strict;
      strict_endpoints.insert(end);
    }
  }
  req(endpoints.size() == points.size(), "flag endpoints miss " +
                                             std::to_string(points.size() - endpoints.size()) +
                                             " points of S");
  StratumReport r = count_points(sp, field, kCheckBudget);
  req(strict_endpoints.size() == strict, "strict flags collide over the top stratum");
  req(strict == r.counts[2], "strict flags do not match the top stratum count");
}

// ---- 10: randomized law suites ----------------------------------------------

OEMatrix random_matrix(std::mt19937_64& rng, const FieldParams& fp, int n) {
  std::uniform_int_distribution<std::uint64_t> digits(0, fp.pow_p(3) - 1);
  OEMatrix M(fp, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = OEElement(fp, digits(rng), digits(rng));
  return M;
}

HermitianLattice random_lattice(std::mt19937_64& rng, const SpacePtr& space) {
  std::uniform_int_distribution<int> scales(-2, 2);
  for (;;) {
    OEMatrix M = random_matrix(rng, space->params(), space->dim());
    OEElement det = determinant(M);
    if (det.residue_zero() || det.valuation() > 6) continue;
    return HermitianLattice(space, M, scales(rng));
  }
}

FqSubspace random_subspace(std::mt19937_64& rng, const FqFieldPtr& field, int ambient) {
  std::uniform_int_distribution<int> dims(0, ambient);
  std::uniform_int_distribution<std::uint32_t> codes(0, field->q() - 1);
  int d = dims(rng);
  FqRows rows;
  for (int i = 0; i < d; ++i) {
    FqVector row;
    for (int j = 0; j < ambient; ++j) row.push_back(static_cast<FqElem>(codes(rng)));
    rows.push_back(std::move(row));
  }
  return FqSubspace(field, ambient, rows);
}

void check_random_laws(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FieldParams fp(3, 12);

  // double duality of lattices
  for (const auto& [n, variant] :
       std::vector<std::pair<int, SpaceVariant>>{{2, SpaceVariant::split_even},
                                                 {3, SpaceVariant::odd_dim}}) {
    SpacePtr space = standard_space(fp, n, variant);
    for (int trial = 0; trial < 250; ++trial) {
      HermitianLattice L = random_lattice(rng, space);
      req(dual_lattice(dual_lattice(L)) == L, "double dual differs from the lattice");
    }
  }

  // index additivity, antisymmetry, and the scaling anchor
  {
    SpacePtr space = standard_space(fp, 2, SpaceVariant::split_even);
    for (int trial = 0; trial < 500; ++trial) {
      HermitianLattice A = random_lattice(rng, space);
      HermitianLattice B = random_lattice(rng, space);
      HermitianLattice C = random_lattice(rng, space);
      req(lattice_index(A, C) == lattice_index(A, B) + lattice_index(B, C),
          "lattice index is not additive");
      req(lattice_index(A, B) == -lattice_index(B, A), "lattice index is not antisymmetric");
      req(lattice_index(A, A.scaled_by_pi(1)) == space->dim(),
          "scaling by the uniformizer has the wrong index");
    }
  }

  // echelon canonicality under random row operations
  for (const auto& [p, k, ambient] :
       std::vector<std::tuple<std::uint64_t, int, int>>{{3, 2, 4}, {2, 3, 5}}) {
    FqFieldPtr field = make_fq_field(p, k);
    std::uniform_int_distribution<std::uint32_t> codes(0, field->q() - 1);
    for (int trial = 0; trial < 250; ++trial) {
      FqSubspace U = random_subspace(rng, field, ambient);
      FqRows rows = U.rows();
      if (!rows.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
        for (int op = 0; op < 10; ++op) {
          std::size_t i = pick(rng), j = pick(rng);
          FqElem c = static_cast<FqElem>(codes(rng));
          if (i == j) {
            if (c != 0)
              for (int col = 0; col < ambient; ++col)
                rows[i][static_cast<std::size_t>(col)] =
                    field->mul(rows[i][static_cast<std::size_t>(col)], c);
          } else {
            for (int col = 0; col < ambient; ++col)
              rows[i][static_cast<std::size_t>(col)] =
                  field->add(rows[i][static_cast<std::size_t>(col)],
                             field->mul(c, rows[j][static_cast<std::size_t>(col)]));
          }
        }
      }
      req(FqSubspace(field, ambient, rows) == U,
          "row operations changed the canonical representative");
    }
  }

  // frobenius has order dividing k on subspaces, exactly k on the field
  for (const auto& [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 3}}) {
    FqFieldPtr field = make_fq_field(p, k);
    for (int trial = 0; trial < 250; ++trial) {
      FqSubspace U = random_subspace(rng, field, 4);
      FqSubspace V = U;
      for (int step = 0; step < k; ++step) V = frobenius(V);
      req(V == U, "k-fold frobenius is not the identity on subspaces");
    }
  }

  // perp biduality in symplectic spaces
  for (const auto& [p, k, m] :
       std::vector<std::tuple<std::uint64_t, int, int>>{{3, 2, 2}, {2, 2, 2}}) {
    SymplecticSpace sp = standard_symplectic_space(p, m);
    FqFieldPtr field = make_fq_field(p, k);
    for (int trial = 0; trial < 250; ++trial) {
      FqSubspace U = random_subspace(rng, field, 2 * m);
      FqSubspace pp = perp(sp, perp(sp, U));
      req(pp == U, "perp biduality fails");
      req(perp(sp, U).dim() == 2 * m - U.dim(), "perp has the wrong dimension");
    }
  }
}

struct CheckSpec {
  int id;
  const char* name;
  void (*fn)(std::uint64_t seed);
};

void run1(std::uint64_t) { check_classification(); }
void run2(std::uint64_t) { check_max_type(); }
void run3(std::uint64_t) { check_incidence(); }
void run4(std::uint64_t) { check_tree(); }
void run5(std::uint64_t) { check_projective_line(); }
void run6(std::uint64_t) { check_census(); }
void run7(std::uint64_t) { check_chains(); }
void run8(std::uint64_t) { check_dimension_formula(); }
void run9(std::uint64_t) { check_resolution(); }
void run10(std::uint64_t seed) { check_random_laws(seed); }

const CheckSpec kChecks[] = {
    {1, "standard-form classification", run1},
    {2, "maximal vertex type by closure", run2},
    {3, "incidence counts between types 0 and 2", run3},
    {4, "radius-2 tree ball", run4},
    {5, "projective-line census at m=1", run5},
    {6, "stratification censuses and closures", run6},
    {7, "growth chains and minimal vertex lattices", run7},
    {8, "dimension formula for stratum words", run8},
    {9, "flag resolution onto the point set", run9},
    {10, "randomized law suites", run10},
};

const CheckSpec& find_check(int id) {
  for (const CheckSpec& c : kChecks)
    if (c.id == id) return c;
  fail(ErrorKind::InvalidArgument, "unknown check id " + std::to_string(id));
}

} // namespace

std::vector<int> check_ids() {
  std::vector<int> out;
  for (const CheckSpec& c : kChecks) out.push_back(c.id);
  return out;
}

std::string check_name(int id) { return find_check(id).name; }

CheckResult run_check(int id, std::uint64_t seed) {
  const CheckSpec& spec = find_check(id);
  CheckResult result;
  result.id = spec.id;
  result.name = spec.name;
  auto start = std::chrono::steady_clock::now();
  try {
    spec.fn(seed);
    result.pass = true;
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const CheckSpec& c : kChecks) out.push_back(run_check(c.id, seed));
  return out;
}

} // namespace ramlat
