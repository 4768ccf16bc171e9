#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../src/json_io.hpp"

using namespace ramlat;

namespace {

std::string golden_path(const std::string& name) {
  return std::string(RAMLAT_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> keys_of(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

} // namespace

TEST_CASE("element strings") {
  FieldParams fp(3, 12);
  SUBCASE("pinned forms") {
    CHECK(oe_to_string(OEElement::from_int(fp, 5, 2)) == "5+2*pi mod 3^12");
    CHECK(oe_to_string(OEElement::zero(fp)) == "0+0*pi mod 3^12");
    CHECK(oe_to_string(OEElement::from_int(fp, -1)) == "531440+0*pi mod 3^12");
  }
  SUBCASE("round trip") {
    for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {0, 0}, {1, 0}, {0, 1}, {5, 2}, {-1, -1}, {531440, 7}}) {
      OEElement x = OEElement::from_int(fp, a, b);
      CHECK(oe_from_string(fp, oe_to_string(x)) == x);
    }
  }
  SUBCASE("inexact elements are not serializable") {
    OEElement eroded = OEElement::pi(fp).shift_pi(-1);
    CHECK(!eroded.exact());
    CHECK_THROWS_WITH_AS(oe_to_string(eroded),
                         "cannot serialize an element with eroded precision", Error);
  }
  SUBCASE("parse failures") {
    CHECK_THROWS_WITH_AS(oe_from_string(fp, "pi"), "malformed element string", Error);
    CHECK_THROWS_WITH_AS(oe_from_string(fp, "5+2*pi mod 3^12 "), "malformed element string",
                         Error);
    CHECK_THROWS_WITH_AS(oe_from_string(fp, "5+2*pi mod 3^11"),
                         "element string disagrees with the field parameters", Error);
    CHECK_THROWS_WITH_AS(oe_from_string(fp, "5+2*pi mod 5^12"),
                         "element string disagrees with the field parameters", Error);
    CHECK_THROWS_WITH_AS(oe_from_string(fp, "531441+0*pi mod 3^12"),
                         "element string has an unreduced component", Error);
  }
}

TEST_CASE("space and lattice round trips") {
  FieldParams fp(3, 12);
  for (auto [n, variant] : std::vector<std::pair<int, SpaceVariant>>{
           {2, SpaceVariant::split_even},
           {2, SpaceVariant::non_split_even},
           {4, SpaceVariant::split_even},
           {3, SpaceVariant::odd_dim}}) {
    SpacePtr space = standard_space(fp, n, variant);
    Json j = space_to_json(*space);
    CHECK(keys_of(j) == std::vector<std::string>{"p", "epsilon", "n", "gram"});
    SpacePtr back = space_from_json(j);
    CHECK(*back == *space);
    CHECK(json_text(space_to_json(*back)) == json_text(j));

    for (int t : {0, 2}) {
      if (t > max_vertex_type(*space)) continue;
      HermitianLattice L = standard_vertex_lattice(space, t);
      Json jl = lattice_to_json(L);
      CHECK(keys_of(jl) == std::vector<std::string>{"scale", "basis"});
      CHECK(lattice_from_json(space, jl) == L);
      HermitianLattice shifted = L.scaled_by_pi(-3);
      CHECK(lattice_from_json(space, lattice_to_json(shifted)) == shifted);
      CHECK(json_text(lattice_to_json(shifted)) ==
            json_text(lattice_to_json(lattice_from_json(space, lattice_to_json(shifted)))));
    }
  }
  SUBCASE("a reconstructed space still classifies") {
    SpacePtr space = standard_space(fp, 2, SpaceVariant::split_even);
    SpacePtr back = space_from_json(space_to_json(*space));
    CHECK(classify_space(*back).split);
    CHECK(!back->standard_variant().has_value()); // only the gram survives
  }
  SUBCASE("parse failures") {
    SpacePtr space = standard_space(fp, 2, SpaceVariant::split_even);
    Json j = space_to_json(*space);
    Json bad = j;
    bad["gram"] = Json::array();
    CHECK_THROWS_AS(space_from_json(bad), Error);
    bad = j;
    bad["p"] = 5;
    CHECK_THROWS_WITH_AS(space_from_json(bad), "gram entries disagree with the space prime",
                         Error);
    Json badl = lattice_to_json(standard_vertex_lattice(space, 0));
    badl["basis"].erase(0);
    CHECK_THROWS_WITH_AS(lattice_from_json(space, badl),
                         "basis has the wrong number of rows", Error);
  }
}

TEST_CASE("subspace round trips") {
  auto F9 = make_fq_field(3, 2);
  SUBCASE("pinned layout") {
    FqSubspace U(F9, 2, {{1, 3}}); // second entry is the generator x
    Json j = subspace_to_json(U);
    CHECK(keys_of(j) == std::vector<std::string>{"p", "k", "modulus", "ambient", "dim", "basis"});
    CHECK(j["p"] == 3);
    CHECK(j["k"] == 2);
    CHECK(j["modulus"] == Json::array({1, 0})); // x^2 + 1
    CHECK(j["ambient"] == 2);
    CHECK(j["dim"] == 1);
    CHECK(j["basis"] == Json::array({Json::array({Json::array({1, 0}), Json::array({0, 1})})}));
    CHECK(subspace_from_json(j) == U);
  }
  SUBCASE("zero and full subspaces keep their ambient") {
    for (const FqSubspace& U : {zero_subspace(F9, 4), full_subspace(F9, 3),
                                FqSubspace(make_fq_field(2, 3), 4, {{1, 2, 4, 7}, {0, 1, 3, 5}})}) {
      FqSubspace back = subspace_from_json(subspace_to_json(U));
      CHECK(back == U);
      CHECK(back.ambient() == U.ambient());
    }
  }
  SUBCASE("parse failures") {
    FqSubspace U(F9, 2, {{1, 3}});
    Json j = subspace_to_json(U);
    Json bad = j;
    bad["modulus"] = Json::array({2, 0});
    CHECK_THROWS_WITH_AS(subspace_from_json(bad), "modulus disagrees with the canonical field",
                         Error);
    bad = j;
    bad["basis"][0][1] = Json::array({0, 3});
    CHECK_THROWS_WITH_AS(subspace_from_json(bad), "field element coefficient is not reduced",
                         Error);
    bad = j;
    bad["basis"][0][1] = Json::array({0, 1, 0});
    CHECK_THROWS_WITH_AS(subspace_from_json(bad),
                         "field element has the wrong number of coefficients", Error);
    bad = j;
    bad["dim"] = 2;
    CHECK_THROWS_WITH_AS(subspace_from_json(bad), "subspace basis has the wrong number of rows",
                         Error);
    bad = j;
    bad["basis"] = Json::array({bad["basis"][0], bad["basis"][0]});
    bad["dim"] = 2;
    CHECK_THROWS_WITH_AS(subspace_from_json(bad), "subspace basis rows are not independent",
                         Error);
  }
}

TEST_CASE("graph export") {
  FieldParams fp(3, 12);
  SUBCASE("the tree ball") {
    SpacePtr space = standard_space(fp, 2, SpaceVariant::split_even);
    HermitianLattice L = standard_vertex_lattice(space, 2);
    VertexComplexGraph g = build_ball(L, 2, ComplexKind::L);
    Json j = graph_to_json(g);
    CHECK(keys_of(j) == std::vector<std::string>{"nodes", "edges", "center", "radius"});
    CHECK(j["nodes"].size() == 17);
    CHECK(j["edges"].size() == 16);
    CHECK(j["center"] == 0);
    CHECK(j["radius"] == 2);
    for (std::size_t i = 0; i < 17; ++i) {
      CHECK(j["nodes"][i]["id"] == i);
      CHECK(j["nodes"][i]["type"] == 2);
    }
    for (const Json& e : j["edges"]) CHECK(e["kind"] == "intersection");
    // nodes reconstruct to the graph's lattices
    for (std::size_t i = 0; i < 17; ++i)
      CHECK(lattice_from_json(space, j["nodes"][i]["lattice"]) == g.nodes[i].lattice);
    // byte determinism across a rebuild
    CHECK(json_text(graph_to_json(build_ball(L, 2, ComplexKind::L))) == json_text(j));
  }
  SUBCASE("inclusion edges") {
    SpacePtr space = standard_space(fp, 2, SpaceVariant::split_even);
    HermitianLattice L = standard_vertex_lattice(space, 2);
    Json j = graph_to_json(build_ball(L, 1, ComplexKind::T));
    CHECK(j["nodes"].size() == 5);
    for (const Json& e : j["edges"]) CHECK(e["kind"] == "inclusion");
  }
}

TEST_CASE("stratum report golden files") {
  struct Pin {
    int m;
    std::uint64_t p;
    int k;
    std::uint64_t total;
    std::vector<std::uint64_t> counts;
  };
  const std::vector<Pin> pins = {
      {1, 3, 1, 4, {4, 0}},
      {1, 3, 2, 10, {4, 6}},
      {2, 2, 1, 15, {15, 0, 0}},
      {2, 2, 2, 45, {15, 30, 0}},
      {2, 3, 1, 40, {40, 0, 0}},
  };
  const bool regen = std::getenv("RAMLAT_REGEN_GOLDEN") != nullptr;
  for (const Pin& pin : pins) {
    CAPTURE(pin.m);
    CAPTURE(pin.p);
    CAPTURE(pin.k);
    SymplecticSpace sp = standard_symplectic_space(pin.p, pin.m);
    StratumReport r = count_points(sp, make_fq_field(pin.p, pin.k));
    CHECK(r.total == pin.total);
    CHECK(r.counts == pin.counts);
    std::string text = json_text(stratum_report_to_json(r));
    std::string path = golden_path("report_m" + std::to_string(pin.m) + "_p" +
                                   std::to_string(pin.p) + "_k" + std::to_string(pin.k) +
                                   ".json");
    if (regen) {
      std::ofstream out(path, std::ios::binary);
      out << text;
    }
    CHECK(read_file(path) == text);

    // the golden file is itself structurally sound: totals agree and every
    // component subspace parses back to a rational isotropic subspace
    Json j = Json::parse(text);
    CHECK(j["total"] == pin.total);
    std::uint64_t across = 0;
    for (const Json& s : j["strata"]) {
      std::uint64_t stratum_sum = 0;
      for (const Json& c : s["components"]) {
        FqSubspace w = subspace_from_json(c["W"]);
        CHECK(is_rational(w));
        CHECK(is_isotropic(sp, w));
        CHECK(w.dim() == pin.m - s["i"].get<int>());
        stratum_sum += c["count"].get<std::uint64_t>();
      }
      CHECK(stratum_sum == s["count"].get<std::uint64_t>());
      across += stratum_sum;
    }
    CHECK(across == pin.total);
  }
}
