// Exercises the shared-library C interface end to end: handles, JSON output,
// status codes, and the guarantee that out-parameters stay untouched on failure.
// This binary links only the shared library, never the C++ core directly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>
#include <ramlat.h>

using Json = nlohmann::ordered_json;

namespace {

// Wraps a char* returned by the library so every test path frees it.
struct OwnedString {
  char* raw = nullptr;
  ~OwnedString() { ramlat_string_free(raw); }
  std::string str() const { return raw ? std::string(raw) : std::string(); }
  Json json() const { return Json::parse(str()); }
};

struct OwnedSpace {
  ramlat_space* raw = nullptr;
  ~OwnedSpace() { ramlat_space_free(raw); }
};

struct OwnedLattice {
  ramlat_lattice* raw = nullptr;
  ~OwnedLattice() { ramlat_lattice_free(raw); }
};

OwnedSpace make_space(const char* variant, int n, std::uint64_t p = 3) {
  OwnedSpace s;
  // Precision 12 leaves room for the erosion of repeated dualize/intersect steps.
  REQUIRE(ramlat_space_create(p, 12, 1, n, variant, &s.raw) == RAMLAT_OK);
  REQUIRE(s.raw != nullptr);
  return s;
}

std::map<int, int> type_census(const Json& list) {
  std::map<int, int> census;
  for (const Json& item : list) census[item.at("type").get<int>()] += 1;
  return census;
}

} // namespace

TEST_CASE("space lifecycle and classification") {
  OwnedSpace split = make_space("split-even", 2);

  OwnedString cls;
  REQUIRE(ramlat_space_classify(split.raw, &cls.raw) == RAMLAT_OK);
  Json j = cls.json();
  CHECK(j.at("label") == "Split");
  CHECK(j.at("n") == 2);
  CHECK(j.at("max_vertex_type") == 2);
  CHECK(j.contains("disc_unit"));

  OwnedString sj;
  REQUIRE(ramlat_space_to_json(split.raw, &sj.raw) == RAMLAT_OK);
  Json sjson = sj.json();
  CHECK(sjson.at("p") == 3);
  CHECK(sjson.at("n") == 2);
  CHECK(sjson.at("gram").size() == 2);

  OwnedSpace nonsplit = make_space("non-split-even", 2);
  OwnedString cls2;
  REQUIRE(ramlat_space_classify(nonsplit.raw, &cls2.raw) == RAMLAT_OK);
  Json j2 = cls2.json();
  CHECK(j2.at("label") == "NonSplit");
  CHECK(j2.at("max_vertex_type") == 0);

  OwnedSpace odd = make_space("odd", 3);
  OwnedString cls3;
  REQUIRE(ramlat_space_classify(odd.raw, &cls3.raw) == RAMLAT_OK);
  CHECK(cls3.json().at("max_vertex_type") == 2);

  SUBCASE("failure paths write nothing and set the error message") {
    ramlat_space* out = nullptr;
    CHECK(ramlat_space_create(3, 8, 1, 2, "weird", &out) == RAMLAT_INVALID_ARGUMENT);
    CHECK(out == nullptr);
    CHECK(std::string(ramlat_last_error()).find("unknown space variant") != std::string::npos);

    CHECK(ramlat_space_create(4, 8, 1, 2, "split-even", &out) == RAMLAT_INVALID_ARGUMENT);
    CHECK(out == nullptr);

    CHECK(ramlat_space_create(3, 8, 1, 2, nullptr, &out) == RAMLAT_INVALID_ARGUMENT);
    CHECK(std::string(ramlat_last_error()).find("null argument") != std::string::npos);
    CHECK(ramlat_space_create(3, 8, 1, 2, "split-even", nullptr) == RAMLAT_INVALID_ARGUMENT);

    char* json_out = nullptr;
    CHECK(ramlat_space_classify(nullptr, &json_out) == RAMLAT_INVALID_ARGUMENT);
    CHECK(json_out == nullptr);

    ramlat_space_free(nullptr); // must be a no-op
  }
}

TEST_CASE("lattices through the C interface") {
  OwnedSpace split = make_space("split-even", 2);

  OwnedLattice L2;
  REQUIRE(ramlat_lattice_standard(split.raw, 2, &L2.raw) == RAMLAT_OK);
  int type = -1;
  REQUIRE(ramlat_lattice_type(L2.raw, &type) == RAMLAT_OK);
  CHECK(type == 2);

  OwnedLattice L0;
  REQUIRE(ramlat_lattice_standard(split.raw, 0, &L0.raw) == RAMLAT_OK);
  REQUIRE(ramlat_lattice_type(L0.raw, &type) == RAMLAT_OK);
  CHECK(type == 0);

  SUBCASE("duals and indices") {
    OwnedLattice D2;
    REQUIRE(ramlat_lattice_dual(L2.raw, &D2.raw) == RAMLAT_OK);
    std::int64_t idx = 0;
    REQUIRE(ramlat_lattice_index(L2.raw, D2.raw, &idx) == RAMLAT_OK);
    CHECK(idx == 2);
    REQUIRE(ramlat_lattice_index(D2.raw, L2.raw, &idx) == RAMLAT_OK);
    CHECK(idx == -2);

    // A type-0 lattice is its own dual.
    OwnedLattice D0;
    REQUIRE(ramlat_lattice_dual(L0.raw, &D0.raw) == RAMLAT_OK);
    OwnedString a, b;
    REQUIRE(ramlat_lattice_to_json(L0.raw, &a.raw) == RAMLAT_OK);
    REQUIRE(ramlat_lattice_to_json(D0.raw, &b.raw) == RAMLAT_OK);
    CHECK(a.str() == b.str());
  }

  SUBCASE("JSON round trip is the identity on serialized form") {
    OwnedString first;
    REQUIRE(ramlat_lattice_to_json(L2.raw, &first.raw) == RAMLAT_OK);
    OwnedLattice back;
    REQUIRE(ramlat_lattice_from_json(split.raw, first.raw, &back.raw) == RAMLAT_OK);
    REQUIRE(ramlat_lattice_type(back.raw, &type) == RAMLAT_OK);
    CHECK(type == 2);
    OwnedString second;
    REQUIRE(ramlat_lattice_to_json(back.raw, &second.raw) == RAMLAT_OK);
    CHECK(first.str() == second.str());
  }

  SUBCASE("failure paths") {
    ramlat_lattice* out = nullptr;
    CHECK(ramlat_lattice_standard(split.raw, 1, &out) == RAMLAT_TYPE_UNAVAILABLE);
    CHECK(out == nullptr);
    CHECK(ramlat_lattice_standard(split.raw, 4, &out) == RAMLAT_TYPE_UNAVAILABLE);

    OwnedSpace nonsplit = make_space("non-split-even", 2);
    CHECK(ramlat_lattice_standard(nonsplit.raw, 2, &out) == RAMLAT_TYPE_UNAVAILABLE);
    CHECK(out == nullptr);

    CHECK(ramlat_lattice_from_json(split.raw, "not json", &out) == RAMLAT_PARSE_ERROR);
    CHECK(out == nullptr);

    int t = 0;
    CHECK(ramlat_lattice_type(nullptr, &t) == RAMLAT_INVALID_ARGUMENT);
    ramlat_lattice_free(nullptr); // must be a no-op
  }
}

TEST_CASE("complex enumeration and balls") {
  OwnedSpace split = make_space("split-even", 2);
  OwnedLattice L2, L0;
  REQUIRE(ramlat_lattice_standard(split.raw, 2, &L2.raw) == RAMLAT_OK);
  REQUIRE(ramlat_lattice_standard(split.raw, 0, &L0.raw) == RAMLAT_OK);

  SUBCASE("sub- and super-lattice listings") {
    OwnedString subs;
    REQUIRE(ramlat_complex_sub(L2.raw, &subs.raw) == RAMLAT_OK);
    Json sub_list = subs.json();
    REQUIRE(sub_list.size() == 5);
    CHECK(type_census(sub_list) == std::map<int, int>{{0, 4}, {2, 1}});
    CHECK(sub_list[0].at("lattice").contains("basis"));

    // Strict super-lattices only: the input lattice itself is not listed.
    OwnedString supers;
    REQUIRE(ramlat_complex_super(L0.raw, 1000000, &supers.raw) == RAMLAT_OK);
    Json super_list = supers.json();
    REQUIRE(super_list.size() == 2);
    CHECK(type_census(super_list) == std::map<int, int>{{2, 2}});

    char* out = nullptr;
    CHECK(ramlat_complex_super(L0.raw, 1, &out) == RAMLAT_SEARCH_TOO_LARGE);
    CHECK(out == nullptr);
  }

  SUBCASE("ball output is pinned and deterministic") {
    OwnedString ball;
    REQUIRE(ramlat_complex_ball(L2.raw, 2, "L", 1000000, &ball.raw) == RAMLAT_OK);
    Json g = ball.json();
    CHECK(g.at("nodes").size() == 17);
    CHECK(g.at("edges").size() == 16);
    for (const Json& e : g.at("edges")) CHECK(e.at("kind") == "intersection");
    CHECK(g.at("nodes")[g.at("center").get<std::size_t>()].at("type") == 2);

    OwnedString again;
    REQUIRE(ramlat_complex_ball(L2.raw, 2, "L", 1000000, &again.raw) == RAMLAT_OK);
    CHECK(ball.str() == again.str());

    OwnedString dot, dot2;
    REQUIRE(ramlat_complex_ball_dot(L2.raw, 2, "L", 1000000, &dot.raw) == RAMLAT_OK);
    REQUIRE(ramlat_complex_ball_dot(L2.raw, 2, "L", 1000000, &dot2.raw) == RAMLAT_OK);
    CHECK(dot.str() == dot2.str());
    CHECK(dot.str().rfind("graph vertex_complex {", 0) == 0);
    CHECK(dot.str().find("peripheries=2") != std::string::npos);

    char* out = nullptr;
    CHECK(ramlat_complex_ball(L2.raw, 1, "X", 1000000, &out) == RAMLAT_INVALID_ARGUMENT);
    CHECK(out == nullptr);
    CHECK(std::string(ramlat_last_error()).find("unknown complex kind") != std::string::npos);
    CHECK(ramlat_complex_ball(L0.raw, 1, "T", 1, &out) == RAMLAT_SEARCH_TOO_LARGE);
    CHECK(out == nullptr);
  }
}

TEST_CASE("point counting, strata, closures, resolution") {
  SUBCASE("census report") {
    OwnedString rep;
    REQUIRE(ramlat_dl_count(3, 1, 2, 1000000, &rep.raw) == RAMLAT_OK);
    Json r = rep.json();
    CHECK(r.at("p") == 3);
    CHECK(r.at("m") == 1);
    CHECK(r.at("k") == 2);
    CHECK(r.at("total") == 10);
    REQUIRE(r.at("strata").size() == 2);
    CHECK(r.at("strata")[0].at("count") == 4);
    CHECK(r.at("strata")[1].at("count") == 6);
    for (const Json& stratum : r.at("strata")) {
      std::uint64_t sum = 0;
      for (const Json& comp : stratum.at("components")) sum += comp.at("count").get<std::uint64_t>();
      CHECK(sum == stratum.at("count").get<std::uint64_t>());
    }

    OwnedString rep2;
    REQUIRE(ramlat_dl_count(2, 2, 2, 1000000, &rep2.raw) == RAMLAT_OK);
    Json r2 = rep2.json();
    CHECK(r2.at("total") == 45);
    CHECK(r2.at("strata")[0].at("count") == 15);
    CHECK(r2.at("strata")[1].at("count") == 30);
    CHECK(r2.at("strata")[2].at("count") == 0);

    char* out = nullptr;
    CHECK(ramlat_dl_count(3, 1, 2, 1, &out) == RAMLAT_SEARCH_TOO_LARGE);
    CHECK(out == nullptr);
  }

  SUBCASE("per-point strata") {
    OwnedString strata;
    REQUIRE(ramlat_dl_strata(3, 1, 1, 1000000, &strata.raw) == RAMLAT_OK);
    Json s = strata.json();
    REQUIRE(s.at("points").size() == 4);
    for (const Json& pt : s.at("points")) {
      CHECK(pt.at("i") == 0);
      CHECK(pt.at("component") == pt.at("U"));
    }
  }

  SUBCASE("closure counts") {
    OwnedString closures;
    REQUIRE(ramlat_dl_closure(3, 1, 2, 1, 1000000, &closures.raw) == RAMLAT_OK);
    Json c = closures.json();
    CHECK(c.at("dim_w") == 1);
    REQUIRE(c.at("closures").size() == 4);
    for (const Json& item : c.at("closures")) CHECK(item.at("count") == 1);

    OwnedString whole;
    REQUIRE(ramlat_dl_closure(3, 1, 2, 0, 1000000, &whole.raw) == RAMLAT_OK);
    Json w = whole.json();
    REQUIRE(w.at("closures").size() == 1);
    CHECK(w.at("closures")[0].at("count") == 10);
  }

  SUBCASE("resolution summary") {
    OwnedString res;
    REQUIRE(ramlat_dl_resolve(3, 1, 2, 1000000, &res.raw) == RAMLAT_OK);
    Json r = res.json();
    CHECK(r.at("flags") == 10);
    CHECK(r.at("points") == 10);
    CHECK(r.at("distinct_endpoints") == 10);
    CHECK(r.at("surjective") == true);
    CHECK(r.at("strict_flags") == 6);
    CHECK(r.at("top_stratum") == 6);
    CHECK(r.at("top_bijective") == true);
  }
}

TEST_CASE("weyl dimensions through the C interface") {
  OwnedString dims;
  REQUIRE(ramlat_weyl_dims(2, &dims.raw) == RAMLAT_OK);
  Json j = dims.json();
  CHECK(j.at("m") == 2);
  CHECK(j.at("coxeter_length") == 2);
  REQUIRE(j.at("strata").size() == 3);
  for (int i = 0; i <= 2; ++i) {
    CHECK(j.at("strata")[static_cast<std::size_t>(i)].at("i") == i);
    CHECK(j.at("strata")[static_cast<std::size_t>(i)].at("dim") == i);
  }

  OwnedString dims3;
  REQUIRE(ramlat_weyl_dims(3, &dims3.raw) == RAMLAT_OK);
  CHECK(dims3.json().at("coxeter_length") == 3);

  CHECK(ramlat_weyl_dims(2, nullptr) == RAMLAT_INVALID_ARGUMENT);
}

TEST_CASE("verify through the C interface") {
  int all = -1;
  OwnedString report;
  REQUIRE(ramlat_verify(8, 20260819u, &all, &report.raw) == RAMLAT_OK);
  CHECK(all == 1);
  std::string text = report.str();
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("dimension formula") != std::string::npos);

  char* out = nullptr;
  CHECK(ramlat_verify(99, 20260819u, &all, &out) == RAMLAT_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(ramlat_verify(8, 20260819u, nullptr, &out) == RAMLAT_INVALID_ARGUMENT);
}
