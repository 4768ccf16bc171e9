#include "../include/ramlat.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>

#include "checks.hpp"
#include "json_io.hpp"
#include "weyl.hpp"

// Handle definitions: thin owning wrappers around the C++ values.
struct ramlat_space {
  ramlat::SpacePtr ptr;
};

struct ramlat_lattice {
  ramlat::HermitianLattice value;
};

namespace {

thread_local std::string g_last_error;

ramlat_status status_of(ramlat::ErrorKind kind) {
  using ramlat::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument: return RAMLAT_INVALID_ARGUMENT;
    case ErrorKind::ParseError: return RAMLAT_PARSE_ERROR;
    case ErrorKind::PrecisionExhausted: return RAMLAT_PRECISION_EXHAUSTED;
    case ErrorKind::NotInvertible: return RAMLAT_NOT_INVERTIBLE;
    case ErrorKind::Singular: return RAMLAT_SINGULAR;
    case ErrorKind::RankDeficient: return RAMLAT_RANK_DEFICIENT;
    case ErrorKind::NotUnit: return RAMLAT_NOT_UNIT;
    case ErrorKind::NotVertex: return RAMLAT_NOT_VERTEX;
    case ErrorKind::TypeUnavailable: return RAMLAT_TYPE_UNAVAILABLE;
    case ErrorKind::NotRational: return RAMLAT_NOT_RATIONAL;
    case ErrorKind::NotIsotropic: return RAMLAT_NOT_ISOTROPIC;
    case ErrorKind::NotLagrangian: return RAMLAT_NOT_LAGRANGIAN;
    case ErrorKind::ChainViolation: return RAMLAT_CHAIN_VIOLATION;
    case ErrorKind::SearchTooLarge: return RAMLAT_SEARCH_TOO_LARGE;
    case ErrorKind::GroupTooLarge: return RAMLAT_GROUP_TOO_LARGE;
    case ErrorKind::Internal: return RAMLAT_INTERNAL;
  }
  return RAMLAT_INTERNAL;
}

template <typename Fn>
ramlat_status guarded(Fn&& fn) {
  try {
    fn();
    return RAMLAT_OK;
  } catch (const ramlat::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RAMLAT_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return RAMLAT_INTERNAL;
  }
}

ramlat_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return RAMLAT_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ramlat::Json typed_list_json(const std::vector<ramlat::TypedLattice>& list) {
  ramlat::Json out = ramlat::Json::array();
  for (const ramlat::TypedLattice& t : list) {
    ramlat::Json item;
    item["type"] = t.type;
    item["lattice"] = ramlat::lattice_to_json(t.lattice);
    out.push_back(std::move(item));
  }
  return out;
}

ramlat::ComplexKind kind_from_name(const char* kind) {
  std::string k = kind;
  if (k == "T") return ramlat::ComplexKind::T;
  if (k == "L") return ramlat::ComplexKind::L;
  ramlat::fail(ramlat::ErrorKind::InvalidArgument, "unknown complex kind: " + k);
}

} // namespace

extern "C" {

const char* ramlat_last_error(void) { return g_last_error.c_str(); }

void ramlat_string_free(char* s) { std::free(s); }

ramlat_status ramlat_space_create(uint64_t p, int precision, uint64_t epsilon, int n,
                                  const char* variant, ramlat_space** out) {
  if (!variant) return null_argument("variant");
  if (!out) return null_argument("out");
  return guarded([&] {
    ramlat::FieldParams fp(p, precision, epsilon);
    ramlat::SpacePtr space = ramlat::standard_space(fp, n, ramlat::variant_from_name(variant));
    *out = new ramlat_space{std::move(space)};
  });
}

void ramlat_space_free(ramlat_space* space) { delete space; }

ramlat_status ramlat_space_classify(const ramlat_space* space, char** json_out) {
  if (!space) return null_argument("space");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    ramlat::SpaceClass c = ramlat::classify_space(*space->ptr);
    ramlat::Json j;
    j["label"] = c.split ? "Split" : "NonSplit";
    j["disc_unit"] = c.disc_unit;
    j["n"] = space->ptr->dim();
    j["max_vertex_type"] = ramlat::max_vertex_type(*space->ptr);
    *json_out = dup_string(ramlat::json_text(j));
  });
}

ramlat_status ramlat_space_to_json(const ramlat_space* space, char** json_out) {
  if (!space) return null_argument("space");
  if (!json_out) return null_argument("json_out");
  return guarded(
      [&] { *json_out = dup_string(ramlat::json_text(ramlat::space_to_json(*space->ptr))); });
}

ramlat_status ramlat_lattice_standard(const ramlat_space* space, int t, ramlat_lattice** out) {
  if (!space) return null_argument("space");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = new ramlat_lattice{ramlat::standard_vertex_lattice(space->ptr, t)}; });
}

ramlat_status ramlat_lattice_from_json(const ramlat_space* space, const char* json,
                                       ramlat_lattice** out) {
  if (!space) return null_argument("space");
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    ramlat::Json j = ramlat::Json::parse(json, nullptr, false);
    if (j.is_discarded())
      ramlat::fail(ramlat::ErrorKind::ParseError, "lattice argument is not valid JSON");
    *out = new ramlat_lattice{ramlat::lattice_from_json(space->ptr, j)};
  });
}

void ramlat_lattice_free(ramlat_lattice* lattice) { delete lattice; }

ramlat_status ramlat_lattice_type(const ramlat_lattice* lattice, int* type_out) {
  if (!lattice) return null_argument("lattice");
  if (!type_out) return null_argument("type_out");
  return guarded([&] { *type_out = ramlat::vertex_type(lattice->value); });
}

ramlat_status ramlat_lattice_dual(const ramlat_lattice* lattice, ramlat_lattice** out) {
  if (!lattice) return null_argument("lattice");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new ramlat_lattice{ramlat::dual_lattice(lattice->value)}; });
}

ramlat_status ramlat_lattice_index(const ramlat_lattice* a, const ramlat_lattice* b,
                                   int64_t* index_out) {
  if (!a) return null_argument("a");
  if (!b) return null_argument("b");
  if (!index_out) return null_argument("index_out");
  return guarded([&] { *index_out = ramlat::lattice_index(a->value, b->value); });
}

ramlat_status ramlat_lattice_to_json(const ramlat_lattice* lattice, char** json_out) {
  if (!lattice) return null_argument("lattice");
  if (!json_out) return null_argument("json_out");
  return guarded(
      [&] { *json_out = dup_string(ramlat::json_text(ramlat::lattice_to_json(lattice->value))); });
}

ramlat_status ramlat_complex_sub(const ramlat_lattice* lattice, char** json_out) {
  if (!lattice) return null_argument("lattice");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    *json_out =
        dup_string(ramlat::json_text(typed_list_json(ramlat::sub_vertex_lattices(lattice->value))));
  });
}

ramlat_status ramlat_complex_super(const ramlat_lattice* lattice, uint64_t budget,
                                   char** json_out) {
  if (!lattice) return null_argument("lattice");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    *json_out = dup_string(
        ramlat::json_text(typed_list_json(ramlat::super_vertex_lattices(lattice->value, budget))));
  });
}

ramlat_status ramlat_complex_ball(const ramlat_lattice* center, int radius, const char* kind,
                                  uint64_t budget, char** json_out) {
  if (!center) return null_argument("center");
  if (!kind) return null_argument("kind");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    ramlat::VertexComplexGraph g =
        ramlat::build_ball(center->value, radius, kind_from_name(kind), budget);
    *json_out = dup_string(ramlat::json_text(ramlat::graph_to_json(g)));
  });
}

ramlat_status ramlat_complex_ball_dot(const ramlat_lattice* center, int radius, const char* kind,
                                      uint64_t budget, char** dot_out) {
  if (!center) return null_argument("center");
  if (!kind) return null_argument("kind");
  if (!dot_out) return null_argument("dot_out");
  return guarded([&] {
    ramlat::VertexComplexGraph g =
        ramlat::build_ball(center->value, radius, kind_from_name(kind), budget);
    *dot_out = dup_string(ramlat::to_dot(g));
  });
}

ramlat_status ramlat_dl_count(uint64_t p, int m, int k, uint64_t budget, char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    ramlat::SymplecticSpace sp = ramlat::standard_symplectic_space(p, m);
    ramlat::StratumReport r = ramlat::count_points(sp, ramlat::make_fq_field(p, k), budget);
    *json_out = dup_string(ramlat::json_text(ramlat::stratum_report_to_json(r)));
  });
}

ramlat_status ramlat_dl_strata(uint64_t p, int m, int k, uint64_t budget, char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    ramlat::SymplecticSpace sp = ramlat::standard_symplectic_space(p, m);
    ramlat::FqFieldPtr field = ramlat::make_fq_field(p, k);
    ramlat::Json points = ramlat::Json::array();
    for (const ramlat::FqSubspace& U : ramlat::enumerate_isotropic(sp, field, m, budget)) {
      if (!ramlat::in_S(sp, U)) continue;
      ramlat::StratumChain c = ramlat::stratum_of(sp, U);
      ramlat::Json item;
      item["U"] = ramlat::subspace_to_json(U);
      item["i"] = c.i;
      item["component"] = ramlat::subspace_to_json(c.component);
      points.push_back(std::move(item));
    }
    ramlat::Json j;
    j["p"] = p;
    j["m"] = m;
    j["k"] = k;
    j["points"] = std::move(points);
    *json_out = dup_string(ramlat::json_text(j));
  });
}

ramlat_status ramlat_dl_closure(uint64_t p, int m, int k, int dim_w, uint64_t budget,
                                char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    ramlat::SymplecticSpace sp = ramlat::standard_symplectic_space(p, m);
    ramlat::FqFieldPtr field = ramlat::make_fq_field(p, k);
    ramlat::FqFieldPtr prime = ramlat::make_fq_field(p, 1);
    ramlat::Json closures = ramlat::Json::array();
    for (const ramlat::FqSubspace& W : ramlat::enumerate_isotropic(sp, prime, dim_w, budget)) {
      ramlat::Json item;
      item["W"] = ramlat::subspace_to_json(W);
      item["count"] = ramlat::closure_points(sp, W, field, budget).size();
      closures.push_back(std::move(item));
    }
    ramlat::Json j;
    j["p"] = p;
    j["m"] = m;
    j["k"] = k;
    j["dim_w"] = dim_w;
    j["closures"] = std::move(closures);
    *json_out = dup_string(ramlat::json_text(j));
  });
}

ramlat_status ramlat_dl_resolve(uint64_t p, int m, int k, uint64_t budget, char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    ramlat::SymplecticSpace sp = ramlat::standard_symplectic_space(p, m);
    ramlat::FqFieldPtr field = ramlat::make_fq_field(p, k);

    std::set<ramlat::FqSubspace> points;
    std::uint64_t top_stratum = 0;
    for (const ramlat::FqSubspace& U : ramlat::enumerate_isotropic(sp, field, m, budget)) {
      if (!ramlat::in_S(sp, U)) continue;
      points.insert(U);
      if (ramlat::stratum_of(sp, U).i == m) ++top_stratum;
    }

    std::vector<ramlat::IsotropicFlag> flags = ramlat::xbar_flags(sp, field, budget);
    std::set<ramlat::FqSubspace> endpoints;
    std::set<ramlat::FqSubspace> strict_endpoints;
    std::uint64_t strict = 0;
    for (const ramlat::IsotropicFlag& f : flags) {
      ramlat::FqSubspace end = ramlat::resolution_endpoint(f);
      endpoints.insert(end);
      bool is_strict = true;
      const std::vector<ramlat::FqSubspace>& mem = f.members();
      for (std::size_t j = 0; j + 1 < mem.size() && is_strict; ++j)
        is_strict = ramlat::subspace_intersection(mem[j + 1], ramlat::frobenius(mem[j + 1])) ==
                    mem[j];
      if (is_strict && !mem.empty())
        is_strict =
            ramlat::subspace_intersection(mem[0], ramlat::frobenius(mem[0])).dim() == 0;
      if (is_strict) {
        ++strict;
        strict_endpoints.insert(end);
      }
    }

    ramlat::Json j;
    j["p"] = p;
    j["m"] = m;
    j["k"] = k;
    j["flags"] = flags.size();
    j["points"] = points.size();
    j["distinct_endpoints"] = endpoints.size();
    j["surjective"] = endpoints.size() == points.size();
    j["strict_flags"] = strict;
    j["top_stratum"] = top_stratum;
    j["top_bijective"] = strict == top_stratum && strict_endpoints.size() == strict;
    *json_out = dup_string(ramlat::json_text(j));
  });
}

ramlat_status ramlat_weyl_dims(int m, char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    ramlat::Json strata = ramlat::Json::array();
    for (int i = 0; i <= m; ++i) {
      ramlat::Json item;
      item["i"] = i;
      item["dim"] = ramlat::dim_DL(ramlat::stratum_parabolic(m, i), ramlat::stratum_word(m, i));
      strata.push_back(std::move(item));
    }
    ramlat::Json j;
    j["m"] = m;
    j["coxeter_length"] = ramlat::coxeter_element(m).length();
    j["strata"] = std::move(strata);
    *json_out = dup_string(ramlat::json_text(j));
  });
}

ramlat_status ramlat_verify(int id, uint64_t seed, int* all_passed_out, char** report_out) {
  if (!all_passed_out) return null_argument("all_passed_out");
  if (!report_out) return null_argument("report_out");
  return guarded([&] {
    std::vector<ramlat::CheckResult> results;
    if (id == 0) {
      results = ramlat::run_all_checks(seed);
    } else {
      results.push_back(ramlat::run_check(id, seed));
    }
    std::string report;
    bool all = true;
    for (const ramlat::CheckResult& r : results) {
      char line[64];
      std::snprintf(line, sizeof line, "[%s] %2d ", r.pass ? "PASS" : "FAIL", r.id);
      report += line;
      report += r.name;
      if (!r.detail.empty()) {
        report += ": ";
        report += r.detail;
      }
      report += "\n";
      all = all && r.pass;
    }
    *all_passed_out = all ? 1 : 0;
    *report_out = dup_string(report);
  });
}

} // extern "C"
