// Command-line front end. Links only the C interface of the shared library.
//
// Exit codes: 0 success, 1 failed verification, 2 usage or configuration
// error, 3 budget or precision exhaustion. Diagnostics are single lines on
// stderr; all results go to stdout and are byte-identical across runs for a
// fixed configuration.
#include <cstdio>
#include <cstdint>
#include <functional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <ramlat.h>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int exit_code_for(ramlat_status status) {
  switch (status) {
    case RAMLAT_OK:
      return kExitSuccess;
    case RAMLAT_PRECISION_EXHAUSTED:
    case RAMLAT_SEARCH_TOO_LARGE:
    case RAMLAT_GROUP_TOO_LARGE:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

// Prints the library's diagnostic as a single stderr line and maps the status.
int report_failure(ramlat_status status) {
  std::fprintf(stderr, "error: %s\n", ramlat_last_error());
  return exit_code_for(status);
}

struct ScopedString {
  char* raw = nullptr;
  ~ScopedString() { ramlat_string_free(raw); }
};

struct ScopedSpace {
  ramlat_space* raw = nullptr;
  ~ScopedSpace() { ramlat_space_free(raw); }
};

struct ScopedLattice {
  ramlat_lattice* raw = nullptr;
  ~ScopedLattice() { ramlat_lattice_free(raw); }
};

struct Config {
  std::uint64_t p = 3;
  int n = 2;
  int m = 1;
  std::string variant = "split-even";
  int k = 1;
  int t = 0;
  int radius = 1;
  int precision = 12;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 20260819;
  std::string output = "json";
  std::string kind = "T";
};

// Renders a top-level JSON document as aligned "key value" lines; nested
// structures are summarized by their entry count.
void print_table(const std::string& json_str) {
  Json j = Json::parse(json_str);
  if (j.is_array()) {
    std::printf("entries %zu\n", j.size());
    return;
  }
  for (const auto& item : j.items()) {
    const Json& val = item.value();
    if (val.is_string())
      std::printf("%s %s\n", item.key().c_str(), val.get<std::string>().c_str());
    else if (val.is_structured())
      std::printf("%s %zu entries\n", item.key().c_str(), val.size());
    else
      std::printf("%s %s\n", item.key().c_str(), val.dump().c_str());
  }
}

// Emits a JSON document (already newline-terminated) in the requested format.
int emit(const Config& cfg, const std::string& json_str) {
  if (cfg.output == "json") {
    std::fputs(json_str.c_str(), stdout);
    return kExitSuccess;
  }
  if (cfg.output == "table") {
    print_table(json_str);
    return kExitSuccess;
  }
  std::fprintf(stderr, "error: dot output is only available for complex ball\n");
  return kExitUsage;
}

int make_space(const Config& cfg, ScopedSpace& space) {
  ramlat_status st =
      ramlat_space_create(cfg.p, cfg.precision, 1, cfg.n, cfg.variant.c_str(), &space.raw);
  return st == RAMLAT_OK ? kExitSuccess : report_failure(st);
}

int make_standard_lattice(const Config& cfg, ScopedSpace& space, ScopedLattice& lattice) {
  if (int rc = make_space(cfg, space)) return rc;
  ramlat_status st = ramlat_lattice_standard(space.raw, cfg.t, &lattice.raw);
  return st == RAMLAT_OK ? kExitSuccess : report_failure(st);
}

int cmd_space_classify(const Config& cfg) {
  ScopedSpace space;
  if (int rc = make_space(cfg, space)) return rc;
  ScopedString out;
  ramlat_status st = ramlat_space_classify(space.raw, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_lattice_type(const Config& cfg) {
  ScopedSpace space;
  ScopedLattice lattice;
  if (int rc = make_standard_lattice(cfg, space, lattice)) return rc;
  int type = 0;
  ramlat_status st = ramlat_lattice_type(lattice.raw, &type);
  if (st != RAMLAT_OK) return report_failure(st);
  ScopedString lat_json;
  st = ramlat_lattice_to_json(lattice.raw, &lat_json.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  Json j;
  j["type"] = type;
  j["lattice"] = Json::parse(std::string(lat_json.raw));
  return emit(cfg, j.dump(2) + "\n");
}

int cmd_lattice_dual(const Config& cfg) {
  ScopedSpace space;
  ScopedLattice lattice;
  if (int rc = make_standard_lattice(cfg, space, lattice)) return rc;
  ScopedLattice dual;
  ramlat_status st = ramlat_lattice_dual(lattice.raw, &dual.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  ScopedString lat_json, dual_json;
  st = ramlat_lattice_to_json(lattice.raw, &lat_json.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  st = ramlat_lattice_to_json(dual.raw, &dual_json.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  Json j;
  j["lattice"] = Json::parse(std::string(lat_json.raw));
  j["dual"] = Json::parse(std::string(dual_json.raw));
  return emit(cfg, j.dump(2) + "\n");
}

int cmd_lattice_index(const Config& cfg) {
  ScopedSpace space;
  ScopedLattice lattice;
  if (int rc = make_standard_lattice(cfg, space, lattice)) return rc;
  ScopedLattice dual;
  ramlat_status st = ramlat_lattice_dual(lattice.raw, &dual.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  std::int64_t index = 0;
  st = ramlat_lattice_index(lattice.raw, dual.raw, &index);
  if (st != RAMLAT_OK) return report_failure(st);
  Json j;
  j["t"] = cfg.t;
  j["index"] = index;
  return emit(cfg, j.dump(2) + "\n");
}

int cmd_complex_sub(const Config& cfg) {
  ScopedSpace space;
  ScopedLattice lattice;
  if (int rc = make_standard_lattice(cfg, space, lattice)) return rc;
  ScopedString out;
  ramlat_status st = ramlat_complex_sub(lattice.raw, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_complex_super(const Config& cfg) {
  ScopedSpace space;
  ScopedLattice lattice;
  if (int rc = make_standard_lattice(cfg, space, lattice)) return rc;
  ScopedString out;
  ramlat_status st = ramlat_complex_super(lattice.raw, cfg.budget, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_complex_ball(const Config& cfg, bool force_dot) {
  ScopedSpace space;
  ScopedLattice lattice;
  if (int rc = make_standard_lattice(cfg, space, lattice)) return rc;
  ScopedString out;
  if (force_dot || cfg.output == "dot") {
    ramlat_status st =
        ramlat_complex_ball_dot(lattice.raw, cfg.radius, cfg.kind.c_str(), cfg.budget, &out.raw);
    if (st != RAMLAT_OK) return report_failure(st);
    std::fputs(out.raw, stdout);
    return kExitSuccess;
  }
  ramlat_status st =
      ramlat_complex_ball(lattice.raw, cfg.radius, cfg.kind.c_str(), cfg.budget, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_dl_count(const Config& cfg) {
  ScopedString out;
  ramlat_status st = ramlat_dl_count(cfg.p, cfg.m, cfg.k, cfg.budget, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_dl_stratum(const Config& cfg) {
  ScopedString out;
  ramlat_status st = ramlat_dl_strata(cfg.p, cfg.m, cfg.k, cfg.budget, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_dl_closure(const Config& cfg) {
  ScopedString out;
  ramlat_status st = ramlat_dl_closure(cfg.p, cfg.m, cfg.k, cfg.t, cfg.budget, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_dl_resolve(const Config& cfg) {
  ScopedString out;
  ramlat_status st = ramlat_dl_resolve(cfg.p, cfg.m, cfg.k, cfg.budget, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_weyl_dim(const Config& cfg) {
  ScopedString out;
  ramlat_status st = ramlat_weyl_dims(cfg.m, &out.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  return emit(cfg, out.raw);
}

int cmd_verify(const Config& cfg, const std::string& target) {
  int id = 0;
  if (target != "all") {
    try {
      std::size_t used = 0;
      id = std::stoi(target, &used);
      if (used != target.size()) throw std::invalid_argument(target);
    } catch (const std::exception&) {
      std::fprintf(stderr, "error: verify target must be 'all' or a check id, got '%s'\n",
                   target.c_str());
      return kExitUsage;
    }
  }
  int all_passed = 0;
  ScopedString report;
  ramlat_status st = ramlat_verify(id, cfg.seed, &all_passed, &report.raw);
  if (st != RAMLAT_OK) return report_failure(st);
  std::fputs(report.raw, stdout);
  return all_passed ? kExitSuccess : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
  Config cfg;
  std::function<int()> action;

  CLI::App app("vertex lattices, incidence complexes, and stratified point sets");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", cfg.p, "odd prime for spaces and lattices; any prime for point sets");
  app.add_option("--n", cfg.n, "hermitian space dimension");
  app.add_option("--m", cfg.m, "symplectic half-dimension");
  app.add_option("--variant", cfg.variant, "space variant: split-even | non-split-even | odd");
  app.add_option("--k", cfg.k, "field extension degree");
  app.add_option("--t", cfg.t, "vertex lattice type; for dl closure, the dimension of W");
  app.add_option("--radius", cfg.radius, "ball radius in the complex");
  app.add_option("--precision", cfg.precision, "working precision in base-p digits");
  app.add_option("--budget", cfg.budget, "enumeration budget; exceeding it is exit 3");
  app.add_option("--seed", cfg.seed, "seed for randomized verification suites");
  app.add_option("--output", cfg.output, "output format: json | table | dot (complex only)");
  app.add_option("--kind", cfg.kind, "complex kind for ball/dot: T | L");

  CLI::App* space = app.add_subcommand("space", "hermitian space operations");
  space->require_subcommand(1);
  space->fallthrough();
  CLI::App* classify = space->add_subcommand("classify", "split/non-split class and maximal type");
  classify->fallthrough();
  classify->callback([&] { action = [&] { return cmd_space_classify(cfg); }; });

  CLI::App* lattice = app.add_subcommand("lattice", "standard vertex lattice operations");
  lattice->require_subcommand(1);
  lattice->fallthrough();
  CLI::App* ltype = lattice->add_subcommand("type", "type of the standard lattice of type --t");
  ltype->fallthrough();
  ltype->callback([&] { action = [&] { return cmd_lattice_type(cfg); }; });
  CLI::App* ldual = lattice->add_subcommand("dual", "the lattice together with its dual");
  ldual->fallthrough();
  ldual->callback([&] { action = [&] { return cmd_lattice_dual(cfg); }; });
  CLI::App* lindex =
      lattice->add_subcommand("index", "index of the dual inside the lattice, equal to the type");
  lindex->fallthrough();
  lindex->callback([&] { action = [&] { return cmd_lattice_index(cfg); }; });

  CLI::App* complex_cmd = app.add_subcommand("complex", "incidence complex enumeration");
  complex_cmd->require_subcommand(1);
  complex_cmd->fallthrough();
  CLI::App* sub = complex_cmd->add_subcommand("sub", "vertex sublattices of the --t lattice");
  sub->fallthrough();
  sub->callback([&] { action = [&] { return cmd_complex_sub(cfg); }; });
  CLI::App* super = complex_cmd->add_subcommand("super", "strict vertex superlattices");
  super->fallthrough();
  super->callback([&] { action = [&] { return cmd_complex_super(cfg); }; });
  CLI::App* ball = complex_cmd->add_subcommand("ball", "radius-limited neighborhood graph");
  ball->fallthrough();
  ball->callback([&] { action = [&] { return cmd_complex_ball(cfg, false); }; });
  CLI::App* dot = complex_cmd->add_subcommand("dot", "the same graph rendered as DOT");
  dot->fallthrough();
  dot->callback([&] { action = [&] { return cmd_complex_ball(cfg, true); }; });

  CLI::App* dl = app.add_subcommand("dl", "stratified point sets over extension fields");
  dl->require_subcommand(1);
  dl->fallthrough();
  CLI::App* count = dl->add_subcommand("count", "census of points per stratum and component");
  count->fallthrough();
  count->callback([&] { action = [&] { return cmd_dl_count(cfg); }; });
  CLI::App* stratum = dl->add_subcommand("stratum", "per-point stratum index and component");
  stratum->fallthrough();
  stratum->callback([&] { action = [&] { return cmd_dl_stratum(cfg); }; });
  CLI::App* closure = dl->add_subcommand("closure", "closure sizes for components of dimension --t");
  closure->fallthrough();
  closure->callback([&] { action = [&] { return cmd_dl_closure(cfg); }; });
  CLI::App* resolve = dl->add_subcommand("resolve", "flag-variety resolution summary");
  resolve->fallthrough();
  resolve->callback([&] { action = [&] { return cmd_dl_resolve(cfg); }; });

  CLI::App* weyl = app.add_subcommand("weyl", "signed permutation combinatorics");
  weyl->require_subcommand(1);
  weyl->fallthrough();
  CLI::App* dim = weyl->add_subcommand("dim", "stratum dimensions from double cosets");
  dim->fallthrough();
  dim->callback([&] { action = [&] { return cmd_weyl_dim(cfg); }; });

  std::string verify_target = "all";
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->fallthrough();
  verify->add_option("target", verify_target, "'all' or a single check id");
  verify->callback([&] { action = [&] { return cmd_verify(cfg, verify_target); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!action) {
    std::fprintf(stderr, "error: no command selected\n");
    return kExitUsage;
  }
  return action();
}
