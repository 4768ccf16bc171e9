#include "json_io.hpp"

#include <cinttypes>
#include <cstdio>

namespace ramlat {

namespace {

OEMatrix matrix_from_strings(const FieldParams& fp, const Json& rows, int nrows, int ncols,
                             const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != nrows)
    fail(ErrorKind::ParseError, std::string(what) + " has the wrong number of rows");
  OEMatrix M(fp, nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != ncols)
      fail(ErrorKind::ParseError, std::string(what) + " has a row of the wrong length");
    for (int j = 0; j < ncols; ++j)
      M.at(i, j) = oe_from_string(fp, row[static_cast<std::size_t>(j)].get<std::string>());
  }
  return M;
}

Json matrix_to_strings(const OEMatrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(oe_to_string(M.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// peeks "mod p^N" out of one element string
std::pair<std::uint64_t, int> parse_modulus_tag(const std::string& s) {
  std::uint64_t a = 0, b = 0, p = 0;
  int n = 0, used = 0;
  if (std::sscanf(s.c_str(), "%" SCNu64 "+%" SCNu64 "*pi mod %" SCNu64 "^%d%n", &a, &b, &p, &n,
                  &used) != 4 ||
      used != static_cast<int>(s.size()))
    fail(ErrorKind::ParseError, "malformed element string");
  return {p, n};
}

std::vector<FqElem> element_coeffs(const FqField& F, FqElem x) {
  std::vector<FqElem> c(static_cast<std::size_t>(F.k()), 0);
  std::uint64_t v = x;
  for (int i = 0; i < F.k(); ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<FqElem>(v % F.p());
    v /= F.p();
  }
  return c;
}

} // namespace

std::string oe_to_string(const OEElement& x) {
  if (!x.exact())
    fail(ErrorKind::PrecisionExhausted, "cannot serialize an element with eroded precision");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%" PRIu64 "+%" PRIu64 "*pi mod %" PRIu64 "^%d", x.a(), x.b(),
                x.params().p, x.params().precision);
  return buf;
}

OEElement oe_from_string(const FieldParams& fp, const std::string& s) {
  std::uint64_t a = 0, b = 0, p = 0;
  int n = 0, used = 0;
  if (std::sscanf(s.c_str(), "%" SCNu64 "+%" SCNu64 "*pi mod %" SCNu64 "^%d%n", &a, &b, &p, &n,
                  &used) != 4 ||
      used != static_cast<int>(s.size()))
    fail(ErrorKind::ParseError, "malformed element string");
  if (p != fp.p || n != fp.precision)
    fail(ErrorKind::ParseError, "element string disagrees with the field parameters");
  if (a >= fp.pn || b >= fp.pn)
    fail(ErrorKind::ParseError, "element string has an unreduced component");
  return OEElement(fp, a, b);
}

Json space_to_json(const HermitianSpace& space) {
  Json j;
  j["p"] = space.params().p;
  j["epsilon"] = space.params().epsilon;
  j["n"] = space.dim();
  j["gram"] = matrix_to_strings(space.gram());
  return j;
}

SpacePtr space_from_json(const Json& j) {
  std::uint64_t p = j.at("p").get<std::uint64_t>();
  std::uint64_t epsilon = j.at("epsilon").get<std::uint64_t>();
  int n = j.at("n").get<int>();
  const Json& gram = j.at("gram");
  if (n <= 0 || !gram.is_array() || gram.empty() || !gram[0].is_array() || gram[0].empty())
    fail(ErrorKind::ParseError, "space serialization needs a nonempty gram matrix");
  auto [ptag, prec] = parse_modulus_tag(gram[0][0].get<std::string>());
  if (ptag != p) fail(ErrorKind::ParseError, "gram entries disagree with the space prime");
  FieldParams fp(p, prec, epsilon);
  return std::make_shared<HermitianSpace>(fp, matrix_from_strings(fp, gram, n, n, "gram"));
}

Json lattice_to_json(const HermitianLattice& L) {
  Json j;
  j["scale"] = L.scale();
  j["basis"] = matrix_to_strings(L.basis());
  return j;
}

HermitianLattice lattice_from_json(SpacePtr space, const Json& j) {
  int scale = j.at("scale").get<int>();
  int n = space->dim();
  OEMatrix B = matrix_from_strings(space->params(), j.at("basis"), n, n, "basis");
  return HermitianLattice(std::move(space), B, scale);
}

Json subspace_to_json(const FqSubspace& U) {
  const FqField& F = *U.field();
  Json j;
  j["p"] = F.p();
  j["k"] = F.k();
  j["modulus"] = F.modulus();
  j["ambient"] = U.ambient();
  j["dim"] = U.dim();
  Json basis = Json::array();
  for (const FqVector& row : U.rows()) {
    Json jrow = Json::array();
    for (FqElem x : row) jrow.push_back(element_coeffs(F, x));
    basis.push_back(std::move(jrow));
  }
  j["basis"] = std::move(basis);
  return j;
}

FqSubspace subspace_from_json(const Json& j) {
  std::uint64_t p = j.at("p").get<std::uint64_t>();
  int k = j.at("k").get<int>();
  FqFieldPtr field = make_fq_field(p, k);
  if (j.at("modulus").get<std::vector<FqElem>>() != field->modulus())
    fail(ErrorKind::ParseError, "modulus disagrees with the canonical field");
  int ambient = j.at("ambient").get<int>();
  int dim = j.at("dim").get<int>();
  const Json& basis = j.at("basis");
  if (!basis.is_array() || static_cast<int>(basis.size()) != dim)
    fail(ErrorKind::ParseError, "subspace basis has the wrong number of rows");
  FqRows rows;
  for (const Json& jrow : basis) {
    if (!jrow.is_array() || static_cast<int>(jrow.size()) != ambient)
      fail(ErrorKind::ParseError, "subspace basis has a row of the wrong length");
    FqVector row;
    for (const Json& jx : jrow) {
      auto coeffs = jx.get<std::vector<std::uint64_t>>();
      if (static_cast<int>(coeffs.size()) != k)
        fail(ErrorKind::ParseError, "field element has the wrong number of coefficients");
      std::uint64_t code = 0;
      for (int i = k - 1; i >= 0; --i) {
        if (coeffs[static_cast<std::size_t>(i)] >= p)
          fail(ErrorKind::ParseError, "field element coefficient is not reduced");
        code = code * p + coeffs[static_cast<std::size_t>(i)];
      }
      row.push_back(static_cast<FqElem>(code));
    }
    rows.push_back(std::move(row));
  }
  FqSubspace U(field, ambient, rows);
  if (U.dim() != dim) fail(ErrorKind::ParseError, "subspace basis rows are not independent");
  return U;
}

Json graph_to_json(const VertexComplexGraph& g) {
  Json j;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    Json node;
    node["id"] = i;
    node["type"] = g.nodes[i].type;
    node["lattice"] = lattice_to_json(g.nodes[i].lattice);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json edge;
    edge["a"] = e.a;
    edge["b"] = e.b;
    edge["kind"] = e.kind == EdgeKind::Inclusion ? "inclusion" : "intersection";
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  j["center"] = g.center;
  j["radius"] = g.radius;
  return j;
}

Json stratum_report_to_json(const StratumReport& r) {
  Json j;
  j["p"] = r.p;
  j["m"] = r.m;
  j["k"] = r.k;
  j["total"] = r.total;
  Json strata = Json::array();
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    Json s;
    s["i"] = i;
    s["count"] = r.counts[i];
    Json comps = Json::array();
    for (const StratumComponent& c : r.components[i]) {
      Json jc;
      jc["W"] = subspace_to_json(c.w);
      jc["count"] = c.count;
      comps.push_back(std::move(jc));
    }
    s["components"] = std::move(comps);
    strata.push_back(std::move(s));
  }
  j["strata"] = std::move(strata);
  return j;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

} // namespace ramlat
