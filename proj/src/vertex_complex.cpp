#include "vertex_complex.hpp"

#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "fq.hpp"

namespace ramlat {

namespace {

constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

std::vector<std::vector<std::uint16_t>> to_fq_rows(
    const std::vector<std::vector<std::uint64_t>>& rows) {
  std::vector<std::vector<std::uint16_t>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].reserve(rows[i].size());
    for (std::uint64_t x : rows[i]) out[i].push_back(static_cast<std::uint16_t>(x));
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> to_wide_rows(const FqRows& rows) {
  std::vector<std::vector<std::uint64_t>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i].assign(rows[i].begin(), rows[i].end());
  return out;
}

// span{ pi^{e_j} f_j } + span of the coordinate rows lifted through the
// columns of f_basis selected by vcols, at the adapted basis scale
HermitianLattice lift_through(const SpacePtr& space, const AdaptedBasis& ab,
                              const std::vector<int>& vcols, const FqRows& rows) {
  const FieldParams& fp = space->params();
  int n = ab.f_basis.rows();
  int m = n + static_cast<int>(rows.size());
  OEMatrix gen(fp, n, m);
  for (int j = 0; j < n; ++j) {
    OEElement d = OEElement::pi_pow(fp, ab.exponents[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) gen.at(i, j) = ab.f_basis.at(i, j) * d;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == 0) continue;
      OEElement w(fp, rows[r][c], 0);
      int col = n + static_cast<int>(r);
      for (int i = 0; i < n; ++i)
        gen.at(i, col) = gen.at(i, col) + w * ab.f_basis.at(i, vcols[c]);
    }
  }
  return HermitianLattice(space, gen, ab.scale);
}

void sort_typed(std::vector<TypedLattice>& v) {
  std::sort(v.begin(), v.end(),
            [](const TypedLattice& a, const TypedLattice& b) { return a.lattice < b.lattice; });
}

} // namespace

std::vector<TypedLattice> sub_vertex_lattices(const HermitianLattice& L) {
  InducedSymplectic q = induced_symplectic_space(L);
  int m = q.t() / 2;
  std::uint64_t p = q.p();
  SymplecticSpace sp(p, m, to_fq_rows(q.gram()));
  FqFieldPtr F = make_fq_field(p, 1);
  std::vector<TypedLattice> out;
  for (int j = 0; j <= m; ++j) {
    for (const FqSubspace& W : enumerate_isotropic(sp, F, j, kUnlimited)) {
      FqSubspace P = perp(sp, W);
      out.push_back({q.preimage(to_wide_rows(P.rows())), 2 * (m - j)});
    }
  }
  sort_typed(out);
  return out;
}

std::vector<TypedLattice> super_vertex_lattices(const HermitianLattice& L, std::uint64_t budget) {
  int t = vertex_type(L);
  int n = L.dim();
  int d = n - t;
  std::uint64_t p = L.space()->params().p;
  std::uint64_t size = 1;
  for (int i = 0; i < d; ++i) {
    if (size > budget / p)
      fail(ErrorKind::SearchTooLarge, "super-lattice quotient exceeds the budget");
    size *= p;
  }
  if (size > budget) fail(ErrorKind::SearchTooLarge, "super-lattice quotient exceeds the budget");

  HermitianLattice D = dual_lattice(L).scaled_by_pi(-1);
  AdaptedBasis ab = adapted_basis(D, L);
  std::vector<int> vcols;
  for (int i = 0; i < n; ++i)
    if (ab.exponents[static_cast<std::size_t>(i)] == 1) vcols.push_back(i);
  if (static_cast<int>(vcols.size()) != d)
    fail(ErrorKind::Internal, "quotient dimension disagrees with the type");

  FqFieldPtr F = make_fq_field(p, 1);
  std::vector<TypedLattice> out;
  std::uint64_t lifts = 0;
  for (int j = 1; j <= d; ++j) {
    for (const FqSubspace& U : enumerate_subspaces(F, d, j, budget)) {
      if (++lifts > budget) fail(ErrorKind::SearchTooLarge, "candidate lifts exceed the budget");
      HermitianLattice M = lift_through(L.space(), ab, vcols, U.rows());
      if (is_vertex_lattice(M)) out.push_back({M, vertex_type(M)});
    }
  }
  sort_typed(out);
  return out;
}

bool is_simplex(const std::vector<HermitianLattice>& lattices) {
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    if (!(*lattices[i].space() == *lattices[0].space()))
      fail(ErrorKind::InvalidArgument, "simplex test needs lattices in a single space");
    for (std::size_t j = i + 1; j < lattices.size(); ++j) {
      if (!lattice_contains(lattices[i], lattices[j]) &&
          !lattice_contains(lattices[j], lattices[i]))
        return false;
    }
  }
  return true;
}

namespace {

// neighbours of L in the chosen complex; skip_type < 0 means the T rules
std::vector<HermitianLattice> complex_neighbors(const HermitianLattice& L, int skip_type, int n,
                                                std::uint64_t budget) {
  std::set<HermitianLattice> out;
  std::vector<TypedLattice> subs = sub_vertex_lattices(L);
  for (const TypedLattice& s : subs) {
    if (s.type != skip_type && !(s.lattice == L)) out.insert(s.lattice);
  }
  for (const TypedLattice& s : super_vertex_lattices(L, budget)) {
    if (s.type != skip_type) out.insert(s.lattice);
  }
  if (skip_type >= 0 && vertex_type(L) == n) {
    // two maximal lattices are joined when they meet in the dropped type
    for (const TypedLattice& s : subs) {
      if (s.type != n - 2) continue;
      for (const TypedLattice& M : super_vertex_lattices(s.lattice, budget)) {
        if (M.type != n || M.lattice == L) continue;
        HermitianLattice X = lattice_intersection(L, M.lattice);
        if (is_vertex_lattice(X) && vertex_type(X) == n - 2) out.insert(M.lattice);
      }
    }
  }
  return std::vector<HermitianLattice>(out.begin(), out.end());
}

} // namespace

VertexComplexGraph build_ball(const HermitianLattice& center, int radius, ComplexKind kind,
                              std::uint64_t budget) {
  if (radius < 0) fail(ErrorKind::InvalidArgument, "negative radius");
  int t0 = vertex_type(center);
  int n = center.dim();
  bool lmode = kind == ComplexKind::L && n % 2 == 0 && classify_space(*center.space()).split;
  int skip_type = lmode ? n - 2 : -1;
  if (lmode && t0 == skip_type)
    fail(ErrorKind::InvalidArgument, "center node is dropped by this complex");

  VertexComplexGraph g;
  g.radius = radius;
  g.center = 0;
  std::map<HermitianLattice, std::size_t> index;

  auto add_node = [&](const HermitianLattice& L) {
    index.emplace(L, g.nodes.size());
    g.nodes.push_back({L, vertex_type(L)});
    if (g.nodes.size() > budget) fail(ErrorKind::SearchTooLarge, "ball exceeds the node budget");
  };

  add_node(center);
  std::vector<HermitianLattice> layer{center};
  for (int depth = 1; depth <= radius && !layer.empty(); ++depth) {
    std::set<HermitianLattice> next;
    for (const HermitianLattice& L : layer) {
      for (const HermitianLattice& N : complex_neighbors(L, skip_type, n, budget)) {
        if (index.find(N) == index.end()) next.insert(N);
      }
    }
    layer.assign(next.begin(), next.end());
    for (const HermitianLattice& L : layer) add_node(L);
  }

  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      const HermitianLattice& A = g.nodes[i].lattice;
      const HermitianLattice& B = g.nodes[j].lattice;
      if (lattice_contains(A, B) || lattice_contains(B, A)) {
        g.edges.push_back({i, j, EdgeKind::Inclusion});
      } else if (lmode && g.nodes[i].type == n && g.nodes[j].type == n) {
        HermitianLattice X = lattice_intersection(A, B);
        if (is_vertex_lattice(X) && vertex_type(X) == n - 2)
          g.edges.push_back({i, j, EdgeKind::TypeNIntersection});
      }
    }
  }
  return g;
}

std::string to_dot(const VertexComplexGraph& graph) {
  std::ostringstream os;
  os << "graph vertex_complex {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"type=" << graph.nodes[i].type << "\"";
    if (i == graph.center) os << ", peripheries=2";
    os << "];\n";
  }
  for (const VertexComplexGraph::Edge& e : graph.edges) {
    os << "  n" << e.a << " -- n" << e.b;
    if (e.kind == EdgeKind::TypeNIntersection) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace ramlat
