#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermitian.hpp"

// The simplicial complexes of vertex lattices, exposed through finite
// balls: sub- and super-lattice enumeration, the simplex predicate, a
// breadth-first ball builder for two neighbour rules, and DOT export.

namespace ramlat {

enum class ComplexKind { T, L };

enum class EdgeKind { Inclusion, TypeNIntersection };

struct TypedLattice {
  HermitianLattice lattice;
  int type = 0;
};

// All vertex lattices contained in L, as preimages of the perps of the
// rational isotropic subspaces of L / L^dual; a subspace of dimension
// t/2 - i yields a lattice of type 2i.  Includes L itself; sorted by
// canonical form.
std::vector<TypedLattice> sub_vertex_lattices(const HermitianLattice& L);

// All vertex lattices strictly containing L.  Candidates are the lifts of
// the nonzero F_p-subspaces of pi^{-1} L^dual / L, filtered through the
// vertex predicate; sorted by canonical form.  The budget bounds both
// p^(n - t) and the number of candidate lifts.
std::vector<TypedLattice> super_vertex_lattices(const HermitianLattice& L,
                                                std::uint64_t budget = 100000);

// True when the lattices can be arranged into a single inclusion chain,
// i.e. they are pairwise comparable.
bool is_simplex(const std::vector<HermitianLattice>& lattices);

struct VertexComplexGraph {
  struct Node {
    HermitianLattice lattice;
    int type = 0;
  };
  struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    EdgeKind kind = EdgeKind::Inclusion;
  };
  std::vector<Node> nodes; // breadth-first layers, each layer sorted
  std::vector<Edge> edges; // sorted by (a, b); a < b
  std::size_t center = 0;  // index into nodes
  int radius = 0;
};

// Ball of the given radius around a vertex lattice.  Kind T uses all
// comparable vertex lattices as neighbours.  Kind L, in a split space of
// even dimension n, keeps only lattices of type != n-2 and joins two
// type-n lattices when their intersection is a vertex lattice of type
// n-2; in every other space it coincides with T.
VertexComplexGraph build_ball(const HermitianLattice& center, int radius, ComplexKind kind,
                              std::uint64_t budget = 100000);

// Graphviz text: one node statement per node labelled with its type, one
// edge statement per edge; byte-identical across runs on equal graphs.
std::string to_dot(const VertexComplexGraph& graph);

} // namespace ramlat
