#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "oe.hpp"

// Hermitian spaces over the ramified quadratic extension and their O_E
// lattices.  The form is linear in the first argument and conjugate-linear
// in the second:  (x, y) = x^T G conj(y)  with a fixed hermitian Gram matrix
// G = G^dagger over O_E.  A lattice is stored as pi^{-scale} times the
// column span of an integral basis, kept in Hermite canonical form so that
// equal lattices have bitwise-equal representations.

namespace ramlat {

enum class SpaceVariant { split_even, non_split_even, odd_dim };

const char* variant_name(SpaceVariant v);
SpaceVariant variant_from_name(const std::string& name);

class HermitianSpace;
using SpacePtr = std::shared_ptr<const HermitianSpace>;

class HermitianSpace {
public:
  // Validates that gram is square, hermitian and nonsingular.
  HermitianSpace(const FieldParams& fp, const OEMatrix& gram);

  const FieldParams& params() const { return fp_; }
  int dim() const { return n_; }
  const OEMatrix& gram() const { return gram_; }

  // Set only for spaces produced by standard_space.
  std::optional<SpaceVariant> standard_variant() const { return variant_; }

  bool operator==(const HermitianSpace& o) const {
    return fp_ == o.fp_ && n_ == o.n_ && gram_ == o.gram_;
  }

private:
  friend SpacePtr standard_space(const FieldParams&, int, SpaceVariant);
  FieldParams fp_;
  int n_;
  OEMatrix gram_;
  std::optional<SpaceVariant> variant_;
};

// The three reference presentations: hyperbolic planes for split_even, a
// final diagonal block diag(u1, u2) with -u1*u2 a non-norm for
// non_split_even (u1, u2 the lexicographically smallest such pair), and
// hyperbolic planes plus a unit line for odd_dim.
SpacePtr standard_space(const FieldParams& fp, int n, SpaceVariant variant);

struct SpaceClass {
  bool split = false;
  // residue mod p of the discriminant unit, normalized so that `split`
  // holds exactly when it is a square
  std::uint64_t disc_unit = 0;
};

// Norm-class of (-1)^{n(n-1)/2} det(gram).
SpaceClass classify_space(const HermitianSpace& space);

// Largest type of a vertex lattice in the space: n or n-2 for even n
// according to the classification, n-1 for odd n.
int max_vertex_type(const HermitianSpace& space);

class HermitianLattice {
public:
  // pi^{-scale} times the column span of `generators` (n x m, m >= n, full
  // rank).  The representation is canonicalized on construction.
  HermitianLattice(SpacePtr space, const OEMatrix& generators, int scale);

  const SpacePtr& space() const { return space_; }
  const OEMatrix& basis() const { return basis_; }
  int scale() const { return scale_; }
  int dim() const { return basis_.rows(); }

  // pi^e * lattice
  HermitianLattice scaled_by_pi(int e) const;

  // val det(basis) - n * scale; lattice_index is a difference of these
  int index_offset() const;

  std::vector<std::uint64_t> canonical_key() const;
  bool operator==(const HermitianLattice& o) const;
  bool operator<(const HermitianLattice& o) const;

private:
  SpacePtr space_;
  OEMatrix basis_;
  int scale_;
};

// (x, y) = x^T G conj(y) for integral coordinate columns x, y.
OEElement sesquilinear(const HermitianSpace& space, const OEMatrix& x, const OEMatrix& y);

// pi-coefficient of (x, y): the alternating Q_p-bilinear form, here
// evaluated on integral vectors so the value lands in Z_p.
OEElement alternating_form(const HermitianSpace& space, const OEMatrix& x, const OEMatrix& y);

// {x : (x, L) integral}
HermitianLattice dual_lattice(const HermitianLattice& L);

bool lattice_contains(const HermitianLattice& outer, const HermitianLattice& inner);

// Signed F_p-length [L : M]; additive in chains and antisymmetric.
std::int64_t lattice_index(const HermitianLattice& L, const HermitianLattice& M);

HermitianLattice lattice_sum(const HermitianLattice& L, const HermitianLattice& M);
HermitianLattice lattice_intersection(const HermitianLattice& L, const HermitianLattice& M);

// dim_{F_p}(L / L^dual) for lattices with pi L <= L^dual <= L; NotVertex
// (naming the failing inclusion) otherwise.
int vertex_type(const HermitianLattice& L);

bool is_vertex_lattice(const HermitianLattice& L);

// Intersection of two vertex lattices, tested for being a vertex lattice.
bool is_vertex_intersection(const HermitianLattice& L1, const HermitianLattice& L2);

// Standard vertex lattice of type t inside a standard space: replaces e_i
// by pi^{-1} e_i at the first t/2 hyperbolic blocks.  TypeUnavailable when
// t is odd, negative, or exceeds max_vertex_type.
HermitianLattice standard_vertex_lattice(SpacePtr space, int t);

// Basis of `outer` adapted to a sublattice: for inner <= outer with
// pi * outer <= inner, outer = span{f_i} and inner = span{pi^{e_i} f_i}
// with every e_i in {0, 1}.  Columns are taken at `scale`, so the classes
// of the f_i with e_i = 1 form an F_p-basis of outer / inner.
struct AdaptedBasis {
  OEMatrix f_basis;
  int scale;
  std::vector<int> exponents;
};

AdaptedBasis adapted_basis(const HermitianLattice& outer, const HermitianLattice& inner);

// The quotient V = L / L^dual of a vertex lattice, an F_p-symplectic space
// of dimension t carrying the reduction of p * <,>.  Keeps the adapted
// basis so subspaces of V can be pulled back to lattices.
class InducedSymplectic {
public:
  InducedSymplectic(HermitianLattice lattice, HermitianLattice dual, OEMatrix f_basis,
                    std::vector<int> pivot_exponents);

  const HermitianLattice& lattice() const { return lattice_; }
  const HermitianLattice& dual() const { return dual_; }
  int t() const { return t_; }
  std::uint64_t p() const { return lattice_.space()->params().p; }
  // t x t alternating Gram matrix over F_p
  const std::vector<std::vector<std::uint64_t>>& gram() const { return gram_; }

  // Preimage in L of the span of the given coordinate rows (length-t F_p
  // vectors); always a lattice between L^dual and L.
  HermitianLattice preimage(const std::vector<std::vector<std::uint64_t>>& rows) const;

  // V-coordinates of the basis columns of M, for L^dual <= M <= L.  Rows
  // span the image of M in V but are not reduced to echelon form.
  std::vector<std::vector<std::uint64_t>> image_coords(const HermitianLattice& M) const;

private:
  HermitianLattice lattice_, dual_;
  OEMatrix f_basis_;
  std::vector<int> a_;
  int t_;
  std::vector<int> v_cols_;
  std::vector<std::vector<std::uint64_t>> gram_;
};

InducedSymplectic induced_symplectic_space(const HermitianLattice& L);

} // namespace ramlat
