#pragma once
// Finite fields F_{p^k} with table-driven arithmetic, alternating F_p-spaces,
// echelonized subspaces of their F_{p^k} scalar extensions, Frobenius,
// isotropic enumeration, and symplectic quotients.
//
// Field elements are packed integers: the polynomial c_0 + c_1 x + ... packs
// to c_0 + c_1 p + c_2 p^2 + ...; the residue field embeds as the values
// 0..p-1.  The modulus is the lexicographically smallest monic irreducible
// of degree k, so a field is reproducible from (p, k) alone.

#include <cstdint>
#include <memory>
#include <vector>

#include "error.hpp"

namespace ramlat {

using FqElem = std::uint16_t;

class FqField {
public:
  // Builds F_{p^k}.  The table representation supports q = p^k up to 1024.
  FqField(std::uint64_t p, int k);

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // non-leading coefficients c_0..c_{k-1} of the modulus x^k + sum c_i x^i
  const std::vector<FqElem>& modulus() const { return modulus_; }

  FqElem add(FqElem x, FqElem y) const;
  FqElem sub(FqElem x, FqElem y) const;
  FqElem neg(FqElem x) const;
  FqElem mul(FqElem x, FqElem y) const { return mul_[static_cast<std::size_t>(x) * q_ + y]; }
  FqElem inv(FqElem x) const;
  FqElem frob(FqElem x) const { return frob_[x]; }
  // embeds a residue mod p
  FqElem from_residue(std::uint64_t r) const { return static_cast<FqElem>(r % p_); }
  bool in_prime_field(FqElem x) const { return x < p_; }

private:
  std::uint64_t p_;
  int k_;
  std::uint32_t q_;
  std::vector<FqElem> modulus_;
  std::vector<FqElem> mul_;
  std::vector<FqElem> inv_;
  std::vector<FqElem> frob_;
};

using FqFieldPtr = std::shared_ptr<const FqField>;

FqFieldPtr make_fq_field(std::uint64_t p, int k);

using FqVector = std::vector<FqElem>;
using FqRows = std::vector<FqVector>;

// A subspace of F_q^ambient held as its reduced row echelon basis, the unique
// canonical representative.  Value semantics: equality is representation
// equality.
class FqSubspace {
public:
  // canonicalizes arbitrary generators (zero rows dropped)
  FqSubspace(FqFieldPtr field, int ambient, const FqRows& generators);

  const FqFieldPtr& field() const { return field_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const FqRows& rows() const { return rows_; }
  std::vector<int> pivots() const;

  bool contains(const FqVector& v) const;
  bool contains(const FqSubspace& other) const;

  bool operator==(const FqSubspace& o) const;
  bool operator!=(const FqSubspace& o) const { return !(*this == o); }
  // orders by dim, then pivot columns, then row-major entries
  bool operator<(const FqSubspace& o) const;

private:
  FqFieldPtr field_;
  int ambient_;
  FqRows rows_;
};

// A nondegenerate alternating form on F_p^{2m}.
class SymplecticSpace {
public:
  SymplecticSpace(std::uint64_t p, int m, std::vector<std::vector<std::uint16_t>> gram);

  std::uint64_t p() const { return p_; }
  int m() const { return m_; }
  int dim() const { return 2 * m_; }
  const std::vector<std::vector<std::uint16_t>>& gram() const { return gram_; }

private:
  std::uint64_t p_;
  int m_;
  std::vector<std::vector<std::uint16_t>> gram_;
};

// <e_i, e_{2m+1-i}> = +1 for i <= m and -1 for i > m (1-based)
SymplecticSpace standard_symplectic_space(std::uint64_t p, int m);

// pairing of two F_q-vectors under the F_p gram matrix
FqElem symplectic_pairing(const SymplecticSpace& sp, const FqField& F, const FqVector& x,
                          const FqVector& y);

FqSubspace zero_subspace(FqFieldPtr field, int ambient);
FqSubspace full_subspace(FqFieldPtr field, int ambient);

// entry-wise p-th power of a basis, re-echelonized
FqSubspace frobenius(const FqSubspace& U);
// fixed by Frobenius, i.e. has an F_p basis
bool is_rational(const FqSubspace& U);

FqSubspace subspace_sum(const FqSubspace& U, const FqSubspace& W);
FqSubspace subspace_intersection(const FqSubspace& U, const FqSubspace& W);

// {v : <v, u> = 0 for all u in U}
FqSubspace perp(const SymplecticSpace& sp, const FqSubspace& U);
bool is_isotropic(const SymplecticSpace& sp, const FqSubspace& U);
bool is_lagrangian(const SymplecticSpace& sp, const FqSubspace& U);

// All j-dimensional subspaces of F_q^ambient in canonical order (pivot sets
// lexicographic, then row-major entries).  `budget` bounds the number of
// candidate echelon rows examined.
std::vector<FqSubspace> enumerate_subspaces(FqFieldPtr field, int ambient, int j,
                                            std::uint64_t budget);

// All j-dimensional subspaces of V x F_q on which the form vanishes, same
// order and budget convention as enumerate_subspaces.
std::vector<FqSubspace> enumerate_isotropic(const SymplecticSpace& sp, FqFieldPtr field, int j,
                                            std::uint64_t budget);

// The symplectic quotient W^perp / W by a rational isotropic subspace, with
// maps between subspaces of the quotient and subspaces in the band
// W <= U <= W^perp.  All map data is rational, so both maps commute with
// Frobenius.
class SymplecticQuotient {
public:
  SymplecticQuotient(const SymplecticSpace& outer, FqFieldPtr prime_field, FqSubspace w);

  const SymplecticSpace& space() const { return space_; }
  const FqSubspace& w() const { return w_; }
  int i() const { return space_.m(); }

  // image of a band subspace in the quotient; U must satisfy W <= U <= W^perp
  FqSubspace project(const FqSubspace& U) const;
  // preimage of a quotient subspace in the band
  FqSubspace lift(const FqSubspace& U) const;

private:
  SymplecticSpace outer_;
  SymplecticSpace space_;
  FqFieldPtr prime_field_;
  FqSubspace w_;          // over the prime field
  FqSubspace wperp_;      // over the prime field
  FqRows reps_;           // rational coset representatives spanning a complement of W in W^perp
  // solve data: coordinates of v in the row space of [W; reps] are
  // (v at pivot columns) * tmat, all rational
  std::vector<int> pivots_;
  FqRows tmat_;
};

SymplecticQuotient quotient_space(const SymplecticSpace& sp, const FqSubspace& W);

} // namespace ramlat
