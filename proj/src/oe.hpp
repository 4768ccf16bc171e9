#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "error.hpp"

// Exact arithmetic in the ramified quadratic extension of Z_p generated by a
// uniformizer pi with pi^2 = epsilon*p (p an odd prime, epsilon a unit).
// Elements are written a + b*pi with both components carried as residues
// mod p^N for a fixed digit count N.  Conventions used throughout:
//
//   conj(a + b*pi) = a - b*pi
//   val(pi) = 1, val(p) = 2          (pi-adic valuation)
//   Nm(x) = x*conj(x) = a^2 - epsilon*p*b^2,  Tr(x) = x + conj(x) = 2a
//
// Every element tracks how many p-adic digits of each component are still
// exact (`kprec`).  Multiplication and addition preserve the minimum of the
// operands' digit counts; division by pi-powers erodes it.  Stored residues
// are always reduced mod p^kprec so that equal values have equal bits.

namespace ramlat {

// Sentinel for "zero as far as the working precision can see".
inline constexpr int kValInfinity = 1 << 30;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);

struct FieldParams {
  std::uint64_t p = 0;
  int precision = 0;         // N: p-adic digits carried per component
  std::uint64_t epsilon = 0; // pi^2 = epsilon*p, unit mod p
  std::uint64_t pn = 0;      // p^precision

  FieldParams() = default;
  FieldParams(std::uint64_t p_, int precision_, std::uint64_t epsilon_ = 1);

  bool operator==(const FieldParams&) const = default;
  std::uint64_t pow_p(int k) const; // p^k for 0 <= k <= precision
};

class OEElement {
public:
  OEElement(const FieldParams& fp, std::uint64_t a, std::uint64_t b);

  static OEElement zero(const FieldParams& fp) { return OEElement(fp, 0, 0); }
  static OEElement one(const FieldParams& fp) { return OEElement(fp, 1, 0); }
  static OEElement pi(const FieldParams& fp) { return OEElement(fp, 0, 1); }
  static OEElement from_int(const FieldParams& fp, std::int64_t a, std::int64_t b = 0);
  // pi^e for e >= 0, exact.
  static OEElement pi_pow(const FieldParams& fp, int e);

  const FieldParams& params() const { return fp_; }
  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }
  int kprec() const { return kprec_; }
  bool exact() const { return kprec_ == fp_.precision; }

  // True when every stored digit is zero; the value is then indistinguishable
  // from 0 at the current precision.
  bool residue_zero() const { return a_ == 0 && b_ == 0; }
  bool is_exact_zero() const { return residue_zero() && exact(); }

  // min(2*val_p(a), 1 + 2*val_p(b)); kValInfinity when residue_zero().
  int valuation() const;

  // Largest v with "valuation >= v" certain at this precision: a residue
  // known only mod p^k may hide anything of valuation 2k or more.
  int val_lower_bound() const;

  OEElement operator+(const OEElement& o) const;
  OEElement operator-(const OEElement& o) const;
  OEElement operator-() const;
  OEElement operator*(const OEElement& o) const;
  OEElement conj() const;
  OEElement norm() const;  // Nm(x), b-component 0
  OEElement trace() const; // Tr(x), b-component 0

  // Ring inverse; requires valuation 0 (NotInvertible otherwise,
  // PrecisionExhausted when the residue vanishes below full precision).
  OEElement inv() const;

  // Multiply by pi^e (e of either sign).  Downward shifts must be exact at
  // the stored digits and drop ceil(|e|/2) digits of precision.
  OEElement shift_pi(int e) const;

  // Exact division: requires valuation(d) <= valuation(*this).
  OEElement div_exact(const OEElement& d) const;

  // Split off the canonical residue mod pi^e: rem has components reduced to
  // a < p^ceil(e/2), b < p^floor(e/2) and is certified exact; quot satisfies
  // *this = quot*pi^e + rem.  Requires kprec >= ceil(e/2).
  std::pair<OEElement, OEElement> divmod_pi_pow(int e) const;

  // Same element with precision truncated to k digits.
  OEElement truncated(int k) const;
  // Assert the stored residue is the exact value (used after canonical
  // reduction bounds the digit support).
  OEElement certified_exact() const;

  // Bitwise equality: same parameters, same precision, same residues.
  bool operator==(const OEElement& o) const = default;
  // Equality of the digits both sides know.
  bool congruent(const OEElement& o) const;

private:
  FieldParams fp_;
  std::uint64_t a_, b_;
  int kprec_;

  OEElement(const FieldParams& fp, std::uint64_t a, std::uint64_t b, int kprec);
  void reduce();
};

// Legendre test on the unit part: u is a norm from E iff its residue mod p
// is a nonzero square.  NotUnit when p | u.
bool is_norm(const FieldParams& fp, std::uint64_t u);

class OEMatrix {
public:
  OEMatrix(const FieldParams& fp, int rows, int cols);
  static OEMatrix identity(const FieldParams& fp, int n);

  const FieldParams& params() const { return fp_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  OEElement& at(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
  const OEElement& at(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

  OEMatrix operator*(const OEMatrix& o) const;
  OEMatrix operator+(const OEMatrix& o) const;
  OEMatrix operator-(const OEMatrix& o) const;
  OEMatrix conj_transpose() const;
  OEMatrix transpose() const;
  OEMatrix conj() const;
  OEMatrix shift_pi(int e) const; // entrywise
  OEMatrix scaled(const OEElement& c) const;

  // Minimum valuation over all entries; kValInfinity for the zero matrix.
  int min_valuation() const;
  // Minimum of the per-entry certain lower bounds; safe to divide by this.
  int min_val_lower_bound() const;
  bool residue_zero() const;

  bool operator==(const OEMatrix& o) const = default;

private:
  FieldParams fp_;
  int rows_, cols_;
  std::vector<OEElement> d_;
};

struct SNFResult {
  OEMatrix U, D, V;          // U*M*V = D
  std::vector<int> divisors; // D = diag(pi^divisors), nondecreasing
};

// Smith normal form over O_E for square nonsingular M.  Pivots are chosen by
// minimal valuation, ties by lowest (row, col).  Singular when M has no
// inverse at full precision, PrecisionExhausted when the pivot search dies
// on digits that are no longer known.
SNFResult smith_normal_form(const OEMatrix& M);

// Column-style Hermite form of a full-row-rank n x m generator matrix
// (m >= n): returns the unique upper-triangular square basis with diagonal
// pi^{a_i} and off-pivot entries reduced to canonical residues, paired with
// the adjusted scale.  The pair (basis, scale) is normalized so the basis is
// not entirely divisible by pi; its entries are certified exact, so equal
// column spans yield bitwise-equal results.
std::pair<OEMatrix, int> hermite_canonical(const OEMatrix& B, int scale);

// M^{-1} = pi^{-e} * K with K integral, e = val(det M).
std::pair<OEMatrix, int> inverse_with_denominator(const OEMatrix& M);

// Determinant by fraction-free elimination with minimal-valuation pivoting.
OEElement determinant(const OEMatrix& M);

} // namespace ramlat
