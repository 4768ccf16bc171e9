#include "oe.hpp"

#include <algorithm>
#include <string>

namespace ramlat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 x, u64 y, u64 m) { return static_cast<u64>(u128(x) * y % m); }

int val_p(u64 x, u64 p) {
  // caller guarantees x != 0
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

} // namespace

u64 mod_pow(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 m) {
  // extended Euclid; a must be a unit mod m
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) fail(ErrorKind::NotInvertible, "mod_inv: argument is not a unit");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<u64>(t);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % d == 0) return n == d;
  }
  for (u64 d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldParams::FieldParams(u64 p_, int precision_, u64 epsilon_)
    : p(p_), precision(precision_), epsilon(epsilon_) {
  if (p < 3 || !is_prime_u64(p)) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (precision < 1 || precision > 32)
    fail(ErrorKind::InvalidArgument, "precision must be between 1 and 32");
  pn = 1;
  for (int i = 0; i < precision; ++i) {
    if (pn > (u64(1) << 62) / p)
      fail(ErrorKind::InvalidArgument, "p^precision exceeds the 62-bit working range");
    pn *= p;
  }
  epsilon %= pn;
  if (epsilon % p == 0) fail(ErrorKind::InvalidArgument, "epsilon must be a unit");
}

u64 FieldParams::pow_p(int k) const {
  if (k < 0 || k > precision) fail(ErrorKind::Internal, "pow_p: exponent out of range");
  u64 r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

OEElement::OEElement(const FieldParams& fp, u64 a, u64 b) : OEElement(fp, a, b, fp.precision) {}

OEElement::OEElement(const FieldParams& fp, u64 a, u64 b, int kprec)
    : fp_(fp), a_(a), b_(b), kprec_(kprec) {
  if (fp_.pn == 0) fail(ErrorKind::InvalidArgument, "uninitialized field parameters");
  reduce();
}

void OEElement::reduce() {
  u64 m = fp_.pow_p(kprec_);
  if (m == 1) {
    a_ = b_ = 0;
    return;
  }
  a_ %= m;
  b_ %= m;
}

OEElement OEElement::from_int(const FieldParams& fp, std::int64_t a, std::int64_t b) {
  const auto lift = [&fp](std::int64_t v) -> u64 {
    std::int64_t m = static_cast<std::int64_t>(fp.pn);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
  };
  return OEElement(fp, lift(a), lift(b));
}

OEElement OEElement::pi_pow(const FieldParams& fp, int e) {
  if (e < 0) fail(ErrorKind::Internal, "pi_pow: negative exponent");
  OEElement r = one(fp);
  return r.shift_pi(e);
}

int OEElement::valuation() const {
  if (residue_zero()) return kValInfinity;
  int va = a_ == 0 ? kValInfinity : 2 * val_p(a_, fp_.p);
  int vb = b_ == 0 ? kValInfinity : 2 * val_p(b_, fp_.p) + 1;
  return std::min(va, vb);
}

int OEElement::val_lower_bound() const {
  if (!residue_zero()) return valuation();
  return exact() ? kValInfinity : 2 * kprec_;
}

namespace {
void check_compatible(const FieldParams& x, const FieldParams& y) {
  if (!(x == y)) fail(ErrorKind::InvalidArgument, "mixed field parameters");
}
} // namespace

OEElement OEElement::operator+(const OEElement& o) const {
  check_compatible(fp_, o.fp_);
  int k = std::min(kprec_, o.kprec_);
  return OEElement(fp_, a_ + o.a_, b_ + o.b_, k);
}

OEElement OEElement::operator-(const OEElement& o) const {
  check_compatible(fp_, o.fp_);
  int k = std::min(kprec_, o.kprec_);
  u64 m = fp_.pow_p(k);
  return OEElement(fp_, a_ + m - o.a_ % m, b_ + m - o.b_ % m, k);
}

OEElement OEElement::operator-() const {
  u64 m = fp_.pow_p(kprec_);
  return OEElement(fp_, m - a_, m - b_, kprec_);
}

OEElement OEElement::operator*(const OEElement& o) const {
  check_compatible(fp_, o.fp_);
  int k = std::min(kprec_, o.kprec_);
  u64 m = fp_.pow_p(k);
  if (m == 1) return OEElement(fp_, 0, 0, k);
  // (a1 + b1 pi)(a2 + b2 pi) = a1 a2 + eps p b1 b2 + (a1 b2 + b1 a2) pi
  u64 ep = mul_mod(fp_.epsilon % m, fp_.p % m, m);
  u64 a = (mul_mod(a_ % m, o.a_ % m, m) + mul_mod(ep, mul_mod(b_ % m, o.b_ % m, m), m)) % m;
  u64 b = (mul_mod(a_ % m, o.b_ % m, m) + mul_mod(b_ % m, o.a_ % m, m)) % m;
  return OEElement(fp_, a, b, k);
}

OEElement OEElement::conj() const {
  u64 m = fp_.pow_p(kprec_);
  return OEElement(fp_, a_, m - b_, kprec_);
}

OEElement OEElement::norm() const { return *this * conj(); }

OEElement OEElement::trace() const { return *this + conj(); }

OEElement OEElement::inv() const {
  int v = valuation();
  if (v == kValInfinity) {
    if (exact()) fail(ErrorKind::NotInvertible, "inv: zero element");
    fail(ErrorKind::PrecisionExhausted, "inv: residue vanishes at working precision");
  }
  if (v != 0) fail(ErrorKind::NotInvertible, "inv: element is not a unit");
  // x^{-1} = conj(x) / Nm(x) with Nm(x) a unit of Z_p
  OEElement nm = norm();
  u64 m = fp_.pow_p(kprec_);
  u64 ninv = mod_inv(nm.a_ % m, m);
  OEElement c = conj();
  return OEElement(fp_, mul_mod(c.a_ % m, ninv, m), mul_mod(c.b_ % m, ninv, m), kprec_);
}

OEElement OEElement::shift_pi(int e) const {
  if (e == 0) return *this;
  if (e > 0) {
    OEElement r = *this;
    int up = e / 2;
    if (up > 0) {
      // multiply by p^up: digits shift upward and stay exact
      int k = std::min(fp_.precision, r.kprec_ + up);
      u64 m = fp_.pow_p(k);
      u64 f = fp_.pow_p(std::min(up, k));
      r = OEElement(fp_, mul_mod(r.a_ % m, f % m, m), mul_mod(r.b_ % m, f % m, m), k);
    }
    if (e & 1) {
      // multiply by pi: (a + b pi) pi = eps p b + a pi
      int k = r.kprec_;
      u64 m = fp_.pow_p(k);
      u64 ep = m == 1 ? 0 : mul_mod(fp_.epsilon % m, fp_.p % m, m);
      r = OEElement(fp_, m == 1 ? 0 : mul_mod(ep, r.b_ % m, m), r.a_ % m, k);
    }
    return r;
  }
  // downward shift: must be exact on the stored digits
  int down = -e;
  OEElement r = *this;
  if (down & 1) {
    // divide by pi: (a + b pi)/pi = b + (a/p) eps^{-1} pi
    if (r.kprec_ < 1) fail(ErrorKind::PrecisionExhausted, "shift_pi: no digits left");
    if (r.a_ % fp_.p != 0) fail(ErrorKind::Internal, "shift_pi: inexact division by pi");
    int k = r.kprec_ - 1;
    if (k < 1) fail(ErrorKind::PrecisionExhausted, "shift_pi: precision exhausted");
    u64 m = fp_.pow_p(k);
    u64 einv = mod_inv(fp_.epsilon % m, m);
    r = OEElement(fp_, r.b_ % m, mul_mod((r.a_ / fp_.p) % m, einv, m), k);
  }
  int dw = down / 2;
  if (dw > 0) {
    u64 f = fp_.pow_p(std::min(dw, fp_.precision));
    if (r.a_ % f != 0 || r.b_ % f != 0)
      fail(ErrorKind::Internal, "shift_pi: inexact division by p");
    int k = r.kprec_ - dw;
    if (k < 1) fail(ErrorKind::PrecisionExhausted, "shift_pi: precision exhausted");
    r = OEElement(fp_, r.a_ / f, r.b_ / f, k);
  }
  return r;
}

OEElement OEElement::div_exact(const OEElement& d) const {
  check_compatible(fp_, d.fp_);
  int vd = d.valuation();
  if (vd == kValInfinity) {
    if (d.exact()) fail(ErrorKind::NotInvertible, "div_exact: division by zero");
    fail(ErrorKind::PrecisionExhausted, "div_exact: divisor vanishes at working precision");
  }
  if (!residue_zero() && valuation() < vd)
    fail(ErrorKind::Internal, "div_exact: quotient not integral");
  OEElement unit = d.shift_pi(-vd);
  return shift_pi(-vd) * unit.inv();
}

std::pair<OEElement, OEElement> OEElement::divmod_pi_pow(int e) const {
  if (e < 0) fail(ErrorKind::Internal, "divmod_pi_pow: negative modulus exponent");
  int ca = (e + 1) / 2, cb = e / 2;
  if (kprec_ < ca)
    fail(ErrorKind::PrecisionExhausted, "divmod_pi_pow: canonical residue not certified");
  u64 ma = fp_.pow_p(ca), mb = fp_.pow_p(cb);
  OEElement rem(fp_, a_ % ma, b_ % mb, fp_.precision);
  OEElement quot = (*this - rem).shift_pi(-e);
  return {quot, rem};
}

OEElement OEElement::truncated(int k) const {
  if (k < 0 || k > fp_.precision) fail(ErrorKind::Internal, "truncated: bad digit count");
  return OEElement(fp_, a_, b_, std::min(k, kprec_));
}

OEElement OEElement::certified_exact() const { return OEElement(fp_, a_, b_, fp_.precision); }

bool OEElement::congruent(const OEElement& o) const {
  check_compatible(fp_, o.fp_);
  int k = std::min(kprec_, o.kprec_);
  u64 m = fp_.pow_p(k);
  return a_ % m == o.a_ % m && b_ % m == o.b_ % m;
}

bool is_norm(const FieldParams& fp, u64 u) {
  if (u % fp.p == 0) fail(ErrorKind::NotUnit, "is_norm: argument is divisible by p");
  return mod_pow(u % fp.p, (fp.p - 1) / 2, fp.p) == 1;
}

OEMatrix::OEMatrix(const FieldParams& fp, int rows, int cols)
    : fp_(fp), rows_(rows), cols_(cols),
      d_(static_cast<std::size_t>(rows) * cols, OEElement::zero(fp)) {
  if (rows < 1 || cols < 1) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
}

OEMatrix OEMatrix::identity(const FieldParams& fp, int n) {
  OEMatrix m(fp, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = OEElement::one(fp);
  return m;
}

OEMatrix OEMatrix::operator*(const OEMatrix& o) const {
  check_compatible(fp_, o.fp_);
  if (cols_ != o.rows_) fail(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  OEMatrix r(fp_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      OEElement s = OEElement::zero(fp_);
      for (int k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

OEMatrix OEMatrix::operator+(const OEMatrix& o) const {
  check_compatible(fp_, o.fp_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::InvalidArgument, "matrix sum shape mismatch");
  OEMatrix r(fp_, rows_, cols_);
  for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
  return r;
}

OEMatrix OEMatrix::operator-(const OEMatrix& o) const {
  check_compatible(fp_, o.fp_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::InvalidArgument, "matrix difference shape mismatch");
  OEMatrix r(fp_, rows_, cols_);
  for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] - o.d_[i];
  return r;
}

OEMatrix OEMatrix::conj_transpose() const {
  OEMatrix r(fp_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

OEMatrix OEMatrix::transpose() const {
  OEMatrix r(fp_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

OEMatrix OEMatrix::conj() const {
  OEMatrix r(fp_, rows_, cols_);
  for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i].conj();
  return r;
}

OEMatrix OEMatrix::shift_pi(int e) const {
  OEMatrix r(fp_, rows_, cols_);
  for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i].shift_pi(e);
  return r;
}

OEMatrix OEMatrix::scaled(const OEElement& c) const {
  OEMatrix r(fp_, rows_, cols_);
  for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] * c;
  return r;
}

int OEMatrix::min_valuation() const {
  int v = kValInfinity;
  for (const auto& x : d_) v = std::min(v, x.valuation());
  return v;
}

int OEMatrix::min_val_lower_bound() const {
  int v = kValInfinity;
  for (const auto& x : d_) v = std::min(v, x.val_lower_bound());
  return v;
}

bool OEMatrix::residue_zero() const {
  for (const auto& x : d_) {
    if (!x.residue_zero()) return false;
  }
  return true;
}

namespace {

// Pivot search over the active block; returns false when every candidate
// residue is zero.  `exhausted` reports whether any of those zero residues
// sits below full precision (so the search may merely be out of digits).
bool find_pivot(const OEMatrix& M, int i0, int j0, int& pr, int& pc, bool& exhausted) {
  int best = kValInfinity;
  exhausted = false;
  pr = pc = -1;
  for (int r = i0; r < M.rows(); ++r) {
    for (int c = j0; c < M.cols(); ++c) {
      const OEElement& x = M.at(r, c);
      if (x.residue_zero()) {
        if (!x.exact()) exhausted = true;
        continue;
      }
      int v = x.valuation();
      if (v < best) {
        best = v;
        pr = r;
        pc = c;
      }
    }
  }
  return pr >= 0;
}

void swap_rows(OEMatrix& M, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
}

void swap_cols(OEMatrix& M, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
}

} // namespace

SNFResult smith_normal_form(const OEMatrix& M) {
  if (M.rows() != M.cols()) fail(ErrorKind::InvalidArgument, "smith_normal_form: square input required");
  const FieldParams& fp = M.params();
  int n = M.rows();
  OEMatrix U = OEMatrix::identity(fp, n);
  OEMatrix V = OEMatrix::identity(fp, n);
  OEMatrix D = M;
  std::vector<int> divisors;

  for (int i = 0; i < n; ++i) {
    int pr, pc;
    bool exhausted;
    if (!find_pivot(D, i, i, pr, pc, exhausted)) {
      if (exhausted)
        fail(ErrorKind::PrecisionExhausted, "smith_normal_form: pivot lost to precision");
      fail(ErrorKind::Singular, "smith_normal_form: matrix is singular");
    }
    swap_rows(D, i, pr);
    swap_rows(U, i, pr);
    swap_cols(D, i, pc);
    swap_cols(V, i, pc);

    // clear the column below the pivot, then the row to its right
    for (int r = i + 1; r < n; ++r) {
      if (D.at(r, i).residue_zero()) continue;
      OEElement f = D.at(r, i).div_exact(D.at(i, i));
      for (int j = 0; j < n; ++j) {
        D.at(r, j) = D.at(r, j) - f * D.at(i, j);
        U.at(r, j) = U.at(r, j) - f * U.at(i, j);
      }
    }
    for (int c = i + 1; c < n; ++c) {
      if (D.at(i, c).residue_zero()) continue;
      OEElement f = D.at(i, c).div_exact(D.at(i, i));
      for (int j = 0; j < n; ++j) {
        D.at(j, c) = D.at(j, c) - f * D.at(j, i);
        V.at(j, c) = V.at(j, c) - f * V.at(j, i);
      }
    }

    // normalize the pivot to an exact power of pi via a row scaling
    int a = D.at(i, i).valuation();
    OEElement uinv = D.at(i, i).shift_pi(-a).inv();
    for (int j = 0; j < n; ++j) {
      D.at(i, j) = D.at(i, j) * uinv;
      U.at(i, j) = U.at(i, j) * uinv;
    }
    D.at(i, i) = OEElement::pi_pow(fp, a);
    for (int j = 0; j < n; ++j) {
      if (j != i) {
        D.at(i, j) = OEElement::zero(fp);
        D.at(j, i) = OEElement::zero(fp);
      }
    }
    divisors.push_back(a);
  }
  return SNFResult{U, D, V, divisors};
}

std::pair<OEMatrix, int> hermite_canonical(const OEMatrix& B, int scale) {
  const FieldParams& fp = B.params();
  int n = B.rows(), m = B.cols();
  if (m < n) fail(ErrorKind::RankDeficient, "hermite_canonical: fewer generators than rank");
  OEMatrix H = B;

  // Strip a shared pi factor before any elimination; paying for the division
  // once here is far cheaper than letting it inflate every pivot below.  The
  // certain lower bound keeps low-precision zeros from being over-divided.
  int d0 = H.min_val_lower_bound();
  if (d0 > 0 && d0 < kValInfinity) {
    H = H.shift_pi(-d0);
    scale -= d0;
  }

  // Column elimination working up from the bottom row; the pivot column for
  // row i lands at position hi-1, so the pivot block ends upper triangular
  // at the right edge.  Active columns (< hi) keep zeros in rows below i.
  int hi = m;
  for (int i = n - 1; i >= 0; --i) {
    int best = kValInfinity, pc = -1;
    bool exhausted = false;
    for (int c = 0; c < hi; ++c) {
      const OEElement& x = H.at(i, c);
      if (x.residue_zero()) {
        if (!x.exact()) exhausted = true;
        continue;
      }
      int v = x.valuation();
      if (v < best) {
        best = v;
        pc = c;
      }
    }
    if (pc < 0) {
      if (exhausted)
        fail(ErrorKind::PrecisionExhausted, "hermite_canonical: pivot lost to precision");
      fail(ErrorKind::RankDeficient, "hermite_canonical: generators do not have full rank");
    }
    swap_cols(H, pc, hi - 1);
    // normalize the pivot column so the pivot is an exact power of pi
    OEElement uinv = H.at(i, hi - 1).shift_pi(-best).inv();
    for (int r = 0; r <= i; ++r) H.at(r, hi - 1) = H.at(r, hi - 1) * uinv;
    H.at(i, hi - 1) = OEElement::pi_pow(fp, best);
    for (int c = 0; c < hi - 1; ++c) {
      if (H.at(i, c).residue_zero()) continue;
      OEElement f = H.at(i, c).shift_pi(-best);
      for (int r = 0; r <= i; ++r) H.at(r, c) = H.at(r, c) - f * H.at(r, hi - 1);
      H.at(i, c) = OEElement::zero(fp);
    }
    --hi;
  }

  // keep the n pivot columns
  OEMatrix T(fp, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T.at(i, j) = H.at(i, m - n + j);

  // strip any remaining common pi factor into the scale
  int d = T.min_val_lower_bound();
  if (d > 0 && d < kValInfinity) {
    T = T.shift_pi(-d);
    scale -= d;
    for (int i = 0; i < n; ++i) {
      int a = T.at(i, i).valuation();
      T.at(i, i) = OEElement::pi_pow(fp, a);
    }
  }

  // reduce above-pivot entries to canonical residues; sweep columns left to
  // right, inside each column bottom-up so finished rows stay put
  for (int j = 1; j < n; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      int a = T.at(i, i).valuation();
      auto [q, r] = T.at(i, j).divmod_pi_pow(a);
      if (!q.residue_zero()) {
        for (int t = 0; t < i; ++t) T.at(t, j) = T.at(t, j) - q * T.at(t, i);
      }
      T.at(i, j) = r;
    }
  }

  // entries now have digit support inside their certified precision
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T.at(i, j) = T.at(i, j).certified_exact();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) T.at(i, j) = OEElement::zero(fp);

  return {T, scale};
}

std::pair<OEMatrix, int> inverse_with_denominator(const OEMatrix& M) {
  if (M.rows() != M.cols())
    fail(ErrorKind::InvalidArgument, "inverse_with_denominator: square input required");
  SNFResult s = smith_normal_form(M);
  const FieldParams& fp = M.params();
  int n = M.rows();
  int e = 0;
  for (int a : s.divisors) e += a;
  // M^{-1} = V D^{-1} U, so pi^e M^{-1} = V diag(pi^{e-a_i}) U
  OEMatrix mid(fp, n, n);
  for (int i = 0; i < n; ++i) mid.at(i, i) = OEElement::pi_pow(fp, e - s.divisors[i]);
  return {s.V * mid * s.U, e};
}

OEElement determinant(const OEMatrix& M) {
  if (M.rows() != M.cols()) fail(ErrorKind::InvalidArgument, "determinant: square input required");
  const FieldParams& fp = M.params();
  int n = M.rows();
  OEMatrix A = M;
  OEElement det = OEElement::one(fp);
  bool negate = false;
  for (int i = 0; i < n; ++i) {
    int pr, pc;
    bool exhausted;
    if (!find_pivot(A, i, i, pr, pc, exhausted)) {
      if (exhausted) fail(ErrorKind::PrecisionExhausted, "determinant: pivot lost to precision");
      return OEElement::zero(fp);
    }
    if (pr != i) negate = !negate;
    if (pc != i) negate = !negate;
    swap_rows(A, i, pr);
    swap_cols(A, i, pc);
    for (int r = i + 1; r < n; ++r) {
      if (A.at(r, i).residue_zero()) continue;
      OEElement f = A.at(r, i).div_exact(A.at(i, i));
      for (int j = i; j < n; ++j) A.at(r, j) = A.at(r, j) - f * A.at(i, j);
    }
    det = det * A.at(i, i);
  }
  return negate ? -det : det;
}

} // namespace ramlat
