#include "fq.hpp"

#include <algorithm>

#include "oe.hpp"

namespace ramlat {

namespace {

constexpr std::uint32_t kMaxQ = 1024;

// packed-polynomial addition: digit-wise mod p
FqElem poly_add(std::uint64_t p, int k, FqElem x, FqElem y) {
  FqElem out = 0;
  std::uint32_t mul = 1;
  for (int i = 0; i < k; ++i) {
    std::uint32_t d = (x % p + y % p) % p;
    out = static_cast<FqElem>(out + d * mul);
    x = static_cast<FqElem>(x / p);
    y = static_cast<FqElem>(y / p);
    mul *= static_cast<std::uint32_t>(p);
  }
  return out;
}

FqElem poly_neg(std::uint64_t p, int k, FqElem x) {
  FqElem out = 0;
  std::uint32_t mul = 1;
  for (int i = 0; i < k; ++i) {
    std::uint32_t d = (p - x % p) % p;
    out = static_cast<FqElem>(out + d * mul);
    x = static_cast<FqElem>(x / p);
    mul *= static_cast<std::uint32_t>(p);
  }
  return out;
}

// multiplication of coefficient vectors modulo x^k + modulus(x)
std::vector<std::uint32_t> poly_mul_mod(std::uint64_t p, int k,
                                        const std::vector<FqElem>& modulus,
                                        const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 2; d >= k; --d) {
    std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = -modulus(x) * x^{d-k} mod (x^k + modulus)
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + c * ((p - modulus[i]) % p)) % p;
  }
  prod.resize(k);
  return prod;
}

std::vector<std::uint32_t> unpack(std::uint64_t p, int k, FqElem x) {
  std::vector<std::uint32_t> c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = x % p;
    x = static_cast<FqElem>(x / p);
  }
  return c;
}

FqElem pack(std::uint64_t p, int k, const std::vector<std::uint32_t>& c) {
  std::uint32_t out = 0, mul = 1;
  for (int i = 0; i < k; ++i) {
    out += c[i] % p * mul;
    mul *= static_cast<std::uint32_t>(p);
  }
  return static_cast<FqElem>(out);
}

// divisibility test for packed monic polynomials: does d(x) divide f(x)?
// f given by coefficient vector (degree deg_f, monic), d likewise.
bool monic_divides(std::uint64_t p, std::vector<std::uint32_t> f,
                   const std::vector<std::uint32_t>& d) {
  int deg_f = static_cast<int>(f.size()) - 1;
  int deg_d = static_cast<int>(d.size()) - 1;
  for (int sh = deg_f - deg_d; sh >= 0; --sh) {
    std::uint32_t c = f[sh + deg_d];
    if (c == 0) continue;
    for (int i = 0; i <= deg_d; ++i) f[sh + i] = (f[sh + i] + c * ((p - d[i]) % p)) % p;
  }
  for (int i = 0; i < deg_d; ++i)
    if (f[i] != 0) return false;
  return true;
}

// lexicographically smallest monic irreducible of degree k over F_p,
// returned as its non-leading coefficients c_0..c_{k-1}
std::vector<FqElem> smallest_irreducible(std::uint64_t p, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t enc = 0; enc < count; ++enc) {
    std::vector<std::uint32_t> f(k + 1, 0);
    std::uint64_t e = enc;
    for (int i = 0; i < k; ++i) {
      f[i] = e % p;
      e /= p;
    }
    f[k] = 1;
    // trial division by every monic divisor candidate of degree 1..k/2
    bool irreducible = true;
    for (int dd = 1; irreducible && 2 * dd <= k; ++dd) {
      std::uint64_t dcount = 1;
      for (int i = 0; i < dd; ++i) dcount *= p;
      for (std::uint64_t denc = 0; denc < dcount; ++denc) {
        std::vector<std::uint32_t> d(dd + 1, 0);
        std::uint64_t de = denc;
        for (int i = 0; i < dd; ++i) {
          d[i] = de % p;
          de /= p;
        }
        d[dd] = 1;
        if (monic_divides(p, f, d)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) {
      std::vector<FqElem> out(k);
      for (int i = 0; i < k; ++i) out[i] = static_cast<FqElem>(f[i]);
      return out;
    }
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");
}

} // namespace

FqField::FqField(std::uint64_t p, int k) : p_(p), k_(k) {
  if (!is_prime_u64(p)) fail(ErrorKind::InvalidArgument, "field characteristic must be prime");
  if (k < 1) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxQ) fail(ErrorKind::InvalidArgument, "field size exceeds the table bound 1024");
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = smallest_irreducible(p, k);

  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (std::uint32_t x = 0; x < q_; ++x) {
    auto cx = unpack(p_, k_, static_cast<FqElem>(x));
    for (std::uint32_t y = x; y < q_; ++y) {
      auto cy = unpack(p_, k_, static_cast<FqElem>(y));
      FqElem v = pack(p_, k_, poly_mul_mod(p_, k_, modulus_, cx, cy));
      mul_[static_cast<std::size_t>(x) * q_ + y] = v;
      mul_[static_cast<std::size_t>(y) * q_ + x] = v;
    }
  }

  inv_.assign(q_, 0);
  for (std::uint32_t x = 1; x < q_; ++x) {
    // x^{q-2} by square and multiply over the table
    FqElem acc = 1, base = static_cast<FqElem>(x);
    std::uint32_t e = q_ - 2;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    inv_[x] = acc;
    if (mul(acc, static_cast<FqElem>(x)) != 1)
      fail(ErrorKind::Internal, "field element without inverse");
  }

  frob_.assign(q_, 0);
  for (std::uint32_t x = 0; x < q_; ++x) {
    FqElem y = 1;
    for (std::uint64_t i = 0; i < p_; ++i) y = mul(y, static_cast<FqElem>(x));
    frob_[x] = y;
  }
}

FqElem FqField::add(FqElem x, FqElem y) const { return poly_add(p_, k_, x, y); }
FqElem FqField::sub(FqElem x, FqElem y) const { return poly_add(p_, k_, x, poly_neg(p_, k_, y)); }
FqElem FqField::neg(FqElem x) const { return poly_neg(p_, k_, x); }

FqElem FqField::inv(FqElem x) const {
  if (x == 0) fail(ErrorKind::NotInvertible, "zero has no inverse");
  return inv_[x];
}

FqFieldPtr make_fq_field(std::uint64_t p, int k) { return std::make_shared<const FqField>(p, k); }

namespace {

void check_same_field(const FqSubspace& a, const FqSubspace& b) {
  if (a.field()->p() != b.field()->p() || a.field()->k() != b.field()->k() ||
      a.ambient() != b.ambient())
    fail(ErrorKind::InvalidArgument, "subspaces from different ambient spaces");
}

// in-place reduced row echelon form; returns pivot columns
std::vector<int> rref(const FqField& F, FqRows& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  int cols = static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    FqElem s = F.inv(rows[r][c]);
    for (int j = 0; j < cols; ++j) rows[r][j] = F.mul(rows[r][j], s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      FqElem f = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

} // namespace

FqSubspace::FqSubspace(FqFieldPtr field, int ambient, const FqRows& generators)
    : field_(std::move(field)), ambient_(ambient), rows_(generators) {
  if (!field_) fail(ErrorKind::InvalidArgument, "null field");
  if (ambient < 0) fail(ErrorKind::InvalidArgument, "negative ambient dimension");
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != ambient)
      fail(ErrorKind::InvalidArgument, "generator of wrong length");
    for (FqElem x : r) {
      if (x >= field_->q()) fail(ErrorKind::InvalidArgument, "entry outside the field");
    }
  }
  rref(*field_, rows_);
}

std::vector<int> FqSubspace::pivots() const {
  std::vector<int> out;
  for (const auto& r : rows_) {
    int c = 0;
    while (r[c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

bool FqSubspace::contains(const FqVector& v) const {
  if (static_cast<int>(v.size()) != ambient_) fail(ErrorKind::InvalidArgument, "vector length");
  FqVector r = v;
  const FqField& F = *field_;
  for (const auto& row : rows_) {
    int c = 0;
    while (row[c] == 0) ++c;
    if (r[c] == 0) continue;
    FqElem f = r[c];
    for (int j = 0; j < ambient_; ++j) r[j] = F.sub(r[j], F.mul(f, row[j]));
  }
  return std::all_of(r.begin(), r.end(), [](FqElem x) { return x == 0; });
}

bool FqSubspace::contains(const FqSubspace& other) const {
  check_same_field(*this, other);
  for (const auto& row : other.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

bool FqSubspace::operator==(const FqSubspace& o) const {
  return field_->p() == o.field_->p() && field_->k() == o.field_->k() &&
         ambient_ == o.ambient_ && rows_ == o.rows_;
}

bool FqSubspace::operator<(const FqSubspace& o) const {
  check_same_field(*this, o);
  if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
  std::vector<int> pa = pivots(), pb = o.pivots();
  if (pa != pb) return pa < pb;
  return rows_ < o.rows_;
}

SymplecticSpace::SymplecticSpace(std::uint64_t p, int m,
                                 std::vector<std::vector<std::uint16_t>> gram)
    : p_(p), m_(m), gram_(std::move(gram)) {
  if (!is_prime_u64(p)) fail(ErrorKind::InvalidArgument, "characteristic must be prime");
  if (m < 0) fail(ErrorKind::InvalidArgument, "negative half-dimension");
  int n = 2 * m;
  if (static_cast<int>(gram_.size()) != n)
    fail(ErrorKind::InvalidArgument, "gram matrix of wrong size");
  for (const auto& row : gram_) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::InvalidArgument, "gram matrix of wrong size");
    for (auto x : row) {
      if (x >= p) fail(ErrorKind::InvalidArgument, "gram entry outside F_p");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (gram_[i][i] != 0) fail(ErrorKind::InvalidArgument, "gram diagonal must vanish");
    for (int j = 0; j < n; ++j) {
      if ((gram_[i][j] + gram_[j][i]) % p != 0)
        fail(ErrorKind::InvalidArgument, "gram matrix must be skew-symmetric");
    }
  }
  if (m == 0) return;
  // nondegeneracy via F_p gaussian elimination
  auto a = gram_;
  for (int i = 0; i < n; ++i) {
    int piv = i;
    while (piv < n && a[piv][i] == 0) ++piv;
    if (piv == n) fail(ErrorKind::InvalidArgument, "gram matrix is degenerate");
    std::swap(a[piv], a[i]);
    std::uint64_t ainv = 1, base = a[i][i], e = p - 2;
    while (e) {
      if (e & 1) ainv = ainv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int r = i + 1; r < n; ++r) {
      std::uint64_t f = a[r][i] * ainv % p;
      for (int c = i; c < n; ++c)
        a[r][c] = static_cast<std::uint16_t>((a[r][c] + (p - f) * a[i][c]) % p);
    }
  }
}

SymplecticSpace standard_symplectic_space(std::uint64_t p, int m) {
  int n = 2 * m;
  std::vector<std::vector<std::uint16_t>> g(n, std::vector<std::uint16_t>(n, 0));
  for (int i = 1; i <= m; ++i) {
    g[i - 1][n - i] = 1;
    g[n - i][i - 1] = static_cast<std::uint16_t>(p - 1);
  }
  return SymplecticSpace(p, m, std::move(g));
}

FqElem symplectic_pairing(const SymplecticSpace& sp, const FqField& F, const FqVector& x,
                          const FqVector& y) {
  int n = sp.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    fail(ErrorKind::InvalidArgument, "vector length mismatch");
  FqElem acc = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (sp.gram()[i][j] == 0 || y[j] == 0) continue;
      acc = F.add(acc, F.mul(F.mul(x[i], F.from_residue(sp.gram()[i][j])), y[j]));
    }
  }
  return acc;
}

FqSubspace zero_subspace(FqFieldPtr field, int ambient) {
  return FqSubspace(std::move(field), ambient, {});
}

FqSubspace full_subspace(FqFieldPtr field, int ambient) {
  FqRows rows(ambient, FqVector(ambient, 0));
  for (int i = 0; i < ambient; ++i) rows[i][i] = 1;
  return FqSubspace(std::move(field), ambient, rows);
}

FqSubspace frobenius(const FqSubspace& U) {
  FqRows rows = U.rows();
  for (auto& r : rows)
    for (auto& x : r) x = U.field()->frob(x);
  return FqSubspace(U.field(), U.ambient(), rows);
}

bool is_rational(const FqSubspace& U) {
  for (const auto& r : U.rows())
    for (FqElem x : r)
      if (!U.field()->in_prime_field(x)) return false;
  return true;
}

FqSubspace subspace_sum(const FqSubspace& U, const FqSubspace& W) {
  check_same_field(U, W);
  FqRows rows = U.rows();
  rows.insert(rows.end(), W.rows().begin(), W.rows().end());
  return FqSubspace(U.field(), U.ambient(), rows);
}

namespace {

// solution space of rows * M^T = 0, i.e. the kernel of the linear map given
// by the rows of M acting as functionals
FqSubspace kernel_of_functionals(FqFieldPtr field, int ambient, const FqRows& funcs) {
  const FqField& F = *field;
  FqRows m = funcs;
  std::vector<int> piv = rref(F, m);
  std::vector<bool> is_pivot(ambient, false);
  for (int c : piv) is_pivot[c] = true;
  FqRows out;
  for (int c = 0; c < ambient; ++c) {
    if (is_pivot[c]) continue;
    FqVector v(ambient, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < m.size(); ++r) v[piv[r]] = F.neg(m[r][c]);
    out.push_back(std::move(v));
  }
  return FqSubspace(field, ambient, out);
}

} // namespace

FqSubspace subspace_intersection(const FqSubspace& U, const FqSubspace& W) {
  check_same_field(U, W);
  // x in both spans: annihilated by the functionals cutting out each space
  const FqField& F = *U.field();
  int n = U.ambient();
  auto functionals = [&](const FqSubspace& S) {
    FqRows m = S.rows();
    std::vector<int> piv = rref(F, m); // already echelon; cheap
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    FqRows out;
    for (int c = 0; c < n; ++c) {
      if (is_pivot[c]) continue;
      // functional: x_c - sum_r m[r][c] x_{piv_r}
      FqVector f(n, 0);
      f[c] = 1;
      for (std::size_t r = 0; r < m.size(); ++r) f[piv[r]] = F.neg(m[r][c]);
      out.push_back(std::move(f));
    }
    return out;
  };
  FqRows all = functionals(U);
  FqRows wf = functionals(W);
  all.insert(all.end(), wf.begin(), wf.end());
  return kernel_of_functionals(U.field(), n, all);
}

FqSubspace perp(const SymplecticSpace& sp, const FqSubspace& U) {
  if (U.ambient() != sp.dim()) fail(ErrorKind::InvalidArgument, "subspace/space mismatch");
  const FqField& F = *U.field();
  // functionals v -> <v, u_r> for each basis row u_r
  FqRows funcs;
  for (const auto& u : U.rows()) {
    FqVector f(U.ambient(), 0);
    for (int i = 0; i < U.ambient(); ++i) {
      FqElem acc = 0;
      for (int j = 0; j < U.ambient(); ++j) {
        if (sp.gram()[i][j] == 0 || u[j] == 0) continue;
        acc = F.add(acc, F.mul(F.from_residue(sp.gram()[i][j]), u[j]));
      }
      f[i] = acc;
    }
    funcs.push_back(std::move(f));
  }
  return kernel_of_functionals(U.field(), U.ambient(), funcs);
}

bool is_isotropic(const SymplecticSpace& sp, const FqSubspace& U) {
  const FqField& F = *U.field();
  const auto& rows = U.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (symplectic_pairing(sp, F, rows[i], rows[j]) != 0) return false;
  return true;
}

bool is_lagrangian(const SymplecticSpace& sp, const FqSubspace& U) {
  return U.dim() == sp.m() && is_isotropic(sp, U);
}

namespace {

struct EchelonEnumerator {
  FqFieldPtr field;
  int ambient = 0;
  int j = 0;
  std::uint64_t budget = 0;
  std::uint64_t used = 0;
  const SymplecticSpace* iso_space = nullptr; // when set, prune non-isotropic rows
  std::vector<FqSubspace> out;

  std::vector<int> piv;
  FqRows rows;

  void charge() {
    if (++used > budget) fail(ErrorKind::SearchTooLarge, "enumeration budget exceeded");
  }

  // free columns for a given row: right of its pivot and not a pivot column
  std::vector<int> free_cols(int r) const {
    std::vector<int> out_cols;
    for (int c = piv[r] + 1; c < ambient; ++c) {
      if (std::find(piv.begin(), piv.end(), c) == piv.end()) out_cols.push_back(c);
    }
    return out_cols;
  }

  void fill_row(int r) {
    const FqField& F = *field;
    std::vector<int> cols = free_cols(r);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (total > (std::uint64_t{1} << 52)) fail(ErrorKind::SearchTooLarge, "row fill too large");
      total *= F.q();
    }
    FqVector row(ambient, 0);
    row[piv[r]] = 1;
    for (std::uint64_t code = 0; code < total; ++code) {
      charge();
      std::uint64_t e = code;
      // first free column most significant: ascending row-major order
      for (std::size_t i = cols.size(); i-- > 0;) {
        row[cols[i]] = static_cast<FqElem>(e % F.q());
        e /= F.q();
      }
      if (iso_space != nullptr) {
        bool ok = true;
        for (int s = 0; s < r && ok; ++s)
          ok = symplectic_pairing(*iso_space, F, rows[s], row) == 0;
        if (!ok) continue;
      }
      rows[r] = row;
      if (r + 1 == j) {
        out.emplace_back(field, ambient, rows);
      } else {
        fill_row(r + 1);
      }
    }
  }

  void run() {
    if (j == 0) {
      out.push_back(zero_subspace(field, ambient));
      return;
    }
    // pivot sets in ascending lexicographic order
    piv.resize(j);
    for (int i = 0; i < j; ++i) piv[i] = i;
    rows.assign(j, FqVector(ambient, 0));
    for (;;) {
      fill_row(0);
      int i = j - 1;
      while (i >= 0 && piv[i] == ambient - j + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int t = i + 1; t < j; ++t) piv[t] = piv[t - 1] + 1;
    }
  }
};

} // namespace

std::vector<FqSubspace> enumerate_subspaces(FqFieldPtr field, int ambient, int j,
                                            std::uint64_t budget) {
  if (j < 0 || j > ambient) fail(ErrorKind::InvalidArgument, "subspace dimension out of range");
  EchelonEnumerator e;
  e.field = std::move(field);
  e.ambient = ambient;
  e.j = j;
  e.budget = budget;
  e.run();
  return std::move(e.out);
}

std::vector<FqSubspace> enumerate_isotropic(const SymplecticSpace& sp, FqFieldPtr field, int j,
                                            std::uint64_t budget) {
  if (field->p() != sp.p()) fail(ErrorKind::InvalidArgument, "field/space characteristic clash");
  if (j < 0 || j > sp.m()) fail(ErrorKind::InvalidArgument, "isotropic dimension out of range");
  EchelonEnumerator e;
  e.field = std::move(field);
  e.ambient = sp.dim();
  e.j = j;
  e.budget = budget;
  e.iso_space = &sp;
  e.run();
  return std::move(e.out);
}

SymplecticQuotient::SymplecticQuotient(const SymplecticSpace& outer, FqFieldPtr prime_field,
                                       FqSubspace w)
    : outer_(outer), space_(outer), prime_field_(std::move(prime_field)), w_(std::move(w)),
      wperp_(perp(outer, w_)) {
  const FqField& F = *prime_field_;
  if (F.k() != 1) fail(ErrorKind::Internal, "quotient solve data must live over F_p");
  if (!is_rational(w_)) fail(ErrorKind::NotRational, "quotient by a non-rational subspace");
  if (!is_isotropic(outer_, w_)) fail(ErrorKind::NotIsotropic, "quotient by a non-isotropic subspace");

  // complete W to a rational basis of W^perp; the added rows represent the
  // quotient basis
  int n = outer_.dim();
  FqRows stack = w_.rows();
  for (const auto& cand : wperp_.rows()) {
    FqRows trial = stack;
    trial.push_back(cand);
    if (rref(F, trial).size() > stack.size()) {
      stack.push_back(cand);
      reps_.push_back(cand);
    }
    if (static_cast<int>(stack.size()) == wperp_.dim()) break;
  }
  int qdim = static_cast<int>(reps_.size());
  if (qdim != wperp_.dim() - w_.dim()) fail(ErrorKind::Internal, "quotient basis extraction failed");
  if (qdim % 2 != 0) fail(ErrorKind::Internal, "quotient dimension must be even");

  // gram of the induced form on the representatives
  std::vector<std::vector<std::uint16_t>> g(qdim, std::vector<std::uint16_t>(qdim, 0));
  for (int a = 0; a < qdim; ++a)
    for (int b = 0; b < qdim; ++b)
      g[a][b] = static_cast<std::uint16_t>(symplectic_pairing(outer_, F, reps_[a], reps_[b]));
  space_ = SymplecticSpace(outer_.p(), qdim / 2, std::move(g));

  // coordinate solve data: RREF the stacked basis [W; reps] with a transform
  // so that coords(v) = (v restricted to pivot columns) * tmat
  int rtot = static_cast<int>(stack.size());
  FqRows aug = stack;
  for (int i = 0; i < rtot; ++i) {
    for (int t = 0; t < rtot; ++t) aug[i].push_back(i == t ? 1 : 0);
  }
  FqRows work = aug;
  std::vector<int> piv;
  {
    // manual rref over the first n columns only, carrying the transform
    std::size_t r = 0;
    for (int c = 0; c < n && r < work.size(); ++c) {
      std::size_t sel = r;
      while (sel < work.size() && work[sel][c] == 0) ++sel;
      if (sel == work.size()) continue;
      std::swap(work[r], work[sel]);
      FqElem s = F.inv(work[r][c]);
      for (std::size_t col = 0; col < work[r].size(); ++col) work[r][col] = F.mul(work[r][col], s);
      for (std::size_t i2 = 0; i2 < work.size(); ++i2) {
        if (i2 == r || work[i2][c] == 0) continue;
        FqElem f = work[i2][c];
        for (std::size_t col = 0; col < work[i2].size(); ++col)
          work[i2][col] = F.sub(work[i2][col], F.mul(f, work[r][col]));
      }
      piv.push_back(c);
      ++r;
    }
    if (static_cast<int>(r) != rtot) fail(ErrorKind::Internal, "quotient basis is rank-deficient");
  }
  pivots_ = piv;
  // tmat rows correspond to pivot coordinates, columns to [W; reps] coeffs
  tmat_.assign(rtot, FqVector(rtot, 0));
  for (int i = 0; i < rtot; ++i)
    for (int t = 0; t < rtot; ++t) tmat_[i][t] = work[i][n + t];
}

FqSubspace SymplecticQuotient::project(const FqSubspace& U) const {
  const FqField& F = *U.field();
  int n = outer_.dim();
  if (U.ambient() != n) fail(ErrorKind::InvalidArgument, "subspace/space mismatch");
  FqSubspace wk(U.field(), n, w_.rows());
  FqSubspace wperpk(U.field(), n, wperp_.rows());
  if (!U.contains(wk) || !wperpk.contains(U))
    fail(ErrorKind::InvalidArgument, "subspace is not between W and its perp");
  int rtot = static_cast<int>(w_.dim()) + space_.dim();
  FqRows out;
  for (const auto& v : U.rows()) {
    // coords over [W; reps]
    FqVector y(rtot, 0);
    for (int i = 0; i < rtot; ++i) y[i] = v[pivots_[i]];
    FqVector coords(rtot, 0);
    for (int t = 0; t < rtot; ++t) {
      FqElem acc = 0;
      for (int i = 0; i < rtot; ++i) acc = F.add(acc, F.mul(y[i], tmat_[i][t]));
      coords[t] = acc;
    }
    out.push_back(FqVector(coords.begin() + w_.dim(), coords.end()));
  }
  return FqSubspace(U.field(), space_.dim(), out);
}

FqSubspace SymplecticQuotient::lift(const FqSubspace& U) const {
  const FqField& F = *U.field();
  if (U.ambient() != space_.dim()) fail(ErrorKind::InvalidArgument, "quotient subspace mismatch");
  int n = outer_.dim();
  FqRows out = w_.rows();
  for (const auto& u : U.rows()) {
    FqVector v(n, 0);
    for (int t = 0; t < space_.dim(); ++t) {
      if (u[t] == 0) continue;
      for (int c = 0; c < n; ++c) v[c] = F.add(v[c], F.mul(u[t], reps_[t][c]));
    }
    out.push_back(std::move(v));
  }
  return FqSubspace(U.field(), n, out);
}

SymplecticQuotient quotient_space(const SymplecticSpace& sp, const FqSubspace& W) {
  if (W.field()->k() != 1) {
    if (!is_rational(W)) fail(ErrorKind::NotRational, "quotient by a non-rational subspace");
    // rebase onto F_p
    FqFieldPtr pf = make_fq_field(sp.p(), 1);
    return SymplecticQuotient(sp, pf, FqSubspace(pf, W.ambient(), W.rows()));
  }
  return SymplecticQuotient(sp, W.field(), W);
}

} // namespace ramlat
