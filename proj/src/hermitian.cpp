#include "hermitian.hpp"

#include <algorithm>
#include <string>

namespace ramlat {

const char* variant_name(SpaceVariant v) {
  switch (v) {
  case SpaceVariant::split_even: return "split-even";
  case SpaceVariant::non_split_even: return "non-split-even";
  case SpaceVariant::odd_dim: return "odd";
  }
  fail(ErrorKind::Internal, "variant_name: bad enum value");
}

SpaceVariant variant_from_name(const std::string& name) {
  if (name == "split-even") return SpaceVariant::split_even;
  if (name == "non-split-even") return SpaceVariant::non_split_even;
  if (name == "odd") return SpaceVariant::odd_dim;
  fail(ErrorKind::InvalidArgument, "unknown space variant: " + name);
}

HermitianSpace::HermitianSpace(const FieldParams& fp, const OEMatrix& gram)
    : fp_(fp), n_(gram.rows()), gram_(gram) {
  if (gram.rows() != gram.cols()) fail(ErrorKind::InvalidArgument, "gram matrix must be square");
  if (!(gram.params() == fp)) fail(ErrorKind::InvalidArgument, "gram matrix has foreign parameters");
  OEMatrix ct = gram.conj_transpose();
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!gram.at(i, j).congruent(ct.at(i, j)))
        fail(ErrorKind::InvalidArgument, "gram matrix is not hermitian");
    }
  }
  if (determinant(gram).residue_zero())
    fail(ErrorKind::InvalidArgument, "gram matrix is singular");
}

SpacePtr standard_space(const FieldParams& fp, int n, SpaceVariant variant) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "space dimension must be positive");
  bool even = n % 2 == 0;
  if (even && variant == SpaceVariant::odd_dim)
    fail(ErrorKind::InvalidArgument, "odd variant requires odd dimension");
  if (!even && variant != SpaceVariant::odd_dim)
    fail(ErrorKind::InvalidArgument, "even variants require even dimension");

  OEMatrix G(fp, n, n);
  OEElement one = OEElement::one(fp);
  int pairs = even ? n / 2 : (n - 1) / 2;
  if (variant == SpaceVariant::non_split_even) pairs = n / 2 - 1;
  for (int b = 0; b < pairs; ++b) {
    G.at(2 * b, 2 * b + 1) = one;
    G.at(2 * b + 1, 2 * b) = one;
  }
  if (variant == SpaceVariant::odd_dim) {
    G.at(n - 1, n - 1) = one;
  } else if (variant == SpaceVariant::non_split_even) {
    // smallest unit pair whose product is minus a non-norm
    std::uint64_t p = fp.p;
    std::uint64_t u1 = 0, u2 = 0;
    for (std::uint64_t a = 1; a < p && u1 == 0; ++a) {
      for (std::uint64_t b = 1; b < p; ++b) {
        if (!is_norm(fp, (a * b % p) * (p - 1) % p)) {
          u1 = a;
          u2 = b;
          break;
        }
      }
    }
    if (u1 == 0) fail(ErrorKind::Internal, "no non-norm found");
    G.at(n - 2, n - 2) = OEElement(fp, u1, 0);
    G.at(n - 1, n - 1) = OEElement(fp, u2, 0);
  }
  auto sp = std::make_shared<HermitianSpace>(fp, G);
  sp->variant_ = variant;
  return sp;
}

SpaceClass classify_space(const HermitianSpace& space) {
  const FieldParams& fp = space.params();
  OEElement det = determinant(space.gram());
  if (det.b() != 0) fail(ErrorKind::Internal, "hermitian determinant has a pi component");
  int v = det.valuation();
  if (v == kValInfinity || v % 2 != 0)
    fail(ErrorKind::Internal, "hermitian determinant has odd or unresolved valuation");
  int j = v / 2;
  std::uint64_t p = fp.p;
  std::uint64_t u = det.shift_pi(-v).a() % p;
  // disc = (-1)^{n(n-1)/2} det = p^j * u'; p^j u' is a norm iff
  // (-epsilon)^j u' is a square mod p
  int n = space.dim();
  bool neg = ((static_cast<std::int64_t>(n) * (n - 1) / 2) % 2) != 0;
  std::uint64_t w = u;
  std::uint64_t meps = (p - fp.epsilon % p) % p; // -epsilon mod p
  for (int i = 0; i < j; ++i) w = w * meps % p;
  if (neg) w = w * (p - 1) % p;
  SpaceClass out;
  out.disc_unit = w;
  out.split = is_norm(fp, w);
  return out;
}

int max_vertex_type(const HermitianSpace& space) {
  int n = space.dim();
  if (n % 2 != 0) return n - 1;
  return classify_space(space).split ? n : n - 2;
}

namespace {

void check_same_space(const HermitianLattice& a, const HermitianLattice& b) {
  if (!(*a.space() == *b.space()))
    fail(ErrorKind::InvalidArgument, "lattices live in different spaces");
}

// entry valuation >= v, or PrecisionExhausted when that cannot be decided
bool entry_val_at_least(const OEElement& x, int v) {
  if (v <= 0) return true;
  if (!x.residue_zero()) return x.valuation() >= v;
  if (2 * x.kprec() >= v) return true;
  fail(ErrorKind::PrecisionExhausted, "containment test below working precision");
}

} // namespace

HermitianLattice::HermitianLattice(SpacePtr space, const OEMatrix& generators, int scale)
    : space_(std::move(space)), basis_(generators), scale_(scale) {
  if (!space_) fail(ErrorKind::InvalidArgument, "lattice requires a space");
  if (generators.rows() != space_->dim())
    fail(ErrorKind::InvalidArgument, "generator rows do not match the space dimension");
  if (!(generators.params() == space_->params()))
    fail(ErrorKind::InvalidArgument, "generator entries have foreign parameters");
  auto [H, s] = hermite_canonical(basis_, scale_);
  basis_ = H;
  scale_ = s;
}

HermitianLattice HermitianLattice::scaled_by_pi(int e) const {
  HermitianLattice r = *this;
  r.scale_ -= e;
  return r;
}

int HermitianLattice::index_offset() const {
  return determinant(basis_).valuation() - dim() * scale_;
}

std::vector<std::uint64_t> HermitianLattice::canonical_key() const {
  std::vector<std::uint64_t> key;
  key.reserve(2 + 2 * static_cast<std::size_t>(dim()) * dim());
  key.push_back(static_cast<std::uint64_t>(static_cast<std::int64_t>(scale_) + (1 << 30)));
  key.push_back(static_cast<std::uint64_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      key.push_back(basis_.at(i, j).a());
      key.push_back(basis_.at(i, j).b());
    }
  }
  return key;
}

bool HermitianLattice::operator==(const HermitianLattice& o) const {
  return *space_ == *o.space_ && scale_ == o.scale_ && basis_ == o.basis_;
}

bool HermitianLattice::operator<(const HermitianLattice& o) const {
  return canonical_key() < o.canonical_key();
}

OEElement sesquilinear(const HermitianSpace& space, const OEMatrix& x, const OEMatrix& y) {
  if (x.rows() != space.dim() || x.cols() != 1 || y.rows() != space.dim() || y.cols() != 1)
    fail(ErrorKind::InvalidArgument, "sesquilinear: column vectors of the space dimension required");
  OEMatrix r = x.transpose() * space.gram() * y.conj();
  return r.at(0, 0);
}

OEElement alternating_form(const HermitianSpace& space, const OEMatrix& x, const OEMatrix& y) {
  OEElement v = sesquilinear(space, x, y);
  return OEElement(space.params(), v.b(), 0).truncated(v.kprec());
}

HermitianLattice dual_lattice(const HermitianLattice& L) {
  const HermitianSpace& sp = *L.space();
  OEMatrix M = L.basis().conj_transpose() * sp.gram().transpose();
  auto [K, e] = inverse_with_denominator(M);
  return HermitianLattice(L.space(), K, e - L.scale());
}

bool lattice_contains(const HermitianLattice& outer, const HermitianLattice& inner) {
  check_same_space(outer, inner);
  auto [K, e] = inverse_with_denominator(outer.basis());
  OEMatrix P = K * inner.basis();
  int threshold = e - outer.scale() + inner.scale();
  for (int i = 0; i < P.rows(); ++i) {
    for (int j = 0; j < P.cols(); ++j) {
      if (!entry_val_at_least(P.at(i, j), threshold)) return false;
    }
  }
  return true;
}

std::int64_t lattice_index(const HermitianLattice& L, const HermitianLattice& M) {
  check_same_space(L, M);
  return M.index_offset() - L.index_offset();
}

HermitianLattice lattice_sum(const HermitianLattice& L, const HermitianLattice& M) {
  check_same_space(L, M);
  int s = std::max(L.scale(), M.scale());
  int n = L.dim();
  OEMatrix B(L.basis().params(), n, 2 * n);
  OEMatrix BL = L.basis().shift_pi(s - L.scale());
  OEMatrix BM = M.basis().shift_pi(s - M.scale());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      B.at(i, j) = BL.at(i, j);
      B.at(i, n + j) = BM.at(i, j);
    }
  }
  return HermitianLattice(L.space(), B, s);
}

HermitianLattice lattice_intersection(const HermitianLattice& L, const HermitianLattice& M) {
  return dual_lattice(lattice_sum(dual_lattice(L), dual_lattice(M)));
}

int vertex_type(const HermitianLattice& L) {
  HermitianLattice D = dual_lattice(L);
  if (!lattice_contains(L, D))
    fail(ErrorKind::NotVertex, "dual lattice is not contained in the lattice");
  if (!lattice_contains(D, L.scaled_by_pi(1)))
    fail(ErrorKind::NotVertex, "pi times the lattice is not contained in the dual");
  std::int64_t t = lattice_index(L, D);
  return static_cast<int>(t);
}

bool is_vertex_lattice(const HermitianLattice& L) {
  try {
    vertex_type(L);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotVertex) return false;
    throw;
  }
}

bool is_vertex_intersection(const HermitianLattice& L1, const HermitianLattice& L2) {
  return is_vertex_lattice(lattice_intersection(L1, L2));
}

HermitianLattice standard_vertex_lattice(SpacePtr space, int t) {
  if (!space) fail(ErrorKind::InvalidArgument, "standard_vertex_lattice: null space");
  if (!space->standard_variant())
    fail(ErrorKind::InvalidArgument, "standard_vertex_lattice requires a standard space");
  if (t < 0 || t % 2 != 0 || t > max_vertex_type(*space))
    fail(ErrorKind::TypeUnavailable, "no vertex lattice of type " + std::to_string(t));
  const FieldParams& fp = space->params();
  int n = space->dim();
  OEMatrix B(fp, n, n);
  for (int i = 0; i < n; ++i) {
    bool deep = i % 2 == 0 && i < t;
    B.at(i, i) = deep ? OEElement::one(fp) : OEElement::pi(fp);
  }
  return HermitianLattice(std::move(space), B, 1);
}

InducedSymplectic::InducedSymplectic(HermitianLattice lattice, HermitianLattice dual,
                                     OEMatrix f_basis, std::vector<int> pivot_exponents)
    : lattice_(std::move(lattice)), dual_(std::move(dual)), f_basis_(std::move(f_basis)),
      a_(std::move(pivot_exponents)), t_(0) {
  const FieldParams& fp = lattice_.space()->params();
  int n = lattice_.dim();
  for (int i = 0; i < n; ++i) {
    if (a_[i] == 1) v_cols_.push_back(i);
  }
  t_ = static_cast<int>(v_cols_.size());

  // Gram of the reduction of p * <,> on the chosen coset representatives.
  // With s = lattice scale, (f_i, f_j) = p^{-s} * NM_ij where
  // NM = (-1)^s eps^{-s} F^T G conj(F); the symplectic entry is the
  // pi-coefficient of NM divided by p^{s-1}, taken mod p.
  gram_.assign(t_, std::vector<std::uint64_t>(t_, 0));
  if (t_ == 0) return;
  int s = lattice_.scale();
  if (s < 1) fail(ErrorKind::Internal, "vertex lattice of positive type has scale < 1");
  OEMatrix NM = f_basis_.transpose() * lattice_.space()->gram() * f_basis_.conj();
  OEElement c = OEElement(fp, fp.epsilon, 0).inv();
  if (s % 2 != 0) c = -c;
  OEElement u = OEElement::one(fp);
  for (int i = 0; i < s; ++i) u = u * c;
  std::uint64_t ps1 = fp.pow_p(s - 1);
  for (int i = 0; i < t_; ++i) {
    for (int j = 0; j < t_; ++j) {
      OEElement x = NM.at(v_cols_[i], v_cols_[j]) * u;
      std::uint64_t b = x.b();
      if (x.kprec() < s) fail(ErrorKind::PrecisionExhausted, "induced gram below working precision");
      if (b % ps1 != 0) fail(ErrorKind::Internal, "pairing escapes p^{-1} Z_p");
      gram_[i][j] = b / ps1 % fp.p;
    }
  }
}

HermitianLattice InducedSymplectic::preimage(
    const std::vector<std::vector<std::uint64_t>>& rows) const {
  const FieldParams& fp = lattice_.space()->params();
  int n = lattice_.dim();
  int m = n + static_cast<int>(rows.size());
  OEMatrix gen(fp, n, m);
  // generators of the dual: F * diag(pi^{a_i})
  for (int j = 0; j < n; ++j) {
    OEElement d = OEElement::pi_pow(fp, a_[j]);
    for (int i = 0; i < n; ++i) gen.at(i, j) = f_basis_.at(i, j) * d;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != t_)
      fail(ErrorKind::InvalidArgument, "preimage: coordinate row of wrong length");
    for (int c = 0; c < t_; ++c) {
      OEElement w = OEElement(fp, rows[r][c] % fp.p, 0);
      for (int i = 0; i < n; ++i)
        gen.at(i, n + static_cast<int>(r)) =
            gen.at(i, n + static_cast<int>(r)) + w * f_basis_.at(i, v_cols_[c]);
    }
  }
  return HermitianLattice(lattice_.space(), gen, lattice_.scale());
}

std::vector<std::vector<std::uint64_t>> InducedSymplectic::image_coords(
    const HermitianLattice& M) const {
  if (!lattice_contains(lattice_, M) || !lattice_contains(M, dual_))
    fail(ErrorKind::InvalidArgument, "image_coords: lattice is not between the dual and the lattice");
  const FieldParams& fp = lattice_.space()->params();
  auto [K, e] = inverse_with_denominator(f_basis_);
  OEMatrix C = (K * M.basis()).shift_pi(lattice_.scale() - M.scale() - e);
  std::vector<std::vector<std::uint64_t>> out;
  for (int j = 0; j < C.cols(); ++j) {
    std::vector<std::uint64_t> row(t_, 0);
    bool nonzero = false;
    for (int i = 0; i < t_; ++i) {
      const OEElement& x = C.at(v_cols_[i], j);
      if (x.kprec() < 1) fail(ErrorKind::PrecisionExhausted, "image_coords below working precision");
      row[i] = x.a() % fp.p;
      if (row[i] != 0) nonzero = true;
    }
    if (nonzero) out.push_back(std::move(row));
  }
  return out;
}

AdaptedBasis adapted_basis(const HermitianLattice& outer, const HermitianLattice& inner) {
  if (!lattice_contains(outer, inner))
    fail(ErrorKind::InvalidArgument, "adapted basis needs nested lattices");
  if (!lattice_contains(inner, outer.scaled_by_pi(1)))
    fail(ErrorKind::InvalidArgument, "adapted basis needs pi times the outer lattice inside the inner one");
  auto [K, e] = inverse_with_denominator(outer.basis());
  OEMatrix C = (K * inner.basis()).shift_pi(outer.scale() - inner.scale() - e);
  SNFResult s = smith_normal_form(C);
  for (int a : s.divisors) {
    if (a != 0 && a != 1) fail(ErrorKind::Internal, "inclusion is not killed by pi");
  }
  auto [KU, eU] = inverse_with_denominator(s.U);
  if (eU != 0) fail(ErrorKind::Internal, "SNF transform is not unimodular");
  return AdaptedBasis{outer.basis() * KU, outer.scale(), s.divisors};
}

InducedSymplectic induced_symplectic_space(const HermitianLattice& L) {
  vertex_type(L); // validates the sandwich pi L <= L^dual <= L
  HermitianLattice D = dual_lattice(L);
  AdaptedBasis ab = adapted_basis(L, D);
  return InducedSymplectic(L, std::move(D), std::move(ab.f_basis), std::move(ab.exponents));
}

} // namespace ramlat
