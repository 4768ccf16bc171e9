#include "dl.hpp"

#include <map>

namespace ramlat {

namespace {

std::vector<std::vector<std::uint16_t>> narrow_rows(
    const std::vector<std::vector<std::uint64_t>>& rows) {
  std::vector<std::vector<std::uint16_t>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].reserve(rows[i].size());
    for (std::uint64_t x : rows[i]) out[i].push_back(static_cast<std::uint16_t>(x));
  }
  return out;
}

// a rational subspace of an extension re-read over the prime field; valid
// because echelon entries of a Phi-stable subspace are constants
FqSubspace rebase_rational(const FqSubspace& U, const FqFieldPtr& prime_field) {
  if (!is_rational(U)) fail(ErrorKind::Internal, "chain end failed to be rational");
  return FqSubspace(prime_field, U.ambient(), U.rows());
}

} // namespace

bool in_S(const SymplecticSpace& sp, const FqSubspace& U) {
  if (!is_lagrangian(sp, U)) fail(ErrorKind::NotLagrangian, "membership in S needs a lagrangian");
  return subspace_intersection(U, frobenius(U)).dim() >= sp.m() - 1;
}

StratumChain stratum_of(const SymplecticSpace& sp, const FqSubspace& U) {
  if (!is_lagrangian(sp, U))
    fail(ErrorKind::NotLagrangian, "stratum of a non-lagrangian subspace");
  StratumChain out{0, {U.dim()}, U};
  while (true) {
    FqSubspace image = frobenius(out.component);
    if (image == out.component) return out;
    FqSubspace next = subspace_intersection(out.component, image);
    if (next.dim() != out.component.dim() - 1)
      fail(ErrorKind::ChainViolation, "intersection chain drops by more than one");
    out.component = next;
    out.dims.push_back(next.dim());
    ++out.i;
  }
}

FqSubspace component_of(const SymplecticSpace& sp, const FqSubspace& U) {
  return stratum_of(sp, U).component;
}

std::vector<FqSubspace> closure_points(const SymplecticSpace& sp, const FqSubspace& W,
                                       FqFieldPtr field, std::uint64_t budget) {
  if (field->p() != sp.p()) fail(ErrorKind::InvalidArgument, "field/space characteristic clash");
  if (!is_rational(W)) fail(ErrorKind::NotRational, "closure needs a rational subspace");
  if (!is_isotropic(sp, W)) fail(ErrorKind::NotIsotropic, "closure needs an isotropic subspace");
  FqSubspace lifted(field, W.ambient(), W.rows());
  std::vector<FqSubspace> out;
  for (const FqSubspace& U : enumerate_isotropic(sp, field, sp.m(), budget)) {
    if (U.contains(lifted) && in_S(sp, U)) out.push_back(U);
  }
  return out;
}

StratumReport count_points(const SymplecticSpace& sp, FqFieldPtr field, std::uint64_t budget) {
  int m = sp.m();
  StratumReport rep;
  rep.p = sp.p();
  rep.m = m;
  rep.k = field->k();
  rep.counts.assign(static_cast<std::size_t>(m) + 1, 0);
  rep.components.resize(static_cast<std::size_t>(m) + 1);

  FqFieldPtr prime = make_fq_field(sp.p(), 1);
  std::vector<std::map<FqSubspace, std::size_t>> slot(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    for (const FqSubspace& W : enumerate_isotropic(sp, prime, m - i, budget)) {
      slot[static_cast<std::size_t>(i)].emplace(W, rep.components[static_cast<std::size_t>(i)].size());
      rep.components[static_cast<std::size_t>(i)].push_back({W, 0});
    }
  }

  for (const FqSubspace& U : enumerate_isotropic(sp, field, m, budget)) {
    if (!in_S(sp, U)) continue;
    StratumChain chain = stratum_of(sp, U);
    std::size_t i = static_cast<std::size_t>(chain.i);
    FqSubspace W = rebase_rational(chain.component, prime);
    auto at = slot[i].find(W);
    if (at == slot[i].end()) fail(ErrorKind::Internal, "component missing from the census skeleton");
    ++rep.components[i][at->second].count;
    ++rep.counts[i];
    ++rep.total;
  }
  return rep;
}

TChain t_chain(const SymplecticSpace& sp, const FqSubspace& U) {
  if (!is_lagrangian(sp, U))
    fail(ErrorKind::NotLagrangian, "growth chain of a non-lagrangian subspace");
  TChain out{0, {U.dim()}, U};
  while (true) {
    FqSubspace image = frobenius(out.stable);
    if (image == out.stable) return out;
    FqSubspace next = subspace_sum(out.stable, image);
    if (next.dim() != out.stable.dim() + 1)
      fail(ErrorKind::ChainViolation, "growth chain expands by more than one");
    out.stable = next;
    out.dims.push_back(next.dim());
    ++out.d;
  }
}

HermitianLattice minimal_vertex_of_point(const HermitianLattice& L, const FqSubspace& U) {
  InducedSymplectic q = induced_symplectic_space(L);
  SymplecticSpace sp(q.p(), q.t() / 2, narrow_rows(q.gram()));
  if (U.ambient() != sp.dim() || U.field()->p() != sp.p())
    fail(ErrorKind::InvalidArgument, "point does not live in the induced space of the lattice");
  TChain chain = t_chain(sp, U);
  if (!is_rational(chain.stable)) fail(ErrorKind::Internal, "stable subspace is not rational");
  std::vector<std::vector<std::uint64_t>> rows(chain.stable.rows().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const FqVector& src = chain.stable.rows()[r];
    rows[r].assign(src.begin(), src.end());
  }
  return q.preimage(rows);
}

IsotropicFlag::IsotropicFlag(const SymplecticSpace& sp, std::vector<FqSubspace> members)
    : members_(std::move(members)) {
  if (static_cast<int>(members_.size()) != sp.m())
    fail(ErrorKind::InvalidArgument, "flag must have one member per dimension up to m");
  for (std::size_t j = 0; j < members_.size(); ++j) {
    if (members_[j].dim() != static_cast<int>(j) + 1)
      fail(ErrorKind::InvalidArgument, "flag member has the wrong dimension");
    if (!is_isotropic(sp, members_[j]))
      fail(ErrorKind::NotIsotropic, "flag member is not isotropic");
    if (j > 0 && !members_[j].contains(members_[j - 1]))
      fail(ErrorKind::InvalidArgument, "flag members are not nested");
  }
}

std::vector<IsotropicFlag> xbar_flags(const SymplecticSpace& sp, FqFieldPtr field,
                                      std::uint64_t budget) {
  int m = sp.m();
  // per level: the isotropic j-subspaces satisfying the closure inequality
  std::vector<std::vector<FqSubspace>> levels(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j <= m; ++j) {
    for (const FqSubspace& S : enumerate_isotropic(sp, field, j, budget)) {
      if (subspace_intersection(S, frobenius(S)).dim() >= j - 1)
        levels[static_cast<std::size_t>(j)].push_back(S);
    }
  }
  std::vector<IsotropicFlag> out;
  std::vector<FqSubspace> chain;
  auto rec = [&](auto&& self, int j) -> void {
    if (j > m) {
      out.emplace_back(sp, chain);
      return;
    }
    for (const FqSubspace& S : levels[static_cast<std::size_t>(j)]) {
      if (j > 1 && !S.contains(chain.back())) continue;
      chain.push_back(S);
      self(self, j + 1);
      chain.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

FqSubspace resolution_endpoint(const IsotropicFlag& flag) {
  if (flag.members().empty())
    fail(ErrorKind::InvalidArgument, "empty flag has no endpoint");
  return flag.members().back();
}

} // namespace ramlat
