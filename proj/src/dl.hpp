#pragma once

#include <cstdint>
#include <vector>

#include "fq.hpp"
#include "hermitian.hpp"

// The set S of Lagrangians U with dim(U ∩ ΦU) ≥ m−1 attached to a
// symplectic space: membership, the stratification by the intersection
// chain U ∩ ΦU ∩ ..., components, closures, point censuses, the growing
// T-chain with its minimal-vertex dictionary, and the flag-side weak
// resolution.

namespace ramlat {

// dim(U ∩ Φ U) >= m - 1 for a Lagrangian U
bool in_S(const SymplecticSpace& sp, const FqSubspace& U);

struct StratumChain {
  int i = 0;              // stabilization index
  std::vector<int> dims;  // m, m-1, ..., m-i
  FqSubspace component;   // U_i, the Phi-stable end of the chain
};

// U_0 = U, U_{j+1} = U_j ∩ Φ(U_j); stops at the first Phi-stable member.
// Every step must drop the dimension by exactly one; a larger drop raises
// ChainViolation (it cannot happen for points of S).
StratumChain stratum_of(const SymplecticSpace& sp, const FqSubspace& U);

// The rational isotropic subspace U_{i(U)} labelling the component of U
FqSubspace component_of(const SymplecticSpace& sp, const FqSubspace& U);

// All points of S over the field that contain the rational isotropic W
std::vector<FqSubspace> closure_points(const SymplecticSpace& sp, const FqSubspace& W,
                                       FqFieldPtr field, std::uint64_t budget = 1000000);

struct StratumComponent {
  FqSubspace w;             // rational isotropic subspace of dimension m - i
  std::uint64_t count = 0;  // points of the stratum lying over w
};

struct StratumReport {
  std::uint64_t p = 0;
  int m = 0;
  int k = 1;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counts;                   // per stratum 0..m
  std::vector<std::vector<StratumComponent>> components; // per stratum, all W in order
};

// Full census of S over the field, grouped by stratum and by component;
// every rational isotropic subspace appears, including those with count 0
StratumReport count_points(const SymplecticSpace& sp, FqFieldPtr field,
                           std::uint64_t budget = 1000000);

struct TChain {
  int d = 0;              // stabilization index
  std::vector<int> dims;  // m, m+1, ..., m+d
  FqSubspace stable;      // T_d, the smallest Phi-stable subspace containing U
};

// T_0 = U, T_{j+1} = T_j + Φ(T_j); grows by exactly one dimension per step
// until stable, else ChainViolation
TChain t_chain(const SymplecticSpace& sp, const FqSubspace& U);

// Preimage in L of T_d(U) under L -> L / L^dual: the smallest vertex
// lattice whose special cycle carries the point; its type is 2 d
HermitianLattice minimal_vertex_of_point(const HermitianLattice& L, const FqSubspace& U);

// A complete isotropic flag F_1 ⊂ ... ⊂ F_m with dim F_j = j
class IsotropicFlag {
public:
  IsotropicFlag(const SymplecticSpace& sp, std::vector<FqSubspace> members);
  const std::vector<FqSubspace>& members() const { return members_; }

private:
  std::vector<FqSubspace> members_;
};

// All complete isotropic flags over the field whose members all satisfy
// dim(F_j ∩ Φ F_j) >= j - 1; ordered lexicographically with the innermost
// member most significant
std::vector<IsotropicFlag> xbar_flags(const SymplecticSpace& sp, FqFieldPtr field,
                                      std::uint64_t budget = 1000000);

// F_m; always a point of S
FqSubspace resolution_endpoint(const IsotropicFlag& flag);

} // namespace ramlat
