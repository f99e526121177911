#pragma once

#include <cstdint>
#include <vector>

#include "eislat/herm_lattice.hpp"

// Sebastiani–Thom monodromy for x1^k1 + … + xn^kn: the cyclic modules V(k)
// and their tensor products.
namespace eislat::milnor {

/// V(k): the rank k−1 module spanned by a_i − a_{i+1} (indices mod k) with
/// the monodromy a_i ↦ a_{i+1}. `reversed` uses a_i ↦ a_{i−1}, i.e. Φ⁻¹.
struct CyclicModule {
  int k = 0;
  IntMat monodromy;
  std::size_t rank() const { return monodromy.rows(); }
};

/// Throws MathError for k < 2.
CyclicModule vk(int k, bool reversed = false);

IntMat kron(const IntMat& x, const IntMat& y);

struct TensorSystem {
  std::vector<int> ks;
  std::vector<CyclicModule> factors;
  IntMat monodromy;  // Ψ = Ψ1 ⊗ … ⊗ Ψn
  std::size_t rank() const { return monodromy.rows(); }
  /// 1 ⊗ … ⊗ Φ_i ⊗ … ⊗ 1.
  IntMat factor_action(std::size_t i) const;
};

TensorSystem tensor_system(const std::vector<int>& ks, bool reversed = false);

/// Least m ≥ 1 with m-th power the identity; 0 when none is ≤ max_order.
int order(const IntMat& m, int max_order = 1000);

/// For (2,2,2,3) with σ = 1⊗1⊗1⊗Φ3: σ has order 3, 1 + σ + σ² = 0, Ψσ = σΨ
/// and Ψσ⁻¹ = −1, i.e. Ψ is −ω once σ is read as ω.
struct SigmaReport {
  int sigma_order = 0;
  bool sigma_cyclotomic = false;
  bool commutes = false;
  bool psi_is_minus_sigma = false;
  bool pass() const { return sigma_order == 3 && sigma_cyclotomic && commutes && psi_is_minus_sigma; }
};
SigmaReport sigma_compatibility(const TensorSystem& t, std::size_t sigma_factor);

/// E^{4,1} has four orthogonal norm 1 vectors but no two orthogonal norm −1
/// vectors, so vanishing cycles of norm ±1 must have norm +1.
struct SignatureReport {
  std::vector<EVec> witnesses;
  bool witnesses_orthonormal = false;
  /// Negative index of diag(−1, 1, 1, 1, 1), the bound for any sublattice.
  std::size_t max_negative_rank = 0;
  std::size_t random_grams = 0;
  std::size_t random_bound_violations = 0;
  /// Norm −1 vectors with norm(v0) ≤ box, and how many orthogonal pairs
  /// among them (up to units).
  std::size_t negative_vectors = 0;
  std::size_t orthogonal_negative_pairs = 0;
  bool pass() const {
    return witnesses_orthonormal && max_negative_rank == 1 && random_bound_violations == 0 &&
           orthogonal_negative_pairs == 0 && negative_vectors > 0;
  }
};
SignatureReport signature_forcing_check(std::uint64_t seed = 42, std::size_t samples = 500, long box = 3);

}  // namespace eislat::milnor
