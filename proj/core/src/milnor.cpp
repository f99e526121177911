#include "eislat/milnor.hpp"

#include <random>

#include "eislat/linalg.hpp"

namespace eislat::milnor {

CyclicModule vk(int k, bool reversed) {
  if (k < 2) throw MathError("vk: k must be at least 2");
  const auto n = static_cast<std::size_t>(k - 1);
  // Basis d_i = a_i − a_{i+1}; d_{k−1} = −(d_0 + … + d_{k−2}).
  IntMat phi(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n) phi(i + 1, i) = 1;
    else
      for (std::size_t j = 0; j < n; ++j) phi(j, i) = -1;
  }
  if (reversed) {
    // Φ⁻¹ = Φ^{k−1}.
    IntMat inv = IntMat::identity(n);
    for (int e = 1; e < k; ++e) inv = inv * phi;
    phi = inv;
  }
  return {k, phi};
}

IntMat kron(const IntMat& x, const IntMat& y) {
  IntMat out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      for (std::size_t p = 0; p < y.rows(); ++p)
        for (std::size_t q = 0; q < y.cols(); ++q) out(i * y.rows() + p, j * y.cols() + q) = x(i, j) * y(p, q);
  return out;
}

IntMat TensorSystem::factor_action(std::size_t i) const {
  if (i >= factors.size()) throw MathError("factor_action: index out of range");
  IntMat out = IntMat::identity(1);
  for (std::size_t j = 0; j < factors.size(); ++j)
    out = kron(out, j == i ? factors[j].monodromy : IntMat::identity(factors[j].rank()));
  return out;
}

TensorSystem tensor_system(const std::vector<int>& ks, bool reversed) {
  if (ks.empty()) throw MathError("tensor_system: no exponents");
  TensorSystem t;
  t.ks = ks;
  t.monodromy = IntMat::identity(1);
  for (int k : ks) {
    t.factors.push_back(vk(k, reversed));
    t.monodromy = kron(t.monodromy, t.factors.back().monodromy);
  }
  return t;
}

int order(const IntMat& m, int max_order) {
  IntMat p = m;
  for (int e = 1; e <= max_order; ++e) {
    if (p.is_identity()) return e;
    p = p * m;
  }
  return 0;
}

SigmaReport sigma_compatibility(const TensorSystem& t, std::size_t sigma_factor) {
  const IntMat sigma = t.factor_action(sigma_factor);
  const IntMat& psi = t.monodromy;
  const IntMat id = IntMat::identity(t.rank());
  SigmaReport rep;
  rep.sigma_order = order(sigma);
  rep.sigma_cyclotomic = (id + sigma + sigma * sigma) == IntMat(t.rank(), t.rank());
  rep.commutes = psi * sigma == sigma * psi;
  // σ⁻¹ = σ² when σ³ = 1.
  rep.psi_is_minus_sigma = rep.sigma_order == 3 && psi * sigma * sigma == -id;
  return rep;
}

SignatureReport signature_forcing_check(std::uint64_t seed, std::size_t samples, long box) {
  const HermGram& a = HermGram::diag41();
  SignatureReport rep;
  for (std::size_t i = 1; i <= 4; ++i) {
    EVec e(5);
    e[i] = EisInt(1L);
    rep.witnesses.push_back(e);
  }
  rep.witnesses_orthonormal = gram_of(rep.witnesses, a) == EMat::identity(4);
  rep.max_negative_rank = inertia(a.matrix()).negative;

  // Any family of lattice vectors has a Gram with at most that many negative
  // directions; in particular −I_k (k ≥ 2) never occurs.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::uniform_int_distribution<std::size_t> size(2, 4);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<EVec> vs(size(rng), EVec(5));
    for (auto& v : vs)
      for (auto& x : v) x = EisInt(coord(rng), coord(rng));
    ++rep.random_grams;
    if (inertia(gram_of(vs, a)).negative > rep.max_negative_rank) ++rep.random_bound_violations;
  }

  // Exhaustive over a box: norm −1 vectors, up to units, pairwise never orthogonal.
  std::vector<EVec> neg;
  const EMat id = EMat::identity(4);
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      const EisInt v0(x, y);
      // Keep the canonical associate only.
      if (v0.is_zero() || canonical_associate(v0) != v0 || v0.norm() > box) continue;
      for (const auto& rest : enumerate_norm_coords(id, v0.norm() - 1))
        neg.push_back(EVec{v0, rest[0], rest[1], rest[2], rest[3]});
    }
  rep.negative_vectors = neg.size();
  for (std::size_t i = 0; i < neg.size(); ++i)
    for (std::size_t j = i + 1; j < neg.size(); ++j)
      if (inner(neg[i], neg[j], a).is_zero()) ++rep.orthogonal_negative_pairs;
  return rep;
}

}  // namespace eislat::milnor
