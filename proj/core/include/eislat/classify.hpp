#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eislat/linalg.hpp"

// Negative-norm vectors of the diagonal frame orthogonal to no short roots,
// the lattices around them, and reflections of the unimodular lattice.
namespace eislat::classify {

/// (3, 1, 1, 1, 1), norm −5.
EVec diagonal_point();
/// (2 − ω̄, 1, 1, 1, 1), norm −3.
EVec fermat_point();
/// D4(θ) = {z ∈ E⁴ : z1 + z2 + z3 + z4 ≡ 0 mod θ} inside the standard E⁴.
Sublattice d4_theta();

/// Every norm 1 vector of the diagonal frame orthogonal to v. Throws
/// MathError unless norm(v) < 0.
std::vector<EVec> orthogonal_short_roots(const EVec& v);

struct GluingProfile {
  DiscGroup complement;  // (v⊥)′/v⊥
  DiscGroup line;        // ⟨v⟩′/⟨v⟩
  bool orders_match = false;
  /// The complement's norm multiset equals the negated line multiset mod 1.
  bool complementary = false;
  /// Glue vectors a·w (h(w, v) = 1, a over E/h(v, v)E) split into the two
  /// summands with norms adding to an integer.
  std::size_t glue_classes = 0;
  bool glue_integral = false;
  bool pass() const { return orders_match && complementary && glue_integral; }
};
/// Throws MathError for imprimitive or non-negative v.
GluingProfile gluing_profile(const EVec& v);

enum class SearchStatus { found, mismatch, budget };
std::string status_name(SearchStatus s);

struct FermatReport {
  Int complement_det;
  Int d4_det;
  /// Counts at norms 1, 2, 3 in v⊥ and in D4(θ).
  std::vector<std::size_t> complement_counts;
  std::vector<std::size_t> d4_counts;
  SearchStatus isometry = SearchStatus::mismatch;
  /// On success: a basis of v⊥ by minimal vectors and their images in D4(θ)
  /// with equal Grams.
  std::vector<EVec> source_basis;
  std::vector<EVec> target_basis;
  std::size_t explored = 0;
  bool pass() const;
};
FermatReport fermat_complement_check(const EVec& v, std::size_t budget = 1000000);

struct DiagonalReport {
  std::vector<EVec> chain;  // four long roots of v⊥, consecutive |h| = 1
  EMat chain_gram;
  Int chain_det;
  Int complement_det;
  bool saturated = false;  // the chain spans v⊥
  bool pass() const { return chain.size() == 4 && chain_det == 5 && complement_det == 5 && saturated; }
};
DiagonalReport diagonal_complement_check(const EVec& v);

struct ReflectionType {
  EVec root;  // primitive generator of the −1 eigenlattice
  Int norm;
  bool norm_in_range = false;  // norm ∈ {±1, ±2}
  bool long_root = false;      // norm 2
};
/// A must be an involution of the diagonal frame other than ±1 with a rank 4
/// fixed lattice; throws MathError otherwise.
ReflectionType biflection_transform_type(const Isometry& a);

struct PointReport {
  EVec v;
  Int norm;
  std::size_t orthogonal_short_roots = 0;
  GluingProfile gluing;
  std::string name;  // "diagonal point", "Fermat point" or empty
};
/// Throws MathError for non-negative norm.
PointReport classify_point(const EVec& v);

/// Random Γ-images of v (diagonal frame): orthogonal roots stay empty and the
/// complement's discriminant norms stay the same.
struct OrbitInvariance {
  std::size_t samples = 0;
  std::size_t root_free = 0;
  std::size_t same_profile = 0;
  bool pass() const { return root_free == samples && same_profile == samples; }
};
OrbitInvariance orbit_invariance(const EVec& v, std::uint64_t seed, std::size_t samples);

/// Long roots (λ; μ, ν) with μ ≠ 0 sampled from a coordinate box, each
/// transported to (1, 1, 0; 0, 0).
struct TransitivityReport {
  std::size_t samples = 0;
  std::size_t transported = 0;
  std::vector<EVec> failures;
  double fraction() const { return samples ? static_cast<double>(transported) / static_cast<double>(samples) : 0.0; }
};
TransitivityReport long_root_transitivity(std::uint64_t seed, std::size_t samples, long box = 2);

}  // namespace eislat::classify
