#pragma once

#include <map>
#include <vector>

#include "eislat/f3_geom.hpp"
#include "eislat/herm_lattice.hpp"

// The mirror arrangement: hyperplanes r⊥ for short roots r of the diagonal
// frame diag(−1, 1, 1, 1, 1).
namespace eislat::arrangement {

/// A mirror r⊥, stored by the lexicographically least of the six unit
/// multiples of its short root.
class Mirror {
 public:
  /// Throws MathError unless norm(r) = 1 in the given frame.
  Mirror(const EVec& root, const HermGram& a);

  const EVec& root() const { return root_; }
  friend bool operator==(const Mirror& x, const Mirror& y) { return x.root_ == y.root_; }
  friend bool operator<(const Mirror& x, const Mirror& y) { return x.root_ < y.root_; }

 private:
  EVec root_;
};

/// Whether the mirrors meet inside complex hyperbolic space, decided by
/// positive-definiteness of the Gram of (r, r′). Throws for equal mirrors.
bool mirrors_intersect(const Mirror& m, const Mirror& n, const HermGram& a);

/// Projective class of r mod θ, scaled so its first nonzero entry is 1.
using FamilyLabel = f3::Vec;
FamilyLabel family_of(const EVec& r);
inline FamilyLabel family_of(const Mirror& m) { return family_of(m.root()); }

/// All mirrors of diagonal-frame short roots with norm(r0) ≤ bound, sorted.
std::vector<Mirror> short_root_mirrors(long bound);

struct Violation {
  std::size_t first;  // indices into the mirror list
  std::size_t second;
  EisInt inner;
};

struct ScanReport {
  long bound = 0;
  std::size_t roots = 0;
  std::size_t mirrors = 0;
  std::size_t pairs = 0;
  std::size_t intersecting = 0;
  std::size_t orthogonal = 0;
  std::size_t same_family_pairs = 0;
  /// Mirrors per family label.
  std::map<FamilyLabel, std::size_t> census;
  /// Intersecting but not orthogonal.
  std::vector<Violation> intersect_violations;
  /// Same family, distinct, yet h(r, r′) ≡ 0 mod θ.
  std::vector<Violation> family_violations;

  bool pass() const { return intersect_violations.empty() && family_violations.empty(); }
};

/// Every pair of mirrors up to the bound: intersect ⇒ orthogonal, and same
/// family ⇒ h(r, r′) ≢ 0 (mod θ) (hence disjoint).
ScanReport scan(long bound);

/// family_of(g·r) equals the projective class of ḡ·(family_of(r)) for every
/// listed mirror. g acts in the diagonal frame.
bool family_equivariant(const Isometry& g, const std::vector<Mirror>& mirrors);

struct StratumReport {
  std::size_t order = 0;
  /// Every element has order 1 or 3.
  bool exponent_three = false;
  /// Every element is a product of powers of the k triflections.
  bool triflection_products = false;
  /// Every element is trivial mod θ.
  bool congruence = false;
};

/// The group generated by the triflections in k ≤ 4 orthogonal short roots.
StratumReport stratum_stabilizer(const std::vector<EVec>& roots, const HermGram& a);

}  // namespace eislat::arrangement
