#pragma once

#include <vector>

#include "eislat/herm_lattice.hpp"

namespace eislat {

/// Row-echelon form U·M = H with U unimodular. Pivots are canonical associates
/// and entries above a pivot are reduced by nearest_quotient. The first `rank`
/// rows of H are nonzero, the rest vanish.
struct HnfResult {
  EMat H;
  EMat U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};
HnfResult hnf(const EMat& m);

/// U·M·V = D with U, V unimodular and D diagonal, d_1 | d_2 | …;
/// `divisors` holds the diagonal of D (canonical associates, zeros at the end).
struct SnfResult {
  EMat U;
  EMat D;
  EMat V;
  std::vector<EisInt> divisors;
};
SnfResult snf(const EMat& m);

EisInt determinant(const EMat& m);
Int determinant(const IntMat& m);
/// Inverse of a matrix whose determinant is a unit; throws otherwise.
EMat inverse_unimodular(const EMat& m);

std::size_t rank(const EMat& m);
/// Saturated basis (as rows) of {x : M·x = 0}.
std::vector<EVec> kernel(const EMat& m);
/// True when the two lists of vectors span the same E-module.
bool same_span(const std::vector<EVec>& a, const std::vector<EVec>& b);

/// Coefficients of det(tI − M), lowest degree first (monic).
std::vector<Int> charpoly(const IntMat& m);

/// Realification of a hermitian Gram on the Z-basis (e_1, ωe_1, e_2, …):
/// the symmetric integer matrix S with zᵀ·S·z = 2·h(x, x).
IntMat realify(const EMat& gram);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
/// Signature of a hermitian matrix over E, counted in complex dimensions.
Inertia inertia(const EMat& hermitian);
/// Signature of a symmetric integer matrix.
Inertia inertia(const IntMat& symmetric);

/// All leading principal minors of the realified form are positive.
bool is_positive_definite(const EMat& hermitian);

class Sublattice {
 public:
  /// Throws MathError if the basis is not E-linearly independent.
  Sublattice(HermGram ambient, std::vector<EVec> basis);

  const HermGram& ambient() const { return ambient_; }
  const std::vector<EVec>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  const EMat& gram() const { return gram_; }
  Int determinant() const;
  bool is_positive_definite() const { return eislat::is_positive_definite(gram_); }
  /// Ambient vector Σ c_i b_i.
  EVec combine(const EVec& coeffs) const;

 private:
  HermGram ambient_;
  std::vector<EVec> basis_;
  EMat gram_;
};

/// Saturated basis of {x : h(x, v) = 0}.
Sublattice orthogonal_complement(const EVec& v, const HermGram& a);
Int gram_determinant(const Sublattice& l);

struct DiscElement {
  /// Coordinates in Z/d_1 × … (residues as Eisenstein integers).
  std::vector<EisInt> residues;
  /// Coefficients of a dual-lattice representative on the sublattice basis,
  /// over the common denominator `denominator`.
  EVec numerators;
  Int denominator;
  /// h(y, y) reduced into [0, 1).
  mpq_class norm;
};

/// L′/L for a nondegenerate lattice. As an abelian group its order is the
/// product of the ring norms of the elementary divisors, which equals d² for
/// the (rational) hermitian determinant d.
struct DiscGroup {
  std::vector<EisInt> divisors;  // non-unit elementary divisors
  Int cardinality;
  Int determinant;
  std::vector<DiscElement> elements;  // sorted by residues

  /// Norms of all elements, sorted.
  std::vector<mpq_class> norm_multiset() const;
};
DiscGroup disc_group(const EMat& gram);
inline DiscGroup disc_group(const Sublattice& l) { return disc_group(l.gram()); }

/// Representatives of E/dE (d ≠ 0), norm(d) of them, in a fixed order.
std::vector<EisInt> residues_mod(const EisInt& d);

/// Reduces a rational into [0, 1).
mpq_class frac(const mpq_class& x);

/// Coefficient vectors x with x*·G·x = t for a positive-definite Gram G,
/// sorted lexicographically. Exact: a floating-point box is only a prefilter.
std::vector<EVec> enumerate_norm_coords(const EMat& gram, const Int& t);
/// Ambient vectors of norm t in a positive-definite sublattice.
std::vector<EVec> enumerate_norm(const Sublattice& l, const Int& t);

}  // namespace eislat
