#pragma once

#include <array>
#include <optional>

#include "eislat/matrix.hpp"

namespace eislat {

/// Which coordinate system a Gram matrix describes.
enum class Frame {
  diag41,  // diag(−1, 1, 1, 1, 1)
  hyp41,   // I_3 ⊕ [[0, 1], [1, 0]]: coordinates (λ1, λ2, λ3; μ, ν)
  custom,
};

/// A hermitian Gram matrix over E. Convention: h(x, y) = y*·A·x, linear in x.
class HermGram {
 public:
  explicit HermGram(EMat m, Frame frame = Frame::custom);

  static const HermGram& diag41();
  static const HermGram& hyp41();
  /// The positive-definite E^n with the standard form.
  static HermGram standard(std::size_t n);

  const EMat& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  Frame frame() const { return frame_; }

  friend bool operator==(const HermGram& x, const HermGram& y) {
    return x.frame_ == y.frame_ && x.m_ == y.m_;
  }

 private:
  EMat m_;
  Frame frame_;
};

EisInt inner(const EVec& v, const EVec& w, const HermGram& a);
/// h(v, v), always a rational integer.
Int norm(const EVec& v, const HermGram& a);

/// Gram matrix G(i, j) = h(b_j, b_i) of a list of vectors, so that
/// h(Σ x_j b_j, Σ y_i b_i) = y*·G·x matches the HermGram convention.
EMat gram_of(const std::vector<EVec>& basis, const HermGram& a);

/// A matrix M with M*·A·M = A, checked on construction.
class Isometry {
 public:
  Isometry(EMat m, HermGram a);

  static Isometry identity(const HermGram& a);
  static Isometry scalar(const EisInt& unit, const HermGram& a);

  const EMat& matrix() const { return m_; }
  const HermGram& gram() const { return a_; }

  EVec apply(const EVec& v) const { return m_ * v; }
  Isometry inverse() const;
  Isometry pow(int k) const;

  friend Isometry operator*(const Isometry& x, const Isometry& y);
  friend bool operator==(const Isometry& x, const Isometry& y) { return x.m_ == y.m_; }

 private:
  EMat m_;
  HermGram a_;
};

bool preserves(const EMat& m, const HermGram& a);

/// The ζ-reflection x ↦ x − (1 − ζ)·h(x, v)/h(v, v)·v.
/// Throws MathError if ζ is not a unit, h(v, v) = 0, or the map is not integral.
Isometry zeta_reflection(const EVec& v, const EisInt& zeta, const HermGram& a);

inline Isometry hexflection(const EVec& v, const HermGram& a) {
  return zeta_reflection(v, EisInt(0L, -1L), a);
}
inline Isometry triflection(const EVec& v, const HermGram& a) {
  return zeta_reflection(v, EisInt::omega(), a);
}
inline Isometry biflection(const EVec& v, const HermGram& a) {
  return zeta_reflection(v, EisInt(-1L), a);
}

/// Heisenberg translation parameters in the hyperbolic frame: z = k·θ/2 with
/// k ≡ ⟨λ|λ⟩ (mod 2).
struct TranslationParams {
  std::array<EisInt, 3> lambda;
  Int k;

  TranslationParams() = default;
  TranslationParams(std::array<EisInt, 3> l, Int kk);

  Int lambda_norm() const;
  friend bool operator==(const TranslationParams&, const TranslationParams&) = default;
};

Isometry translation(const TranslationParams& p);
/// Parameters of T·T': λ + λ', z + z' + Im⟨λ|λ'⟩.
TranslationParams compose(const TranslationParams& p, const TranslationParams& q);
TranslationParams inverse(const TranslationParams& p);
/// Parameters of T·T'·T⁻¹·T'⁻¹.
TranslationParams commutator(const TranslationParams& p, const TranslationParams& q);
/// Reads back the parameters of a translation matrix; nullopt for other matrices.
std::optional<TranslationParams> translation_params_of(const EMat& m);

/// The null vector ρ = (0, 0, 0; 0, 1) of the hyperbolic frame.
EVec rho();
/// h(v, ρ) = the second-to-last coordinate. Requires the hyperbolic frame.
EisInt height(const EVec& v, const HermGram& a = HermGram::hyp41());

/// Unimodular M with M*·DIAG·M = HYP; column j is the diagonal-frame image of
/// hyperbolic basis vector j.
const EMat& hyp_to_diag();
const EMat& diag_to_hyp();
EVec to_diag(const EVec& hyp_vector);
EVec to_hyp(const EVec& diag_vector);
Isometry to_diag(const Isometry& hyp_isometry);
Isometry to_hyp(const Isometry& diag_isometry);

/// Output of the symplectic → hermitian construction.
struct SymplecticHermitian {
  HermGram gram;
  /// Column j is the Z-coordinate vector of E-basis element f_j.
  IntMat basis;
};

/// Builds h(x, y) = −(Ω(θx, y) + θ·Ω(x, y))/2 where θx = (σ − σ⁻¹)x, on an
/// E-basis of (Z^{2n}, σ) found by the construction. Throws MathError if σ does
/// not satisfy σ² + σ + 1 = 0, does not preserve Ω, or Ω is not unimodular.
SymplecticHermitian hermitian_from_symplectic(const IntMat& omega, const IntMat& sigma);

struct SymplecticData {
  IntMat omega;
  IntMat sigma;
};

/// Inverse direction on the Z-basis (e_1, ωe_1, …, e_n, ωe_n):
/// Ω(x, y) = (h(y, x) − h(x, y))/θ and σ = multiplication by ω.
SymplecticData symplectic_from_hermitian(const HermGram& h);

/// Evaluates the hermitian form of the construction on two Z-vectors.
EisInt symplectic_to_hermitian_value(const IntMat& omega, const IntMat& sigma, const std::vector<Int>& x,
                                     const std::vector<Int>& y);

}  // namespace eislat
