#include "eislat/herm_lattice.hpp"

#include <numeric>

#include "eislat/linalg.hpp"

namespace eislat {

HermGram::HermGram(EMat m, Frame frame) : m_(std::move(m)), frame_(frame) {
  if (!m_.square()) throw MathError("HermGram: matrix is not square");
  if (adjoint(m_) != m_) throw MathError("HermGram: matrix is not hermitian");
}

const HermGram& HermGram::diag41() {
  static const HermGram g = [] {
    EMat m = EMat::identity(5);
    m(0, 0) = EisInt(-1L);
    return HermGram(m, Frame::diag41);
  }();
  return g;
}

const HermGram& HermGram::hyp41() {
  static const HermGram g = [] {
    EMat m(5, 5);
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = EisInt(1L);
    m(3, 4) = EisInt(1L);
    m(4, 3) = EisInt(1L);
    return HermGram(m, Frame::hyp41);
  }();
  return g;
}

HermGram HermGram::standard(std::size_t n) { return HermGram(EMat::identity(n)); }

EisInt inner(const EVec& v, const EVec& w, const HermGram& a) {
  const std::size_t n = a.dim();
  if (v.size() != n || w.size() != n) throw MathError("inner: dimension/frame mismatch");
  const EMat& m = a.matrix();
  EisInt sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].is_zero()) continue;
    EisInt row;
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) row += m(i, j) * v[j];
    if (!row.is_zero()) sum += w[i].conj() * row;
  }
  return sum;
}

Int norm(const EVec& v, const HermGram& a) {
  EisInt h = inner(v, v, a);
  if (!h.is_rational()) throw MathError("norm: hermitian form returned a non-real value");
  return h.a();
}

EMat gram_of(const std::vector<EVec>& basis, const HermGram& a) {
  const std::size_t k = basis.size();
  EMat g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = inner(basis[j], basis[i], a);
  return g;
}

bool preserves(const EMat& m, const HermGram& a) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) return false;
  return adjoint(m) * a.matrix() * m == a.matrix();
}

Isometry::Isometry(EMat m, HermGram a) : m_(std::move(m)), a_(std::move(a)) {
  if (!preserves(m_, a_)) throw MathError("Isometry: matrix does not preserve the form");
}

Isometry Isometry::identity(const HermGram& a) { return {EMat::identity(a.dim()), a}; }

Isometry Isometry::scalar(const EisInt& unit, const HermGram& a) {
  if (!unit.is_unit()) throw MathError("Isometry::scalar: not a unit");
  return {EMat::identity(a.dim()).scaled(unit), a};
}

Isometry Isometry::inverse() const {
  // M⁻¹ = A⁻¹·M*·A for an isometry of a nondegenerate form.
  static const auto inv_of = [](const HermGram& g) {
    if (g.frame() != Frame::custom) return g.matrix();  // both standard frames are involutions
    return inverse_unimodular(g.matrix());
  };
  return {inv_of(a_) * adjoint(m_) * a_.matrix(), a_};
}

Isometry Isometry::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return {power(m_, static_cast<unsigned>(k)), a_};
}

Isometry operator*(const Isometry& x, const Isometry& y) {
  if (!(x.a_ == y.a_)) throw MathError("Isometry: product of isometries of different forms");
  return {x.m_ * y.m_, x.a_};
}

Isometry zeta_reflection(const EVec& v, const EisInt& zeta, const HermGram& a) {
  if (!zeta.is_unit()) throw MathError("zeta_reflection: ζ must be a unit");
  const std::size_t n = a.dim();
  if (v.size() != n) throw MathError("zeta_reflection: dimension mismatch");
  const Int vv = norm(v, a);
  if (sgn(vv) == 0) throw MathError("zeta_reflection: vector is isotropic");
  const EisInt coeff = EisInt(1L) - zeta;
  // Row vector v*·A.
  EVec dual(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero() && !a.matrix()(i, j).is_zero()) dual[j] += v[i].conj() * a.matrix()(i, j);
  EMat m = EMat::identity(n);
  const EisInt den(vv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      EisInt num = coeff * v[i] * dual[j];
      if (num.is_zero()) continue;
      if (!divides(den, num))
        throw MathError("zeta_reflection: reflection is not integral for this (norm, ζ) pair");
      m(i, j) -= exact_div(num, den);
    }
  return {std::move(m), a};
}

// --- translations ---------------------------------------------------------

namespace {

Int lambda_norm_of(const std::array<EisInt, 3>& l) {
  Int s = 0;
  for (const auto& x : l) s += x.norm();
  return s;
}

/// ω-coefficient b of ⟨λ'|λ⟩ = Σ λ'_i·conj(λ_i); Im⟨λ'|λ⟩ = b·θ/2.
Int im_coeff(const std::array<EisInt, 3>& lp, const std::array<EisInt, 3>& l) {
  EisInt s;
  for (std::size_t i = 0; i < 3; ++i) s += lp[i] * l[i].conj();
  return s.b();
}

bool odd(const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

}  // namespace

TranslationParams::TranslationParams(std::array<EisInt, 3> l, Int kk) : lambda(std::move(l)), k(std::move(kk)) {
  if (odd(k - lambda_norm_of(lambda)))
    throw MathError("TranslationParams: k must have the parity of ⟨λ|λ⟩");
}

Int TranslationParams::lambda_norm() const { return lambda_norm_of(lambda); }

Isometry translation(const TranslationParams& p) {
  if (odd(p.k - p.lambda_norm())) throw MathError("translation: parity violation");
  EMat m = EMat::identity(5);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, 3) = p.lambda[i];
    m(4, i) = -p.lambda[i].conj();
  }
  // z − ⟨λ|λ⟩/2 = (kθ − n)/2 = (k − n)/2 + kω.
  Int half = p.k - p.lambda_norm();
  mpz_divexact_ui(half.get_mpz_t(), half.get_mpz_t(), 2);
  m(4, 3) = EisInt(half, p.k);
  return {std::move(m), HermGram::hyp41()};
}

TranslationParams compose(const TranslationParams& p, const TranslationParams& q) {
  std::array<EisInt, 3> l;
  for (std::size_t i = 0; i < 3; ++i) l[i] = p.lambda[i] + q.lambda[i];
  // The matrix product gives z'' = z + z' − Im⟨λ'|λ⟩ = z + z' + Im⟨λ|λ'⟩.
  return {l, p.k + q.k + im_coeff(p.lambda, q.lambda)};
}

TranslationParams inverse(const TranslationParams& p) {
  std::array<EisInt, 3> l;
  for (std::size_t i = 0; i < 3; ++i) l[i] = -p.lambda[i];
  return {l, -p.k};
}

TranslationParams commutator(const TranslationParams& p, const TranslationParams& q) {
  return {{EisInt(), EisInt(), EisInt()}, 2 * im_coeff(p.lambda, q.lambda)};
}

std::optional<TranslationParams> translation_params_of(const EMat& m) {
  if (m.rows() != 5 || m.cols() != 5) return std::nullopt;
  std::array<EisInt, 3> l;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j)
      if (m(i, j) != EisInt(i == j ? 1L : 0L)) return std::nullopt;
    if (!m(i, 4).is_zero() || !m(3, i).is_zero()) return std::nullopt;
    l[i] = m(i, 3);
    if (m(4, i) != -l[i].conj()) return std::nullopt;
  }
  if (m(3, 3) != EisInt(1L) || !m(3, 4).is_zero() || m(4, 4) != EisInt(1L)) return std::nullopt;
  const EisInt& e = m(4, 3);
  Int k = e.b();
  Int expect = k - lambda_norm_of(l);
  if (odd(expect)) return std::nullopt;
  mpz_divexact_ui(expect.get_mpz_t(), expect.get_mpz_t(), 2);
  if (e.a() != expect) return std::nullopt;
  return TranslationParams(l, k);
}

EVec rho() { return {EisInt(), EisInt(), EisInt(), EisInt(), EisInt(1L)}; }

EisInt height(const EVec& v, const HermGram& a) {
  if (a.frame() != Frame::hyp41) throw MathError("height: requires the hyperbolic frame");
  if (v.size() != 5) throw MathError("height: dimension mismatch");
  return v[3];
}

// --- base change ----------------------------------------------------------

const EMat& hyp_to_diag() {
  static const EMat m = [] {
    const EisInt w = EisInt::omega();
    const EisInt wb = EisInt::omega_bar();
    EMat b(5, 5);
    b(1, 0) = EisInt(1L);
    b(2, 1) = EisInt(1L);
    b(3, 2) = EisInt(1L);
    // Hyperbolic pair inside the (d0, d4) plane of signature (1, 1).
    b(0, 3) = EisInt(1L);
    b(4, 3) = EisInt(1L);
    b(0, 4) = w;
    b(4, 4) = -wb;
    if (adjoint(b) * HermGram::diag41().matrix() * b != HermGram::hyp41().matrix())
      throw MathError("hyp_to_diag: base change does not carry DIAG to HYP");
    return b;
  }();
  return m;
}

const EMat& diag_to_hyp() {
  static const EMat m = HermGram::hyp41().matrix() * adjoint(hyp_to_diag()) * HermGram::diag41().matrix();
  return m;
}

EVec to_diag(const EVec& v) { return hyp_to_diag() * v; }
EVec to_hyp(const EVec& v) { return diag_to_hyp() * v; }

Isometry to_diag(const Isometry& g) {
  if (g.gram().frame() != Frame::hyp41) throw MathError("to_diag: isometry is not in the hyperbolic frame");
  return {hyp_to_diag() * g.matrix() * diag_to_hyp(), HermGram::diag41()};
}

Isometry to_hyp(const Isometry& g) {
  if (g.gram().frame() != Frame::diag41) throw MathError("to_hyp: isometry is not in the diagonal frame");
  return {diag_to_hyp() * g.matrix() * hyp_to_diag(), HermGram::hyp41()};
}

// --- symplectic dictionary -------------------------------------------------

namespace {

using QMat = Matrix<mpq_class>;

Int bilinear(const IntMat& omega, const std::vector<Int>& x, const std::vector<Int>& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * omega(i, j) * y[j];
  }
  return s;
}

std::vector<Int> unit_vec(std::size_t n, std::size_t i) {
  std::vector<Int> v(n, Int(0));
  v[i] = 1;
  return v;
}

// Row-reduces over Q; returns rank.
std::size_t rank_q(QMat m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      mpq_class f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

QMat inverse_q(const QMat& a) {
  const std::size_t n = a.rows();
  QMat m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) throw MathError("inverse_q: singular matrix");
    for (std::size_t j = 0; j < 2 * n; ++j) std::swap(m(c, j), m(p, j));
    mpq_class inv = 1 / m(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) m(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m(i, c)) == 0) continue;
      mpq_class f = m(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return m.block(0, n, n, n);
}

QMat to_q(const IntMat& m) {
  QMat q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

std::vector<Int> mul(const IntMat& m, const std::vector<Int>& v) { return m * v; }

}  // namespace

EisInt symplectic_to_hermitian_value(const IntMat& omega, const IntMat& sigma, const std::vector<Int>& x,
                                     const std::vector<Int>& y) {
  // θx = (σ − σ⁻¹)x = x + 2σx, using σ⁻¹ = σ² = −1 − σ.
  std::vector<Int> sx = mul(sigma, x);
  std::vector<Int> tx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) tx[i] = x[i] + 2 * sx[i];
  Int o = bilinear(omega, x, y);
  Int s = bilinear(omega, tx, y) + o;
  if (mpz_odd_p(s.get_mpz_t())) throw MathError("hermitian_from_symplectic: value not in E");
  Int half = -s;
  mpz_divexact_ui(half.get_mpz_t(), half.get_mpz_t(), 2);
  // −(Ω(θx, y) + θΩ(x, y))/2 with θ = 1 + 2ω.
  return {half, -o};
}

SymplecticHermitian hermitian_from_symplectic(const IntMat& omega, const IntMat& sigma) {
  const std::size_t dim = omega.rows();
  if (!omega.square() || dim % 2 != 0 || sigma.rows() != dim || !sigma.square())
    throw MathError("hermitian_from_symplectic: expected even-rank square matrices");
  if (omega.transpose() != -omega) throw MathError("hermitian_from_symplectic: Ω is not antisymmetric");
  IntMat id = IntMat::identity(dim);
  if (sigma * sigma + sigma + id != IntMat(dim, dim))
    throw MathError("hermitian_from_symplectic: σ does not satisfy σ² + σ + 1 = 0");
  if (sigma.transpose() * omega * sigma != omega)
    throw MathError("hermitian_from_symplectic: σ does not preserve Ω");
  const std::size_t n = dim / 2;

  // Q(ω)-basis e_1..e_n chosen greedily among the standard vectors.
  std::vector<std::vector<Int>> es;
  std::vector<std::vector<Int>> cols;
  for (std::size_t k = 0; k < dim && es.size() < n; ++k) {
    std::vector<Int> u = unit_vec(dim, k);
    auto trial = cols;
    trial.push_back(u);
    trial.push_back(mul(sigma, u));
    if (rank_q(to_q(IntMat::from_columns(trial))) == trial.size()) {
      es.push_back(u);
      cols = std::move(trial);
    }
  }
  if (es.size() != n) throw MathError("hermitian_from_symplectic: failed to find an E-basis");
  const QMat binv = inverse_q(to_q(IntMat::from_columns(cols)));

  // E-coordinates of every standard vector, then one common denominator.
  std::vector<std::vector<mpq_class>> coords(dim);
  Int den = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    coords[k].resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      coords[k][i] = binv(i, k);
      den = lcm(den, Int(coords[k][i].get_den()));
    }
  }
  EMat gens(dim, n);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class a = coords[k][2 * i] * den, b = coords[k][2 * i + 1] * den;
      gens(k, i) = EisInt(a.get_num(), b.get_num());
    }
  HnfResult h = hnf(gens);
  if (h.rank != n) throw MathError("hermitian_from_symplectic: rank defect");

  IntMat basis(dim, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Int> f(dim, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
      const EisInt& c = h.H(j, i);
      std::vector<Int> se = mul(sigma, es[i]);
      for (std::size_t t = 0; t < dim; ++t) f[t] += c.a() * es[i][t] + c.b() * se[t];
    }
    for (auto& x : f) {
      if (mpz_divisible_p(x.get_mpz_t(), den.get_mpz_t()) == 0)
        throw MathError("hermitian_from_symplectic: E-basis not integral");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t t = 0; t < dim; ++t) basis(t, j) = f[t];
  }

  EMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = symplectic_to_hermitian_value(omega, sigma, basis.col(j), basis.col(i));
  HermGram gram(g);
  EisInt d = determinant(g);
  if (!d.is_unit()) throw MathError("hermitian_from_symplectic: Ω is not unimodular");
  return {std::move(gram), std::move(basis)};
}

SymplecticData symplectic_from_hermitian(const HermGram& h) {
  const std::size_t n = h.dim();
  const std::size_t dim = 2 * n;
  auto e_coords = [n](std::size_t p) {
    EVec v(n);
    v[p / 2] = (p % 2 == 0) ? EisInt(1L) : EisInt::omega();
    return v;
  };
  IntMat omega(dim, dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      EisInt v = inner(e_coords(p), e_coords(q), h);
      // (h(y, x) − h(x, y))/θ = −(ω-coefficient of h(x, y)).
      omega(p, q) = -v.b();
    }
  IntMat sigma(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    sigma(2 * i + 1, 2 * i) = 1;
    sigma(2 * i, 2 * i + 1) = -1;
    sigma(2 * i + 1, 2 * i + 1) = -1;
  }
  return {std::move(omega), std::move(sigma)};
}

}  // namespace eislat
