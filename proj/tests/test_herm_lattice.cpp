#include <random>

#include <gtest/gtest.h>

#include "eislat/herm_lattice.hpp"
#include "eislat/linalg.hpp"

using namespace eislat;

namespace {

const EisInt w = EisInt::omega();
const EisInt wb = EisInt::omega_bar();
const EisInt th = EisInt::theta();

EVec vec(std::initializer_list<EisInt> xs) { return EVec(xs); }

EisInt random_eis(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  return {d(rng), d(rng)};
}

TranslationParams random_params(std::mt19937_64& rng, long range) {
  std::array<EisInt, 3> l{random_eis(rng, range), random_eis(rng, range), random_eis(rng, range)};
  Int n = l[0].norm() + l[1].norm() + l[2].norm();
  std::uniform_int_distribution<long> d(-range, range);
  Int k = 2 * d(rng) + (mpz_odd_p(n.get_mpz_t()) ? 1 : 0);
  return {l, k};
}

// Product of random elementary E-matrices, so unimodular by construction.
EMat random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  EMat m = EMat::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      EMat e = EMat::identity(n);
      e(i, i) = EisInt::unit(static_cast<int>(rng() % 6));
      m = e * m;
      continue;
    }
    EMat e = EMat::identity(n);
    e(i, j) = random_eis(rng, 2);
    m = e * m;
  }
  return m;
}

}  // namespace

TEST(HermLattice, RejectsNonHermitian) {
  EXPECT_THROW(HermGram(EMat{{EisInt(1L), w}, {w, EisInt(1L)}}), MathError);
  EXPECT_NO_THROW(HermGram(EMat{{EisInt(1L), w}, {wb, EisInt(1L)}}));
}

TEST(HermLattice, InnerProductsInHyperbolicFrame) {
  const auto& hyp = HermGram::hyp41();
  EVec r1 = vec({1L, 0L, 0L, 0L, 0L});
  EVec r2 = vec({1L, 0L, 0L, 0L, 1L});
  EVec r3 = vec({0L, 0L, 0L, 1L, -w});
  EXPECT_EQ(inner(r1, r1, hyp), EisInt(1L));
  EXPECT_EQ(inner(rho(), rho(), hyp), EisInt(0L));
  EXPECT_EQ(inner(r3, r2, hyp), EisInt(1L));
  EXPECT_EQ(norm(r3, hyp), 1);
  EXPECT_EQ(height(r3), EisInt(1L));
  EXPECT_EQ(height(rho()), EisInt(0L));
  EXPECT_EQ(inner(r3, rho(), hyp), height(r3));
  EXPECT_THROW(height(r1, HermGram::diag41()), MathError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    EVec x(5), y(5);
    for (auto& c : x) c = random_eis(rng, 20);
    for (auto& c : y) c = random_eis(rng, 20);
    EXPECT_EQ(inner(x, y, hyp), inner(y, x, hyp).conj());
    EisInt s = random_eis(rng, 5);
    EVec sx(5);
    for (std::size_t j = 0; j < 5; ++j) sx[j] = s * x[j];
    EXPECT_EQ(inner(sx, y, hyp), s * inner(x, y, hyp));
  }
}

TEST(HermLattice, ReflectionOrders) {
  const auto& hyp = HermGram::hyp41();
  EVec r1 = vec({1L, 0L, 0L, 0L, 0L});
  Isometry hex = hexflection(r1, hyp);
  EVec img = hex.apply(r1);
  EXPECT_EQ(img, vec({EisInt(0L, -1L), 0L, 0L, 0L, 0L}));
  EXPECT_TRUE(hex.pow(6).matrix().is_identity());
  for (int k = 1; k < 6; ++k) EXPECT_FALSE(hex.pow(k).matrix().is_identity());
  EXPECT_EQ(hex.pow(3), biflection(r1, hyp));
  EXPECT_EQ(hex.pow(2), zeta_reflection(r1, wb, hyp));
  EXPECT_EQ(hex.pow(4), triflection(r1, hyp));
  EXPECT_TRUE(triflection(r1, hyp).pow(3).matrix().is_identity());
  EXPECT_EQ(hex.pow(-1) * hex, Isometry::identity(hyp));

  // A vector orthogonal to the root is fixed.
  EVec x = vec({0L, 3L, w, 2L, -1L});
  EXPECT_EQ(hex.apply(x), x);
}

TEST(HermLattice, BiflectionSwapsArms) {
  const auto& hyp = HermGram::hyp41();
  Isometry b = biflection(vec({1L, -1L, 0L, 0L, 0L}), hyp);
  EVec x = vec({EisInt(2L, 1L), EisInt(-5L), EisInt(7L), EisInt(1L), EisInt(3L)});
  EXPECT_EQ(b.apply(x), vec({EisInt(-5L), EisInt(2L, 1L), EisInt(7L), EisInt(1L), EisInt(3L)}));
}

TEST(HermLattice, IllegalReflectionsThrow) {
  const auto& hyp = HermGram::hyp41();
  EVec long_root = vec({1L, -1L, 0L, 0L, 0L});
  EXPECT_THROW(hexflection(long_root, hyp), MathError);
  EXPECT_NO_THROW(biflection(long_root, hyp));
  EXPECT_THROW(hexflection(rho(), hyp), MathError);
  EXPECT_THROW(zeta_reflection(vec({1L, 0L, 0L, 0L, 0L}), EisInt(2L), hyp), MathError);
}

TEST(HermLattice, TranslationLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    TranslationParams p = random_params(rng, 6), q = random_params(rng, 6);
    Isometry tp = translation(p), tq = translation(q);
    EXPECT_EQ(tp * tq, translation(compose(p, q)));
    EXPECT_TRUE((tp * translation(inverse(p))).matrix().is_identity());
    EXPECT_EQ(tp * tq * tp.inverse() * tq.inverse(), translation(commutator(p, q)));
    EXPECT_EQ(tp.apply(rho()), rho());
    auto back = translation_params_of(tp.matrix());
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
    EVec v(5);
    for (auto& c : v) c = random_eis(rng, 30);
    EXPECT_EQ(height(tp.apply(v)), height(v));
  }
  EXPECT_THROW(TranslationParams({EisInt(1L), EisInt(), EisInt()}, Int(0)), MathError);
  EXPECT_FALSE(translation_params_of(EMat::identity(5).scaled(w)).has_value());
}

TEST(HermLattice, CentralTranslationIsTransvection) {
  const auto& hyp = HermGram::hyp41();
  Isometry t = translation({{EisInt(), EisInt(), EisInt()}, Int(2)});
  EXPECT_EQ(t.apply(rho()), rho());
  // On ρ⊥ the map is x ↦ x + (multiple of ρ).
  for (std::size_t i = 0; i < 3; ++i) {
    EVec e(5);
    e[i] = EisInt(1L);
    EXPECT_EQ(inner(e, rho(), hyp), EisInt());
    EXPECT_EQ(t.apply(e), e);
  }
  EVec mu = vec({0L, 0L, 0L, 1L, 0L});
  EVec img = t.apply(mu);
  EXPECT_EQ(img, vec({0L, 0L, 0L, 1L, th}));
}

TEST(HermLattice, BaseChange) {
  const EMat& m = hyp_to_diag();
  EXPECT_EQ(adjoint(m) * HermGram::diag41().matrix() * m, HermGram::hyp41().matrix());
  EXPECT_TRUE(determinant(m).is_unit());
  EXPECT_TRUE((m * diag_to_hyp()).is_identity());
  EXPECT_EQ(norm(to_diag(rho()), HermGram::diag41()), 0);

  // The hyperbolic cell inside diag(1, −1): f1 = (1, 1), f2 = (−ω̄, ω).
  HermGram plane(EMat{{EisInt(1L), EisInt()}, {EisInt(), EisInt(-1L)}});
  EVec f1 = vec({1L, 1L}), f2 = vec({-wb, w});
  EXPECT_EQ(inner(f1, f1, plane), EisInt());
  EXPECT_EQ(inner(f2, f2, plane), EisInt());
  EXPECT_EQ(inner(f1, f2, plane), EisInt(1L));
  EXPECT_TRUE(determinant(EMat::from_columns({f1, f2})).is_unit());

  Isometry r = hexflection(vec({0L, 0L, 0L, 1L, -w}), HermGram::hyp41());
  Isometry rd = to_diag(r);
  EXPECT_EQ(to_hyp(rd), r);
  EXPECT_EQ(rd, hexflection(to_diag(vec({0L, 0L, 0L, 1L, -w})), HermGram::diag41()));
}

TEST(HermLattice, SymplecticRankTwo) {
  IntMat omega{{Int(0), Int(1)}, {Int(-1), Int(0)}};
  IntMat sigma{{Int(0), Int(-1)}, {Int(1), Int(-1)}};
  SymplecticHermitian sh = hermitian_from_symplectic(omega, sigma);
  ASSERT_EQ(sh.gram.dim(), 1u);
  EXPECT_TRUE(sh.gram.matrix()(0, 0) == EisInt(1L) || sh.gram.matrix()(0, 0) == EisInt(-1L));
  SymplecticData back = symplectic_from_hermitian(sh.gram);
  EXPECT_EQ(back.sigma, sigma);
  EXPECT_EQ(back.omega.transpose(), -back.omega);
  EXPECT_THROW(hermitian_from_symplectic(omega, IntMat::identity(2)), MathError);
}

TEST(HermLattice, SymplecticRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    EMat d = EMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 2) d(i, i) = EisInt(-1L);
    EMat u = random_unimodular(rng, n, 6);
    HermGram h(adjoint(u) * d * u);
    SymplecticData sd = symplectic_from_hermitian(h);

    // Scramble the Z-basis by a random P ∈ GL(2n, Z), tracked with its inverse.
    const std::size_t dim = 2 * n;
    IntMat p = IntMat::identity(dim), pinv = IntMat::identity(dim);
    for (int s = 0; s < 8; ++s) {
      std::size_t i = rng() % dim, j = rng() % dim;
      if (i == j) continue;
      long c = static_cast<long>(rng() % 5) - 2;
      IntMat e = IntMat::identity(dim), einv = IntMat::identity(dim);
      e(i, j) = c;
      einv(i, j) = -c;
      p = p * e;
      pinv = einv * pinv;
    }
    IntMat omega = p.transpose() * sd.omega * p;
    IntMat sigma = pinv * sd.sigma * p;

    SymplecticHermitian out = hermitian_from_symplectic(omega, sigma);
    EXPECT_TRUE(determinant(out.gram.matrix()).is_unit());
    EXPECT_EQ(inertia(out.gram.matrix()), inertia(h.matrix()));

    // Z-basis (f_1, σf_1, …) must be unimodular and reproduce Ω exactly.
    std::vector<std::vector<Int>> cols;
    for (std::size_t j = 0; j < n; ++j) {
      cols.push_back(out.basis.col(j));
      cols.push_back(sigma * out.basis.col(j));
    }
    IntMat f = IntMat::from_columns(cols);
    Int det = determinant(f);
    EXPECT_TRUE(det == 1 || det == -1);
    SymplecticData again = symplectic_from_hermitian(out.gram);
    EXPECT_EQ(again.omega, f.transpose() * omega * f);
    EXPECT_EQ(sigma * f, f * again.sigma);

    // Hermitian symmetry and E-linearity of the constructed form.
    for (int s = 0; s < 5; ++s) {
      std::vector<Int> x(dim), y(dim);
      for (auto& c : x) c = static_cast<long>(rng() % 11) - 5;
      for (auto& c : y) c = static_cast<long>(rng() % 11) - 5;
      EisInt hxy = symplectic_to_hermitian_value(omega, sigma, x, y);
      EXPECT_EQ(hxy, symplectic_to_hermitian_value(omega, sigma, y, x).conj());
      EXPECT_EQ(symplectic_to_hermitian_value(omega, sigma, sigma * x, y), w * hxy);
      // Ω(x, y) = (h(y, x) − h(x, y))/θ.
      Int o = 0;
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) o += x[a] * omega(a, b) * y[b];
      EXPECT_EQ(exact_div(hxy.conj() - hxy, th), EisInt(o));
    }
  }
}
