#include <random>

#include <gtest/gtest.h>

#include "eislat/eisint.hpp"

using namespace eislat;

namespace {

EisInt random_eis(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  return {d(rng), d(rng)};
}

}  // namespace

TEST(EisInt, UnitsAndTheta) {
  const EisInt w = EisInt::omega();
  EXPECT_EQ(w * w * w, EisInt(1L));
  EXPECT_EQ(w * w, EisInt::omega_bar());
  EXPECT_EQ(EisInt::theta() * EisInt::theta(), EisInt(-3L));
  EXPECT_EQ(EisInt::theta().conj(), -EisInt::theta());
  EXPECT_EQ(EisInt::theta(), w - EisInt::omega_bar());
  for (int k = 0; k < 6; ++k) EXPECT_TRUE(EisInt::unit(k).is_unit());
  EXPECT_EQ(EisInt::unit(1), EisInt(0L, -1L));
  EXPECT_EQ(EisInt::unit(6), EisInt(1L));
  EXPECT_EQ(EisInt::unit(3), EisInt(-1L));
}

TEST(EisInt, Norms) {
  EXPECT_EQ(EisInt::theta().norm(), 3);
  EXPECT_EQ(EisInt::omega().norm(), 1);
  EXPECT_EQ((EisInt(2L) - EisInt::omega_bar()).norm(), 7);
  EXPECT_EQ(EisInt(2L) - EisInt::omega_bar(), EisInt(3L, 1L));
}

TEST(EisInt, RingLawsAndConjugation) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    EisInt x = random_eis(rng, 1000), y = random_eis(rng, 1000), z = random_eis(rng, 1000);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    EXPECT_EQ(x.conj().conj(), x);
    EXPECT_EQ(x * x.conj(), EisInt(x.norm()));
  }
}

TEST(EisInt, LargeComponents) {
  EisInt x(Int("123456789012345678901234567890"), Int("-98765432109876543210"));
  EXPECT_EQ((x * x).norm(), x.norm() * x.norm());
}

TEST(EisInt, EuclidDivision) {
  DivResult r = euclid_div(EisInt::theta(), EisInt(2L));
  EXPECT_EQ(r.quotient, EisInt::omega());
  EXPECT_EQ(r.remainder, EisInt(1L));
  r = euclid_div(EisInt(6L), EisInt::theta());
  EXPECT_EQ(r.quotient, EisInt(-2L) * EisInt::theta());
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_THROW(euclid_div(EisInt(1L), EisInt()), MathError);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    EisInt n = random_eis(rng, 10000), d = random_eis(rng, 100);
    if (d.is_zero()) continue;
    DivResult qr = euclid_div(n, d);
    EXPECT_EQ(qr.quotient * d + qr.remainder, n);
    EXPECT_LT(qr.remainder.norm(), d.norm());
  }
}

TEST(EisInt, NearestQuotientMatchesBruteForce) {
  EXPECT_EQ(nearest_quotient(EisInt::theta(), EisInt(2L)), EisInt::omega());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    EisInt n = random_eis(rng, 500), d = random_eis(rng, 40);
    if (d.is_zero()) continue;
    EisInt q = nearest_quotient(n, d);
    Int got = (n - q * d).norm();
    EXPECT_LE(3 * got, d.norm());
    // Oracle: scan a radius-2 box around the floor of the exact quotient.
    EisInt num = n * d.conj();
    Int a0 = num.a() / d.norm(), b0 = num.b() / d.norm();
    Int best = -1;
    for (long da = -2; da <= 2; ++da)
      for (long db = -2; db <= 2; ++db) {
        Int r = (n - EisInt(a0 + da, b0 + db) * d).norm();
        if (best < 0 || r < best) best = r;
      }
    EXPECT_EQ(got, best);
  }
  EisInt x(7L, -3L), d(2L, 5L);
  EXPECT_EQ(nearest_quotient(x * d, d), x);
}

TEST(EisInt, ModTheta) {
  EXPECT_EQ(mod_theta(EisInt::theta()).value(), 0);
  EXPECT_EQ(mod_theta(EisInt::omega()).value(), 1);
  EXPECT_TRUE(divides(EisInt::theta(), EisInt::omega() - EisInt(1L)));
  EXPECT_EQ(mod_theta(EisInt(2L)).value(), 2);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 3000; ++i) {
    EisInt x = random_eis(rng, 1000), y = random_eis(rng, 1000);
    EXPECT_EQ(mod_theta(x + y), mod_theta(x) + mod_theta(y));
    EXPECT_EQ(mod_theta(x * y), mod_theta(x) * mod_theta(y));
    EXPECT_EQ(mod_theta(x).value() == 0, divides(EisInt::theta(), x));
  }
}

TEST(EisInt, GcdAndAssociates) {
  EXPECT_EQ(gcd(EisInt::theta(), EisInt(3L)), canonical_associate(EisInt::theta()));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    EisInt x = random_eis(rng, 300), y = random_eis(rng, 300);
    Bezout b = ext_gcd(x, y);
    EXPECT_EQ(b.s * x + b.t * y, b.g);
    if (!b.g.is_zero()) {
      EXPECT_TRUE(divides(b.g, x));
      EXPECT_TRUE(divides(b.g, y));
    }
    EisInt c = canonical_associate(x);
    for (int k = 0; k < 6; ++k) EXPECT_EQ(canonical_associate(EisInt::unit(k) * x), c);
    if (!x.is_zero()) EXPECT_TRUE(c.a() > c.b() && sgn(c.b()) >= 0);
  }
}

TEST(EisInt, Rendering) {
  EXPECT_EQ(EisInt(3L).str(), "3");
  EXPECT_EQ(EisInt(-1L, 2L).str(), "-1+2*w");
  EXPECT_EQ(EisInt(0L, -1L).str(), "-w");
  EXPECT_EQ(EisInt(0L, 1L).str(), "w");
}
