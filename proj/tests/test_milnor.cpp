#include <gtest/gtest.h>

#include "eislat/linalg.hpp"
#include "eislat/milnor.hpp"

using namespace eislat;
using namespace eislat::milnor;

namespace {

std::vector<Int> poly(std::initializer_list<long> cs) {
  std::vector<Int> out;
  for (long c : cs) out.emplace_back(c);
  return out;
}

}  // namespace

TEST(Milnor, CyclicModules) {
  auto v2 = vk(2);
  EXPECT_EQ(v2.rank(), 1u);
  EXPECT_EQ(v2.monodromy, (IntMat{{Int(-1)}}));

  // a0−a1 ↦ a1−a2, a1−a2 ↦ a2−a0 = −(a0−a1) − (a1−a2).
  auto v3 = vk(3);
  EXPECT_EQ(v3.monodromy, (IntMat{{Int(0), Int(-1)}, {Int(1), Int(-1)}}));
  EXPECT_EQ(order(v3.monodromy), 3);
  EXPECT_EQ(charpoly(v3.monodromy), poly({1, 1, 1}));

  auto v6 = vk(6);
  EXPECT_EQ(v6.rank(), 5u);
  EXPECT_EQ(order(v6.monodromy), 6);
  // 1 + t + … + t⁵ kills the module: the eigenvalues are the nontrivial 6th roots.
  EXPECT_EQ(charpoly(v6.monodromy), poly({1, 1, 1, 1, 1, 1}));

  EXPECT_THROW(vk(1), MathError);
  for (int k = 2; k <= 7; ++k) EXPECT_EQ(vk(k, true).monodromy * vk(k).monodromy, IntMat::identity(k - 1)) << k;
}

TEST(Milnor, Kronecker) {
  IntMat x{{Int(1), Int(2)}, {Int(3), Int(4)}};
  IntMat y{{Int(0), Int(5)}, {Int(6), Int(7)}};
  IntMat expected{{Int(0), Int(5), Int(0), Int(10)},
                  {Int(6), Int(7), Int(12), Int(14)},
                  {Int(0), Int(15), Int(0), Int(20)},
                  {Int(18), Int(21), Int(24), Int(28)}};
  EXPECT_EQ(kron(x, y), expected);
  // Mixed product rule.
  EXPECT_EQ(kron(x, y) * kron(y, x), kron(x * y, y * x));
}

TEST(Milnor, TensorSystems) {
  auto t22 = tensor_system({2, 2});
  EXPECT_EQ(t22.rank(), 1u);
  EXPECT_EQ(t22.monodromy, IntMat::identity(1));

  auto t = tensor_system({2, 2, 2, 3});
  EXPECT_EQ(t.rank(), 2u);
  EXPECT_EQ(t.monodromy, -vk(3).monodromy);
  EXPECT_EQ(order(t.monodromy), 6);
  EXPECT_EQ(charpoly(t.monodromy), poly({1, -1, 1}));

  auto r = tensor_system({2, 2, 2, 3}, true);
  EXPECT_EQ(r.monodromy * t.monodromy, IntMat::identity(2));
  EXPECT_EQ(charpoly(r.monodromy), poly({1, -1, 1}));

  auto big = tensor_system({3, 4, 2});
  EXPECT_EQ(big.rank(), 6u);
  EXPECT_EQ(order(big.monodromy), 12);
}

TEST(Milnor, SigmaCompatibility) {
  for (bool reversed : {false, true}) {
    auto t = tensor_system({2, 2, 2, 3}, reversed);
    auto rep = sigma_compatibility(t, 3);
    EXPECT_EQ(rep.sigma_order, 3);
    EXPECT_TRUE(rep.sigma_cyclotomic);
    EXPECT_TRUE(rep.commutes);
    EXPECT_TRUE(rep.psi_is_minus_sigma);
    EXPECT_TRUE(rep.pass());
  }
  // σ on a (−1) factor has order 2, so the report fails.
  EXPECT_FALSE(sigma_compatibility(tensor_system({2, 2, 2, 3}), 0).pass());
}

TEST(Milnor, SignatureForcing) {
  auto rep = signature_forcing_check();
  EXPECT_EQ(rep.witnesses.size(), 4u);
  EXPECT_TRUE(rep.witnesses_orthonormal);
  EXPECT_EQ(rep.max_negative_rank, 1u);
  EXPECT_EQ(rep.random_grams, 500u);
  EXPECT_EQ(rep.random_bound_violations, 0u);
  EXPECT_GT(rep.negative_vectors, 0u);
  EXPECT_EQ(rep.orthogonal_negative_pairs, 0u);
  EXPECT_TRUE(rep.pass());
  // −I_2 would need two negative directions.
  EXPECT_EQ(inertia(-EMat::identity(2)).negative, 2u);
}
