#include <gtest/gtest.h>

#include "eislat/arrangement.hpp"
#include "eislat/classify.hpp"
#include "eislat/f3_geom.hpp"

using namespace eislat;
using namespace eislat::classify;

namespace {

const HermGram& diag() { return HermGram::diag41(); }

// Short roots r ⊥ v with norm(r0) ≤ 6, through the arrangement's mirror list.
std::size_t orthogonal_mirrors(const EVec& v) {
  std::size_t n = 0;
  for (const auto& m : arrangement::short_root_mirrors(6)) n += inner(m.root(), v, diag()).is_zero();
  return n;
}

}  // namespace

TEST(Classify, RepresentativeNorms) {
  // norm(3 + ω) = 9 − 3 + 1 = 7, so −7 + 4 = −3; and −9 + 4 = −5.
  EXPECT_EQ(fermat_point()[0], EisInt(3L, 1L));
  EXPECT_EQ(norm(fermat_point(), diag()), -3);
  EXPECT_EQ(norm(diagonal_point(), diag()), -5);
}

TEST(Classify, OrthogonalShortRoots) {
  EXPECT_EQ(orthogonal_short_roots({1L, 0L, 0L, 0L, 0L}).size(), 24u);
  EXPECT_EQ(orthogonal_mirrors({1L, 0L, 0L, 0L, 0L}), 4u);
  EXPECT_TRUE(orthogonal_short_roots(diagonal_point()).empty());
  EXPECT_TRUE(orthogonal_short_roots(fermat_point()).empty());
  EXPECT_EQ(orthogonal_mirrors(diagonal_point()), 0u);
  EXPECT_EQ(orthogonal_mirrors(fermat_point()), 0u);
  // (2, 1, 1, 1, 0) has norm −1 and is orthogonal to the roots ±units·e4 at least.
  auto roots = orthogonal_short_roots({2L, 1L, 1L, 1L, 0L});
  EXPECT_GE(roots.size(), 6u);
  for (const auto& r : roots) EXPECT_EQ(norm(r, diag()), 1);
  EXPECT_THROW(orthogonal_short_roots({0L, 1L, 0L, 0L, 0L}), MathError);
  EXPECT_THROW(orthogonal_short_roots({1L, 1L, 0L, 0L, 0L}), MathError);
}

TEST(Classify, GluingProfiles) {
  auto d = gluing_profile(diagonal_point());
  EXPECT_EQ(d.complement.cardinality, 25);
  EXPECT_EQ(d.line.cardinality, 25);
  EXPECT_EQ(d.complement.determinant, 5);
  EXPECT_EQ(d.glue_classes, 25u);
  EXPECT_TRUE(d.pass());

  // ⟨v⟩′ = (1/5)·E·v with norms −norm(a)/5 mod 1.
  std::vector<mpq_class> by_hand;
  for (long x = 0; x < 5; ++x)
    for (long y = 0; y < 5; ++y) by_hand.push_back(frac(mpq_class(-EisInt(x, y).norm(), 5)));
  std::sort(by_hand.begin(), by_hand.end());
  EXPECT_EQ(d.line.norm_multiset(), by_hand);

  auto f = gluing_profile(fermat_point());
  EXPECT_EQ(f.complement.cardinality, 9);
  EXPECT_EQ(f.line.cardinality, 9);
  EXPECT_EQ(f.complement.determinant, 3);
  EXPECT_TRUE(f.pass());

  auto e = gluing_profile({1L, 0L, 0L, 0L, 0L});
  EXPECT_EQ(e.complement.cardinality, 1);
  EXPECT_EQ(e.line.cardinality, 1);
  EXPECT_TRUE(e.pass());

  EXPECT_THROW(gluing_profile({6L, 2L, 2L, 2L, 2L}), MathError);
  EXPECT_THROW(gluing_profile({0L, 1L, 0L, 0L, 0L}), MathError);
}

TEST(Classify, FermatComplement) {
  auto rep = fermat_complement_check(fermat_point());
  EXPECT_EQ(rep.complement_det, 3);
  EXPECT_EQ(rep.d4_det, 3);
  EXPECT_EQ(rep.d4_counts[0], 0u);
  EXPECT_EQ(rep.complement_counts, rep.d4_counts);
  ASSERT_EQ(rep.isometry, SearchStatus::found);
  EXPECT_TRUE(rep.pass());
  // The bases have equal Grams and span their lattices, so b_i ↦ y_i is an isometry.
  Sublattice perp = orthogonal_complement(fermat_point(), diag());
  Sublattice d4 = d4_theta();
  EXPECT_EQ(gram_of(rep.source_basis, diag()), gram_of(rep.target_basis, d4.ambient()));
  EXPECT_TRUE(same_span(rep.source_basis, perp.basis()));
  EXPECT_TRUE(same_span(rep.target_basis, d4.basis()));

  EXPECT_EQ(fermat_complement_check(fermat_point(), 5).isometry, SearchStatus::budget);
  // v⊥ for the diagonal point has determinant 5: the Grams cannot match.
  EXPECT_FALSE(fermat_complement_check(diagonal_point()).pass());
}

TEST(Classify, DiagonalComplement) {
  auto rep = diagonal_complement_check(diagonal_point());
  ASSERT_EQ(rep.chain.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Int n = rep.chain_gram(i, j).norm();
      if (i == j) EXPECT_EQ(rep.chain_gram(i, j), EisInt(2L));
      else if (i + 1 == j || j + 1 == i) EXPECT_EQ(n, 1);
      else EXPECT_EQ(n, 0);
      EXPECT_TRUE(inner(rep.chain[i], diagonal_point(), diag()).is_zero());
    }
  EXPECT_EQ(rep.chain_det, 5);
  EXPECT_EQ(rep.complement_det, 5);
  EXPECT_TRUE(rep.saturated);
  EXPECT_TRUE(rep.pass());
}

TEST(Classify, BiflectionTypes) {
  const EVec lr{0L, 0L, 0L, 1L, -1L};
  Isometry b = biflection(lr, diag());
  auto t = biflection_transform_type(b);
  EXPECT_EQ(t.norm, 2);
  EXPECT_TRUE(t.long_root);
  EXPECT_TRUE(t.norm_in_range);
  EXPECT_EQ(biflection(t.root, diag()), b);

  auto t0 = biflection_transform_type(biflection({1L, 0L, 0L, 0L, 0L}, diag()));
  EXPECT_EQ(t0.norm, -1);
  EXPECT_FALSE(t0.long_root);

  auto t1 = biflection_transform_type(biflection({0L, 1L, 0L, 0L, 0L}, diag()));
  EXPECT_EQ(t1.norm, 1);

  const auto id = Isometry::identity(diag());
  EXPECT_THROW(biflection_transform_type(id), MathError);
  EXPECT_THROW(biflection_transform_type(Isometry::scalar(EisInt(-1L), diag())), MathError);
  EXPECT_THROW(biflection_transform_type(hexflection({0L, 1L, 0L, 0L, 0L}, diag())), MathError);
  EXPECT_THROW(biflection_transform_type(b * biflection({0L, 1L, 0L, 0L, 0L}, diag())), MathError);

  // −B has spinor norm +1 while B and −1 each have −1.
  auto q = f3::Quadratic::from_gram(diag());
  const Isometry minus = Isometry::scalar(EisInt(-1L), diag());
  EXPECT_EQ(f3::spinor_norm(f3::reduce(b), q), -1);
  EXPECT_EQ(f3::spinor_norm(f3::reduce(minus), q), -1);
  EXPECT_EQ(f3::spinor_norm(f3::reduce(minus * b), q), 1);
}

TEST(Classify, PointNames) {
  EXPECT_EQ(classify_point(diagonal_point()).name, "diagonal point");
  EXPECT_EQ(classify_point(fermat_point()).name, "Fermat point");
  auto e = classify_point({1L, 0L, 0L, 0L, 0L});
  EXPECT_EQ(e.orthogonal_short_roots, 24u);
  EXPECT_EQ(e.name, "");
  EXPECT_THROW(classify_point({0L, 1L, 0L, 0L, 0L}), MathError);
}

TEST(Classify, OrbitInvariance) {
  for (const auto& v : {diagonal_point(), fermat_point()}) {
    auto rep = orbit_invariance(v, 7, 15);
    EXPECT_EQ(rep.samples, 15u);
    EXPECT_TRUE(rep.pass());
  }
}

TEST(Classify, LongRootTransitivity) {
  auto rep = long_root_transitivity(42, 60);
  EXPECT_EQ(rep.samples, 60u);
  EXPECT_GE(rep.fraction(), 0.95);
}
