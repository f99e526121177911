#include <random>

#include <gtest/gtest.h>

#include "eislat/f3_geom.hpp"
#include "eislat/gamma_group.hpp"

using namespace eislat;
using namespace eislat::gamma;

namespace {

const EisInt o, one(1L), w = EisInt::omega(), wb = EisInt::omega_bar();

const HermGram& hyp() { return HermGram::hyp41(); }

EVec scaled(EVec v, const EisInt& u) {
  for (auto& x : v) x = u * x;
  return v;
}

// Hand-expanded h(x, y) = Σ x_i·conj(y_i) + x_μ·conj(y_ν) + x_ν·conj(y_μ).
EisInt h_by_hand(const EVec& x, const EVec& y) {
  EisInt s;
  for (int i = 0; i < 3; ++i) s += x[i] * y[i].conj();
  return s + x[3] * y[4].conj() + x[4] * y[3].conj();
}

EMat by_hand_translation(const std::array<EisInt, 3>& l, long k) {
  // Rows [I λ 0; 0 1 0; −λ* (kθ − ⟨λ|λ⟩)/2 1].
  EMat m = EMat::identity(5);
  Int n = 0;
  for (int i = 0; i < 3; ++i) {
    m(i, 3) = l[i];
    m(4, i) = -l[i].conj();
    n += l[i].norm();
  }
  Int half = (Int(k) - n) / 2;
  m(4, 3) = EisInt(half, Int(k));
  return m;
}

EisInt random_eis(std::mt19937_64& rng, long r) {
  auto c = [&] { return static_cast<long>(rng() % static_cast<unsigned long>(2 * r + 1)) - r; };
  return {c(), c()};
}

}  // namespace

TEST(GammaGroup, RootGramIsTheAffineE6Diagram) {
  const auto& r = roots();
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(h_by_hand(r[i], r[i]), one) << "r" << i + 1;
    for (int j = i + 1; j < 7; ++j) {
      Int hn = h_by_hand(r[i], r[j]).norm();
      EXPECT_EQ(hn, diagram_adjacent(i + 1, j + 1) ? 1 : 0) << "r" << i + 1 << " r" << j + 1;
    }
  }
  // 6 edges among 21 pairs.
  int edges = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) edges += diagram_adjacent(i, j);
  EXPECT_EQ(edges, 6);
}

TEST(GammaGroup, BraidTable) {
  auto checks = verify_braid_table();
  ASSERT_EQ(checks.size(), 21u);
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  // Non-adjacent reflections do not braid trivially into commuting ones:
  // adjacent pairs must fail to commute.
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      if (diagram_adjacent(i, j))
        EXPECT_NE(generator(i).matrix() * generator(j).matrix(), generator(j).matrix() * generator(i).matrix());
}

TEST(GammaGroup, NamedIdentities) {
  for (const auto& c : verify_named_identities()) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(GammaGroup, R6ImageOfR7ByHand) {
  // Hexflection x ↦ x − (1 + ω)·h(x, r)·r for a norm-1 root r.
  const EVec r6 = roots()[5], r7 = roots()[6];
  EVec img = r7;
  EisInt c = (one + w) * h_by_hand(r7, r6);
  for (int i = 0; i < 5; ++i) img[i] -= c * r6[i];
  EXPECT_EQ(img, (EVec{o, o, -w, o, wb}));
  EXPECT_EQ(generator(6).apply(r7), img);
}

TEST(GammaGroup, TranslationGeneratorsMatchStatedParameters) {
  const auto& g = translation_generators();
  ASSERT_EQ(g.size(), 7u);
  const std::array<std::array<EisInt, 3>, 6> lambdas = {{
      {w, o, o}, {-wb, o, o}, {o, w, o}, {o, -wb, o}, {o, o, w}, {o, o, -wb},
  }};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(g[i].params, TranslationParams(lambdas[i], Int(1))) << gen_name(g[i].gen);
    EXPECT_EQ(Word::letter(g[i].gen).expanded().matrix(), by_hand_translation(lambdas[i], 1));
  }
  EXPECT_EQ(g[6].gen, Gen::C);
  EXPECT_EQ(g[6].params, TranslationParams({o, o, o}, Int(2)));
  EXPECT_EQ(Word::letter(Gen::C).expanded().matrix(), by_hand_translation({o, o, o}, 2));
}

TEST(GammaGroup, TranslationWordsRealizeEveryTranslation) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    std::array<EisInt, 3> l{random_eis(rng, 6), random_eis(rng, 6), random_eis(rng, 6)};
    Int n = l[0].norm() + l[1].norm() + l[2].norm();
    long k = static_cast<long>(rng() % 41) - 20;
    if ((Int(k) - n) % 2 != 0) ++k;
    TranslationParams p(l, Int(k));
    Word word = translation_word(p);
    EXPECT_EQ(word.matrix(), by_hand_translation(l, k));
    if (t < 20) EXPECT_EQ(word.expanded().matrix(), by_hand_translation(l, k));
  }
}

TEST(GammaGroup, WordAlgebra) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Word x = random_word(rng, 8) * Word::letter(Gen::A1, static_cast<long>(rng() % 7) - 3) *
             Word::letter(Gen::C, static_cast<long>(rng() % 7) - 3) * random_word(rng, 4);
    EMat m = x.matrix();
    EXPECT_TRUE(preserves(m, hyp()));
    EXPECT_EQ(x.expanded().matrix(), m);
    EXPECT_TRUE((x * x.inverse()).empty());
    EVec v{random_eis(rng, 3), random_eis(rng, 3), random_eis(rng, 3), random_eis(rng, 3), random_eis(rng, 3)};
    EXPECT_EQ(x.apply(v), m * v);
  }
  EXPECT_EQ(Word::letter(Gen::R2, 7).str(), "R2");
  EXPECT_TRUE((Word::letter(Gen::R2, 4) * Word::letter(Gen::R2, 2)).empty());
  EXPECT_EQ(Word().str(), "1");
}

TEST(GammaGroup, ScalarOmegaAndUnitWords) {
  EXPECT_EQ(scalar_omega_word().matrix(), EMat::identity(5).scaled(w));
  for (int k = 0; k < 6; ++k) {
    EVec target = rho();
    target[4] = EisInt::unit(k);
    EXPECT_EQ(unit_word(k).apply(rho()), target) << k;
  }
}

TEST(GammaGroup, EscapeWordMovesR3ToR7Line) {
  EVec img = escape_word().apply(roots()[2]);
  bool found = false;
  for (int k = 0; k < 6; ++k) found = found || img == scaled(roots()[6], EisInt::unit(k));
  EXPECT_TRUE(found);
}

TEST(GammaGroup, ReduceTrivialInputs) {
  auto c = reduce_null(rho());
  EXPECT_TRUE(c.word.empty());
  EXPECT_EQ(c.unit, one);
  EXPECT_TRUE(verify(c));

  EVec v = scaled(rho(), wb);
  auto c2 = reduce_null(v);
  EXPECT_TRUE(c2.word.empty());
  EXPECT_EQ(c2.unit, wb);
  EXPECT_TRUE(verify(c2));

  EXPECT_THROW(reduce_null(roots()[0]), MathError);
  EXPECT_THROW(reduce_null(scaled(rho(), EisInt(2L))), MathError);
  EXPECT_THROW(reduce_null(EVec(5)), MathError);
}

TEST(GammaGroup, ReduceRandomImagesOfRho) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    Word word = random_word(rng, 30);
    EVec v = word.apply(rho());
    auto c = reduce_null(v);
    std::string why;
    ASSERT_TRUE(verify(c, &why)) << word.str() << ": " << why;
    auto hs = c.heights();
    EXPECT_EQ(c.escapes(), 0u);
    for (std::size_t i = 1; i < hs.size(); ++i) EXPECT_LT(hs[i], hs[i - 1]);
    // Literal R-letter replay for small words.
    if (c.word.size() < 40) {
      Word lit = c.word.expanded(200000);
      EXPECT_EQ(lit.apply(v), c.final_vector);
    }
  }
}

TEST(GammaGroup, ReduceHandlesTheEscapeCase) {
  // v = (1, 1, 1; θ, ?) has |vi|² = |H|²/3 for every coordinate. Choose ν so
  // that v is null and orthogonal to r3 (ν = ω̄·H).
  EVec v{one, one, one, EisInt::theta(), wb * EisInt::theta()};
  ASSERT_EQ(norm(v, hyp()), 0);
  ASSERT_TRUE(inner(v, roots()[2], hyp()).is_zero());
  // Another tied translate of the λ-part admits a reducing reflection.
  auto c = reduce_null(v);
  std::string why;
  EXPECT_TRUE(verify(c, &why)) << why;
  EXPECT_EQ(c.escapes(), 0u);
  auto hs = c.heights();
  for (std::size_t i = 1; i < hs.size(); ++i) EXPECT_LT(hs[i], hs[i - 1]);

  // Without that, the escape word moves v into r7⊥.
  auto e = reduce_null(v, false);
  EXPECT_TRUE(verify(e, &why)) << why;
  EXPECT_GE(e.escapes(), 1u);
}

TEST(GammaGroup, TamperedCertificateFails) {
  std::mt19937_64 rng(5);
  EVec v = random_word(rng, 12).apply(rho());
  auto c = reduce_null(v);
  if (c.word.empty()) GTEST_SKIP();
  auto bad = c;
  bad.word = Word::letter(Gen::R1) * bad.word;
  EXPECT_FALSE(verify(bad));
  bad = c;
  bad.final_vector[4] = bad.final_vector[4] * EisInt(2L);
  EXPECT_FALSE(verify(bad));
}

TEST(GammaGroup, TransportNullVectors) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    EVec x = random_word(rng, 15).apply(rho());
    EVec y = scaled(random_word(rng, 15).apply(rho()), EisInt::unit(static_cast<int>(rng() % 6)));
    auto tr = orbit_transport(x, y);
    ASSERT_TRUE(tr.word.has_value());
    EXPECT_EQ(tr.method, "null");
    EXPECT_EQ(tr.word->apply(x), y);
  }
}

TEST(GammaGroup, TransportShortRoots) {
  auto tr = orbit_transport(roots()[2], roots()[6]);
  ASSERT_TRUE(tr.word.has_value());
  EXPECT_EQ(tr.word->apply(roots()[2]), roots()[6]);
  for (int i = 0; i < 7; ++i) {
    auto nf = root_normal_form(roots()[i]);
    ASSERT_TRUE(nf.has_value()) << i;
    EXPECT_EQ(nf->apply(roots()[i]), roots()[0]);
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    EVec r = random_word(rng, 20).apply(roots()[static_cast<std::size_t>(rng() % 7)]);
    auto nf = root_normal_form(r);
    ASSERT_TRUE(nf.has_value()) << t;
    EXPECT_EQ(nf->apply(r), roots()[0]);
  }
}

TEST(GammaGroup, TransportLongRoots) {
  const EVec b{one, -one, o, o, o};
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    EVec x = random_word(rng, 20).apply(b);
    auto tr = orbit_transport(x, b);
    ASSERT_TRUE(tr.word.has_value()) << t;
    EXPECT_EQ(tr.word->apply(x), b);
  }
  EXPECT_THROW(orbit_transport(b, roots()[0]), MathError);
}

TEST(GammaGroup, TransportSearchFallback) {
  // A norm −1 vector has no normal form; the search must still find short words.
  EVec x{o, o, o, one, -one};
  ASSERT_EQ(norm(x, hyp()), -2);
  EVec y = generator(3).apply(generator(2).apply(x));
  auto tr = orbit_transport(x, y, 5000);
  ASSERT_TRUE(tr.word.has_value());
  EXPECT_EQ(tr.method, "search");
  EXPECT_EQ(tr.word->apply(x), y);
}

TEST(GammaGroup, TorsionOfOrthogonalTriflections) {
  const HermGram& d = HermGram::diag41();
  std::vector<EVec> e;
  for (int i = 1; i <= 4; ++i) {
    EVec v(5);
    v[i] = one;
    e.push_back(v);
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<EVec> rs(e.begin(), e.begin() + static_cast<long>(k));
    auto r = torsion_check(rs, d);
    EXPECT_TRUE(r.in_congruence_subgroup);
    EXPECT_EQ(r.order, 3);
    EXPECT_TRUE(r.splits);
    EXPECT_EQ(r.eigen_ranks, (std::array<std::size_t, 3>{5 - k, k, 0}));
  }
  // Hyperbolic frame: r1, r5, r7 and r3 are mutually orthogonal.
  std::vector<EVec> hr{roots()[0], roots()[4], roots()[6], roots()[2]};
  auto r = torsion_check(hr, hyp());
  EXPECT_TRUE(r.in_congruence_subgroup && r.splits);
  EXPECT_EQ(r.order, 3);

  auto s = torsion_of(Isometry::scalar(w, d));
  EXPECT_EQ(s.order, 3);
  EXPECT_TRUE(s.in_congruence_subgroup && s.splits);
  EXPECT_EQ(s.eigen_ranks, (std::array<std::size_t, 3>{0, 5, 0}));

  EXPECT_THROW(torsion_check({roots()[0], roots()[1]}, hyp()), MathError);
}

TEST(GammaGroup, TorsionOnTransportedRootSets) {
  std::mt19937_64 rng(8);
  std::vector<EVec> base{roots()[0], roots()[4], roots()[6], roots()[2]};
  for (int t = 0; t < 10; ++t) {
    Word g = random_word(rng, 10);
    std::vector<EVec> rs;
    for (const auto& r : base) rs.push_back(g.apply(r));
    auto rep = torsion_check(rs, hyp());
    EXPECT_TRUE(rep.in_congruence_subgroup);
    EXPECT_EQ(rep.order, 3);
    EXPECT_TRUE(rep.splits);
  }
}

TEST(GammaGroup, ReducedGeneratorsHaveSpinorNormPlusOne) {
  auto q = f3::Quadratic::from_gram(hyp());
  ASSERT_TRUE(q.nondegenerate());
  std::vector<f3::Mat> gens;
  for (int i = 1; i <= 7; ++i) {
    f3::Mat m = f3::reduce(generator(i));
    EXPECT_TRUE(f3::preserves(m, q));
    EXPECT_EQ(f3::spinor_norm(m, q), 1) << i;
    gens.push_back(m);
  }
  f3::Group sub = f3::bfs_closure(gens);
  std::vector<f3::Mat> all;
  for (const auto& v : f3::anisotropic_classes(q)) all.push_back(f3::reflection(v, q));
  f3::Group full = f3::bfs_closure(all);
  EXPECT_EQ(full.order(), 2 * sub.order());
  // −I is not in the subgroup, so it maps isomorphically onto PAut(V).
  EXPECT_EQ(sub.order(), full.projective_order());
}
