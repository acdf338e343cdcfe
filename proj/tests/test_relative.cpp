#include <gtest/gtest.h>

#include "relhom/catalog.hpp"
#include "relhom/errors.hpp"
#include "relhom/relative.hpp"
#include "relhom/sampling.hpp"

using namespace relhom;

namespace {

std::vector<Module> corpus_for(const AlgebraPtr& alg, std::uint64_t seed, int randoms) {
  std::vector<Module> out = uniserial_quotients(alg);
  Rng rng(seed);
  for (int i = 0; i < randoms; ++i) {
    auto m = random_module(rng, alg);
    if (!m.is_zero()) out.push_back(m);
  }
  return out;
}

BalancedPair all_pair(const AlgebraPtr& alg) {
  const auto all = uniserial_quotients(alg);
  return {"gproj", Subcategory::make("all", all), Subcategory::make("all", all)};
}

struct Kx2 : ::testing::Test {
  AlgebraPtr alg = builtin_algebra("kx2");
  Module s = simple(alg, 0);
  Module p = projective(alg, 0);
  Subcategory proj = projective_subcategory(alg);
  BalancedPair classical = classical_pair(alg);
};

struct A2 : ::testing::Test {
  AlgebraPtr alg = builtin_algebra("a2");
  BalancedPair classical = classical_pair(alg);
};

}  // namespace

TEST_F(Kx2, Approximations) {
  const auto f = minimal_right_approximation(s, proj);
  EXPECT_EQ(f.source(), p);
  EXPECT_TRUE(f.is_epi());
  EXPECT_TRUE(verify_right_approximation(right_approximation(s, proj), proj));

  const Subcategory byp = Subcategory::make("P1", {p});
  const auto g = minimal_left_approximation(s, byp);
  EXPECT_EQ(g.target(), p);
  EXPECT_TRUE(g.is_mono());
  EXPECT_TRUE(verify_left_approximation(left_approximation(s, byp), byp));

  // Members of the subcategory: the approximation splits.
  const auto h = right_approximation(p, proj);
  EXPECT_TRUE(factor_through(Morphism::identity(p), h).has_value());
  EXPECT_TRUE(minimal_right_approximation(p, proj).is_iso());
}

TEST(Approximation, PaddedProjectiveCoverIsEpi) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto proj = projective_subcategory(alg);
    const auto inj = injective_subcategory(alg);
    for (const auto& m : corpus_for(alg, 3, 4)) {
      const auto f = right_approximation(m, proj);
      EXPECT_TRUE(f.is_epi()) << name;
      EXPECT_TRUE(verify_right_approximation(f, proj)) << name;
      const auto g = left_approximation(m, inj);
      EXPECT_TRUE(g.is_mono()) << name;
      EXPECT_TRUE(verify_left_approximation(g, inj)) << name;
      EXPECT_TRUE(is_right_minimal(minimal_right_approximation(m, proj)));
    }
  }
}

TEST_F(Kx2, Admissibility) {
  const std::vector<Module> corpus{s, p};
  const auto a = is_admissible(proj, corpus);
  EXPECT_TRUE(a.admissible);
  EXPECT_TRUE(proj.contains_projectives);

  const auto b = is_admissible(Subcategory::make("S", {s}), corpus);
  EXPECT_FALSE(b.admissible);
  EXPECT_EQ(b.failures, std::vector<std::string>{p.label()});
  EXPECT_EQ(rank(right_approximation(p, Subcategory::make("S", {s})).total_matrix()), 1u);

  EXPECT_TRUE(is_admissible(Subcategory::make("all", corpus), corpus).admissible);
}

TEST_F(Kx2, PeriodicResolutionOfSimple) {
  const auto r = proper_resolution(s, proj, 5);
  EXPECT_FALSE(r.finite);
  EXPECT_EQ(r.terms(), 6u);
  for (std::size_t k = 0; k < r.terms(); ++k) EXPECT_EQ(r.term(k), p);
  for (const auto& z : r.syzygies) EXPECT_TRUE(isomorphic(z, s));
  EXPECT_FALSE(r.complex.violation().has_value());
  EXPECT_TRUE(certify(r, proj, &classical.y).ok());
  const auto per = detect_periodicity(r, proj);
  ASSERT_TRUE(per.has_value());
  EXPECT_EQ(per->period, 1u);
  EXPECT_TRUE(per->witness.is_iso());

  const auto c = proper_coresolution(s, classical.y, 4);
  EXPECT_FALSE(c.finite);
  for (const auto& z : c.syzygies) EXPECT_TRUE(isomorphic(z, s));
  EXPECT_TRUE(certify(c, proj, &classical.y).ok());
}

TEST_F(A2, FiniteResolutions) {
  const Module s1 = simple(alg, 0);
  const Module s2 = simple(alg, 1);
  const auto r = proper_resolution(s1, classical.x, 6);
  EXPECT_TRUE(r.finite);
  ASSERT_EQ(r.terms(), 2u);
  EXPECT_EQ(r.term(0), projective(alg, 0));
  EXPECT_EQ(r.term(1), projective(alg, 1));
  EXPECT_TRUE(certify(r, classical.x, &classical.y).ok());
  EXPECT_FALSE(detect_periodicity(r, classical.x).has_value());

  const auto c = proper_coresolution(s2, classical.y, 6);
  EXPECT_TRUE(c.finite);
  ASSERT_EQ(c.terms(), 2u);
  EXPECT_EQ(c.term(0), injective(alg, 1));
  EXPECT_EQ(c.term(1), injective(alg, 0));
  EXPECT_TRUE(certify(c, classical.x, &classical.y).ok());

  const auto zero = proper_resolution(projective(alg, 0), classical.x, 3);
  EXPECT_EQ(zero.terms(), 1u);
  EXPECT_TRUE(zero.finite);
}

TEST_F(A2, NonAdmissibleSubcategoryIsReported) {
  const Subcategory x = Subcategory::make("P1", {projective(alg, 0)});
  try {
    proper_resolution(simple(alg, 0), x, 3);
    FAIL() << "expected an admissibility failure";
  } catch (const AdmissibilityFailure& e) {
    EXPECT_NE(e.offending().find("Ω1"), std::string::npos);
  }
}

TEST_F(Kx2, ExtOfSimple) {
  const auto t = rel_ext(s, s, classical, 5, Via::both, 6);
  EXPECT_EQ(t.via_x, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(t.via_y, t.via_x);
  EXPECT_TRUE(t.balanced);
  EXPECT_THROW(rel_ext(s, s, classical, 5, Via::x, 5), DepthInsufficient);
  EXPECT_THROW(rel_ext(s, s, classical, 0, Via::x, 5), ContractViolation);
  const auto r = proper_resolution(s, proj, 2);
  EXPECT_EQ(ext_via_resolution(r, s, 1), 1u);
  EXPECT_THROW(ext_via_resolution(r, s, 2), DepthInsufficient);
}

TEST_F(A2, ExtBetweenSimples) {
  const auto t = rel_ext(simple(alg, 0), simple(alg, 1), classical, 2, Via::both, 3);
  EXPECT_EQ(t.via_x, (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(t.balanced);
  // Finite resolutions answer every degree regardless of the requested depth.
  const auto r = proper_resolution(simple(alg, 0), classical.x, 1);
  EXPECT_EQ(ext_via_resolution(r, simple(alg, 1), 4), 0u);
}

TEST(RelExt, BalanceAndVanishing) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto corpus = corpus_for(alg, 21, 4);
    std::vector<BalancedPair> pairs{classical_pair(alg)};
    if (name == "kx2" || name == "nak_cyc2" || name == "semisimple2") pairs.push_back(all_pair(alg));
    for (const auto& pair : pairs) {
      for (const auto& t : ext_tables(pair, corpus, 4, 5)) EXPECT_TRUE(t.balanced) << name << " " << t.m << " " << t.n;
      for (const auto& a : corpus) {
        for (const auto& g : pair.x.generators) {
          EXPECT_EQ(rel_ext(g, a, pair, 4, Via::both, 5).via_x, std::vector<std::size_t>(4, 0)) << name;
        }
        for (const auto& h : pair.y.generators) {
          EXPECT_EQ(rel_ext(a, h, pair, 4, Via::both, 5).via_y, std::vector<std::size_t>(4, 0)) << name;
        }
      }
    }
  }
}

TEST(RelExt, SerialAndParallelTablesAgree) {
  const auto alg = builtin_algebra("a3rad2");
  const auto corpus = corpus_for(alg, 22, 5);
  const auto pair = classical_pair(alg);
  const auto a = ext_tables(pair, corpus, 3, 4, Execution::serial);
  const auto b = ext_tables(pair, corpus, 3, 4, Execution::parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].via_x, b[i].via_x);
    EXPECT_EQ(a[i].via_y, b[i].via_y);
  }
}

TEST(RelExt, DimensionShifting) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto pair = classical_pair(alg);
    const auto corpus = corpus_for(alg, 23, 3);
    for (const auto& m : corpus) {
      const auto r = proper_resolution(m, pair.x, 5);
      const auto& omega = r.syzygies[1];
      const auto r1 = proper_resolution(omega, pair.x, 5);
      for (const auto& n : corpus) {
        for (std::size_t i = 1; i <= 3; ++i) {
          EXPECT_EQ(ext_via_resolution(r, n, i + 1), ext_via_resolution(r1, n, i)) << name;
        }
      }
    }
  }
}

TEST(ResolutionDimension, Examples) {
  const auto a3 = builtin_algebra("a3rad2");
  const auto d = resolution_dimension(simple(a3, 0), projective_subcategory(a3), 6);
  ASSERT_TRUE(d.dimension.has_value());
  EXPECT_EQ(*d.dimension, 2u);
  EXPECT_TRUE(d.consistent);
  EXPECT_EQ(d.describe(), "2");

  const auto kx2 = builtin_algebra("kx2");
  const auto inf = resolution_dimension(simple(kx2, 0), projective_subcategory(kx2), 6);
  EXPECT_FALSE(inf.dimension.has_value());
  EXPECT_TRUE(inf.consistent);
  ASSERT_TRUE(inf.periodicity.has_value());
  EXPECT_EQ(inf.periodicity->period, 1u);
  EXPECT_NE(inf.describe().find(">= 7"), std::string::npos);

  const auto zero = resolution_dimension(projective(kx2, 0), projective_subcategory(kx2), 6);
  EXPECT_EQ(zero.dimension, std::optional<std::size_t>(0));

  const auto a2 = builtin_algebra("a2");
  const auto co = coresolution_dimension(simple(a2, 1), injective_subcategory(a2), 6);
  EXPECT_EQ(co.dimension, std::optional<std::size_t>(1));
  EXPECT_TRUE(co.consistent);
  const auto coinf = coresolution_dimension(simple(kx2, 0), injective_subcategory(kx2), 6);
  EXPECT_FALSE(coinf.dimension.has_value());
  EXPECT_TRUE(coinf.periodicity.has_value());

  const auto cyc = builtin_algebra("nak_cyc2");
  const auto two = resolution_dimension(simple(cyc, 0), projective_subcategory(cyc), 4);
  ASSERT_TRUE(two.periodicity.has_value());
  EXPECT_EQ(two.periodicity->period, 2u);
}

TEST(ResolutionDimension, MembershipMatchesExtVanishing) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto pair = classical_pair(alg);
    std::size_t max_res = 0;
    std::size_t max_cores = 0;
    bool all_finite = true;
    for (const auto& m : corpus_for(alg, 24, 6)) {
      const auto d = resolution_dimension(m, pair.x, 6);
      EXPECT_TRUE(d.consistent) << name << " " << m.label();
      const auto c = coresolution_dimension(m, pair.y, 6);
      EXPECT_TRUE(c.consistent) << name << " " << m.label();
      if (d.dimension && c.dimension) {
        max_res = std::max(max_res, *d.dimension);
        max_cores = std::max(max_cores, *c.dimension);
      } else {
        all_finite = false;
        EXPECT_TRUE(d.dimension || d.periodicity) << name;
      }
    }
    if (all_finite) EXPECT_EQ(max_res, max_cores) << name;
  }
}

TEST(BalancedPair, ClassicalPairsPass) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto r = verify_balanced_pair(classical_pair(alg), corpus_for(alg, 25, 3), 4, 30, 7);
    EXPECT_TRUE(r.passed) << name;
    EXPECT_EQ(r.samples, 30u);
    EXPECT_GT(r.star_samples, 0u) << name;
  }
}

TEST(BalancedPair, AllModulesOverSelfInjective) {
  for (const auto* name : {"kx2", "nak_cyc2"}) {
    const auto alg = builtin_algebra(name);
    const auto pair = all_pair(alg);
    const auto corpus = corpus_for(alg, 26, 3);
    const auto r = verify_balanced_pair(pair, corpus, 4, 30, 8);
    EXPECT_TRUE(r.passed) << name;
    for (const auto& m : corpus) EXPECT_TRUE(minimal_right_approximation(m, pair.x).is_iso());
  }
}

TEST_F(A2, MismatchedPairFails) {
  const BalancedPair bad{"bad", Subcategory::make("P1", {projective(alg, 0)}), Subcategory::make("I2", {injective(alg, 1)})};
  const auto r = verify_balanced_pair(bad, {simple(alg, 0)}, 3, 10, 1);
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.resolutions.size(), 1u);
  EXPECT_FALSE(r.resolutions[0].ok);
  EXPECT_NE(r.resolutions[0].detail.find("not epic"), std::string::npos);
}

// Pullbacks and pushouts of right acyclic rows stay right acyclic, and
// likewise on the left.
TEST(Preservation, PullbackAndPushout) {
  Rng rng(31);
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto pair = classical_pair(alg);
    const auto corpus = corpus_for(alg, 32, 4);
    for (int it = 0; it < 20; ++it) {
      const Module& m = corpus[rng.below(corpus.size())];
      const auto r = proper_resolution(m, pair.x, 1);
      if (r.terms() == 0) continue;
      const ShortExactSequence row{r.syzygy_maps[0], r.augmentation};
      ASSERT_FALSE(row.exactness_violation().has_value());
      ASSERT_TRUE(star_acyclicity(row, pair).right.acyclic);
      const Module& other = corpus[rng.below(corpus.size())];
      const auto pb = pullback(row.right, random_morphism(rng, other, m), row);
      ASSERT_TRUE(pb.induced.has_value());
      EXPECT_FALSE(pb.induced->exactness_violation().has_value());
      EXPECT_TRUE(star_acyclicity(*pb.induced, pair).right.acyclic) << name;
      const auto po = pushout(row.left, random_morphism(rng, row.first(), other), row);
      ASSERT_TRUE(po.induced.has_value());
      EXPECT_FALSE(po.induced->exactness_violation().has_value());
      EXPECT_TRUE(star_acyclicity(*po.induced, pair).right.acyclic) << name;

      const auto c = proper_coresolution(m, pair.y, 1);
      const ShortExactSequence col{c.augmentation, c.syzygy_maps[0]};
      ASSERT_TRUE(star_acyclicity(col, pair).left.acyclic);
      const auto po2 = pushout(col.left, random_morphism(rng, m, other), col);
      EXPECT_TRUE(star_acyclicity(*po2.induced, pair).left.acyclic) << name;
      const auto pb2 = pullback(col.right, random_morphism(rng, other, col.last()), col);
      EXPECT_TRUE(star_acyclicity(*pb2.induced, pair).left.acyclic) << name;
    }
  }
}
