#include <gtest/gtest.h>

#include <algorithm>

#include "oracle/oracle.hpp"
#include "relhom/catalog.hpp"
#include "relhom/cotorsion.hpp"
#include "relhom/errors.hpp"

using namespace relhom;

namespace {

BalancedPair all_pair(const AlgebraPtr& alg) {
  const auto all = uniserial_quotients(alg);
  return {"gproj", Subcategory::make("all", all), Subcategory::make("all", all)};
}

CotorsionSpec proj_all(const AlgebraPtr& alg) {
  return {"(proj, all)", classical_pair(alg), projective_subcategory(alg),
          Subcategory::make("all", uniserial_quotients(alg))};
}

const Module& named(const std::vector<Module>& ms, const std::string& name) {
  for (const auto& m : ms) {
    if (m.label() == name) return m;
  }
  throw std::out_of_range(name);
}

bool self_injective(const std::string& name) { return name == "kx2" || name == "nak_cyc2" || name == "semisimple2"; }

std::vector<BalancedPair> pairs_for(const AlgebraPtr& alg, const std::string& name) {
  std::vector<BalancedPair> out{classical_pair(alg)};
  if (self_injective(name)) out.push_back(all_pair(alg));
  return out;
}

struct Kx2 : ::testing::Test {
  AlgebraPtr alg = builtin_algebra("kx2");
  std::vector<Module> ind = uniserial_quotients(alg);
  Module s = named(ind, "S1");
  Module p = named(ind, "P1");
  BalancedPair classical = classical_pair(alg);
  ExtCalculator ext{classical, 4};
};

struct A2 : ::testing::Test {
  AlgebraPtr alg = builtin_algebra("a2");
  std::vector<Module> ind = uniserial_quotients(alg);
  BalancedPair classical = classical_pair(alg);
  ExtCalculator ext{classical, 4};
};

}  // namespace

TEST(ExtCalculator, ClassicalExtOneMatchesOracle) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    ExtCalculator ext(classical_pair(alg), 2);
    const auto ind = uniserial_quotients(alg);
    for (const auto& m : ind) {
      for (const auto& n : ind) {
        EXPECT_EQ(ext.dim(m, n, 1), oracle::ext1_dimension(m, n)) << name << " " << m.label() << " " << n.label();
      }
    }
  }
}

TEST(ExtCalculator, RejectsShallowDepth) { EXPECT_THROW(ExtCalculator(classical_pair(builtin_algebra("a2")), 1), ContractViolation); }

TEST_F(Kx2, LeftPerpOfSimple) {
  const auto r = perp({s}, {s, p}, PerpSide::left, ext);
  ASSERT_EQ(r.members.size(), 1u);
  EXPECT_EQ(r.members[0], p);
  ASSERT_EQ(r.entries[0].offending.size(), 1u);
  EXPECT_EQ(r.entries[0].offending[0].second, 1u);
}

TEST(Perp, InjectivesAndEmptyGenerators) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    ExtCalculator ext(classical_pair(alg), 2);
    const auto ind = uniserial_quotients(alg);
    EXPECT_EQ(perp(injectives(alg), ind, PerpSide::left, ext).members.size(), ind.size()) << name;
    EXPECT_EQ(perp(projectives(alg), ind, PerpSide::right, ext).members.size(), ind.size()) << name;
    EXPECT_EQ(perp({}, ind, PerpSide::left, ext).members.size(), ind.size()) << name;
  }
}

TEST(Perp, StableUnderPermutationAndDuplication) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    ExtCalculator ext(classical_pair(alg), 2);
    const auto ind = uniserial_quotients(alg);
    for (std::size_t k = 0; k < ind.size(); ++k) {
      std::vector<Module> gens(ind.begin(), ind.begin() + static_cast<long>(k) + 1);
      auto shuffled = gens;
      std::reverse(shuffled.begin(), shuffled.end());
      shuffled.push_back(gens.front());
      for (auto side : {PerpSide::left, PerpSide::right}) {
        const auto a = perp(gens, ind, side, ext);
        const auto b = perp(shuffled, ind, side, ext);
        ASSERT_EQ(a.entries.size(), b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].member, b.entries[i].member);
      }
    }
  }
}

TEST_F(Kx2, VerifyCotorsionPairs) {
  const auto all = Subcategory::make("all", ind);
  ExtCalculator gext(all_pair(alg), 2);
  EXPECT_TRUE(verify_cotorsion_pair({"(all, all)", all_pair(alg), all, all}, ind, gext).verified);

  const auto bad = Subcategory::make("S", {s});
  const auto r = verify_cotorsion_pair({"(S, S)", classical, bad, bad}, ind, ext);
  EXPECT_FALSE(r.verified);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0], "Ext¹(S1, S1) = 1");
}

TEST(Cotorsion, ProjAllVerifiesEverywhere) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    ExtCalculator ext(classical_pair(alg), 2);
    const auto r = verify_cotorsion_pair(proj_all(alg), uniserial_quotients(alg), ext);
    EXPECT_TRUE(r.verified) << name << (r.violations.empty() ? "" : r.violations[0]);
  }
}

TEST_F(A2, ClosureInstancesAreSkippedWhenNotApplicable) {
  const auto s1 = named(ind, "S1");
  const auto pi = minimal_right_approximation(s1, classical.x);
  const auto k = kernel(pi);
  const ShortExactSequence row{k.inclusion, pi};
  ASSERT_FALSE(row.exactness_violation());
  const auto c = Subcategory::make("P1", {named(ind, "P1")});
  const auto epi = closure_check(c, {row}, ClosureMode::epis, classical);
  EXPECT_EQ(epi.applicable, 0u);
  EXPECT_EQ(epi.skipped, 1u);
  EXPECT_TRUE(epi.passed());
  const auto ext_mode = closure_check(c, {row}, ClosureMode::extensions, classical);
  EXPECT_EQ(ext_mode.applicable, 0u);
}

TEST(Closure, SplitSequencesPass) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto ind = uniserial_quotients(alg);
    const auto pair = classical_pair(alg);
    std::vector<ShortExactSequence> split;
    for (const auto& a : ind) {
      for (const auto& b : ind) {
        const auto sum = direct_sum(alg, {a, b});
        split.push_back({sum.injections[0], sum.projections[1]});
      }
    }
    for (const auto& sub : {pair.x, pair.y, Subcategory::make("all", ind)}) {
      const auto r = closure_check(sub, split, ClosureMode::extensions, pair);
      EXPECT_TRUE(r.passed()) << name << " " << sub.name;
      EXPECT_GT(r.applicable, 0u);
      EXPECT_EQ(r.not_star, 0u);
    }
  }
}

TEST(Closure, EverythingPassesForAllOverSelfInjective) {
  const auto alg = builtin_algebra("kx2");
  const auto pair = all_pair(alg);
  const auto rows = resolution_rows(uniserial_quotients(alg), classical_pair(alg), 3);
  for (auto mode : {ClosureMode::extensions, ClosureMode::epis, ClosureMode::monos}) {
    EXPECT_TRUE(closure_check(pair.x, rows, mode, pair).passed());
  }
}

TEST(Hereditary, ProjAllIsHereditary) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    ExtCalculator ext(classical_pair(alg), 4);
    const auto r = hereditary_check(proj_all(alg), uniserial_quotients(alg), 3, ext);
    EXPECT_TRUE(r.hereditary()) << name << (r.details.empty() ? "" : r.details[0]);
    EXPECT_GT(r.sequences, 0u);
  }
}

TEST(Hereditary, AllAllOverKx2) {
  const auto alg = builtin_algebra("kx2");
  const auto pair = all_pair(alg);
  ExtCalculator ext(pair, 4);
  const auto r = hereditary_check({"(all, all)", pair, pair.x, pair.y}, uniserial_quotients(alg), 3, ext);
  EXPECT_TRUE(r.hereditary());
}

TEST(Hereditary, ArgumentChecks) {
  const auto alg = builtin_algebra("a2");
  ExtCalculator ext(classical_pair(alg), 3);
  EXPECT_THROW(hereditary_check(proj_all(alg), {}, 1, ext), ContractViolation);
  EXPECT_THROW(hereditary_check(proj_all(alg), {}, 3, ext), DepthInsufficient);
}

// The three criteria must agree on every cotorsion pair of every builtin.
TEST(Hereditary, CriteriaAgreeOnEnumeratedPairs) {
  std::size_t total = 0, non_hereditary = 0;
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto ind = uniserial_quotients(alg);
    for (const auto& pair : pairs_for(alg, name)) {
      ExtCalculator ext(pair, 5);
      for (const auto& spec : enumerate_cotorsion_pairs(pair, ind, ext)) {
        const auto r = hereditary_check(spec, ind, 4, ext);
        EXPECT_TRUE(r.consistent()) << name << " " << pair.name << " " << spec.name << ": "
                                    << (r.details.empty() ? "" : r.details[0]);
        ++total;
        non_hereditary += r.hereditary() ? 0 : 1;
      }
    }
  }
  EXPECT_GT(total, 10u);
  RecordProperty("pairs", static_cast<int>(total));
  RecordProperty("non_hereditary", static_cast<int>(non_hereditary));
}

TEST(Enumeration, PairsVerifyAndContainTheExtremes) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto ind = uniserial_quotients(alg);
    const auto pair = classical_pair(alg);
    ExtCalculator ext(pair, 2);
    const auto specs = enumerate_cotorsion_pairs(pair, ind, ext);
    bool proj_all_seen = false, all_inj_seen = false;
    for (const auto& spec : specs) {
      EXPECT_TRUE(verify_cotorsion_pair(spec, ind, ext).verified) << name << " " << spec.name;
      const bool c_is_proj = spec.c.generators.size() == projectives(alg).size() && spec.c.contains_projectives;
      const bool d_is_all = spec.d.generators.size() == ind.size();
      const bool c_is_all = spec.c.generators.size() == ind.size();
      const bool d_is_inj = spec.d.generators.size() == injectives(alg).size() && spec.d.contains_injectives;
      proj_all_seen = proj_all_seen || (c_is_proj && d_is_all);
      all_inj_seen = all_inj_seen || (c_is_all && d_is_inj);
    }
    EXPECT_TRUE(proj_all_seen) << name;
    EXPECT_TRUE(all_inj_seen) << name;
  }
}

// Independent count: every pair of subsets (C, D) of indecomposables with
// C = ⊥D and D = C⊥ under the oracle's Ext¹.
TEST(Enumeration, CountMatchesOracle) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto ind = uniserial_quotients(alg);
    const std::size_t n = ind.size();
    std::vector<std::vector<std::size_t>> e(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) e[a][b] = oracle::ext1_dimension(ind[a], ind[b]);
    }
    std::size_t count = 0;
    for (unsigned c = 1; c < (1u << n); ++c) {
      for (unsigned d = 1; d < (1u << n); ++d) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
          bool perp_d = true, perp_c = true;
          for (std::size_t b = 0; b < n; ++b) {
            perp_d = perp_d && !((d >> b & 1u) && e[a][b]);
            perp_c = perp_c && !((c >> b & 1u) && e[b][a]);
          }
          ok = perp_d == bool(c >> a & 1u) && perp_c == bool(d >> a & 1u);
        }
        count += ok ? 1 : 0;
      }
    }
    ExtCalculator ext(classical_pair(alg), 2);
    EXPECT_EQ(enumerate_cotorsion_pairs(classical_pair(alg), ind, ext).size(), count) << name;
  }
}

TEST_F(Kx2, CompletenessWithNonSplitWitness) {
  const auto spec = proj_all(alg);
  const auto pi = minimal_right_approximation(s, classical.x);
  const auto k = kernel(pi);
  const ShortExactSequence witness{k.inclusion, pi};
  const auto r = completeness_construct(s, spec, ext, witness);
  EXPECT_EQ(r.result.sequence.middle().total_dim(), 3u);
  EXPECT_TRUE(r.result.star.star());
  EXPECT_TRUE(r.column.star.star());
  EXPECT_TRUE(r.d_in_d);
  EXPECT_FALSE(r.c_in_c);  // S is not projective, so this witness is not one for (proj, all)
  EXPECT_FALSE(r.ok());
}

TEST_F(Kx2, CompletenessRejectsNonStarWitness) {
  // 0 -> S -> P -> S -> 0 is *-acyclic classically but not for (all, all).
  const auto pair = all_pair(alg);
  const auto all = pair.x;
  ExtCalculator gext(pair, 2);
  const auto pi = minimal_right_approximation(s, classical.x);
  const ShortExactSequence w{kernel(pi).inclusion, pi};
  // Over (all, all) the approximation row of S is trivial, so K = 0 and the
  // witness does not start at K.
  EXPECT_THROW(completeness_construct(s, {"(all, all)", pair, all, all}, gext, w), PreconditionFailure);
}

TEST(Completeness, ProjectiveInputSplits) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    ExtCalculator ext(classical_pair(alg), 2);
    for (const auto& p : projectives(alg)) {
      const auto r = completeness_construct(p, proj_all(alg), ext);
      EXPECT_TRUE(r.approximation_row.sequence.first().is_zero());
      EXPECT_TRUE(r.result.sequence.is_split());
      EXPECT_TRUE(r.ok()) << name;
    }
  }
}

TEST(Completeness, AllAllCollapses) {
  const auto alg = builtin_algebra("kx2");
  const auto pair = all_pair(alg);
  ExtCalculator ext(pair, 2);
  for (const auto& m : uniserial_quotients(alg)) {
    const auto r = completeness_construct(m, {"(all, all)", pair, pair.x, pair.y}, ext);
    EXPECT_TRUE(r.result.sequence.is_split());
    EXPECT_TRUE(r.ok());
  }
}

// Enough injectives with auto-built witnesses gives enough projectives on
// every corpus object, for every cotorsion pair of every builtin.
TEST(Completeness, EveryCorpusObjectForEveryPair) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto ind = uniserial_quotients(alg);
    for (const auto& pair : pairs_for(alg, name)) {
      ExtCalculator ext(pair, 2);
      for (const auto& spec : enumerate_cotorsion_pairs(pair, ind, ext)) {
        for (const auto& m : ind) {
          const auto r = completeness_construct(m, spec, ext);
          EXPECT_TRUE(r.ok()) << name << " " << spec.name << " " << m.label();
          EXPECT_TRUE(isomorphic(r.result.sequence.last(), m));
        }
      }
    }
  }
}

TEST_F(Kx2, WakamatsuSimple) {
  const auto r = wakamatsu_check(classical.x, s, ext);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(isomorphic(r.kernel, s));
  EXPECT_TRUE(wakamatsu_check(classical.x, p, ext).kernel.is_zero());
}

TEST_F(A2, WakamatsuSimple) {
  const auto r = wakamatsu_check(classical.x, named(ind, "S1"), ext);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(isomorphic(r.kernel, projective(alg, 1)));
  const auto inj = injective_subcategory(alg);
  EXPECT_THROW(wakamatsu_check(inj, projective(alg, 1), ext), AdmissibilityFailure);
}

TEST(Wakamatsu, HoldsForEveryCotorsionClass) {
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto ind = uniserial_quotients(alg);
    for (const auto& pair : pairs_for(alg, name)) {
      ExtCalculator ext(pair, 2);
      for (const auto& spec : enumerate_cotorsion_pairs(pair, ind, ext)) {
        for (const auto& m : ind) {
          EXPECT_TRUE(wakamatsu_check(spec.c, m, ext).passed) << name << " " << spec.name << " " << m.label();
        }
      }
    }
  }
}

TEST_F(A2, MinimalLeftFromRightOnSimple) {
  const auto r = minimal_left_from_right(named(ind, "S1"), proj_all(alg), ext);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.psi_prime.is_iso());
  const auto dims = oracle::left_discardable_dims(r.psi_prime);
  EXPECT_TRUE(std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; }));
}

TEST(MinimalLeftFromRight, IdentityOnD) {
  const auto alg = builtin_algebra("kx2");
  const auto pair = all_pair(alg);
  ExtCalculator ext(pair, 2);
  for (const auto& m : uniserial_quotients(alg)) {
    const auto r = minimal_left_from_right(m, {"(all, all)", pair, pair.x, pair.y}, ext);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.psi_prime.is_iso());
  }
}

// On every hereditary pair the output is a left D-approximation, and the
// exhaustive endomorphism search agrees that it is left minimal.
TEST(MinimalLeftFromRight, AgreesWithExhaustiveSearch) {
  std::size_t checked = 0;
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = builtin_algebra(name);
    const auto ind = uniserial_quotients(alg);
    for (const auto& pair : pairs_for(alg, name)) {
      ExtCalculator ext(pair, 4);
      for (const auto& spec : enumerate_cotorsion_pairs(pair, ind, ext)) {
        if (!hereditary_check(spec, ind, 3, ext).hereditary()) continue;
        for (const auto& m : ind) {
          const auto r = minimal_left_from_right(m, spec, ext);
          EXPECT_TRUE(r.ok()) << name << " " << spec.name << " " << m.label();
          EXPECT_TRUE(verify_left_approximation(r.psi_prime, spec.d));
          const auto dims = oracle::left_discardable_dims(r.psi_prime);
          EXPECT_TRUE(std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; }))
              << name << " " << spec.name << " " << m.label();
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 20u);
}
