#include <gtest/gtest.h>

#include "oracle/oracle.hpp"
#include "relhom/catalog.hpp"
#include "relhom/errors.hpp"
#include "relhom/module.hpp"
#include "relhom/sampling.hpp"

using namespace relhom;

namespace {

std::vector<std::string> basis_names(const Algebra& a) {
  std::vector<std::string> out;
  for (const auto& p : a.basis()) out.push_back(a.path_name(p));
  return out;
}

Relation rel(std::vector<std::string> labels, long long c = 1) { return {RelationTerm{std::move(labels), c}}; }

}  // namespace

TEST(BuildAlgebra, PathBases) {
  auto a2 = Algebra::build(PrimeField(2), Quiver(2, {{0, 1, "a"}}), {}, 2);
  EXPECT_EQ(a2->dimension(), 3u);
  EXPECT_EQ(basis_names(*a2), (std::vector<std::string>{"e1", "e2", "a"}));

  auto kx2 = Algebra::build(PrimeField(2), Quiver(1, {{0, 0, "x"}}), {rel({"x", "x"})}, 6);
  EXPECT_EQ(basis_names(*kx2), (std::vector<std::string>{"e1", "x"}));

  EXPECT_EQ(builtin_algebra("a3rad2")->dimension(), 5u);
  EXPECT_EQ(builtin_algebra("nak_cyc2")->dimension(), 4u);
  EXPECT_EQ(builtin_algebra("semisimple2")->dimension(), 2u);
}

TEST(BuildAlgebra, Rejections) {
  EXPECT_THROW(Algebra::build(PrimeField(2), Quiver(1, {{0, 0, "x"}}), {}, 6), InputError);
  EXPECT_THROW(Algebra::build(PrimeField(2), Quiver(2, {{0, 1, "a"}}), {rel({"a"})}, 3), InputError);
  EXPECT_THROW(Algebra::build(PrimeField(2), Quiver(2, {{0, 1, "a"}, {0, 1, "b"}}), {rel({"a", "b"})}, 3),
               InputError);
  EXPECT_THROW(Quiver(2, {{0, 1, "a"}, {1, 0, "a"}}), InputError);
  EXPECT_THROW(Quiver(2, {{0, 2, "a"}}), InputError);
  EXPECT_THROW(builtin_algebra("nope"), InputError);
  // x^3 = 0 needs paths of length 3 to vanish; cap 1 is too small.
  EXPECT_THROW(Algebra::build(PrimeField(2), Quiver(1, {{0, 0, "x"}}), {rel({"x", "x", "x"})}, 1), InputError);
  EXPECT_NO_THROW(Algebra::build(PrimeField(2), Quiver(1, {{0, 0, "x"}}), {rel({"x", "x", "x"})}, 2));
}

TEST(BuildAlgebra, CommutativeSquare) {
  // 1 -a-> 2 -b-> 4, 1 -c-> 3 -d-> 4 with ab = cd over F_3
  Quiver q(4, {{0, 1, "a"}, {1, 3, "b"}, {0, 2, "c"}, {2, 3, "d"}});
  Relation r{RelationTerm{{"a", "b"}, 1}, RelationTerm{{"c", "d"}, -1}};
  auto alg = Algebra::build(PrimeField(3), q, {r}, 4);
  EXPECT_EQ(alg->dimension(), 9u);
  EXPECT_EQ(alg->basis_between(0, 3).size(), 1u);
  auto p1 = projective(alg, 0);
  EXPECT_EQ(p1.dims(), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_FALSE(p1.relation_violation());
  auto i4 = injective(alg, 3);
  EXPECT_EQ(i4.dims(), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_FALSE(i4.relation_violation());
  EXPECT_TRUE(isomorphic(p1, i4));
}

TEST(StandardModules, Projectives) {
  auto a2 = builtin_algebra("a2");
  auto p1 = projective(a2, 0);
  EXPECT_EQ(p1.dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(p1.action(0), Matrix::from_rows(2, {{1}}));
  EXPECT_EQ(projective(a2, 1).dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(isomorphic(projective(a2, 1), simple(a2, 1)));

  auto kx2 = builtin_algebra("kx2");
  auto p = projective(kx2, 0);
  EXPECT_EQ(p.dims(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(p.action(0), Matrix::from_rows(2, {{0, 0}, {1, 0}}));
}

TEST(StandardModules, Injectives) {
  auto a2 = builtin_algebra("a2");
  EXPECT_TRUE(isomorphic(injective(a2, 0), simple(a2, 0)));
  EXPECT_EQ(injective(a2, 1).dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(isomorphic(injective(a2, 1), projective(a2, 0)));
  auto kx2 = builtin_algebra("kx2");
  EXPECT_TRUE(isomorphic(injective(kx2, 0), projective(kx2, 0)));
}

TEST(StandardModules, DualRegular) {
  EXPECT_EQ(dual_regular(builtin_algebra("kx2")).object.dims(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(dual_regular(builtin_algebra("a2")).object.dims(), (std::vector<std::size_t>{2, 1}));
  auto ss = builtin_algebra("semisimple2");
  auto d = dual_regular(ss);
  EXPECT_EQ(d.object.dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(isomorphic(d.object, regular(ss).object));
  EXPECT_EQ(d.injections.size(), 2u);
}

TEST(StandardModules, YonedaAndDuality) {
  for (const auto& name : builtin_algebra_names()) {
    auto alg = builtin_algebra(name);
    Rng rng(7);
    std::vector<Module> corpus = simples(alg);
    for (auto& m : projectives(alg)) corpus.push_back(m);
    for (auto& m : injectives(alg)) corpus.push_back(m);
    for (int i = 0; i < 6; ++i) corpus.push_back(random_module(rng, alg));
    for (const auto& m : corpus) {
      ASSERT_FALSE(m.relation_violation()) << name << " " << m.label();
      for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
        EXPECT_EQ(hom_dim(projective(alg, v), m), m.dim(v)) << name;
        EXPECT_EQ(hom_dim(m, injective(alg, v)), m.dim(v)) << name;
      }
    }
  }
}

TEST(StandardModules, SocleOfInjectiveIsSimple) {
  for (const auto& name : builtin_algebra_names()) {
    auto alg = builtin_algebra(name);
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      for (std::size_t w = 0; w < alg->vertex_count(); ++w) {
        EXPECT_EQ(hom_dim(simple(alg, w), injective(alg, v)), v == w ? 1u : 0u);
        EXPECT_EQ(hom_dim(projective(alg, v), simple(alg, w)), v == w ? 1u : 0u);
      }
    }
  }
}

TEST(StandardModules, HomDimensionsMatchEnumeration) {
  for (const auto& name : builtin_algebra_names()) {
    auto alg = builtin_algebra(name);
    std::vector<Module> mods = simples(alg);
    for (auto& m : projectives(alg)) mods.push_back(m);
    for (auto& m : injectives(alg)) mods.push_back(m);
    for (const auto& a : mods) {
      for (const auto& b : mods) EXPECT_EQ(hom_dim(a, b), oracle::hom_dimension(a, b)) << name;
    }
  }
}
