#include "relhom/sampling.hpp"

#include "relhom/errors.hpp"

namespace relhom {

Matrix random_matrix(Rng& rng, Scalar p, std::size_t rows, std::size_t cols) {
  Matrix m(p, rows, cols);
  for (auto& x : m.data()) x = rng.scalar(p);
  return m;
}

Matrix random_invertible(Rng& rng, Scalar p, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, p, n, n);
    if (rank(m) == n) return m;
  }
}

Morphism random_morphism(Rng& rng, const Module& m, const Module& n) {
  HomSpace h(m, n);
  std::vector<Scalar> c(h.dim());
  for (auto& x : c) x = rng.scalar(m.modulus());
  return h.element(c);
}

Module random_module(Rng& rng, const AlgebraPtr& algebra, std::size_t max_summands) {
  const auto nv = algebra->vertex_count();
  auto pick = [&] {
    std::vector<Module> parts;
    const std::size_t k = 1 + rng.below(std::max<std::size_t>(1, max_summands));
    for (std::size_t i = 0; i < k; ++i) parts.push_back(projective(algebra, rng.below(nv)));
    return direct_sum_object(algebra, parts);
  };
  auto q0 = pick();
  auto q1 = pick();
  auto f = random_morphism(rng, q1, q0);
  return cokernel(f).object;
}

Module random_conjugate(Rng& rng, const Module& m) {
  const auto& alg = m.algebra();
  const Scalar p = m.modulus();
  std::vector<Matrix> g, ginv;
  for (auto d : m.dims()) {
    g.push_back(random_invertible(rng, p, d));
    ginv.push_back(*inverse(g.back()));
  }
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < alg->arrow_count(); ++a) {
    const auto& arr = alg->quiver().arrow(a);
    acts.push_back(g[arr.target] * m.action(a) * ginv[arr.source]);
  }
  return Module(alg, m.dims(), std::move(acts), m.name());
}

Module random_sum(Rng& rng, const std::vector<Module>& pool, std::size_t count) {
  if (pool.empty()) throw ContractViolation("random_sum: empty pool");
  std::vector<Module> parts;
  for (std::size_t i = 0; i < count; ++i) parts.push_back(pool[rng.below(pool.size())]);
  return random_conjugate(rng, direct_sum_object(pool.front().algebra(), parts));
}

}  // namespace relhom
