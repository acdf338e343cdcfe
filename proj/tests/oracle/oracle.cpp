#include "oracle.hpp"

#include <set>
#include <stdexcept>

namespace relhom::oracle {
namespace {

std::vector<Matrix> blocks_from(const Module& m, const Module& n, const std::vector<Scalar>& entries) {
  std::vector<Matrix> blocks;
  std::size_t pos = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Matrix b(m.modulus(), n.dim(v), m.dim(v));
    for (auto& x : b.data()) x = entries[pos++];
    blocks.push_back(std::move(b));
  }
  return blocks;
}

bool commutes(const Module& m, const Module& n, const std::vector<Matrix>& b) {
  const auto& q = m.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(b[arr.target] * m.action(a) == n.action(a) * b[arr.source])) return false;
  }
  return true;
}

std::size_t log_p(std::size_t count, Scalar p) {
  std::size_t d = 0;
  while (count > 1) {
    count /= p;
    ++d;
  }
  return d;
}

}  // namespace

std::vector<Morphism> all_morphisms(const Module& m, const Module& n) {
  std::size_t entries = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) entries += m.dim(v) * n.dim(v);
  if (entries > kMaxEntries) throw std::length_error("oracle: hom enumeration too large");
  const Scalar p = m.modulus();
  std::vector<Morphism> out;
  std::vector<Scalar> e(entries, 0);
  while (true) {
    auto b = blocks_from(m, n, e);
    if (commutes(m, n, b)) out.emplace_back(m, n, std::move(b));
    std::size_t i = 0;
    while (i < entries && e[i] == p - 1) e[i++] = 0;
    if (i == entries) break;
    ++e[i];
  }
  return out;
}

std::size_t hom_dimension(const Module& m, const Module& n) { return log_p(all_morphisms(m, n).size(), m.modulus()); }

std::vector<Morphism> idempotents(const Module& m) {
  std::vector<Morphism> out;
  for (auto& f : all_morphisms(m, m)) {
    if (f * f == f) out.push_back(std::move(f));
  }
  return out;
}

bool isomorphic(const Module& m, const Module& n) {
  if (m.dims() != n.dims()) return false;
  for (const auto& f : all_morphisms(m, n)) {
    if (f.is_iso()) return true;
  }
  return false;
}

std::vector<Module> decompose(const Module& m) {
  if (m.is_zero()) return {};
  for (const auto& e : idempotents(m)) {
    if (e.is_zero() || e == Morphism::identity(m)) continue;
    auto a = decompose(image(e).object);
    auto b = decompose(image(Morphism::identity(m) - e).object);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  return {m};
}

bool in_add(const Module& m, const std::vector<Module>& generators) {
  std::vector<Module> pieces;
  for (const auto& g : generators) {
    for (auto& x : decompose(g)) pieces.push_back(std::move(x));
  }
  for (const auto& x : decompose(m)) {
    bool found = false;
    for (const auto& y : pieces) {
      if (oracle::isomorphic(x, y)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<std::size_t> discardable_dims(const Morphism& f) {
  std::vector<std::size_t> best(f.source().dims().size(), 0);
  std::size_t best_rank = 0;
  for (const auto& e : idempotents(f.source())) {
    if (!(f * e).is_zero()) continue;
    const auto r = e.rank();
    if (r >= best_rank) {
      best_rank = r;
      for (std::size_t v = 0; v < best.size(); ++v) best[v] = rank(e.block(v));
    }
  }
  return best;
}

std::vector<std::size_t> left_discardable_dims(const Morphism& f) {
  std::vector<std::size_t> best(f.target().dims().size(), 0);
  std::size_t best_rank = 0;
  for (const auto& e : idempotents(f.target())) {
    if (!(e * f).is_zero()) continue;
    const auto r = e.rank();
    if (r >= best_rank) {
      best_rank = r;
      for (std::size_t v = 0; v < best.size(); ++v) best[v] = rank(e.block(v));
    }
  }
  return best;
}

namespace {

using Family = std::vector<Morphism>;

/// Every degree-n family φ_i: x^i -> a^{i+n}, i over x's degrees.
std::vector<Family> all_families(const Complex& x, const Complex& a, int n) {
  std::vector<Family> out{Family{}};
  for (int i = x.lo(); i <= x.hi(); ++i) {
    const auto maps = all_morphisms(x.term(i), a.term(i + n));
    if (out.size() * maps.size() > (1u << 16)) throw std::length_error("oracle: too many families");
    std::vector<Family> next;
    for (const auto& f : out) {
      for (const auto& m : maps) {
        next.push_back(f);
        next.back().push_back(m);
      }
    }
    out = std::move(next);
  }
  return out;
}

Family apply_d(const Complex& x, const Complex& a, int n, const Family& phi) {
  const Scalar p = x.algebra()->modulus();
  auto at = [&](int i) {
    if (i >= x.lo() && i <= x.hi()) return phi[static_cast<std::size_t>(i - x.lo())];
    return Morphism::zero(x.term(i), a.term(i + n));
  };
  Family out;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    Morphism d = a.differential(i + n) * at(i);
    const Morphism t = at(i + 1) * x.differential(i);
    d -= (n % 2 == 0) ? t : t.scaled(p - 1);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Scalar> key(const Family& f) {
  std::vector<Scalar> k;
  for (const auto& m : f) {
    const auto e = m.flatten();
    k.insert(k.end(), e.begin(), e.end());
  }
  return k;
}

bool is_zero(const Family& f) {
  for (const auto& m : f) {
    if (!m.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> hom_complex_cohomology(const Complex& x, const Complex& a) {
  std::vector<std::size_t> out;
  if (x.empty() || a.empty()) return out;
  const Scalar p = x.algebra()->modulus();
  for (int n = a.lo() - x.hi(); n <= a.hi() - x.lo(); ++n) {
    std::size_t cycles = 0;
    for (const auto& f : all_families(x, a, n)) {
      if (is_zero(apply_d(x, a, n, f))) ++cycles;
    }
    std::set<std::vector<Scalar>> boundaries;
    for (const auto& f : all_families(x, a, n - 1)) boundaries.insert(key(apply_d(x, a, n - 1, f)));
    out.push_back(log_p(cycles, p) - log_p(boundaries.size(), p));
  }
  return out;
}

bool null_homotopic(const ChainMap& f) {
  const auto target = key(f.components);
  for (const auto& h : all_families(f.source, f.target, -1)) {
    if (key(apply_d(f.source, f.target, -1, h)) == target) return true;
  }
  return false;
}

}  // namespace relhom::oracle

namespace relhom::oracle {
namespace {

void next_vector(std::vector<Scalar>& e, Scalar p, bool& done) {
  std::size_t i = 0;
  while (i < e.size() && e[i] == p - 1) e[i++] = 0;
  done = i == e.size();
  if (!done) ++e[i];
}

}  // namespace

std::size_t ext1_dimension(const Module& m, const Module& n) {
  const auto& alg = m.algebra();
  const auto& q = alg->quiver();
  const Scalar p = m.modulus();
  std::size_t delta_entries = 0, h_entries = 0;
  for (const auto& a : q.arrows()) delta_entries += n.dim(a.target) * m.dim(a.source);
  for (std::size_t v = 0; v < m.dims().size(); ++v) h_entries += n.dim(v) * m.dim(v);
  if (delta_entries > kMaxEntries || h_entries > kMaxEntries) throw std::length_error("oracle: ext enumeration too large");

  auto deltas_from = [&](const std::vector<Scalar>& e) {
    std::vector<Matrix> out;
    std::size_t pos = 0;
    for (const auto& a : q.arrows()) {
      Matrix d(p, n.dim(a.target), m.dim(a.source));
      for (auto& x : d.data()) x = e[pos++];
      out.push_back(std::move(d));
    }
    return out;
  };
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.dims().size(); ++v) dims.push_back(n.dim(v) + m.dim(v));

  // Cocycles: block upper triangular structures [[N_a, δ_a], [0, M_a]] that satisfy the relations.
  std::size_t cocycles = 0;
  std::vector<Scalar> e(delta_entries, 0);
  for (bool done = false; !done; next_vector(e, p, done)) {
    const auto deltas = deltas_from(e);
    std::vector<Matrix> actions;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto& arr = q.arrow(a);
      actions.push_back(vstack(hstack(n.action(a), deltas[a]),
                               hstack(Matrix(p, m.dim(arr.target), n.dim(arr.source)), m.action(a))));
    }
    if (!Module(alg, dims, std::move(actions)).relation_violation()) ++cocycles;
  }
  // Coboundaries: δ_a = N_a h_s - h_t M_a.
  std::set<std::vector<Scalar>> coboundaries;
  std::vector<Scalar> h(h_entries, 0);
  for (bool done = false; !done; next_vector(h, p, done)) {
    const auto hb = blocks_from(m, n, h);
    std::vector<Scalar> k;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto& arr = q.arrow(a);
      const auto d = n.action(a) * hb[arr.source] - hb[arr.target] * m.action(a);
      k.insert(k.end(), d.data().begin(), d.data().end());
    }
    coboundaries.insert(std::move(k));
  }
  return log_p(cocycles, p) - log_p(coboundaries.size(), p);
}

}  // namespace relhom::oracle
