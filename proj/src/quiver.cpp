#include "relhom/quiver.hpp"

#include <algorithm>
#include <set>

#include "relhom/errors.hpp"

namespace relhom {

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows) : vertices_(vertices), arrows_(std::move(arrows)) {
  std::set<std::string> labels;
  for (const auto& a : arrows_) {
    if (a.source >= vertices_ || a.target >= vertices_) {
      throw InputError("quiver: arrow '" + a.label + "' has an endpoint out of range");
    }
    if (a.label.empty()) throw InputError("quiver: arrow labels must be nonempty");
    if (!labels.insert(a.label).second) throw InputError("quiver: duplicate arrow label '" + a.label + "'");
  }
}

std::size_t Quiver::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].label == label) return i;
  }
  throw InputError("quiver: unknown arrow label '" + std::string(label) + "'");
}

namespace {

// Deg-lex with longer paths first: the leading path of an ideal element is
// the one that gets rewritten.
bool leads(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  if (a.arrows != b.arrows) return a.arrows > b.arrows;
  return a.source > b.source;
}

std::vector<Path> paths_up_to(const Quiver& q, std::size_t max_len) {
  std::vector<Path> all;
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path{v, {}});
  all = frontier;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      const auto t = p.target(q);
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        if (q.arrow(a).source != t) continue;
        Path e = p;
        e.arrows.push_back(a);
        next.push_back(std::move(e));
      }
    }
    if (next.size() > 200000) throw InputError("algebra: path enumeration exploded; lower the cap");
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

Path concat(const Path& a, const Path& b) {
  Path r = a;
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::build(PrimeField field, Quiver quiver, std::vector<Relation> relations,
                                              std::size_t cap, std::string name) {
  std::shared_ptr<Algebra> alg(new Algebra());
  alg->name_ = std::move(name);
  alg->field_ = field;
  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(relations);
  alg->cap_ = cap;
  const Scalar p = field.modulus();
  const Quiver& q = alg->quiver_;

  // Validate relations: parallel paths of length >= 2.
  for (std::size_t r = 0; r < alg->relations_.size(); ++r) {
    std::map<Path, Scalar> combined;
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& term : alg->relations_[r]) {
      if (term.labels.size() < 2) {
        throw InputError("algebra: relation " + std::to_string(r + 1) +
                         " is not admissible (term of length < 2 lies outside the arrow ideal squared)");
      }
      Path path;
      for (std::size_t k = 0; k < term.labels.size(); ++k) {
        const auto a = q.arrow_index(term.labels[k]);
        if (k == 0) path.source = q.arrow(a).source;
        else if (q.arrow(path.arrows.back()).target != q.arrow(a).source) {
          throw InputError("algebra: relation " + std::to_string(r + 1) + " contains a non-composable path");
        }
        path.arrows.push_back(a);
      }
      std::pair<std::size_t, std::size_t> se{path.source, path.target(q)};
      if (ends && *ends != se) throw InputError("algebra: relation " + std::to_string(r + 1) + " mixes non-parallel paths");
      ends = se;
      auto& c = combined[path];
      c = fp::add(c, field.reduce(term.coeff), p);
    }
    std::vector<std::pair<Path, Scalar>> terms;
    for (auto& [path, c] : combined) {
      if (c != 0) terms.emplace_back(path, c);
    }
    if (terms.empty()) throw InputError("algebra: relation " + std::to_string(r + 1) + " is zero");
    alg->relation_paths_.push_back(std::move(terms));
  }

  // Path space up to cap+1, columns in leading order.
  auto paths = paths_up_to(q, cap + 1);
  std::sort(paths.begin(), paths.end(), leads);
  std::map<Path, std::size_t> column;
  for (std::size_t i = 0; i < paths.size(); ++i) column[paths[i]] = i;

  std::vector<std::vector<std::size_t>> ending_at(q.vertex_count()), starting_at(q.vertex_count());
  for (const auto& path : paths) {
    ending_at[path.target(q)].push_back(column[path]);
    starting_at[path.source].push_back(column[path]);
  }

  std::vector<std::vector<Scalar>> rows;
  for (const auto& rel : alg->relation_paths_) {
    std::size_t min_len = rel.front().first.length();
    for (const auto& [path, c] : rel) min_len = std::min(min_len, path.length());
    const auto s = rel.front().first.source;
    const auto t = rel.front().first.target(q);
    for (auto ui : ending_at[s]) {
      const Path& u = paths[ui];
      if (u.length() + min_len > cap + 1) continue;
      for (auto vi : starting_at[t]) {
        const Path& v = paths[vi];
        if (u.length() + min_len + v.length() > cap + 1) continue;
        std::vector<Scalar> row(paths.size(), 0);
        bool any = false;
        for (const auto& [path, c] : rel) {
          Path w = concat(concat(u, path), v);
          if (w.length() > cap + 1) continue;
          auto& slot = row[column.at(w)];
          slot = fp::add(slot, c, p);
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  }

  Matrix ideal(p, rows.size(), paths.size());
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), ideal.row(i).begin());
  auto red = rref(ideal);
  std::vector<long> pivot_row(paths.size(), -1);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) pivot_row[red.pivots[i]] = static_cast<long>(i);

  for (std::size_t c = 0; c < paths.size(); ++c) {
    if (paths[c].length() != cap + 1) continue;
    const long r = pivot_row[c];
    bool pure = r >= 0;
    if (pure) {
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (j != c && red.reduced(static_cast<std::size_t>(r), j) != 0) pure = false;
      }
    }
    if (!pure) {
      throw InputError("algebra: path " + alg->path_name(paths[c]) + " of length " + std::to_string(cap + 1) +
                       " does not vanish modulo the relations; the algebra is infinite-dimensional or the cap is too small");
    }
  }

  // Standard paths (non-pivots) form the basis, shortest first.
  std::vector<std::size_t> standard;
  for (std::size_t c = 0; c < paths.size(); ++c) {
    if (pivot_row[c] < 0) standard.push_back(c);
  }
  std::sort(standard.begin(), standard.end(), [&](std::size_t a, std::size_t b) { return leads(paths[b], paths[a]); });
  std::map<std::size_t, std::size_t> basis_index;
  for (auto c : standard) {
    basis_index[c] = alg->basis_.size();
    alg->basis_.push_back(paths[c]);
  }

  for (std::size_t c = 0; c < paths.size(); ++c) {
    PathVector nf;
    if (pivot_row[c] < 0) {
      nf.emplace_back(basis_index.at(c), 1);
    } else {
      const auto r = static_cast<std::size_t>(pivot_row[c]);
      for (auto sc : standard) {
        const Scalar v = red.reduced(r, sc);
        if (v != 0) nf.emplace_back(basis_index.at(sc), fp::neg(v, p));
      }
      std::sort(nf.begin(), nf.end());
    }
    alg->normal_forms_.emplace(paths[c], std::move(nf));
  }

  alg->between_.assign(q.vertex_count(), std::vector<std::vector<std::size_t>>(q.vertex_count()));
  for (std::size_t i = 0; i < alg->basis_.size(); ++i) {
    const auto& b = alg->basis_[i];
    alg->between_[b.source][b.target(q)].push_back(i);
  }

  // Closure of the basis under truncation and associativity of the product.
  const auto& basis = alg->basis_;
  std::set<Path> basis_set(basis.begin(), basis.end());
  for (const auto& b : basis) {
    if (b.arrows.empty()) continue;
    Path prefix{b.source, {b.arrows.begin(), b.arrows.end() - 1}};
    Path suffix{q.arrow(b.arrows.front()).target, {b.arrows.begin() + 1, b.arrows.end()}};
    if (!basis_set.count(prefix) || !basis_set.count(suffix)) {
      throw InputError("algebra: basis is not closed under truncation at " + alg->path_name(b));
    }
  }
  for (const auto& rel : alg->relation_paths_) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& [path, c] : rel) {
      for (const auto& [idx, v] : alg->reduce(path)) acc[idx] = fp::add(acc[idx], fp::mul(c, v, p), p);
    }
    for (const auto& [idx, v] : acc) {
      if (v != 0) throw InputError("algebra: a relation does not reduce to zero (rewriting is not confluent)");
    }
  }
  if (basis.size() <= 64) {
    auto times = [&](const PathVector& x, std::size_t b) {
      std::map<std::size_t, Scalar> acc;
      for (const auto& [i, c] : x) {
        for (const auto& [j, v] : alg->multiply(i, b)) acc[j] = fp::add(acc[j], fp::mul(c, v, p), p);
      }
      PathVector out;
      for (auto& [j, v] : acc) {
        if (v) out.emplace_back(j, v);
      }
      return out;
    };
    auto before = [&](std::size_t a, const PathVector& x) {
      std::map<std::size_t, Scalar> acc;
      for (const auto& [i, c] : x) {
        for (const auto& [j, v] : alg->multiply(a, i)) acc[j] = fp::add(acc[j], fp::mul(c, v, p), p);
      }
      PathVector out;
      for (auto& [j, v] : acc) {
        if (v) out.emplace_back(j, v);
      }
      return out;
    };
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (basis[a].target(q) != basis[b].source) continue;
        const auto ab = alg->multiply(a, b);
        for (std::size_t c = 0; c < basis.size(); ++c) {
          if (basis[b].target(q) != basis[c].source) continue;
          if (times(ab, c) != before(a, alg->multiply(b, c))) {
            throw InputError("algebra: multiplication of basis paths is not associative under the rewriting table");
          }
        }
      }
    }
  }
  return alg;
}

const std::vector<std::size_t>& Algebra::basis_between(std::size_t from, std::size_t to) const {
  return between_.at(from).at(to);
}

PathVector Algebra::reduce(const Path& path) const {
  if (path.length() > cap_ + 1) return {};
  auto it = normal_forms_.find(path);
  if (it == normal_forms_.end()) throw ContractViolation("Algebra::reduce: not a path of this quiver");
  return it->second;
}

PathVector Algebra::multiply(std::size_t a, std::size_t b) const {
  const Path& x = basis_.at(a);
  const Path& y = basis_.at(b);
  if (x.target(quiver_) != y.source) return {};
  return reduce(concat(x, y));
}

std::string Algebra::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += quiver_.arrow(p.arrows[i]).label;
  }
  return s;
}

}  // namespace relhom
