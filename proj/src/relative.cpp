#include "relhom/relative.hpp"

#include <algorithm>
#include <exception>

#include "relhom/errors.hpp"
#include "relhom/sampling.hpp"

namespace relhom {

namespace {

std::string syzygy_name(const Module& base, std::size_t k, Direction d) {
  const std::string sym = d == Direction::resolution ? "Ω" : "Ω^-";
  return sym + std::to_string(k) + "(" + base.label() + ")";
}

template <class Fn>
void for_each_index(std::size_t n, Execution execution, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Subcategories

Subcategory Subcategory::make(std::string name, std::vector<Module> generators, SideRole role) {
  if (generators.empty()) throw ContractViolation("subcategory '" + name + "' has no generators");
  const AlgebraPtr alg = generators.front().algebra();
  for (const auto& g : generators) {
    if (g.is_zero()) throw ContractViolation("subcategory '" + name + "' has a zero generator");
    if (g.algebra() != alg) throw ContractViolation("subcategory '" + name + "' mixes algebras");
  }
  Subcategory s{std::move(name), std::move(generators), role, true, true};
  for (const auto& p : projectives(alg)) s.contains_projectives = s.contains_projectives && s.contains(p);
  for (const auto& i : injectives(alg)) s.contains_injectives = s.contains_injectives && s.contains(i);
  return s;
}

Subcategory projective_subcategory(const AlgebraPtr& algebra) {
  return Subcategory::make("proj", projectives(algebra), SideRole::contravariant);
}

Subcategory injective_subcategory(const AlgebraPtr& algebra) {
  return Subcategory::make("inj", injectives(algebra), SideRole::covariant);
}

BalancedPair classical_pair(const AlgebraPtr& algebra) {
  return {"proj", projective_subcategory(algebra), injective_subcategory(algebra)};
}

// ---------------------------------------------------------------------------
// Approximations

Morphism right_approximation(const Module& m, const Subcategory& x) { return evaluation_map(x.generators, m); }

Morphism left_approximation(const Module& m, const Subcategory& y) { return coevaluation_map(y.generators, m); }

Morphism minimal_right_approximation(const Module& m, const Subcategory& x) {
  return right_minimal_reduction(right_approximation(m, x)).reduced;
}

Morphism minimal_left_approximation(const Module& m, const Subcategory& y) {
  return left_minimal_reduction(left_approximation(m, y)).reduced;
}

bool verify_right_approximation(const Morphism& f, const Subcategory& x) {
  if (!x.contains(f.source())) return false;
  for (const auto& g : x.generators) {
    for (const auto& phi : hom_basis(g, f.target())) {
      if (!factor_through(phi, f)) return false;
    }
  }
  return true;
}

bool verify_left_approximation(const Morphism& f, const Subcategory& y) {
  if (!y.contains(f.target())) return false;
  for (const auto& g : y.generators) {
    for (const auto& phi : hom_basis(f.source(), g)) {
      if (!factor_from(phi, f)) return false;
    }
  }
  return true;
}

AdmissibilityReport is_admissible(const Subcategory& x, const std::vector<Module>& corpus) {
  AdmissibilityReport r;
  if (x.contains_projectives) r.reason = "contains every indecomposable projective";
  for (const auto& m : corpus) {
    if (!right_approximation(m, x).is_epi()) {
      r.admissible = false;
      r.failures.push_back(m.label());
    }
  }
  if (r.admissible && r.reason.empty()) r.reason = "every corpus approximation is epic";
  if (!r.admissible) r.reason = "right approximation of " + r.failures.front() + " is not epic";
  return r;
}

AdmissibilityReport is_coadmissible(const Subcategory& y, const std::vector<Module>& corpus) {
  AdmissibilityReport r;
  if (y.contains_injectives) r.reason = "contains every indecomposable injective";
  for (const auto& m : corpus) {
    if (!left_approximation(m, y).is_mono()) {
      r.admissible = false;
      r.failures.push_back(m.label());
    }
  }
  if (r.admissible && r.reason.empty()) r.reason = "every corpus approximation is monic";
  if (!r.admissible) r.reason = "left approximation of " + r.failures.front() + " is not monic";
  return r;
}

// ---------------------------------------------------------------------------
// Resolutions

const Module& Resolution::term(std::size_t k) const {
  const int n = static_cast<int>(k);
  return complex.term(direction == Direction::resolution ? -n : n);
}

Complex Resolution::augmented() const {
  const AlgebraPtr& alg = base.algebra();
  const std::size_t t = terms();
  std::vector<Module> mods;
  std::vector<Morphism> diffs;
  if (direction == Direction::resolution) {
    mods.push_back(syzygies[t]);
    if (t == 0) return Complex(alg, 0, {base}, {});
    diffs.push_back(syzygy_maps[t - 1]);
    for (int n = complex.lo(); n <= 0; ++n) {
      mods.push_back(complex.term(n));
      diffs.push_back(n < 0 ? complex.differential(n) : augmentation);
    }
    mods.push_back(base);
    return Complex(alg, -static_cast<int>(t), std::move(mods), std::move(diffs));
  }
  mods.push_back(base);
  if (t == 0) return Complex(alg, -1, {base}, {});
  diffs.push_back(augmentation);
  for (int n = 0; n <= complex.hi(); ++n) {
    mods.push_back(complex.term(n));
    diffs.push_back(n < complex.hi() ? complex.differential(n) : syzygy_maps[t - 1]);
  }
  mods.push_back(syzygies[t]);
  return Complex(alg, -1, std::move(mods), std::move(diffs));
}

Resolution proper_resolution(const Module& m, const Subcategory& x, std::size_t depth) {
  Resolution r;
  r.direction = Direction::resolution;
  r.base = m;
  r.depth = depth;
  r.subcategory = x.name;
  r.syzygies.push_back(m);
  std::vector<Morphism> covers;
  for (std::size_t k = 0; k <= depth; ++k) {
    const Module& omega = r.syzygies[k];
    if (omega.is_zero()) break;
    const Morphism pi = minimal_right_approximation(omega, x);
    if (!pi.is_epi()) {
      throw AdmissibilityFailure("right " + x.name + "-approximation of " + omega.label() + " is not epic",
                                 omega.label());
    }
    auto ker = kernel(pi);
    covers.push_back(pi);
    r.syzygies.push_back(ker.object.named(syzygy_name(m, k + 1, r.direction)));
    r.syzygy_maps.push_back(morphism_from_total(r.syzygies.back(), pi.source(), ker.inclusion.total_matrix()));
  }
  r.finite = r.syzygies.back().is_zero();
  const std::size_t t = covers.size();
  const AlgebraPtr& alg = m.algebra();
  if (t == 0) {
    r.complex = Complex::zero(alg);
    r.augmentation = Morphism::zero(Module::zero(alg), m);
    return r;
  }
  std::vector<Module> terms;
  std::vector<Morphism> diffs;
  for (std::size_t j = 0; j < t; ++j) {
    const std::size_t k = t - 1 - j;  // term index at degree -k
    terms.push_back(covers[k].source());
    if (k > 0) diffs.push_back(r.syzygy_maps[k - 1] * covers[k]);
  }
  r.complex = Complex(alg, -static_cast<int>(t - 1), std::move(terms), std::move(diffs));
  r.augmentation = covers[0];
  return r;
}

Resolution proper_coresolution(const Module& n, const Subcategory& y, std::size_t depth) {
  Resolution r;
  r.direction = Direction::coresolution;
  r.base = n;
  r.depth = depth;
  r.subcategory = y.name;
  r.syzygies.push_back(n);
  std::vector<Morphism> envelopes;
  for (std::size_t k = 0; k <= depth; ++k) {
    const Module& omega = r.syzygies[k];
    if (omega.is_zero()) break;
    const Morphism iota = minimal_left_approximation(omega, y);
    if (!iota.is_mono()) {
      throw AdmissibilityFailure("left " + y.name + "-approximation of " + omega.label() + " is not monic",
                                 omega.label());
    }
    auto cok = cokernel(iota);
    envelopes.push_back(iota);
    r.syzygies.push_back(cok.object.named(syzygy_name(n, k + 1, r.direction)));
    r.syzygy_maps.push_back(morphism_from_total(iota.target(), r.syzygies.back(), cok.projection.total_matrix()));
  }
  r.finite = r.syzygies.back().is_zero();
  const std::size_t t = envelopes.size();
  const AlgebraPtr& alg = n.algebra();
  if (t == 0) {
    r.complex = Complex::zero(alg);
    r.augmentation = Morphism::zero(n, Module::zero(alg));
    return r;
  }
  std::vector<Module> terms;
  std::vector<Morphism> diffs;
  for (std::size_t k = 0; k < t; ++k) {
    terms.push_back(envelopes[k].target());
    if (k + 1 < t) diffs.push_back(envelopes[k + 1] * r.syzygy_maps[k]);
  }
  r.complex = Complex(alg, 0, std::move(terms), std::move(diffs));
  r.augmentation = envelopes[0];
  return r;
}

ResolutionCertificate certify(const Resolution& r, const Subcategory& x, const Subcategory* y) {
  const Complex aug = r.augmented();
  ResolutionCertificate c{is_rel_acyclic(aug, Side::right, x.generators), std::nullopt};
  if (y) c.left = is_rel_acyclic(aug, Side::left, y->generators);
  return c;
}

// ---------------------------------------------------------------------------
// Relative Ext

namespace {

void check_degree(std::size_t i) {
  if (i == 0) throw ContractViolation("relative Ext is only defined here in degrees >= 1");
}

void check_reach(const Resolution& r, std::size_t i) {
  if (!r.finite && r.terms() < i + 2) {
    throw DepthInsufficient("Ext^" + std::to_string(i) + " needs a (co)resolution of " + r.base.label() +
                            " with at least " + std::to_string(i + 1) + " differentials; increase depth");
  }
}

}  // namespace

std::size_t ext_via_resolution(const Resolution& res_m, const Module& n, std::size_t i) {
  check_degree(i);
  check_reach(res_m, i);
  if (res_m.complex.empty()) return 0;
  return cohomology(hom_into(res_m.complex, n)).at(static_cast<int>(i));
}

std::size_t ext_via_coresolution(const Module& m, const Resolution& cores_n, std::size_t i) {
  check_degree(i);
  check_reach(cores_n, i);
  if (cores_n.complex.empty()) return 0;
  return cohomology(hom_from(m, cores_n.complex)).at(static_cast<int>(i));
}

namespace {

ExtTable table_from(const Module& m, const Module& n, const Resolution* res, const Resolution* cores,
                    std::size_t max_degree) {
  ExtTable t{m.label(), n.label(), max_degree, {}, {}, true};
  for (std::size_t i = 1; i <= max_degree; ++i) {
    if (res) t.via_x.push_back(ext_via_resolution(*res, n, i));
    if (cores) t.via_y.push_back(ext_via_coresolution(m, *cores, i));
  }
  t.balanced = !(res && cores) || t.via_x == t.via_y;
  return t;
}

void check_depth(std::size_t max_degree, std::size_t depth) {
  if (max_degree == 0) throw ContractViolation("relative Ext is only defined here in degrees >= 1");
  if (depth < max_degree + 1) {
    throw DepthInsufficient("Ext up to degree " + std::to_string(max_degree) + " needs depth >= " +
                            std::to_string(max_degree + 1) + " (got " + std::to_string(depth) + "); increase depth");
  }
}

}  // namespace

ExtTable rel_ext(const Module& m, const Module& n, const BalancedPair& pair, std::size_t max_degree, Via via,
                 std::size_t depth) {
  check_depth(max_degree, depth);
  std::optional<Resolution> res;
  std::optional<Resolution> cores;
  if (via != Via::y) res = proper_resolution(m, pair.x, depth);
  if (via != Via::x) cores = proper_coresolution(n, pair.y, depth);
  return table_from(m, n, res ? &*res : nullptr, cores ? &*cores : nullptr, max_degree);
}

std::size_t rel_ext_dim(const Module& m, const Module& n, const BalancedPair& pair, std::size_t i, std::size_t depth) {
  check_depth(i, depth);
  return ext_via_resolution(proper_resolution(m, pair.x, depth), n, i);
}

std::vector<ExtTable> ext_tables(const BalancedPair& pair, const std::vector<Module>& corpus, std::size_t max_degree,
                                 std::size_t depth, Execution execution) {
  check_depth(max_degree, depth);
  const std::size_t k = corpus.size();
  std::vector<Resolution> res(k);
  std::vector<Resolution> cores(k);
  for_each_index(2 * k, execution, [&](std::size_t i) {
    if (i < k) res[i] = proper_resolution(corpus[i], pair.x, depth);
    else cores[i - k] = proper_coresolution(corpus[i - k], pair.y, depth);
  });
  std::vector<ExtTable> tables(k * k);
  for_each_index(k * k, execution, [&](std::size_t idx) {
    const std::size_t a = idx / k;
    const std::size_t b = idx % k;
    tables[idx] = table_from(corpus[a], corpus[b], &res[a], &cores[b], max_degree);
  });
  return tables;
}

// ---------------------------------------------------------------------------
// Resolution dimensions

std::optional<Periodicity> detect_periodicity(const Resolution& r, const Subcategory& sub) {
  const std::size_t count = r.syzygies.size();
  std::vector<int> member(count, -1);
  auto in_sub = [&](std::size_t j) {
    if (member[j] < 0) member[j] = sub.contains(r.syzygies[j]) ? 1 : 0;
    return member[j] == 1;
  };
  for (std::size_t k = 1; k < count; ++k) {
    for (std::size_t j = 0; j + k < count; ++j) {
      if (r.syzygies[j].is_zero()) break;
      const auto iso = find_isomorphism(r.syzygies[j + k], r.syzygies[j]);
      if (iso.verdict != IsoVerdict::isomorphic) continue;
      bool outside = true;
      for (std::size_t q = j; q < j + k && outside; ++q) outside = !in_sub(q);
      if (outside) return Periodicity{j, k, *iso.witness};
    }
  }
  return std::nullopt;
}

std::string DimReport::describe() const {
  if (dimension) return std::to_string(*dimension);
  std::string s = ">= " + std::to_string(cap + 1);
  if (periodicity) {
    s += " (infinite: syzygy " + std::to_string(periodicity->start + periodicity->period) + " ≅ syzygy " +
         std::to_string(periodicity->start) + ", period " + std::to_string(periodicity->period) + ")";
  }
  return s;
}

namespace {

DimReport dimension_report(const Module& base, const Subcategory& sub, std::size_t cap, Resolution r, bool forward) {
  DimReport d;
  d.base = base;
  d.subcategory = sub.name;
  d.cap = cap;
  for (std::size_t n = 0; n <= cap && n < r.syzygies.size(); ++n) {
    if (auto w = sub.membership(r.syzygies[n])) {
      d.dimension = n;
      d.witness = std::move(w);
      break;
    }
  }
  const Module zero = Module::zero(base.algebra());
  for (std::size_t n = 0; n <= cap; ++n) {
    const Module& next = n + 1 < r.syzygies.size() ? r.syzygies[n + 1] : zero;
    const std::size_t e = forward ? ext_via_resolution(r, next, n + 1) : ext_via_coresolution(next, r, n + 1);
    d.vanishing_test.push_back(e);
    if (e == 0 && !d.cross_check) d.cross_check = n;
  }
  d.consistent = d.dimension == d.cross_check;
  if (!d.dimension) d.periodicity = detect_periodicity(r, sub);
  d.resolution = std::move(r);
  return d;
}

}  // namespace

DimReport resolution_dimension(const Module& m, const Subcategory& x, std::size_t cap) {
  return dimension_report(m, x, cap, proper_resolution(m, x, cap + 2), true);
}

DimReport coresolution_dimension(const Module& n, const Subcategory& y, std::size_t cap) {
  return dimension_report(n, y, cap, proper_coresolution(n, y, cap + 2), false);
}

// ---------------------------------------------------------------------------
// Balanced pairs

StarCertificate star_acyclicity(const Complex& c, const BalancedPair& pair) {
  return {is_rel_acyclic(c, Side::right, pair.x.generators), is_rel_acyclic(c, Side::left, pair.y.generators)};
}

StarCertificate star_acyclicity(const ShortExactSequence& s, const BalancedPair& pair) {
  return star_acyclicity(as_complex(s), pair);
}

BalancedPairReport verify_balanced_pair(const BalancedPair& pair, const std::vector<Module>& corpus, std::size_t depth,
                                        std::size_t samples, std::uint64_t seed) {
  BalancedPairReport r;
  r.pair = pair.name;
  r.x_admissible = is_admissible(pair.x, corpus);
  r.y_coadmissible = is_coadmissible(pair.y, corpus);
  r.admissibility_agrees = r.x_admissible.admissible == r.y_coadmissible.admissible;

  for (const auto& m : corpus) {
    ObjectCertificate c{m.label(), false, {}};
    try {
      const auto res = proper_resolution(m, pair.x, depth);
      const auto cert = certify(res, pair.x, &pair.y);
      c.ok = cert.ok();
      c.detail = c.ok ? "resolution with " + std::to_string(res.terms()) + " terms is right and left acyclic"
                      : (cert.right.acyclic ? "not left acyclic: " + cert.left->failure
                                            : "not right acyclic: " + cert.right.failure);
    } catch (const AdmissibilityFailure& e) {
      c.detail = e.what();
    }
    r.resolutions.push_back(std::move(c));
  }
  for (const auto& n : corpus) {
    ObjectCertificate c{n.label(), false, {}};
    try {
      const auto cores = proper_coresolution(n, pair.y, depth);
      const auto cert = certify(cores, pair.x, &pair.y);
      c.ok = cert.ok();
      c.detail = c.ok ? "coresolution with " + std::to_string(cores.terms()) + " terms is right and left acyclic"
                      : (cert.right.acyclic ? "not left acyclic: " + cert.left->failure
                                            : "not right acyclic: " + cert.right.failure);
    } catch (const AdmissibilityFailure& e) {
      c.detail = e.what();
    }
    r.coresolutions.push_back(std::move(c));
  }

  // Random complexes and short exact sequences: the two acyclicity classes must agree.
  Rng rng(seed);
  std::vector<Module> pool = corpus;
  pool.insert(pool.end(), pair.x.generators.begin(), pair.x.generators.end());
  pool.insert(pool.end(), pair.y.generators.begin(), pair.y.generators.end());
  pool.erase(std::remove_if(pool.begin(), pool.end(), [](const Module& m) { return m.is_zero(); }), pool.end());
  for (std::size_t s = 0; s < samples && !pool.empty(); ++s) {
    Complex c;
    if (s % 2 == 0) {
      c = random_complex(rng, pool, -1, 2 + static_cast<int>(rng.below(3)));
    } else {
      const Module& a = pool[rng.below(pool.size())];
      const Module& b = pool[rng.below(pool.size())];
      const Morphism g = random_morphism(rng, a, b);
      const auto k = kernel(g);
      const auto im = image(g);
      c = Complex(a.algebra(), -1, {k.object, a, im.object}, {k.inclusion, im.corestriction});
    }
    const auto cert = star_acyclicity(c, pair);
    ++r.samples;
    if (cert.star()) ++r.star_samples;
    if (cert.right.acyclic != cert.left.acyclic) {
      std::string terms;
      for (int n = c.lo(); n <= c.hi(); ++n) terms += (terms.empty() ? "" : ", ") + c.term(n).label();
      r.mismatches.push_back("sample " + std::to_string(s) + " [" + terms + "]: right " +
                             (cert.right.acyclic ? "acyclic" : "not acyclic") + ", left " +
                             (cert.left.acyclic ? "acyclic" : "not acyclic"));
    }
  }

  auto all_ok = [](const std::vector<ObjectCertificate>& v) {
    return std::all_of(v.begin(), v.end(), [](const ObjectCertificate& c) { return c.ok; });
  };
  r.passed = r.admissibility_agrees && r.x_admissible.admissible && all_ok(r.resolutions) &&
             all_ok(r.coresolutions) && r.mismatches.empty();
  return r;
}

}  // namespace relhom
