#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "oracle/oracle.hpp"
#include "relhom/catalog.hpp"
#include "relhom/cotorsion.hpp"
#include "relhom/derived.hpp"
#include "relhom/sampling.hpp"
#include "run.hpp"

namespace relhom::acceptance {

namespace {

const Workspace& workspace(const std::string& name) {
  static std::map<std::string, Workspace> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, builtin_workspace(name)).first;
  return it->second;
}

// Accumulates instance counts and the first few failures of a criterion.
struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;

  void check(bool ok, const std::function<std::string()>& what) {
    ++instances;
    if (ok) return;
    ++failures;
    if (examples.size() < 3) examples.push_back(what());
  }
  bool passed() const { return failures == 0 && instances > 0; }
  std::string summary(const std::string& noun) const {
    std::string s = std::to_string(instances) + " " + noun + ", " + std::to_string(failures) + " failed";
    for (const auto& e : examples) s += "; " + e;
    return s;
  }
};

Result c1() {
  Tally t;
  for (const auto& name : builtin_algebra_names()) {
    const auto& ws = workspace(name);
    const auto corpus = ws.corpus_modules();
    for (const auto& np : ws.pairs) {
      for (const auto& tab : ext_tables(np.pair, corpus, 5, 6)) {
        t.check(tab.balanced, [&] { return name + " " + np.pair.name + " Ext(" + tab.m + ", " + tab.n + ")"; });
      }
    }
  }
  return {1, "balance of relative Ext, 1 <= i <= 5", t.passed(), t.summary("corpus pairs")};
}

Result c2() {
  Tally t;
  auto zero = [](const ExtTable& tab) {
    for (std::size_t i = 0; i < tab.via_x.size(); ++i) {
      if (tab.via_x[i] != 0 || tab.via_y[i] != 0) return false;
    }
    return true;
  };
  for (const auto& name : builtin_algebra_names()) {
    const auto& ws = workspace(name);
    const auto corpus = ws.corpus_modules();
    for (const auto& np : ws.pairs) {
      const auto& pair = np.pair;
      for (const auto& a : corpus) {
        for (const auto& g : pair.x.generators) {
          t.check(zero(rel_ext(g, a, pair, 5, Via::both, 6)), [&] { return name + " Ext(" + g.label() + ", " + a.label() + ")"; });
        }
        for (const auto& h : pair.y.generators) {
          t.check(zero(rel_ext(a, h, pair, 5, Via::both, 6)), [&] { return name + " Ext(" + a.label() + ", " + h.label() + ")"; });
        }
      }
    }
  }
  return {2, "vanishing against the generators, 1 <= i <= 5", t.passed(), t.summary("instances")};
}

Result c3() {
  Tally t;
  std::size_t min_per_algebra = SIZE_MAX;
  Rng rng(31);
  for (const auto& name : builtin_algebra_names()) {
    const auto& ws = workspace(name);
    const auto corpus = ws.corpus_modules();
    std::size_t count = 0;
    for (std::size_t it = 0; count < 200; ++it) {
      const auto& pair = ws.pairs[it % ws.pairs.size()].pair;
      const Module& m = corpus[rng.below(corpus.size())];
      const Module& other = corpus[rng.below(corpus.size())];
      auto valid = [&](const std::optional<ShortExactSequence>& s, bool right) {
        if (!s || s->exactness_violation()) return false;
        const auto star = star_acyclicity(*s, pair);
        return right ? star.right.acyclic : star.left.acyclic;
      };
      auto where = [&](const char* what) { return [=] { return name + " " + pair.name + " " + what + " at " + m.label(); }; };

      const auto r = proper_resolution(m, pair.x, 1);
      const ShortExactSequence row{r.syzygy_maps[0], r.augmentation};
      t.check(valid(pullback(row.right, random_morphism(rng, other, m), row).induced, true), where("pullback"));
      t.check(valid(pushout(row.left, random_morphism(rng, row.first(), other), row).induced, true), where("pushout"));

      const auto c = proper_coresolution(m, pair.y, 1);
      const ShortExactSequence col{c.augmentation, c.syzygy_maps[0]};
      t.check(valid(pushout(col.left, random_morphism(rng, m, other), col).induced, false), where("pushout"));
      t.check(valid(pullback(col.right, random_morphism(rng, other, col.last()), col).induced, false), where("pullback"));
      count += 4;
    }
    min_per_algebra = std::min(min_per_algebra, count);
  }
  return {3, "pullbacks and pushouts preserve relative acyclicity", t.passed() && min_per_algebra >= 200,
          t.summary("instances") + ", at least " + std::to_string(min_per_algebra) + " per algebra"};
}

// f + (d h + h d) for a random degree -1 family h.
ChainMap perturb(Rng& rng, const ChainMap& f) {
  const Complex& s = f.source;
  const Complex& a = f.target;
  std::vector<Morphism> h;
  for (int n = s.lo(); n <= s.hi() + 1; ++n) h.push_back(random_morphism(rng, s.term(n), a.term(n - 1)));
  std::vector<Morphism> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    const auto k = static_cast<std::size_t>(n - s.lo());
    comps.push_back(f.at(n) + a.differential(n - 1) * h[k] + h[k + 1] * s.differential(n));
  }
  return {s, a, std::move(comps)};
}

Result c4() {
  Tally t;
  Rng rng(4);
  for (const auto& name : builtin_algebra_names()) {
    const auto& ws = workspace(name);
    for (int it = 0; it < 12; ++it) {
      const auto& pair = ws.pairs[static_cast<std::size_t>(it) % ws.pairs.size()].pair;
      const auto& gens = pair.x.generators;
      const Complex a = random_complex(rng, gens, -2, 1 + static_cast<int>(rng.below(3)));
      const auto padded = direct_sum({a, contractible(random_sum(rng, gens, 1 + rng.below(2)), static_cast<int>(rng.below(3)) - 2)});
      ChainMap f;
      switch (it % 3) {
        case 0:
          f = padded.injections[0];
          break;
        case 1:
          f = padded.projections[0];
          break;
        default:
          f = perturb(rng, padded.injections[0]);
      }
      if (f.violation()) {
        t.check(false, [&] { return name + ": generated map is not a chain map"; });
        continue;
      }
      const auto r = homotopy_inverse_certificate(f, gens);
      t.check(r.precondition_met && r.inverse && r.fg_to_identity && r.gf_to_identity && r.two_sided_checked,
              [&] { return name + " " + pair.name + ": " + r.note; });
    }
  }
  return {4, "homotopy inverses of relative quasi-isomorphisms", t.passed() && t.instances >= 50,
          t.summary("chain maps")};
}

Result c5() {
  Tally t;
  std::size_t hereditary = 0;
  for (const auto& name : builtin_algebra_names()) {
    const auto& ws = workspace(name);
    const auto corpus = ws.corpus_modules();
    for (const auto& np : ws.pairs) {
      ExtCalculator ext(np.pair, 5);
      for (const auto& c : ws.cotorsion) {
        if (c.pair != np.pair.name) continue;
        const auto r = hereditary_check(c.spec, corpus, 4, ext);
        hereditary += r.hereditary();
        t.check(r.consistent(), [&] { return name + " " + c.spec.name + " criteria disagree"; });
      }
    }
  }
  return {5, "three hereditary criteria agree", t.passed(),
          t.summary("cotorsion specs") + ", " + std::to_string(hereditary) + " hereditary"};
}

Result c6() {
  Tally t;
  for (const auto& name : builtin_algebra_names()) {
    const auto& ws = workspace(name);
    for (const auto& np : ws.pairs) {
      for (const auto& m : ws.corpus_modules()) {
        for (const auto& d : {resolution_dimension(m, np.pair.x, 6), coresolution_dimension(m, np.pair.y, 6)}) {
          if (!d.dimension) continue;
          t.check(d.consistent && d.cross_check == d.dimension,
                  [&] { return name + " " + d.subcategory + " " + m.label() + ": " + d.describe(); });
        }
      }
    }
  }
  const auto& kx2 = workspace("kx2");
  const auto s = resolution_dimension(simple(kx2.algebra, 0), kx2.pair("proj").x, 4);
  const bool periodic = !s.dimension && s.periodicity && s.periodicity->period == 1;
  return {6, "syzygy membership matches Ext vanishing", t.passed() && periodic,
          t.summary("finite dimensions") + "; kx2 pd S " + s.describe()};
}

Result c7() {
  Tally t;
  Rng rng(7);
  for (const auto* name : {"a2", "kx2", "semisimple2"}) {
    const auto alg = workspace(name).algebra;
    const auto inj = injectives(alg);
    const auto proj = projective_subcategory(alg);
    const bool expect_iso = std::string(name) == "semisimple2";
    for (int it = 0; it < 25; ++it) {
      const Complex c = random_complex(rng, inj, -2, 1 + static_cast<int>(rng.below(4)));
      const auto l = lift_to_x(c, proj, 4);
      bool ok = l.certified();
      for (int n = l.output.lo(); n <= l.output.hi(); ++n) ok = ok && (l.output.term(n).is_zero() || proj.contains(l.output.term(n)));
      if (expect_iso) {
        for (int n = std::min(c.lo(), l.output.lo()); n <= std::max(c.hi(), l.output.hi()); ++n) ok = ok && l.map.at(n).is_iso();
      }
      t.check(ok, [&] { return std::string(name) + ": " + (l.certified() ? "not an isomorphism" : l.certificate.failure); });
    }
  }
  return {7, "complexes of injectives lift to projective complexes", t.passed(), t.summary("lifts")};
}

Result c8() {
  Tally t;
  for (const auto& name : builtin_algebra_names()) {
    const auto r = gorenstein_report(workspace(name).algebra, 4);
    t.check(r.consistent(), [&] { return name + ": pd bound and liftability disagree"; });
    t.check(r.resolution_equivalence.value_or(!r.pd_dual.has_value()), [&] { return name + ": resolution comparison failed"; });
  }
  // The comparison against a deliberately non-minimal lift: Q = lift ⊕ contractible.
  const auto alg = workspace("kx2").algebra;
  const auto proj = projective_subcategory(alg);
  const auto l = lift_to_x(Complex::stalk(dual_regular(alg).object, 0), proj, 4);
  const auto padded = direct_sum({l.output, contractible(projective(alg, 0), -1)});
  const bool step = compare_with_resolution(compose(l.map, padded.projections[0]), proj, 1).ok();
  t.check(step, [] { return std::string("kx2: padded lift not homotopy equivalent to the resolution"); });
  return {8, "Gorenstein iff and the resolution comparison", t.passed(), t.summary("checks")};
}

Result c9() {
  Tally t;
  auto run_singularity = [](const std::string& alg, const std::string& pair) {
    Workspace ws = workspace(alg);
    app::RunOptions o;
    o.command = "singularity";
    o.pair = pair;
    return app::run(o, ws);
  };
  for (const auto* name : {"kx2", "nak_cyc2"}) {
    const auto rep = run_singularity(name, "gproj");
    bool zero = true;
    for (const auto& w : rep.witnesses) {
      if (w["side"] == "resolution") zero = zero && w["dimension"] == "0";
    }
    t.check(rep.verdicts["right"] == "trivial" && zero, [&] { return std::string(name) + ": gproj not trivial"; });
  }
  const auto rep = run_singularity("kx2", "proj");
  bool s_periodic = false;
  for (const auto& w : rep.witnesses) {
    if (w["side"] == "resolution" && w["object"] == "S1") {
      s_periodic = w["periodic"] == true && w["dimension"].get<std::string>().find("period 1") != std::string::npos;
    }
  }
  t.check(rep.verdicts["right"] == "nontrivial-witness" && s_periodic,
          [] { return std::string("kx2 proj: no period-1 certificate for S"); });
  return {9, "singularity verdicts over self-injective algebras", t.passed(), t.summary("verdicts")};
}

Result c10() {
  Tally t;
  for (const auto& name : builtin_algebra_names()) {
    const auto& ws = workspace(name);
    const auto corpus = ws.corpus_modules();
    for (const auto& np : ws.pairs) {
      for (const auto& m : corpus) {
        for (const auto& n : corpus) {
          for (std::size_t i = 1; i <= 4; ++i) {
            const auto c = ext_derived_crosscheck(m, n, np.pair, i, 5);
            t.check(c.agree(), [&] { return name + " Ext^" + std::to_string(i) + "(" + c.m + ", " + c.n + ")"; });
          }
        }
      }
    }
  }
  return {10, "relative Ext equals morphisms to shifts modulo homotopy", t.passed(), t.summary("instances")};
}

// Every multiset of indecomposables with total dimension <= limit.
void multisets(const std::vector<Module>& ind, std::size_t from, std::size_t budget, std::vector<Module>& current,
               const std::function<void(const std::vector<Module>&)>& fn) {
  if (!current.empty()) fn(current);
  for (std::size_t i = from; i < ind.size(); ++i) {
    if (ind[i].total_dim() > budget) continue;
    current.push_back(ind[i]);
    multisets(ind, i, budget - ind[i].total_dim(), current, fn);
    current.pop_back();
  }
}

Result c11() {
  Tally membership, reduction;
  Rng rng(11);
  for (const auto& name : builtin_algebra_names()) {
    const auto alg = workspace(name).algebra;
    const auto ind = uniserial_quotients(alg);
    std::vector<Module> current;
    multisets(ind, 0, 4, current, [&](const std::vector<Module>& parts) {
      const Module m = random_conjugate(rng, direct_sum_object(alg, parts));
      const auto summands = oracle::decompose(m);
      for (std::size_t mask = 1; mask < (std::size_t{1} << ind.size()); ++mask) {
        std::vector<Module> gens;
        for (std::size_t i = 0; i < ind.size(); ++i) {
          if (mask >> i & 1) gens.push_back(ind[i]);
        }
        bool expected = true;
        for (const auto& s : summands) {
          bool found = false;
          for (const auto& g : gens) found = found || oracle::isomorphic(s, g);
          expected = expected && found;
        }
        membership.check(add_membership(m, gens).has_value() == expected,
                         [&] { return name + " " + m.label() + " mask " + std::to_string(mask); });
      }
      for (const auto& n : ind) {
        std::vector<Morphism> maps = {Morphism::zero(m, n)};
        for (int k = 0; k < 3; ++k) maps.push_back(random_morphism(rng, m, n));
        for (const auto& f : maps) {
          reduction.check(right_minimal_reduction(f).discarded.dims() == oracle::discardable_dims(f),
                          [&] { return name + " " + m.label() + " -> " + n.label(); });
        }
      }
    });
  }
  return {11, "add membership and minimal reduction against enumeration", membership.passed() && reduction.passed(),
          membership.summary("membership queries") + "; " + reduction.summary("reductions")};
}

}  // namespace

Result run_one(int id) {
  static const std::vector<std::function<Result()>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11};
  if (id < 1 || id > kCriteria) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = criteria[static_cast<std::size_t>(id - 1)]();
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Result> run_all() {
  std::vector<Result> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_one(id));
  return out;
}

std::string format(const Result& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " (" << r.detail << ") ["
     << std::fixed;
  os.precision(2);
  os << r.seconds << " s]";
  return os.str();
}

}  // namespace relhom::acceptance
