#include "relhom/cotorsion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "relhom/errors.hpp"

namespace relhom {

ExtCalculator::ExtCalculator(BalancedPair pair, std::size_t depth) : pair_(std::move(pair)), depth_(depth) {
  if (depth_ < 2) throw ContractViolation("ExtCalculator needs depth >= 2 for Ext¹");
}

const Resolution& ExtCalculator::resolution(const Module& m) {
  for (const auto& [key, res] : cache_) {
    if (key == m) return res;
  }
  cache_.emplace_back(m, proper_resolution(m, pair_.x, depth_));
  return cache_.back().second;
}

std::size_t ExtCalculator::dim(const Module& m, const Module& n, std::size_t i) {
  return ext_via_resolution(resolution(m), n, i);
}

// ---------------------------------------------------------------------------
// Perpendicular classes

PerpReport perp(const std::vector<Module>& generators, const std::vector<Module>& corpus, PerpSide side,
                ExtCalculator& ext) {
  PerpReport r;
  r.side = side;
  for (const auto& g : generators) r.generators.push_back(g.label());
  for (const auto& m : corpus) {
    PerpEntry e{m.label(), true, {}};
    for (const auto& g : generators) {
      const std::size_t d = side == PerpSide::left ? ext.dim(m, g, 1) : ext.dim(g, m, 1);
      if (d != 0) {
        e.member = false;
        e.offending.emplace_back(g.label(), d);
      }
    }
    if (e.member) r.members.push_back(m);
    r.entries.push_back(std::move(e));
  }
  return r;
}

bool in_c(const Module& m, const CotorsionSpec& spec, ExtCalculator& ext) {
  return std::all_of(spec.d.generators.begin(), spec.d.generators.end(),
                     [&](const Module& d) { return ext.dim(m, d, 1) == 0; });
}

bool in_d(const Module& m, const CotorsionSpec& spec, ExtCalculator& ext) {
  return std::all_of(spec.c.generators.begin(), spec.c.generators.end(),
                     [&](const Module& c) { return ext.dim(c, m, 1) == 0; });
}

CotorsionReport verify_cotorsion_pair(const CotorsionSpec& spec, const std::vector<Module>& corpus,
                                      ExtCalculator& ext) {
  CotorsionReport r;
  for (const auto& c : spec.c.generators) {
    for (const auto& d : spec.d.generators) {
      if (const auto k = ext.dim(c, d, 1); k != 0) {
        r.violations.push_back("Ext¹(" + c.label() + ", " + d.label() + ") = " + std::to_string(k));
      }
    }
  }
  for (const auto& m : corpus) {
    if (in_c(m, spec, ext) && !spec.c.contains(m)) r.unrecognized_c.push_back(m.label());
    if (in_d(m, spec, ext) && !spec.d.contains(m)) r.unrecognized_d.push_back(m.label());
  }
  r.verified = r.violations.empty() && r.unrecognized_c.empty() && r.unrecognized_d.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Closure properties

ClosureReport closure_check(const Membership& in_class, const std::vector<ShortExactSequence>& sequences,
                            ClosureMode mode, const BalancedPair& pair) {
  ClosureReport r;
  r.mode = mode;
  for (const auto& s : sequences) {
    const Module *h1 = &s.first(), *h2 = &s.last(), *concl = &s.middle();
    if (mode == ClosureMode::epis) {
      h1 = &s.middle();
      concl = &s.first();
    } else if (mode == ClosureMode::monos) {
      h2 = &s.middle();
      concl = &s.last();
    }
    if (!in_class(*h1) || !in_class(*h2)) {
      ++r.skipped;
      continue;
    }
    if (s.exactness_violation() || !star_acyclicity(s, pair).star()) {
      ++r.not_star;
      continue;
    }
    ++r.applicable;
    if (!in_class(*concl)) {
      r.counterexamples.push_back("0 -> " + s.first().label() + " -> " + s.middle().label() + " -> " +
                                  s.last().label() + " -> 0: " + concl->label() + " is outside the class");
    }
  }
  return r;
}

ClosureReport closure_check(const Subcategory& e, const std::vector<ShortExactSequence>& sequences, ClosureMode mode,
                            const BalancedPair& pair) {
  return closure_check([&](const Module& m) { return e.contains(m); }, sequences, mode, pair);
}

std::vector<ShortExactSequence> resolution_rows(const std::vector<Module>& modules, const BalancedPair& pair,
                                                std::size_t rows) {
  std::vector<ShortExactSequence> out;
  for (const auto& m : modules) {
    Module omega = m;
    for (std::size_t k = 0; k < rows && !omega.is_zero(); ++k) {
      const auto pi = minimal_right_approximation(omega, pair.x);
      if (!pi.is_epi()) {
        throw AdmissibilityFailure("right " + pair.x.name + "-approximation of " + omega.label() + " is not epic",
                                   omega.label());
      }
      const auto ker = kernel(pi);
      const Module next = ker.object.named("Ω" + std::to_string(k + 1) + "(" + m.label() + ")");
      out.push_back({morphism_from_total(next, pi.source(), ker.inclusion.total_matrix()), pi});
      omega = next;
    }
    omega = m;
    for (std::size_t k = 0; k < rows && !omega.is_zero(); ++k) {
      const auto iota = minimal_left_approximation(omega, pair.y);
      if (!iota.is_mono()) {
        throw AdmissibilityFailure("left " + pair.y.name + "-approximation of " + omega.label() + " is not monic",
                                   omega.label());
      }
      const auto cok = cokernel(iota);
      const Module next = cok.object.named("Ω^-" + std::to_string(k + 1) + "(" + m.label() + ")");
      out.push_back({iota, morphism_from_total(iota.target(), next, cok.projection.total_matrix())});
      omega = next;
    }
  }
  return out;
}

HereditaryReport hereditary_check(const CotorsionSpec& spec, const std::vector<Module>& corpus, std::size_t maxdeg,
                                  ExtCalculator& ext) {
  if (maxdeg < 2) throw ContractViolation("hereditary_check needs maxdeg >= 2");
  if (ext.depth() < maxdeg + 1) {
    throw DepthInsufficient("hereditary_check up to degree " + std::to_string(maxdeg) + " needs depth >= " +
                            std::to_string(maxdeg + 1));
  }
  HereditaryReport r;
  const Membership c = [&](const Module& m) { return in_c(m, spec, ext); };
  const Membership d = [&](const Module& m) { return in_d(m, spec, ext); };

  std::vector<Module> seeds = corpus;
  seeds.insert(seeds.end(), spec.c.generators.begin(), spec.c.generators.end());
  seeds.insert(seeds.end(), spec.d.generators.begin(), spec.d.generators.end());
  const auto rows = resolution_rows(seeds, ext.pair(), maxdeg);
  r.sequences = rows.size();

  for (const auto& x : ext.pair().x.generators) {
    if (!c(x)) {
      r.resolving = false;
      r.details.push_back(x.label() + " is in X but not in C");
    }
  }
  for (const auto& y : ext.pair().y.generators) {
    if (!d(y)) {
      r.coresolving = false;
      r.details.push_back(y.label() + " is in Y but not in D");
    }
  }
  const std::pair<const Membership*, ClosureMode> checks[] = {
      {&c, ClosureMode::extensions}, {&c, ClosureMode::epis}, {&d, ClosureMode::extensions}, {&d, ClosureMode::monos}};
  for (std::size_t k = 0; k < 4; ++k) {
    auto rep = closure_check(*checks[k].first, rows, checks[k].second, ext.pair());
    if (!rep.passed()) {
      (k < 2 ? r.resolving : r.coresolving) = false;
      for (const auto& ce : rep.counterexamples) r.details.push_back((k < 2 ? "C: " : "D: ") + ce);
    }
    r.closures.push_back(std::move(rep));
  }
  for (const auto& cg : spec.c.generators) {
    for (const auto& dg : spec.d.generators) {
      for (std::size_t i = 2; i <= maxdeg; ++i) {
        if (const auto k = ext.dim(cg, dg, i); k != 0) {
          r.ext_vanishing = false;
          r.details.push_back("Ext^" + std::to_string(i) + "(" + cg.label() + ", " + dg.label() +
                              ") = " + std::to_string(k));
        }
      }
    }
  }
  return r;
}

std::vector<CotorsionSpec> enumerate_cotorsion_pairs(const BalancedPair& pair,
                                                     const std::vector<Module>& indecomposables, ExtCalculator& ext) {
  const std::size_t n = indecomposables.size();
  if (n == 0 || n > 16) throw ContractViolation("enumerate_cotorsion_pairs needs 1..16 indecomposables");
  std::vector<std::vector<bool>> e(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) e[a][b] = ext.dim(indecomposables[a], indecomposables[b], 1) != 0;
  }
  // C = ⊥S, D = C⊥ for every S; the pairs are the closed points of this
  // Galois connection.
  std::set<std::pair<unsigned, unsigned>> seen;
  std::vector<CotorsionSpec> out;
  for (unsigned s = 0; s < (1u << n); ++s) {
    unsigned cmask = 0, dmask = 0;
    for (std::size_t a = 0; a < n; ++a) {
      bool ok = true;
      for (std::size_t b = 0; b < n; ++b) ok = ok && !((s >> b & 1u) && e[a][b]);
      if (ok) cmask |= 1u << a;
    }
    for (std::size_t b = 0; b < n; ++b) {
      bool ok = true;
      for (std::size_t a = 0; a < n; ++a) ok = ok && !((cmask >> a & 1u) && e[a][b]);
      if (ok) dmask |= 1u << b;
    }
    if (!seen.insert({cmask, dmask}).second) continue;
    std::vector<Module> cs, ds;
    std::string cname, dname;
    for (std::size_t a = 0; a < n; ++a) {
      if (cmask >> a & 1u) {
        cs.push_back(indecomposables[a]);
        cname += (cname.empty() ? "" : ",") + indecomposables[a].label();
      }
      if (dmask >> a & 1u) {
        ds.push_back(indecomposables[a]);
        dname += (dname.empty() ? "" : ",") + indecomposables[a].label();
      }
    }
    out.push_back({"(" + cname + " | " + dname + ")", pair, Subcategory::make("C{" + cname + "}", std::move(cs)),
                   Subcategory::make("D{" + dname + "}", std::move(ds))});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

SequenceCertificate certified(ShortExactSequence s, const BalancedPair& pair) {
  if (auto v = s.exactness_violation()) throw Error("constructed sequence is not exact (internal): " + *v);
  auto star = star_acyclicity(s, pair);
  return {std::move(s), std::move(star)};
}

ShortExactSequence with_cokernel(const Morphism& mono, const std::string& name) {
  const auto cok = cokernel(mono);
  const Module c = cok.object.named(name);
  return {mono, morphism_from_total(mono.target(), c, cok.projection.total_matrix())};
}

}  // namespace

bool CompletenessResult::ok() const {
  return approximation_row.star.star() && witness.star.star() && result.star.star() && column.star.star() && d_in_d &&
         c_in_c && e_in_c;
}

CompletenessResult completeness_construct(const Module& m, const CotorsionSpec& spec, ExtCalculator& ext,
                                          const std::optional<ShortExactSequence>& witness) {
  const BalancedPair& pair = spec.pair;
  const auto pi = minimal_right_approximation(m, pair.x);
  if (!pi.is_epi()) {
    throw AdmissibilityFailure("right " + pair.x.name + "-approximation of " + m.label() + " is not epic", m.label());
  }
  const auto ker = kernel(pi);
  const Module k = ker.object.named("K");
  CompletenessResult r;
  r.approximation_row = certified({morphism_from_total(k, pi.source(), ker.inclusion.total_matrix()), pi}, pair);

  ShortExactSequence w;
  if (witness) {
    // Transport the witness along an isomorphism K -> K_w.
    const auto iso = find_isomorphism(k, witness->first());
    if (!iso.witness) {
      throw PreconditionFailure("witness does not start at the kernel of the approximation of " + m.label());
    }
    w = {witness->left * *iso.witness, witness->right};
  } else {
    const auto psi = minimal_left_approximation(k, spec.d);
    if (!psi.is_mono()) {
      throw UnsupportedInstance("left " + spec.d.name + "-approximation of " + k.label() +
                                " is not monic; no witness at corpus scale");
    }
    w = with_cokernel(psi, "C");
  }
  r.witness = certified(w, pair);
  if (!r.witness.star.star()) throw PreconditionFailure("witness 0 -> K -> D -> C -> 0 is not *-acyclic");

  const auto po = pushout(r.approximation_row.sequence.left, w.left, r.approximation_row.sequence);
  ShortExactSequence result = *po.induced;
  const Module e = po.object.named("E");
  result = {morphism_from_total(w.middle(), e, result.left.total_matrix()),
            morphism_from_total(e, m, result.right.total_matrix())};
  r.result = certified(result, pair);
  r.column = certified(with_cokernel(morphism_from_total(pi.source(), e, po.from_middle.total_matrix()), "C'"), pair);
  r.d_in_d = in_d(w.middle(), spec, ext);
  r.c_in_c = in_c(w.last(), spec, ext);
  r.e_in_c = in_c(e, spec, ext);
  return r;
}

WakamatsuReport wakamatsu_check(const Subcategory& e, const Module& m, ExtCalculator& ext) {
  WakamatsuReport r;
  r.approximation = minimal_right_approximation(m, e);
  if (!r.approximation.is_epi()) {
    throw AdmissibilityFailure("right " + e.name + "-approximation of " + m.label() + " is not epic", m.label());
  }
  r.kernel = kernel(r.approximation).object.named("K");
  for (const auto& g : e.generators) {
    const auto k = ext.dim(g, r.kernel, 1);
    r.ext_dims.emplace_back(g.label(), k);
    r.passed = r.passed && k == 0;
  }
  return r;
}

LeftFromRight minimal_left_from_right(const Module& m, const CotorsionSpec& spec, ExtCalculator& ext) {
  LeftFromRight r;
  r.phi = minimal_right_approximation(m, spec.c);
  if (!r.phi.is_epi()) {
    throw UnsupportedInstance("right " + spec.c.name + "-approximation of " + m.label() + " is not epic");
  }
  const auto i = kernel(r.phi).inclusion;
  r.psi = minimal_left_approximation(r.phi.source(), spec.d);
  if (!r.psi.is_mono()) {
    throw UnsupportedInstance("left " + spec.d.name + "-approximation of " + r.phi.source().label() +
                              " is not monic");
  }
  const auto row = with_cokernel(r.psi, "C'");
  const auto po = pushout(r.psi, r.phi, row);
  const Module x = po.object.named("X");
  r.psi_prime = morphism_from_total(m, x, po.from_base.total_matrix());
  const auto phi_prime = morphism_from_total(r.psi.target(), x, po.from_middle.total_matrix());
  r.middle_row = certified({r.psi * i, phi_prime}, spec.pair);
  r.column = certified({r.psi_prime, morphism_from_total(x, row.last(), po.induced->right.total_matrix())}, spec.pair);
  r.x_in_d = in_d(x, spec, ext);
  r.cokernel_in_c = in_c(row.last(), spec, ext);
  r.left_minimal = is_left_minimal(r.psi_prime);
  return r;
}

}  // namespace relhom
