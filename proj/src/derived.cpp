#include "relhom/derived.hpp"

#include <algorithm>

#include "relhom/errors.hpp"
#include "relhom/sampling.hpp"

namespace relhom {

std::optional<HomotopyFactorization> factor_up_to_homotopy(const Complex& s, const Complex& t,
                                                           const std::function<ChainMap(const ChainMap&)>& apply,
                                                           const ChainMap& rhs) {
  const Complex& p = rhs.source;
  const Complex& q = rhs.target;
  const Scalar mod = p.algebra()->modulus();
  HomComplex st(s, t);
  HomComplex pq(p, q);
  const std::size_t nf = st.dim(0);
  const std::size_t nh = pq.dim(-1);
  const std::size_t r0 = st.dim(1);
  const std::size_t r1 = pq.dim(0);

  // Unknowns (f, h): D f = 0 and apply(f) − D h = rhs.
  Matrix lin = Matrix::zero(mod, r1, nf);
  for (std::size_t j = 0; j < nf; ++j) {
    std::vector<Scalar> e(nf, 0);
    e[j] = 1;
    const auto col = pq.coordinates(0, apply(ChainMap{s, t, st.family(0, e)}).components);
    for (std::size_t r = 0; r < r1; ++r) lin(r, j) = col[r];
  }
  std::vector<Scalar> rhs_coords(r0 + r1, 0);
  const auto target = pq.coordinates(0, rhs.components);
  std::copy(target.begin(), target.end(), rhs_coords.begin() + static_cast<std::ptrdiff_t>(r0));

  std::vector<Scalar> fc(nf, 0), hc(nh, 0);
  if (nf + nh > 0 && r0 + r1 > 0) {
    Matrix system = Matrix::zero(mod, r0 + r1, nf + nh);
    if (r0 > 0 && nf > 0) system.set_block(0, 0, st.differential(0));
    if (r1 > 0 && nf > 0) system.set_block(r0, 0, lin);
    if (r1 > 0 && nh > 0) system.set_block(r0, nf, -pq.differential(-1));
    const auto sol = solve(system, Matrix::column(mod, rhs_coords));
    if (!sol) return std::nullopt;
    const auto v = sol->particular.column_vector(0);
    std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nf), fc.begin());
    std::copy(v.begin() + static_cast<std::ptrdiff_t>(nf), v.end(), hc.begin());
  } else if (std::any_of(rhs_coords.begin(), rhs_coords.end(), [](Scalar c) { return c != 0; })) {
    return std::nullopt;
  }
  HomotopyFactorization out{ChainMap{s, t, st.family(0, fc)}, Homotopy{pq.family(-1, hc)}};
  if (out.map.violation() || !verify_homotopy(apply(out.map), rhs, out.homotopy)) {
    throw Error("factor_up_to_homotopy: solution failed re-verification (internal)");
  }
  return out;
}

HomotopyEquivalence homotopy_equivalence(const ChainMap& phi) {
  HomotopyEquivalence out;
  const auto sol = factor_up_to_homotopy(
      phi.target, phi.source, [&](const ChainMap& psi) { return compose(phi, psi); }, ChainMap::identity(phi.target));
  if (!sol) return out;
  out.inverse = sol->map;
  out.left = sol->homotopy;
  const auto right = find_homotopy(compose(sol->map, phi), ChainMap::identity(phi.source));
  if (right && verify_homotopy(compose(sol->map, phi), ChainMap::identity(phi.source), *right)) out.right = right;
  return out;
}

HomotopyEquivalence compare_with_resolution(const ChainMap& q, const Subcategory& x, std::size_t depth) {
  const Complex& stalk = q.target;
  if (stalk.trimmed().width() != 1 || stalk.lowest_nonzero() != 0) {
    throw ContractViolation("compare_with_resolution: target must be a stalk in degree 0");
  }
  const Module& m = stalk.term(0);
  const auto res = proper_resolution(m, x, depth);
  const Complex& p = res.complex;
  std::vector<Morphism> comps;
  for (int n = p.lo(); n <= p.hi(); ++n) comps.push_back(n == 0 ? res.augmentation : Morphism::zero(p.term(n), stalk.term(n)));
  const ChainMap aug{p, stalk, std::move(comps)};
  const auto phi = factor_up_to_homotopy(q.source, p, [&](const ChainMap& f) { return compose(aug, f); }, q);
  if (!phi) return {};
  return homotopy_equivalence(phi->map);
}

// ---------------------------------------------------------------------------
// Lifting

namespace {

bool degreewise_in(const Complex& c, const Subcategory& sub) {
  for (int n = c.lo(); n <= c.hi(); ++n) {
    if (!c.term(n).is_zero() && !sub.contains(c.term(n))) return false;
  }
  return true;
}

class Lifter {
 public:
  Lifter(Side side, const Subcategory& sub, std::size_t cap) : side_(side), sub_(sub), cap_(cap) {}

  // right: map output -> input; left: input -> output.
  ChainMap lift(const Complex& c) {
    const Complex y = c.trimmed();
    if (y.empty()) return ChainMap::identity(y);
    if (degreewise_in(y, sub_)) return ChainMap::identity(y);
    if (y.width() == 1) return stalk(y.term(y.lo()), y.lo());

    const int j = y.lowest_nonzero();
    const Complex y1 = Complex::stalk(y.term(j), j + 1);
    const Complex y2 = y.above(j).trimmed();
    const ChainMap g{y1, y2, {y.differential(j)}};
    const ChainMap f1 = lift(y1);
    const ChainMap f2 = lift(y2);
    ++steps_;
    return side_ == Side::right ? glue_right(y, g, f1, f2) : glue_left(y, g, f1, f2);
  }

  std::size_t steps() const { return steps_; }
  std::vector<std::pair<std::string, std::size_t>> dimensions;

 private:
  std::size_t dimension_of(const Module& m) {
    const auto rep = side_ == Side::right ? resolution_dimension(m, sub_, cap_) : coresolution_dimension(m, sub_, cap_);
    if (!rep.dimension) {
      throw PreconditionFailure("hypothesis violated: " + std::string(side_ == Side::right ? "" : "co") + "resdim of " +
                                m.label() + " relative to " + sub_.name + " is " + rep.describe());
    }
    dimensions.emplace_back(m.label(), *rep.dimension);
    return *rep.dimension;
  }

  ChainMap stalk(const Module& m, int j) {
    const Complex s = Complex::stalk(m, j);
    const std::size_t d = dimension_of(m);
    if (side_ == Side::right) {
      const auto res = proper_resolution(m, sub_, d);
      const Complex x = res.complex.shift(-j);
      std::vector<Morphism> comps;
      for (int n = x.lo(); n <= x.hi(); ++n) {
        comps.push_back(n == j ? res.augmentation : Morphism::zero(x.term(n), s.term(n)));
      }
      return {x, s, std::move(comps)};
    }
    const auto cores = proper_coresolution(m, sub_, d);
    return {s, cores.complex.shift(-j), {cores.augmentation}};
  }

  // cone(f) -> cone(g) = y, with f2 f − g f1 = d h + h d.
  ChainMap glue_right(const Complex& y, const ChainMap& g, const ChainMap& f1, const ChainMap& f2) {
    const auto sol = factor_up_to_homotopy(
        f1.source, f2.source, [&](const ChainMap& f) { return compose(f2, f); }, compose(g, f1));
    if (!sol) throw Error("lift: connecting map does not lift up to homotopy (internal)");
    const Complex& x1 = f1.source;
    const Complex& x2 = f2.source;
    const Complex c = cone(sol->map).cone.trimmed();
    const AlgebraPtr& alg = y.algebra();
    std::vector<Morphism> comps;
    for (int n = c.lo(); n <= c.hi(); ++n) {
      const auto sum = direct_sum(alg, {x1.term(n + 1), x2.term(n)});
      Morphism a = Morphism::zero(x1.term(n + 1), y.term(n));
      if (n + 1 >= x1.lo() && n + 1 <= x1.hi()) {
        a = n == y.lo() ? f1.at(n + 1) : sol->homotopy.maps[static_cast<std::size_t>(n + 1 - x1.lo())];
      }
      const Morphism b = n == y.lo() ? Morphism::zero(x2.term(n), y.term(n)) : f2.at(n);
      comps.push_back(morphism_from_total(c.term(n), y.term(n), row_morphism(sum, {a, b}, y.term(n)).total_matrix()));
    }
    return {c, y, std::move(comps)};
  }

  // z = cone(g) -> cone(f), with f u1 − u2 g = d h + h d and k = −h.
  ChainMap glue_left(const Complex& z, const ChainMap& g, const ChainMap& u1, const ChainMap& u2) {
    const auto sol = factor_up_to_homotopy(
        u1.target, u2.target, [&](const ChainMap& f) { return compose(f, u1); }, compose(u2, g));
    if (!sol) throw Error("lift: connecting map does not extend up to homotopy (internal)");
    const Complex& w1 = u1.target;
    const Complex& w2 = u2.target;
    const Complex c = cone(sol->map).cone.trimmed();
    const AlgebraPtr& alg = z.algebra();
    const int j = z.lo();
    std::vector<Morphism> comps;
    for (int n = z.lo(); n <= z.hi(); ++n) {
      const auto sum = direct_sum(alg, {w1.term(n + 1), w2.term(n)});
      Morphism a = Morphism::zero(z.term(n), w1.term(n + 1));
      Morphism b = Morphism::zero(z.term(n), w2.term(n));
      if (n == j) {
        a = u1.at(j + 1);
        b = -sol->homotopy.maps[0];
      } else {
        b = u2.at(n);
      }
      comps.push_back(morphism_from_total(z.term(n), c.term(n), column_morphism(z.term(n), sum, {a, b}).total_matrix()));
    }
    return {z, c, std::move(comps)};
  }

  Side side_;
  const Subcategory& sub_;
  std::size_t cap_;
  std::size_t steps_ = 0;
};

Lift run_lift(const Complex& input, const Subcategory& sub, std::size_t cap, Side side) {
  Lifter lifter(side, sub, cap);
  // Check the hypothesis on every term before building anything.
  for (int n = input.lo(); n <= input.hi(); ++n) {
    if (input.term(n).is_zero() || sub.contains(input.term(n))) continue;
    const auto rep = side == Side::right ? resolution_dimension(input.term(n), sub, cap)
                                         : coresolution_dimension(input.term(n), sub, cap);
    if (!rep.dimension) {
      throw PreconditionFailure("hypothesis violated: term in degree " + std::to_string(n) + " (" +
                                input.term(n).label() + ") has " + (side == Side::right ? "" : "co") + "resdim " +
                                rep.describe() + " relative to " + sub.name);
    }
  }
  Lift out;
  out.side = side;
  out.input = input;
  out.map = lifter.lift(input);
  out.output = side == Side::right ? out.map.source : out.map.target;
  if (auto v = out.map.violation()) throw Error("lift is not a chain map (internal): " + *v);
  out.certificate = is_rel_acyclic(cone(out.map).cone, side, sub.generators);
  out.steps = lifter.steps();
  out.term_dimensions = std::move(lifter.dimensions);
  return out;
}

}  // namespace

Lift lift_to_x(const Complex& y_complex, const Subcategory& x, std::size_t cap) {
  return run_lift(y_complex, x, cap, Side::right);
}

Lift lift_to_y(const Complex& x_complex, const Subcategory& y, std::size_t cap) {
  return run_lift(x_complex, y, cap, Side::left);
}

InclusionReport kb_inclusion(const BalancedPair& pair, Inclusion direction, std::size_t cap, std::size_t samples,
                             std::uint64_t seed) {
  InclusionReport r;
  r.direction = direction;
  const bool right = direction == Inclusion::y_in_x;
  const Subcategory& from = right ? pair.y : pair.x;
  const Subcategory& to = right ? pair.x : pair.y;
  for (const auto& g : from.generators) {
    const auto rep = right ? resolution_dimension(g, to, cap) : coresolution_dimension(g, to, cap);
    r.dimensions.emplace_back(g.label(), rep.describe());
    if (!rep.dimension) r.hypothesis_met = false;
  }
  if (!r.hypothesis_met) return r;

  std::vector<Complex> family;
  for (const auto& g : from.generators) family.push_back(Complex::stalk(g, 0));
  Rng rng(seed);
  for (const auto& a : from.generators) {
    for (const auto& b : from.generators) {
      const auto f = random_morphism(rng, a, b);
      if (!f.is_zero()) family.push_back(Complex::two_term(f, -1));
    }
  }
  for (std::size_t k = 0; k < samples; ++k) {
    family.push_back(random_complex(rng, from.generators, -1, 2 + static_cast<int>(rng.below(3))));
  }
  for (const auto& c : family) {
    ++r.lifts;
    try {
      const auto lift = right ? lift_to_x(c, to, cap) : lift_to_y(c, to, cap);
      if (lift.certified()) ++r.certified;
      else r.failures.push_back("lift of a width " + std::to_string(c.width()) + " complex: " + lift.certificate.failure);
    } catch (const PreconditionFailure& e) {
      r.failures.push_back(e.what());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Gorenstein and singularity verdicts

GorensteinReport gorenstein_report(const AlgebraPtr& algebra, std::size_t cap) {
  GorensteinReport r;
  r.algebra = algebra->name();
  const auto proj = projective_subcategory(algebra);
  const auto inj = injective_subcategory(algebra);
  std::size_t pd = 0, id = 0;
  bool pd_finite = true, id_finite = true;
  for (const auto& i : injectives(algebra)) {
    const auto rep = resolution_dimension(i, proj, cap);
    r.pd_injectives.emplace_back(i.label(), rep.describe());
    if (rep.dimension) pd = std::max(pd, *rep.dimension);
    else pd_finite = false;
  }
  for (const auto& p : projectives(algebra)) {
    const auto rep = coresolution_dimension(p, inj, cap);
    r.id_projectives.emplace_back(p.label(), rep.describe());
    if (rep.dimension) id = std::max(id, *rep.dimension);
    else id_finite = false;
  }
  if (pd_finite) r.pd_dual = pd;
  if (id_finite) r.id_regular = id;

  // The constructive side: lift the stalk of D(A_A) (resp. A_A) and certify.
  auto lifts = [&](const std::vector<Module>& terms, bool right) {
    const Module sum = direct_sum_object(algebra, terms);
    try {
      const auto lift = right ? lift_to_x(Complex::stalk(sum, 0), proj, cap) : lift_to_y(Complex::stalk(sum, 0), inj, cap);
      if (!lift.certified()) r.notes.push_back("lift not certified: " + lift.certificate.failure);
      if (right && lift.certified() && r.pd_dual) {
        r.resolution_equivalence = compare_with_resolution(lift.map, proj, *r.pd_dual).ok();
      }
      return lift.certified();
    } catch (const PreconditionFailure& e) {
      r.notes.push_back(e.what());
      return false;
    }
  };
  r.injective_stalks_lift = lifts(injectives(algebra), true);
  r.projective_stalks_lift = lifts(projectives(algebra), false);
  return r;
}

std::string to_string(SingularityKind k) {
  switch (k) {
    case SingularityKind::trivial:
      return "trivial";
    case SingularityKind::nontrivial_witness:
      return "nontrivial-witness";
    case SingularityKind::undecided_at_cap:
      return "undecided-at-cap";
  }
  return "?";
}

std::string SingularityVerdict::summary() const {
  std::string s = pair + ": right " + to_string(right) + ", left " + to_string(left);
  if (equality_hypotheses) {
    s += "; hypotheses for equality of the two quotients met";
    if (equality_evidence) s += *equality_evidence ? " (lifts both ways certified)" : " (a lift failed)";
  }
  return s;
}

namespace {

SingularityKind classify(const std::vector<ObjectWitness>& ws) {
  bool all_finite = true, periodic = false;
  for (const auto& w : ws) {
    all_finite = all_finite && w.finite;
    periodic = periodic || w.periodic;
  }
  if (all_finite) return SingularityKind::trivial;
  return periodic ? SingularityKind::nontrivial_witness : SingularityKind::undecided_at_cap;
}

ObjectWitness witness_of(const DimReport& rep) {
  return {rep.base.label(), rep.describe(), rep.dimension.has_value(), rep.infinite_certified()};
}

}  // namespace

SingularityVerdict singularity_verdict(const BalancedPair& pair, const std::vector<Module>& corpus, std::size_t cap,
                                       std::size_t samples, std::uint64_t seed) {
  SingularityVerdict v;
  v.pair = pair.name;
  for (const auto& m : corpus) v.resolutions.push_back(witness_of(resolution_dimension(m, pair.x, cap)));
  for (const auto& m : corpus) v.coresolutions.push_back(witness_of(coresolution_dimension(m, pair.y, cap)));
  v.right = classify(v.resolutions);
  v.left = classify(v.coresolutions);

  const auto y_in_x = kb_inclusion(pair, Inclusion::y_in_x, cap, samples, seed);
  const auto x_in_y = kb_inclusion(pair, Inclusion::x_in_y, cap, samples, seed);
  v.equality_hypotheses = y_in_x.hypothesis_met && x_in_y.hypothesis_met;
  if (v.equality_hypotheses) v.equality_evidence = y_in_x.holds() && x_in_y.holds();
  return v;
}

ExtDerivedCheck ext_derived_crosscheck(const Module& m, const Module& n, const BalancedPair& pair, std::size_t i,
                                       std::size_t depth) {
  if (i == 0) throw ContractViolation("ext_derived_crosscheck: degree must be >= 1");
  if (depth < i + 1) {
    throw DepthInsufficient("degree " + std::to_string(i) + " needs depth >= " + std::to_string(i + 1));
  }
  const auto res = proper_resolution(m, pair.x, depth);
  ExtDerivedCheck c{m.label(), n.label(), i, ext_via_resolution(res, n, i), 0};
  if (!res.complex.empty()) {
    c.derived = HomComplex(res.complex, Complex::stalk(n, 0)).cohomology().at(static_cast<int>(i));
  }
  return c;
}

}  // namespace relhom
