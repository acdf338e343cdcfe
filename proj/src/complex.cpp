#include "relhom/complex.hpp"

#include <algorithm>

#include "relhom/errors.hpp"
#include "relhom/sampling.hpp"

namespace relhom {

namespace {

Scalar sign(int k, Scalar p) { return (k % 2 == 0) ? 1 : p - 1; }

bool same_module(const Module& a, const Module& b) { return a == b; }

}  // namespace

// ---------------------------------------------------------------------------
// Complex

Complex::Complex(AlgebraPtr algebra, int lo, std::vector<Module> terms, std::vector<Morphism> diffs)
    : algebra_(std::move(algebra)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
  if (!algebra_) throw ContractViolation("complex without an algebra");
  zero_ = Module::zero(algebra_);
  const std::size_t expected = terms_.empty() ? 0 : terms_.size() - 1;
  if (diffs_.size() != expected) throw ContractViolation("complex: need one differential between consecutive terms");
  for (const auto& t : terms_) {
    if (t.algebra() != algebra_) throw ContractViolation("complex: term over a different algebra");
  }
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (!same_module(diffs_[k].source(), terms_[k]) || !same_module(diffs_[k].target(), terms_[k + 1])) {
      throw ContractViolation("complex: differential d^" + std::to_string(lo_ + static_cast<int>(k)) +
                              " does not match its terms");
    }
  }
}

Complex Complex::zero(const AlgebraPtr& algebra) { return Complex(algebra, 0, {}, {}); }

Complex Complex::stalk(const Module& m, int degree) { return Complex(m.algebra(), degree, {m}, {}); }

Complex Complex::two_term(const Morphism& f, int degree) {
  return Complex(f.source().algebra(), degree, {f.source(), f.target()}, {f});
}

const Module& Complex::term(int n) const {
  if (n < lo_ || n > hi()) return zero_;
  return terms_[static_cast<std::size_t>(n - lo_)];
}

Morphism Complex::differential(int n) const {
  if (n >= lo_ && n + 1 <= hi()) return diffs_[static_cast<std::size_t>(n - lo_)];
  return Morphism::zero(term(n), term(n + 1));
}

std::optional<std::string> Complex::violation() const {
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const int n = lo_ + static_cast<int>(k);
    if (auto v = diffs_[k].intertwining_violation()) return "d^" + std::to_string(n) + ": " + *v;
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
    if (!(diffs_[k + 1] * diffs_[k]).is_zero()) {
      return "d^" + std::to_string(lo_ + static_cast<int>(k) + 1) + " d^" + std::to_string(lo_ + static_cast<int>(k)) +
             " is nonzero";
    }
  }
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (auto v = terms_[k].relation_violation()) return "term " + std::to_string(lo_ + static_cast<int>(k)) + ": " + *v;
  }
  return std::nullopt;
}

Complex Complex::shift(int k) const {
  if (terms_.empty()) return *this;
  std::vector<Morphism> diffs;
  diffs.reserve(diffs_.size());
  for (const auto& d : diffs_) diffs.push_back(d.scaled(sign(k, algebra_->modulus())));
  return Complex(algebra_, lo_ - k, terms_, std::move(diffs));
}

int Complex::lowest_nonzero() const {
  for (int n = lo_; n <= hi(); ++n) {
    if (!term(n).is_zero()) return n;
  }
  return lo_;
}

int Complex::highest_nonzero() const {
  for (int n = hi(); n >= lo_; --n) {
    if (!term(n).is_zero()) return n;
  }
  return lo_ - 1;
}

int Complex::width() const {
  const int a = lowest_nonzero();
  const int b = highest_nonzero();
  return b < a ? 0 : b - a + 1;
}

Complex Complex::trimmed() const {
  const int a = lowest_nonzero();
  const int b = highest_nonzero();
  if (b < a) return zero(algebra_);
  std::vector<Module> terms;
  std::vector<Morphism> diffs;
  for (int n = a; n <= b; ++n) {
    terms.push_back(term(n));
    if (n < b) diffs.push_back(differential(n));
  }
  return Complex(algebra_, a, std::move(terms), std::move(diffs));
}

Complex Complex::above(int j) const {
  const int a = std::max(lo_, j + 1);
  if (a > hi()) return zero(algebra_);
  std::vector<Module> terms;
  std::vector<Morphism> diffs;
  for (int n = a; n <= hi(); ++n) {
    terms.push_back(term(n));
    if (n < hi()) diffs.push_back(differential(n));
  }
  return Complex(algebra_, a, std::move(terms), std::move(diffs));
}

Complex Complex::below(int j) const {
  const int b = std::min(hi(), j - 1);
  if (b < lo_) return zero(algebra_);
  std::vector<Module> terms;
  std::vector<Morphism> diffs;
  for (int n = lo_; n <= b; ++n) {
    terms.push_back(term(n));
    if (n < b) diffs.push_back(differential(n));
  }
  return Complex(algebra_, lo_, std::move(terms), std::move(diffs));
}

// ---------------------------------------------------------------------------
// Chain maps

Morphism ChainMap::at(int n) const {
  if (n >= source.lo() && n <= source.hi()) return components[static_cast<std::size_t>(n - source.lo())];
  return Morphism::zero(source.term(n), target.term(n));
}

std::optional<std::string> ChainMap::violation() const {
  if (components.size() != source.terms().size()) return "chain map: wrong number of components";
  for (int n = source.lo(); n <= source.hi(); ++n) {
    const auto& c = components[static_cast<std::size_t>(n - source.lo())];
    if (!same_module(c.source(), source.term(n)) || !same_module(c.target(), target.term(n))) {
      return "chain map: component " + std::to_string(n) + " has the wrong shape";
    }
    if (auto v = c.intertwining_violation()) return "chain map: component " + std::to_string(n) + ": " + *v;
  }
  const int a = std::min(source.lo(), target.lo()) - 1;
  const int b = std::max(source.hi(), target.hi());
  for (int n = a; n <= b; ++n) {
    if (!(target.differential(n) * at(n) == at(n + 1) * source.differential(n))) {
      return "chain map: square in degree " + std::to_string(n) + " does not commute";
    }
  }
  return std::nullopt;
}

ChainMap ChainMap::identity(const Complex& c) {
  std::vector<Morphism> comps;
  for (const auto& t : c.terms()) comps.push_back(Morphism::identity(t));
  return {c, c, std::move(comps)};
}

ChainMap ChainMap::zero(const Complex& s, const Complex& t) {
  std::vector<Morphism> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) comps.push_back(Morphism::zero(s.term(n), t.term(n)));
  return {s, t, std::move(comps)};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::vector<Morphism> comps;
  for (int n = f.source.lo(); n <= f.source.hi(); ++n) comps.push_back(g.at(n) * f.at(n));
  return {f.source, g.target, std::move(comps)};
}

ChainMap difference(const ChainMap& f, const ChainMap& g) {
  std::vector<Morphism> comps;
  for (int n = f.source.lo(); n <= f.source.hi(); ++n) comps.push_back(f.at(n) - g.at(n));
  return {f.source, f.target, std::move(comps)};
}

bool verify_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& h) {
  const Complex& x = f.source;
  const Complex& a = f.target;
  if (h.maps.size() != x.terms().size()) return false;
  auto hat = [&](int n) {
    if (n >= x.lo() && n <= x.hi()) return h.maps[static_cast<std::size_t>(n - x.lo())];
    return Morphism::zero(x.term(n), a.term(n - 1));
  };
  for (int n = x.lo(); n <= x.hi(); ++n) {
    const auto& hn = hat(n);
    if (!same_module(hn.source(), x.term(n)) || !same_module(hn.target(), a.term(n - 1))) return false;
    if (hn.intertwining_violation()) return false;
    const Morphism lhs = f.at(n) - g.at(n);
    const Morphism rhs = a.differential(n - 1) * hn + hat(n + 1) * x.differential(n);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Vector complexes

std::size_t Cohomology::at(int n) const {
  if (n < lo || n >= lo + static_cast<int>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(n - lo)];
}

bool Cohomology::vanishes() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

Cohomology cohomology(const VectorComplex& c) {
  Cohomology h{c.lo, {}};
  std::vector<std::size_t> ranks;
  for (const auto& d : c.diffs) ranks.push_back(d.empty() ? 0 : rank(d));
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const std::size_t out = k < ranks.size() ? ranks[k] : 0;
    const std::size_t in = k > 0 ? ranks[k - 1] : 0;
    h.dims.push_back(c.dims[k] - out - in);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Hom complex

HomComplex::HomComplex(const Complex& x, const Complex& a) : x_(x), a_(a) {
  if (x.empty() || a.empty()) return;
  const Scalar p = x.algebra()->modulus();
  const int lo = a.lo() - x.hi();
  const int hi = a.hi() - x.lo();
  vc_.lo = lo;
  for (int n = lo; n <= hi; ++n) {
    std::vector<HomSpace> row;
    std::vector<std::size_t> offs;
    std::size_t total = 0;
    for (int i = x.lo(); i <= x.hi(); ++i) {
      row.emplace_back(x.term(i), a.term(i + n));
      offs.push_back(total);
      total += row.back().dim();
    }
    spaces_.push_back(std::move(row));
    offsets_.push_back(std::move(offs));
    vc_.dims.push_back(total);
  }
  for (int n = lo; n < hi; ++n) {
    const auto k = static_cast<std::size_t>(n - lo);
    Matrix d = Matrix::zero(p, vc_.dims[k + 1], vc_.dims[k]);
    for (int i = x.lo(); i <= x.hi(); ++i) {
      const auto ii = static_cast<std::size_t>(i - x.lo());
      const HomSpace& from = spaces_[k][ii];
      if (from.dim() == 0) continue;
      const HomSpace& to_same = spaces_[k + 1][ii];
      if (to_same.dim() > 0) {
        d.set_block(offsets_[k + 1][ii], offsets_[k][ii], post_composition(from, to_same, a.differential(i + n)));
      }
      if (i > x.lo()) {
        const HomSpace& to_prev = spaces_[k + 1][ii - 1];
        if (to_prev.dim() > 0) {
          const Matrix m = pre_composition(from, to_prev, x.differential(i - 1)).scaled(p - sign(n, p));
          Matrix cur = d.block(offsets_[k + 1][ii - 1], offsets_[k][ii], to_prev.dim(), from.dim());
          cur += m;
          d.set_block(offsets_[k + 1][ii - 1], offsets_[k][ii], cur);
        }
      }
    }
    vc_.diffs.push_back(std::move(d));
  }
}

std::size_t HomComplex::dim(int n) const {
  if (vc_.dims.empty() || n < lo() || n > hi()) return 0;
  return vc_.dims[static_cast<std::size_t>(n - lo())];
}

Matrix HomComplex::differential(int n) const {
  const Scalar p = x_.empty() ? 2 : x_.algebra()->modulus();
  if (n >= lo() && n < hi()) return vc_.diffs[static_cast<std::size_t>(n - lo())];
  return Matrix::zero(p, dim(n + 1), dim(n));
}

const std::vector<HomSpace>& HomComplex::spaces(int n) const {
  if (n < lo() || n > hi() || spaces_.empty()) throw ContractViolation("hom complex: degree out of range");
  return spaces_[static_cast<std::size_t>(n - lo())];
}

std::vector<Scalar> HomComplex::coordinates(int n, const std::vector<Morphism>& family) const {
  if (dim(n) == 0) return {};
  const auto& row = spaces(n);
  if (family.size() != row.size()) throw ContractViolation("hom complex: family has the wrong length");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].dim() == 0) continue;
    const auto c = row[i].coordinates(family[i]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Morphism> HomComplex::family(int n, const std::vector<Scalar>& coords) const {
  std::vector<Morphism> out;
  if (n < lo() || n > hi() || spaces_.empty()) {
    for (int i = x_.lo(); i <= x_.hi(); ++i) out.push_back(Morphism::zero(x_.term(i), a_.term(i + n)));
    return out;
  }
  const auto& row = spaces(n);
  const auto& offs = offsets_[static_cast<std::size_t>(n - lo())];
  if (coords.size() != dim(n)) throw ContractViolation("hom complex: coordinate vector has the wrong length");
  for (std::size_t i = 0; i < row.size(); ++i) {
    std::vector<Scalar> part(coords.begin() + static_cast<std::ptrdiff_t>(offs[i]),
                             coords.begin() + static_cast<std::ptrdiff_t>(offs[i] + row[i].dim()));
    out.push_back(row[i].element(part));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cones and sums

ConeResult cone(const ChainMap& f) {
  const Complex& x = f.source;
  const Complex& y = f.target;
  const AlgebraPtr& alg = y.algebra();
  const int lo = std::min(x.lo() - 1, y.lo());
  const int hi = std::max(x.hi() - 1, y.hi());
  std::vector<DirectSum> sums;
  for (int n = lo; n <= hi; ++n) sums.push_back(direct_sum(alg, {x.term(n + 1), y.term(n)}));
  std::vector<Module> terms;
  for (const auto& s : sums) terms.push_back(s.object);
  std::vector<Morphism> diffs;
  for (int n = lo; n < hi; ++n) {
    const auto& s = sums[static_cast<std::size_t>(n - lo)];
    const auto& t = sums[static_cast<std::size_t>(n + 1 - lo)];
    Morphism d = t.injections[0] * (-x.differential(n + 1)) * s.projections[0];
    d += t.injections[1] * f.at(n + 1) * s.projections[0];
    d += t.injections[1] * y.differential(n) * s.projections[1];
    diffs.push_back(std::move(d));
  }
  Complex c(alg, lo, std::move(terms), std::move(diffs));

  std::vector<Morphism> from_y;
  for (int n = y.lo(); n <= y.hi(); ++n) from_y.push_back(sums[static_cast<std::size_t>(n - lo)].injections[1]);
  std::vector<Morphism> to_x;
  for (const auto& s : sums) to_x.push_back(s.projections[0]);
  ChainMap into{y, c, std::move(from_y)};
  ChainMap out{c, x.shift(1), std::move(to_x)};
  return {std::move(c), std::move(into), std::move(out)};
}

DirectSumComplex direct_sum(const std::vector<Complex>& parts) {
  if (parts.empty()) throw ContractViolation("direct sum of no complexes");
  const AlgebraPtr& alg = parts.front().algebra();
  int lo = 0;
  int hi = -1;
  bool any = false;
  for (const auto& c : parts) {
    if (c.empty()) continue;
    lo = any ? std::min(lo, c.lo()) : c.lo();
    hi = any ? std::max(hi, c.hi()) : c.hi();
    any = true;
  }
  DirectSumComplex out;
  if (!any) {
    out.complex = Complex::zero(alg);
    for (const auto& c : parts) {
      out.injections.push_back(ChainMap::zero(c, out.complex));
      out.projections.push_back(ChainMap::zero(out.complex, c));
    }
    return out;
  }
  std::vector<DirectSum> sums;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Module> terms;
    for (const auto& c : parts) terms.push_back(c.term(n));
    sums.push_back(direct_sum(alg, terms));
  }
  std::vector<Module> terms;
  for (const auto& s : sums) terms.push_back(s.object);
  std::vector<Morphism> diffs;
  for (int n = lo; n < hi; ++n) {
    std::vector<Morphism> ds;
    for (const auto& c : parts) ds.push_back(c.differential(n));
    diffs.push_back(diagonal_morphism(sums[static_cast<std::size_t>(n - lo)], sums[static_cast<std::size_t>(n + 1 - lo)], ds));
  }
  out.complex = Complex(alg, lo, std::move(terms), std::move(diffs));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<Morphism> inj;
    for (int n = parts[k].lo(); n <= parts[k].hi(); ++n) {
      inj.push_back(sums[static_cast<std::size_t>(n - lo)].injections[k]);
    }
    std::vector<Morphism> proj;
    for (const auto& s : sums) proj.push_back(s.projections[k]);
    out.injections.push_back({parts[k], out.complex, std::move(inj)});
    out.projections.push_back({out.complex, parts[k], std::move(proj)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Acyclicity

AcyclicityReport homology(const Complex& c) {
  AcyclicityReport r;
  r.lo = c.lo();
  if (c.empty()) return r;
  std::vector<std::size_t> ranks;
  for (int n = c.lo(); n < c.hi(); ++n) ranks.push_back(c.differential(n).rank());
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const auto k = static_cast<std::size_t>(n - c.lo());
    const std::size_t out = k < ranks.size() ? ranks[k] : 0;
    const std::size_t in = k > 0 ? ranks[k - 1] : 0;
    r.homology.push_back(c.term(n).total_dim() - out - in);
    if (r.homology.back() != 0) r.acyclic = false;
  }
  return r;
}

bool is_acyclic(const Complex& c) { return homology(c).acyclic; }

VectorComplex hom_from(const Module& g, const Complex& c) {
  VectorComplex v;
  v.lo = c.lo();
  std::vector<HomSpace> spaces;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    spaces.emplace_back(g, c.term(n));
    v.dims.push_back(spaces.back().dim());
  }
  for (int n = c.lo(); n < c.hi(); ++n) {
    const auto k = static_cast<std::size_t>(n - c.lo());
    v.diffs.push_back(post_composition(spaces[k], spaces[k + 1], c.differential(n)));
  }
  return v;
}

VectorComplex hom_into(const Complex& c, const Module& g) {
  VectorComplex v;
  v.lo = -c.hi();
  std::vector<HomSpace> spaces;
  for (int m = -c.hi(); m <= -c.lo(); ++m) {
    spaces.emplace_back(c.term(-m), g);
    v.dims.push_back(spaces.back().dim());
  }
  for (int m = -c.hi(); m < -c.lo(); ++m) {
    const auto k = static_cast<std::size_t>(m + c.hi());
    v.diffs.push_back(pre_composition(spaces[k], spaces[k + 1], c.differential(-m - 1)));
  }
  return v;
}

RelAcyclicityReport is_rel_acyclic(const Complex& c, Side side, const std::vector<Module>& generators) {
  RelAcyclicityReport r;
  r.side = side;
  for (const auto& g : generators) {
    r.generators.push_back(g.label());
    if (c.empty()) {
      r.tables.push_back({});
      continue;
    }
    const auto h = cohomology(side == Side::right ? hom_from(g, c) : hom_into(c, g));
    if (r.acyclic && !h.vanishes()) {
      r.acyclic = false;
      for (std::size_t k = 0; k < h.dims.size(); ++k) {
        if (h.dims[k] == 0) continue;
        const int n = h.lo + static_cast<int>(k);
        r.failure = (side == Side::right ? "Hom(" + g.label() + ", -)" : "Hom(-, " + g.label() + ")") +
                    " has H^" + std::to_string(n) + " of dimension " + std::to_string(h.dims[k]);
        break;
      }
    }
    r.tables.push_back(h);
  }
  return r;
}

Complex as_complex(const ShortExactSequence& s) {
  return Complex(s.first().algebra(), -1, {s.first(), s.middle(), s.last()}, {s.left, s.right});
}

// ---------------------------------------------------------------------------
// Homotopies

std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g) {
  const Complex& x = f.source;
  const Complex& a = f.target;
  HomComplex hc(x, a);
  Homotopy h;
  const ChainMap diff = difference(f, g);
  if (hc.dim(0) == 0) {
    for (const auto& c : diff.components) {
      if (!c.is_zero()) return std::nullopt;
    }
    h.maps = hc.family(-1, std::vector<Scalar>(hc.dim(-1), 0));
    return h;
  }
  const auto target = hc.coordinates(0, diff.components);
  const Scalar p = x.algebra()->modulus();
  if (hc.dim(-1) == 0) {
    if (std::any_of(target.begin(), target.end(), [](Scalar s) { return s != 0; })) return std::nullopt;
    h.maps = hc.family(-1, {});
    return h;
  }
  const auto sol = solve(hc.differential(-1), Matrix::column(p, target));
  if (!sol) return std::nullopt;
  h.maps = hc.family(-1, sol->particular.column_vector(0));
  return h;
}

bool is_null_homotopic(const ChainMap& f) { return find_homotopy(f, ChainMap::zero(f.source, f.target)).has_value(); }

bool is_quasi_isomorphism(const ChainMap& f) {
  const Complex& x = f.source;
  const Complex& y = f.target;
  const int lo = std::min(x.lo(), y.lo());
  const int hi = std::max(x.hi(), y.hi());
  for (int n = lo; n <= hi; ++n) {
    const Matrix zx = kernel_basis(x.differential(n).total_matrix());
    const Matrix bx = x.differential(n - 1).total_matrix();
    const Matrix zy = kernel_basis(y.differential(n).total_matrix());
    const Matrix by = y.differential(n - 1).total_matrix();
    const std::size_t hx = zx.cols() - rank(bx);
    const std::size_t hy = zy.cols() - rank(by);
    if (hx != hy) return false;
    if (hx == 0) continue;
    // Image of H^n(f) has dimension rank[f Z_X | B_Y] − rank B_Y.
    const Matrix fz = f.at(n).total_matrix() * zx;
    if (rank(hstack(fz, by)) - rank(by) != hx) return false;
  }
  return true;
}

HomotopyInverse homotopy_inverse_certificate(const ChainMap& f, const std::vector<Module>& generators) {
  HomotopyInverse out;
  const Complex& a = f.source;
  const Complex& x = f.target;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    if (!add_membership(x.term(n), generators)) {
      out.note = "target term in degree " + std::to_string(n) + " is not in add of the generators";
      return out;
    }
  }
  out.cone_report = is_rel_acyclic(cone(f).cone, Side::right, generators);
  if (!out.cone_report.acyclic) {
    out.note = "cone is not right acyclic: " + out.cone_report.failure;
    return out;
  }
  out.precondition_met = true;

  const Scalar p = x.algebra()->modulus();
  HomComplex xa(x, a);
  HomComplex xx(x, x);
  const std::size_t ng = xa.dim(0);
  const std::size_t nh = xx.dim(-1);
  const std::size_t r0 = xa.dim(1);
  const std::size_t r1 = xx.dim(0);

  // Unknowns (g, h): D g = 0 and f∘g − D h = id.
  Matrix post = Matrix::zero(p, r1, ng);
  for (std::size_t j = 0; j < ng; ++j) {
    std::vector<Scalar> e(ng, 0);
    e[j] = 1;
    const auto fam = xa.family(0, e);
    std::vector<Morphism> composed;
    for (int i = x.lo(); i <= x.hi(); ++i) composed.push_back(f.at(i) * fam[static_cast<std::size_t>(i - x.lo())]);
    const auto col = xx.coordinates(0, composed);
    for (std::size_t r = 0; r < r1; ++r) post(r, j) = col[r];
  }
  Matrix system = Matrix::zero(p, r0 + r1, ng + nh);
  if (r0 > 0 && ng > 0) system.set_block(0, 0, xa.differential(0));
  if (r1 > 0 && ng > 0) system.set_block(r0, 0, post);
  if (r1 > 0 && nh > 0) system.set_block(r0, ng, -xx.differential(-1));
  std::vector<Scalar> rhs(r0 + r1, 0);
  const auto id = xx.coordinates(0, ChainMap::identity(x).components);
  std::copy(id.begin(), id.end(), rhs.begin() + static_cast<std::ptrdiff_t>(r0));

  std::vector<Scalar> gcoords(ng, 0);
  if (ng + nh > 0) {
    const auto sol = solve(system, Matrix::column(p, rhs));
    if (!sol) {
      out.note = "linear system for the inverse is inconsistent";
      return out;
    }
    const auto v = sol->particular.column_vector(0);
    std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ng), gcoords.begin());
  } else if (std::any_of(rhs.begin(), rhs.end(), [](Scalar s) { return s != 0; })) {
    out.note = "linear system for the inverse is inconsistent";
    return out;
  }
  ChainMap g{x, a, xa.family(0, gcoords)};
  if (auto v = g.violation()) {
    out.note = "solved inverse is not a chain map: " + *v;
    return out;
  }
  out.inverse = g;
  out.fg_to_identity = find_homotopy(compose(f, g), ChainMap::identity(x));
  if (!out.fg_to_identity || !verify_homotopy(compose(f, g), ChainMap::identity(x), *out.fg_to_identity)) {
    out.fg_to_identity.reset();
    out.note = "f g is not homotopic to the identity";
    return out;
  }
  bool source_in_add = true;
  for (int n = a.lo(); n <= a.hi() && source_in_add; ++n) {
    source_in_add = add_membership(a.term(n), generators).has_value();
  }
  if (source_in_add) {
    out.two_sided_checked = true;
    out.gf_to_identity = find_homotopy(compose(g, f), ChainMap::identity(a));
    if (!out.gf_to_identity) out.note = "g f is not homotopic to the identity";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random complexes

Complex random_complex(Rng& rng, const std::vector<Module>& pool, int lo, int width, std::size_t max_summands) {
  if (pool.empty() || width <= 0) throw ContractViolation("random_complex: empty pool or width");
  const AlgebraPtr& alg = pool.front().algebra();
  std::vector<Module> terms;
  for (int k = 0; k < width; ++k) terms.push_back(random_sum(rng, pool, 1 + rng.below(max_summands)));
  std::vector<Morphism> diffs;
  for (int k = 0; k + 1 < width; ++k) {
    const auto& s = terms[static_cast<std::size_t>(k)];
    const auto& t = terms[static_cast<std::size_t>(k + 1)];
    if (diffs.empty()) {
      diffs.push_back(random_morphism(rng, s, t));
    } else {
      const auto q = cokernel(diffs.back());
      diffs.push_back(random_morphism(rng, q.object, t) * q.projection);
    }
  }
  return Complex(alg, lo, std::move(terms), std::move(diffs));
}

ChainMap random_chain_map(Rng& rng, const Complex& x, const Complex& a) {
  HomComplex hc(x, a);
  const std::size_t n0 = hc.dim(0);
  if (n0 == 0) return ChainMap::zero(x, a);
  const Scalar p = x.algebra()->modulus();
  const Matrix z = hc.dim(1) == 0 ? Matrix::identity(p, n0) : kernel_basis(hc.differential(0));
  std::vector<Scalar> coords(n0, 0);
  for (std::size_t c = 0; c < z.cols(); ++c) {
    const Scalar w = rng.scalar(p);
    for (std::size_t r = 0; r < n0; ++r) coords[r] = fp::add(coords[r], fp::mul(w, z(r, c), p), p);
  }
  return {x, a, hc.family(0, coords)};
}

Complex contractible(const Module& m, int degree) { return Complex::two_term(Morphism::identity(m), degree); }

}  // namespace relhom
