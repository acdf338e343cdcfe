#include "relhom/module.hpp"

#include <algorithm>
#include <random>

#include "relhom/errors.hpp"

namespace relhom {
namespace {

void same_algebra(const Module& a, const Module& b, const char* where) {
  if (a.algebra() != b.algebra()) throw ContractViolation(std::string(where) + ": modules over different algebras");
}

void same_shape(const Module& a, const Module& b, const char* where) {
  same_algebra(a, b, where);
  if (a.dims() != b.dims()) throw ContractViolation(std::string(where) + ": dimension vectors differ");
}

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s + ")";
}

Matrix flat_column(Scalar p, const std::vector<Scalar>& v) { return Matrix::column(p, v); }

}  // namespace

// ---------------------------------------------------------------------------
// Module

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> actions, std::string name)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), actions_(std::move(actions)), name_(std::move(name)) {
  if (!algebra_) throw ContractViolation("Module: null algebra");
  if (dims_.size() != algebra_->vertex_count()) throw ContractViolation("Module: one dimension per vertex required");
  if (actions_.size() != algebra_->arrow_count()) throw ContractViolation("Module: one matrix per arrow required");
  const Scalar p = algebra_->modulus();
  for (std::size_t a = 0; a < actions_.size(); ++a) {
    const auto& arr = algebra_->quiver().arrow(a);
    const auto& m = actions_[a];
    if (m.modulus() != p || m.rows() != dims_[arr.target] || m.cols() != dims_[arr.source]) {
      throw ContractViolation("Module: arrow '" + arr.label + "' has a matrix of the wrong shape");
    }
  }
  offsets_.resize(dims_.size());
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    offsets_[v] = total_;
    total_ += dims_[v];
  }
}

Module Module::zero(AlgebraPtr algebra) {
  if (!algebra) throw ContractViolation("Module::zero: null algebra");
  const Scalar p = algebra->modulus();
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < algebra->arrow_count(); ++a) acts.emplace_back(p, 0, 0);
  const auto n = algebra->vertex_count();
  return Module(std::move(algebra), std::vector<std::size_t>(n, 0), std::move(acts), "0");
}

std::string Module::label() const { return name_.empty() ? "M" + dims_string(dims_) : name_; }

Matrix Module::path_action(const Path& path) const {
  Matrix m = Matrix::identity(modulus(), dims_.at(path.source));
  for (auto a : path.arrows) m = actions_.at(a) * m;
  return m;
}

std::optional<std::string> Module::relation_violation() const {
  const auto& rels = algebra_->relation_paths();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto& first = rels[r].front().first;
    Matrix acc(modulus(), dims_[first.target(algebra_->quiver())], dims_[first.source]);
    for (const auto& [path, c] : rels[r]) acc += path_action(path).scaled(c);
    if (!acc.is_zero()) {
      std::string terms;
      for (const auto& [path, c] : rels[r]) {
        if (!terms.empty()) terms += " + ";
        terms += std::to_string(c) + "*" + algebra_->path_name(path);
      }
      return "relation " + std::to_string(r + 1) + " (" + terms + ") does not vanish on module " + label();
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(Module source, Module target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  same_algebra(source_, target_, "Morphism");
  if (blocks_.size() != source_.dims().size()) throw ContractViolation("Morphism: one block per vertex required");
  for (std::size_t v = 0; v < blocks_.size(); ++v) {
    const auto& b = blocks_[v];
    if (b.modulus() != source_.modulus() || b.rows() != target_.dim(v) || b.cols() != source_.dim(v)) {
      throw ContractViolation("Morphism: block at vertex " + std::to_string(v + 1) + " has the wrong shape");
    }
  }
}

Morphism Morphism::zero(const Module& source, const Module& target) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.dims().size(); ++v) blocks.emplace_back(source.modulus(), target.dim(v), source.dim(v));
  return Morphism(source, target, std::move(blocks));
}

Morphism Morphism::identity(const Module& m) {
  std::vector<Matrix> blocks;
  for (auto d : m.dims()) blocks.push_back(Matrix::identity(m.modulus(), d));
  return Morphism(m, m, std::move(blocks));
}

std::optional<std::string> Morphism::intertwining_violation() const {
  const auto& q = source_.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(blocks_[arr.target] * source_.action(a) == target_.action(a) * blocks_[arr.source])) {
      return "morphism does not commute with arrow '" + arr.label + "' (vertex " + std::to_string(arr.source + 1) +
             " -> " + std::to_string(arr.target + 1) + ")";
    }
  }
  return std::nullopt;
}

bool Morphism::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return b.is_zero(); });
}

bool Morphism::is_mono() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return relhom::rank(b) == b.cols(); });
}

bool Morphism::is_epi() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return relhom::rank(b) == b.rows(); });
}

std::size_t Morphism::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks_) r += relhom::rank(b);
  return r;
}

std::vector<Scalar> Morphism::flatten() const {
  std::vector<Scalar> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.data().begin(), b.data().end());
  return out;
}

Matrix Morphism::total_matrix() const { return block_diagonal(blocks_); }

Morphism Morphism::scaled(Scalar c) const {
  std::vector<Matrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.scaled(c));
  return Morphism(source_, target_, std::move(blocks));
}

Morphism& Morphism::operator+=(const Morphism& o) {
  same_shape(source_, o.source_, "Morphism::+");
  same_shape(target_, o.target_, "Morphism::+");
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks_[v] += o.blocks_[v];
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  same_shape(source_, o.source_, "Morphism::-");
  same_shape(target_, o.target_, "Morphism::-");
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks_[v] -= o.blocks_[v];
  return *this;
}

Morphism operator*(const Morphism& g, const Morphism& f) {
  same_shape(g.source(), f.target(), "compose");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(g.block(v) * f.block(v));
  return Morphism(f.source(), g.target(), std::move(blocks));
}

Morphism morphism_from_total(const Module& source, const Module& target, const Matrix& total) {
  if (total.rows() != target.total_dim() || total.cols() != source.total_dim()) {
    throw ContractViolation("morphism_from_total: shape mismatch");
  }
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.dims().size(); ++v) {
    blocks.push_back(total.block(target.offset(v), source.offset(v), target.dim(v), source.dim(v)));
  }
  return Morphism(source, target, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Hom spaces

namespace {

Morphism unflatten(const Module& s, const Module& t, const Matrix& column, std::size_t col) {
  std::vector<Matrix> blocks;
  std::size_t pos = 0;
  for (std::size_t v = 0; v < s.dims().size(); ++v) {
    Matrix b(s.modulus(), t.dim(v), s.dim(v));
    for (auto& x : b.data()) x = column(pos++, col);
    blocks.push_back(std::move(b));
  }
  return Morphism(s, t, std::move(blocks));
}

}  // namespace

HomSpace::HomSpace(const Module& source, const Module& target) : source_(source), target_(target) {
  same_algebra(source, target, "HomSpace");
  const auto& alg = *source.algebra();
  const Scalar p = alg.modulus();
  const auto nv = alg.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + target.dim(v) * source.dim(v);
  const std::size_t unknowns = off[nv];

  std::size_t equations = 0;
  for (const auto& arr : alg.quiver().arrows()) equations += target.dim(arr.target) * source.dim(arr.source);
  Matrix eq(p, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    const auto s = arr.source, t = arr.target;
    const Matrix& ma = source.action(a);  // dims_src[t] x dims_src[s]
    const Matrix& na = target.action(a);  // dims_tgt[t] x dims_tgt[s]
    for (std::size_t i = 0; i < target.dim(t); ++i) {
      for (std::size_t j = 0; j < source.dim(s); ++j, ++row) {
        // B_t(i,k) M_a(k,j)
        for (std::size_t k = 0; k < source.dim(t); ++k) {
          const Scalar c = ma(k, j);
          if (c) {
            auto& x = eq(row, off[t] + i * source.dim(t) + k);
            x = fp::add(x, c, p);
          }
        }
        // - N_a(i,k) B_s(k,j)
        for (std::size_t k = 0; k < target.dim(s); ++k) {
          const Scalar c = na(i, k);
          if (c) {
            auto& x = eq(row, off[s] + k * source.dim(s) + j);
            x = fp::sub(x, c, p);
          }
        }
      }
    }
  }
  auto ns = null_space(eq);
  free_ = std::move(ns.free_columns);
  basis_.reserve(ns.basis.cols());
  for (std::size_t c = 0; c < ns.basis.cols(); ++c) basis_.push_back(unflatten(source, target, ns.basis, c));
}

Morphism HomSpace::element(const std::vector<Scalar>& coords) const {
  if (coords.size() != basis_.size()) throw ContractViolation("HomSpace::element: wrong coordinate count");
  Morphism out = Morphism::zero(source_, target_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k]) out += basis_[k].scaled(coords[k]);
  }
  return out;
}

std::vector<Scalar> HomSpace::coordinates(const Morphism& f) const {
  const auto flat = f.flatten();
  std::vector<Scalar> out;
  out.reserve(free_.size());
  for (auto c : free_) out.push_back(flat.at(c));
  return out;
}

std::vector<Morphism> hom_basis(const Module& m, const Module& n) { return HomSpace(m, n).basis(); }
std::size_t hom_dim(const Module& m, const Module& n) { return HomSpace(m, n).dim(); }

Matrix post_composition(const HomSpace& from, const HomSpace& to, const Morphism& f) {
  Matrix out(f.source().modulus(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    const auto c = to.coordinates(f * from.basis()[k]);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, k) = c[i];
  }
  return out;
}

Matrix pre_composition(const HomSpace& from, const HomSpace& to, const Morphism& f) {
  Matrix out(f.source().modulus(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    const auto c = to.coordinates(from.basis()[k] * f);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, k) = c[i];
  }
  return out;
}

namespace {

// Solves Σ c_k L(b_k) = rhs over a hom basis and returns Σ c_k b_k.
template <typename Apply>
std::optional<Morphism> solve_in_hom(const HomSpace& h, const Morphism& rhs, Apply apply) {
  const Scalar p = rhs.source().modulus();
  const auto target = rhs.flatten();
  Matrix a(p, target.size(), h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    const auto img = apply(h.basis()[k]).flatten();
    for (std::size_t i = 0; i < img.size(); ++i) a(i, k) = img[i];
  }
  auto sol = solve(a, flat_column(p, target));
  if (!sol) return std::nullopt;
  return h.element(sol->particular.column_vector(0));
}

}  // namespace

std::optional<Morphism> factor_through(const Morphism& f, const Morphism& g) {
  same_shape(f.target(), g.target(), "factor_through");
  HomSpace h(f.source(), g.source());
  return solve_in_hom(h, f, [&](const Morphism& b) { return g * b; });
}

std::optional<Morphism> factor_from(const Morphism& f, const Morphism& g) {
  same_shape(f.source(), g.source(), "factor_from");
  HomSpace h(g.target(), f.target());
  return solve_in_hom(h, f, [&](const Morphism& b) { return b * g; });
}

// ---------------------------------------------------------------------------
// Kernels, cokernels, images

KernelResult kernel(const Morphism& f) {
  const Module& src = f.source();
  const auto& alg = src.algebra();
  const auto nv = alg->vertex_count();
  std::vector<Matrix> k(nv), linv(nv);
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    k[v] = kernel_basis(f.block(v));
    dims[v] = k[v].cols();
    linv[v] = left_inverse(k[v]);
  }
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < alg->arrow_count(); ++a) {
    const auto& arr = alg->quiver().arrow(a);
    acts.push_back(linv[arr.target] * src.action(a) * k[arr.source]);
  }
  Module obj(alg, dims, std::move(acts));
  return {obj, Morphism(obj, src, std::move(k))};
}

CokernelResult cokernel(const Morphism& f) {
  const Module& tgt = f.target();
  const auto& alg = tgt.algebra();
  const auto nv = alg->vertex_count();
  std::vector<Matrix> q(nv), rinv(nv);
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    q[v] = kernel_basis(f.block(v).transpose()).transpose();
    dims[v] = q[v].rows();
    rinv[v] = right_inverse(q[v]);
  }
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < alg->arrow_count(); ++a) {
    const auto& arr = alg->quiver().arrow(a);
    acts.push_back(q[arr.target] * tgt.action(a) * rinv[arr.source]);
  }
  Module obj(alg, dims, std::move(acts));
  return {obj, Morphism(tgt, obj, std::move(q))};
}

ImageResult image(const Morphism& f) {
  const Module& tgt = f.target();
  const auto& alg = tgt.algebra();
  const auto nv = alg->vertex_count();
  std::vector<Matrix> c(nv), linv(nv), co(nv);
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    c[v] = column_space(f.block(v));
    dims[v] = c[v].cols();
    linv[v] = left_inverse(c[v]);
    co[v] = linv[v] * f.block(v);
  }
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < alg->arrow_count(); ++a) {
    const auto& arr = alg->quiver().arrow(a);
    acts.push_back(linv[arr.target] * tgt.action(a) * c[arr.source]);
  }
  Module obj(alg, dims, std::move(acts));
  return {obj, Morphism(obj, tgt, std::move(c)), Morphism(f.source(), obj, std::move(co))};
}

KernelResult radical(const Module& m) {
  const auto& alg = m.algebra();
  const auto nv = alg->vertex_count();
  const Scalar p = m.modulus();
  std::vector<Matrix> span(nv), linv(nv);
  for (std::size_t v = 0; v < nv; ++v) span[v] = Matrix(p, m.dim(v), 0);
  for (std::size_t a = 0; a < alg->arrow_count(); ++a) {
    const auto t = alg->quiver().arrow(a).target;
    span[t] = hstack(span[t], m.action(a));
  }
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    span[v] = column_space(span[v]);
    dims[v] = span[v].cols();
    linv[v] = left_inverse(span[v]);
  }
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < alg->arrow_count(); ++a) {
    const auto& arr = alg->quiver().arrow(a);
    acts.push_back(linv[arr.target] * m.action(a) * span[arr.source]);
  }
  Module obj(alg, dims, std::move(acts));
  return {obj, Morphism(obj, m, std::move(span))};
}

CokernelResult radical_quotient(const Module& m, std::size_t k) {
  Morphism incl = Morphism::identity(m);
  for (std::size_t i = 0; i < k; ++i) {
    auto r = radical(incl.source());
    incl = incl * r.inclusion;
  }
  return cokernel(incl);
}

// ---------------------------------------------------------------------------
// Direct sums

Module direct_sum_object(const AlgebraPtr& algebra, const std::vector<Module>& parts) {
  const auto nv = algebra->vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& m : parts) {
    if (m.algebra() != algebra) throw ContractViolation("direct_sum: modules over different algebras");
    for (std::size_t v = 0; v < nv; ++v) dims[v] += m.dim(v);
  }
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < algebra->arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& m : parts) blocks.push_back(m.action(a));
    if (blocks.empty()) {
      const auto& arr = algebra->quiver().arrow(a);
      acts.emplace_back(algebra->modulus(), dims[arr.target], dims[arr.source]);
    } else {
      acts.push_back(block_diagonal(blocks));
    }
  }
  return Module(algebra, std::move(dims), std::move(acts));
}

DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Module>& parts) {
  DirectSum out;
  out.object = direct_sum_object(algebra, parts);
  if (parts.size() == 1) out.object.set_name(parts.front().name());
  const auto nv = algebra->vertex_count();
  const Scalar p = algebra->modulus();
  std::vector<std::size_t> off(nv, 0);
  for (const auto& m : parts) {
    std::vector<Matrix> inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(p, out.object.dim(v), m.dim(v));
      for (std::size_t r = 0; r < m.dim(v); ++r) i(off[v] + r, r) = 1;
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      off[v] += m.dim(v);
    }
    out.injections.emplace_back(m, out.object, std::move(inj));
    out.projections.emplace_back(out.object, m, std::move(proj));
  }
  return out;
}

Morphism row_morphism(const DirectSum& sources, const std::vector<Morphism>& parts, const Module& target) {
  if (parts.size() != sources.injections.size()) throw ContractViolation("row_morphism: arity mismatch");
  Morphism out = Morphism::zero(sources.object, target);
  for (std::size_t i = 0; i < parts.size(); ++i) out += parts[i] * sources.projections[i];
  return out;
}

Morphism column_morphism(const Module& source, const DirectSum& targets, const std::vector<Morphism>& parts) {
  if (parts.size() != targets.injections.size()) throw ContractViolation("column_morphism: arity mismatch");
  Morphism out = Morphism::zero(source, targets.object);
  for (std::size_t i = 0; i < parts.size(); ++i) out += targets.injections[i] * parts[i];
  return out;
}

Morphism diagonal_morphism(const DirectSum& sources, const DirectSum& targets, const std::vector<Morphism>& parts) {
  if (parts.size() != sources.injections.size() || parts.size() != targets.injections.size()) {
    throw ContractViolation("diagonal_morphism: arity mismatch");
  }
  Morphism out = Morphism::zero(sources.object, targets.object);
  for (std::size_t i = 0; i < parts.size(); ++i) out += targets.injections[i] * parts[i] * sources.projections[i];
  return out;
}

// ---------------------------------------------------------------------------
// Short exact sequences, pullbacks, pushouts

std::optional<std::string> ShortExactSequence::exactness_violation() const {
  if (left.target().algebra() != right.source().algebra() || left.target().dims() != right.source().dims()) {
    return "maps are not composable";
  }
  if (!left.is_mono()) return "left map is not mono";
  if (!right.is_epi()) return "right map is not epi";
  if (!(right * left).is_zero()) return "composite is nonzero";
  for (std::size_t v = 0; v < middle().dims().size(); ++v) {
    if (middle().dim(v) != first().dim(v) + last().dim(v)) return "not exact in the middle at vertex " + std::to_string(v + 1);
  }
  return std::nullopt;
}

bool ShortExactSequence::is_split() const { return factor_through(Morphism::identity(last()), right).has_value(); }

PullbackResult pullback(const Morphism& g, const Morphism& alpha, const std::optional<ShortExactSequence>& row) {
  same_shape(g.target(), alpha.target(), "pullback");
  const auto& alg = g.source().algebra();
  auto sum = direct_sum(alg, {g.source(), alpha.source()});
  auto diff = row_morphism(sum, {g, -alpha}, g.target());
  auto ker = kernel(diff);
  PullbackResult out{ker.object, sum.projections[0] * ker.inclusion, sum.projections[1] * ker.inclusion, std::nullopt};
  if (row) {
    if (!(row->right == g)) throw ContractViolation("pullback: row does not end in g");
    auto lift = factor_through(sum.injections[0] * row->left, ker.inclusion);
    if (!lift) throw Error("pullback: induced map failed to factor (internal)");
    out.induced = ShortExactSequence{*lift, out.to_base};
  }
  return out;
}

PushoutResult pushout(const Morphism& f, const Morphism& s, const std::optional<ShortExactSequence>& row) {
  same_shape(f.source(), s.source(), "pushout");
  const auto& alg = f.source().algebra();
  auto sum = direct_sum(alg, {f.target(), s.target()});
  auto diff = column_morphism(f.source(), sum, {f, -s});
  auto cok = cokernel(diff);
  PushoutResult out{cok.object, cok.projection * sum.injections[0], cok.projection * sum.injections[1], std::nullopt};
  if (row) {
    if (!(row->left == f)) throw ContractViolation("pushout: row does not start with f");
    auto onto = row_morphism(sum, {row->right, Morphism::zero(s.target(), row->last())}, row->last());
    auto desc = factor_from(onto, cok.projection);
    if (!desc) throw Error("pushout: induced map failed to factor (internal)");
    out.induced = ShortExactSequence{out.from_base, *desc};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximations by evaluation, add(-) membership, isomorphism

Morphism evaluation_map(const std::vector<Module>& generators, const Module& m) {
  std::vector<Module> parts;
  std::vector<Morphism> maps;
  for (const auto& g : generators) {
    for (auto& b : hom_basis(g, m)) {
      parts.push_back(g);
      maps.push_back(std::move(b));
    }
  }
  auto sum = direct_sum(m.algebra(), parts);
  return row_morphism(sum, maps, m);
}

Morphism coevaluation_map(const std::vector<Module>& generators, const Module& m) {
  std::vector<Module> parts;
  std::vector<Morphism> maps;
  for (const auto& g : generators) {
    for (auto& b : hom_basis(m, g)) {
      parts.push_back(g);
      maps.push_back(std::move(b));
    }
  }
  auto sum = direct_sum(m.algebra(), parts);
  return column_morphism(m, sum, maps);
}

std::optional<SplittingWitness> add_membership(const Module& m, const std::vector<Module>& generators) {
  auto f = evaluation_map(generators, m);
  auto s = factor_through(Morphism::identity(m), f);
  if (!s) return std::nullopt;
  return SplittingWitness{f, *s};
}

IsoResult find_isomorphism(const Module& m, const Module& n, const IsoSearchOptions& options) {
  same_algebra(m, n, "find_isomorphism");
  if (m.dims() != n.dims()) return {IsoVerdict::not_isomorphic, std::nullopt, "dimension vectors differ"};
  if (m.is_zero()) return {IsoVerdict::isomorphic, Morphism::zero(m, n), "zero modules"};
  HomSpace h(m, n);
  const std::size_t dmn = h.dim();
  if (dmn == 0) return {IsoVerdict::not_isomorphic, std::nullopt, "Hom(M,N) = 0"};
  const std::size_t dmm = hom_dim(m, m), dnn = hom_dim(n, n), dnm = hom_dim(n, m);
  if (dmm != dmn || dnn != dmn || dnm != dmn) {
    return {IsoVerdict::not_isomorphic, std::nullopt, "hom dimensions differ (End(M), Hom(M,N), Hom(N,M), End(N))"};
  }
  for (const auto& b : h.basis()) {
    if (b.is_iso()) return {IsoVerdict::isomorphic, b, "basis element is invertible"};
  }
  const Scalar p = m.modulus();
  // Exhaustive when the space is small.
  long double size = 1;
  for (std::size_t i = 0; i < dmn && size <= options.exhaustive_limit; ++i) size *= p;
  if (size <= options.exhaustive_limit) {
    std::vector<Scalar> c(dmn, 0);
    while (true) {
      std::size_t i = 0;
      while (i < dmn && c[i] == p - 1) c[i++] = 0;
      if (i == dmn) break;
      ++c[i];
      auto f = h.element(c);
      if (f.is_iso()) return {IsoVerdict::isomorphic, f, "exhaustive search"};
    }
    return {IsoVerdict::not_isomorphic, std::nullopt, "no invertible element in Hom(M,N) (exhaustive)"};
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Scalar> dist(0, p - 1);
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<Scalar> c(dmn);
    for (auto& x : c) x = dist(rng);
    auto f = h.element(c);
    if (f.is_iso()) return {IsoVerdict::isomorphic, f, "sampled search"};
  }
  return {IsoVerdict::undecided, std::nullopt, "no invertible element found by sampling"};
}

bool isomorphic(const Module& m, const Module& n) {
  return find_isomorphism(m, n).verdict == IsoVerdict::isomorphic;
}

// ---------------------------------------------------------------------------
// Minimal reductions

std::vector<Matrix> endomorphism_matrices(const Module& m) {
  std::vector<Matrix> out;
  for (const auto& b : hom_basis(m, m)) out.push_back(b.total_matrix());
  return out;
}

namespace {

// Total matrices spanning {t ∈ End(x) : apply(t) = 0}.
template <typename Apply>
std::vector<Matrix> annihilator(const Module& x, Apply apply) {
  HomSpace end(x, x);
  const Scalar p = x.modulus();
  if (end.dim() == 0) return {};
  const auto probe = apply(end.basis().front()).flatten().size();
  Matrix a(p, probe, end.dim());
  for (std::size_t k = 0; k < end.dim(); ++k) {
    const auto img = apply(end.basis()[k]).flatten();
    for (std::size_t i = 0; i < img.size(); ++i) a(i, k) = img[i];
  }
  auto ns = kernel_basis(a);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < ns.cols(); ++c) out.push_back(end.element(ns.column_vector(c)).total_matrix());
  return out;
}

Matrix pick_idempotent(const std::vector<Matrix>& ideal) {
  IdempotentSearchOptions opts;
  opts.allow_identity = true;
  auto e = split_idempotent_search(ideal, {}, opts);
  if (!e) throw Error("minimal reduction: non-nilpotent ideal without a detected idempotent");
  return *e;
}

}  // namespace

MinimalReduction right_minimal_reduction(const Morphism& f) {
  const auto& alg = f.source().algebra();
  Morphism current = f;
  Morphism comparison = Morphism::identity(f.source());
  std::vector<Module> discarded;
  while (true) {
    const Module& x = current.source();
    auto t = annihilator(x, [&](const Morphism& s) { return current * s; });
    if (t.empty() || spans_nilpotent_algebra(t)) break;
    auto e = morphism_from_total(x, x, pick_idempotent(t));
    auto keep = kernel(e);
    discarded.push_back(kernel(Morphism::identity(x) - e).object);
    current = current * keep.inclusion;
    comparison = comparison * keep.inclusion;
  }
  return {current, direct_sum_object(alg, discarded), comparison};
}

MinimalReduction left_minimal_reduction(const Morphism& f) {
  const auto& alg = f.source().algebra();
  Morphism current = f;
  Morphism comparison = Morphism::identity(f.target());
  std::vector<Module> discarded;
  while (true) {
    const Module& y = current.target();
    auto t = annihilator(y, [&](const Morphism& s) { return s * current; });
    if (t.empty() || spans_nilpotent_algebra(t)) break;
    auto e = morphism_from_total(y, y, pick_idempotent(t));
    const auto one_minus_e = Morphism::identity(y) - e;
    auto keep = kernel(e);
    auto proj = factor_through(one_minus_e, keep.inclusion);
    if (!proj) throw Error("left_minimal_reduction: projection failed to factor (internal)");
    discarded.push_back(kernel(one_minus_e).object);
    current = *proj * current;
    comparison = *proj * comparison;
  }
  return {current, direct_sum_object(alg, discarded), comparison};
}

bool is_right_minimal(const Morphism& f) {
  auto t = annihilator(f.source(), [&](const Morphism& s) { return f * s; });
  return t.empty() || spans_nilpotent_algebra(t);
}

bool is_left_minimal(const Morphism& f) {
  auto t = annihilator(f.target(), [&](const Morphism& s) { return s * f; });
  return t.empty() || spans_nilpotent_algebra(t);
}

// ---------------------------------------------------------------------------
// Standard modules

Module projective(const AlgebraPtr& algebra, std::size_t vertex) {
  const auto& alg = *algebra;
  if (vertex >= alg.vertex_count()) throw ContractViolation("projective: vertex out of range");
  const Scalar p = alg.modulus();
  const auto nv = alg.vertex_count();
  std::vector<std::size_t> dims(nv);
  // position of each basis path inside its vertex space
  std::vector<std::size_t> pos(alg.dimension(), 0);
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& paths = alg.basis_between(vertex, j);
    dims[j] = paths.size();
    for (std::size_t k = 0; k < paths.size(); ++k) pos[paths[k]] = k;
  }
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    Matrix m(p, dims[arr.target], dims[arr.source]);
    const auto& from = alg.basis_between(vertex, arr.source);
    for (std::size_t k = 0; k < from.size(); ++k) {
      Path ext = alg.basis()[from[k]];
      ext.arrows.push_back(a);
      for (const auto& [idx, c] : alg.reduce(ext)) m(pos[idx], k) = fp::add(m(pos[idx], k), c, p);
    }
    acts.push_back(std::move(m));
  }
  return Module(algebra, std::move(dims), std::move(acts), "P" + std::to_string(vertex + 1));
}

Module injective(const AlgebraPtr& algebra, std::size_t vertex) {
  const auto& alg = *algebra;
  if (vertex >= alg.vertex_count()) throw ContractViolation("injective: vertex out of range");
  const Scalar p = alg.modulus();
  const auto nv = alg.vertex_count();
  std::vector<std::size_t> dims(nv);
  std::vector<std::size_t> pos(alg.dimension(), 0);
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& paths = alg.basis_between(j, vertex);
    dims[j] = paths.size();
    for (std::size_t k = 0; k < paths.size(); ++k) pos[paths[k]] = k;
  }
  // Vertex j carries the dual of span{paths j -> i}; arrow a: j -> k sends a
  // functional φ to q ↦ φ(a·q).
  std::vector<Matrix> acts;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    Matrix m(p, dims[arr.target], dims[arr.source]);
    const auto& to = alg.basis_between(arr.target, vertex);
    for (std::size_t r = 0; r < to.size(); ++r) {
      Path ext{arr.source, {a}};
      const auto& q = alg.basis()[to[r]].arrows;
      ext.arrows.insert(ext.arrows.end(), q.begin(), q.end());
      for (const auto& [idx, c] : alg.reduce(ext)) m(r, pos[idx]) = fp::add(m(r, pos[idx]), c, p);
    }
    acts.push_back(std::move(m));
  }
  return Module(algebra, std::move(dims), std::move(acts), "I" + std::to_string(vertex + 1));
}

Module simple(const AlgebraPtr& algebra, std::size_t vertex) {
  if (vertex >= algebra->vertex_count()) throw ContractViolation("simple: vertex out of range");
  std::vector<std::size_t> dims(algebra->vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> acts;
  for (const auto& arr : algebra->quiver().arrows()) acts.emplace_back(algebra->modulus(), dims[arr.target], dims[arr.source]);
  return Module(algebra, std::move(dims), std::move(acts), "S" + std::to_string(vertex + 1));
}

std::vector<Module> projectives(const AlgebraPtr& algebra) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) out.push_back(projective(algebra, v));
  return out;
}

std::vector<Module> injectives(const AlgebraPtr& algebra) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) out.push_back(injective(algebra, v));
  return out;
}

std::vector<Module> simples(const AlgebraPtr& algebra) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) out.push_back(simple(algebra, v));
  return out;
}

DirectSum dual_regular(const AlgebraPtr& algebra) {
  auto s = direct_sum(algebra, injectives(algebra));
  s.object.set_name("D(A)");
  return s;
}

DirectSum regular(const AlgebraPtr& algebra) {
  auto s = direct_sum(algebra, projectives(algebra));
  s.object.set_name("A");
  return s;
}

}  // namespace relhom
