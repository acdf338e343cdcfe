#pragma once

// Finite-dimensional representations of a bound quiver and their morphisms.
//
// A module stores one vector space per vertex (by dimension) and one matrix
// per arrow a: s -> t of shape dims[t] x dims[s]. A morphism stores one block
// per vertex. Both are plain values; the algebra is shared.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relhom/linalg.hpp"
#include "relhom/quiver.hpp"

namespace relhom {

class Module {
 public:
  Module() = default;
  /// Shapes are checked; relations are not (see relation_violation).
  Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> actions, std::string name = {});

  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  Scalar modulus() const { return algebra_->modulus(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const noexcept { return total_; }
  bool is_zero() const noexcept { return total_ == 0; }
  const Matrix& action(std::size_t arrow) const { return actions_.at(arrow); }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }
  /// Offset of vertex v inside the concatenated total space.
  std::size_t offset(std::size_t v) const { return offsets_.at(v); }

  const std::string& name() const noexcept { return name_; }
  Module& set_name(std::string n) {
    name_ = std::move(n);
    return *this;
  }
  Module named(std::string n) const {
    Module m = *this;
    m.name_ = std::move(n);
    return m;
  }
  std::string label() const;

  /// Matrix of a path (arrows in traversal order) acting from its source to its target.
  Matrix path_action(const Path& p) const;
  /// First relation not annihilating the representation, if any.
  std::optional<std::string> relation_violation() const;

  /// Same algebra object, dims and arrow matrices; names are ignored.
  friend bool operator==(const Module& a, const Module& b) {
    return a.algebra_ == b.algebra_ && a.dims_ == b.dims_ && a.actions_ == b.actions_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::vector<Matrix> actions_;
  std::size_t total_ = 0;
  std::string name_;
};

class Morphism {
 public:
  Morphism() = default;
  /// Shapes are checked; commutativity is not (see intertwining_violation).
  Morphism(Module source, Module target, std::vector<Matrix> blocks);

  static Morphism zero(const Module& source, const Module& target);
  static Morphism identity(const Module& m);

  const Module& source() const noexcept { return source_; }
  const Module& target() const noexcept { return target_; }
  const Matrix& block(std::size_t v) const { return blocks_.at(v); }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }

  std::optional<std::string> intertwining_violation() const;

  bool is_zero() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const { return is_mono() && is_epi(); }
  std::size_t rank() const;
  /// All entries, vertex by vertex, row-major within a block.
  std::vector<Scalar> flatten() const;
  /// Block-diagonal matrix on the total spaces.
  Matrix total_matrix() const;

  Morphism scaled(Scalar c) const;
  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  Morphism operator-() const { return scaled(source_.modulus() - 1); }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
  }

 private:
  Module source_;
  Module target_;
  std::vector<Matrix> blocks_;
};

/// Composition g ∘ f (f first).
Morphism operator*(const Morphism& g, const Morphism& f);

/// Rebuilds a morphism from a block-diagonal total matrix.
Morphism morphism_from_total(const Module& source, const Module& target, const Matrix& total);

// ---------------------------------------------------------------------------
// Hom spaces

/// Hom(source, target) as the solution space of the commuting squares. The
/// basis is the canonical null-space basis, so coordinates of a morphism are
/// its entries at `free` positions of the flattened block vector.
class HomSpace {
 public:
  HomSpace(const Module& source, const Module& target);

  const Module& source() const noexcept { return source_; }
  const Module& target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Morphism>& basis() const noexcept { return basis_; }

  Morphism element(const std::vector<Scalar>& coords) const;
  /// Coordinates of a morphism between the same modules. The morphism must
  /// intertwine; this is not rechecked.
  std::vector<Scalar> coordinates(const Morphism& f) const;

 private:
  Module source_;
  Module target_;
  std::vector<Morphism> basis_;
  std::vector<std::size_t> free_;
};

std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

/// Matrix (columns = images of basis vectors, in coordinates) of the linear
/// map Hom(G, X) -> Hom(G, Y), φ ↦ f∘φ.
Matrix post_composition(const HomSpace& from, const HomSpace& to, const Morphism& f);
/// Matrix of Hom(Y, G) -> Hom(X, G), φ ↦ φ∘f.
Matrix pre_composition(const HomSpace& from, const HomSpace& to, const Morphism& f);

/// h with g ∘ h = f (f: X -> Z, g: Y -> Z), when it exists.
std::optional<Morphism> factor_through(const Morphism& f, const Morphism& g);
/// h with h ∘ g = f (f: X -> Z, g: X -> Y), when it exists.
std::optional<Morphism> factor_from(const Morphism& f, const Morphism& g);

// ---------------------------------------------------------------------------
// Abelian structure

struct KernelResult {
  Module object;
  Morphism inclusion;
};
struct CokernelResult {
  Module object;
  Morphism projection;
};
struct ImageResult {
  Module object;
  Morphism inclusion;    // image -> target
  Morphism corestriction;  // source -> image
};

KernelResult kernel(const Morphism& f);
CokernelResult cokernel(const Morphism& f);
ImageResult image(const Morphism& f);
/// rad M = sum of the images of all arrows, with its inclusion.
KernelResult radical(const Module& m);
/// M / rad^k M.
CokernelResult radical_quotient(const Module& m, std::size_t k);

struct DirectSum {
  Module object;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Module>& parts);
/// Module underlying direct_sum(parts); cheaper when no structure maps are needed.
Module direct_sum_object(const AlgebraPtr& algebra, const std::vector<Module>& parts);
/// [f_1 ... f_k]: ⊕ sources -> target.
Morphism row_morphism(const DirectSum& sources, const std::vector<Morphism>& parts, const Module& target);
/// [g_1; ...; g_k]: source -> ⊕ targets.
Morphism column_morphism(const Module& source, const DirectSum& targets, const std::vector<Morphism>& parts);
/// f ⊕ g.
Morphism diagonal_morphism(const DirectSum& sources, const DirectSum& targets, const std::vector<Morphism>& parts);

struct ShortExactSequence {
  Morphism left;   // A -> B, mono
  Morphism right;  // B -> C, epi

  const Module& first() const { return left.source(); }
  const Module& middle() const { return left.target(); }
  const Module& last() const { return right.target(); }
  /// Composable, left mono, right epi, exact in the middle.
  std::optional<std::string> exactness_violation() const;
  bool is_split() const;
};

struct PullbackResult {
  Module object;
  Morphism to_middle;  // P -> B (the map parallel to alpha)
  Morphism to_base;    // P -> N' (the map parallel to g)
  std::optional<ShortExactSequence> induced;
};

/// Pullback of g: B -> N along alpha: N' -> N. When `row` (ending in g) is
/// given, also returns the induced sequence 0 -> A -> P -> N' -> 0.
PullbackResult pullback(const Morphism& g, const Morphism& alpha, const std::optional<ShortExactSequence>& row = {});

struct PushoutResult {
  Module object;
  Morphism from_middle;  // B -> Q
  Morphism from_base;    // D -> Q
  std::optional<ShortExactSequence> induced;
};

/// Pushout of f: L -> B along s: L -> D. When `row` (starting with f) is
/// given, also returns the induced sequence 0 -> D -> Q -> C -> 0.
PushoutResult pushout(const Morphism& f, const Morphism& s, const std::optional<ShortExactSequence>& row = {});

/// Evaluation map ⊕_G G^{dim Hom(G,m)} -> m over a hom basis per generator.
/// Every map from a generator to m factors through it.
Morphism evaluation_map(const std::vector<Module>& generators, const Module& m);
/// Dual: m -> ⊕_G G^{dim Hom(m,G)}; every map from m to a generator factors through it.
Morphism coevaluation_map(const std::vector<Module>& generators, const Module& m);

struct SplittingWitness {
  Morphism approximation;  // G' -> m
  Morphism section;        // m -> G', approximation ∘ section = id
};

std::optional<SplittingWitness> add_membership(const Module& m, const std::vector<Module>& generators);

struct IsoSearchOptions {
  std::size_t samples = 256;
  std::uint64_t seed = 0x150;
  std::uint64_t exhaustive_limit = 1u << 14;
};

enum class IsoVerdict { isomorphic, not_isomorphic, undecided };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::undecided;
  std::optional<Morphism> witness;
  std::string reason;
};

/// Exact when it returns a witness or a failed necessary condition; otherwise
/// `undecided` after an exhaustive or sampled search of Hom(m, n).
IsoResult find_isomorphism(const Module& m, const Module& n, const IsoSearchOptions& options = {});
bool isomorphic(const Module& m, const Module& n);

struct MinimalReduction {
  Morphism reduced;
  Module discarded;
  /// Inclusion of the source of `reduced` into the original source (right
  /// version) or projection of the original target onto the new one (left).
  Morphism comparison;
};

/// Strips summands of the source on which f vanishes, until
/// {t ∈ End(source) : f t = 0} is a nilpotent ideal, which is exactly right minimality.
MinimalReduction right_minimal_reduction(const Morphism& f);
/// Dual: strips target summands, until {t : t f = 0} is nilpotent.
MinimalReduction left_minimal_reduction(const Morphism& f);
bool is_right_minimal(const Morphism& f);
bool is_left_minimal(const Morphism& f);

/// Total-space matrices of End(m) basis elements.
std::vector<Matrix> endomorphism_matrices(const Module& m);

// ---------------------------------------------------------------------------
// Standard modules of the algebra

Module projective(const AlgebraPtr& algebra, std::size_t vertex);
Module injective(const AlgebraPtr& algebra, std::size_t vertex);
Module simple(const AlgebraPtr& algebra, std::size_t vertex);
/// D(A_A) = ⊕ I(i), with its injections.
DirectSum dual_regular(const AlgebraPtr& algebra);
DirectSum regular(const AlgebraPtr& algebra);

std::vector<Module> projectives(const AlgebraPtr& algebra);
std::vector<Module> injectives(const AlgebraPtr& algebra);
std::vector<Module> simples(const AlgebraPtr& algebra);

}  // namespace relhom
