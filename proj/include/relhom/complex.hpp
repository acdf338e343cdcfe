#pragma once

// Bounded cochain complexes of modules, d^n: C^n -> C^{n+1}.
//
// Hom complexes use D(φ) = d_A∘φ − (−1)^n φ∘d_X on degree-n families
// φ_i: X^i -> A^{i+n}, so degree-0 cycles are chain maps and D(h) for a
// degree −1 family h is d h + h d. Homotopies follow f − g = d h + h d.

#include <optional>
#include <string>
#include <vector>

#include "relhom/module.hpp"

namespace relhom {

class Complex {
 public:
  Complex() = default;
  /// Terms in degrees lo, lo+1, ...; diffs[k] is d^{lo+k} (one fewer than terms).
  Complex(AlgebraPtr algebra, int lo, std::vector<Module> terms, std::vector<Morphism> diffs);

  static Complex zero(const AlgebraPtr& algebra);
  static Complex stalk(const Module& m, int degree);
  /// Two-term complex f: source in degree `degree`, target in degree+1.
  static Complex two_term(const Morphism& f, int degree);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const noexcept { return terms_.empty(); }
  /// Term in degree n; the zero module outside the support.
  const Module& term(int n) const;
  /// d^n; the zero map outside the support.
  Morphism differential(int n) const;
  const std::vector<Module>& terms() const noexcept { return terms_; }

  /// Shapes, intertwining and d∘d = 0.
  std::optional<std::string> violation() const;

  /// X[k]^n = X^{n+k}, d_{X[k]} = (−1)^k d_X.
  Complex shift(int k) const;
  /// Drops zero terms at both ends.
  Complex trimmed() const;
  /// Lowest and highest degrees with a nonzero term; width 0 for the zero complex.
  int width() const;
  int lowest_nonzero() const;
  int highest_nonzero() const;
  /// Brutal truncations σ^{>j} and σ^{<j}.
  Complex above(int j) const;
  Complex below(int j) const;

 private:
  AlgebraPtr algebra_;
  int lo_ = 0;
  std::vector<Module> terms_;
  std::vector<Morphism> diffs_;
  Module zero_;
};

/// Components indexed by the source's degrees lo..hi.
struct ChainMap {
  Complex source;
  Complex target;
  std::vector<Morphism> components;

  Morphism at(int n) const;
  std::optional<std::string> violation() const;
  static ChainMap identity(const Complex& c);
  static ChainMap zero(const Complex& s, const Complex& t);
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap difference(const ChainMap& f, const ChainMap& g);

/// Degree −1 family h_n: X^n -> A^{n−1}, indexed by the source's degrees.
struct Homotopy {
  std::vector<Morphism> maps;
};

/// Checks f − g = d h + h d exactly.
bool verify_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& h);

// ---------------------------------------------------------------------------
// Graded vector spaces

struct VectorComplex {
  int lo = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;  // diffs[k]: degree lo+k -> lo+k+1

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
};

struct Cohomology {
  int lo = 0;
  std::vector<std::size_t> dims;

  std::size_t at(int n) const;
  bool vanishes() const;
};

Cohomology cohomology(const VectorComplex& c);

/// Hom complex of module complexes with coordinate conversion for families.
class HomComplex {
 public:
  HomComplex(const Complex& x, const Complex& a);

  int lo() const noexcept { return vc_.lo; }
  int hi() const noexcept { return vc_.hi(); }
  std::size_t dim(int n) const;
  /// D^n as a matrix; zero-size outside the range.
  Matrix differential(int n) const;
  const VectorComplex& vector_complex() const noexcept { return vc_; }
  Cohomology cohomology() const { return relhom::cohomology(vc_); }

  /// Families are indexed by the degrees of x (x.lo() .. x.hi()).
  std::vector<Scalar> coordinates(int n, const std::vector<Morphism>& family) const;
  std::vector<Morphism> family(int n, const std::vector<Scalar>& coords) const;

  const Complex& source() const noexcept { return x_; }
  const Complex& target() const noexcept { return a_; }

 private:
  const std::vector<HomSpace>& spaces(int n) const;

  Complex x_;
  Complex a_;
  std::vector<std::vector<HomSpace>> spaces_;
  std::vector<std::vector<std::size_t>> offsets_;
  VectorComplex vc_;
};

// ---------------------------------------------------------------------------
// Cones, acyclicity, homotopies

struct ConeResult {
  Complex cone;
  ChainMap from_target;  // Y -> cone(f)
  ChainMap to_shift;     // cone(f) -> X[1]
};

/// C^n = X^{n+1} ⊕ Y^n with d = [[−d_X, 0], [f, d_Y]].
ConeResult cone(const ChainMap& f);

struct DirectSumComplex {
  Complex complex;
  std::vector<ChainMap> injections;
  std::vector<ChainMap> projections;
};

DirectSumComplex direct_sum(const std::vector<Complex>& parts);

struct AcyclicityReport {
  int lo = 0;
  std::vector<std::size_t> homology;  // total dimension per degree
  bool acyclic = true;
};

AcyclicityReport homology(const Complex& c);
bool is_acyclic(const Complex& c);

enum class Side { right, left };

/// Hom(G, C) with degree n = Hom(G, C^n).
VectorComplex hom_from(const Module& g, const Complex& c);
/// Hom(C, G) with degree n = Hom(C^{−n}, G).
VectorComplex hom_into(const Complex& c, const Module& g);

struct RelAcyclicityReport {
  Side side = Side::right;
  std::vector<std::string> generators;
  std::vector<Cohomology> tables;  // one per generator
  bool acyclic = true;
  std::string failure;  // first failing generator and degree
};

/// Right: Hom(G, c) acyclic for every G; left: Hom(c, G) acyclic.
RelAcyclicityReport is_rel_acyclic(const Complex& c, Side side, const std::vector<Module>& generators);

/// 0 -> A -> B -> C -> 0 in degrees −1, 0, 1.
Complex as_complex(const ShortExactSequence& s);

std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g);
bool is_null_homotopic(const ChainMap& f);
/// H^n(f) bijective in every degree, from ranks on cycles and boundaries.
/// Independent of the cone.
bool is_quasi_isomorphism(const ChainMap& f);

struct HomotopyInverse {
  RelAcyclicityReport cone_report;
  bool precondition_met = false;
  std::optional<ChainMap> inverse;
  std::optional<Homotopy> fg_to_identity;
  /// Present when both complexes have terms in add(generators).
  std::optional<Homotopy> gf_to_identity;
  bool two_sided_checked = false;
  std::string note;
};

/// For f: A -> X with X in add(generators) degreewise and cone(f) right
/// acyclic, solves jointly for a chain map g: X -> A and h with
/// f g − id = d h + h d, then re-verifies both homotopies from scratch.
HomotopyInverse homotopy_inverse_certificate(const ChainMap& f, const std::vector<Module>& generators);

// ---------------------------------------------------------------------------
// Random complexes

class Rng;

/// Terms drawn from `pool` (sums of up to `max_summands` copies), degrees
/// lo .. lo+width−1, with generic differentials satisfying d∘d = 0.
Complex random_complex(Rng& rng, const std::vector<Module>& pool, int lo, int width, std::size_t max_summands = 2);
/// Uniform degree-0 cycle of Hom(x, a), i.e. a random chain map.
ChainMap random_chain_map(Rng& rng, const Complex& x, const Complex& a);
/// Contractible complex M --id--> M in degrees n, n+1.
Complex contractible(const Module& m, int degree);

}  // namespace relhom
