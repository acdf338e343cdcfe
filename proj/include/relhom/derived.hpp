#pragma once

// Finite surrogates for statements in the relative derived category: lifting
// bounded complexes into K^b(X) (or K^b(Y)), Gorenstein and singularity
// verdicts, and the comparison of relative Ext with morphisms of complexes.
// Quotient categories are never built; every verdict is one of the criteria
// that are equivalent to it.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relhom/relative.hpp"

namespace relhom {

struct HomotopyFactorization {
  ChainMap map;
  Homotopy homotopy;
};

/// Solves for a chain map f: s -> t and a degree −1 family h: p -> q with
/// apply(f) − rhs = d h + h d, where `apply` is linear in f and takes chain
/// maps s -> t to maps p -> q. Returns nothing when no such f exists.
std::optional<HomotopyFactorization> factor_up_to_homotopy(const Complex& s, const Complex& t,
                                                           const std::function<ChainMap(const ChainMap&)>& apply,
                                                           const ChainMap& rhs);

/// Homotopy inverse ψ of φ with both composites homotopic to the identity,
/// re-verified from scratch.
struct HomotopyEquivalence {
  std::optional<ChainMap> inverse;
  std::optional<Homotopy> left;   // φψ ≃ id
  std::optional<Homotopy> right;  // ψφ ≃ id
  bool ok() const { return inverse && left && right; }
};
HomotopyEquivalence homotopy_equivalence(const ChainMap& phi);

/// q: Q• -> M (stalk in degree 0) against the minimal X-resolution P• -> M of
/// the given depth: solves φ: Q• -> P• over M up to homotopy and certifies φ as
/// a homotopy equivalence.
HomotopyEquivalence compare_with_resolution(const ChainMap& q, const Subcategory& x, std::size_t depth);

struct Lift {
  Side side = Side::right;
  Complex input;
  Complex output;
  /// right: output -> input; left: input -> output.
  ChainMap map;
  /// Cone of `map`, right acyclic against the X generators (left: left
  /// acyclic against the Y generators), recomputed after construction.
  RelAcyclicityReport certificate;
  std::size_t steps = 0;  // cones glued
  std::vector<std::pair<std::string, std::size_t>> term_dimensions;
  bool certified() const { return certificate.acyclic; }
};

/// Right X-quasi-isomorphism X• -> y_complex with X• in K^b(X), by induction
/// on the width splitting off the lowest nonzero term. Throws
/// PreconditionFailure naming the term when some X-resdim exceeds cap.
Lift lift_to_x(const Complex& y_complex, const Subcategory& x, std::size_t cap);
/// Dual: left Y-quasi-isomorphism x_complex -> Y• with Y• in K^b(Y).
Lift lift_to_y(const Complex& x_complex, const Subcategory& y, std::size_t cap);

enum class Inclusion { y_in_x, x_in_y };

struct InclusionReport {
  Inclusion direction = Inclusion::y_in_x;
  bool hypothesis_met = true;
  std::vector<std::pair<std::string, std::string>> dimensions;  // generator, resdim or coresdim
  std::size_t lifts = 0;
  std::size_t certified = 0;
  std::vector<std::string> failures;
  bool holds() const { return hypothesis_met && failures.empty() && certified == lifts; }
};

/// K^b(Y) ⊆ K^b(X) (or the reverse): the finite-dimension hypothesis on the
/// generators, then certified lifts of stalks, two-term complexes and
/// `samples` random complexes of width <= 4 built from the generators.
InclusionReport kb_inclusion(const BalancedPair& pair, Inclusion direction, std::size_t cap, std::size_t samples,
                             std::uint64_t seed);

struct GorensteinReport {
  std::string algebra;
  std::vector<std::pair<std::string, std::string>> pd_injectives;  // pd I(i)
  std::vector<std::pair<std::string, std::string>> id_projectives; // id P(i)
  std::optional<std::size_t> pd_dual;     // pd D(A_A), when <= cap
  std::optional<std::size_t> id_regular;  // id A_A, when <= cap
  bool injective_stalks_lift = false;   // K^b(inj) ⊆ K^b(proj), constructively
  bool projective_stalks_lift = false;  // K^b(proj) ⊆ K^b(inj)
  /// The lift of D(A_A) is homotopy equivalent to its projective resolution.
  std::optional<bool> resolution_equivalence;
  std::vector<std::string> notes;
  bool consistent() const {
    return pd_dual.has_value() == injective_stalks_lift && id_regular.has_value() == projective_stalks_lift;
  }
  bool gorenstein() const { return pd_dual && id_regular; }
};

GorensteinReport gorenstein_report(const AlgebraPtr& algebra, std::size_t cap);

enum class SingularityKind { trivial, nontrivial_witness, undecided_at_cap };
std::string to_string(SingularityKind k);

struct ObjectWitness {
  std::string object;
  std::string dimension;  // DimReport::describe
  bool finite = false;
  bool periodic = false;
};

struct SingularityVerdict {
  std::string pair;
  SingularityKind right = SingularityKind::undecided_at_cap;  // X side
  SingularityKind left = SingularityKind::undecided_at_cap;   // Y side
  std::vector<ObjectWitness> resolutions;
  std::vector<ObjectWitness> coresolutions;
  /// X-resdim of the Y generators and Y-coresdim of the X generators are
  /// finite; then both quotients coincide. Evidence: lifts both ways.
  bool equality_hypotheses = false;
  std::optional<bool> equality_evidence;
  std::string summary() const;
};

SingularityVerdict singularity_verdict(const BalancedPair& pair, const std::vector<Module>& corpus, std::size_t cap,
                                       std::size_t samples = 4, std::uint64_t seed = 1);

struct ExtDerivedCheck {
  std::string m;
  std::string n;
  std::size_t degree = 0;
  std::size_t ext = 0;      // relative Ext from the resolution
  std::size_t derived = 0;  // H^i Hom(X_M•, N)
  bool agree() const { return ext == derived; }
};

/// Compares dim Ext^i_*(m, n) with the chain maps X_M• -> N[i] modulo
/// homotopy. Throws DepthInsufficient when depth < i+1.
ExtDerivedCheck ext_derived_crosscheck(const Module& m, const Module& n, const BalancedPair& pair, std::size_t i,
                                       std::size_t depth);

}  // namespace relhom
