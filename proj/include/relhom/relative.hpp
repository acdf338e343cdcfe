#pragma once

// Subcategories add(G_1, ..., G_k), their approximations, proper
// (co)resolutions and relative Ext computed from either side.
//
// Resolutions always use minimal approximations, so syzygies are determined
// up to isomorphism by the base module. That is what makes a repeated
// syzygy a certificate of infinite resolution dimension.

#include <optional>
#include <string>
#include <vector>

#include "relhom/complex.hpp"
#include "relhom/module.hpp"

namespace relhom {

enum class SideRole { contravariant, covariant, both };

struct Subcategory {
  std::string name;
  std::vector<Module> generators;
  SideRole role = SideRole::both;
  bool contains_projectives = false;
  bool contains_injectives = false;

  /// Validates the generators (nonzero, one algebra) and fills in the flags.
  static Subcategory make(std::string name, std::vector<Module> generators, SideRole role = SideRole::both);
  const AlgebraPtr& algebra() const { return generators.front().algebra(); }
  std::optional<SplittingWitness> membership(const Module& m) const { return add_membership(m, generators); }
  bool contains(const Module& m) const { return membership(m).has_value(); }
};

Subcategory projective_subcategory(const AlgebraPtr& algebra);
Subcategory injective_subcategory(const AlgebraPtr& algebra);

struct BalancedPair {
  std::string name;
  Subcategory x;
  Subcategory y;
};

BalancedPair classical_pair(const AlgebraPtr& algebra);

// ---------------------------------------------------------------------------
// Approximations

/// Evaluation map; every map from a generator into m factors through it.
Morphism right_approximation(const Module& m, const Subcategory& x);
/// Coevaluation map; every map from m to a generator factors through it.
Morphism left_approximation(const Module& m, const Subcategory& y);
Morphism minimal_right_approximation(const Module& m, const Subcategory& x);
Morphism minimal_left_approximation(const Module& m, const Subcategory& y);

/// Re-checks the factorization property on hom bases of every generator.
bool verify_right_approximation(const Morphism& f, const Subcategory& x);
bool verify_left_approximation(const Morphism& f, const Subcategory& y);

struct AdmissibilityReport {
  bool admissible = true;
  std::string reason;
  std::vector<std::string> failures;  // modules whose approximation is not epi (mono)
};

/// Every right approximation of a corpus module is epi.
AdmissibilityReport is_admissible(const Subcategory& x, const std::vector<Module>& corpus);
/// Every left approximation of a corpus module is mono.
AdmissibilityReport is_coadmissible(const Subcategory& y, const std::vector<Module>& corpus);

// ---------------------------------------------------------------------------
// Resolutions

enum class Direction { resolution, coresolution };

/// X_k -> ... -> X_0 -> M (terms in degree -k) or N -> Y^0 -> ... -> Y^k.
struct Resolution {
  Direction direction = Direction::resolution;
  Module base;
  Complex complex;
  Morphism augmentation;  // X^0 -> M, or N -> Y^0
  /// syzygies[k] = Ker d^{-k+1} (resolution) or Coker d^{k-2} (coresolution);
  /// syzygies[0] is the base. One more than the number of terms.
  std::vector<Module> syzygies;
  /// Structure maps of the syzygies: Ω_{k+1} -> X_k, or Y^k -> Ω^{k+1}.
  std::vector<Morphism> syzygy_maps;
  std::size_t depth = 0;  // requested number of differentials
  bool finite = false;    // some syzygy vanished
  std::string subcategory;

  std::size_t terms() const { return complex.terms().size(); }
  /// X-term with index k >= 0 (degree -k or k).
  const Module& term(std::size_t k) const;
  /// Bounded exact complex 0 -> Ω_last -> X_last -> ... -> X_0 -> M -> 0
  /// (or its dual); this is what acyclicity certificates are computed on.
  Complex augmented() const;
};

/// Minimal X-resolution with `depth` differentials (depth+1 terms) unless it
/// terminates first. Throws AdmissibilityFailure on a non-epi approximation.
Resolution proper_resolution(const Module& m, const Subcategory& x, std::size_t depth);
/// Dual; throws AdmissibilityFailure on a non-mono approximation.
Resolution proper_coresolution(const Module& n, const Subcategory& y, std::size_t depth);

/// Right-X acyclicity of the augmented complex, plus left-Y when y is given.
struct ResolutionCertificate {
  RelAcyclicityReport right;
  std::optional<RelAcyclicityReport> left;
  bool ok() const { return right.acyclic && (!left || left->acyclic); }
};

ResolutionCertificate certify(const Resolution& r, const Subcategory& x, const Subcategory* y = nullptr);

// ---------------------------------------------------------------------------
// Relative Ext

enum class Via { x, y, both };

/// dim Ext^i via an X-resolution of m: H^i Hom(X•, n). Throws
/// DepthInsufficient unless the resolution reaches X_{i+1} or terminated.
std::size_t ext_via_resolution(const Resolution& res_m, const Module& n, std::size_t i);
/// dim Ext^i via a Y-coresolution of n: H^i Hom(m, Y•).
std::size_t ext_via_coresolution(const Module& m, const Resolution& cores_n, std::size_t i);

struct ExtTable {
  std::string m;
  std::string n;
  std::size_t max_degree = 0;
  std::vector<std::size_t> via_x;  // index i-1
  std::vector<std::size_t> via_y;
  bool balanced = true;
};

/// Degrees 1..max_degree. i must be >= 1; depth must be >= max_degree + 1.
ExtTable rel_ext(const Module& m, const Module& n, const BalancedPair& pair, std::size_t max_degree, Via via,
                 std::size_t depth);
std::size_t rel_ext_dim(const Module& m, const Module& n, const BalancedPair& pair, std::size_t i, std::size_t depth);

enum class Execution { serial, parallel };

/// Tables for every ordered corpus pair, resolutions shared across pairs.
/// The parallel path distributes modules and pairs over OpenMP threads; the
/// result is identical to the serial one.
std::vector<ExtTable> ext_tables(const BalancedPair& pair, const std::vector<Module>& corpus, std::size_t max_degree,
                                 std::size_t depth, Execution execution = Execution::parallel);

// ---------------------------------------------------------------------------
// Resolution dimensions

struct Periodicity {
  std::size_t start = 0;   // syzygy index j
  std::size_t period = 0;  // k with Ω_{j+k} ≅ Ω_j
  Morphism witness;        // Ω_{j+k} -> Ω_j
};

/// Least period among the nonzero syzygies outside add(sub), if any.
std::optional<Periodicity> detect_periodicity(const Resolution& r, const Subcategory& sub);

struct DimReport {
  Module base;
  std::string subcategory;
  std::size_t cap = 0;
  /// Least n <= cap with Ω_n in add(sub); empty means ">= cap+1".
  std::optional<std::size_t> dimension;
  std::optional<SplittingWitness> witness;
  /// dim Ext^{n+1}(M, Ω_{n+1}) (or Ext^{n+1}(Ω^{n+1}, N)) for n = 0..cap.
  std::vector<std::size_t> vanishing_test;
  std::optional<std::size_t> cross_check;
  bool consistent = true;
  std::optional<Periodicity> periodicity;
  Resolution resolution;

  bool infinite_certified() const { return periodicity.has_value(); }
  std::string describe() const;
};

DimReport resolution_dimension(const Module& m, const Subcategory& x, std::size_t cap);
DimReport coresolution_dimension(const Module& n, const Subcategory& y, std::size_t cap);

// ---------------------------------------------------------------------------
// Balanced pairs

struct StarCertificate {
  RelAcyclicityReport right;
  RelAcyclicityReport left;
  bool star() const { return right.acyclic && left.acyclic; }
};

/// Right-X and left-Y acyclicity of a complex.
StarCertificate star_acyclicity(const Complex& c, const BalancedPair& pair);
StarCertificate star_acyclicity(const ShortExactSequence& s, const BalancedPair& pair);

struct ObjectCertificate {
  std::string object;
  bool ok = false;
  std::string detail;
};

struct BalancedPairReport {
  std::string pair;
  AdmissibilityReport x_admissible;
  AdmissibilityReport y_coadmissible;
  bool admissibility_agrees = true;
  std::vector<ObjectCertificate> resolutions;    // condition (2)
  std::vector<ObjectCertificate> coresolutions;  // condition (3)
  std::size_t samples = 0;
  std::size_t star_samples = 0;  // samples that were acyclic on both sides
  std::vector<std::string> mismatches;
  bool passed = false;
};

BalancedPairReport verify_balanced_pair(const BalancedPair& pair, const std::vector<Module>& corpus, std::size_t depth,
                                        std::size_t samples, std::uint64_t seed);

}  // namespace relhom
