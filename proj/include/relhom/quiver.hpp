#pragma once

// Bound quiver algebras A = kQ/I over F_p.
//
// Paths list their arrows in traversal order: the path "a then b" for
// a: 1 -> 2, b: 2 -> 3 is {a, b}. Vertices are 0-based in code and 1-based
// in names and files (S1, P1, ...).

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relhom/linalg.hpp"

namespace relhom {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  /// Throws InputError for unknown labels.
  std::size_t arrow_index(std::string_view label) const;

 private:
  std::size_t vertices_ = 0;
  std::vector<Arrow> arrows_;
};

struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  std::size_t target(const Quiver& q) const { return arrows.empty() ? source : q.arrow(arrows.back()).target; }
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Sparse linear combination of basis paths: (basis index, coefficient).
using PathVector = std::vector<std::pair<std::size_t, Scalar>>;

struct RelationTerm {
  std::vector<std::string> labels;
  long long coeff = 1;
};
using Relation = std::vector<RelationTerm>;

class Algebra {
 public:
  /// Builds the path basis of kQ/(I + J^{cap+1}) by row-reducing the ideal
  /// spanned by u·r·v in deg-lex order (longer paths lead). Rejects with
  /// InputError when a relation is not admissible or when some path of
  /// length cap+1 survives, which signals an infinite-dimensional algebra or
  /// a cap that is too small.
  static std::shared_ptr<const Algebra> build(PrimeField field, Quiver quiver, std::vector<Relation> relations,
                                              std::size_t cap, std::string name = {});

  const std::string& name() const noexcept { return name_; }
  const PrimeField& field() const noexcept { return field_; }
  Scalar modulus() const noexcept { return field_.modulus(); }
  const Quiver& quiver() const noexcept { return quiver_; }
  std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
  std::size_t arrow_count() const noexcept { return quiver_.arrows().size(); }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t cap() const noexcept { return cap_; }

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Path>& basis() const noexcept { return basis_; }
  /// Indices of basis paths from `from` to `to`.
  const std::vector<std::size_t>& basis_between(std::size_t from, std::size_t to) const;

  /// Normal form of an arbitrary path; zero beyond the cap.
  PathVector reduce(const Path& path) const;
  /// Product "a then b" of two basis paths.
  PathVector multiply(std::size_t a, std::size_t b) const;
  /// Relations as linear combinations of paths (validated).
  const std::vector<std::vector<std::pair<Path, Scalar>>>& relation_paths() const noexcept { return relation_paths_; }

  std::string path_name(const Path& p) const;

 private:
  Algebra() = default;

  std::string name_;
  PrimeField field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<std::vector<std::pair<Path, Scalar>>> relation_paths_;
  std::size_t cap_ = 0;
  std::vector<Path> basis_;
  std::vector<std::vector<std::vector<std::size_t>>> between_;
  std::map<Path, PathVector> normal_forms_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace relhom
