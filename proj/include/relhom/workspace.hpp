#pragma once

// Workspaces: an algebra with named modules, morphisms, complexes,
// subcategories, balanced pairs and cotorsion specs, a corpus and run
// settings. Stored as JSON with header `schema: "relhom/1"`; see
// docs/workspace-schema.md.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "relhom/complex.hpp"
#include "relhom/cotorsion.hpp"
#include "relhom/relative.hpp"

namespace relhom {

inline constexpr const char* kSchema = "relhom/1";

struct Settings {
  std::size_t depth = 6;    // resolution depth; Ext up to depth-1
  std::size_t cap = 4;      // resdim / lifting cap
  std::size_t samples = 8;  // random complexes and sequences per check
  std::uint64_t seed = 1;
  friend bool operator==(const Settings&, const Settings&) = default;
};

struct NamedModule {
  Module module;
  /// Operation that added the module to the corpus during a run; empty for
  /// modules that were part of the input.
  std::string origin;
};

struct NamedMorphism {
  std::string name;
  std::string source;
  std::string target;
  Morphism morphism;
};

struct NamedComplex {
  std::string name;
  std::vector<std::string> terms;
  Complex complex;
};

/// refs are module names or one of builtin:proj, builtin:inj, builtin:all.
struct NamedSubcategory {
  std::vector<std::string> refs;
  Subcategory sub;
};

struct NamedPair {
  std::string x;
  std::string y;
  BalancedPair pair;
};

struct NamedCotorsion {
  std::string pair;
  std::vector<std::string> c;
  std::vector<std::string> d;
  CotorsionSpec spec;
};

class Workspace {
 public:
  AlgebraPtr algebra;
  std::vector<NamedModule> modules;
  std::vector<NamedMorphism> morphisms;
  std::vector<NamedComplex> complexes;
  std::vector<NamedSubcategory> subcategories;
  std::vector<NamedPair> pairs;
  std::vector<NamedCotorsion> cotorsion;
  std::vector<std::string> corpus;
  Settings settings;

  /// Lookups throw InputError naming the missing entry.
  const Module& module(const std::string& name) const;
  const Morphism& morphism(const std::string& name) const;
  const Complex& complex(const std::string& name) const;
  const Subcategory& subcategory(const std::string& name) const;
  const BalancedPair& pair(const std::string& name) const;
  const CotorsionSpec& cotorsion_spec(const std::string& name) const;
  bool has_module(const std::string& name) const;

  std::vector<Module> corpus_modules() const;

  /// Adds m to the modules and the corpus unless the corpus already holds an
  /// isomorphic module. Returns the name of the corpus entry (new or old).
  std::string extend_corpus(const Module& m, const std::string& name, const std::string& origin);
  /// Corpus entries added by extend_corpus, with their origins.
  std::vector<std::pair<std::string, std::string>> additions() const;
};

/// Resolves a builtin:* token against the algebra.
std::vector<Module> builtin_generators(const AlgebraPtr& algebra, const std::string& token);

Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::filesystem::path& path);
/// Canonical form: fixed key order, two-space indentation, trailing newline.
std::string serialize_workspace(const Workspace& w);
void save_workspace(const Workspace& w, const std::filesystem::path& path);

/// Workspace of a builtin algebra: indecomposables, injectives, default
/// corpus, proj/inj/all subcategories, the classical pair "proj", the pair
/// "gproj" = (all, all) when self-injective, and the enumerated cotorsion
/// specs of every registered pair.
Workspace builtin_workspace(const std::string& name, const Settings& settings = {});

/// simples ∪ projectives ∪ injectives ∪ cokernels of `maps` seeded random
/// morphisms P(i) -> P(j), up to isomorphism.
std::vector<Module> default_corpus(const AlgebraPtr& algebra, std::uint64_t seed, std::size_t maps = 10);

struct CatalogEntry {
  std::string name;
  std::string description;
  AlgebraPtr algebra;
  bool self_injective = false;  // add(proj) = add(inj)
  /// max pd of the simples, when finite within the cap.
  std::optional<std::size_t> global_dimension;
  std::vector<std::string> pairs;
};

std::vector<CatalogEntry> builtin_catalog(std::size_t cap = 4);
CatalogEntry catalog_entry(const std::string& name, std::size_t cap = 4);

}  // namespace relhom
