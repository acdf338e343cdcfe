#pragma once

// Builtin algebras: semisimple2, a2, a3rad2, kx2, nak_cyc2.

#include <string>
#include <vector>

#include "relhom/module.hpp"
#include "relhom/quiver.hpp"

namespace relhom {

std::vector<std::string> builtin_algebra_names();
/// Throws InputError for unknown names.
AlgebraPtr builtin_algebra(const std::string& name, Scalar p = 2, std::size_t cap = 6);

/// Radical quotients P(i)/rad^k P(i), up to isomorphism. For the builtin
/// algebras (all Nakayama) these are all the indecomposables.
std::vector<Module> uniserial_quotients(const AlgebraPtr& algebra);

}  // namespace relhom
