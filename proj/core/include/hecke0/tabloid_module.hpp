#pragma once

// The deformed permutation module on tabloids of shape lambda.

#include "hecke0/hecke_module.hpp"
#include "hecke0/tableau.hpp"

namespace hecke0 {

/// Basis tabloids_of(lam). pi_i{t} = 0 if i, i+1 share a row, -{t} if
/// row(i) < row(i+1), and s_i{t} otherwise.
HeckeModule tabloid_module(const Partition& lam);

/// Same basis; the case is decided by comparing s_i{t} with {t} under row
/// dominance (0 if equal, -{t} if s_i{t} is greater, s_i{t} otherwise).
HeckeModule tabloid_module_ordered(const Partition& lam);

}  // namespace hecke0
