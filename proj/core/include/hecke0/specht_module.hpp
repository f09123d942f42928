#pragma once

// Specht modules: standard polytabloids, the honest S_n action on them, and
// the deformed 0-Hecke action.

#include <cstdint>
#include <map>
#include <vector>

#include "hecke0/hecke_module.hpp"
#include "hecke0/linalg.hpp"
#include "hecke0/tableau.hpp"

namespace hecke0 {

/// Integer combination of tabloids of one shape.
using TabloidVector = std::map<Tabloid, std::int64_t>;

/// e_t = sum over the column group of t of sgn(sigma) {sigma t}.
TabloidVector polytabloid_expand(const Tableau& t);

/// SYT(lam) sorted greatest-first under tableau dominance.
std::vector<Tableau> specht_basis(const Partition& lam);

/// pi_i e_T = 0 if i, i+1 share a row, -e_T if row(i) < row(i+1), e_{s_i T}
/// otherwise. Throws NonStandardImage if s_i T fails to be standard.
HeckeModule specht_module(const Partition& lam);

/// Matrix of s_i on the basis specht_basis(lam): column c holds the
/// coordinates of s_i e_{T_c} = e_{s_i T_c}. Throws SolveFailure if the tabloid
/// expansion has no solution.
SparseMatrix specht_si_in_basis(const Partition& lam, int i);
/// All of s_1 .. s_{n-1}, sharing one factorization.
std::vector<SparseMatrix> specht_generators(const Partition& lam);

/// Classifies every (T, i) from the columns of specht_si_in_basis at weak
/// level and compares with specht_module. Lines read
/// "EQUIVALENCE pi<i> FAIL at <T>: <matrix case> vs <combinatorial case>".
Report specht_wqcc_agrees(const Partition& lam);

}  // namespace hecke0
