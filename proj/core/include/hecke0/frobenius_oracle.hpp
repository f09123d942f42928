#pragma once

// Symmetric Frobenius characteristic of a serialized S_n-module computed from
// character values: sum over mu of chi(mu) p_mu / z_mu, expanded in Schur
// functions through the Murnaghan-Nakayama rule.

#include <optional>

#include "hecke0/combinatorics.hpp"
#include "hecke0/linalg.hpp"
#include "hecke0/module_spec.hpp"
#include "hecke0/qsym.hpp"

namespace hecke0 {

/// Product of simple transpositions s_{i_1} ... s_{i_k} equal to w.
std::vector<int> reduced_word(const Permutation& w);

/// Trace of the matrix of s_{word[0]} ... s_{word[k-1]}, optionally restricted to
/// the basis vectors of one degree.
Rational trace_of_word(const ModuleSpec& spec, const std::vector<int>& word, std::optional<int> degree = std::nullopt);

/// Trace on the class of cycle type mu, evaluated at its canonical representative.
Rational class_trace(const ModuleSpec& spec, const Partition& mu, std::optional<int> degree = std::nullopt);

/// Validates the Coxeter relations, then decomposes the character. With
/// graded = true the coefficient of q^d comes from the traces on degree d;
/// this needs degrees and degree-preserving generators (InvalidArgument
/// otherwise). Throws RelationViolation or NonIntegralDecomposition.
SymElement frobenius_from_traces(const ModuleSpec& spec, bool graded = false);

}  // namespace hecke0
