#pragma once

// Quasisymmetric characteristics of 0-Hecke modules, the generic
// order-induced deformation of a serialized S_n-module, and the comparison
// with the symmetric characteristic.

#include <optional>
#include <string>
#include <vector>

#include "hecke0/coinvariant.hpp"
#include "hecke0/hecke_module.hpp"
#include "hecke0/module_spec.hpp"
#include "hecke0/qsym.hpp"

namespace hecke0 {

/// sum over the basis of q^{deg v} F_{{i : pi_i v = -v}} (q^0 when ungraded).
/// Throws NotTriangular if some move is not strictly downward.
QSymElement qsym_char(const HeckeModule& m, bool graded = false);

/// Deforms the S_n action: each column s_i v_k is sorted into the zero,
/// negative or move case by classify_column at the given level. Throws
/// CaseViolation naming every unmatched (v_k, i), or RelationViolation if the
/// resulting action fails the 0-Hecke relations.
HeckeModule build_hecke_from_sn(const ModuleSpec& spec, Level level);

struct CompatReport {
    Level level = Level::strong;
    bool graded = false;
    bool action_valid = false;
    bool triangular = false;
    std::optional<QSymElement> qsym_char;
    /// Schur expansion of qsym_char, when symmetric.
    std::optional<SymElement> schur;
    /// Character-theoretic characteristic of the S_n-module.
    std::optional<SymElement> sym_char;
    bool equal = false;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    /// LEVEL / GRADED / ACTION / TRIANGULAR / QSYM / SCHUR / ORACLE lines, the
    /// violations, then "EQUAL: <sym>" or "NOT EQUAL".
    std::string render() const;
};

/// Never throws for a validated spec; every failure lands in violations.
CompatReport check_compat(const ModuleSpec& spec, Level level);

struct GradedIdentity {
    SymElement lhs;
    SymElement rhs;
    bool equal = false;
    /// sum over the Artin basis of q^{|a|} F_{asc(a)}.
    QSymElement artin_sum;
    /// sum over S_n of q^{inv(w)} F_{ides(w)}.
    QSymElement inv_sum;
    /// sum over S_n of q^{maj(w)} F_{ides(w)}.
    QSymElement maj_sum;
    bool intermediates_equal = false;
    /// asc(c(w)) = ides(w), |c(w)| = inv(w), and foata preserves ides while
    /// sending maj to inv, for every w.
    bool term_by_term = false;
};

/// to_schur of the graded characteristic of the coinvariant module against
/// sum over lambda of (sum over SYT(lambda) of q^{maj(Q)}) s_lambda.
GradedIdentity coinvariant_graded_identity(int n, MonomialOrder order = MonomialOrder::lex);

struct Builtin {
    enum class Kind { tabloid, specht, coinvariant };
    Kind kind = Kind::tabloid;
    Partition shape;
    int n = 0;
    MonomialOrder order = MonomialOrder::lex;

    static Builtin tabloid(Partition lam) { return {Kind::tabloid, std::move(lam), 0, MonomialOrder::lex}; }
    static Builtin specht(Partition lam) { return {Kind::specht, std::move(lam), 0, MonomialOrder::lex}; }
    static Builtin coinvariant(int n, MonomialOrder order = MonomialOrder::lex) {
        return {Kind::coinvariant, Partition{}, n, order};
    }
};

/// The deformed module of a builtin.
HeckeModule builtin_module(const Builtin& b);

/// The honest S_n action on a builtin in its canonical basis order:
/// permutation matrices on tabloids, the polytabloid solve for Specht modules,
/// permute-then-reduce for coinvariants (with degrees).
ModuleSpec sn_spec_of(const Builtin& b);

}  // namespace hecke0
