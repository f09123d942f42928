#pragma once

// The coinvariant algebra C[x_1..x_n] / (e_1, ..., e_n), represented on the
// Artin basis of sub-staircase monomials.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke0/hecke_module.hpp"
#include "hecke0/linalg.hpp"

namespace hecke0 {

inline constexpr int kMaxVariables = 12;

/// Exponent vector (a_1..a_n) of x_1^{a_1} ... x_n^{a_n}; entries past n are zero.
using Exponent = std::array<std::uint8_t, kMaxVariables>;

enum class MonomialOrder { lex, degrevlex };
std::string to_string(MonomialOrder order);
/// "lex" or "degrevlex"; throws ParseError.
MonomialOrder parse_monomial_order(const std::string& s);

/// Strict "less than" for the order with x_1 > x_2 > ... > x_n.
struct MonomialLess {
    MonomialOrder order = MonomialOrder::lex;
    int n = 0;
    bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

Exponent make_exponent(const std::vector<int>& alpha);
std::vector<int> exponent_entries(const Exponent& e, int n);
/// "x^(0,1,2)".
std::string monomial_label(const Exponent& e, int n);
int exponent_degree(const Exponent& e, int n);

/// Sparse polynomial with rational coefficients, terms kept in monomial order.
class PolynomialVector {
public:
    using Terms = std::map<Exponent, Rational, MonomialLess>;

    PolynomialVector(int n, MonomialOrder order) : n_(n), terms_(MonomialLess{order, n}) {}
    static PolynomialVector monomial(int n, MonomialOrder order, const Exponent& e, const Rational& c = 1);

    int n() const noexcept { return n_; }
    MonomialOrder order() const noexcept { return terms_.key_comp().order; }
    const Terms& terms() const noexcept { return terms_; }
    Terms& terms() noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Exponent& e) const;

    void add(const Exponent& e, const Rational& c);
    PolynomialVector& operator+=(const PolynomialVector& other);
    PolynomialVector& operator*=(const Rational& c);

    /// Largest term; requires a nonzero polynomial.
    const std::pair<const Exponent, Rational>& leading() const { return *terms_.rbegin(); }
    /// Smallest term.
    const std::pair<const Exponent, Rational>& trailing() const { return *terms_.begin(); }

    bool operator==(const PolynomialVector& other) const { return terms_ == other.terms_; }
    /// "-x2 - x3^2", "0" for the zero polynomial.
    std::string to_string() const;

private:
    int n_ = 0;
    Terms terms_;
};

/// The Groebner basis g_j = h_j(x_j, ..., x_n), j = 1..n, of the ideal of
/// symmetric polynomials without constant term.
class GroebnerBasis {
public:
    /// Throws InvalidArgument unless 1 <= n <= kMaxVariables. Checks that the
    /// leading monomial of every g_j is x_j^j.
    GroebnerBasis(int n, MonomialOrder order);

    int n() const noexcept { return n_; }
    MonomialOrder order() const noexcept { return order_; }
    /// g_j as a polynomial.
    PolynomialVector generator(int j) const;

    /// Normal form: the largest reducible term c x^a (some a_j >= j, smallest
    /// such j) is replaced by c x^a - c x^{a - j e_j} g_j, until every term lies
    /// in the Artin basis.
    PolynomialVector reduce(PolynomialVector p) const;

private:
    int n_;
    MonomialOrder order_;
    /// Exponents of h_j(x_j..x_n) other than x_j^j.
    std::vector<std::vector<Exponent>> tails_;
};

PolynomialVector groebner_reduce(const PolynomialVector& p, int n, MonomialOrder order);

/// Sub-staircase exponents (a_j < j) sorted greatest-first.
std::vector<Exponent> artin_basis(int n, MonomialOrder order);

/// Basis x^a, a in the Artin basis; pi_i x^a = 0 if a_i = a_{i+1}, -x^a if
/// a_i < a_{i+1}, x^{s_i a} otherwise. Degrees are total degrees. The
/// construction also classifies every (a, i) by reducing x^{s_i a} and throws
/// ClassificationMismatch if the two rules disagree.
HeckeModule coinvariant_module(int n, MonomialOrder order = MonomialOrder::lex);

/// The reduction rule alone: 0 if s_i a = a, x^{s_i a} if x^{s_i a} < x^a, and
/// -x^a if the reduced x^{s_i a} has leading monomial > x^a or leading term
/// -x^a. Lines "CLASSIFY pi<i> FAIL at <label>" for unmatched cases.
struct ReductionClassification {
    std::vector<std::vector<PiResult>> pi;
    std::vector<std::string> failures;
};
ReductionClassification classify_by_reduction(int n, MonomialOrder order);

/// For every a in the Artin basis and i with x^{s_i a} reducible: the
/// reduced polynomial has leading monomial >= x^a, with leading term -x^a
/// in the equality case. Lines "LTPROP pi<i> FAIL at <label>: <reduced>".
Report verify_leading_term_property(int n, MonomialOrder order);

/// Matrices of s_i (permute variables, then reduce) on the Artin basis.
std::vector<SparseMatrix> coinvariant_generators(int n, MonomialOrder order);

}  // namespace hecke0
