#pragma once

// Fundamental quasisymmetric and Schur expansions with coefficients in Z[q].

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke0/combinatorics.hpp"

namespace hecke0 {

/// Integer polynomial in the grading variable q. No zero coefficients are stored.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
    static QPoly monomial(int degree, std::int64_t coeff = 1);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    std::int64_t coeff(int degree) const;
    const std::map<int, std::int64_t>& coefficients() const noexcept { return c_; }
    int degree() const noexcept { return c_.empty() ? 0 : c_.rbegin()->first; }
    std::int64_t at_one() const;

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(std::int64_t k);
    QPoly operator*(const QPoly& other) const;
    QPoly operator-() const;
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, std::int64_t k) { return a *= k; }

    bool operator==(const QPoly&) const = default;

    /// Descending degree, e.g. "q^2+q", "2*q^3-1".
    std::string to_string() const;

private:
    void add(int degree, std::int64_t value);
    std::map<int, std::int64_t> c_;
};

/// Homogeneous quasisymmetric function of degree n in the fundamental basis.
class QSymElement {
public:
    QSymElement() = default;
    explicit QSymElement(int n) : n_(n) {}

    int degree() const noexcept { return n_; }
    const std::map<DescentSet, QPoly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    QPoly coeff(const DescentSet& k) const;

    /// Adds c * F_K; K must be a subset of {1..n-1}.
    void add(const DescentSet& k, const QPoly& c);
    QSymElement& operator+=(const QSymElement& other);
    QSymElement& operator-=(const QSymElement& other);
    QSymElement& operator*=(const QPoly& c);
    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
    friend QSymElement operator*(QSymElement a, const QPoly& c) { return a *= c; }

    bool operator==(const QSymElement&) const = default;

    /// q = 1 specialization.
    QSymElement at_one() const;

    /// Terms by subset size, then lexicographically: "F[] + F[1] + 2*F[2]".
    std::string to_string() const;

private:
    int n_ = 0;
    std::map<DescentSet, QPoly> terms_;
};

/// Homogeneous symmetric function of degree n in the Schur basis.
class SymElement {
public:
    SymElement() = default;
    explicit SymElement(int n) : n_(n) {}

    int degree() const noexcept { return n_; }
    const std::map<Partition, QPoly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    QPoly coeff(const Partition& lam) const;

    void add(const Partition& lam, const QPoly& c);
    SymElement& operator+=(const SymElement& other);
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }

    bool operator==(const SymElement&) const = default;

    SymElement at_one() const;

    /// Terms by ascending lexicographic order of the parts:
    /// "(q^3)*s[1,1,1] + (q^2+q)*s[2,1] + s[3]".
    std::string to_string() const;

private:
    int n_ = 0;
    std::map<Partition, QPoly> terms_;
};

/// Exponent vector of a monomial x_1^{a_1} ... x_m^{a_m}.
using MonomialExponents = std::vector<int>;

/// Monomials of F_K(x_1..x_m): indices 1 <= i_1 <= ... <= i_n <= m with
/// i_j < i_{j+1} whenever j in K, listed in lexicographic order of the index
/// sequence (i_1, ..., i_n).
std::vector<MonomialExponents> fundamental_in_vars(const DescentSet& k, int n, int m);
/// "x1*x2^2 + x1*x2*x3 + ...".
std::string render_monomials(const std::vector<MonomialExponents>& monomials);

/// s_lam = sum over SYT(lam) of F_{ides(T)}.
QSymElement schur_in_F(const Partition& lam);
/// h_lam = sum_mu K_{mu,lam} s_mu, expanded in F.
QSymElement h_in_F(const Composition& lam);

/// Outcome of expanding a quasisymmetric function in Schur functions.
struct SchurExpansion {
    /// Present iff the input is symmetric.
    std::optional<SymElement> value;
    /// Input minus the best Schur combination; zero iff symmetric.
    QSymElement residual;

    bool symmetric() const noexcept { return value.has_value(); }
};

/// Exact decomposition f = sum c_lam(q) s_lam; reports NotSymmetric through an
/// empty value and a nonzero residual.
SchurExpansion to_schur(const QSymElement& f);

/// Re-expands a Schur combination in the fundamental basis.
QSymElement from_schur(const SymElement& s);

}  // namespace hecke0
