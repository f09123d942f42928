#include "hecke0/qsym.hpp"

#include <functional>

#include "hecke0/errors.hpp"
#include "hecke0/tableau.hpp"

namespace hecke0 {
namespace {

// "c*basis" with the coefficient conventions shared by both renderings.
std::string render_term(const QPoly& c, const std::string& basis) {
    if (c == QPoly(1)) return basis;
    if (c == QPoly(-1)) return "-" + basis;
    if (c.is_constant()) return c.to_string() + "*" + basis;
    return "(" + c.to_string() + ")*" + basis;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == 0) {
            out = terms[k];
        } else if (terms[k].front() == '-') {
            out += " - " + terms[k].substr(1);
        } else {
            out += " + " + terms[k];
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(std::int64_t constant) {
    if (constant != 0) c_.emplace(0, constant);
}

QPoly QPoly::monomial(int degree, std::int64_t coeff) {
    if (degree < 0) throw InvalidArgument("negative q-degree");
    QPoly p;
    p.add(degree, coeff);
    return p;
}

std::int64_t QPoly::coeff(int degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? 0 : it->second;
}

std::int64_t QPoly::at_one() const {
    std::int64_t s = 0;
    for (const auto& [d, v] : c_) s += v;
    return s;
}

void QPoly::add(int degree, std::int64_t value) {
    if (value == 0) return;
    auto [it, inserted] = c_.try_emplace(degree, 0);
    it->second += value;
    if (it->second == 0) c_.erase(it);
}

QPoly& QPoly::operator+=(const QPoly& other) {
    for (const auto& [d, v] : other.c_) add(d, v);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    for (const auto& [d, v] : other.c_) add(d, -v);
    return *this;
}

QPoly& QPoly::operator*=(std::int64_t k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [d, v] : c_) v *= k;
    return *this;
}

QPoly QPoly::operator*(const QPoly& other) const {
    QPoly out;
    for (const auto& [d1, v1] : c_)
        for (const auto& [d2, v2] : other.c_) out.add(d1 + d2, v1 * v2);
    return out;
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    return out *= -1;
}

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto [d, v] = *it;
        std::string mag;
        const std::int64_t a = v < 0 ? -v : v;
        if (d == 0) {
            mag = std::to_string(a);
        } else {
            const std::string var = d == 1 ? "q" : "q^" + std::to_string(d);
            mag = a == 1 ? var : std::to_string(a) + "*" + var;
        }
        if (first)
            out = (v < 0 ? "-" : "") + mag;
        else
            out += (v < 0 ? "-" : "+") + mag;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// QSymElement

QPoly QSymElement::coeff(const DescentSet& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QPoly{} : it->second;
}

void QSymElement::add(const DescentSet& k, const QPoly& c) {
    if (k.max() >= std::max(n_, 1) && !k.empty())
        throw InvalidArgument("F_K index " + k.to_string() + " is not a subset of [1, n-1] for n = " +
                              std::to_string(n_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k);
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
    if (other.n_ != n_ && !other.is_zero() && !is_zero()) throw InvalidArgument("adding QSym elements of different degree");
    if (is_zero()) n_ = other.n_;
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
    if (other.n_ != n_ && !other.is_zero() && !is_zero()) throw InvalidArgument("subtracting QSym elements of different degree");
    if (is_zero()) n_ = other.n_;
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
}

QSymElement& QSymElement::operator*=(const QPoly& c) {
    std::map<DescentSet, QPoly> scaled;
    for (const auto& [k, v] : terms_) {
        QPoly p = v * c;
        if (!p.is_zero()) scaled.emplace(k, std::move(p));
    }
    terms_ = std::move(scaled);
    return *this;
}

QSymElement QSymElement::at_one() const {
    QSymElement out(n_);
    for (const auto& [k, c] : terms_) out.add(k, QPoly(c.at_one()));
    return out;
}

std::string QSymElement::to_string() const {
    std::vector<std::string> parts;
    for (const auto& [k, c] : terms_) parts.push_back(render_term(c, "F" + k.to_string()));
    return join_terms(parts);
}

// ---------------------------------------------------------------------------
// SymElement

QPoly SymElement::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? QPoly{} : it->second;
}

void SymElement::add(const Partition& lam, const QPoly& c) {
    if (lam.size() != n_) throw InvalidArgument("Schur index " + lam.to_string() + " is not a partition of " + std::to_string(n_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lam);
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymElement& SymElement::operator+=(const SymElement& other) {
    if (is_zero()) n_ = other.n_;
    for (const auto& [lam, c] : other.terms_) add(lam, c);
    return *this;
}

SymElement SymElement::at_one() const {
    SymElement out(n_);
    for (const auto& [lam, c] : terms_) out.add(lam, QPoly(c.at_one()));
    return out;
}

std::string SymElement::to_string() const {
    std::vector<std::string> parts;
    for (const auto& [lam, c] : terms_) parts.push_back(render_term(c, "s" + lam.to_string()));
    return join_terms(parts);
}

// ---------------------------------------------------------------------------
// Expansions

std::vector<MonomialExponents> fundamental_in_vars(const DescentSet& k, int n, int m) {
    std::vector<MonomialExponents> out;
    if (m < 1 || n < 0) return out;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            MonomialExponents e(static_cast<std::size_t>(m), 0);
            for (int i : idx) ++e[static_cast<std::size_t>(i - 1)];
            out.push_back(std::move(e));
            return;
        }
        int lo = 1;
        if (j > 0) lo = idx.back() + (k.contains(j) ? 1 : 0);
        for (int i = lo; i <= m; ++i) {
            idx.push_back(i);
            rec(j + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return out;
}

std::string render_monomials(const std::vector<MonomialExponents>& monomials) {
    std::vector<std::string> terms;
    for (const auto& e : monomials) {
        std::string t;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!t.empty()) t += '*';
            t += "x" + std::to_string(v + 1);
            if (e[v] > 1) t += "^" + std::to_string(e[v]);
        }
        terms.push_back(t.empty() ? "1" : t);
    }
    return join_terms(terms);
}

QSymElement schur_in_F(const Partition& lam) {
    QSymElement f(lam.size());
    for (const auto& t : standard_tableaux(lam)) f.add(tableau_stats(t).ides, QPoly(1));
    return f;
}

QSymElement h_in_F(const Composition& lam) {
    QSymElement f(lam.size());
    for (const auto& mu : partitions_of(lam.size())) {
        const std::int64_t k = kostka(mu, lam);
        if (k != 0) f += schur_in_F(mu) * QPoly(k);
    }
    return f;
}

SchurExpansion to_schur(const QSymElement& f) {
    // F_{K(lam)}, K(lam) the partial sums of lam, occurs in s_mu only if mu
    // dominates lam, and exactly once in s_lam. Eliminating in decreasing
    // lexicographic order is therefore a unitriangular solve.
    const int n = f.degree();
    QSymElement residual = f;
    SymElement sym(n);
    for (const auto& lam : partitions_of(n)) {
        const QPoly c = residual.coeff(composition_descents(lam.parts()));
        if (c.is_zero()) continue;
        sym.add(lam, c);
        residual -= schur_in_F(lam) * c;
    }
    SchurExpansion out;
    out.residual = residual;
    if (residual.is_zero()) out.value = std::move(sym);
    return out;
}

QSymElement from_schur(const SymElement& s) {
    QSymElement f(s.degree());
    for (const auto& [lam, c] : s.terms()) f += schur_in_F(lam) * c;
    return f;
}

}  // namespace hecke0
