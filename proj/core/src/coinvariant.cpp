#include "hecke0/coinvariant.hpp"

#include <algorithm>
#include <functional>

#include "hecke0/errors.hpp"

namespace hecke0 {

std::string to_string(MonomialOrder order) { return order == MonomialOrder::lex ? "lex" : "degrevlex"; }

MonomialOrder parse_monomial_order(const std::string& s) {
    if (s == "lex") return MonomialOrder::lex;
    if (s == "degrevlex") return MonomialOrder::degrevlex;
    throw ParseError("unknown monomial order \"" + s + "\"");
}

bool MonomialLess::operator()(const Exponent& a, const Exponent& b) const noexcept {
    if (order == MonomialOrder::lex) {
        for (int j = 0; j < n; ++j)
            if (a[j] != b[j]) return a[j] < b[j];
        return false;
    }
    int da = 0;
    int db = 0;
    for (int j = 0; j < n; ++j) {
        da += a[j];
        db += b[j];
    }
    if (da != db) return da < db;
    for (int j = n - 1; j >= 0; --j)
        if (a[j] != b[j]) return a[j] > b[j];
    return false;
}

Exponent make_exponent(const std::vector<int>& alpha) {
    if (alpha.size() > static_cast<std::size_t>(kMaxVariables)) throw InvalidArgument("too many variables");
    Exponent e{};
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] < 0 || alpha[j] > 255) throw InvalidArgument("exponent out of range");
        e[j] = static_cast<std::uint8_t>(alpha[j]);
    }
    return e;
}

std::vector<int> exponent_entries(const Exponent& e, int n) { return {e.begin(), e.begin() + n}; }

std::string monomial_label(const Exponent& e, int n) {
    std::string s = "x^(";
    for (int j = 0; j < n; ++j) {
        if (j > 0) s += ',';
        s += std::to_string(e[j]);
    }
    return s + ")";
}

int exponent_degree(const Exponent& e, int n) {
    int d = 0;
    for (int j = 0; j < n; ++j) d += e[j];
    return d;
}

PolynomialVector PolynomialVector::monomial(int n, MonomialOrder order, const Exponent& e, const Rational& c) {
    PolynomialVector p(n, order);
    p.add(e, c);
    return p;
}

Rational PolynomialVector::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PolynomialVector::add(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

PolynomialVector& PolynomialVector::operator+=(const PolynomialVector& other) {
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
}

PolynomialVector& PolynomialVector::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

std::string PolynomialVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (int j = 0; j < n_; ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(j + 1);
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (mono.empty())
            term = hecke0::to_string(mag);
        else if (mag == 1)
            term = mono;
        else
            term = hecke0::to_string(mag) + "*" + mono;
        if (first)
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

namespace {

bool reducible_at(const Exponent& e, int n, int& j_out) {
    for (int j = 1; j <= n; ++j)
        if (e[static_cast<std::size_t>(j - 1)] >= j) {
            j_out = j;
            return true;
        }
    return false;
}

void monomials_of_degree(int first_var, int n, int degree, Exponent& cur, std::vector<Exponent>& out) {
    if (first_var > n) {
        if (degree == 0) out.push_back(cur);
        return;
    }
    for (int a = degree; a >= 0; --a) {
        cur[static_cast<std::size_t>(first_var - 1)] = static_cast<std::uint8_t>(a);
        monomials_of_degree(first_var + 1, n, degree - a, cur, out);
    }
    cur[static_cast<std::size_t>(first_var - 1)] = 0;
}

}  // namespace

GroebnerBasis::GroebnerBasis(int n, MonomialOrder order) : n_(n), order_(order) {
    if (n < 1 || n > kMaxVariables) throw InvalidArgument("number of variables out of range");
    const MonomialLess less{order, n};
    for (int j = 1; j <= n; ++j) {
        std::vector<Exponent> all;
        Exponent cur{};
        monomials_of_degree(j, n, j, cur, all);
        Exponent head{};
        head[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(j);
        const auto top = *std::max_element(all.begin(), all.end(), less);
        if (top != head) throw Error("leading monomial of g_" + std::to_string(j) + " is not x_j^j");
        std::vector<Exponent> tail;
        for (const auto& e : all)
            if (e != head) tail.push_back(e);
        tails_.push_back(std::move(tail));
    }
}

PolynomialVector GroebnerBasis::generator(int j) const {
    Exponent head{};
    head[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(j);
    PolynomialVector g = PolynomialVector::monomial(n_, order_, head);
    for (const auto& e : tails_.at(static_cast<std::size_t>(j - 1))) g.add(e, 1);
    return g;
}

PolynomialVector GroebnerBasis::reduce(PolynomialVector p) const {
    if (p.n() != n_ || p.order() != order_) throw InvalidArgument("polynomial does not match the Groebner basis");
    auto& terms = p.terms();
    auto it = terms.end();
    while (it != terms.begin()) {
        --it;
        int j = 0;
        if (!reducible_at(it->first, n_, j)) continue;
        Exponent quotient = it->first;
        quotient[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(quotient[static_cast<std::size_t>(j - 1)] - j);
        const Rational c = it->second;
        it = terms.erase(it);
        for (const auto& t : tails_[static_cast<std::size_t>(j - 1)]) {
            Exponent e = quotient;
            for (int v = 0; v < n_; ++v) e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(v)] + t[static_cast<std::size_t>(v)]);
            auto [slot, inserted] = terms.try_emplace(e, 0);
            slot->second -= c;
            if (slot->second == 0) terms.erase(slot);
        }
    }
    return p;
}

PolynomialVector groebner_reduce(const PolynomialVector& p, int n, MonomialOrder order) {
    return GroebnerBasis(n, order).reduce(p);
}

std::vector<Exponent> artin_basis(int n, MonomialOrder order) {
    if (n < 1 || n > kMaxVariables) throw InvalidArgument("number of variables out of range");
    std::vector<Exponent> out;
    Exponent cur{};
    std::function<void(int)> fill = [&](int j) {
        if (j > n) {
            out.push_back(cur);
            return;
        }
        for (int a = 0; a < j; ++a) {
            cur[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(a);
            fill(j + 1);
        }
        cur[static_cast<std::size_t>(j - 1)] = 0;
    };
    fill(1);
    const MonomialLess less{order, n};
    std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) { return less(b, a); });
    return out;
}

namespace {

struct ArtinIndex {
    std::vector<Exponent> basis;
    std::map<Exponent, std::size_t> position;

    ArtinIndex(int n, MonomialOrder order) : basis(artin_basis(n, order)) {
        for (std::size_t k = 0; k < basis.size(); ++k) position.emplace(basis[k], k);
    }
};

Exponent swapped(Exponent e, int i) {
    std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
    return e;
}

}  // namespace

ReductionClassification classify_by_reduction(int n, MonomialOrder order) {
    const ArtinIndex ix(n, order);
    const GroebnerBasis gb(n, order);
    const MonomialLess less{order, n};
    ReductionClassification out;
    out.pi.assign(static_cast<std::size_t>(n - 1), {});
    for (int i = 1; i < n; ++i)
        for (std::size_t k = 0; k < ix.basis.size(); ++k) {
            const Exponent& a = ix.basis[k];
            const Exponent b = swapped(a, i);
            auto& slot = out.pi[static_cast<std::size_t>(i - 1)];
            if (b == a) {
                slot.push_back(PiResult::zero());
                continue;
            }
            if (less(b, a)) {
                auto hit = ix.position.find(b);
                if (hit == ix.position.end()) {
                    out.failures.push_back("CLASSIFY pi" + std::to_string(i) + " FAIL at " + monomial_label(a, n) +
                                           ": smaller image is not an Artin monomial");
                    slot.push_back(PiResult::zero());
                } else {
                    slot.push_back(PiResult::move_to(hit->second));
                }
                continue;
            }
            const auto reduced = gb.reduce(PolynomialVector::monomial(n, order, b));
            bool neg = false;
            if (!reduced.is_zero()) {
                const auto& [lm, lc] = reduced.leading();
                neg = less(a, lm) || (lm == a && lc == -1);
            }
            if (!neg)
                out.failures.push_back("CLASSIFY pi" + std::to_string(i) + " FAIL at " + monomial_label(a, n) +
                                       ": reduced image " + reduced.to_string());
            slot.push_back(PiResult::neg_self());
        }
    return out;
}

HeckeModule coinvariant_module(int n, MonomialOrder order) {
    const ArtinIndex ix(n, order);
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (const auto& e : ix.basis) {
        labels.push_back(monomial_label(e, n));
        degrees.push_back(exponent_degree(e, n));
    }
    std::vector<std::vector<PiResult>> pi(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i)
        for (const auto& a : ix.basis) {
            const int x = a[static_cast<std::size_t>(i - 1)];
            const int y = a[static_cast<std::size_t>(i)];
            auto& slot = pi[static_cast<std::size_t>(i - 1)];
            if (x == y)
                slot.push_back(PiResult::zero());
            else if (x < y)
                slot.push_back(PiResult::neg_self());
            else
                slot.push_back(PiResult::move_to(ix.position.at(swapped(a, i))));
        }

    const auto by_reduction = classify_by_reduction(n, order);
    std::vector<std::string> mismatches = by_reduction.failures;
    for (int i = 1; i < n; ++i)
        for (std::size_t k = 0; k < ix.basis.size(); ++k)
            if (!(pi[static_cast<std::size_t>(i - 1)][k] == by_reduction.pi[static_cast<std::size_t>(i - 1)][k]))
                mismatches.push_back("pi" + std::to_string(i) + " at " + labels[k]);
    if (!mismatches.empty()) {
        std::string msg = "exponent and reduction rules disagree:";
        for (const auto& m : mismatches) msg += "\n  " + m;
        throw ClassificationMismatch(msg);
    }
    return HeckeModule(n, std::move(labels), std::move(degrees), std::move(pi));
}

Report verify_leading_term_property(int n, MonomialOrder order) {
    const auto basis = artin_basis(n, order);
    const GroebnerBasis gb(n, order);
    const MonomialLess less{order, n};
    Report report;
    for (const auto& a : basis)
        for (int i = 1; i < n; ++i) {
            const Exponent b = swapped(a, i);
            int j = 0;
            if (!reducible_at(b, n, j)) continue;
            const auto reduced = gb.reduce(PolynomialVector::monomial(n, order, b));
            bool ok = !reduced.is_zero();
            if (ok) {
                const auto& [lm, lc] = reduced.leading();
                ok = !less(lm, a) && (lm != a || lc == -1);
            }
            if (!ok)
                report.failures.push_back("LTPROP pi" + std::to_string(i) + " FAIL at " + monomial_label(a, n) + ": " +
                                          reduced.to_string());
        }
    return report;
}

std::vector<SparseMatrix> coinvariant_generators(int n, MonomialOrder order) {
    const ArtinIndex ix(n, order);
    const GroebnerBasis gb(n, order);
    std::vector<SparseMatrix> out;
    for (int i = 1; i < n; ++i) {
        SparseMatrix m(ix.basis.size());
        for (std::size_t k = 0; k < ix.basis.size(); ++k) {
            const auto reduced = gb.reduce(PolynomialVector::monomial(n, order, swapped(ix.basis[k], i)));
            for (const auto& [e, c] : reduced.terms()) m.set(ix.position.at(e), k, c);
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace hecke0
