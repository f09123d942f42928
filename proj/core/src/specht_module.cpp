#include "hecke0/specht_module.hpp"

#include <algorithm>

#include "hecke0/errors.hpp"

namespace hecke0 {

namespace {

int parity(const std::vector<int>& arrangement) {
    int inv = 0;
    for (std::size_t a = 0; a < arrangement.size(); ++a)
        for (std::size_t b = a + 1; b < arrangement.size(); ++b)
            if (arrangement[a] > arrangement[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

void expand_columns(const Tableau& t, std::size_t col, std::vector<std::vector<int>>& rows, int sign,
                    TabloidVector& out) {
    const auto& shape = t.shape();
    if (col == static_cast<std::size_t>(shape.part(0))) {
        auto [it, inserted] = out.try_emplace(Tabloid(rows), 0);
        it->second += sign;
        if (it->second == 0) out.erase(it);
        return;
    }
    std::vector<int> entries;
    for (std::size_t r = 0; r < t.rows().size() && col < t.rows()[r].size(); ++r) entries.push_back(t.rows()[r][col]);
    std::vector<int> arrangement = entries;
    std::sort(arrangement.begin(), arrangement.end());
    const int base = parity(entries);
    do {
        for (std::size_t r = 0; r < arrangement.size(); ++r) rows[r][col] = arrangement[r];
        expand_columns(t, col + 1, rows, sign * base * parity(arrangement), out);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
}

std::string case_name(const std::optional<PiResult>& r, const HeckeModule& m, std::size_t k) {
    if (!r) return "none";
    return to_string(m, *r, k);
}

}  // namespace

TabloidVector polytabloid_expand(const Tableau& t) {
    if (!t.is_bijective()) throw InvalidArgument("polytabloid of a non-bijective filling");
    TabloidVector out;
    if (t.size() == 0) return out;
    auto rows = t.rows();
    expand_columns(t, 0, rows, 1, out);
    return out;
}

std::vector<Tableau> specht_basis(const Partition& lam) {
    auto basis = standard_tableaux(lam);
    std::sort(basis.begin(), basis.end(),
              [](const Tableau& a, const Tableau& b) { return dominance_compare(a, b) == Dominance::greater; });
    return basis;
}

HeckeModule specht_module(const Partition& lam) {
    const auto basis = specht_basis(lam);
    std::map<Tableau, std::size_t> index;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index.emplace(basis[k], k);
        labels.push_back(basis[k].to_string());
    }
    const int n = lam.size();
    std::vector<std::vector<PiResult>> pi(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int i = 1; i < n; ++i)
        for (const auto& t : basis) {
            const int a = t.row_of(i);
            const int b = t.row_of(i + 1);
            auto& slot = pi[static_cast<std::size_t>(i - 1)];
            if (a == b) {
                slot.push_back(PiResult::zero());
            } else if (a < b) {
                slot.push_back(PiResult::neg_self());
            } else {
                const Tableau image = apply_si(t, i);
                if (!image.is_standard())
                    throw NonStandardImage("s" + std::to_string(i) + " sends " + t.to_string() + " to " +
                                           image.to_string());
                slot.push_back(PiResult::move_to(index.at(image)));
            }
        }
    return HeckeModule(n, std::move(labels), {}, std::move(pi));
}

std::vector<SparseMatrix> specht_generators(const Partition& lam) {
    const auto basis = specht_basis(lam);
    const std::size_t f = basis.size();
    const int n = lam.size();

    std::vector<TabloidVector> expansions;
    std::vector<Tabloid> pivots;
    for (const auto& t : basis) {
        expansions.push_back(polytabloid_expand(t));
        pivots.push_back(Tabloid::of(t));
    }
    DenseMatrix a(f, f);
    for (std::size_t r = 0; r < f; ++r)
        for (std::size_t c = 0; c < f; ++c) {
            auto it = expansions[c].find(pivots[r]);
            if (it != expansions[c].end()) a(r, c) = Rational(static_cast<long>(it->second));
        }

    std::vector<TabloidVector> targets;
    for (int i = 1; i < n; ++i)
        for (const auto& t : basis) targets.push_back(polytabloid_expand(apply_si(t, i)));
    DenseMatrix b(f, targets.size());
    for (std::size_t r = 0; r < f; ++r)
        for (std::size_t c = 0; c < targets.size(); ++c) {
            auto it = targets[c].find(pivots[r]);
            if (it != targets[c].end()) b(r, c) = Rational(static_cast<long>(it->second));
        }
    const DenseMatrix x = solve_exact(a, b);

    std::vector<SparseMatrix> out;
    for (int i = 1; i < n; ++i) {
        SparseMatrix m(f);
        for (std::size_t c = 0; c < f; ++c) {
            const std::size_t rhs = static_cast<std::size_t>(i - 1) * f + c;
            std::map<Tabloid, Rational> check;
            for (std::size_t r = 0; r < f; ++r) {
                const Rational& coeff = x(r, rhs);
                if (coeff == 0) continue;
                m.set(r, c, coeff);
                for (const auto& [tab, v] : expansions[r]) check[tab] += coeff * static_cast<long>(v);
            }
            std::erase_if(check, [](const auto& kv) { return kv.second == 0; });
            bool same = check.size() == targets[rhs].size();
            for (auto it = check.begin(); same && it != check.end(); ++it) {
                auto hit = targets[rhs].find(it->first);
                same = hit != targets[rhs].end() && it->second == static_cast<long>(hit->second);
            }
            if (!same)
                throw SolveFailure("s" + std::to_string(i) + " e_T for T = " + basis[c].to_string() +
                                   " is outside the span of the standard polytabloids");
        }
        out.push_back(std::move(m));
    }
    return out;
}

SparseMatrix specht_si_in_basis(const Partition& lam, int i) {
    if (i < 1 || i >= lam.size()) throw InvalidArgument("generator index out of range");
    return specht_generators(lam)[static_cast<std::size_t>(i - 1)];
}

Report specht_wqcc_agrees(const Partition& lam) {
    const HeckeModule m = specht_module(lam);
    const auto gens = specht_generators(lam);
    Report report;
    for (int i = 1; i < lam.size(); ++i)
        for (std::size_t k = 0; k < m.dim(); ++k) {
            const auto from_matrix = classify_column(gens[static_cast<std::size_t>(i - 1)].column(k), k, Level::weak);
            const PiResult& combinatorial = m.pi(i, k);
            if (!from_matrix || !(*from_matrix == combinatorial))
                report.failures.push_back("EQUIVALENCE pi" + std::to_string(i) + " FAIL at " + m.label(k) + ": " +
                                          case_name(from_matrix, m, k) + " vs " + to_string(m, combinatorial, k));
        }
    return report;
}

}  // namespace hecke0
