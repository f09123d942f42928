#include "hecke0/characters.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hecke0/errors.hpp"

namespace hecke0 {
namespace {

// Beta-set (first-column hook lengths) of lam padded to `len` beads.
std::vector<int> beta_set(const Partition& lam, int len) {
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) beta.push_back(lam.part(i) + (len - 1 - i));
    return beta;  // strictly decreasing
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        const int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

std::int64_t mn_rec(const Partition& lam, const std::vector<int>& cycles, std::size_t next) {
    if (next == cycles.size()) return lam.size() == 0 ? 1 : 0;
    const int k = cycles[next];
    const int len = lam.length();
    const std::vector<int> beta = beta_set(lam, len);
    const std::set<int> occupied(beta.begin(), beta.end());
    std::int64_t total = 0;
    for (std::size_t b = 0; b < beta.size(); ++b) {
        const int from = beta[b];
        const int to = from - k;
        if (to < 0 || occupied.count(to)) continue;
        // Removing a rim hook of length k moves one bead from `from` to `to`;
        // its height is the number of beads jumped over.
        int jumped = 0;
        for (int x : beta)
            if (x > to && x < from) ++jumped;
        std::vector<int> moved = beta;
        moved[b] = to;
        const std::int64_t sign = (jumped % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(from_beta(moved), cycles, next + 1);
    }
    return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw InvalidArgument("mn_character needs |lambda| = |mu|");
    return mn_rec(lam, mu.parts(), 0);
}

std::int64_t centralizer_size(const Partition& mu) {
    std::int64_t z = 1;
    for (int i = 1; i <= mu.size(); ++i) {
        const auto m = std::count(mu.parts().begin(), mu.parts().end(), i);
        for (int k = 1; k <= m; ++k) z *= static_cast<std::int64_t>(i) * k;
    }
    return z;
}

Permutation class_representative(const Partition& mu) {
    std::vector<int> w(static_cast<std::size_t>(mu.size()));
    int start = 1;
    for (int len : mu.parts()) {
        for (int k = 0; k < len; ++k) w[static_cast<std::size_t>(start - 1 + k)] = start + (k + 1) % len;
        start += len;
    }
    return Permutation(std::move(w));
}

}  // namespace hecke0
