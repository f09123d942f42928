#include "hecke0/tabloid_module.hpp"

#include <algorithm>
#include <map>

namespace hecke0 {

namespace {

template <class Rule>
HeckeModule build(const Partition& lam, Rule&& rule) {
    const auto basis = tabloids_of(lam);
    std::map<Tabloid, std::size_t> index;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index.emplace(basis[k], k);
        labels.push_back(basis[k].to_string());
    }
    const int n = lam.size();
    std::vector<std::vector<PiResult>> pi(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int i = 1; i < n; ++i)
        for (const auto& t : basis) {
            const PiResult::Kind kind = rule(t, i);
            pi[static_cast<std::size_t>(i - 1)].push_back(
                kind == PiResult::Kind::move_to ? PiResult::move_to(index.at(apply_si(t, i))) : PiResult{kind, 0});
        }
    return HeckeModule(n, std::move(labels), {}, std::move(pi));
}

}  // namespace

HeckeModule tabloid_module(const Partition& lam) {
    return build(lam, [](const Tabloid& t, int i) {
        const int a = t.row_of(i);
        const int b = t.row_of(i + 1);
        if (a == b) return PiResult::Kind::zero;
        return a < b ? PiResult::Kind::neg_self : PiResult::Kind::move_to;
    });
}

HeckeModule tabloid_module_ordered(const Partition& lam) {
    return build(lam, [](const Tabloid& t, int i) {
        switch (tabloid_dominance(apply_si(t, i), t)) {
            case Dominance::equal: return PiResult::Kind::zero;
            case Dominance::greater: return PiResult::Kind::neg_self;
            case Dominance::less: break;
        }
        return PiResult::Kind::move_to;
    });
}

}  // namespace hecke0
