#include "hecke0/hecke_module.hpp"

#include <algorithm>
#include <thread>

#include "hecke0/errors.hpp"

namespace hecke0 {

HeckeModule::HeckeModule(int n, std::vector<std::string> labels, std::vector<int> degrees,
                         std::vector<std::vector<PiResult>> pi)
    : n_(n), labels_(std::move(labels)), degrees_(std::move(degrees)), pi_(std::move(pi)) {
    if (n_ < 1) throw InvalidArgument("hecke module: n must be positive");
    if (degrees_.empty()) degrees_.assign(labels_.size(), 0);
    if (degrees_.size() != labels_.size()) throw InvalidArgument("hecke module: degree table size mismatch");
    if (pi_.size() != static_cast<std::size_t>(n_ - 1)) throw InvalidArgument("hecke module: expected n-1 generators");
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (!index_.emplace(labels_[k], k).second)
            throw InvalidArgument("hecke module: duplicate label " + labels_[k]);
    for (std::size_t i = 0; i < pi_.size(); ++i) {
        if (pi_[i].size() != labels_.size()) throw InvalidArgument("hecke module: action table size mismatch");
        for (std::size_t k = 0; k < labels_.size(); ++k) {
            const auto& r = pi_[i][k];
            if (r.kind != PiResult::Kind::move_to) continue;
            if (r.target >= labels_.size() || r.target == k)
                throw InvalidArgument("hecke module: invalid move target for pi" + std::to_string(i + 1) + " at " +
                                      labels_[k]);
        }
    }
}

std::optional<std::size_t> HeckeModule::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

DescentSet HeckeModule::neg_self_set(std::size_t k) const {
    DescentSet s;
    for (int i = 1; i < n_; ++i)
        if (pi(i, k).kind == PiResult::Kind::neg_self) s.insert(i);
    return s;
}

HeckeModule HeckeModule::reordered(const std::vector<std::size_t>& new_order) const {
    if (new_order.size() != dim()) throw InvalidArgument("reordered: permutation size mismatch");
    std::vector<std::size_t> position(dim(), dim());
    for (std::size_t p = 0; p < new_order.size(); ++p) {
        if (new_order[p] >= dim() || position[new_order[p]] != dim())
            throw InvalidArgument("reordered: not a permutation");
        position[new_order[p]] = p;
    }
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (auto old : new_order) {
        labels.push_back(labels_[old]);
        degrees.push_back(degrees_[old]);
    }
    std::vector<std::vector<PiResult>> pi(pi_.size(), std::vector<PiResult>(dim()));
    for (std::size_t i = 0; i < pi_.size(); ++i)
        for (std::size_t p = 0; p < dim(); ++p) {
            PiResult r = pi_[i][new_order[p]];
            if (r.kind == PiResult::Kind::move_to) r.target = position[r.target];
            pi[i][p] = r;
        }
    return HeckeModule(n_, std::move(labels), std::move(degrees), std::move(pi));
}

HeckeModule HeckeModule::reversed() const {
    std::vector<std::size_t> order(dim());
    for (std::size_t p = 0; p < dim(); ++p) order[p] = dim() - 1 - p;
    return reordered(order);
}

HeckeModule HeckeModule::with_pi(int i, std::size_t k, PiResult r) const {
    auto pi = pi_;
    pi.at(static_cast<std::size_t>(i - 1)).at(k) = r;
    return HeckeModule(n_, labels_, degrees_, std::move(pi));
}

std::string to_string(const HeckeModule& m, const PiResult& r, std::size_t k) {
    switch (r.kind) {
        case PiResult::Kind::zero: return "0";
        case PiResult::Kind::neg_self: return "-" + m.label(k);
        case PiResult::Kind::move_to: return m.label(r.target);
    }
    return {};
}

IntVector apply_pi(const HeckeModule& m, int i, const IntVector& v) {
    IntVector out;
    auto add = [&out](std::size_t idx, std::int64_t c) {
        auto [it, inserted] = out.try_emplace(idx, 0);
        it->second += c;
        if (it->second == 0) out.erase(it);
    };
    for (const auto& [k, c] : v) {
        const auto& r = m.pi(i, k);
        switch (r.kind) {
            case PiResult::Kind::zero: break;
            case PiResult::Kind::neg_self: add(k, -c); break;
            case PiResult::Kind::move_to: add(r.target, c); break;
        }
    }
    return out;
}

namespace {

IntVector apply_word(const HeckeModule& m, std::initializer_list<int> word, IntVector v) {
    std::vector<int> w(word);
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_pi(m, *it, v);
    return v;
}

std::vector<std::string> relation_failures_at(const HeckeModule& m, std::size_t k) {
    std::vector<std::string> out;
    const IntVector e{{k, 1}};
    const int n = m.n();
    auto fail = [&](const std::string& name) { out.push_back("RELATION " + name + " FAIL at " + m.label(k)); };
    for (int i = 1; i < n; ++i) {
        IntVector lhs = apply_word(m, {i, i}, e);
        IntVector rhs;
        for (const auto& [idx, c] : apply_pi(m, i, e)) rhs[idx] = -c;
        const auto s = std::to_string(i);
        if (lhs != rhs) fail("pi" + s + "^2=-pi" + s);
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (apply_word(m, {i, j}, e) != apply_word(m, {j, i}, e)) {
                const auto a = std::to_string(i);
                const auto b = std::to_string(j);
                fail("pi" + a + "pi" + b + "=pi" + b + "pi" + a);
            }
    for (int i = 1; i + 1 < n; ++i)
        if (apply_word(m, {i, i + 1, i}, e) != apply_word(m, {i + 1, i, i + 1}, e)) {
            const auto a = std::to_string(i);
            const auto b = std::to_string(i + 1);
            fail("pi" + a + "pi" + b + "pi" + a + "=pi" + b + "pi" + a + "pi" + b);
        }
    return out;
}

}  // namespace

Report verify_hecke_relations(const HeckeModule& m, unsigned workers) {
    const std::size_t dim = m.dim();
    std::vector<std::vector<std::string>> per_vector(dim);
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) per_vector[k] = relation_failures_at(m, k);
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(dim, 1))));
    if (workers == 1) {
        run(0, dim);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (dim + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(dim, w * chunk);
            const std::size_t end = std::min(dim, begin + chunk);
            pool.emplace_back(run, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    Report report;
    for (auto& lines : per_vector)
        report.failures.insert(report.failures.end(), lines.begin(), lines.end());
    return report;
}

Report verify_triangularity(const HeckeModule& m) {
    Report report;
    for (std::size_t k = 0; k < m.dim(); ++k)
        for (int i = 1; i < m.n(); ++i) {
            const auto& r = m.pi(i, k);
            if (r.kind == PiResult::Kind::move_to && r.target <= k)
                report.failures.push_back("TRIANGULARITY pi" + std::to_string(i) + " FAIL at " + m.label(k) + " -> " +
                                          m.label(r.target));
        }
    return report;
}

std::string to_string(Level level) { return level == Level::strong ? "strong" : "weak"; }

std::optional<PiResult> classify_column(const SparseVector& column, std::size_t k, Level level) {
    if (column.empty()) return std::nullopt;
    const auto& [lead_idx, lead_c] = *column.begin();
    const auto& [trail_idx, trail_c] = *column.rbegin();
    if (trail_idx == k && trail_c == 1) return PiResult::zero();
    const bool single = column.size() == 1;
    if (level == Level::strong) {
        if (!single) return std::nullopt;
        if (lead_idx == k && lead_c == -1) return PiResult::neg_self();
        if (lead_c != 1) return std::nullopt;
        if (lead_idx < k) return PiResult::neg_self();
        return PiResult::move_to(lead_idx);
    }
    if (lead_idx < k) return PiResult::neg_self();
    if (lead_idx == k && lead_c == -1) return PiResult::neg_self();
    if (single && lead_c == 1 && lead_idx > k) return PiResult::move_to(lead_idx);
    return std::nullopt;
}

}  // namespace hecke0
