#pragma once

// 0-Hecke modules whose generators send each basis vector to 0, to its
// negative, or to another basis vector.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke0/combinatorics.hpp"
#include "hecke0/linalg.hpp"

namespace hecke0 {

struct PiResult {
    enum class Kind { zero, neg_self, move_to };

    Kind kind = Kind::zero;
    /// Basis index of the image; meaningful for move_to only.
    std::size_t target = 0;

    static PiResult zero() { return {Kind::zero, 0}; }
    static PiResult neg_self() { return {Kind::neg_self, 0}; }
    static PiResult move_to(std::size_t target) { return {Kind::move_to, target}; }

    bool operator==(const PiResult& other) const {
        return kind == other.kind && (kind != Kind::move_to || target == other.target);
    }
};

/// Basis listed greatest-first, so the composition series index equals the
/// list index.
class HeckeModule {
public:
    HeckeModule() = default;
    /// pi[i-1][k] is the image of basis vector k under pi_i. Throws
    /// InvalidArgument on duplicate labels, bad table sizes, or a move_to
    /// whose target is out of range or the source itself.
    HeckeModule(int n, std::vector<std::string> labels, std::vector<int> degrees,
                std::vector<std::vector<PiResult>> pi);

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t k) const { return labels_.at(k); }
    int degree(std::size_t k) const { return degrees_.at(k); }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    const PiResult& pi(int i, std::size_t k) const {
        return pi_.at(static_cast<std::size_t>(i - 1)).at(k);
    }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// {i : pi_i v_k = -v_k}.
    DescentSet neg_self_set(std::size_t k) const;

    /// Same action with the basis listed in the order new_order[0], new_order[1], ...
    HeckeModule reordered(const std::vector<std::size_t>& new_order) const;
    HeckeModule reversed() const;
    /// Copy with one table entry replaced; the constructor checks still apply.
    HeckeModule with_pi(int i, std::size_t k, PiResult r) const;

    /// Same basis, same action.
    bool operator==(const HeckeModule& other) const {
        return n_ == other.n_ && labels_ == other.labels_ && pi_ == other.pi_;
    }

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::vector<std::vector<PiResult>> pi_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// "0", "-<label>" or "<target label>".
std::string to_string(const HeckeModule& m, const PiResult& r, std::size_t k);

/// Pass/fail outcome of one verifier; failures are report lines.
struct Report {
    std::vector<std::string> failures;
    bool passed() const noexcept { return failures.empty(); }
};

/// Linear extension of the pi_i to integer vectors.
using IntVector = std::map<std::size_t, std::int64_t>;
IntVector apply_pi(const HeckeModule& m, int i, const IntVector& v);

/// Checks pi_i^2 = -pi_i, pi_i pi_j = pi_j pi_i (|i-j| >= 2) and the braid
/// relation on every basis vector. Lines read
/// "RELATION pi1pi2pi1=pi2pi1pi2 FAIL at <label>", ordered by basis index then
/// relation. workers > 1 splits the basis into contiguous blocks.
Report verify_hecke_relations(const HeckeModule& m, unsigned workers = 1);

/// Every move_to goes from index j to an index > j. Lines read
/// "TRIANGULARITY pi2 FAIL at <label> -> <target>".
Report verify_triangularity(const HeckeModule& m);

/// Classification of one column of s_i against basis vector k, with the
/// basis greatest-first (leading term = smallest index).
enum class Level { strong, weak };
std::string to_string(Level level);

/// strong: zero iff the trailing term is +v_k; neg_self iff the column is
///   exactly -v_k or exactly +v_j with j < k; move_to iff exactly +v_j, j > k.
/// weak: zero iff the trailing term is +v_k; neg_self iff the leading term sits
///   at j < k or equals -v_k; move_to iff the column is exactly +v_j, j > k.
/// nullopt when no case applies.
std::optional<PiResult> classify_column(const SparseVector& column, std::size_t k, Level level);

}  // namespace hecke0
