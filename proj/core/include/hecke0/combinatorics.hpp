#pragma once

// Partitions, compositions, permutations and their statistics.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hecke0 {

/// A word in the positive integers, e.g. the image of a tabloid under the
/// row-reading bijection.
using Word = std::vector<int>;

/// A subset of {1, ..., 31}, stored as a bitmask. Used for descent sets and as
/// the index of a fundamental quasisymmetric function F_K.
///
/// Ordered by cardinality first and then lexicographically on the sorted
/// elements, which is the rendering order of quasisymmetric expansions.
class DescentSet {
public:
    constexpr DescentSet() = default;
    DescentSet(std::initializer_list<int> elements);
    explicit DescentSet(const std::vector<int>& elements);

    static constexpr DescentSet from_mask(std::uint32_t mask) {
        DescentSet s;
        s.mask_ = mask;
        return s;
    }

    void insert(int i);
    void erase(int i);
    bool contains(int i) const noexcept { return i >= 1 && i < 32 && ((mask_ >> i) & 1u) != 0; }
    int size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    int sum() const noexcept;
    /// Largest element, or 0 when empty.
    int max() const noexcept;
    std::uint32_t mask() const noexcept { return mask_; }
    std::vector<int> elements() const;

    bool operator==(const DescentSet&) const = default;
    std::strong_ordering operator<=>(const DescentSet& other) const;

    /// "[1,3]" ("[]" when empty).
    std::string to_string() const;

private:
    std::uint32_t mask_ = 0;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Validates the invariants; throws InvalidArgument otherwise.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Zero-based part access; parts beyond the length read as 0.
    int part(int index) const noexcept {
        return index >= 0 && index < length() ? parts_[static_cast<std::size_t>(index)] : 0;
    }
    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic on the part sequence.
    std::strong_ordering operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

    /// "[2,2]".
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n, lexicographically decreasing: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Dominance order on partitions of the same size: mu >= lam iff every partial
/// sum of mu is at least the corresponding partial sum of lam.
bool dominates(const Partition& mu, const Partition& lam);

/// f^lambda by the hook-length formula.
std::int64_t hook_length_count(const Partition& lam);

/// Sequence of nonnegative integers. Strong compositions have positive parts.
class Composition {
public:
    enum class Kind { weak, strong };

    Composition() = default;
    Composition(std::vector<int> parts, Kind kind = Kind::weak);

    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    Kind kind() const noexcept { return kind_; }
    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Nonzero parts sorted decreasingly.
    Partition sorted() const;
    Composition reversed() const;

    bool operator==(const Composition&) const = default;
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
    Kind kind_ = Kind::weak;
};

/// All strong compositions of n.
std::vector<Composition> compositions_of(int n);

/// Descent set of the composition: its proper partial sums.
DescentSet composition_descents(const std::vector<int>& parts);

/// Permutation of {1, ..., n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    /// Validates that one_line is a bijection on {1..n}; throws InvalidArgument otherwise.
    explicit Permutation(std::vector<int> one_line);
    Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

    static Permutation identity(int n);
    /// All of S_n in lexicographic order of one-line notation.
    static std::vector<Permutation> all(int n);

    int size() const noexcept { return static_cast<int>(w_.size()); }
    /// [w]_pos, 1-based.
    int operator[](int pos) const noexcept { return w_[static_cast<std::size_t>(pos - 1)]; }
    /// Position (1-based) of the letter.
    int position_of(int letter) const noexcept { return inv_[static_cast<std::size_t>(letter - 1)]; }
    const std::vector<int>& one_line() const noexcept { return w_; }

    Permutation inverse() const;
    /// rev(w): one-line notation read backwards.
    Permutation reversed() const;
    /// flip(w): [flip(w)]_i = n + 1 - [w]_i.
    Permutation flipped() const;
    /// (this * other)(x) = this(other(x)).
    Permutation compose(const Permutation& other) const;
    /// Exchange the letters i and i+1 (left multiplication by s_i).
    Permutation swap_letters(int i) const;
    /// Exchange the entries at positions i and i+1 (right multiplication by s_i).
    Permutation swap_positions(int i) const;
    Partition cycle_type() const;

    bool operator==(const Permutation& other) const { return w_ == other.w_; }
    std::strong_ordering operator<=>(const Permutation& other) const { return w_ <=> other.w_; }

    /// "[2,3,1]".
    std::string to_string() const;

private:
    std::vector<int> w_;
    std::vector<int> inv_;
};

/// {i : [w]_i > [w]_{i+1}} for any word.
DescentSet descents(const Word& w);
DescentSet descents(const Permutation& w);
/// {i : i occurs after i+1 in w}.
DescentSet ides(const Permutation& w);
/// {i : [w^-1]_i > [w^-1]_{i+1}}; agrees with ides.
DescentSet ides_via_inverse(const Permutation& w);
int major_index(const Word& w);
int major_index(const Permutation& w);
int inversions(const Permutation& w);

struct PermStats {
    DescentSet des;
    DescentSet ides;
    int maj = 0;
    int inv = 0;
    Partition cycle_type;
};

/// All statistics at once; throws if the two i-descent definitions disagree.
PermStats perm_stats(const Permutation& w);

/// c_1..c_n with 0 <= c_i < i.
class InversionCode {
public:
    InversionCode() = default;
    /// Throws InvalidArgument unless 0 <= c_i < i.
    explicit InversionCode(std::vector<int> entries);
    InversionCode(std::initializer_list<int> entries) : InversionCode(std::vector<int>(entries)) {}

    int size() const noexcept { return static_cast<int>(c_.size()); }
    const std::vector<int>& entries() const noexcept { return c_; }
    int operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i - 1)]; }
    int sum() const noexcept;

    bool operator==(const InversionCode&) const = default;
    /// "(0,1,1)".
    std::string to_string() const;

private:
    std::vector<int> c_;
};

/// c_i = number of letters smaller than i lying to the right of i in w.
InversionCode inversion_code(const Permutation& w);
/// Inverse of inversion_code.
Permutation code_to_permutation(const InversionCode& c);
/// Lehmer code: L_i = #{j > i : [w]_j < [w]_i} (position based).
std::vector<int> lehmer_code(const Permutation& w);
/// Evaluates rev(L(flip(rev(w^-1)))) verbatim.
std::vector<int> inversion_code_via_lehmer(const Permutation& w);

/// Foata's second fundamental transformation: inv(foata(w)) = maj(w), and
/// the inverse descent set is preserved.
Permutation foata(const Permutation& w);

}  // namespace hecke0
