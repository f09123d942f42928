#include "hecke0/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "hecke0/errors.hpp"

namespace hecke0 {
namespace {

std::string bracketed(const std::vector<int>& values, char open, char close) {
    std::string out(1, open);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(values[k]);
    }
    out += close;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// DescentSet

DescentSet::DescentSet(std::initializer_list<int> elements) {
    for (int i : elements) insert(i);
}

DescentSet::DescentSet(const std::vector<int>& elements) {
    for (int i : elements) insert(i);
}

void DescentSet::insert(int i) {
    if (i < 1 || i >= 32) throw InvalidArgument("descent index out of range: " + std::to_string(i));
    mask_ |= (1u << i);
}

void DescentSet::erase(int i) {
    if (i >= 1 && i < 32) mask_ &= ~(1u << i);
}

int DescentSet::size() const noexcept { return std::popcount(mask_); }

int DescentSet::sum() const noexcept {
    int s = 0;
    for (int i = 1; i < 32; ++i)
        if (contains(i)) s += i;
    return s;
}

int DescentSet::max() const noexcept { return mask_ == 0 ? 0 : 31 - std::countl_zero(mask_); }

std::vector<int> DescentSet::elements() const {
    std::vector<int> out;
    for (int i = 1; i < 32; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::strong_ordering DescentSet::operator<=>(const DescentSet& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return elements() <=> other.elements();
}

std::string DescentSet::to_string() const { return bracketed(elements(), '[', ']'); }

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw InvalidArgument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw InvalidArgument("partition parts must be weakly decreasing");
        n_ += parts_[k];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition{};
    for (int c = 1; c <= parts_.front(); ++c) {
        int height = 0;
        for (int p : parts_)
            if (p >= c) ++height;
        conj.push_back(height);
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const { return bracketed(parts_, '[', ']'); }

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidArgument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool dominates(const Partition& mu, const Partition& lam) {
    if (mu.size() != lam.size()) throw InvalidArgument("dominance needs partitions of equal size");
    int a = 0, b = 0;
    for (int k = 0; k < std::max(mu.length(), lam.length()); ++k) {
        a += mu.part(k);
        b += lam.part(k);
        if (a < b) return false;
    }
    return true;
}

std::int64_t hook_length_count(const Partition& lam) {
    const Partition conj = lam.conjugate();
    // n! / prod hooks, accumulated as a running quotient to stay exact.
    std::int64_t numerator = 1;
    for (int k = 2; k <= lam.size(); ++k) numerator *= k;
    std::int64_t hooks = 1;
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam.part(r); ++c) hooks *= (lam.part(r) - c - 1) + (conj.part(c) - r - 1) + 1;
    return numerator / hooks;
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts, Kind kind) : parts_(std::move(parts)), kind_(kind) {
    for (int p : parts_) {
        if (p < 0) throw InvalidArgument("composition parts must be nonnegative");
        if (kind_ == Kind::strong && p == 0) throw InvalidArgument("strong composition parts must be positive");
        n_ += p;
    }
}

Partition Composition::sorted() const {
    std::vector<int> p;
    for (int x : parts_)
        if (x > 0) p.push_back(x);
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
}

Composition Composition::reversed() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()), kind_);
}

std::string Composition::to_string() const { return bracketed(parts_, '[', ']'); }

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back(std::vector<int>{}, Composition::Kind::strong);
        return out;
    }
    for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if ((cuts >> (i - 1)) & 1u) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts), Composition::Kind::strong);
    }
    return out;
}

DescentSet composition_descents(const std::vector<int>& parts) {
    DescentSet s;
    int acc = 0;
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
        acc += parts[k];
        if (acc > 0) s.insert(acc);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)), inv_(w_.size(), 0) {
    const int n = size();
    for (int pos = 1; pos <= n; ++pos) {
        const int v = w_[static_cast<std::size_t>(pos - 1)];
        if (v < 1 || v > n) throw InvalidArgument("permutation entry out of range: " + std::to_string(v));
        if (inv_[static_cast<std::size_t>(v - 1)] != 0)
            throw InvalidArgument("permutation repeats the letter " + std::to_string(v));
        inv_[static_cast<std::size_t>(v - 1)] = pos;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<Permutation> out;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Permutation Permutation::inverse() const { return Permutation(inv_); }

Permutation Permutation::reversed() const { return Permutation(std::vector<int>(w_.rbegin(), w_.rend())); }

Permutation Permutation::flipped() const {
    std::vector<int> f(w_);
    for (int& x : f) x = size() + 1 - x;
    return Permutation(std::move(f));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw InvalidArgument("composing permutations of different sizes");
    std::vector<int> out(w_.size());
    for (int x = 1; x <= size(); ++x) out[static_cast<std::size_t>(x - 1)] = (*this)[other[x]];
    return Permutation(std::move(out));
}

Permutation Permutation::swap_letters(int i) const {
    if (i < 1 || i >= size()) throw InvalidArgument("s_i index out of range: " + std::to_string(i));
    std::vector<int> out(w_);
    std::swap(out[static_cast<std::size_t>(position_of(i) - 1)], out[static_cast<std::size_t>(position_of(i + 1) - 1)]);
    return Permutation(std::move(out));
}

Permutation Permutation::swap_positions(int i) const {
    if (i < 1 || i >= size()) throw InvalidArgument("s_i index out of range: " + std::to_string(i));
    std::vector<int> out(w_);
    std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)]);
    return Permutation(std::move(out));
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(w_.size(), false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        int len = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)[x]) {
            seen[static_cast<std::size_t>(x - 1)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

std::string Permutation::to_string() const { return bracketed(w_, '[', ']'); }

// ---------------------------------------------------------------------------
// Statistics

DescentSet descents(const Word& w) {
    DescentSet s;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) s.insert(static_cast<int>(i) + 1);
    return s;
}

DescentSet descents(const Permutation& w) { return descents(w.one_line()); }

DescentSet ides(const Permutation& w) {
    DescentSet s;
    for (int i = 1; i < w.size(); ++i)
        if (w.position_of(i) > w.position_of(i + 1)) s.insert(i);
    return s;
}

DescentSet ides_via_inverse(const Permutation& w) { return descents(w.inverse()); }

int major_index(const Word& w) { return descents(w).sum(); }

int major_index(const Permutation& w) { return descents(w).sum(); }

int inversions(const Permutation& w) {
    int count = 0;
    for (int a = 1; a <= w.size(); ++a)
        for (int b = a + 1; b <= w.size(); ++b)
            if (w[a] > w[b]) ++count;
    return count;
}

PermStats perm_stats(const Permutation& w) {
    PermStats s;
    s.des = descents(w);
    s.ides = ides(w);
    if (s.ides != ides_via_inverse(w))
        throw Error("i-descent definitions disagree on " + w.to_string());
    s.maj = s.des.sum();
    s.inv = inversions(w);
    s.cycle_type = w.cycle_type();
    return s;
}

// ---------------------------------------------------------------------------
// Inversion codes

InversionCode::InversionCode(std::vector<int> entries) : c_(std::move(entries)) {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] < 0 || c_[k] >= static_cast<int>(k) + 1)
            throw InvalidArgument("inversion code entry c_" + std::to_string(k + 1) + " = " +
                                  std::to_string(c_[k]) + " outside [0, " + std::to_string(k + 1) + ")");
}

int InversionCode::sum() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0); }

std::string InversionCode::to_string() const { return bracketed(c_, '(', ')'); }

InversionCode inversion_code(const Permutation& w) {
    std::vector<int> c(static_cast<std::size_t>(w.size()), 0);
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j < i; ++j)
            if (w.position_of(j) > w.position_of(i)) ++c[static_cast<std::size_t>(i - 1)];
    return InversionCode(std::move(c));
}

Permutation code_to_permutation(const InversionCode& c) {
    // Insert letters 1..n in increasing order; letter i goes to the left of
    // exactly c_i of the smaller letters already placed.
    std::vector<int> w;
    for (int i = 1; i <= c.size(); ++i) {
        const auto from_right = static_cast<std::ptrdiff_t>(c[i]);
        w.insert(w.end() - from_right, i);
    }
    return Permutation(std::move(w));
}

std::vector<int> lehmer_code(const Permutation& w) {
    std::vector<int> l(static_cast<std::size_t>(w.size()), 0);
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w[j] < w[i]) ++l[static_cast<std::size_t>(i - 1)];
    return l;
}

std::vector<int> inversion_code_via_lehmer(const Permutation& w) {
    std::vector<int> l = lehmer_code(w.inverse().reversed().flipped());
    std::reverse(l.begin(), l.end());
    return l;
}

Permutation foata(const Permutation& w) {
    std::vector<int> gamma;
    for (int k = 1; k <= w.size(); ++k) {
        const int x = w[k];
        if (!gamma.empty()) {
            const bool split_on_greater = gamma.back() > x;
            std::vector<int> next;
            next.reserve(gamma.size() + 1);
            std::size_t block_start = 0;
            for (std::size_t p = 0; p < gamma.size(); ++p) {
                const bool ends_block = split_on_greater ? gamma[p] > x : gamma[p] < x;
                if (!ends_block) continue;
                // Cyclic shift: the block's last letter moves to its front.
                next.push_back(gamma[p]);
                next.insert(next.end(), gamma.begin() + static_cast<std::ptrdiff_t>(block_start),
                            gamma.begin() + static_cast<std::ptrdiff_t>(p));
                block_start = p + 1;
            }
            gamma = std::move(next);
        }
        gamma.push_back(x);
    }
    return Permutation(std::move(gamma));
}

}  // namespace hecke0
