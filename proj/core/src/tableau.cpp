#include "hecke0/tableau.hpp"

#include <algorithm>
#include <functional>

#include "hecke0/errors.hpp"

namespace hecke0 {
namespace {

std::string row_sets(const std::vector<std::vector<int>>& rows) {
    std::string out = "{";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out += ',';
        out += '{';
        for (std::size_t k = 0; k < rows[r].size(); ++k) {
            if (k) out += ',';
            out += std::to_string(rows[r][k]);
        }
        out += '}';
    }
    out += '}';
    return out;
}

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    for (const auto& r : rows) {
        if (r.empty()) throw InvalidArgument("tableau rows must be nonempty");
        lengths.push_back(static_cast<int>(r.size()));
    }
    return Partition(std::move(lengths));
}

// Enumerates fillings by horizontal strips: letter v occupies cells of
// inner/outer where outer/inner is a horizontal strip of size content[v-1].
template <typename Visit>
void horizontal_strip_fill(const Partition& shape, const std::vector<int>& content, Visit&& visit) {
    const int len = shape.length();
    std::vector<int> filled(static_cast<std::size_t>(len), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(len));

    std::function<void(std::size_t)> place_letter;
    std::function<void(std::size_t, int, int, const std::vector<int>&)> choose_rows;

    // Distribute `remaining` boxes of a letter across rows r.. of the strip.
    choose_rows = [&](std::size_t letter, int r, int remaining, const std::vector<int>& before) {
        if (r == len) {
            if (remaining == 0) place_letter(letter + 1);
            return;
        }
        const int lo = before[static_cast<std::size_t>(r)];
        int hi = shape.part(r);
        if (r > 0) hi = std::min(hi, before[static_cast<std::size_t>(r - 1)]);
        for (int target = std::min(hi, lo + remaining); target >= lo; --target) {
            const int add = target - lo;
            for (int k = 0; k < add; ++k) rows[static_cast<std::size_t>(r)].push_back(static_cast<int>(letter) + 1);
            filled[static_cast<std::size_t>(r)] = target;
            choose_rows(letter, r + 1, remaining - add, before);
            filled[static_cast<std::size_t>(r)] = lo;
            rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(lo));
        }
    };

    place_letter = [&](std::size_t letter) {
        if (letter == content.size()) {
            for (int r = 0; r < len; ++r)
                if (filled[static_cast<std::size_t>(r)] != shape.part(r)) return;
            visit(rows);
            return;
        }
        const std::vector<int> before = filled;
        choose_rows(letter, 0, content[letter], before);
    };

    place_letter(0);
}

}  // namespace

bool weakly_northwest(Cell a, Cell b) noexcept { return !(a == b) && a.row >= b.row && a.col <= b.col; }

bool strictly_northwest(Cell a, Cell b) noexcept { return a.row > b.row && a.col < b.col; }

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : shape_(shape_of_rows(rows)), rows_(std::move(rows)) {
    const int n = shape_.size();
    std::vector<Cell> cells(static_cast<std::size_t>(n));
    bool bijective = true;
    for (std::size_t r = 0; r < rows_.size() && bijective; ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int v = rows_[r][c];
            if (v < 1) throw InvalidArgument("tableau entries must be positive");
            if (v > n || cells[static_cast<std::size_t>(v - 1)].row != 0) {
                bijective = false;
                break;
            }
            cells[static_cast<std::size_t>(v - 1)] = Cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
        }
    }
    if (bijective) cells_ = std::move(cells);
    for (const auto& row : rows_)
        for (int v : row)
            if (v < 1) throw InvalidArgument("tableau entries must be positive");
}

bool Tableau::is_bijective() const { return !cells_.empty() || size() == 0; }

bool Tableau::is_semistandard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c - 1] > rows_[r][c]) return false;
            if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_bijective()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 1; c < rows_[r].size(); ++c)
            if (rows_[r][c - 1] >= rows_[r][c]) return false;
    return is_semistandard();
}

Cell Tableau::cell_of(int letter) const {
    if (!is_bijective() || letter < 1 || letter > size())
        throw InvalidArgument("letter " + std::to_string(letter) + " has no unique cell in " + to_string());
    return cells_[static_cast<std::size_t>(letter - 1)];
}

std::string Tableau::to_string() const { return row_sets(rows_); }

// ---------------------------------------------------------------------------
// Tabloid

Tabloid::Tabloid(const std::vector<std::vector<int>>& rows) : shape_(shape_of_rows(rows)) {
    row_of_.assign(static_cast<std::size_t>(shape_.size()), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int v : rows[r]) {
            if (v < 1 || v > shape_.size() || row_of_[static_cast<std::size_t>(v - 1)] != 0)
                throw InvalidArgument("tabloid rows must partition {1..n}");
            row_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(r) + 1;
        }
    }
}

Tabloid Tabloid::of(const Tableau& t) {
    if (!t.is_bijective()) throw InvalidArgument("tabloid of a non-bijective filling");
    return Tabloid(t.rows());
}

std::vector<std::vector<int>> Tabloid::rows() const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_.length()));
    for (int v = 1; v <= size(); ++v) rows[static_cast<std::size_t>(row_of(v) - 1)].push_back(v);
    return rows;
}

std::string Tabloid::to_string() const { return row_sets(rows()); }

Word tabloid_word(const Tabloid& t) {
    Word w(static_cast<std::size_t>(t.size()));
    const int l = t.shape().length();
    for (int i = 1; i <= t.size(); ++i) w[static_cast<std::size_t>(i - 1)] = l - t.row_of(i) + 1;
    return w;
}

Tabloid word_to_tabloid(const Word& w, const Partition& lam) {
    const int l = lam.length();
    if (static_cast<int>(w.size()) != lam.size()) throw InvalidArgument("word length differs from |lambda|");
    std::vector<int> count(static_cast<std::size_t>(l), 0);
    std::vector<int> row_of(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1 || w[i] > l) throw InvalidArgument("word letter outside 1..l(lambda)");
        const int r = l - w[i] + 1;
        row_of[i] = r;
        ++count[static_cast<std::size_t>(r - 1)];
    }
    for (int r = 0; r < l; ++r)
        if (count[static_cast<std::size_t>(r)] != lam.part(r))
            throw InvalidArgument("word content is not rev(lambda) for lambda = " + lam.to_string());
    return Tabloid(Tabloid::Raw{}, lam, std::move(row_of));
}

std::vector<Tabloid> tabloids_of(const Partition& lam) {
    Word w;
    const int l = lam.length();
    for (int v = 1; v <= l; ++v)
        for (int k = 0; k < lam.part(l - v); ++k) w.push_back(v);
    std::vector<Tabloid> out;
    do {
        out.push_back(word_to_tabloid(w, lam));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

DescentSet tabloid_ides(const Tabloid& t) {
    DescentSet s;
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i) < t.row_of(i + 1)) s.insert(i);
    return s;
}

Dominance tabloid_dominance(const Tabloid& s, const Tabloid& t) {
    if (s.size() != t.size() || s.shape() != t.shape()) throw InvalidArgument("tabloids of different shapes");
    for (int m = 1; m <= s.size(); ++m) {
        if (s.row_of(m) == t.row_of(m)) continue;
        return t.row_of(m) > s.row_of(m) ? Dominance::less : Dominance::greater;
    }
    return Dominance::equal;
}

Dominance dominance_compare(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape()) throw InvalidArgument("dominance_compare needs equal shapes");
    if (!s.is_standard() || !t.is_standard()) throw InvalidArgument("dominance_compare needs standard tableaux");
    for (int m = 1; m <= s.size(); ++m) {
        const Cell in_s = s.cell_of(m);
        const Cell in_t = t.cell_of(m);
        if (in_s == in_t) continue;
        if (weakly_northwest(in_t, in_s)) return Dominance::less;
        if (weakly_northwest(in_s, in_t)) return Dominance::greater;
        throw IncomparableCells("letter " + std::to_string(m) + " sits in incomparable cells of " + s.to_string() +
                                " and " + t.to_string());
    }
    return Dominance::equal;
}

// ---------------------------------------------------------------------------
// s_i actions

Tabloid apply_si(const Tabloid& t, int i) {
    if (i < 1 || i >= t.size()) throw InvalidArgument("s_i index out of range: " + std::to_string(i));
    std::vector<int> row_of = t.row_of_;
    std::swap(row_of[static_cast<std::size_t>(i - 1)], row_of[static_cast<std::size_t>(i)]);
    return Tabloid(Tabloid::Raw{}, t.shape_, std::move(row_of));
}

Tableau apply_si(const Tableau& t, int i) {
    if (i < 1 || i >= t.size()) throw InvalidArgument("s_i index out of range: " + std::to_string(i));
    auto rows = t.rows();
    for (auto& row : rows)
        for (int& v : row) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
    return Tableau(std::move(rows));
}

Permutation apply_si(const Permutation& w, int i) { return w.swap_letters(i); }

Word apply_si(const Word& w, int i) {
    if (i < 1 || i >= static_cast<int>(w.size())) throw InvalidArgument("s_i index out of range: " + std::to_string(i));
    Word out(w);
    std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)]);
    return out;
}

TableauStats tableau_stats(const Tableau& t) {
    if (!t.is_standard()) throw InvalidArgument("tableau_stats needs a standard tableau: " + t.to_string());
    TableauStats s;
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i) < t.row_of(i + 1)) s.ides.insert(i);
    s.maj = s.ides.sum();
    return s;
}

// ---------------------------------------------------------------------------
// RSK

std::pair<Tableau, Tableau> rsk(const Word& w) {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    for (std::size_t k = 0; k < w.size(); ++k) {
        int x = w[k];
        if (x < 1) throw InvalidArgument("RSK input letters must be positive");
        std::size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.push_back({x});
                q.push_back({static_cast<int>(k) + 1});
                break;
            }
            auto& row = p[r];
            auto bump = std::upper_bound(row.begin(), row.end(), x);
            if (bump == row.end()) {
                row.push_back(x);
                q[r].push_back(static_cast<int>(k) + 1);
                break;
            }
            std::swap(x, *bump);
        }
    }
    if (p.empty()) return {Tableau{}, Tableau{}};
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Composition& content) {
    if (shape.size() != content.size()) return {};
    std::vector<Tableau> out;
    horizontal_strip_fill(shape, content.parts(), [&](const std::vector<std::vector<int>>& rows) {
        out.emplace_back(rows);
    });
    return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    return semistandard_tableaux(shape, Composition(std::vector<int>(static_cast<std::size_t>(shape.size()), 1)));
}

std::int64_t kostka(const Partition& mu, const Composition& lam) {
    if (mu.size() != lam.size()) throw InvalidArgument("kostka needs |mu| = |lambda|");
    std::int64_t count = 0;
    horizontal_strip_fill(mu, lam.parts(), [&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

}  // namespace hecke0
