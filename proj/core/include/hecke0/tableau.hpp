#pragma once

// Young tableaux and tabloids in French convention: row 1 is the bottom row,
// "north" means a larger row index and "west" a smaller column index.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecke0/combinatorics.hpp"

namespace hecke0 {

/// 1-based (row, column) position of a cell.
struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
};

/// True iff a is weakly northwest of b and a != b.
bool weakly_northwest(Cell a, Cell b) noexcept;
/// True iff a is strictly north and strictly west of b.
bool strictly_northwest(Cell a, Cell b) noexcept;

/// A filling of a Young diagram by positive integers.
class Tableau {
public:
    Tableau() = default;
    /// rows bottom-up; row lengths must form a partition.
    explicit Tableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int at(Cell c) const { return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)]; }

    /// Rows strictly increase to the right, columns strictly increase upward,
    /// and the content is exactly 1..n.
    bool is_standard() const;
    /// Rows weakly increase, columns strictly increase.
    bool is_semistandard() const;
    /// Each of 1..n appears once (standardness not required).
    bool is_bijective() const;

    /// Cell of a letter in a bijective filling; throws InvalidArgument when absent.
    Cell cell_of(int letter) const;
    int row_of(int letter) const { return cell_of(letter).row; }

    bool operator==(const Tableau&) const = default;
    std::strong_ordering operator<=>(const Tableau& other) const { return rows_ <=> other.rows_; }

    /// Row sets bottom-up: "{{1,3},{2}}".
    std::string to_string() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> cells_;  // index letter-1, filled when bijective
};

/// Row-equivalence class of bijective fillings. Stores, for each letter, the
/// (1-based) row it lies in.
class Tabloid {
public:
    Tabloid() = default;
    /// rows bottom-up as sets; sizes must match a partition and the union must be {1..n}.
    explicit Tabloid(const std::vector<std::vector<int>>& rows);
    /// The class of a bijective tableau filling.
    static Tabloid of(const Tableau& t);

    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return static_cast<int>(row_of_.size()); }
    int row_of(int letter) const noexcept { return row_of_[static_cast<std::size_t>(letter - 1)]; }
    /// Canonical representative: each row sorted increasingly, bottom-up.
    std::vector<std::vector<int>> rows() const;

    bool operator==(const Tabloid& other) const { return row_of_ == other.row_of_; }
    std::strong_ordering operator<=>(const Tabloid& other) const { return row_of_ <=> other.row_of_; }

    std::string to_string() const;

private:
    struct Raw {};
    Tabloid(Raw, Partition shape, std::vector<int> row_of) : shape_(std::move(shape)), row_of_(std::move(row_of)) {}
    friend Tabloid word_to_tabloid(const Word& w, const Partition& lam);
    friend Tabloid apply_si(const Tabloid& t, int i);

    Partition shape_;
    std::vector<int> row_of_;
};

/// All tabloids of shape lam, ordered greatest-first under the total order
/// {s} < {t} iff w_s >lex w_t.
std::vector<Tabloid> tabloids_of(const Partition& lam);

/// [w]_i = l(lam) - r_i + 1 where r_i is the row of letter i.
Word tabloid_word(const Tabloid& t);
/// Inverse of tabloid_word; throws InvalidArgument if w does not have content rev(lam).
Tabloid word_to_tabloid(const Word& w, const Partition& lam);
/// {i : i lies in a lower row than i+1}.
DescentSet tabloid_ides(const Tabloid& t);

/// Row-dominance of tabloids: the smallest letter in a different row is
/// further north in the greater tabloid.
enum class Dominance { less, equal, greater };
Dominance tabloid_dominance(const Tabloid& s, const Tabloid& t);

/// Smallest differing letter m; S < T iff m's cell in T is weakly northwest of
/// its cell in S. Throws IncomparableCells when neither cell beats the other.
Dominance dominance_compare(const Tableau& s, const Tableau& t);

/// Swap the letters i and i+1.
Tabloid apply_si(const Tabloid& t, int i);
Tableau apply_si(const Tableau& t, int i);
Permutation apply_si(const Permutation& w, int i);
/// Swap positions i and i+1 of a word.
Word apply_si(const Word& w, int i);

struct TableauStats {
    DescentSet ides;
    int maj = 0;
};
/// ides(T) = {i : row(i) < row(i+1)}; throws InvalidArgument unless T is standard.
TableauStats tableau_stats(const Tableau& t);

/// Row-insertion RSK. P is semistandard (standard for permutations), Q is standard.
std::pair<Tableau, Tableau> rsk(const Word& w);

/// All SYT(shape) in a deterministic order.
std::vector<Tableau> standard_tableaux(const Partition& shape);
/// All SSYT(shape, content), content may have zero parts.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Composition& content);
/// |SSYT(mu, lam)|.
std::int64_t kostka(const Partition& mu, const Composition& lam);

}  // namespace hecke0
