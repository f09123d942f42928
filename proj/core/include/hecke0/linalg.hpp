#pragma once

// Exact rational linear algebra over GMP rationals.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hecke0 {

using Rational = mpq_class;

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);
/// Accepts "p" or "p/q"; throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view s);

/// Sparse vector: basis index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

/// Adds `scale * v` into `acc`, dropping entries that cancel.
void axpy(SparseVector& acc, const Rational& scale, const SparseVector& v);

/// Square sparse matrix stored by columns; column c is the image of basis vector c.
class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t dim) : columns_(dim) {}

    static SparseMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return columns_.size(); }
    const SparseVector& column(std::size_t c) const { return columns_.at(c); }
    SparseVector& column(std::size_t c) { return columns_.at(c); }
    /// Sets entry (row, col); a zero value erases it.
    void set(std::size_t row, std::size_t col, const Rational& value);
    Rational get(std::size_t row, std::size_t col) const;

    SparseVector apply(const SparseVector& v) const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    bool operator==(const SparseMatrix& other) const { return columns_ == other.columns_; }

    std::size_t nonzeros() const noexcept;

private:
    std::vector<SparseVector> columns_;
};

/// Dense row-major rational matrix.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Solves A X = B exactly for X (A is rows x k with full column rank, B is
/// rows x m). Throws SolveFailure if A is rank deficient or some column of B
/// lies outside the column space of A.
DenseMatrix solve_exact(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace hecke0
