#include "hecke0/linalg.hpp"

#include <utility>

#include "hecke0/errors.hpp"

namespace hecke0 {

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view raw) {
    const std::string s(raw);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) return false;
        for (std::size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational \"" + s + "\"");
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in \"" + s + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

void axpy(SparseVector& acc, const Rational& scale, const SparseVector& v) {
    if (scale == 0) return;
    for (const auto& [idx, coeff] : v) {
        auto [it, inserted] = acc.try_emplace(idx, 0);
        it->second += scale * coeff;
        if (it->second == 0) acc.erase(it);
    }
}

SparseMatrix SparseMatrix::identity(std::size_t dim) {
    SparseMatrix m(dim);
    for (std::size_t c = 0; c < dim; ++c) m.columns_[c].emplace(c, 1);
    return m;
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
    if (row >= dim() || col >= dim()) throw InvalidArgument("sparse matrix index out of range");
    auto& column = columns_[col];
    if (value == 0)
        column.erase(row);
    else
        column[row] = value;
}

Rational SparseMatrix::get(std::size_t row, std::size_t col) const {
    const auto& column = columns_.at(col);
    auto it = column.find(row);
    return it == column.end() ? Rational(0) : it->second;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [idx, coeff] : v) axpy(out, coeff, columns_.at(idx));
    return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (rhs.dim() != dim()) throw InvalidArgument("sparse matrix dimension mismatch");
    SparseMatrix out(dim());
    for (std::size_t c = 0; c < dim(); ++c) out.columns_[c] = apply(rhs.columns_[c]);
    return out;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
    std::size_t count = 0;
    for (const auto& c : columns_) count += c.size();
    return count;
}

DenseMatrix solve_exact(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows) throw SolveFailure("row count mismatch between A and B");
    const std::size_t k = a.cols;
    const std::size_t m = b.cols;
    // Gauss-Jordan on [A | B].
    DenseMatrix aug(a.rows, k + m);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < k; ++c) aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < m; ++c) aug(r, k + c) = b(r, c);
    }
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t found = pivot_row;
        while (found < aug.rows && aug(found, c) == 0) ++found;
        if (found == aug.rows) throw SolveFailure("coefficient matrix is rank deficient");
        if (found != pivot_row)
            for (std::size_t x = 0; x < aug.cols; ++x) std::swap(aug(found, x), aug(pivot_row, x));
        const Rational inv = 1 / aug(pivot_row, c);
        for (std::size_t x = c; x < aug.cols; ++x) aug(pivot_row, x) *= inv;
        for (std::size_t r = 0; r < aug.rows; ++r) {
            if (r == pivot_row || aug(r, c) == 0) continue;
            const Rational f = aug(r, c);
            for (std::size_t x = c; x < aug.cols; ++x)
                if (aug(pivot_row, x) != 0) aug(r, x) -= f * aug(pivot_row, x);
        }
        ++pivot_row;
    }
    for (std::size_t r = k; r < aug.rows; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (aug(r, k + c) != 0) throw SolveFailure("right-hand side lies outside the column space");
    DenseMatrix x(k, m);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < m; ++c) x(r, c) = aug(r, k + c);
    return x;
}

}  // namespace hecke0
