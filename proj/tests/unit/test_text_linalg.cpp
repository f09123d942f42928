#include <gtest/gtest.h>

#include "hecke0/errors.hpp"
#include "hecke0/linalg.hpp"
#include "hecke0/text.hpp"

using namespace hecke0;

TEST(Text, Partitions) {
    EXPECT_EQ(text::parse_partition("[2,2]"), Partition({2, 2}));
    EXPECT_EQ(text::parse_partition(" [ 3 , 1 ] "), Partition({3, 1}));
    EXPECT_EQ(text::parse_partition("(4)"), Partition({4}));
    EXPECT_THROW(text::parse_partition("[1,2]"), ParseError);
    EXPECT_THROW(text::parse_partition("[2,x]"), ParseError);
    EXPECT_THROW(text::parse_partition("2,2"), ParseError);
}

TEST(Text, PermutationsAndWords) {
    EXPECT_EQ(text::parse_permutation("[2,3,1]"), Permutation({2, 3, 1}));
    EXPECT_THROW(text::parse_permutation("[2,2,1]"), ParseError);
    EXPECT_EQ(text::parse_word("23322313"), (Word{2, 3, 3, 2, 2, 3, 1, 3}));
    EXPECT_EQ(text::parse_word("[10,2]"), (Word{10, 2}));
    EXPECT_THROW(text::parse_word("12a"), ParseError);
}

TEST(Text, RowSets) {
    const auto t = text::parse_tabloid("{{2,3,6,8},{1,4,5},{7}}");
    EXPECT_EQ(t.to_string(), "{{2,3,6,8},{1,4,5},{7}}");
    EXPECT_EQ(text::parse_tableau(" { {1, 3} , {2} } ").to_string(), "{{1,3},{2}}");
    EXPECT_EQ(text::parse_tabloid("{{3,2},{1}}").to_string(), "{{2,3},{1}}");
    EXPECT_THROW(text::parse_tabloid("{{1,2},{2}}"), ParseError);
    EXPECT_THROW(text::parse_tableau("{{1},{2,3}}"), ParseError);
    EXPECT_THROW(text::parse_row_sets("{{1,2}"), ParseError);
}

TEST(Rational, RoundTrip) {
    EXPECT_EQ(to_string(Rational(3)), "3");
    EXPECT_EQ(to_string(Rational(-2, 4)), "-1/2");
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1/-2"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(SparseMatrix, ProductsAndApply) {
    SparseMatrix swap(2);
    swap.set(1, 0, 1);
    swap.set(0, 1, 1);
    EXPECT_EQ(swap * swap, SparseMatrix::identity(2));
    SparseVector v{{0, Rational(2)}};
    EXPECT_EQ(swap.apply(v), (SparseVector{{1, Rational(2)}}));
    swap.set(1, 0, 0);
    EXPECT_EQ(swap.nonzeros(), 1u);
    EXPECT_EQ(swap.get(1, 0), 0);
    EXPECT_THROW(swap.set(2, 0, 1), InvalidArgument);
}

TEST(SparseVector, AxpyCancels) {
    SparseVector acc{{0, Rational(1)}, {1, Rational(2)}};
    axpy(acc, Rational(-1), SparseVector{{0, Rational(1)}});
    EXPECT_EQ(acc, (SparseVector{{1, Rational(2)}}));
}

TEST(SolveExact, OverdeterminedConsistent) {
    DenseMatrix a(3, 2);
    a(0, 0) = 1;
    a(1, 1) = 2;
    a(2, 0) = 1;
    a(2, 1) = 1;
    DenseMatrix b(3, 1);
    b(0, 0) = 1;
    b(1, 0) = 1;
    b(2, 0) = Rational(3, 2);
    const auto x = solve_exact(a, b);
    EXPECT_EQ(x(0, 0), 1);
    EXPECT_EQ(x(1, 0), Rational(1, 2));
}

TEST(SolveExact, Failures) {
    DenseMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 1;
    singular(1, 0) = 1;
    singular(1, 1) = 1;
    EXPECT_THROW(solve_exact(singular, DenseMatrix(2, 1)), SolveFailure);

    DenseMatrix a(2, 1);
    a(0, 0) = 1;
    DenseMatrix b(2, 1);
    b(1, 0) = 1;
    EXPECT_THROW(solve_exact(a, b), SolveFailure);
}
