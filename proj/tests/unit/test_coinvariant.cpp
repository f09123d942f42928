#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hecke0/coinvariant.hpp"
#include "hecke0/errors.hpp"
#include "hecke0/module_spec.hpp"

using namespace hecke0;

namespace {

constexpr MonomialOrder kOrders[] = {MonomialOrder::lex, MonomialOrder::degrevlex};

PolynomialVector mono(int n, MonomialOrder order, const std::vector<int>& alpha, const Rational& c = 1) {
    return PolynomialVector::monomial(n, order, make_exponent(alpha), c);
}

PolynomialVector random_polynomial(int n, MonomialOrder order, std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(0, n + 1), coeff(-5, 5), terms(1, 6);
    PolynomialVector p(n, order);
    for (int t = terms(rng); t > 0; --t) {
        std::vector<int> a(static_cast<std::size_t>(n));
        for (auto& x : a) x = exp(rng);
        Rational c(coeff(rng), 1 + std::abs(coeff(rng)));
        c.canonicalize();
        p.add(make_exponent(a), c);
    }
    return p;
}

/// Action of the module as label -> label strings, independent of basis order.
std::map<std::pair<int, std::string>, std::string> action_by_label(const HeckeModule& m) {
    std::map<std::pair<int, std::string>, std::string> out;
    for (int i = 1; i < m.n(); ++i)
        for (std::size_t k = 0; k < m.dim(); ++k) out[{i, m.label(k)}] = to_string(m, m.pi(i, k), k);
    return out;
}

}  // namespace

TEST(MonomialOrders, Compare) {
    const MonomialLess lex{MonomialOrder::lex, 3}, grevlex{MonomialOrder::degrevlex, 3};
    const auto a = make_exponent({1, 0, 0}), b = make_exponent({0, 2, 0}), c = make_exponent({0, 1, 1});
    EXPECT_TRUE(lex(b, a));
    EXPECT_TRUE(grevlex(a, b));
    EXPECT_TRUE(lex(c, b));
    EXPECT_TRUE(grevlex(c, b));
    EXPECT_FALSE(lex(a, a));
    EXPECT_EQ(parse_monomial_order("degrevlex"), MonomialOrder::degrevlex);
    EXPECT_EQ(to_string(MonomialOrder::lex), "lex");
    EXPECT_THROW(parse_monomial_order("grlex"), ParseError);
}

TEST(Polynomial, Rendering) {
    auto p = mono(3, MonomialOrder::lex, {0, 1, 0}, -1);
    p += mono(3, MonomialOrder::lex, {0, 0, 2}, -1);
    EXPECT_EQ(p.to_string(), "-x2 - x3^2");
    EXPECT_EQ(PolynomialVector(2, MonomialOrder::lex).to_string(), "0");
    EXPECT_EQ(monomial_label(make_exponent({0, 1, 2}), 3), "x^(0,1,2)");
    EXPECT_EQ(exponent_degree(make_exponent({0, 1, 2}), 3), 3);
}

TEST(Groebner, Generators) {
    for (auto order : kOrders) {
        const GroebnerBasis g(3, order);
        auto expected = mono(3, order, {0, 2, 0});
        expected += mono(3, order, {0, 1, 1});
        expected += mono(3, order, {0, 0, 2});
        EXPECT_EQ(g.generator(2), expected);
        EXPECT_EQ(g.generator(2).leading().first, make_exponent({0, 2, 0}));
    }
    EXPECT_THROW(GroebnerBasis(0, MonomialOrder::lex), InvalidArgument);
    EXPECT_THROW(GroebnerBasis(kMaxVariables + 1, MonomialOrder::lex), InvalidArgument);
}

TEST(Groebner, ReductionExamples) {
    for (auto order : kOrders) {
        EXPECT_EQ(groebner_reduce(mono(2, order, {1, 0}), 2, order).to_string(), "-x2");
        EXPECT_TRUE(groebner_reduce(mono(2, order, {0, 2}), 2, order).is_zero());
        EXPECT_TRUE(groebner_reduce(mono(3, order, {1, 1, 1}), 3, order).is_zero());
        EXPECT_EQ(groebner_reduce(mono(3, order, {0, 1, 2}), 3, order), mono(3, order, {0, 1, 2}));
    }
    auto x1 = groebner_reduce(mono(3, MonomialOrder::lex, {1, 0, 0}), 3, MonomialOrder::lex);
    EXPECT_EQ(x1.to_string(), "-x2 - x3");
}

TEST(Groebner, IdealElementsReduceToZero) {
    for (auto order : kOrders)
        for (int n = 1; n <= 4; ++n) {
            const GroebnerBasis g(n, order);
            for (int j = 1; j <= n; ++j) EXPECT_TRUE(g.reduce(g.generator(j)).is_zero());
            for (const auto& a : artin_basis(n, order)) {
                PolynomialVector e1_times(n, order);
                for (int j = 0; j < n; ++j) {
                    auto b = a;
                    ++b[static_cast<std::size_t>(j)];
                    e1_times.add(b, 1);
                }
                EXPECT_TRUE(g.reduce(e1_times).is_zero());
            }
        }
}

TEST(Groebner, IdempotentAndLinear) {
    std::mt19937 rng(7);
    for (auto order : kOrders)
        for (int n = 1; n <= 4; ++n) {
            const GroebnerBasis g(n, order);
            for (int trial = 0; trial < 40; ++trial) {
                const auto p = random_polynomial(n, order, rng);
                const auto q = random_polynomial(n, order, rng);
                const auto rp = g.reduce(p);
                EXPECT_EQ(g.reduce(rp), rp);
                for (const auto& [e, c] : rp.terms())
                    for (int j = 1; j <= n; ++j) ASSERT_LT(e[static_cast<std::size_t>(j - 1)], j);
                auto sum = p;
                sum += q;
                auto lhs = g.reduce(sum);
                auto rhs = rp;
                rhs += g.reduce(q);
                EXPECT_EQ(lhs, rhs);
                auto scaled = p;
                scaled *= Rational(-3, 2);
                auto expected = rp;
                expected *= Rational(-3, 2);
                EXPECT_EQ(g.reduce(scaled), expected);
            }
        }
}

TEST(ArtinBasis, SizeAndOrder) {
    std::int64_t fact = 1;
    for (int n = 1; n <= 7; ++n) {
        fact *= n;
        for (auto order : kOrders) {
            const auto basis = artin_basis(n, order);
            EXPECT_EQ(static_cast<std::int64_t>(basis.size()), fact);
            const MonomialLess less{order, n};
            for (std::size_t k = 1; k < basis.size(); ++k) ASSERT_TRUE(less(basis[k], basis[k - 1]));
        }
    }
    const auto two = artin_basis(2, MonomialOrder::lex);
    EXPECT_EQ(two.front(), make_exponent({0, 1}));
    EXPECT_EQ(two.back(), make_exponent({0, 0}));
}

TEST(CoinvariantModule, Examples) {
    const auto m2 = coinvariant_module(2);
    EXPECT_EQ(m2.pi(1, *m2.index_of("x^(0,1)")), PiResult::neg_self());
    EXPECT_EQ(m2.pi(1, *m2.index_of("x^(0,0)")), PiResult::zero());

    const auto m3 = coinvariant_module(3);
    const auto top = *m3.index_of("x^(0,1,2)");
    EXPECT_EQ(m3.pi(1, top), PiResult::neg_self());
    EXPECT_EQ(m3.pi(2, top), PiResult::neg_self());
    EXPECT_EQ(m3.degree(top), 3);
    const auto mid = *m3.index_of("x^(0,1,0)");
    EXPECT_EQ(m3.pi(2, mid), PiResult::move_to(*m3.index_of("x^(0,0,1)")));
    EXPECT_EQ(m3.pi(1, mid), PiResult::neg_self());
    EXPECT_EQ(m3.pi(1, *m3.index_of("x^(0,0,1)")), PiResult::zero());
}

TEST(CoinvariantModule, ExponentRuleMatchesReduction) {
    for (auto order : kOrders)
        for (int n = 1; n <= 5; ++n) {
            const auto c = classify_by_reduction(n, order);
            EXPECT_TRUE(c.failures.empty()) << n;
            const auto m = coinvariant_module(n, order);
            for (int i = 1; i < n; ++i)
                for (std::size_t k = 0; k < m.dim(); ++k)
                    ASSERT_EQ(m.pi(i, k), c.pi[static_cast<std::size_t>(i - 1)][k]);
        }
}

TEST(CoinvariantModule, OrdersGiveSameAction) {
    for (int n = 1; n <= 5; ++n) {
        const auto lex = coinvariant_module(n, MonomialOrder::lex);
        const auto grevlex = coinvariant_module(n, MonomialOrder::degrevlex);
        EXPECT_EQ(std::set<std::string>(lex.labels().begin(), lex.labels().end()),
                  std::set<std::string>(grevlex.labels().begin(), grevlex.labels().end()));
        EXPECT_EQ(action_by_label(lex), action_by_label(grevlex)) << n;
    }
}

TEST(CoinvariantModule, LeadingTermProperty) {
    for (auto order : kOrders)
        for (int n = 1; n <= 5; ++n) {
            const auto r = verify_leading_term_property(n, order);
            EXPECT_TRUE(r.passed()) << n << (r.passed() ? "" : r.failures.front());
        }
}

TEST(CoinvariantModule, RelationsAndTriangularity) {
    for (auto order : kOrders)
        for (int n = 1; n <= 5; ++n) {
            const auto m = coinvariant_module(n, order);
            EXPECT_TRUE(verify_hecke_relations(m, 2).passed()) << n;
            EXPECT_TRUE(verify_triangularity(m).passed()) << n;
        }
}

TEST(CoinvariantGenerators, CoxeterAndDegree) {
    for (auto order : kOrders)
        for (int n = 1; n <= 4; ++n) {
            ModuleSpec spec;
            spec.n = n;
            std::vector<int> degrees;
            for (const auto& a : artin_basis(n, order)) {
                spec.basis.push_back(monomial_label(a, n));
                degrees.push_back(exponent_degree(a, n));
            }
            spec.degrees = degrees;
            spec.generators = coinvariant_generators(n, order);
            EXPECT_TRUE(coxeter_relation_failures(spec).empty()) << n;
            EXPECT_TRUE(degree_preserving(spec));
        }
    const auto g = coinvariant_generators(2, MonomialOrder::lex);
    EXPECT_EQ(g[0].get(0, 0), -1);
    EXPECT_EQ(g[0].get(1, 1), 1);
}
