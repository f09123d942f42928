#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hecke0/characters.hpp"
#include "hecke0/errors.hpp"
#include "hecke0/frobenius_oracle.hpp"
#include "hecke0/qsym.hpp"
#include "hecke0/tableau.hpp"

using namespace hecke0;

namespace {

QSymElement f_of(int n, std::initializer_list<std::pair<DescentSet, std::int64_t>> terms) {
    QSymElement f(n);
    for (const auto& [k, c] : terms) f.add(k, QPoly(c));
    return f;
}

ModuleSpec permutation_module_spec(int n, const std::vector<Permutation>& basis) {
    ModuleSpec spec;
    spec.n = n;
    std::map<Permutation, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index.emplace(basis[k], k);
        spec.basis.push_back(basis[k].to_string());
    }
    for (int i = 1; i < n; ++i) {
        SparseMatrix m(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) m.set(index.at(basis[k].swap_letters(i)), k, 1);
        spec.generators.push_back(std::move(m));
    }
    return spec;
}

ModuleSpec tabloid_spec(const Partition& lam) {
    const auto basis = tabloids_of(lam);
    ModuleSpec spec;
    spec.n = lam.size();
    std::map<Tabloid, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index.emplace(basis[k], k);
        spec.basis.push_back(basis[k].to_string());
    }
    for (int i = 1; i < spec.n; ++i) {
        SparseMatrix m(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) m.set(index.at(apply_si(basis[k], i)), k, 1);
        spec.generators.push_back(std::move(m));
    }
    return spec;
}

}  // namespace

TEST(QPoly, Arithmetic) {
    const QPoly q = QPoly::monomial(1);
    const QPoly p = q * q + q;
    EXPECT_EQ(p.to_string(), "q^2+q");
    EXPECT_EQ((QPoly::monomial(3, 2) - QPoly(1)).to_string(), "2*q^3-1");
    EXPECT_EQ(p.at_one(), 2);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(QPoly().to_string(), "0");
    EXPECT_EQ(QPoly(-1).to_string(), "-1");
}

TEST(QSym, RenderingOrder) {
    const auto f = f_of(4, {{DescentSet({1, 3}), 1}, {DescentSet({3}), 1}, {DescentSet({2}), 2}, {DescentSet({1}), 1},
                            {DescentSet(), 1}});
    EXPECT_EQ(f.to_string(), "F[] + F[1] + 2*F[2] + F[3] + F[1,3]");
    EXPECT_EQ(QSymElement(3).to_string(), "0");
    QSymElement g(2);
    g.add(DescentSet({1}), QPoly(-1));
    g.add(DescentSet(), QPoly::monomial(2));
    EXPECT_EQ(g.to_string(), "(q^2)*F[] - F[1]");
    EXPECT_THROW(g.add(DescentSet({2}), QPoly(1)), InvalidArgument);
}

TEST(Sym, RenderingOrder) {
    SymElement s(3);
    s.add(Partition({3}), QPoly(1));
    s.add(Partition({2, 1}), QPoly::monomial(2) + QPoly::monomial(1));
    s.add(Partition({1, 1, 1}), QPoly::monomial(3));
    EXPECT_EQ(s.to_string(), "(q^3)*s[1,1,1] + (q^2+q)*s[2,1] + s[3]");
    EXPECT_EQ(s.at_one().to_string(), "s[1,1,1] + 2*s[2,1] + s[3]");
}

TEST(FundamentalInVars, Examples) {
    EXPECT_EQ(render_monomials(fundamental_in_vars(DescentSet({1}), 3, 3)),
              "x1*x2^2 + x1*x2*x3 + x1*x3^2 + x2*x3^2");
    const auto two = fundamental_in_vars(DescentSet(), 2, 2);
    EXPECT_EQ(two.size(), 3u);
    EXPECT_EQ(render_monomials(two), "x1^2 + x1*x2 + x2^2");
    EXPECT_TRUE(fundamental_in_vars(DescentSet({1, 2}), 3, 2).empty());
}

TEST(FundamentalInVars, SchurAsSsytGeneratingFunction) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions_of(n)) {
            const int m = 3;
            std::map<std::vector<int>, std::int64_t> by_f;
            const auto s = schur_in_F(lam);
            for (const auto& [k, c] : s.terms())
                for (const auto& mono : fundamental_in_vars(k, n, m)) by_f[mono] += c.at_one();
            for (const auto& [mono, c] : by_f) {
                std::vector<int> content = mono;
                EXPECT_EQ(c, kostka(lam, Composition(content))) << lam.to_string();
            }
        }
}

TEST(SchurInF, Examples) {
    EXPECT_EQ(schur_in_F(Partition({2, 1})).to_string(), "F[1] + F[2]");
    EXPECT_EQ(schur_in_F(Partition({4})).to_string(), "F[]");
    EXPECT_EQ(schur_in_F(Partition({1, 1, 1})).to_string(), "F[1,2]");
}

TEST(SchurInF, InjectiveUpToSeven) {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> images;
        for (const auto& lam : partitions_of(n)) images.insert(schur_in_F(lam).to_string());
        EXPECT_EQ(images.size(), partitions_of(n).size());
    }
}

TEST(HInF, Examples) {
    EXPECT_EQ(h_in_F(Composition({2, 2})).to_string(), "F[] + F[1] + 2*F[2] + F[3] + F[1,3]");
    EXPECT_EQ(h_in_F(Composition({5})).to_string(), "F[]");
    QSymElement brute(3);
    for (const auto& w : Permutation::all(3)) brute.add(descents(w), QPoly(1));
    EXPECT_EQ(h_in_F(Composition({1, 1, 1})), brute);
    EXPECT_EQ(brute.terms().size(), 4u);
}

TEST(HInF, RearrangementInvariance) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : compositions_of(n)) EXPECT_EQ(h_in_F(c), h_in_F(c.reversed()));
    EXPECT_EQ(h_in_F(Composition({1, 2, 1})), h_in_F(Composition({2, 1, 1})));
    EXPECT_EQ(h_in_F(Composition({0, 2, 1})), h_in_F(Composition({2, 1})));
}

TEST(ToSchur, Examples) {
    const auto h22 = to_schur(h_in_F(Composition({2, 2})));
    ASSERT_TRUE(h22.symmetric());
    EXPECT_EQ(h22.value->to_string(), "s[2,2] + s[3,1] + s[4]");

    const auto lone = to_schur(f_of(3, {{DescentSet({1}), 1}}));
    EXPECT_FALSE(lone.symmetric());
    EXPECT_FALSE(lone.residual.is_zero());

    for (const auto& lam : partitions_of(5)) {
        const auto r = to_schur(schur_in_F(lam));
        ASSERT_TRUE(r.symmetric());
        SymElement expected(5);
        expected.add(lam, QPoly(1));
        EXPECT_EQ(*r.value, expected);
    }
}

TEST(ToSchur, RecoversRandomCombinations) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> degree(0, 4);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            SymElement s(n);
            for (const auto& lam : partitions_of(n)) s.add(lam, QPoly::monomial(degree(rng), coeff(rng)));
            const QSymElement f = from_schur(s);
            const auto r = to_schur(f);
            ASSERT_TRUE(r.symmetric());
            EXPECT_EQ(*r.value, s);
        }
}

TEST(FrobeniusFromTraces, Examples) {
    EXPECT_EQ(frobenius_from_traces(tabloid_spec(Partition({2, 2}))).to_string(), "s[2,2] + s[3,1] + s[4]");
    EXPECT_EQ(frobenius_from_traces(tabloid_spec(Partition({3}))).to_string(), "s[3]");
    EXPECT_EQ(frobenius_from_traces(permutation_module_spec(3, Permutation::all(3))).to_string(),
              "s[1,1,1] + 2*s[2,1] + s[3]");
}

TEST(FrobeniusFromTraces, PermutationModulesAreH) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            const auto s = frobenius_from_traces(tabloid_spec(lam));
            EXPECT_EQ(from_schur(s), h_in_F(Composition(lam.parts()))) << lam.to_string();
        }
}

TEST(FrobeniusFromTraces, ClassFunctionOnTwoRepresentatives) {
    const auto spec = permutation_module_spec(4, Permutation::all(4));
    for (const auto& mu : partitions_of(4)) {
        std::vector<int> reversed_word;
        int start = 1;
        for (int part : mu.parts()) {
            for (int a = start + part - 2; a >= start; --a) reversed_word.push_back(a);
            start += part;
        }
        EXPECT_EQ(class_trace(spec, mu), trace_of_word(spec, reversed_word));
        const Permutation rep = class_representative(mu);
        EXPECT_EQ(class_trace(spec, mu), trace_of_word(spec, reduced_word(rep.inverse())));
    }
}

TEST(FrobeniusFromTraces, ReducedWordMultipliesBack) {
    for (const auto& w : Permutation::all(4)) {
        Permutation acc = Permutation::identity(4);
        for (int i : reduced_word(w)) acc = acc.swap_positions(i);
        EXPECT_EQ(acc, w);
        EXPECT_EQ(static_cast<int>(reduced_word(w).size()), inversions(w));
    }
}

TEST(FrobeniusFromTraces, Errors) {
    ModuleSpec bad;
    bad.n = 2;
    bad.basis = {"a", "b"};
    SparseMatrix m(2);
    m.set(0, 0, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    bad.generators = {m};
    EXPECT_THROW(frobenius_from_traces(bad), RelationViolation);

    ModuleSpec odd;
    odd.n = 2;
    odd.basis = {"a", "b"};
    SparseMatrix id(2);
    id.set(0, 0, 1);
    id.set(1, 1, -1);
    odd.generators = {id};
    EXPECT_EQ(frobenius_from_traces(odd).to_string(), "s[1,1] + s[2]");

    ModuleSpec half;
    half.n = 2;
    half.basis = {"a"};
    SparseMatrix h(1);
    h.set(0, 0, 1);
    half.generators = {h};
    half.degrees = std::vector<int>{0};
    EXPECT_EQ(frobenius_from_traces(half, true).to_string(), "s[2]");
}

TEST(FrobeniusFromTraces, GradedNeedsDegreePreservingGenerators) {
    auto spec = tabloid_spec(Partition({1, 1}));
    spec.degrees = std::vector<int>{0, 1};
    EXPECT_THROW(frobenius_from_traces(spec, true), InvalidArgument);
    spec.degrees.reset();
    EXPECT_THROW(frobenius_from_traces(spec, true), InvalidArgument);
}
