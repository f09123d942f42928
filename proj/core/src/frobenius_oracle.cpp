#include "hecke0/frobenius_oracle.hpp"

#include <set>

#include "hecke0/characters.hpp"
#include "hecke0/errors.hpp"

namespace hecke0 {

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> line = w.one_line();
    std::vector<int> steps;
    const int n = w.size();
    for (int pass = 0; pass < n; ++pass)
        for (int p = 0; p + 1 < n; ++p)
            if (line[static_cast<std::size_t>(p)] > line[static_cast<std::size_t>(p + 1)]) {
                std::swap(line[static_cast<std::size_t>(p)], line[static_cast<std::size_t>(p + 1)]);
                steps.push_back(p + 1);
            }
    // w s_{a_1} s_{a_2} ... s_{a_k} = id, hence w = s_{a_k} ... s_{a_1}.
    return {steps.rbegin(), steps.rend()};
}

Rational trace_of_word(const ModuleSpec& spec, const std::vector<int>& word, std::optional<int> degree) {
    Rational total = 0;
    for (std::size_t c = 0; c < spec.dim(); ++c) {
        if (degree && spec.degree(c) != *degree) continue;
        SparseVector v{{c, Rational(1)}};
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = spec.generator(*it).apply(v);
        auto hit = v.find(c);
        if (hit != v.end()) total += hit->second;
    }
    return total;
}

Rational class_trace(const ModuleSpec& spec, const Partition& mu, std::optional<int> degree) {
    std::vector<int> word;
    int start = 1;
    for (int part : mu.parts()) {
        for (int a = start; a < start + part - 1; ++a) word.push_back(a);
        start += part;
    }
    return trace_of_word(spec, word, degree);
}

SymElement frobenius_from_traces(const ModuleSpec& spec, bool graded) {
    validate(spec);
    const int n = spec.n;
    std::vector<std::optional<int>> blocks;
    if (graded) {
        if (!spec.degrees) throw InvalidArgument("graded characteristic needs degrees");
        if (!degree_preserving(spec)) throw InvalidArgument("graded characteristic needs degree-preserving generators");
        std::set<int> ds(spec.degrees->begin(), spec.degrees->end());
        blocks.assign(ds.begin(), ds.end());
    } else {
        blocks.push_back(std::nullopt);
    }

    const auto parts = partitions_of(n);
    SymElement out(n);
    for (const auto& block : blocks) {
        std::vector<Rational> traces;
        for (const auto& mu : parts) traces.push_back(class_trace(spec, mu, block));
        for (const auto& lam : parts) {
            Rational c = 0;
            for (std::size_t k = 0; k < parts.size(); ++k)
                c += traces[k] * Rational(mn_character(lam, parts[k])) / Rational(centralizer_size(parts[k]));
            if (c.get_den() != 1 || c < 0)
                throw NonIntegralDecomposition("multiplicity of s" + lam.to_string() + " is " + to_string(c));
            if (c == 0) continue;
            out.add(lam, QPoly::monomial(block.value_or(0), c.get_num().get_si()));
        }
    }
    return out;
}

}  // namespace hecke0
