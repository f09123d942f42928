#include "hecke0/compat.hpp"

#include <map>
#include <sstream>

#include "hecke0/errors.hpp"
#include "hecke0/frobenius_oracle.hpp"
#include "hecke0/specht_module.hpp"
#include "hecke0/tabloid_module.hpp"
#include "hecke0/tableau.hpp"

namespace hecke0 {

QSymElement qsym_char(const HeckeModule& m, bool graded) {
    const Report tri = verify_triangularity(m);
    if (!tri.passed()) throw NotTriangular(tri.failures.front());
    QSymElement out(m.n());
    for (std::size_t k = 0; k < m.dim(); ++k) out.add(m.neg_self_set(k), QPoly::monomial(graded ? m.degree(k) : 0));
    return out;
}

namespace {

std::string render_column(const ModuleSpec& spec, const SparseVector& col) {
    if (col.empty()) return "0";
    std::string s;
    for (const auto& [r, c] : col) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*" + spec.basis[r];
    }
    return s;
}

HeckeModule classify_spec(const ModuleSpec& spec, Level level) {
    std::vector<std::vector<PiResult>> pi(static_cast<std::size_t>(spec.n - 1));
    std::vector<std::string> failures;
    for (int i = 1; i < spec.n; ++i)
        for (std::size_t k = 0; k < spec.dim(); ++k) {
            const auto& col = spec.generator(i).column(k);
            auto r = classify_column(col, k, level);
            if (!r) {
                failures.push_back("CASE s" + std::to_string(i) + " FAIL at " + spec.basis[k] + ": " +
                                   render_column(spec, col));
                r = PiResult::zero();
            }
            pi[static_cast<std::size_t>(i - 1)].push_back(*r);
        }
    if (!failures.empty()) throw CaseViolation(std::move(failures));
    std::vector<int> degrees = spec.degrees.value_or(std::vector<int>(spec.dim(), 0));
    return HeckeModule(spec.n, spec.basis, std::move(degrees), std::move(pi));
}

}  // namespace

HeckeModule build_hecke_from_sn(const ModuleSpec& spec, Level level) {
    validate(spec);
    HeckeModule m = classify_spec(spec, level);
    Report rel = verify_hecke_relations(m);
    if (!rel.passed()) throw RelationViolation(std::move(rel.failures));
    return m;
}

std::string CompatReport::render() const {
    std::ostringstream out;
    out << "LEVEL: " << to_string(level) << "\n";
    out << "GRADED: " << (graded ? "yes" : "no") << "\n";
    out << "ACTION: " << (action_valid ? "valid" : "invalid") << "\n";
    out << "TRIANGULAR: " << (triangular ? "yes" : "no") << "\n";
    out << "QSYM: " << (qsym_char ? qsym_char->to_string() : "-") << "\n";
    out << "SCHUR: " << (schur ? schur->to_string() : (qsym_char ? "not symmetric" : "-")) << "\n";
    out << "ORACLE: " << (sym_char ? sym_char->to_string() : "-") << "\n";
    for (const auto& w : warnings) out << "WARNING: " << w << "\n";
    for (const auto& v : violations) out << "VIOLATION: " << v << "\n";
    if (equal)
        out << "EQUAL: " << schur->to_string() << "\n";
    else
        out << "NOT EQUAL\n";
    return out.str();
}

CompatReport check_compat(const ModuleSpec& spec, Level level) {
    CompatReport report;
    report.level = level;
    report.graded = spec.degrees.has_value();
    if (report.graded && !degree_preserving(spec)) {
        report.graded = false;
        report.warnings.push_back("generators do not preserve degree; comparing ungraded characteristics");
    }

    std::optional<HeckeModule> m;
    try {
        m = classify_spec(spec, level);
    } catch (const CaseViolation& e) {
        report.violations.insert(report.violations.end(), e.witnesses().begin(), e.witnesses().end());
    } catch (const Error& e) {
        report.violations.push_back(e.what());
    }
    if (m) {
        const Report rel = verify_hecke_relations(*m);
        report.action_valid = rel.passed();
        report.violations.insert(report.violations.end(), rel.failures.begin(), rel.failures.end());
        const Report tri = verify_triangularity(*m);
        report.triangular = tri.passed();
        report.violations.insert(report.violations.end(), tri.failures.begin(), tri.failures.end());
        if (report.triangular) {
            report.qsym_char = qsym_char(*m, report.graded);
            auto expansion = to_schur(*report.qsym_char);
            if (expansion.symmetric())
                report.schur = std::move(expansion.value);
            else
                report.violations.push_back("characteristic is not symmetric; residual " +
                                            expansion.residual.to_string());
        }
    }
    try {
        report.sym_char = frobenius_from_traces(spec, report.graded);
    } catch (const Error& e) {
        report.violations.push_back(std::string("oracle: ") + e.what());
    }
    report.equal = report.action_valid && report.triangular && report.schur && report.sym_char &&
                   *report.schur == *report.sym_char;
    return report;
}

GradedIdentity coinvariant_graded_identity(int n, MonomialOrder order) {
    GradedIdentity g;
    const HeckeModule m = coinvariant_module(n, order);
    auto lhs = to_schur(qsym_char(m, true));
    g.lhs = lhs.value.value_or(SymElement(n));

    g.rhs = SymElement(n);
    for (const auto& lam : partitions_of(n)) {
        QPoly c;
        for (const auto& q : standard_tableaux(lam)) c += QPoly::monomial(tableau_stats(q).maj);
        g.rhs.add(lam, c);
    }
    g.equal = lhs.symmetric() && g.lhs == g.rhs;

    g.artin_sum = QSymElement(n);
    for (const auto& a : artin_basis(n, order)) {
        DescentSet asc;
        for (int i = 1; i < n; ++i)
            if (a[static_cast<std::size_t>(i - 1)] < a[static_cast<std::size_t>(i)]) asc.insert(i);
        g.artin_sum.add(asc, QPoly::monomial(exponent_degree(a, n)));
    }
    g.inv_sum = QSymElement(n);
    g.maj_sum = QSymElement(n);
    g.term_by_term = true;
    for (const auto& w : Permutation::all(n)) {
        const PermStats st = perm_stats(w);
        g.inv_sum.add(st.ides, QPoly::monomial(st.inv));
        g.maj_sum.add(st.ides, QPoly::monomial(st.maj));

        const InversionCode c = inversion_code(w);
        DescentSet asc;
        for (int i = 1; i < n; ++i)
            if (c[i] < c[i + 1]) asc.insert(i);
        const Permutation phi = foata(w);
        if (asc != st.ides || c.sum() != st.inv || ides(phi) != st.ides || inversions(phi) != st.maj)
            g.term_by_term = false;
    }
    g.intermediates_equal = g.artin_sum == g.inv_sum && g.inv_sum == g.maj_sum && g.artin_sum == qsym_char(m, true);
    return g;
}

HeckeModule builtin_module(const Builtin& b) {
    switch (b.kind) {
        case Builtin::Kind::tabloid: return tabloid_module(b.shape);
        case Builtin::Kind::specht: return specht_module(b.shape);
        case Builtin::Kind::coinvariant: return coinvariant_module(b.n, b.order);
    }
    throw InvalidArgument("unknown builtin");
}

ModuleSpec sn_spec_of(const Builtin& b) {
    ModuleSpec spec;
    switch (b.kind) {
        case Builtin::Kind::tabloid: {
            spec.n = b.shape.size();
            const auto basis = tabloids_of(b.shape);
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
            break;
        }
        case Builtin::Kind::specht: {
            spec.n = b.shape.size();
            for (const auto& t : specht_basis(b.shape)) spec.basis.push_back(t.to_string());
            spec.generators = specht_generators(b.shape);
            break;
        }
        case Builtin::Kind::coinvariant: {
            spec.n = b.n;
            std::vector<int> degrees;
            for (const auto& e : artin_basis(b.n, b.order)) {
                spec.basis.push_back(monomial_label(e, b.n));
                degrees.push_back(exponent_degree(e, b.n));
            }
            spec.degrees = std::move(degrees);
            spec.generators = coinvariant_generators(b.n, b.order);
            break;
        }
    }
    return spec;
}

}  // namespace hecke0
