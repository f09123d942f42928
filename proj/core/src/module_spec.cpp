#include "hecke0/module_spec.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hecke0/errors.hpp"

namespace hecke0 {

namespace {

using nlohmann::json;

std::string label_at(const ModuleSpec& spec, std::size_t c) {
    return "column " + std::to_string(c) + " (" + spec.basis[c] + ")";
}

void check_products_equal(const ModuleSpec& spec, const SparseMatrix& lhs, const SparseMatrix& rhs,
                          const std::string& name, std::vector<std::string>& out) {
    for (std::size_t c = 0; c < spec.dim(); ++c)
        if (lhs.column(c) != rhs.column(c)) out.push_back(name + " fails at " + label_at(spec, c));
}

}  // namespace

void check_structure(const ModuleSpec& spec) {
    if (spec.n < 1) throw InvalidArgument("module spec: n must be positive");
    if (spec.generators.size() != static_cast<std::size_t>(spec.n - 1))
        throw InvalidArgument("module spec: expected " + std::to_string(spec.n - 1) + " generators, got " +
                              std::to_string(spec.generators.size()));
    std::set<std::string> seen;
    for (const auto& label : spec.basis)
        if (!seen.insert(label).second) throw InvalidArgument("module spec: duplicate basis label \"" + label + "\"");
    for (std::size_t i = 0; i < spec.generators.size(); ++i)
        if (spec.generators[i].dim() != spec.dim())
            throw InvalidArgument("module spec: generator s" + std::to_string(i + 1) + " has wrong size");
    if (spec.degrees) {
        if (spec.degrees->size() != spec.dim()) throw InvalidArgument("module spec: degrees length mismatch");
        for (int d : *spec.degrees)
            if (d < 0) throw InvalidArgument("module spec: negative degree");
    }
}

std::vector<std::string> coxeter_relation_failures(const ModuleSpec& spec) {
    std::vector<std::string> out;
    const auto id = SparseMatrix::identity(spec.dim());
    const int r = spec.n - 1;
    for (int i = 1; i <= r; ++i) {
        const auto& si = spec.generator(i);
        check_products_equal(spec, si * si, id, "s" + std::to_string(i) + "^2 = 1", out);
    }
    for (int i = 1; i <= r; ++i)
        for (int j = i + 2; j <= r; ++j) {
            const auto& a = spec.generator(i);
            const auto& b = spec.generator(j);
            check_products_equal(spec, a * b, b * a,
                                 "s" + std::to_string(i) + "s" + std::to_string(j) + " = s" + std::to_string(j) + "s" +
                                     std::to_string(i),
                                 out);
        }
    for (int i = 1; i + 1 <= r; ++i) {
        const auto& a = spec.generator(i);
        const auto& b = spec.generator(i + 1);
        const auto si = std::to_string(i);
        const auto sj = std::to_string(i + 1);
        check_products_equal(spec, a * b * a, b * a * b, "s" + si + "s" + sj + "s" + si + " = s" + sj + "s" + si + "s" + sj,
                             out);
    }
    return out;
}

void validate(const ModuleSpec& spec) {
    check_structure(spec);
    auto failures = coxeter_relation_failures(spec);
    if (!failures.empty()) throw RelationViolation(std::move(failures));
}

bool degree_preserving(const ModuleSpec& spec) {
    if (!spec.degrees) return true;
    for (const auto& g : spec.generators)
        for (std::size_t c = 0; c < g.dim(); ++c)
            for (const auto& [r, v] : g.column(c))
                if (spec.degree(r) != spec.degree(c)) return false;
    return true;
}

ModuleSpec parse_module_spec(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("module spec: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("module spec: top level must be an object");

    ModuleSpec spec;
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("module spec: field n must be an integer");
    spec.n = doc["n"].get<int>();
    if (spec.n < 1) throw ParseError("module spec: field n must be positive");

    if (!doc.contains("basis") || !doc["basis"].is_array()) throw ParseError("module spec: field basis must be an array");
    for (std::size_t k = 0; k < doc["basis"].size(); ++k) {
        const auto& b = doc["basis"][k];
        if (!b.is_string()) throw ParseError("module spec: basis[" + std::to_string(k) + "] must be a string");
        spec.basis.push_back(b.get<std::string>());
    }
    const std::size_t dim = spec.basis.size();

    if (doc.contains("degrees") && !doc["degrees"].is_null()) {
        const auto& d = doc["degrees"];
        if (!d.is_array() || d.size() != dim)
            throw ParseError("module spec: degrees must be an array of length " + std::to_string(dim));
        std::vector<int> degrees;
        for (std::size_t k = 0; k < d.size(); ++k) {
            if (!d[k].is_number_integer() || d[k].get<int>() < 0)
                throw ParseError("module spec: degrees[" + std::to_string(k) + "] must be a nonnegative integer");
            degrees.push_back(d[k].get<int>());
        }
        spec.degrees = std::move(degrees);
    }

    if (!doc.contains("generators") || !doc["generators"].is_object())
        throw ParseError("module spec: field generators must be an object");
    const auto& gens = doc["generators"];
    for (const auto& [key, value] : gens.items()) {
        bool known = false;
        for (int i = 1; i < spec.n; ++i) known = known || key == "s" + std::to_string(i);
        if (!known) throw ParseError("module spec: unexpected generator key \"" + key + "\"");
    }
    for (int i = 1; i < spec.n; ++i) {
        const std::string key = "s" + std::to_string(i);
        if (!gens.contains(key)) throw ParseError("module spec: missing generators." + key);
        const auto& triples = gens[key];
        if (!triples.is_array()) throw ParseError("module spec: generators." + key + " must be an array");
        SparseMatrix m(dim);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t t = 0; t < triples.size(); ++t) {
            const std::string where = "generators." + key + "[" + std::to_string(t) + "]";
            const auto& e = triples[t];
            if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
                !e[2].is_string())
                throw ParseError("module spec: " + where + " must be [row, col, \"p/q\"]");
            const auto row = e[0].get<std::size_t>();
            const auto col = e[1].get<std::size_t>();
            if (row >= dim || col >= dim) throw ParseError("module spec: " + where + " index out of range");
            if (!seen.insert({row, col}).second) throw ParseError("module spec: " + where + " repeats an entry");
            Rational v;
            try {
                v = parse_rational(e[2].get<std::string>());
            } catch (const ParseError& err) {
                throw ParseError("module spec: " + where + ": " + err.what());
            }
            m.set(row, col, v);
        }
        spec.generators.push_back(std::move(m));
    }

    try {
        check_structure(spec);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
    auto failures = coxeter_relation_failures(spec);
    if (!failures.empty()) throw RelationViolation(std::move(failures));
    return spec;
}

std::string serialize_module_spec(const ModuleSpec& spec) {
    json doc = json::object();
    doc["n"] = spec.n;
    doc["basis"] = spec.basis;
    if (spec.degrees) doc["degrees"] = *spec.degrees;
    json gens = json::object();
    for (int i = 1; i < spec.n; ++i) {
        json triples = json::array();
        const auto& g = spec.generator(i);
        for (std::size_t c = 0; c < g.dim(); ++c)
            for (const auto& [r, v] : g.column(c)) triples.push_back(json::array({r, c, to_string(v)}));
        gens["s" + std::to_string(i)] = std::move(triples);
    }
    doc["generators"] = std::move(gens);
    return doc.dump() + "\n";
}

ModuleSpec read_module_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_module_spec(buf.str());
}

void write_module_spec_file(const ModuleSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write spec file " + path);
    out << serialize_module_spec(spec);
}

}  // namespace hecke0
