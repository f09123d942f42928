// hecke0: characteristics, verifiers and bijections for deformed 0-Hecke modules.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hecke0/combinatorics.hpp"
#include "hecke0/compat.hpp"
#include "hecke0/errors.hpp"
#include "hecke0/module_spec.hpp"
#include "hecke0/specht_module.hpp"
#include "hecke0/tableau.hpp"
#include "hecke0/tabloid_module.hpp"
#include "hecke0/text.hpp"

namespace {

using namespace hecke0;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kSizeGuard = 8;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Target {
    std::string module;
    std::string shape;
    int n = 0;
    std::string order = "lex";
    bool force = false;
};

void add_target_options(CLI::App* cmd, Target& t) {
    cmd->add_option("--module", t.module, "tabloid, specht or coinvariant")
        ->required()
        ->check(CLI::IsMember({"tabloid", "specht", "coinvariant"}));
    cmd->add_option("--shape", t.shape, "partition, e.g. [2,2]");
    cmd->add_option("--n", t.n, "number of variables (coinvariant)");
    cmd->add_option("--order", t.order, "monomial order for coinvariants")->check(CLI::IsMember({"lex", "degrevlex"}));
    cmd->add_flag("--force", t.force, "allow n > 8");
}

void guard_size(int n, bool force) {
    if (n > kSizeGuard && !force) throw UsageError("n = " + std::to_string(n) + " exceeds 8; pass --force to run anyway");
}

Builtin resolve(const Target& t) {
    if (t.module == "coinvariant") {
        if (t.n < 1) throw UsageError("coinvariant needs --n >= 1");
        guard_size(t.n, t.force);
        return Builtin::coinvariant(t.n, parse_monomial_order(t.order));
    }
    if (t.shape.empty()) throw UsageError(t.module + " needs --shape");
    Partition lam = text::parse_partition(t.shape);
    guard_size(lam.size(), t.force);
    return t.module == "tabloid" ? Builtin::tabloid(std::move(lam)) : Builtin::specht(std::move(lam));
}

std::string describe(const Builtin& b) {
    switch (b.kind) {
        case Builtin::Kind::tabloid: return "tabloid " + b.shape.to_string();
        case Builtin::Kind::specht: return "specht " + b.shape.to_string();
        case Builtin::Kind::coinvariant: return "coinvariant n=" + std::to_string(b.n) + " " + to_string(b.order);
    }
    return {};
}

unsigned worker_count(unsigned requested) {
    unsigned workers = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("HECKE0_MAX_WORKERS")) {
        const int v = std::atoi(cap);
        if (v > 0) workers = std::min(workers, static_cast<unsigned>(v));
    }
    return std::max(1u, workers);
}

// ---------------------------------------------------------------------------

int run_frobenius(const Target& t, bool graded, const std::string& format) {
    const Builtin b = resolve(t);
    const QSymElement f = qsym_char(builtin_module(b), graded);
    if (format == "qsym") {
        std::cout << f.to_string() << "\n";
        return kExitOk;
    }
    const auto s = to_schur(f);
    if (!s.symmetric()) {
        std::cerr << "not symmetric; residual " << s.residual.to_string() << "\n";
        return kExitFailed;
    }
    std::cout << s.value->to_string() << "\n";
    return kExitOk;
}

std::vector<std::string> split_checks(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct CheckOutcome {
    std::string text;
    bool passed = true;
};

CheckOutcome run_checks(const Builtin& b, const std::vector<std::string>& checks, unsigned workers) {
    CheckOutcome out;
    std::ostringstream text;
    auto emit = [&](const std::string& name, const Report& r) {
        text << (r.passed() ? "PASS " : "FAIL ") << name << " " << describe(b) << "\n";
        for (const auto& line : r.failures) text << "  " << line << "\n";
        out.passed = out.passed && r.passed();
    };
    auto fresh = [&](const Error& e) {
        Report r;
        r.failures.push_back(e.what());
        return r;
    };
    for (const auto& check : checks) {
        try {
            if (check == "relations") {
                emit(check, verify_hecke_relations(builtin_module(b), workers));
            } else if (check == "triangularity") {
                emit(check, verify_triangularity(builtin_module(b)));
            } else if (check == "equivalence") {
                Report r;
                if (b.kind == Builtin::Kind::specht) {
                    r = specht_wqcc_agrees(b.shape);
                } else if (b.kind == Builtin::Kind::tabloid) {
                    const auto a = tabloid_module(b.shape);
                    const auto d = tabloid_module_ordered(b.shape);
                    for (int i = 1; i < a.n(); ++i)
                        for (std::size_t k = 0; k < a.dim(); ++k)
                            if (!(a.pi(i, k) == d.pi(i, k)))
                                r.failures.push_back("EQUIVALENCE pi" + std::to_string(i) + " FAIL at " + a.label(k));
                } else {
                    r.failures = classify_by_reduction(b.n, b.order).failures;
                    try {
                        (void)coinvariant_module(b.n, b.order);
                    } catch (const ClassificationMismatch& e) {
                        r.failures.push_back(e.what());
                    }
                }
                emit(check, r);
            } else if (check == "ltprop") {
                if (b.kind != Builtin::Kind::coinvariant) throw UsageError("ltprop applies to coinvariant modules only");
                emit(check, verify_leading_term_property(b.n, b.order));
            } else {
                throw UsageError("unknown check \"" + check + "\"");
            }
        } catch (const UsageError&) {
            throw;
        } catch (const Error& e) {
            emit(check, fresh(e));
        }
    }
    out.text = text.str();
    return out;
}

int run_verify(const Target& t, const std::string& checks_arg, bool all, unsigned requested_workers) {
    const auto checks = split_checks(checks_arg);
    if (checks.empty()) throw UsageError("--checks is empty");
    const unsigned workers = worker_count(requested_workers);

    std::vector<Builtin> targets;
    if (!all) {
        targets.push_back(resolve(t));
    } else if (t.module == "coinvariant") {
        const Builtin top = resolve(t);
        for (int m = 1; m <= top.n; ++m) targets.push_back(Builtin::coinvariant(m, top.order));
    } else {
        if (t.n < 1) throw UsageError("--all needs --n");
        guard_size(t.n, t.force);
        for (const auto& lam : partitions_of(t.n))
            targets.push_back(t.module == "tabloid" ? Builtin::tabloid(lam) : Builtin::specht(lam));
    }

    std::vector<CheckOutcome> results(targets.size());
    if (targets.size() == 1) {
        results[0] = run_checks(targets[0], checks, workers);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t k = next++; k < targets.size(); k = next++) {
                try {
                    results[k] = run_checks(targets[k], checks, 1);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, targets.size()); ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    bool passed = true;
    for (const auto& r : results) {
        std::cout << r.text;
        passed = passed && r.passed;
    }
    return passed ? kExitOk : kExitFailed;
}

int run_compat(const std::string& path, const std::string& level) {
    ModuleSpec spec;
    try {
        spec = read_module_spec_file(path);
    } catch (const RelationViolation& e) {
        std::cerr << path << ": generators fail the symmetric group relations\n";
        for (const auto& w : e.witnesses()) std::cerr << "  " << w << "\n";
        return kExitUsage;
    }
    const CompatReport report = check_compat(spec, level == "strong" ? Level::strong : Level::weak);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << report.render();
    return report.equal ? kExitOk : kExitFailed;
}

bool is_permutation(const Word& w) {
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<int>(k + 1)) return false;
    return true;
}

int run_bijections(const std::string& op, const std::string& input) {
    const Word w = text::parse_word(input);
    if (op == "rsk") {
        const auto [p, q] = rsk(w);
        std::cout << "P = " << p.to_string() << "\n";
        std::cout << "Q = " << q.to_string() << "\n";
        std::cout << "ides(Q) = des(w) = " << tableau_stats(q).ides.to_string() << "\n";
        if (is_permutation(w)) std::cout << "ides(P) = ides(w) = " << tableau_stats(p).ides.to_string() << "\n";
        return kExitOk;
    }
    if (!is_permutation(w)) throw ParseError("\"" + input + "\" is not a permutation");
    const Permutation perm(w);
    if (op == "invcode") {
        const InversionCode c = inversion_code(perm);
        std::cout << c.to_string() << "\n";
        std::cout << "sum(c) = inv(w) = " << c.sum() << "\n";
        return kExitOk;
    }
    const Permutation phi = foata(perm);
    std::cout << phi.to_string() << "\n";
    std::cout << "maj(w) = inv(foata(w)) = " << major_index(perm) << "\n";
    std::cout << "ides(w) = ides(foata(w)) = " << ides(perm).to_string() << "\n";
    return kExitOk;
}

int run_export(const Target& t, const std::string& output) {
    const ModuleSpec spec = sn_spec_of(resolve(t));
    if (output.empty() || output == "-")
        std::cout << serialize_module_spec(spec);
    else
        write_module_spec_file(spec, output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hecke0: 0-Hecke deformations of symmetric group modules"};
    app.require_subcommand(1);

    Target frob_target;
    bool graded = false;
    std::string format = "qsym";
    auto* frob = app.add_subcommand("frobenius", "quasisymmetric characteristic of a builtin module");
    add_target_options(frob, frob_target);
    frob->add_flag("--graded", graded, "weight basis vectors by q^degree");
    frob->add_option("--format", format, "qsym or schur")->check(CLI::IsMember({"qsym", "schur"}));

    Target verify_target;
    std::string checks = "relations,triangularity";
    bool all = false;
    unsigned workers = 0;
    auto* verify = app.add_subcommand("verify", "run verifiers on a builtin module");
    add_target_options(verify, verify_target);
    verify->add_option("--checks", checks, "comma list of relations, triangularity, equivalence, ltprop");
    verify->add_flag("--all", all, "every shape of size --n (every n up to --n for coinvariants)");
    verify->add_option("--workers", workers, "worker threads (capped by HECKE0_MAX_WORKERS)");

    std::string spec_path;
    std::string level = "strong";
    auto* compat = app.add_subcommand("compat", "deform a serialized S_n-module and compare characteristics");
    compat->add_option("--spec", spec_path, "module spec file")->required();
    compat->add_option("--level", level, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));

    std::string op;
    std::string input;
    auto* bij = app.add_subcommand("bijections", "RSK, Foata and inversion codes");
    bij->add_option("--op", op, "rsk, foata or invcode")->required()->check(CLI::IsMember({"rsk", "foata", "invcode"}));
    bij->add_option("--input", input, "permutation [2,3,1] or word 23322313")->required();

    Target export_target;
    std::string output;
    auto* exp = app.add_subcommand("export-spec", "write the S_n action of a builtin as a module spec");
    add_target_options(exp, export_target);
    exp->add_option("--output", output, "destination file (stdout by default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*frob) return run_frobenius(frob_target, graded, format);
        if (*verify) return run_verify(verify_target, checks, all, workers);
        if (*compat) return run_compat(spec_path, level);
        if (*bij) return run_bijections(op, input);
        if (*exp) return run_export(export_target, output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
