// nullkit: exact Nullstellensatz certificates and monomial-ideal geometry.
//
// Exit codes: 0 success, 2 parse error, 3 resource/internal abort,
// 4 certificate not found under the cap, 5 generators have a common zero,
// 6 wrong input class for the command.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nullkit/certificate.hpp"
#include "nullkit/checks.hpp"
#include "nullkit/corpus.hpp"
#include "nullkit/suites.hpp"

namespace {

using namespace nullkit;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitCertNotFound = 4;
constexpr int kExitNotZeroFree = 5;
constexpr int kExitInputClass = 6;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw error("cannot write " + out_path);
        out << text;
    }
}

MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw parse_error("unknown order '" + name + "' (expected grevlex or lex)", 0);
}

int cmd_gb(const std::string& file, const std::string& order_name, const Budgets& budgets) {
    ProblemInstance inst = parse_problem_file(read_file(file));
    GroebnerBasis gb =
        buchberger(inst.generators, order_from_name(order_name), false, budgets);
    for (const auto& p : gb.basis) std::cout << format_polynomial(p) << "\n";
    return kExitOk;
}

int cmd_cert(const std::string& file, long long cap, const std::string& method,
             const std::string& format, bool force, const Budgets& budgets) {
    ProblemInstance inst = parse_problem_file(read_file(file));
    CertificateProblem problem = CertificateProblem::from_instance(std::move(inst));
    if (!assert_zero_free(problem, budgets)) {
        std::cerr << "common zero exists: the generators do not span the unit ideal\n";
        return kExitNotZeroFree;
    }

    if (method == "trace") {
        Certificate cert = gb_trace_certificate(problem, budgets);
        std::cout << "achieved degree " << cert.achieved_degree << " (trace method)\n";
        for (std::size_t j = 0; j < cert.cofactors.size(); ++j)
            std::cout << "g" << j + 1 << " = " << format_polynomial(cert.cofactors[j]) << "\n";
        return kExitOk;
    }

    auto [kollar, sparse] = bound_calculator(problem.arity(), problem.max_degree,
                                             problem.multidegrees);
    long long effective_cap = cap;
    if (effective_cap <= 0) {
        Integer c = kollar;
        if (sparse && *sparse > c) c = *sparse;
        effective_cap = c.fits_slong_p() ? c.get_si() : 64;
    }
    DegreeSearchReport report =
        minimal_certificate_degree(problem, effective_cap, budgets, force);

    if (format == "json") {
        std::ostringstream out;
        out << "{\n  \"cap\": " << report.cap << ",\n  \"bound_kollar\": \""
            << to_string(report.bound_kollar) << "\",\n";
        if (report.bound_sparse)
            out << "  \"bound_sparse\": \"" << to_string(*report.bound_sparse) << "\",\n";
        out << "  \"minimal_degree\": "
            << (report.minimal_degree ? std::to_string(*report.minimal_degree)
                                      : std::string("null"))
            << "\n}\n";
        std::cout << out.str();
    } else {
        std::cout << "degree bounds: d^n = " << to_string(report.bound_kollar);
        if (report.bound_sparse)
            std::cout << ", sparse = " << to_string(*report.bound_sparse);
        std::cout << "\n";
        for (const auto& probe : report.probes)
            std::cout << "  degree " << probe.degree << ": "
                      << (probe.solvable ? "solvable" : "unsolvable") << "\n";
        if (report.aborted_at)
            std::cout << "aborted at degree " << *report.aborted_at << "\n";
        if (report.minimal_degree) {
            std::cout << "minimal certificate degree " << *report.minimal_degree
                      << (report.within_kollar ? " (within d^n)" : " (exceeds d^n)") << "\n";
            for (std::size_t j = 0; j < report.certificate->cofactors.size(); ++j)
                std::cout << "g" << j + 1 << " = "
                          << format_polynomial(report.certificate->cofactors[j]) << "\n";
        } else {
            std::cout << "not found <= " << report.cap << "\n";
        }
    }
    if (report.aborted_at) return kExitResource;
    return report.minimal_degree ? kExitOk : kExitCertNotFound;
}

int cmd_distinguished(const std::string& file, const Budgets& budgets) {
    ProblemInstance inst = parse_problem_file(read_file(file));
    auto ideal = MonomialIdeal::from_instance(inst);
    if (!ideal) {
        std::cerr << "distinguished data requires monomial input\n";
        return kExitInputClass;
    }

    auto data = distinguished_data(*ideal);
    std::cout << "center" << "\tr" << "\tdim" << "\tdeg" << "\n";
    for (const auto& d : data) {
        std::string center = "{";
        for (std::size_t i = 0; i < d.support.size(); ++i)
            center += (i ? "," : "") + ideal->ring->vars[d.support[i]];
        center += "}";
        std::cout << center << "\t" << d.coefficient << "\t" << d.dimension << "\t" << d.degree
                  << "\n";
    }

    // Equal-degree generators define sections of one line bundle on projective
    // space; in that case also run the chartwise degree bound.
    long long degree = ideal->gens.front().degree();
    bool equal_degree = ideal->arity() >= 2;
    for (const auto& g : ideal->gens) equal_degree = equal_degree && g.degree() == degree;
    if (equal_degree) {
        DegreeBoundOutcome o = check_degree_bound(*ideal, degree, budgets);
        std::cout << "degree bound (P^" << ideal->arity() - 1 << ", d = " << degree
                  << "): sum " << to_string(o.sum) << " <= " << to_string(o.bound) << " => "
                  << verdict_name(o.outcome.verdict) << "\n";
    }
    return kExitOk;
}

int cmd_multiplier(const std::string& file, long long level, long long cap,
                   const Budgets& budgets) {
    ProblemInstance inst = parse_problem_file(read_file(file));
    auto ideal = MonomialIdeal::from_instance(inst);
    if (!ideal) {
        std::cerr << "multiplier ideals require monomial input\n";
        return kExitInputClass;
    }
    std::optional<long long> cap_opt;
    if (cap > 0) cap_opt = cap;
    auto gens = multiplier_ideal_generators({*ideal, level}, cap_opt, budgets);
    for (const auto& m : gens) std::cout << format_monomial(ideal->ring, m) << "\n";
    return kExitOk;
}

int cmd_verify(const SuiteConfig& config, const std::string& format,
               const std::string& out_path) {
    Report report = run_suite(config);
    write_output(emit_report(report, format), out_path);
    if (report.resource_aborted) return kExitResource;
    if (!report.all_pass()) {
        // A statement check failing unexpectedly means the implementation is
        // broken, which shares the abort exit with resource trouble.
        std::cerr << "suite " << report.suite << ": unexpected failures\n";
        return kExitResource;
    }
    return kExitOk;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& out_dir) {
    auto corpus = generate_corpus(spec);
    for (const auto& inst : corpus) {
        std::string text = format_problem_file(inst);
        if (out_dir.empty()) {
            std::cout << "# " << inst.id() << "\n" << text << "\n";
        } else {
            std::string path = out_dir + "/" + inst.id() + ".prob";
            std::ofstream out(path, std::ios::binary);
            if (!out) throw error("cannot write " + path);
            out << text;
            std::cout << path << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nullkit: effective Nullstellensatz certificates and distinguished-subvariety "
                 "checks for monomial ideals"};
    app.require_subcommand(1);

    Budgets budgets;
    std::string format = "text";
    bool force = false;
    app.add_option("--budget-pairs", budgets.max_pairs, "Buchberger S-pair budget");
    app.add_option("--budget-matrix", budgets.max_matrix_entries, "matrix entry budget");
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--force", force, "run past the certificate column-count guard");

    auto* gb = app.add_subcommand("gb", "print the reduced basis of a problem file");
    std::string gb_file, gb_order = "grevlex";
    gb->add_option("file", gb_file)->required();
    gb->add_option("--order", gb_order, "monomial order: grevlex or lex");

    auto* cert = app.add_subcommand("cert", "search for a minimal-degree certificate");
    std::string cert_file, cert_method = "scan";
    long long cert_cap = 0;
    cert->add_option("file", cert_file)->required();
    cert->add_option("--cap", cert_cap, "degree cap (default: the computed bounds)");
    cert->add_option("--method", cert_method)->check(CLI::IsMember({"scan", "trace"}));

    auto* dist = app.add_subcommand("distinguished",
                                    "distinguished centers and coefficients of a monomial ideal");
    std::string dist_file;
    dist->add_option("file", dist_file)->required();

    auto* mult = app.add_subcommand("multiplier", "generators of the level-l multiplier ideal");
    std::string mult_file;
    long long mult_level = 1, mult_cap = 0;
    mult->add_option("file", mult_file)->required();
    mult->add_option("--level", mult_level, "level l >= 1")->required();
    mult->add_option("--cap", mult_cap, "exponent cap for the enumeration");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    SuiteConfig config;
    std::string out_path;
    verify->add_option("--suite", config.suite, "suite name")->required();
    verify->add_option("--seed", config.seed, "corpus seed");
    verify->add_option("--count", config.count, "instance count override");
    verify->add_option("--files", config.files, "problem files instead of a generated corpus");
    verify->add_option("--out", out_path, "write the report to a file");

    auto* gen = app.add_subcommand("gen", "generate a seeded corpus of problem files");
    GeneratorSpec spec;
    std::string gen_out;
    gen->add_option("--n", spec.arity, "number of variables (<= 4)");
    gen->add_option("--gens", spec.max_generators, "max generators (<= 6)");
    gen->add_option("--max-exp", spec.max_exponent, "max exponent (<= 6)");
    gen->add_flag("--homogeneous", spec.homogeneous, "equal-degree generators");
    gen->add_option("--max-degree", spec.max_degree, "degree bound for homogeneous instances");
    gen->add_option("--count", spec.count)->required();
    gen->add_option("--seed", spec.seed, "corpus seed");
    gen->add_option("--prefix", spec.name_prefix, "instance name prefix");
    gen->add_option("--out", gen_out, "directory for the generated files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        config.budgets = budgets;
        if (gb->parsed()) return cmd_gb(gb_file, gb_order, budgets);
        if (cert->parsed()) return cmd_cert(cert_file, cert_cap, cert_method, format, force,
                                            budgets);
        if (dist->parsed()) return cmd_distinguished(dist_file, budgets);
        if (mult->parsed()) return cmd_multiplier(mult_file, mult_level, mult_cap, budgets);
        if (verify->parsed()) return cmd_verify(config, format, out_path);
        if (gen->parsed()) return cmd_gen(spec, gen_out);
    } catch (const parse_error& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const input_class_error& e) {
        std::cerr << e.what() << "\n";
        return kExitInputClass;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const cap_error& e) {
        std::cerr << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitOk;
}
