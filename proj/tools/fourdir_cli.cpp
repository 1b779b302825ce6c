#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fourdir/analysis.hpp"
#include "fourdir/io.hpp"
#include "fourdir/subdivision.hpp"
#include "fourdir/symbols.hpp"

namespace {

using namespace fourdir;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::vector<Rational> parse_mu(const std::string& s) {
    std::vector<Rational> out;
    if (s.empty()) return out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    return out;
}

SchemeSymbol build_symbol(const std::string& family, long n, long l,
                          const std::vector<Rational>& mu) {
    if (family == "pseudo") return make_pseudospline(n, l);
    if (family == "box") return make_fourdir_box(n);
    if (family == "interp") return make_interpolatory(n);
    if (family == "tensor") return make_tensor_pseudospline(n, l);
    if (family == "variant") return make_variant(n, l, mu);
    if (family == "amu") return make_example_amu(mu.empty() ? rat(0) : mu.front());
    throw std::invalid_argument("unknown family: " + family);
}

void write_text(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open " + out);
    os << text;
    if (!os) throw std::runtime_error("failed writing " + out);
}

struct Expectation {
    long generation = -1;
    long reproduction = -1;
    bool interpolatory = false;
    std::optional<SupportOctagon> support;
};

Expectation expected_for(const SchemeSymbol& s) {
    Expectation e;
    switch (s.family) {
        case Family::pseudo:
        case Family::fourdir_box:
        case Family::variant:
        case Family::tensor:
            e.generation = 2 * s.n - 1;
            e.reproduction = 2 * s.l + 1;
            e.interpolatory = s.l == s.n - 1;
            if (s.family == Family::variant)
                for (const auto& m : s.mu)
                    if (m != 0) e.interpolatory = false;
            if (s.family == Family::tensor)
                e.support = SupportOctagon{s.n + s.l, s.n + s.l, 0};
            else
                e.support = predicted_support(s.n, s.l);
            break;
        case Family::interpolatory:
            e.generation = 2 * s.n - 1;
            e.reproduction = 2 * s.n - 1;
            e.interpolatory = true;
            e.support = interpolatory_support(s.n);
            break;
        case Family::example_a_mu:
            e.generation = 3;
            e.reproduction = 3;
            e.interpolatory = !s.mu.empty() && s.mu.front() == 0;
            e.support = SupportOctagon{3, 3, 2};
            break;
        default:
            break;
    }
    return e;
}

int run_verify(const SchemeSymbol& s) {
    const Expectation expect = expected_for(s);
    const long max_check = expect.generation >= 0 ? expect.generation + 2 : 16;
    bool all_pass = true;
    auto report = [&](const std::string& name, const std::string& measured,
                      const std::string& expected, bool pass,
                      const std::string& detail = "") {
        std::cout << name << ": " << measured << " (expected " << expected << ") "
                  << (pass ? "pass" : "FAIL");
        if (!pass && !detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        all_pass = all_pass && pass;
    };

    const bool sym = check_symmetry(s.poly);
    report("symmetry", sym ? "true" : "false", "true", sym);

    const bool conv = check_convergence_necessary(s.poly);
    report("convergence-necessary", conv ? "true" : "false", "true", conv);

    DerivativeWitness w;
    const long gen = generation_degree(s.poly, max_check, &w);
    report("generation-degree", std::to_string(gen), std::to_string(expect.generation),
           gen == expect.generation,
           "first failing derivative D^(" + std::to_string(w.k1) + "," +
               std::to_string(w.k2) + ") at (" + rat_to_string(w.z1) + "," +
               rat_to_string(w.z2) + ") = " + rat_to_string(w.value));

    if (conv) {
        const long rep = reproduction_degree(s.poly, max_check, &w);
        report("reproduction-degree", std::to_string(rep),
               std::to_string(expect.reproduction), rep == expect.reproduction,
               "first failing derivative D^(" + std::to_string(w.k1) + "," +
                   std::to_string(w.k2) + ") at (1,1) = " + rat_to_string(w.value));
    } else {
        report("reproduction-degree", "undefined", std::to_string(expect.reproduction),
               false, "necessary convergence conditions not met");
    }

    const bool interp = check_interpolatory(s.poly);
    report("interpolatory", interp ? "true" : "false",
           expect.interpolatory ? "true" : "false", interp == expect.interpolatory);

    const SupportReport sr = support_of(s.poly);
    std::ostringstream meas;
    meas << "(" << sr.octagon.m << "," << sr.octagon.n << "," << sr.octagon.l << ")";
    if (expect.support) {
        std::ostringstream exp;
        exp << "(" << expect.support->m << "," << expect.support->n << ","
            << expect.support->l << ")";
        report("support", meas.str(), exp.str(),
               sr.octagonal && sr.octagon == *expect.support);
    } else {
        std::cout << "support: " << meas.str()
                  << (sr.octagonal ? " octagonal" : " non-octagonal") << ", area "
                  << rat_to_string(sr.hull_area) << "\n";
    }

    std::cout << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
    return all_pass ? kExitOk : kExitVerifyFailure;
}

int run_sweep(long max_n) {
    bool all_match = true;
    std::cout << "n l width cut predicted measured match\n";
    for (long n = 1; n <= max_n; ++n)
        for (long l = 0; l < n; ++l) {
            const SupportOctagon pred = predicted_support(n, l);
            const SupportReport sr = support_of(make_pseudospline(n, l).poly);
            const bool match = sr.octagonal && sr.octagon == pred;
            all_match = all_match && match;
            std::cout << n << " " << l << " " << 2 * pred.m + 1 << " " << pred.l
                      << " (" << pred.m << "," << pred.n << "," << pred.l << ")"
                      << " (" << sr.octagon.m << "," << sr.octagon.n << ","
                      << sr.octagon.l << ") "
                      << (match ? "match" : "MISMATCH") << "\n";
        }
    return all_match ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of symmetric "
                 "four-directional subdivision schemes"};
    app.require_subcommand(1);

    std::string family = "pseudo";
    long n = 1, l = 0, steps = 3, max_n = 5;
    std::string mu_arg, format = "matrix", out;
    std::string mask_file, input_file;

    auto add_family_opts = [&](CLI::App* cmd, bool with_l = true) {
        cmd->add_option("family,--family", family,
                        "scheme family: pseudo|box|interp|tensor|variant|amu");
        cmd->add_option("-n", n, "family parameter n");
        if (with_l) cmd->add_option("-l", l, "family parameter l");
        cmd->add_option("--mu", mu_arg, "comma-separated rational weights");
    };

    auto* cmd_mask = app.add_subcommand("mask", "print a subdivision mask");
    add_family_opts(cmd_mask);
    cmd_mask->add_option("--format", format, "json|matrix|csv")
        ->check(CLI::IsMember({"json", "matrix", "csv"}));
    cmd_mask->add_option("--out", out, "output file (default stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "verify scheme properties");
    add_family_opts(cmd_verify);

    long sup_n = 1, sup_l = 0;
    auto* cmd_support = app.add_subcommand("support", "predicted vs measured support");
    cmd_support->add_option("n", sup_n, "parameter n")->required();
    cmd_support->add_option("l", sup_l, "parameter l")->required();

    auto* cmd_sweep = app.add_subcommand("sweep", "support table for all l < n <= max_n");
    cmd_sweep->add_option("max_n", max_n, "largest n")->required();

    auto* cmd_subdivide = app.add_subcommand("subdivide", "refine a grid with a mask");
    cmd_subdivide->add_option("mask_file", mask_file, "mask document (json)")->required();
    cmd_subdivide->add_option("input_file", input_file, "input grid (csv)")->required();
    cmd_subdivide->add_option("--steps", steps, "number of refinement steps");
    cmd_subdivide->add_option("--out", out, "output file (default stdout)");

    auto* cmd_limit = app.add_subcommand("limit", "sample a basic limit function");
    add_family_opts(cmd_limit);
    cmd_limit->add_option("--steps", steps, "number of refinement steps (default 3)");
    cmd_limit->add_option("--format", format, "csv|pgm")
        ->check(CLI::IsMember({"csv", "pgm", "matrix", "json"}));
    cmd_limit->add_option("--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_mask->parsed()) {
            const SchemeSymbol s = build_symbol(family, n, l, parse_mu(mu_arg));
            const MaskDocument doc = make_mask_document(s);
            if (format == "json") write_text(out, mask_document_to_json(doc));
            else if (format == "csv") write_text(out, format_mask_csv(doc.matrix));
            else write_text(out, format_mask_matrix(doc.matrix));
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            return run_verify(build_symbol(family, n, l, parse_mu(mu_arg)));
        }
        if (cmd_support->parsed()) {
            const SupportOctagon pred = predicted_support(sup_n, sup_l);
            const SupportReport sr = support_of(make_pseudospline(sup_n, sup_l).poly);
            std::cout << "predicted: width " << 2 * pred.m + 1 << ", cut " << pred.l
                      << " (" << pred.m << "," << pred.n << "," << pred.l << ")\n";
            std::cout << "measured:  width " << 2 * sr.octagon.m + 1 << ", cut "
                      << sr.octagon.l << " (" << sr.octagon.m << "," << sr.octagon.n
                      << "," << sr.octagon.l << ")\n";
            const bool match = sr.octagonal && sr.octagon == pred;
            std::cout << (match ? "match" : "MISMATCH") << "\n";
            return match ? kExitOk : kExitVerifyFailure;
        }
        if (cmd_sweep->parsed()) {
            return run_sweep(max_n);
        }
        if (cmd_subdivide->parsed()) {
            std::ifstream mf(mask_file);
            if (!mf) {
                std::cerr << "cannot open " << mask_file << "\n";
                return kExitIo;
            }
            std::stringstream mbuf;
            mbuf << mf.rdbuf();
            MaskDocument doc;
            GridFunction g;
            try {
                doc = mask_document_from_json(mbuf.str());
                std::ifstream gf(input_file);
                if (!gf) {
                    std::cerr << "cannot open " << input_file << "\n";
                    return kExitIo;
                }
                g = read_grid_csv(gf);
            } catch (const std::exception& e) {
                std::cerr << "malformed input: " << e.what() << "\n";
                return kExitIo;
            }
            for (long s = 0; s < steps; ++s) g = subdivide_step(doc.matrix, g);
            std::ostringstream os;
            write_grid_csv(os, g);
            write_text(out, os.str());
            return kExitOk;
        }
        if (cmd_limit->parsed()) {
            const SchemeSymbol s = build_symbol(family, n, l, parse_mu(mu_arg));
            const GridFunction g = basic_limit(s, steps);
            if (format == "pgm") {
                if (out.empty()) {
                    std::cerr << "pgm output requires --out\n";
                    return kExitUsage;
                }
                write_grid_pgm(out, g);
            } else {
                std::ostringstream os;
                write_grid_csv(os, g);
                write_text(out, os.str());
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
