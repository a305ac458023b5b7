// pik: command-line front end for the exact quantum program toolkit.
//
// Exit codes: 0 success / equal, 1 unequal or suite failures, 2 errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pik/catalytic.hpp"
#include "pik/channel.hpp"
#include "pik/json_io.hpp"
#include "pik/qft.hpp"
#include "pik/synth.hpp"
#include "pik/syntax.hpp"
#include "pik/termgen.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw pik::ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

pik::Term load_term(const std::string& path, pik::Precision k) {
    return pik::parse(read_file(path), k);
}

json report_json(const pik::CheckReport& report) {
    return json{{"schema", "pik-report-1"},
                {"suite", report.suite},
                {"k", report.k},
                {"trials", report.trials},
                {"failures", report.failures}};
}

void print_matrix_text(const pik::ExactMatrix& m) {
    std::cout << "# approximate float embedding; use --format json for exact values\n";
    std::cout << std::setprecision(10);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) {
            const auto z = m.at(i, j).float_embed();
            std::cout << (j ? "  " : "") << "(" << z.real() << (z.imag() < 0 ? "" : "+")
                      << z.imag() << "i)";
        }
        std::cout << "\n";
    }
}

pik::CheckReport run_catalysis_suite(pik::Precision k, int trials, std::uint64_t seed) {
    pik::CheckReport report;
    report.suite = "catalysis";
    report.k = k.k;
    report.trials = trials;
    pik::Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const pik::Term a = pik::random_term_any_dim(rng, k, 8);
        if (!pik::catalysis_check(a, k))
            report.failures.push_back("catalysis failed at trial " + std::to_string(t) + ": " +
                                      pik::pretty(a));
    }
    return report;
}

pik::CheckReport run_completeness_suite(pik::Precision k, int trials, std::uint64_t seed) {
    pik::CheckReport report;
    report.suite = "completeness";
    report.k = k.k;
    report.trials = trials;
    pik::Rng rng(seed);
    pik::TermGenOptions opts;
    opts.allow_kron = false;
    opts.max_depth = 3;
    for (int t = 0; t < trials; ++t) {
        const long d = rng.range(1, 4);
        const pik::Term f = pik::random_term(rng, k, d, opts);
        const pik::Term g = rng.flip()
                                ? pik::Term::scale(rng.range(0, k.order() - 1), f)
                                : pik::random_term(rng, k, d, opts);
        if (!pik::completeness_check(f, g, k))
            report.failures.push_back("completeness biconditional failed at trial " +
                                      std::to_string(t));
    }
    return report;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the free model of reversible quantum computing"};
    app.require_subcommand(1);

    int k_level = 2;
    app.add_option("--k", k_level, "precision level (>= 2)")
        ->envname("PIK_K")
        ->check(CLI::Range(2, 24));

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a term file to its exact matrix");
    std::string eval_file, eval_format = "json";
    cmd_eval->add_option("file", eval_file, "term file")->required();
    cmd_eval->add_option("--format", eval_format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));

    // eq
    auto* cmd_eq = app.add_subcommand("eq", "decide equality of two term files");
    std::string eq_a, eq_b;
    bool eq_phase = false, eq_approx = false;
    cmd_eq->add_option("file1", eq_a)->required();
    cmd_eq->add_option("file2", eq_b)->required();
    cmd_eq->add_flag("--phase", eq_phase, "decide up to a global phase and print the witness");
    cmd_eq->add_flag("--approx", eq_approx, "decide the auxiliary-wire equivalence");

    // embed
    auto* cmd_embed = app.add_subcommand("embed", "apply the precision-lowering translation");
    std::string embed_file;
    int embed_from = 0;
    cmd_embed->add_option("file", embed_file)->required();
    cmd_embed->add_option("--from-k", embed_from, "source precision (defaults to --k)");

    // conj / dagger
    auto* cmd_conj = app.add_subcommand("conj", "print the conjugate of a term");
    std::string conj_file;
    cmd_conj->add_option("file", conj_file)->required();
    auto* cmd_dagger = app.add_subcommand("dagger", "print the inverse of a term");
    std::string dagger_file;
    cmd_dagger->add_option("file", dagger_file)->required();

    // sigma
    auto* cmd_sigma = app.add_subcommand("sigma", "emit the multiplicative symmetry as a term");
    long sigma_m = 0, sigma_n = 0;
    cmd_sigma->add_option("-m", sigma_m)->required();
    cmd_sigma->add_option("-n", sigma_n)->required();

    // synth
    auto* cmd_synth = app.add_subcommand("synth", "exact synthesis from a JSON matrix (k = 2)");
    std::string synth_file;
    bool synth_stats = false;
    cmd_synth->add_option("matrix", synth_file)->required();
    cmd_synth->add_flag("--stats", synth_stats, "also print gate_count and max_den_exp_seen");

    // qft
    auto* cmd_qft = app.add_subcommand("qft", "build the quantum Fourier transform");
    long qft_n = 0;
    bool qft_stats_flag = false, qft_emit = false;
    cmd_qft->add_option("-n", qft_n, "qubit count")->required();
    cmd_qft->add_flag("--stats", qft_stats_flag, "print gate counts as JSON");
    cmd_qft->add_flag("--emit", qft_emit, "print the circuit term");

    // channel
    auto* cmd_channel = app.add_subcommand("channel", "channel-level operations");
    auto* chan_eq_cmd = cmd_channel->add_subcommand("eq", "compare unitary channels");
    std::string chan_a, chan_b;
    chan_eq_cmd->add_option("file1", chan_a)->required();
    chan_eq_cmd->add_option("file2", chan_b)->required();
    auto* chan_staton = cmd_channel->add_subcommand("staton", "verify the channel axioms");
    int staton_trials = 50;
    std::uint64_t staton_seed = 0;
    chan_staton->add_option("--trials", staton_trials);
    chan_staton->add_option("--seed", staton_seed);

    // suite
    auto* cmd_suite = app.add_subcommand("suite", "run a verification suite");
    std::string suite_name;
    int suite_trials = 50;
    std::uint64_t suite_seed = 0;
    cmd_suite->add_option("name", suite_name, "axioms | coherence | catalysis | staton | completeness")
        ->required();
    cmd_suite->add_option("--trials", suite_trials);
    cmd_suite->add_option("--seed", suite_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        const pik::Precision k(k_level);

        if (cmd_eval->parsed()) {
            const pik::ExactMatrix m = pik::eval(load_term(eval_file, k), k);
            if (eval_format == "json")
                std::cout << pik::matrix_to_json_text(m, 2) << "\n";
            else
                print_matrix_text(m);
            return 0;
        }

        if (cmd_eq->parsed()) {
            const pik::Term a = load_term(eq_a, k);
            const pik::Term b = load_term(eq_b, k);
            if (eq_phase) {
                const auto w = pik::eq_up_to_phase(a, b, k);
                if (w.has_value()) {
                    std::cout << "equal up to phase: zeta^" << w->exponent << "\n";
                    return 0;
                }
                std::cout << "not equal up to any phase\n";
                return 1;
            }
            const bool same = eq_approx ? pik::decide_approx(a, b, k) : pik::eq(a, b, k);
            std::cout << (same ? "equal" : "not equal") << "\n";
            return same ? 0 : 1;
        }

        if (cmd_embed->parsed()) {
            const pik::Precision from(embed_from > 0 ? embed_from : k_level);
            const pik::Term t = load_term(embed_file, from);
            std::cout << pik::pretty(pik::phi(t, from)) << "\n";
            return 0;
        }

        if (cmd_conj->parsed()) {
            std::cout << pik::pretty(pik::term_conj(load_term(conj_file, k), k)) << "\n";
            return 0;
        }

        if (cmd_dagger->parsed()) {
            std::cout << pik::pretty(pik::term_dagger(load_term(dagger_file, k), k)) << "\n";
            return 0;
        }

        if (cmd_sigma->parsed()) {
            std::cout << pik::pretty(pik::sigma_tensor(sigma_m, sigma_n)) << "\n";
            return 0;
        }

        if (cmd_synth->parsed()) {
            const pik::ExactMatrix u = pik::matrix_from_json_text(read_file(synth_file));
            const pik::SynthesisResult r = pik::synth(u);
            std::cout << pik::pretty(r.term) << "\n";
            if (synth_stats)
                std::cout << json{{"gate_count", r.gate_count},
                                  {"max_den_exp_seen", r.max_den_exp_seen}}
                                 .dump()
                          << "\n";
            return 0;
        }

        if (cmd_qft->parsed()) {
            if (qft_stats_flag) {
                const pik::QftStats s = pik::qft_stats(qft_n, k);
                std::cout << json{{"n", s.n},
                                  {"k", s.k},
                                  {"h_count", s.h_count},
                                  {"native_cp", s.native_cp},
                                  {"approx_cp", s.approx_cp},
                                  {"swap_count", s.swap_count}}
                                 .dump()
                          << "\n";
            }
            if (qft_emit || !qft_stats_flag)
                std::cout << pik::pretty(pik::build_qft(qft_n, k)) << "\n";
            return 0;
        }

        if (cmd_channel->parsed()) {
            if (chan_eq_cmd->parsed()) {
                const pik::Channel f = pik::chan_of_unitary(load_term(chan_a, k), k);
                const pik::Channel g = pik::chan_of_unitary(load_term(chan_b, k), k);
                const bool same = pik::chan_eq(f, g);
                std::cout << (same ? "equal" : "not equal") << "\n";
                return same ? 0 : 1;
            }
            if (chan_staton->parsed()) {
                const pik::CheckReport r = pik::staton_suite(k, staton_trials, staton_seed);
                std::cout << report_json(r).dump(2) << "\n";
                return r.ok() ? 0 : 1;
            }
            std::cerr << "error: channel requires a subcommand (eq | staton)\n";
            return 2;
        }

        if (cmd_suite->parsed()) {
            pik::CheckReport report;
            if (suite_name == "axioms")
                report = pik::check_axioms(k);
            else if (suite_name == "coherence")
                report = pik::check_coherence(k, suite_trials, suite_seed);
            else if (suite_name == "catalysis")
                report = run_catalysis_suite(k, suite_trials, suite_seed);
            else if (suite_name == "staton")
                report = pik::staton_suite(k, suite_trials, suite_seed);
            else if (suite_name == "completeness")
                report = run_completeness_suite(k, suite_trials, suite_seed);
            else {
                std::cerr << "error: unknown suite '" << suite_name << "'\n";
                return 2;
            }
            std::cout << report_json(report).dump(2) << "\n";
            return report.ok() ? 0 : 1;
        }

        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const pik::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
