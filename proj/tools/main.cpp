#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rskflags/errors.hpp"
#include "rskflags/flag.hpp"
#include "rskflags/rsk.hpp"
#include "rskflags/sampler.hpp"
#include "rskflags/standardize.hpp"
#include "rskflags/text_io.hpp"
#include "rskflags/verify.hpp"

using namespace rskflags;

namespace {

ArrayOrder parse_order(const std::string& name) {
    if (name == "antilex" || name == "paper" || name == "paper_order") return ArrayOrder::Antilex;
    if (name == "lex" || name == "lexicographic") return ArrayOrder::Lex;
    throw CLI::ValidationError("--convention", "expected antilex|lex");
}

bool is_row_strict_name(const std::string& name) {
    if (name == "row-strict" || name == "paper") return true;
    if (name == "classical") return false;
    throw CLI::ValidationError("--convention", "expected row-strict|classical");
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("file", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_reports(const std::vector<VerificationReport>& reports, bool summary) {
    for (const auto& r : reports)
        std::cout << (summary ? report_human_line(r) : report_to_json(r)) << "\n";
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"row-strict RSK, tableau standardization and exact flag geometry over prime fields"};
    app.require_subcommand(1);
    app.set_config("--config");

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: RSKFLAGS_THREADS, then all cores)");

    std::string arg_array, arg_matrix, arg_t, arg_s, arg_convention = "antilex";
    std::string arg_mu, arg_nu, arg_shape, arg_flag_f, arg_flag_g, arg_tableau;
    RunOptions opts;
    bool summary = false, serial = false, classical = false;
    int dmax = 6, max_parts = 0;

    // rsk
    auto* rsk = app.add_subcommand("rsk", "the correspondence between arrays and tableau pairs");
    auto* rsk_forward = rsk->add_subcommand("forward", "array -> (P, Q)");
    rsk_forward->add_option("--array", arg_array, "e.g. \"1,2,2,3,3 / 1,3,1,2,2\"")->required();
    rsk_forward->add_option("--convention", arg_convention, "antilex (row-strict) or lex (classical)");
    rsk_forward->callback([&] {
        ArrayOrder order = parse_order(arg_convention);
        BiArray a = parse_array(arg_array, order);
        auto [p, q] = order == ArrayOrder::Antilex ? rsk_row_strict(a) : rsk_classical(a);
        std::cout << "P: " << format_tableau(p) << "\nQ: " << format_tableau(q) << "\n";
    });

    auto* rsk_inverse = rsk->add_subcommand("inverse", "(P, Q) -> antilex array");
    rsk_inverse->add_option("--P", arg_t, "insertion tableau")->required();
    rsk_inverse->add_option("--Q", arg_s, "recording tableau")->required();
    rsk_inverse->callback([&] {
        std::cout << format_array(rsk_inverse_row_strict(parse_tableau(arg_t), parse_tableau(arg_s)))
                  << "\n";
    });

    auto* rsk_convert = rsk->add_subcommand("convert", "matrix <-> array");
    rsk_convert->add_option("--matrix", arg_matrix, "e.g. \"1,0,2;3,1,0\"");
    rsk_convert->add_option("--array", arg_array, "e.g. \"1,1,2 / 2,1,1\"");
    rsk_convert->add_option("--convention", arg_convention, "antilex or lex");
    rsk_convert->callback([&] {
        ArrayOrder order = parse_order(arg_convention);
        if (arg_matrix.empty() == arg_array.empty())
            throw CLI::ValidationError("rsk convert", "give exactly one of --matrix / --array");
        if (!arg_matrix.empty())
            std::cout << format_array(matrix_to_array(parse_matrix(arg_matrix), order)) << "\n";
        else
            std::cout << format_matrix(array_to_matrix(parse_array(arg_array, order))) << "\n";
    });

    // std
    auto* std_cmd = app.add_subcommand("std", "standardization maps");
    auto* std_tab = std_cmd->add_subcommand("tableau", "standardize a semistandard tableau");
    std_tab->add_option("--t", arg_t, "tableau, e.g. \"1,2;1,2;3\"")->required();
    std_tab->add_option("--convention", arg_convention, "row-strict or classical")->required();
    std_tab->callback([&] {
        Tableau t = parse_tableau(arg_t);
        Tableau out = is_row_strict_name(arg_convention) ? standardize_tableau_row_strict(t)
                                                         : standardize_tableau_classical(t);
        std::cout << format_tableau(out) << "\n";
    });

    auto* std_arr = std_cmd->add_subcommand("array", "standardize a two-rowed array");
    std_arr->add_option("--array", arg_array)->required();
    std_arr->add_option("--convention", arg_convention, "antilex or lex");
    std_arr->callback([&] {
        ArrayOrder order = parse_order(arg_convention);
        BiArray a = parse_array(arg_array, order);
        std::cout << format_array(order == ArrayOrder::Antilex ? standardize_array_antilex(a)
                                                               : standardize_array_lex(a))
                  << "\n";
    });

    auto* std_inv = std_cmd->add_subcommand("inverse", "destandardize a permutation array");
    std_inv->add_option("--array", arg_array, "permutation array, top must be 1..d")->required();
    std_inv->add_option("--mu", arg_mu, "bottom content, e.g. 2,2,1")->required();
    std_inv->add_option("--nu", arg_nu, "top content, e.g. 1,2,2")->required();
    std_inv->callback([&] {
        BiArray p = parse_array(arg_array, ArrayOrder::Antilex);
        std::cout << format_array(
                         destandardize_array(p, parse_sequence(arg_mu), parse_sequence(arg_nu)))
                  << "\n";
    });

    // flag
    auto* flag_cmd = app.add_subcommand("flag", "stable flags over a prime field");
    auto* flag_sample = flag_cmd->add_subcommand("sample", "sample a stable flag as JSON");
    flag_sample->add_option("--shape", arg_shape, "Jordan type, e.g. 2,1")->required();
    flag_sample->add_option("--mu", arg_mu, "flag type (ignored with --tableau)");
    flag_sample->add_option("--tableau", arg_tableau, "target the fiber of this tableau");
    flag_sample->add_option("--prime", opts.prime);
    flag_sample->add_option("--seed", opts.seed);
    flag_sample->add_option("--max-attempts", opts.max_attempts);
    flag_sample->callback([&] {
        PrimeField field(opts.prime);
        NilpotentOperator x = make_nilpotent(parse_sequence(arg_shape), field);
        Rng rng(opts.seed);
        Flag f = [&] {
            if (!arg_tableau.empty())
                return sample_flag_in_component(x, parse_tableau(arg_tableau), rng,
                                                opts.max_attempts)
                    .flag;
            if (arg_mu.empty())
                throw CLI::ValidationError("flag sample", "need --mu or --tableau");
            return sample_stable_flag(x, parse_sequence(arg_mu), rng, opts.max_attempts).flag;
        }();
        std::cout << flag_to_json(f) << "\n";
    });

    auto* flag_tab = flag_cmd->add_subcommand("tableau", "tableau of a stable flag");
    flag_tab->add_option("--shape", arg_shape, "Jordan type of the operator")->required();
    flag_tab->add_option("--flag", arg_flag_f, "flag JSON file, or - for stdin")->required();
    flag_tab->callback([&] {
        Flag f = flag_from_json(read_text(arg_flag_f));
        NilpotentOperator x = make_nilpotent(parse_sequence(arg_shape), f.field);
        std::cout << format_tableau(tableau_of_flag(x, f)) << "\n";
    });

    auto* flag_relpos = flag_cmd->add_subcommand("relpos", "relative position of two flags");
    flag_relpos->add_option("--f", arg_flag_f, "first flag JSON file")->required();
    flag_relpos->add_option("--g", arg_flag_g, "second flag JSON file")->required();
    flag_relpos->callback([&] {
        Flag f = flag_from_json(read_text(arg_flag_f));
        Flag g = flag_from_json(read_text(arg_flag_g));
        std::cout << format_matrix(relative_position(f, g)) << "\n";
    });

    // verify
    int exit_code = 0;
    auto* verify = app.add_subcommand("verify", "randomized and exhaustive checks");
    auto* v_theorem = verify->add_subcommand("theorem", "one relative-position case");
    v_theorem->add_option("--shape", arg_shape)->required();
    v_theorem->add_option("--mu", arg_mu)->required();
    v_theorem->add_option("--nu", arg_nu)->required();
    v_theorem->add_option("--T", arg_t)->required();
    v_theorem->add_option("--S", arg_s)->required();
    v_theorem->add_option("--trials", opts.trials);
    v_theorem->add_option("--prime", opts.prime);
    v_theorem->add_option("--seed", opts.seed);
    v_theorem->add_option("--agreement-threshold", opts.agreement_threshold);
    v_theorem->add_flag("--summary", summary, "human-readable lines instead of JSON");
    v_theorem->add_flag("--serial", serial, "reference serial driver");
    v_theorem->callback([&] {
        opts.threads = threads;
        opts.parallel = !serial;
        std::vector<VerificationReport> reports{
            verify_main_theorem(parse_sequence(arg_shape), parse_sequence(arg_mu),
                                parse_sequence(arg_nu), parse_tableau(arg_t), parse_tableau(arg_s),
                                opts)};
        print_reports(reports, summary);
        exit_code = all_pass(reports) ? 0 : 1;
    });

    auto* v_stein = verify->add_subcommand("steinberg", "all standard pairs of one shape");
    v_stein->add_option("--shape", arg_shape)->required();
    v_stein->add_option("--trials", opts.trials);
    v_stein->add_option("--prime", opts.prime);
    v_stein->add_option("--seed", opts.seed);
    v_stein->add_option("--agreement-threshold", opts.agreement_threshold);
    v_stein->add_flag("--summary", summary);
    v_stein->add_flag("--serial", serial);
    v_stein->callback([&] {
        opts.threads = threads;
        opts.parallel = !serial;
        auto reports = verify_steinberg(parse_sequence(arg_shape), opts);
        print_reports(reports, summary);
        exit_code = all_pass(reports) ? 0 : 1;
    });

    auto* v_lemma = verify->add_subcommand("lemma2", "standardization commutes with the correspondence");
    v_lemma->add_option("--dmax", dmax);
    v_lemma->add_option("--max-parts", max_parts, "bound on composition length (0: none)");
    v_lemma->add_flag("--classical", classical, "check the classical conventions instead");
    v_lemma->add_flag("--serial", serial);
    v_lemma->callback([&] {
        SweepSummary sum = classical
                               ? verify_commutation_classical(dmax, max_parts, !serial, threads)
                               : verify_commutation_row_strict(dmax, max_parts, !serial, threads);
        std::cout << summary_to_json(sum) << "\n";
        exit_code = sum.failures == 0 ? 0 : 1;
    });

    auto* v_bij = verify->add_subcommand("bijection", "roundtrips and the counting identity");
    v_bij->add_option("--dmax", dmax);
    v_bij->add_option("--max-parts", max_parts, "bound on composition length (0: none)");
    v_bij->add_flag("--serial", serial);
    v_bij->callback([&] {
        SweepSummary sum = verify_bijection(dmax, max_parts, !serial, threads);
        std::cout << summary_to_json(sum) << "\n";
        exit_code = sum.failures == 0 ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
