// Command-line front end: compute, delay, closed-form, check, factor, scan,
// verify. Exit codes: 0 success / no findings, 1 findings or a failed
// verification suite, 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plucking/golden.hpp"
#include "plucking/plucking.hpp"
#include "plucking/qpoly.hpp"
#include "plucking/search.hpp"
#include "plucking/tree.hpp"

namespace {

using namespace plucking;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct OutputMode {
    bool json = false;
};

void print_poly(const QPolynomial& p, const OutputMode& mode) {
    if (mode.json) std::cout << poly_to_json(p).dump() << '\n';
    else std::cout << to_text(p) << '\n';
}

std::vector<std::string> read_input_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

// Hedgehog delay shorthand. With whitespace, commas, or '^' present the
// string is a token list, each token INT or INT^COUNT; otherwise it is a
// compact digit string, one single-digit delay per character.
std::vector<int> parse_delay_string(const std::string& text) {
    const bool tokenized = text.find_first_of(" \t,^") != std::string::npos;
    std::vector<int> delays;
    if (!tokenized) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad character in delay string: " + text);
            if (c == '0') throw std::invalid_argument("delay values must be >= 1");
            delays.push_back(c - '0');
        }
        if (delays.empty()) throw std::invalid_argument("empty delay string");
        return delays;
    }
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream tokens(normalized);
    std::string token;
    while (tokens >> token) {
        long value = 0, count = 1;
        const std::size_t caret = token.find('^');
        try {
            std::size_t used = 0;
            value = std::stol(token.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? token.size() : caret))
                throw std::invalid_argument(token);
            if (caret != std::string::npos) {
                count = std::stol(token.substr(caret + 1), &used);
                if (used != token.size() - caret - 1) throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad delay token: " + token);
        }
        if (value < 1) throw std::invalid_argument("delay values must be >= 1");
        if (count < 0) throw std::invalid_argument("bad repeat count in: " + token);
        delays.insert(delays.end(), static_cast<std::size_t>(count), static_cast<int>(value));
    }
    if (delays.empty()) throw std::invalid_argument("empty delay string");
    return delays;
}

int cmd_compute(const std::vector<std::string>& inputs, const OutputMode& mode) {
    for (const std::string& text : inputs) print_poly(plucking_polynomial(parse_tree(text)), mode);
    return kExitOk;
}

int cmd_delay(const std::vector<std::string>& tree_inputs,
              const std::vector<std::string>& hedgehog_inputs, const OutputMode& mode) {
    for (const std::string& text : tree_inputs) {
        auto [tree, delays] = parse_delayed_tree(text);
        print_poly(plucking_polynomial(tree, delays), mode);
    }
    for (const std::string& text : hedgehog_inputs) {
        auto [tree, delays] = hedgehog(parse_delay_string(text));
        print_poly(plucking_polynomial(tree, delays), mode);
    }
    return kExitOk;
}

struct ClosedFormArgs {
    std::string family;
    std::string delays;
    std::size_t k = 0, a = 0, b = 0;
    bool cross_check = false;
};

int cmd_closed_form(const ClosedFormArgs& args, const OutputMode& mode) {
    QPolynomial result;
    std::vector<int> hedgehog_delays;  // for --cross-check
    if (args.family == "anti-unimodal") {
        hedgehog_delays = parse_delay_string(args.delays);
        result = hedgehog_anti_unimodal(hedgehog_delays);
    } else if (args.family == "delay12") {
        hedgehog_delays = parse_delay_string(args.delays);
        result = hedgehog_delay12(eps_from_delays12(hedgehog_delays));
    } else if (args.family == "14k1") {
        result = family_1_4k_1(args.k);
        hedgehog_delays.assign({1, 1});
        hedgehog_delays.insert(hedgehog_delays.end(), args.k, 4);
        hedgehog_delays.insert(hedgehog_delays.end(), {1, 1});
    } else if (args.family == "1a3k1b") {
        result = family_1a3k1b(args.a, args.k, args.b);
        hedgehog_delays.assign(args.a, 1);
        hedgehog_delays.insert(hedgehog_delays.end(), args.k, 3);
        hedgehog_delays.insert(hedgehog_delays.end(), args.b, 1);
    } else {
        throw std::invalid_argument("unknown family: " + args.family);
    }
    print_poly(result, mode);
    if (args.cross_check) {
        auto [tree, assignment] = hedgehog(hedgehog_delays);
        const QPolynomial recursion = plucking_polynomial(tree, assignment);
        if (recursion != result) {
            std::cerr << "cross-check failed: recursion gives " << to_text(recursion) << '\n';
            return kExitFinding;
        }
        std::cerr << "cross-check ok\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& poly_text, const OutputMode& mode) {
    const QPolynomial p = parse_coeff_list(poly_text);
    const bool uni = is_unimodal(p), strict = is_strictly_unimodal(p), sym = is_symmetric(p);
    if (mode.json) {
        nlohmann::ordered_json j;
        j["unimodal"] = uni;
        j["strictly_unimodal"] = strict;
        j["symmetric"] = sym;
        std::cout << j.dump() << '\n';
    } else {
        auto flag = [](bool b) { return b ? "true" : "false"; };
        std::cout << "unimodal=" << flag(uni) << " strictly_unimodal=" << flag(strict)
                  << " symmetric=" << flag(sym) << '\n';
    }
    return kExitOk;
}

int cmd_factor(const std::string& poly_text, const OutputMode& mode) {
    const FactoredForm f = factor_quantum(parse_coeff_list(poly_text));
    if (mode.json) {
        nlohmann::ordered_json j;
        j["shift"] = f.shift;
        auto factors = nlohmann::ordered_json::array();
        for (const auto& [n, mult] : f.quantum_factors)
            factors.push_back(nlohmann::ordered_json::array({n, mult}));
        j["factors"] = std::move(factors);
        j["residual"] = poly_to_json(f.residual);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << to_text(f) << '\n';
    }
    return kExitOk;
}

struct ReportArgs {
    std::string out_path;
    std::string format = "jsonl";
};

void emit_report(const std::vector<ScanRecord>& records, const ReportArgs& report) {
    if (report.out_path.empty()) return;
    std::ofstream out(report.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + report.out_path);
    write_report(out, records, report.format == "csv" ? ReportFormat::csv : ReportFormat::jsonl);
}

void emit_summary(const ScanSummary& summary) {
    // elapsed goes to stderr so identical runs stay byte-identical on stdout
    std::cout << summary_to_json(summary, false).dump() << '\n';
    std::cerr << "elapsed: " << summary.elapsed_ms << " ms\n";
}

struct ScanArgs {
    int min_leaves = 1;
    int max_leaves = 0;
    std::string values = "1,2";
    bool general_trees = false;
    int edge_max = 8;
    int max_value = 3;
    int samples = 50;
    std::uint64_t seed = 0;
    ScanOptions options;
    ReportArgs report;
};

int cmd_scan(const ScanArgs& args) {
    ScanResult result;
    if (args.general_trees) {
        result = scan_general_trees_anti_unimodal(args.edge_max, args.max_value, args.seed,
                                                  args.samples, args.options);
    } else {
        result = scan_hedgehog_delays(args.min_leaves, args.max_leaves,
                                      parse_delay_string(args.values), args.options);
    }
    emit_report(result.records, args.report);
    emit_summary(result.summary);
    return result.summary.non_unimodal.empty() ? kExitOk : kExitFinding;
}

struct VerifyArgs {
    std::string suite;
    std::optional<int> max_leaves;
    int max_value = 4;
    int trees = 100;
    int shuffles = 5;
    std::uint64_t seed = 0;
    ScanOptions options;
    ReportArgs report;
};

int cmd_verify(const VerifyArgs& args) {
    const auto n = [&](int fallback) { return args.max_leaves.value_or(fallback); };
    if (args.suite == "conjecture12") {
        const ScanResult result = verify_conjecture_12(n(8), args.options);
        emit_report(result.records, args.report);
        emit_summary(result.summary);
        return result.summary.non_unimodal.empty() ? kExitOk : kExitFinding;
    }
    if (args.suite == "prop33") {
        emit_summary(check_prop33(n(10)));
        return kExitOk;
    }
    if (args.suite == "prop35") {
        emit_summary(check_prop35_and_corollary(n(8)));
        return kExitOk;
    }
    if (args.suite == "garstka") {
        ScanSummary summary;
        for (const auto& [descriptor, unimodal] : check_garstka_list()) {
            ++summary.total;
            if (!unimodal) summary.non_unimodal.push_back(descriptor);
        }
        emit_summary(summary);
        const std::vector<std::string> expected = {"21412", "214412"};
        return summary.non_unimodal == expected ? kExitOk : kExitFinding;
    }
    if (args.suite == "14k1") {
        const int k_max = n(10);
        ScanSummary summary;
        bool expected_pattern = true;
        for (const auto& [k, unimodal] : scan_family_1_4k_1(k_max)) {
            ++summary.total;
            if (!unimodal) summary.non_unimodal.push_back("1^2 4^" + std::to_string(k) + " 1^2");
            if (k <= 10 && unimodal != (k == 1 || k >= 7)) expected_pattern = false;
        }
        for (std::size_t k = 1; k <= std::min<std::size_t>(3, static_cast<std::size_t>(k_max));
             ++k) {
            std::vector<int> delays = {1, 1};
            delays.insert(delays.end(), k, 4);
            delays.insert(delays.end(), {1, 1});
            auto [tree, assignment] = hedgehog(delays);
            if (family_1_4k_1(k) != plucking_polynomial(tree, assignment))
                throw FormulaMismatch("1^2 4^" + std::to_string(k) +
                                      " 1^2 closed form disagrees with the recursion");
        }
        emit_summary(summary);
        return expected_pattern ? kExitOk : kExitFinding;
    }
    if (args.suite == "anti-unimodal") {
        const ScanResult result = scan_anti_unimodal(n(6), args.max_value, args.options);
        emit_report(result.records, args.report);
        emit_summary(result.summary);
        return result.summary.non_unimodal.empty() ? kExitOk : kExitFinding;
    }
    if (args.suite == "embedding") {
        emit_summary(embedding_invariance_test(n(10), args.trees, args.shuffles, args.seed));
        return kExitOk;
    }
    if (args.suite == "two-branch") {
        emit_summary(two_branch_check(n(6), n(6)));
        return kExitOk;
    }
    if (args.suite == "paper-all") {
        const auto results = golden::run_all();
        golden::print_results(std::cout, results);
        ScanSummary summary;
        summary.total = results.size();
        for (const auto& r : results)
            if (!r.pass) summary.non_unimodal.push_back(std::to_string(r.id) + ": " + r.name);
        emit_summary(summary);
        return golden::all_passed(results) ? kExitOk : kExitFinding;
    }
    throw std::invalid_argument("unknown suite: " + args.suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plucking polynomials of plane rooted trees"};
    app.require_subcommand(1);

    OutputMode mode;
    std::string tree_text, hedgehog_text, file_path, poly_text;
    ClosedFormArgs closed_form;
    ScanArgs scan;
    VerifyArgs verify;

    auto add_output_flag = [&](CLI::App* cmd) {
        cmd->add_option(
               "--output",
               [&mode](const std::vector<std::string>& v) {
                   if (v[0] == "json") mode.json = true;
                   else if (v[0] != "text") return false;
                   return true;
               },
               "output mode: text or json")
            ->type_name("TEXT");
    };

    CLI::App* compute = app.add_subcommand("compute", "plucking polynomial of a plane rooted tree");
    compute->add_option("--tree", tree_text, "tree notation, e.g. \"(()(()()))\"");
    compute->add_option("--file", file_path, "file with one tree per line");
    add_output_flag(compute);

    CLI::App* delay = app.add_subcommand("delay", "plucking polynomial with a delay function");
    delay->add_option("--tree", tree_text, "delayed tree notation, e.g. \"(2((3))1)\"");
    delay->add_option("--hedgehog", hedgehog_text,
                      "hedgehog delay string: \"32123\", \"3 2 1 2 3\", or \"1^2 4^3 1^2\"");
    delay->add_option("--file", file_path, "file with one delayed tree per line");
    add_output_flag(delay);

    CLI::App* closed = app.add_subcommand("closed-form", "closed-form family evaluation");
    closed->add_option("--family", closed_form.family, "anti-unimodal | delay12 | 14k1 | 1a3k1b")
        ->required();
    closed->add_option("--delays", closed_form.delays, "delay sequence for hedgehog families");
    closed->add_option("--k", closed_form.k, "k parameter");
    closed->add_option("--a", closed_form.a, "a parameter");
    closed->add_option("--b", closed_form.b, "b parameter");
    closed->add_flag("--cross-check", closed_form.cross_check,
                     "also run the recursion and fail on mismatch");
    add_output_flag(closed);

    CLI::App* check = app.add_subcommand("check", "unimodality/symmetry verdicts for coefficients");
    check->add_option("--poly", poly_text, "comma-separated coefficients ascending from q^0")
        ->required();
    add_output_flag(check);

    CLI::App* factor = app.add_subcommand("factor", "greedy quantum-integer factorization");
    factor->add_option("--poly", poly_text, "comma-separated coefficients ascending from q^0")
        ->required();
    add_output_flag(factor);

    CLI::App* scan_cmd = app.add_subcommand("scan", "exhaustive delay-function scans");
    scan_cmd->add_option("--min-leaves", scan.min_leaves, "smallest hedgehog size (default 1)");
    scan_cmd->add_option("--max-leaves", scan.max_leaves, "largest hedgehog size");
    scan_cmd->add_option("--values", scan.values, "delay value set, e.g. 1,2,4 (default 1,2)");
    scan_cmd->add_flag("--general-trees", scan.general_trees,
                       "scan random plane trees under anti-unimodal delays instead");
    scan_cmd->add_option("--edge-max", scan.edge_max, "general-trees: max edges (default 8)");
    scan_cmd->add_option("--max-value", scan.max_value, "general-trees: max delay (default 3)");
    scan_cmd->add_option("--samples", scan.samples, "general-trees: number of trees (default 50)");
    scan_cmd->add_option("--seed", scan.seed, "random seed (default 0)");
    scan_cmd->add_option("--jobs", scan.options.jobs, "worker threads (default 1)");
    scan_cmd->add_option("--max-records", scan.options.max_records,
                         "fail once a scan would exceed this many records (0 = unlimited)");
    scan_cmd->add_option("--out", scan.report.out_path, "report file path");
    scan_cmd->add_option("--format", scan.report.format, "report format: jsonl | csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd
        ->add_option("--suite", verify.suite,
                     "conjecture12 | prop33 | prop35 | garstka | 14k1 | anti-unimodal | "
                     "embedding | two-branch | paper-all")
        ->required();
    verify_cmd
        ->add_option(
            "--max-leaves",
            [&verify](const std::vector<std::string>& v) {
                verify.max_leaves = std::stoi(v[0]);
                return true;
            },
            "suite size override")
        ->type_name("INT");
    verify_cmd->add_option("--max-value", verify.max_value,
                           "anti-unimodal: max delay value (default 4)");
    verify_cmd->add_option("--trees", verify.trees, "embedding: sampled trees (default 100)");
    verify_cmd->add_option("--shuffles", verify.shuffles,
                           "embedding: shuffles per tree (default 5)");
    verify_cmd->add_option("--seed", verify.seed, "random seed (default 0)");
    verify_cmd->add_option("--jobs", verify.options.jobs, "worker threads (default 1)");
    verify_cmd->add_option("--out", verify.report.out_path, "report file path");
    verify_cmd->add_option("--format", verify.report.format, "report format: jsonl | csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            std::vector<std::string> inputs;
            if (compute->count("--tree")) inputs.push_back(tree_text);
            if (compute->count("--file")) {
                auto lines = read_input_lines(file_path);
                inputs.insert(inputs.end(), lines.begin(), lines.end());
            }
            if (inputs.empty()) throw std::invalid_argument("compute needs --tree or --file");
            return cmd_compute(inputs, mode);
        }
        if (delay->parsed()) {
            std::vector<std::string> tree_inputs, hedgehog_inputs;
            if (delay->count("--tree")) tree_inputs.push_back(tree_text);
            if (delay->count("--hedgehog")) hedgehog_inputs.push_back(hedgehog_text);
            if (delay->count("--file")) {
                auto lines = read_input_lines(file_path);
                tree_inputs.insert(tree_inputs.end(), lines.begin(), lines.end());
            }
            if (tree_inputs.empty() && hedgehog_inputs.empty())
                throw std::invalid_argument("delay needs --tree, --hedgehog, or --file");
            return cmd_delay(tree_inputs, hedgehog_inputs, mode);
        }
        if (closed->parsed()) return cmd_closed_form(closed_form, mode);
        if (check->parsed()) return cmd_check(poly_text, mode);
        if (factor->parsed()) return cmd_factor(poly_text, mode);
        if (scan_cmd->parsed()) {
            if (!scan.general_trees && scan_cmd->count("--max-leaves") == 0)
                throw std::invalid_argument("scan needs --max-leaves");
            return cmd_scan(scan);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify);
    } catch (const FormulaMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFinding;
    } catch (const CounterexampleFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFinding;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
