#ifndef PLUCKING_SEARCH_HPP
#define PLUCKING_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "plucking/plucking.hpp"
#include "plucking/qpoly.hpp"
#include "plucking/tree.hpp"

namespace plucking {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::size_t limit)
        : std::runtime_error("scan would exceed the record limit of " + std::to_string(limit)) {}
};

struct FormulaMismatch : std::runtime_error {
    explicit FormulaMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CounterexampleFound : std::runtime_error {
    explicit CounterexampleFound(const std::string& what) : std::runtime_error(what) {}
};

/// One scanned input with its polynomial and predicate verdicts. `factored`
/// is absent exactly when the polynomial is zero.
struct ScanRecord {
    std::string input_descriptor;
    QPolynomial polynomial;
    bool unimodal = true;
    bool strictly_unimodal = true;
    bool symmetric = true;
    bool zero = true;
    std::optional<FactoredForm> factored;

    bool operator==(const ScanRecord&) const = default;
};

ScanRecord make_scan_record(std::string descriptor, QPolynomial p);

struct ScanSummary {
    std::size_t total = 0;
    std::size_t zero_count = 0;
    std::vector<std::string> non_unimodal;  // nonzero records with unimodal = false
    std::int64_t elapsed_ms = 0;
};

struct ScanResult {
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

struct ScanOptions {
    unsigned jobs = 1;
    std::size_t max_records = 0;  // 0 = unlimited; exceeding throws BudgetExceeded
};

/// Every delay sequence over `values` of each length in [n_min, n_max], in
/// ascending length then lexicographic order, evaluated on the hedgehog.
ScanResult scan_hedgehog_delays(int n_min, int n_max, const std::vector<int>& values,
                                const ScanOptions& options = {});

/// Scan of every {1,2} delay sequence up to n_max leaves, with the recursion
/// checked against the eps-polynomial closed form on every input.
/// Throws FormulaMismatch if the two routes ever disagree.
ScanResult verify_conjecture_12(int n_max, const ScanOptions& options = {});

/// Unimodality verdict of the 1^2 4^k 1^2 closed form for k = 1..k_max.
std::vector<std::pair<int, bool>> scan_family_1_4k_1(int k_max);

/// Unimodality verdicts for the six reference delay strings
/// 21412, 214412, 1214121, 112141211, 2114112, 211141112.
std::vector<std::pair<std::string, bool>> check_garstka_list();

/// All anti-unimodal sequences of length <= n_max, values <= max_value,
/// containing at least one 1; asserts closed form == recursion on each.
ScanResult scan_anti_unimodal(int n_max, int max_value, const ScanOptions& options = {});

/// Random plane trees up to edge_max edges, each under every anti-unimodal
/// delay assignment on its left-to-right leaves. Exploratory: non-unimodal
/// findings are recorded, never asserted absent.
ScanResult scan_general_trees_anti_unimodal(int edge_max, int max_value, std::uint64_t seed,
                                            int samples, const ScanOptions& options = {});

/// eps_poly(eps) [n]_q is unimodal for every eps of length n+1, n <= n_max,
/// and the peak step c_n - c_{n-1} equals eps_n - eps_0.
ScanSummary check_prop33(int n_max);

/// eps_poly(eps) [n+1]_q [n]_q is unimodal for every eps of length n+2, and
/// eps_poly(eps) [n]_q! is unimodal for every symmetric eps of length n+1,
/// for n <= n_max.
ScanSummary check_prop35_and_corollary(int n_max);

/// Q and canonical_key are invariant under re-embedding: `trees` random trees
/// up to edge_max edges, `shuffles` random embeddings each.
ScanSummary embedding_invariance_test(int edge_max, int trees, int shuffles, std::uint64_t seed);

/// Q(two-branch tree with arms b, a) == gaussian_binomial(a+b, a).
ScanSummary two_branch_check(int a_max, int b_max);

enum class ReportFormat { jsonl, csv };

nlohmann::ordered_json record_to_json(const ScanRecord& record);
ScanRecord record_from_json(const nlohmann::ordered_json& j);
std::string record_to_csv(const ScanRecord& record);
std::string csv_header();
void write_report(std::ostream& out, const std::vector<ScanRecord>& records, ReportFormat format);
nlohmann::ordered_json summary_to_json(const ScanSummary& summary, bool include_elapsed = true);

nlohmann::ordered_json poly_to_json(const QPolynomial& p);
QPolynomial poly_from_json(const nlohmann::ordered_json& j);

}  // namespace plucking

#endif
