#include "plucking/golden.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include "plucking/plucking.hpp"
#include "plucking/qpoly.hpp"
#include "plucking/search.hpp"
#include "plucking/tree.hpp"

namespace plucking::golden {

namespace {

QPolynomial from_low(std::size_t low, std::vector<long long> coeffs) {
    std::vector<BigInt> c(low + coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[low + i] = coeffs[i];
    return QPolynomial(std::move(c));
}

struct FamilyTable {
    std::size_t k;
    std::size_t low;
    std::vector<long long> coeffs;
};

// Published coefficient tables for the 1^2 4^k 1^2 hedgehog family.
const std::vector<FamilyTable> family_tables = {
    {2, 2, {1, 5, 12, 18, 19, 17, 17, 19, 18, 12, 5, 1}},
    {3, 3, {1, 6, 18, 36, 53, 61, 59, 54, 54, 59, 61, 53, 36, 18, 6, 1}},
    {4, 4, {1, 7, 25, 61, 114, 173, 221, 245, 245, 234, 228, 234, 245, 245, 221, 173, 114,
            61, 25, 7, 1}},
    {5, 5, {1, 8, 33, 94, 208, 381, 600, 832, 1034, 1171, 1232, 1234, 1212, 1200, 1212, 1234,
            1232, 1171, 1034, 832, 600, 381, 208, 94, 33, 8, 1}},
    {6, 6, {1, 9, 42, 136, 344, 725, 1325, 2155, 3174, 4287, 5364, 6276, 6934, 7315, 7465,
            7477, 7451, 7451, 7477, 7465, 7315, 6934, 6276, 5364, 4287, 3174, 2155, 1325,
            725, 344, 136, 42, 9, 1}},
    {7, 7, {1, 10, 52, 188, 532, 1257, 2582, 4737, 7909, 12179, 17468, 23514, 29896, 36105,
            41645, 46137, 49397, 51464, 52566, 53031, 53170, 53170, 53031, 52566, 51464,
            49397, 46137, 41645, 36105, 29896, 23514, 17468, 12179, 7909, 4737, 2582, 1257,
            532, 188, 52, 10, 1}},
};

// Each check returns an empty string on success, a failure detail otherwise.

std::string check_example_tree() {
    const PlaneRootedTree tree = parse_tree("(()(()()))");
    const auto paths = leaf_paths(tree);
    if (paths.size() != 3) return "expected 3 leaves";
    const std::vector<std::size_t> expected_r = {3, 1, 0};
    for (std::size_t i = 0; i < 3; ++i)
        if (r_value(tree, paths[i]) != expected_r[i])
            return "r-value of leaf " + std::to_string(i) + " is " +
                   std::to_string(r_value(tree, paths[i]));
    const QPolynomial minus_rightmost = plucking_polynomial(remove_leaf(tree, std::size_t{2}));
    if (minus_rightmost != QPolynomial{1, 1, 1})
        return "Q(T - rightmost leaf) = " + to_text(minus_rightmost);
    if (remove_leaf(tree, std::size_t{2}) != parse_tree("(()(()))"))
        return "T minus rightmost leaf is not the two-branch tree (()(()))";
    const QPolynomial minus_leftmost = plucking_polynomial(remove_leaf(tree, std::size_t{0}));
    if (minus_leftmost != QPolynomial{1, 1}) return "Q(T - leftmost leaf) = " + to_text(minus_leftmost);
    const QPolynomial q = plucking_polynomial(tree);
    if (q != QPolynomial{1, 2, 2, 2, 1}) return "Q = " + to_text(q);
    return "";
}

std::string check_delayed_tree() {
    auto [tree, delays] = parse_delayed_tree("(2((3))1)");
    const QPolynomial q = plucking_polynomial(tree, delays);
    if (q != QPolynomial::monomial(3)) return "Q = " + to_text(q);
    return "";
}

std::string check_hedgehog_factorial() {
    for (std::size_t n = 0; n <= 8; ++n) {
        if (plucking_polynomial(hedgehog_tree(n)) != q_factorial(n))
            return "hedgehog with " + std::to_string(n) + " leaves";
        if (hedgehog_plain(n) != q_factorial(n))
            return "closed form for n = " + std::to_string(n);
    }
    return "";
}

std::string check_32123() {
    auto [tree, delays] = parse_delayed_tree("(32123)");
    const QPolynomial expected = from_low(3, {1, 3, 4, 3, 1});
    const QPolynomial recursion = plucking_polynomial(tree, delays);
    if (recursion != expected) return "recursion gives " + to_text(recursion);
    const QPolynomial closed = hedgehog_anti_unimodal({3, 2, 1, 2, 3});
    if (closed != expected) return "closed form gives " + to_text(closed);
    const FactoredForm f = factor_quantum(recursion);
    FactoredForm want;
    want.shift = 3;
    want.quantum_factors[3] = 1;
    want.quantum_factors[2] = 2;
    want.residual = QPolynomial::constant(1);
    if (f != want) return "factored form is " + to_text(f);
    return "";
}

std::string check_family_tables() {
    for (const FamilyTable& t : family_tables) {
        if (family_1_4k_1(t.k) != from_low(t.low, t.coeffs))
            return "closed form differs from the published table at k = " + std::to_string(t.k);
    }
    for (std::size_t k = 1; k <= 3; ++k) {
        std::vector<int> delays = {1, 1};
        delays.insert(delays.end(), k, 4);
        delays.insert(delays.end(), {1, 1});
        auto [tree, assignment] = hedgehog(delays);
        if (family_1_4k_1(k) != plucking_polynomial(tree, assignment))
            return "closed form differs from the recursion at k = " + std::to_string(k);
    }
    return "";
}

std::string check_family_verdicts() {
    const auto verdicts = scan_family_1_4k_1(10);
    for (const auto& [k, unimodal] : verdicts) {
        const bool expected = k == 1 || k >= 7;
        if (unimodal != expected)
            return "k = " + std::to_string(k) + " is " + (unimodal ? "" : "not ") + "unimodal";
    }
    return "";
}

std::string check_garstka() {
    auto [tree, delays] = parse_delayed_tree("(21412)");
    const QPolynomial q = plucking_polynomial(tree, delays);
    if (q != from_low(2, {1, 4, 5, 4, 5, 4, 1})) return "21412 gives " + to_text(q);
    const auto verdicts = check_garstka_list();
    const std::vector<std::pair<std::string, bool>> expected = {
        {"21412", false},     {"214412", false},  {"1214121", true},
        {"112141211", true},  {"2114112", true},  {"211141112", true},
    };
    if (verdicts != expected) {
        for (std::size_t i = 0; i < verdicts.size(); ++i)
            if (verdicts[i] != expected[i])
                return verdicts[i].first + " is " + (verdicts[i].second ? "" : "not ") + "unimodal";
    }
    return "";
}

std::string check_conjecture12() {
    const ScanResult result = verify_conjecture_12(8);
    if (result.summary.total != 510)
        return "scanned " + std::to_string(result.summary.total) + " assignments, expected 510";
    if (!result.summary.non_unimodal.empty())
        return "found non-unimodal record " + result.summary.non_unimodal.front();
    return "";
}

std::string check_anti_unimodal_scan() {
    const ScanResult result = scan_anti_unimodal(6, 4);
    if (!result.summary.non_unimodal.empty())
        return "found non-unimodal record " + result.summary.non_unimodal.front();
    for (const ScanRecord& r : result.records)
        if (r.input_descriptor == "32123") {
            if (r.polynomial != from_low(3, {1, 3, 4, 3, 1}))
                return "32123 record is " + to_text(r.polynomial);
            return "";
        }
    return "scan does not contain 32123";
}

std::string check_family_1a3k1b() {
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t b = 1; b <= 3; ++b) {
                std::vector<int> delays(a, 1);
                delays.insert(delays.end(), k, 3);
                delays.insert(delays.end(), b, 1);
                auto [tree, assignment] = hedgehog(delays);
                if (family_1a3k1b(a, k, b) != plucking_polynomial(tree, assignment))
                    return "mismatch at a=" + std::to_string(a) + " k=" + std::to_string(k) +
                           " b=" + std::to_string(b);
            }
    return "";
}

std::string check_propositions() {
    try {
        const ScanSummary p33 = check_prop33(10);
        if (p33.total != 4092) return "eps-times-[n]_q suite checked " + std::to_string(p33.total);
        check_prop35_and_corollary(8);
    } catch (const CounterexampleFound& e) {
        return e.what();
    }
    return "";
}

std::string check_embedding_invariance() {
    try {
        embedding_invariance_test(10, 100, 5, 0);
    } catch (const CounterexampleFound& e) {
        return e.what();
    }
    return "";
}

std::string check_q_identities() {
    for (std::size_t n = 0; n <= 12; ++n) {
        if (n >= 1 && quantum_integer(n) != gaussian_binomial(n, 1))
            return "[n]_q != binom(n,1) at n = " + std::to_string(n);
        for (std::size_t k = 0; k <= n; ++k) {
            const QPolynomial b = gaussian_binomial(n, static_cast<long long>(k));
            if (b * q_factorial(k) * q_factorial(n - k) != q_factorial(n))
                return "factorial-ratio identity fails at (" + std::to_string(n) + "," +
                       std::to_string(k) + ")";
            if (b != gaussian_binomial(n, static_cast<long long>(n - k)))
                return "symmetry identity fails at (" + std::to_string(n) + "," +
                       std::to_string(k) + ")";
        }
    }
    if (plucking_polynomial(two_branch_tree(1, 2)) != quantum_integer(3))
        return "two-branch anchor (1,2) is not [3]_q";
    try {
        two_branch_check(6, 6);
    } catch (const CounterexampleFound& e) {
        return e.what();
    }
    return "";
}

struct Criterion {
    int id;
    const char* name;
    double limit_ms;  // 0 = no budget
    std::function<std::string()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "4-edge example tree", 1.0, check_example_tree},
        {2, "delayed branch tree", 0.0, check_delayed_tree},
        {3, "trivial-delay hedgehog factorial, n <= 8", 1000.0, check_hedgehog_factorial},
        {4, "hedgehog 32123 and its factorization", 0.0, check_32123},
        {5, "1^2 4^k 1^2 coefficient tables, k = 2..7", 5000.0, check_family_tables},
        {6, "1^2 4^k 1^2 unimodality verdicts, k = 1..10", 5000.0, check_family_verdicts},
        {7, "21412 family verdicts", 1000.0, check_garstka},
        {8, "{1,2} delay scan to 8 leaves with formula cross-check", 10000.0, check_conjecture12},
        {9, "anti-unimodal closed form vs recursion, n <= 6, values <= 4", 30000.0,
         check_anti_unimodal_scan},
        {10, "1^a 3^k 1^b closed form vs recursion, a,k,b <= 3", 10000.0, check_family_1a3k1b},
        {11, "eps-product unimodality suites", 10000.0, check_propositions},
        {12, "re-embedding invariance, 100 trees x 5 shuffles", 30000.0,
         check_embedding_invariance},
        {13, "q-binomial identities and two-branch cross-check", 5000.0, check_q_identities},
    };
    return list;
}

}  // namespace

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> results;
    for (const Criterion& c : criteria()) {
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        r.limit_ms = c.limit_ms;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.detail = c.run();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        r.pass = r.detail.empty();
        if (r.pass && c.limit_ms > 0 && r.elapsed_ms > c.limit_ms) {
            r.pass = false;
            r.detail = "exceeded time budget of " + std::to_string(c.limit_ms) + " ms";
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.pass) return false;
    return true;
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name
            << "  (" << std::fixed << std::setprecision(2) << r.elapsed_ms << " ms)";
        if (!r.detail.empty()) out << "  -- " << r.detail;
        out << '\n';
    }
}

}  // namespace plucking::golden
