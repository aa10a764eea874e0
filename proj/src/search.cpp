#include "plucking/search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace plucking {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Applies fn(i) for i in [0, count) across `jobs` threads, preserving index
// order in the result; the first exception thrown by any worker propagates.
template <typename Fn>
std::vector<ScanRecord> parallel_records(std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<ScanRecord> records(count);
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) records[i] = fn(i);
        return records;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, count));
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) records[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return records;
}

ScanSummary summarize(const std::vector<ScanRecord>& records, Clock::time_point start) {
    ScanSummary summary;
    summary.total = records.size();
    for (const ScanRecord& r : records) {
        if (r.zero) ++summary.zero_count;
        else if (!r.unimodal) summary.non_unimodal.push_back(r.input_descriptor);
    }
    summary.elapsed_ms = ms_since(start);
    return summary;
}

std::string delay_descriptor(const std::vector<int>& delays) {
    const bool compact = std::all_of(delays.begin(), delays.end(), [](int d) { return d <= 9; });
    std::string out;
    for (std::size_t i = 0; i < delays.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(delays[i]);
    }
    return out;
}

// All sequences over `values` of each length in [n_min, n_max], lengths
// ascending, lexicographic within a length.
std::vector<std::vector<int>> enumerate_sequences(int n_min, int n_max, std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::vector<int>> out;
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<std::size_t> odo(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<int> seq(odo.size());
            for (std::size_t i = 0; i < odo.size(); ++i) seq[i] = values[odo[i]];
            out.push_back(std::move(seq));
            std::size_t i = odo.size();
            while (i > 0 && ++odo[i - 1] == values.size()) odo[--i] = 0;
            if (i == 0) break;
        }
    }
    return out;
}

std::vector<std::vector<int>> enumerate_anti_unimodal(int n_min, int n_max, int max_value) {
    std::vector<int> values(static_cast<std::size_t>(max_value));
    for (int v = 1; v <= max_value; ++v) values[static_cast<std::size_t>(v) - 1] = v;
    std::vector<std::vector<int>> out;
    for (auto& seq : enumerate_sequences(n_min, n_max, values)) {
        if (!is_anti_unimodal(seq)) continue;
        if (std::find(seq.begin(), seq.end(), 1) == seq.end()) continue;
        out.push_back(std::move(seq));
    }
    return out;
}

void enforce_budget(std::size_t count, const ScanOptions& options) {
    if (options.max_records > 0 && count > options.max_records)
        throw BudgetExceeded(options.max_records);
}

}  // namespace

ScanRecord make_scan_record(std::string descriptor, QPolynomial p) {
    ScanRecord r;
    r.input_descriptor = std::move(descriptor);
    r.unimodal = is_unimodal(p);
    r.strictly_unimodal = is_strictly_unimodal(p);
    r.symmetric = is_symmetric(p);
    r.zero = p.is_zero();
    if (!r.zero) r.factored = factor_quantum(p);
    r.polynomial = std::move(p);
    return r;
}

ScanResult scan_hedgehog_delays(int n_min, int n_max, const std::vector<int>& values,
                                const ScanOptions& options) {
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("need 1 <= n_min <= n_max");
    if (values.empty()) throw std::invalid_argument("values must be nonempty");
    for (int v : values)
        if (v < 1) throw std::invalid_argument("delay values must be >= 1");
    const auto start = Clock::now();
    const auto inputs = enumerate_sequences(n_min, n_max, values);
    enforce_budget(inputs.size(), options);
    auto records = parallel_records(inputs.size(), options.jobs, [&](std::size_t i) {
        const auto& delays = inputs[i];
        auto [tree, assignment] = hedgehog(delays);
        return make_scan_record(delay_descriptor(delays), plucking_polynomial(tree, assignment));
    });
    ScanSummary summary = summarize(records, start);
    return {std::move(records), std::move(summary)};
}

ScanResult verify_conjecture_12(int n_max, const ScanOptions& options) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const auto start = Clock::now();
    const auto inputs = enumerate_sequences(1, n_max, {1, 2});
    enforce_budget(inputs.size(), options);
    auto records = parallel_records(inputs.size(), options.jobs, [&](std::size_t i) {
        const auto& delays = inputs[i];
        auto [tree, assignment] = hedgehog(delays);
        QPolynomial recursion = plucking_polynomial(tree, assignment);
        QPolynomial formula = hedgehog_delay12(eps_from_delays12(delays));
        if (recursion != formula)
            throw FormulaMismatch("recursion and eps-polynomial form disagree on " +
                                  delay_descriptor(delays) + ": " + to_text(recursion) +
                                  " vs " + to_text(formula));
        return make_scan_record(delay_descriptor(delays), std::move(recursion));
    });
    ScanSummary summary = summarize(records, start);
    return {std::move(records), std::move(summary)};
}

std::vector<std::pair<int, bool>> scan_family_1_4k_1(int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    std::vector<std::pair<int, bool>> out;
    for (int k = 1; k <= k_max; ++k)
        out.emplace_back(k, is_unimodal(family_1_4k_1(static_cast<std::size_t>(k))));
    return out;
}

std::vector<std::pair<std::string, bool>> check_garstka_list() {
    static const char* const descriptors[] = {"21412",     "214412",  "1214121",
                                              "112141211", "2114112", "211141112"};
    std::vector<std::pair<std::string, bool>> out;
    for (const char* desc : descriptors) {
        std::vector<int> delays;
        for (const char* c = desc; *c; ++c) delays.push_back(*c - '0');
        auto [tree, assignment] = hedgehog(delays);
        out.emplace_back(desc, is_unimodal(plucking_polynomial(tree, assignment)));
    }
    return out;
}

ScanResult scan_anti_unimodal(int n_max, int max_value, const ScanOptions& options) {
    if (n_max < 1 || max_value < 1) throw std::invalid_argument("n_max and max_value must be >= 1");
    const auto start = Clock::now();
    const auto inputs = enumerate_anti_unimodal(1, n_max, max_value);
    enforce_budget(inputs.size(), options);
    auto records = parallel_records(inputs.size(), options.jobs, [&](std::size_t i) {
        const auto& delays = inputs[i];
        auto [tree, assignment] = hedgehog(delays);
        QPolynomial recursion = plucking_polynomial(tree, assignment);
        QPolynomial formula = hedgehog_anti_unimodal(delays);
        if (recursion != formula)
            throw FormulaMismatch("recursion and closed form disagree on " +
                                  delay_descriptor(delays) + ": " + to_text(recursion) +
                                  " vs " + to_text(formula));
        return make_scan_record(delay_descriptor(delays), std::move(recursion));
    });
    ScanSummary summary = summarize(records, start);
    return {std::move(records), std::move(summary)};
}

ScanResult scan_general_trees_anti_unimodal(int edge_max, int max_value, std::uint64_t seed,
                                            int samples, const ScanOptions& options) {
    if (edge_max < 1) throw std::invalid_argument("edge_max must be >= 1");
    if (max_value < 1 || samples < 1)
        throw std::invalid_argument("max_value and samples must be >= 1");
    const auto start = Clock::now();
    std::mt19937_64 rng(seed);

    std::vector<std::pair<PlaneRootedTree, DelayAssignment>> inputs;
    for (int s = 0; s < samples; ++s) {
        const std::size_t edges = 1 + bounded_random(rng, static_cast<std::uint64_t>(edge_max));
        PlaneRootedTree tree = random_tree(edges, rng);
        const int leaves = static_cast<int>(leaf_count(tree));
        for (auto& delays : enumerate_anti_unimodal(leaves, leaves, max_value))
            inputs.emplace_back(tree, DelayAssignment{std::move(delays)});
    }
    enforce_budget(inputs.size(), options);
    auto records = parallel_records(inputs.size(), options.jobs, [&](std::size_t i) {
        const auto& [tree, assignment] = inputs[i];
        return make_scan_record(serialize_delayed_tree(tree, assignment),
                                plucking_polynomial(tree, assignment));
    });
    ScanSummary summary = summarize(records, start);
    return {std::move(records), std::move(summary)};
}

ScanSummary check_prop33(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const auto start = Clock::now();
    ScanSummary summary;
    for (int n = 1; n <= n_max; ++n) {
        const std::size_t len = static_cast<std::size_t>(n) + 1;
        for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
            const EpsVector eps = EpsVector::from_mask(mask, len);
            const QPolynomial p = eps_poly(eps) * quantum_integer(static_cast<std::size_t>(n));
            ++summary.total;
            if (p.is_zero()) ++summary.zero_count;
            if (!is_unimodal(p))
                throw CounterexampleFound("eps-polynomial times [" + std::to_string(n) +
                                          "]_q is not unimodal for mask " + std::to_string(mask));
            const BigInt step = p.coeff(static_cast<std::size_t>(n)) -
                                p.coeff(static_cast<std::size_t>(n) - 1);
            if (step != eps[len - 1] - eps[0])
                throw CounterexampleFound("peak step is not eps_n - eps_0 for mask " +
                                          std::to_string(mask) + ", n = " + std::to_string(n));
        }
    }
    summary.elapsed_ms = ms_since(start);
    return summary;
}

ScanSummary check_prop35_and_corollary(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const auto start = Clock::now();
    ScanSummary summary;
    for (int n = 1; n <= n_max; ++n) {
        const std::size_t nn = static_cast<std::size_t>(n);
        for (std::uint64_t mask = 0; mask < (1ull << (nn + 2)); ++mask) {
            const QPolynomial p = eps_poly(EpsVector::from_mask(mask, nn + 2)) *
                                  quantum_integer(nn + 1) * quantum_integer(nn);
            ++summary.total;
            if (p.is_zero()) ++summary.zero_count;
            if (!is_unimodal(p))
                throw CounterexampleFound("eps-polynomial times [n+1]_q [n]_q not unimodal, n = " +
                                          std::to_string(n) + ", mask " + std::to_string(mask));
        }
        for (std::uint64_t mask = 0; mask < (1ull << (nn + 1)); ++mask) {
            const QPolynomial eps = eps_poly(EpsVector::from_mask(mask, nn + 1));
            if (!is_symmetric(eps)) continue;
            const QPolynomial p = eps * q_factorial(nn);
            ++summary.total;
            if (p.is_zero()) ++summary.zero_count;
            if (!is_unimodal(p))
                throw CounterexampleFound("symmetric eps-polynomial times [n]_q! not unimodal, n = " +
                                          std::to_string(n) + ", mask " + std::to_string(mask));
        }
    }
    summary.elapsed_ms = ms_since(start);
    return summary;
}

ScanSummary embedding_invariance_test(int edge_max, int trees, int shuffles, std::uint64_t seed) {
    if (edge_max < 1 || trees < 1 || shuffles < 1)
        throw std::invalid_argument("all parameters must be >= 1");
    const auto start = Clock::now();
    ScanSummary summary;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trees; ++t) {
        const std::size_t edges = 1 + bounded_random(rng, static_cast<std::uint64_t>(edge_max));
        const PlaneRootedTree tree = random_tree(edges, rng);
        const QPolynomial q = plucking_polynomial(tree);
        const std::string key = canonical_key(tree);
        for (int s = 0; s < shuffles; ++s) {
            const PlaneRootedTree shuffled = random_embedding(tree, rng());
            ++summary.total;
            if (canonical_key(shuffled) != key)
                throw CounterexampleFound("canonical key changed under re-embedding of " +
                                          serialize_tree(tree));
            if (plucking_polynomial(shuffled) != q)
                throw CounterexampleFound("Q changed under re-embedding of " +
                                          serialize_tree(tree));
        }
    }
    summary.elapsed_ms = ms_since(start);
    return summary;
}

ScanSummary two_branch_check(int a_max, int b_max) {
    if (a_max < 1 || b_max < 1) throw std::invalid_argument("a_max and b_max must be >= 1");
    const auto start = Clock::now();
    ScanSummary summary;
    for (int a = 1; a <= a_max; ++a) {
        for (int b = 1; b <= b_max; ++b) {
            const QPolynomial q = plucking_polynomial(
                two_branch_tree(static_cast<std::size_t>(b), static_cast<std::size_t>(a)));
            const QPolynomial expected =
                gaussian_binomial(static_cast<std::size_t>(a + b), a);
            ++summary.total;
            if (q != expected)
                throw CounterexampleFound("Q(two-branch " + std::to_string(b) + "," +
                                          std::to_string(a) + ") != gaussian binomial: " +
                                          to_text(q) + " vs " + to_text(expected));
        }
    }
    summary.elapsed_ms = ms_since(start);
    return summary;
}

namespace {

nlohmann::ordered_json bigint_to_json(const BigInt& value) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
    return value.str();  // decimal string once past 64 bits
}

BigInt bigint_from_json(const nlohmann::ordered_json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

}  // namespace

nlohmann::ordered_json poly_to_json(const QPolynomial& p) {
    nlohmann::ordered_json j;
    j["low"] = p.is_zero() ? 0 : p.low_degree();
    auto coeffs = nlohmann::ordered_json::array();
    if (!p.is_zero())
        for (std::size_t i = p.low_degree(); i < p.coeffs().size(); ++i)
            coeffs.push_back(bigint_to_json(p.coeffs()[i]));
    j["coeffs"] = std::move(coeffs);
    return j;
}

QPolynomial poly_from_json(const nlohmann::ordered_json& j) {
    const auto low = j.at("low").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    std::vector<BigInt> out(low + coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[low + i] = bigint_from_json(coeffs[i]);
    return QPolynomial(std::move(out));
}

nlohmann::ordered_json record_to_json(const ScanRecord& record) {
    nlohmann::ordered_json j;
    j["input_descriptor"] = record.input_descriptor;
    j["polynomial"] = poly_to_json(record.polynomial);
    j["unimodal"] = record.unimodal;
    j["strictly_unimodal"] = record.strictly_unimodal;
    j["symmetric"] = record.symmetric;
    j["zero"] = record.zero;
    if (record.factored) {
        nlohmann::ordered_json f;
        f["shift"] = record.factored->shift;
        auto factors = nlohmann::ordered_json::array();
        for (const auto& [n, mult] : record.factored->quantum_factors)
            factors.push_back(nlohmann::ordered_json::array({n, mult}));
        f["factors"] = std::move(factors);
        f["residual"] = poly_to_json(record.factored->residual);
        j["factored"] = std::move(f);
    } else {
        j["factored"] = nullptr;
    }
    return j;
}

ScanRecord record_from_json(const nlohmann::ordered_json& j) {
    ScanRecord r;
    r.input_descriptor = j.at("input_descriptor").get<std::string>();
    r.polynomial = poly_from_json(j.at("polynomial"));
    r.unimodal = j.at("unimodal").get<bool>();
    r.strictly_unimodal = j.at("strictly_unimodal").get<bool>();
    r.symmetric = j.at("symmetric").get<bool>();
    r.zero = j.at("zero").get<bool>();
    if (!j.at("factored").is_null()) {
        FactoredForm f;
        const auto& fj = j.at("factored");
        f.shift = fj.at("shift").get<std::size_t>();
        for (const auto& pair : fj.at("factors"))
            f.quantum_factors[pair.at(0).get<std::size_t>()] = pair.at(1).get<std::size_t>();
        f.residual = poly_from_json(fj.at("residual"));
        r.factored = std::move(f);
    }
    return r;
}

std::string csv_header() {
    return "descriptor,low,coeffs,unimodal,strictly_unimodal,symmetric,zero";
}

std::string record_to_csv(const ScanRecord& record) {
    std::ostringstream out;
    out << record.input_descriptor << ',';
    out << (record.zero ? 0 : record.polynomial.low_degree()) << ',';
    if (!record.zero) {
        const auto& c = record.polynomial.coeffs();
        for (std::size_t i = record.polynomial.low_degree(); i < c.size(); ++i) {
            if (i > record.polynomial.low_degree()) out << ';';
            out << c[i];
        }
    }
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << ',' << flag(record.unimodal) << ',' << flag(record.strictly_unimodal) << ','
        << flag(record.symmetric) << ',' << flag(record.zero);
    return out.str();
}

void write_report(std::ostream& out, const std::vector<ScanRecord>& records, ReportFormat format) {
    if (format == ReportFormat::csv) out << csv_header() << '\n';
    for (const ScanRecord& r : records) {
        if (format == ReportFormat::jsonl) out << record_to_json(r).dump();
        else out << record_to_csv(r);
        out << '\n';
    }
}

nlohmann::ordered_json summary_to_json(const ScanSummary& summary, bool include_elapsed) {
    nlohmann::ordered_json j;
    j["total"] = summary.total;
    j["zero_count"] = summary.zero_count;
    j["non_unimodal"] = summary.non_unimodal;
    if (include_elapsed) j["elapsed_ms"] = summary.elapsed_ms;
    return j;
}

}  // namespace plucking
