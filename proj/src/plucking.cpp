#include "plucking/plucking.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace plucking {

namespace {

QPolynomial plucking_memoized(const PlaneRootedTree& tree,
                              std::unordered_map<std::string, QPolynomial>& memo) {
    auto paths = leaf_paths(tree);
    if (paths.empty()) return QPolynomial::constant(1);
    const std::string key = canonical_key(tree);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QPolynomial sum;
    for (const LeafPath& path : paths) {
        QPolynomial sub = plucking_memoized(remove_leaf(tree, path), memo);
        sum += QPolynomial::monomial(r_value(tree, path)) * sub;
    }
    memo.emplace(key, sum);
    return sum;
}

// Leaves of T-v in left-to-right order: the removed slot either disappears or,
// when the parent became childless (and is not the root), holds the parent as
// a fresh delay-1 leaf at the same ordinal position.
DelayAssignment delays_after_pluck(const PlaneRootedTree& tree, const LeafPath& path,
                                   std::size_t leaf_index, const DelayAssignment& delays) {
    DelayAssignment next;
    next.values.reserve(delays.values.size());
    for (std::size_t j = 0; j < delays.values.size(); ++j) {
        if (j == leaf_index) continue;
        next.values.push_back(std::max(1, delays.values[j] - 1));
    }
    if (path.size() > 1) {
        const TreeNode* parent = &tree.root();
        for (std::size_t i = 0; i + 1 < path.size(); ++i) parent = &parent->children[path[i]];
        if (parent->children.size() == 1)
            next.values.insert(next.values.begin() + static_cast<std::ptrdiff_t>(leaf_index), 1);
    }
    return next;
}

QPolynomial plucking_delay_memoized(const PlaneRootedTree& tree, const DelayAssignment& delays,
                                    std::unordered_map<std::string, QPolynomial>& memo) {
    auto paths = leaf_paths(tree);
    if (paths.empty()) return QPolynomial::constant(1);
    const std::string key = serialize_delayed_tree(tree, delays);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QPolynomial sum;  // stays 0 when no leaf has delay 1
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (delays.values[i] != 1) continue;
        PlaneRootedTree rest = remove_leaf(tree, paths[i]);
        DelayAssignment rest_delays = delays_after_pluck(tree, paths[i], i, delays);
        QPolynomial sub = plucking_delay_memoized(rest, rest_delays, memo);
        sum += QPolynomial::monomial(r_value(tree, paths[i])) * sub;
    }
    memo.emplace(key, sum);
    return sum;
}

}  // namespace

QPolynomial plucking_polynomial(const PlaneRootedTree& tree) {
    std::unordered_map<std::string, QPolynomial> memo;
    return plucking_memoized(tree, memo);
}

QPolynomial plucking_polynomial(const PlaneRootedTree& tree, const DelayAssignment& delays) {
    const std::size_t leaves = leaf_count(tree);
    if (delays.values.size() != leaves) throw LengthMismatch(delays.values.size(), leaves);
    for (int d : delays.values)
        if (d < 1) throw std::invalid_argument("delay values must be >= 1");
    std::unordered_map<std::string, QPolynomial> memo;
    return plucking_delay_memoized(tree, delays, memo);
}

QPolynomial hedgehog_plain(std::size_t n) { return q_factorial(n); }

bool is_anti_unimodal(const std::vector<int>& values) {
    std::size_t i = 0;
    while (i + 1 < values.size() && values[i + 1] <= values[i]) ++i;
    while (i + 1 < values.size() && values[i + 1] >= values[i]) ++i;
    return values.empty() || i == values.size() - 1;
}

QPolynomial hedgehog_anti_unimodal(const std::vector<int>& delays) {
    for (int d : delays)
        if (d < 1) throw std::invalid_argument("delay values must be >= 1");
    if (!is_anti_unimodal(delays))
        throw NotAntiUnimodal("delay sequence is not anti-unimodal");
    const std::size_t n = delays.size();
    if (n == 0) return QPolynomial::constant(1);

    const int max_delay = *std::max_element(delays.begin(), delays.end());
    if (*std::min_element(delays.begin(), delays.end()) > 1) return {};

    std::vector<std::size_t> count(static_cast<std::size_t>(max_delay) + 1, 0);
    for (int d : delays) ++count[static_cast<std::size_t>(d)];

    std::size_t last_one = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (delays[j] == 1) last_one = j;
    std::size_t exponent = 0;
    for (std::size_t j = last_one + 1; j < n; ++j)
        exponent += static_cast<std::size_t>(delays[j]) - 1;  // (i-1) per value-i leaf right of the 1-block

    QPolynomial product = QPolynomial::constant(1);
    long long prefix = 0;  // number of leaves with delay <= j
    for (std::size_t j = 1; j <= n; ++j) {
        if (j < count.size()) prefix += static_cast<long long>(count[j]);
        const long long m = prefix - static_cast<long long>(j) + 1;
        if (m <= 0) return {};
        product *= quantum_integer(static_cast<std::size_t>(m));
    }
    return QPolynomial::monomial(exponent) * product;
}

QPolynomial hedgehog_delay12(const EpsVector& eps) {
    if (eps.size() == 0) return QPolynomial::constant(1);
    return eps_poly(eps) * q_factorial(eps.size() - 1);
}

EpsVector eps_from_delays12(const std::vector<int>& delays) {
    const std::size_t n = delays.size();
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int d = delays[n - 1 - i];
        if (d != 1 && d != 2) throw std::invalid_argument("delays must be 1 or 2");
        bits[i] = d == 1 ? 1 : 0;
    }
    return EpsVector(std::move(bits));
}

QPolynomial family_1_4k_1(std::size_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    QPolynomial two_block = quantum_integer(2) * quantum_integer(2);
    return QPolynomial::monomial(k) * q_factorial(k + 1) * two_block * quantum_integer(3) *
           (QPolynomial::constant(1) + QPolynomial::monomial(k + 2));
}

QPolynomial family_1a3k1b(std::size_t a, std::size_t k, std::size_t b) {
    if (a < 1 || k < 1 || b < 1) throw std::invalid_argument("a, k, b must be >= 1");
    QPolynomial term1 = (QPolynomial::monomial(k + b - 1) + QPolynomial::monomial(k + b)) *
                        quantum_integer(a) * quantum_integer(b);
    QPolynomial term2 = QPolynomial::monomial(2 * k + 2 * b) * quantum_integer(a) *
                        quantum_integer(a - 1);
    QPolynomial term3 = quantum_integer(b) * quantum_integer(b - 1);
    return q_factorial(k + a + b - 2) * (term1 + term2 + term3);
}

}  // namespace plucking
