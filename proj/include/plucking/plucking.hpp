#ifndef PLUCKING_PLUCKING_HPP
#define PLUCKING_PLUCKING_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "plucking/qpoly.hpp"
#include "plucking/tree.hpp"

namespace plucking {

struct LengthMismatch : std::invalid_argument {
    LengthMismatch(std::size_t got, std::size_t want)
        : std::invalid_argument("delay assignment has " + std::to_string(got) +
                                " values for " + std::to_string(want) + " leaves") {}
};

struct NotAntiUnimodal : std::invalid_argument {
    explicit NotAntiUnimodal(const std::string& what) : std::invalid_argument(what) {}
};

/// Q(T, q): the single vertex gives 1; otherwise the sum over all leaves v of
/// q^{r(T,v)} Q(T-v, q). Memoized on canonical_key, which is sound because the
/// value does not depend on the plane embedding.
QPolynomial plucking_polynomial(const PlaneRootedTree& tree);

/// Q(T, f): only delay-1 leaves may be plucked; surviving leaves' delays drop
/// by one (floored at 1) and freshly exposed leaves start at 1. An empty sum
/// (no delay-1 leaf on a tree with edges) gives 0. Memoized on the exact
/// delayed serialization: the delay recursion is embedding-sensitive.
QPolynomial plucking_polynomial(const PlaneRootedTree& tree, const DelayAssignment& delays);

/// Q of the trivial-delay hedgehog with n leaves: [n]_q!.
QPolynomial hedgehog_plain(std::size_t n);

/// Weakly decreasing then weakly increasing.
bool is_anti_unimodal(const std::vector<int>& values);

/// Closed form for a hedgehog with an anti-unimodal delay sequence:
/// q^{sum (i-1) f_i^+} times prod_j [ (f_1+...+f_j) - j + 1 ]_q, where f_i
/// counts the leaves with delay i and f_i^+ those right of the delay-1 block.
/// Zero when no delay equals 1 or when any product factor is [m]_q, m <= 0.
/// Throws NotAntiUnimodal for inputs outside the precondition.
QPolynomial hedgehog_anti_unimodal(const std::vector<int>& delays);

/// Closed form for a hedgehog with delays in {1,2}: eps_poly(eps) [n-1]_q!,
/// where eps_i = 1 iff the i-th leaf from the right has delay 1.
QPolynomial hedgehog_delay12(const EpsVector& eps);

/// Encode {1,2}-valued delays (left-to-right) as the EpsVector above.
EpsVector eps_from_delays12(const std::vector<int>& delays);

/// Closed form for the hedgehog with delays 1^2 4^k 1^2:
/// q^k [k+1]_q! (1+q)^2 (1+q+q^2) (1+q^{k+2}).
QPolynomial family_1_4k_1(std::size_t k);

/// Closed form for the hedgehog with delays 1^a 3^k 1^b:
/// [k+a+b-2]_q! ( (q^{k+b-1}+q^{k+b})[a][b] + q^{2k+2b}[a][a-1] + [b][b-1] ).
QPolynomial family_1a3k1b(std::size_t a, std::size_t k, std::size_t b);

}  // namespace plucking

#endif
