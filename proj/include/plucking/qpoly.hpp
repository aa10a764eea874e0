#ifndef PLUCKING_QPOLY_HPP
#define PLUCKING_QPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plucking {

using BigInt = boost::multiprecision::cpp_int;

struct DivideByZero : std::domain_error {
    DivideByZero() : std::domain_error("polynomial division by zero") {}
};

struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

struct ZeroPolynomial : std::domain_error {
    explicit ZeroPolynomial(const std::string& what) : std::domain_error(what) {}
};

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of q^i; trailing zeros are trimmed, so the
/// zero polynomial is the empty sequence and degree() == coeffs().size()-1
/// for everything else.
class QPolynomial {
public:
    QPolynomial() = default;  // zero
    explicit QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    QPolynomial(std::initializer_list<long long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        trim();
    }

    static QPolynomial constant(BigInt c);
    static QPolynomial monomial(std::size_t exponent, BigInt coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const;      // nonzero polynomials only
    std::size_t low_degree() const;  // smallest i with nonzero coefficient

    /// Coefficient of q^i; zero beyond the stored range.
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
    friend QPolynomial operator-(const QPolynomial& lhs, const QPolynomial& rhs) {
        return lhs + (-rhs);
    }
    bool operator==(const QPolynomial&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; n = 0 gives the zero polynomial.
QPolynomial quantum_integer(std::size_t n);

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
QPolynomial q_factorial(std::size_t n);

/// Gaussian polynomial via the Pascal recursion
/// binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k); zero for k < 0 or k > n.
QPolynomial gaussian_binomial(std::size_t n, long long k);

/// Quotient p/d when d divides p exactly over the integers.
/// Throws NotDivisible otherwise, DivideByZero when d = 0.
QPolynomial exact_divide(const QPolynomial& p, const QPolynomial& d);

/// As exact_divide but signalling inexactness via nullopt.
std::optional<QPolynomial> try_exact_divide(const QPolynomial& p, const QPolynomial& d);

// Shape predicates, evaluated on the coefficient window [low_degree, degree]
// with internal zeros included. The zero polynomial satisfies all of them.
bool is_unimodal(const QPolynomial& p);
bool is_symmetric(const QPolynomial& p);
/// Strictly increasing, a peak plateau of length at most 2, strictly decreasing.
bool is_strictly_unimodal(const QPolynomial& p);

/// 0/1 vector; entry i is the coefficient of q^i in eps_poly.
class EpsVector {
public:
    EpsVector() = default;
    explicit EpsVector(std::vector<int> bits);
    /// Bits of `mask`, lowest bit first, as a vector of length n.
    static EpsVector from_mask(std::uint64_t mask, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    int operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<int>& bits() const { return bits_; }

private:
    std::vector<int> bits_;
};

QPolynomial eps_poly(const EpsVector& eps);

/// q^shift times a multiset of quantum-integer factors times a residual with
/// nonzero constant term. A reporting aid, not a canonical factorization.
struct FactoredForm {
    std::size_t shift = 0;
    // factor value n (>= 2) -> multiplicity, iterated largest first
    std::map<std::size_t, std::size_t, std::greater<std::size_t>> quantum_factors;
    QPolynomial residual;

    QPolynomial expand() const;
    bool operator==(const FactoredForm&) const = default;
};

/// Greedy extraction: strip q^{low_degree}, then divide by [n]_q for
/// n = degree+1 down to 2, repeating at each n until division fails.
/// Throws ZeroPolynomial for p = 0.
FactoredForm factor_quantum(const QPolynomial& p);

/// "c0 + c1*q + c2*q^2 + ..." ascending, zero terms omitted, "0" for zero.
std::string to_text(const QPolynomial& p);
std::string to_text(const FactoredForm& f);

/// Comma-separated coefficients ascending from q^0, e.g. "0,0,1,4,5,4,5,4,1".
/// Throws std::invalid_argument on malformed input.
QPolynomial parse_coeff_list(const std::string& text);

}  // namespace plucking

#endif
