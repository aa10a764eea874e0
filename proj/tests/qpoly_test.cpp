#include <doctest.h>

#include <random>

#include "plucking/qpoly.hpp"

using namespace plucking;

namespace {

QPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    std::vector<BigInt> c(rng() % (max_degree + 1) + 1);
    for (auto& x : c) c[&x - c.data()] = static_cast<long long>(rng() % 19) - 9;
    return QPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("addition") {
    const QPolynomial p{1, 0, 3};
    CHECK(QPolynomial{} + p == p);
    CHECK(QPolynomial{1, 1} + QPolynomial{1, 1, 1} == QPolynomial{2, 2, 1});
    // cancellation yields the canonical zero
    QPolynomial sum = QPolynomial{1, 1} + (-QPolynomial{1, 1});
    CHECK(sum.is_zero());
    CHECK(sum.coeffs().empty());
}

TEST_CASE("multiplication") {
    CHECK(QPolynomial{1, 1} * QPolynomial{1, 1, 1, 1} == QPolynomial{1, 2, 2, 2, 1});
    const QPolynomial p{3, 0, 2};
    CHECK(p * QPolynomial::constant(1) == p);
    CHECK(QPolynomial{1, 1} * QPolynomial{1, 1} == QPolynomial{1, 2, 1});
    CHECK((p * QPolynomial{}).is_zero());
}

TEST_CASE("quantum integers and factorials") {
    CHECK(quantum_integer(3) == QPolynomial{1, 1, 1});
    CHECK(quantum_integer(1) == QPolynomial{1});
    CHECK(quantum_integer(0).is_zero());
    CHECK(q_factorial(0) == QPolynomial{1});
    CHECK(q_factorial(2) == QPolynomial{1, 1});
    CHECK(q_factorial(3) == QPolynomial{1, 2, 2, 1});
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(q_factorial(n) == quantum_integer(n) * q_factorial(n - 1));
        CHECK(quantum_integer(n) == gaussian_binomial(n, 1));
    }
}

TEST_CASE("gaussian binomials") {
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(gaussian_binomial(n, 0) == QPolynomial{1});
        CHECK(gaussian_binomial(n, static_cast<long long>(n)) == QPolynomial{1});
        CHECK(gaussian_binomial(n, -1).is_zero());
        CHECK(gaussian_binomial(n, static_cast<long long>(n) + 1).is_zero());
    }
    CHECK(gaussian_binomial(3, 1) == QPolynomial{1, 1, 1});
    CHECK(gaussian_binomial(4, 2) == QPolynomial{1, 1, 2, 1, 1});

    SUBCASE("factorial-ratio and symmetry identities up to n = 12") {
        for (std::size_t n = 0; n <= 12; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                const QPolynomial b = gaussian_binomial(n, static_cast<long long>(k));
                CHECK(b * q_factorial(k) * q_factorial(n - k) == q_factorial(n));
                CHECK(b == gaussian_binomial(n, static_cast<long long>(n - k)));
                CHECK(is_symmetric(b));
                CHECK(is_unimodal(b));
            }
            CHECK(is_symmetric(q_factorial(n)));
            CHECK(is_unimodal(q_factorial(n)));
        }
    }
}

TEST_CASE("exact division") {
    CHECK(exact_divide(QPolynomial{1, 2, 2, 2, 1}, QPolynomial{1, 1}) ==
          QPolynomial{1, 1, 1, 1});
    const QPolynomial p{4, 7, 1});
    CHECK(exact_divide(p, QPolynomial::constant(1)) == p);
    CHECK_THROWS_AS(exact_divide(QPolynomial{1, 1, 1}, QPolynomial{1, 1}), NotDivisible);
    CHECK_THROWS_AS(exact_divide(p, QPolynomial{}), DivideByZero);
    CHECK(!try_exact_divide(QPolynomial{1, 1, 1}, QPolynomial{1, 1}).has_value());
    // inexact coefficient division, not just a nonzero remainder
    CHECK(!try_exact_divide(QPolynomial{1, 3}, QPolynomial{1, 2}).has_value());
    CHECK(exact_divide(QPolynomial{}, QPolynomial{1, 1}).is_zero());
}

TEST_CASE("multiplication properties on random inputs") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const QPolynomial a = random_poly(rng, 8);
        const QPolynomial b = random_poly(rng, 8);
        const QPolynomial c = random_poly(rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("unimodality") {
    CHECK_FALSE(is_unimodal(QPolynomial{0, 0, 1, 4, 5, 4, 5, 4, 1}));
    CHECK(is_unimodal(QPolynomial{0, 0, 0, 1, 3, 4, 3, 1}));
    CHECK(is_unimodal(QPolynomial{}));
    CHECK(is_unimodal(QPolynomial{5}));
    CHECK(is_unimodal(QPolynomial{1, 1, 1}));
    // internal zeros inside the support window count
    CHECK_FALSE(is_unimodal(QPolynomial{1, 0, 1}));
    CHECK(is_unimodal(QPolynomial{0, 0, 2, 3}));
}

TEST_CASE("strict unimodality") {
    CHECK(is_strictly_unimodal(QPolynomial{1, 2, 1}));
    CHECK_FALSE(is_strictly_unimodal(QPolynomial{1, 1, 1}));
    CHECK(is_strictly_unimodal(QPolynomial{1, 2, 2, 1}));  // peak plateau of length 2
    CHECK_FALSE(is_strictly_unimodal(QPolynomial{1, 2, 2, 2, 1}));
    CHECK_FALSE(is_strictly_unimodal(QPolynomial{1, 1, 2, 1}));  // flat off the peak
    CHECK(is_strictly_unimodal(QPolynomial{}));
    CHECK(is_strictly_unimodal(QPolynomial{3}));
    CHECK(is_strictly_unimodal(QPolynomial{3, 3}));
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(QPolynomial{0, 0, 1, 4, 5, 4, 5, 4, 1}));
    CHECK(is_symmetric(QPolynomial::monomial(3)));
    CHECK_FALSE(is_symmetric(QPolynomial{1, 2}));
    CHECK(is_symmetric(QPolynomial{}));
}

TEST_CASE("eps vectors") {
    CHECK(eps_poly(EpsVector({1, 1, 1})) == quantum_integer(3));
    CHECK(eps_poly(EpsVector({1, 0, 1})) == QPolynomial{1, 0, 1});
    CHECK(eps_poly(EpsVector()).is_zero());
    CHECK_THROWS_AS(EpsVector({0, 2}), std::invalid_argument);
    CHECK(EpsVector::from_mask(0b101, 3).bits() == std::vector<int>{1, 0, 1});
}

TEST_CASE("eps-product unimodality invariants") {
    SUBCASE("times [n]_q, length n+1 <= 11, with the peak-step identity") {
        for (std::size_t n = 1; n <= 10; ++n) {
            for (std::uint64_t mask = 0; mask < (1ull << (n + 1)); ++mask) {
                const EpsVector eps = EpsVector::from_mask(mask, n + 1);
                const QPolynomial p = eps_poly(eps) * quantum_integer(n);
                CHECK(is_unimodal(p));
                CHECK(p.coeff(n) - p.coeff(n - 1) == eps[n] - eps[0]);
            }
        }
    }
    SUBCASE("times [n+1]_q [n]_q, length n+2 <= 10") {
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::uint64_t mask = 0; mask < (1ull << (n + 2)); ++mask)
                CHECK(is_unimodal(eps_poly(EpsVector::from_mask(mask, n + 2)) *
                                  quantum_integer(n + 1) * quantum_integer(n)));
    }
    SUBCASE("symmetric eps times [n]_q!, length n+1 <= 10") {
        for (std::size_t n = 1; n <= 9; ++n)
            for (std::uint64_t mask = 0; mask < (1ull << (n + 1)); ++mask) {
                const QPolynomial eps = eps_poly(EpsVector::from_mask(mask, n + 1));
                if (!is_symmetric(eps)) continue;
                CHECK(is_unimodal(eps * q_factorial(n)));
            }
    }
}

TEST_CASE("greedy quantum factorization") {
    SUBCASE("reference factorizations") {
        QPolynomial p = QPolynomial::monomial(3) * quantum_integer(3) * quantum_integer(2) *
                        quantum_integer(2);
        FactoredForm f = factor_quantum(p);
        CHECK(f.shift == 3);
        CHECK(f.quantum_factors.size() == 2);
        CHECK(f.quantum_factors.at(3) == 1);
        CHECK(f.quantum_factors.at(2) == 2);
        CHECK(f.residual == QPolynomial{1});
        CHECK(f.expand() == p);
    }
    SUBCASE("q-factorial splits into its quantum integers") {
        FactoredForm f = factor_quantum(q_factorial(4));
        CHECK(f.shift == 0);
        CHECK(f.quantum_factors ==
              decltype(f.quantum_factors){{4, 1}, {3, 1}, {2, 1}});
        CHECK(f.residual == QPolynomial{1});
    }
    SUBCASE("irreducible residual survives") {
        FactoredForm f = factor_quantum(QPolynomial{1, 0, 0, 0, 1});
        CHECK(f.shift == 0);
        CHECK(f.quantum_factors.empty());
        CHECK(f.residual == QPolynomial{1, 0, 0, 0, 1});
    }
    SUBCASE("errors and invariants") {
        CHECK_THROWS_AS(factor_quantum(QPolynomial{}), ZeroPolynomial);
        std::mt19937_64 rng(7);
        for (int i = 0; i < 100; ++i) {
            QPolynomial p = random_poly(rng, 6);
            if (p.is_zero()) continue;
            FactoredForm f = factor_quantum(p);
            CHECK(f.expand() == p);
            CHECK(f.residual.coeff(0) != 0);
            for (std::size_t n = 2; n <= f.residual.degree() + 1; ++n)
                CHECK(!try_exact_divide(f.residual, quantum_integer(n)).has_value());
        }
    }
}

TEST_CASE("text rendering") {
    CHECK(to_text(QPolynomial{1, 2, 2, 2, 1}) == "1 + 2*q + 2*q^2 + 2*q^3 + q^4");
    CHECK(to_text(QPolynomial{}) == "0");
    CHECK(to_text(QPolynomial::monomial(3)) == "q^3");
    CHECK(to_text(QPolynomial{0, 1}) == "q");
    CHECK(to_text(QPolynomial{1, -1}) == "1 - q");
    CHECK(to_text(QPolynomial{-2, 0, 5}) == "-2 + 5*q^2");

    FactoredForm f;
    f.shift = 3;
    f.quantum_factors[3] = 1;
    f.quantum_factors[2] = 2;
    f.residual = QPolynomial{1};
    CHECK(to_text(f) == "q^3 [3]_q [2]_q^2");
    f.residual = QPolynomial{1, 1, 1};
    CHECK(to_text(f) == "q^3 [3]_q [2]_q^2 (1 + q + q^2)");
    FactoredForm one;
    one.residual = QPolynomial{1};
    CHECK(to_text(one) == "1");
}

TEST_CASE("coefficient list parsing") {
    CHECK(parse_coeff_list("0,0,1,4,5,4,5,4,1") == QPolynomial{0, 0, 1, 4, 5, 4, 5, 4, 1});
    CHECK(parse_coeff_list("1, 2, -3") == QPolynomial{1, 2, -3});
    CHECK(parse_coeff_list("0").is_zero());
    CHECK_THROWS_AS(parse_coeff_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_coeff_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coeff_list("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coeff_list("1,2,"), std::invalid_argument);
}

TEST_CASE("big coefficients stay exact") {
    // [20]_q! has coefficients beyond 2^53; evaluation at 1 gives 20!
    const QPolynomial p = q_factorial(20);
    BigInt factorial = 1;
    for (int i = 2; i <= 20; ++i) factorial *= i;
    CHECK(p.evaluate(1) == factorial);
    CHECK(is_symmetric(p));
    CHECK(is_unimodal(p));
}
