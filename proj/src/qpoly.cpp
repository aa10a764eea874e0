#include "plucking/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace plucking {

QPolynomial QPolynomial::constant(BigInt c) {
    std::vector<BigInt> v;
    if (c != 0) v.push_back(std::move(c));
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::monomial(std::size_t exponent, BigInt coeff) {
    if (coeff == 0) return {};
    std::vector<BigInt> v(exponent + 1);
    v[exponent] = std::move(coeff);
    return QPolynomial(std::move(v));
}

std::size_t QPolynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    return coeffs_.size() - 1;
}

std::size_t QPolynomial::low_degree() const {
    if (is_zero()) throw std::logic_error("low_degree of zero polynomial");
    std::size_t i = 0;
    while (coeffs_[i] == 0) ++i;
    return i;
}

BigInt QPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPolynomial QPolynomial::operator-() const {
    std::vector<BigInt> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

QPolynomial quantum_integer(std::size_t n) {
    return QPolynomial(std::vector<BigInt>(n, BigInt(1)));
}

QPolynomial q_factorial(std::size_t n) {
    QPolynomial p = QPolynomial::constant(1);
    for (std::size_t k = 2; k <= n; ++k) p *= quantum_integer(k);
    return p;
}

QPolynomial gaussian_binomial(std::size_t n, long long k) {
    if (k < 0 || static_cast<std::size_t>(k) > n) return {};
    const auto kk = static_cast<std::size_t>(k);
    // row-by-row Pascal table; after pass i, row[j] = binom(i, j)
    std::vector<QPolynomial> row(kk + 1);
    row[0] = QPolynomial::constant(1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = std::min(i, kk); j >= 1; --j)
            row[j] = row[j - 1] + row[j] * QPolynomial::monomial(j);
    return row[kk];
}

std::optional<QPolynomial> try_exact_divide(const QPolynomial& p, const QPolynomial& d) {
    if (d.is_zero()) throw DivideByZero();
    if (p.is_zero()) return QPolynomial{};
    if (p.degree() < d.degree()) return std::nullopt;

    std::vector<BigInt> rem = p.coeffs();
    const std::vector<BigInt>& div = d.coeffs();
    const BigInt& lead = div.back();
    const std::size_t div_degree = div.size() - 1;
    std::vector<BigInt> quot(p.degree() - div_degree + 1);

    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const BigInt& top = rem[shift + div_degree];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        BigInt factor = top / lead;
        for (std::size_t j = 0; j < div.size(); ++j) rem[shift + j] -= factor * div[j];
        quot[shift] = std::move(factor);
    }
    for (const BigInt& c : rem)
        if (c != 0) return std::nullopt;
    return QPolynomial(std::move(quot));
}

QPolynomial exact_divide(const QPolynomial& p, const QPolynomial& d) {
    auto q = try_exact_divide(p, d);
    if (!q) throw NotDivisible("(" + to_text(p) + ") is not divisible by (" + to_text(d) + ")");
    return *q;
}

namespace {

// coefficient window [low_degree, degree]; empty for the zero polynomial
std::vector<BigInt> support_window(const QPolynomial& p) {
    if (p.is_zero()) return {};
    const auto& c = p.coeffs();
    return {c.begin() + static_cast<std::ptrdiff_t>(p.low_degree()), c.end()};
}

}  // namespace

bool is_unimodal(const QPolynomial& p) {
    const auto w = support_window(p);
    if (w.empty()) return true;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i + 1] >= w[i]) ++i;
    while (i + 1 < w.size() && w[i + 1] <= w[i]) ++i;
    return i == w.size() - 1;
}

bool is_strictly_unimodal(const QPolynomial& p) {
    const auto w = support_window(p);
    if (w.empty()) return true;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i + 1] > w[i]) ++i;
    if (i + 1 < w.size() && w[i + 1] == w[i]) ++i;  // peak plateau of length 2
    while (i + 1 < w.size() && w[i + 1] < w[i]) ++i;
    return i == w.size() - 1;
}

bool is_symmetric(const QPolynomial& p) {
    const auto w = support_window(p);
    for (std::size_t i = 0, j = w.size(); i < j; ++i)
        if (w[i] != w[--j]) return false;
    return true;
}

EpsVector::EpsVector(std::vector<int> bits) : bits_(std::move(bits)) {
    for (int b : bits_)
        if (b != 0 && b != 1) throw std::invalid_argument("EpsVector entries must be 0 or 1");
}

EpsVector EpsVector::from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>((mask >> i) & 1u);
    return EpsVector(std::move(bits));
}

QPolynomial eps_poly(const EpsVector& eps) {
    std::vector<BigInt> c(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) c[i] = eps[i];
    return QPolynomial(std::move(c));
}

QPolynomial FactoredForm::expand() const {
    QPolynomial p = QPolynomial::monomial(shift);
    for (const auto& [n, mult] : quantum_factors)
        for (std::size_t i = 0; i < mult; ++i) p *= quantum_integer(n);
    return p * residual;
}

FactoredForm factor_quantum(const QPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("factor_quantum of zero polynomial");
    FactoredForm form;
    form.shift = p.low_degree();
    std::vector<BigInt> shifted(p.coeffs().begin() + static_cast<std::ptrdiff_t>(form.shift),
                                p.coeffs().end());
    QPolynomial rest{std::move(shifted)};
    for (std::size_t n = rest.degree() + 1; n >= 2; --n) {
        while (true) {
            auto q = try_exact_divide(rest, quantum_integer(n));
            if (!q) break;
            ++form.quantum_factors[n];
            rest = std::move(*q);
        }
    }
    form.residual = std::move(rest);
    return form;
}

std::string to_text(const QPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
        const BigInt& c = p.coeffs()[e];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "q";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

std::string to_text(const FactoredForm& f) {
    std::ostringstream out;
    bool any = false;
    if (f.shift > 0) {
        out << "q" << (f.shift > 1 ? "^" + std::to_string(f.shift) : "");
        any = true;
    }
    for (const auto& [n, mult] : f.quantum_factors) {
        if (any) out << " ";
        out << "[" << n << "]_q";
        if (mult > 1) out << "^" << mult;
        any = true;
    }
    if (f.residual != QPolynomial::constant(1)) {
        if (any) out << " (" << to_text(f.residual) << ")";
        else out << to_text(f.residual);
        any = true;
    }
    if (!any) out << "1";
    return out.str();
}

QPolynomial parse_coeff_list(const std::string& text) {
    std::vector<BigInt> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        // trim surrounding whitespace
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty coefficient in list");
        item = item.substr(b, e - b + 1);
        std::size_t digits = item[0] == '-' || item[0] == '+' ? 1 : 0;
        if (digits == item.size()) throw std::invalid_argument("malformed coefficient: " + item);
        for (std::size_t i = digits; i < item.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(item[i])))
                throw std::invalid_argument("malformed coefficient: " + item);
        coeffs.emplace_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return QPolynomial(std::move(coeffs));
}

}  // namespace plucking
