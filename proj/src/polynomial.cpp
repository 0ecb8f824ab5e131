#include "specrank/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "specrank/errors.hpp"

namespace specrank {

Polynomial::Polynomial(BigRat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::variable() { return monomial(1, BigRat(1)); }

Polynomial Polynomial::monomial(std::size_t degree, BigRat coeff) {
    if (coeff == 0) return {};
    std::vector<BigRat> c(degree + 1, BigRat(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& Polynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

BigRat Polynomial::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRat(BigInt(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<BigRat> out(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<BigRat> out(c_);
    for (auto& x : out) x = -x;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigRat> out(c_.size() + o.c_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const BigRat& s) const {
    if (s == 0) return {};
    std::vector<BigRat> out(c_);
    for (auto& x : out) x *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    return *this * (BigRat(1) / leading());
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& q : c_) {
        den_lcm = lcm(den_lcm, denominator(q));
    }
    for (const auto& q : c_) {
        BigInt scaled = numerator(q) * (den_lcm / denominator(q));
        num_gcd = gcd(num_gcd, scaled);
    }
    return *this * BigRat(den_lcm, num_gcd);  // positive scale: den_lcm, gcd > 0
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<BigRat> rem(a.coefficients());
    std::vector<BigRat> quo(a.degree() - b.degree() + 1, BigRat(0));
    const auto& bc = b.coefficients();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigRat q = rem[k + b.degree()] / b.leading();
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= q * bc[i];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    // primitive remainder sequence keeps coefficient growth in check
    Polynomial p = a.is_zero() ? b : a;
    Polynomial q = a.is_zero() ? Polynomial{} : b;
    p = p.primitive();
    if (!q.is_zero()) q = q.primitive();
    while (!q.is_zero()) {
        Polynomial r = divrem(p, q).second;
        p = std::move(q);
        q = r.is_zero() ? Polynomial{} : r.primitive();
    }
    return p.monic();
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
    if (p.degree() == 0) return p;
    return divrem(p, poly_gcd(p, p.derivative())).first;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRat& q = c_[i];
        if (q == 0) continue;
        if (!first) os << (q > 0 ? " + " : " - ");
        else if (q < 0) os << "-";
        BigRat aq = abs(q);
        if (aq != 1 || i == 0) {
            os << numerator(aq).str();
            if (denominator(aq) != 1) os << "/" << denominator(aq).str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::string> Polynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& q : c_) out.push_back(rat_to_string(q));
    return out;
}

Polynomial Polynomial::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<BigRat> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(rat_from_string(s));
    return Polynomial(std::move(c));
}

}  // namespace specrank
