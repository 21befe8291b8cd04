#include "jacklab/alpha_rational.hpp"

#include <stdexcept>

namespace jacklab {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
    }
    Rat c = den_.content();
    if (c != 1) {
        Rat inv = 1 / c;
        num_ *= inv;
        den_ *= inv;
    }
}

const Poly& RatFunc::as_poly() const {
    if (!is_polynomial())
        throw std::domain_error("not a polynomial: denominator " + den_.to_string());
    return num_;
}

int RatFunc::valuation_at_zero() const {
    if (is_zero()) throw std::domain_error("valuation of zero");
    return num_.ord() - den_.ord();
}

bool RatFunc::is_big_o(int k) const { return is_zero() || valuation_at_zero() >= k; }

Rat RatFunc::coefficient_of_alpha(int j) const {
    if (j < 0 || is_zero()) return Rat(0);
    if (valuation_at_zero() < 0)
        throw std::domain_error("pole at alpha = 0 in coefficient extraction");
    // Strip the common alpha power so the denominator is a unit at 0, then
    // run the series-division recurrence up to order j.
    const int d = den_.ord();
    std::vector<Rat> series(static_cast<size_t>(j) + 1, Rat(0));
    const Rat den0 = den_.coeff(d);
    for (int k = 0; k <= j; ++k) {
        Rat acc = num_.coeff(k + d);
        for (int l = 1; l <= k; ++l) acc -= den_.coeff(l + d) * series[static_cast<size_t>(k - l)];
        series[static_cast<size_t>(k)] = acc / den0;
    }
    return series[static_cast<size_t>(j)];
}

std::optional<Poly> RatFunc::to_beta_polynomial() const {
    if (!is_polynomial()) return std::nullopt;
    return num_.shifted_arg(1);
}

Rat RatFunc::eval(const Rat& a) const {
    Rat d = den_.eval(a);
    if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval(a) / d;
}

RatFunc RatFunc::recip() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    auto wrap = [&](const Poly& p) {
        std::string s = p.to_string(var);
        if (p.degree() > 0 && s.find(' ') != std::string::npos) return "(" + s + ")";
        if (p.degree() > 0 || p.coeff(0) < 0) return "(" + s + ")";
        return s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace jacklab
