#include "jacklab/alpha_poly.hpp"

#include <stdexcept>

namespace jacklab {

Poly::Poly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(long c) : Poly(Rat(c)) {}

Poly Poly::alpha() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, int k) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, Rat(0));
        p.coeffs_.back() = c;
    }
    return p;
}

Poly Poly::from_coeffs(std::vector<Rat> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rat Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

int Poly::ord() const {
    if (is_zero()) throw std::domain_error("ord of the zero polynomial");
    int k = 0;
    while (coeffs_[static_cast<size_t>(k)] == 0) ++k;
    return k;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::shifted_arg(long shift) const {
    // Horner in (x + shift).
    Poly acc;
    Poly lin = from_coeffs({Rat(shift), Rat(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly::from_coeffs(std::move(c));
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    const int db = b.degree();
    const Rat lb = b.leading();
    if (rem.degree() >= db)
        quot.coeffs_.assign(static_cast<size_t>(rem.degree() - db) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        const int k = rem.degree() - db;
        const Rat q = rem.leading() / lb;
        quot.coeffs_[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= db; ++i)
            rem.coeffs_[static_cast<size_t>(k + i)] -= q * b.coeffs_[static_cast<size_t>(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    // Primitive pseudo-remainder sequence: monic Euclid over the rationals
    // blows its coefficients up; staying on primitive integer polynomials
    // keeps them bounded.
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        Poly x = a.is_zero() ? b : a;
        x *= 1 / x.leading();
        return x;
    }
    Poly x = a.primitive_part();
    Poly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        // Pseudo-remainder: repeatedly scale by lc(y) and cancel the top term,
        // which keeps everything integral.
        Poly r = x;
        const Rat ly = y.leading();
        const int dy = y.degree();
        while (!r.is_zero() && r.degree() >= dy) {
            const Rat lr = r.leading();
            const int shift = r.degree() - dy;
            r *= ly;
            Poly cancel = y * monomial(lr, shift);
            r -= cancel;
        }
        x = std::move(y);
        y = r.is_zero() ? Poly() : r.primitive_part();
    }
    x *= 1 / x.leading();
    return x;
}

Rat Poly::content() const {
    if (is_zero()) throw std::domain_error("content of the zero polynomial");
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        num_gcd = ::gcd(num_gcd, mpz_class(c.get_num()));
        den_lcm = ::lcm(den_lcm, mpz_class(c.get_den()));
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (leading() < 0) c = -c;
    return c;
}

Poly Poly::primitive_part() const {
    Rat c = content();
    Poly r = *this;
    r *= 1 / c;
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        const bool unit = abs_c == 1;
        if (k == 0) {
            out += rat_to_string(abs_c);
        } else {
            if (!unit) out += rat_to_string(abs_c) + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace jacklab
