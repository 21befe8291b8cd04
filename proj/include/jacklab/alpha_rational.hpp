#pragma once

#include <optional>
#include <string>

#include "jacklab/alpha_poly.hpp"

namespace jacklab {

/// Reduced rational function in alpha. Canonical form: gcd(num, den) = 1,
/// den is a primitive integer polynomial with positive leading coefficient
/// (so polynomials always carry den == 1), and 0 is stored as 0/1. Equality
/// is plain structural equality of the two polynomials.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly(1L)) {}
    RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly(1L)) {}  // NOLINT: implicit by design
    RatFunc(long c) : num_(Poly(c)), den_(Poly(1L)) {}        // NOLINT
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly(1L)) {}
    RatFunc(Poly num, Poly den);  // canonicalizes; throws on zero denominator

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(1L); }
    const Poly& as_poly() const;  // throws std::domain_error unless polynomial

    // ord_alpha(num) - ord_alpha(den); throws on zero.
    int valuation_at_zero() const;
    // True iff zero or valuation_at_zero() >= k.
    bool is_big_o(int k) const;

    // Coefficient of alpha^j in the power-series expansion at alpha = 0.
    // j < 0 returns 0; a pole at 0 throws std::domain_error.
    Rat coefficient_of_alpha(int j) const;

    // Substitutes alpha = beta + 1 when the value is a polynomial; otherwise
    // empty (the caller reports the offending denominator).
    std::optional<Poly> to_beta_polynomial() const;

    Rat eval(const Rat& a) const;  // throws when den vanishes at a

    RatFunc recip() const;  // throws on zero

    RatFunc scaled(const Rat& c) const { return *this * RatFunc(c); }
    RatFunc scaled(const RatFunc& c) const { return *this * c; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(const std::string& var = "a") const;

private:
    void canonicalize();
    Poly num_, den_;
};

}  // namespace jacklab
