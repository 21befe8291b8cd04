#pragma once

#include <string>
#include <vector>

#include "jacklab/rational.hpp"

namespace jacklab {

/// Dense univariate polynomial in the deformation parameter alpha with exact
/// rational coefficients. coeff(k) is the coefficient of alpha^k; the zero
/// polynomial is the empty coefficient list, so degree() is -1 for zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c);
    explicit Poly(long c);

    static Poly alpha();
    static Poly monomial(const Rat& c, int k);
    static Poly from_coeffs(std::vector<Rat> coeffs);  // trims trailing zeros

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;
    Rat leading() const;  // requires nonzero
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Lowest exponent with a nonzero coefficient; requires nonzero.
    int ord() const;

    Rat eval(const Rat& x) const;

    // p(x+1): rewrites a polynomial in alpha as one in beta = alpha - 1
    // (and conversely beta -> alpha - 1 is shifted_arg(-1)).
    Poly shifted_arg(long shift = 1) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; throws on zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Exact division; throws std::domain_error when the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);
    // Monic gcd (1 for coprime inputs, 0 only when both inputs are 0).
    static Poly gcd(const Poly& a, const Poly& b);

    // Signed content: the unique rational c with *this == c * primitive_part()
    // where the primitive part has coprime integer coefficients and positive
    // leading coefficient. Requires nonzero.
    Rat content() const;
    Poly primitive_part() const;

    std::string to_string(const std::string& var = "a") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

}  // namespace jacklab
