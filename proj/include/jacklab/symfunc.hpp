#pragma once

#include <map>
#include <string>

#include "jacklab/alpha_rational.hpp"
#include "jacklab/partition.hpp"

namespace jacklab {

enum class Basis { m, p, e };

std::string basis_name(Basis b);

/// Symmetric function as a sparse basis expansion with RatFunc coefficients.
/// Zero coefficients are never stored; equality is structural within one
/// basis (cross-basis comparison goes through convert()).
class SymFunc {
public:
    explicit SymFunc(Basis basis) : basis_(basis) {}
    static SymFunc zero(Basis basis) { return SymFunc(basis); }
    static SymFunc one(Basis basis);
    static SymFunc basis_element(Basis basis, const Partition& lambda);

    Basis basis() const { return basis_; }
    const std::map<Partition, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFunc coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const RatFunc& c);

    // True when every supported partition has the same size; the degree of
    // the zero function is reported as 0.
    bool is_homogeneous() const;
    int degree() const;  // max supported partition size

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);  // same basis required
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    // Dispatches to p_multiply / m_multiply on the common basis.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    SymFunc scaled(const RatFunc& c) const;

    // Minimum valuation_at_zero over all coefficients; a zero function is
    // O(alpha^k) for every k.
    bool is_big_o(int k) const;
    // The witness for factorization verdicts: minimal valuation plus the
    // partition attaining it. Requires nonzero.
    std::pair<int, Partition> min_valuation() const;

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    // Rendering used by the CLI: terms ordered degree-major, within a degree
    // reverse of the enumeration order (so "p[1,1] + a*p[2]").
    std::string to_string() const;
    // Same expansion with coefficients evaluated at a fixed rational alpha.
    std::string to_string_at(const Rat& alpha_value) const;

private:
    Basis basis_;
    std::map<Partition, RatFunc> terms_;
};

// Product in the power-sum basis: single-term rule p_lambda * p_mu =
// p_{lambda union mu}, extended bilinearly. Throws on basis mismatch.
SymFunc p_multiply(const SymFunc& f, const SymFunc& g);

// Product in the monomial basis via exponent-vector convolution in enough
// variables to be faithful.
SymFunc m_multiply(const SymFunc& f, const SymFunc& g);

// Basis change; conversions are cached per degree and exact. Degrees above
// kMaxPartitionWeight are rejected.
SymFunc convert(const SymFunc& f, Basis target);

// Alpha-deformed scalar product, <p_lambda, p_mu> = delta * alpha^len * z.
RatFunc scalar_product_alpha(const SymFunc& f, const SymFunc& g);

}  // namespace jacklab
