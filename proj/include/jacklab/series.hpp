#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacklab/cumulants.hpp"
#include "jacklab/jack.hpp"

namespace jacklab {

// ---- formal sums of p (x) p (x) p over three alphabets ---------------------

struct TripleKey {
    Partition tau, mu, nu;  // x-, y-, z-alphabet slots
    friend bool operator<(const TripleKey& a, const TripleKey& b) {
        if (int c = Partition::cmp(a.tau, b.tau)) return c < 0;
        if (int c = Partition::cmp(a.mu, b.mu)) return c < 0;
        return Partition::cmp(a.nu, b.nu) < 0;
    }
    friend bool operator==(const TripleKey& a, const TripleKey& b) {
        return a.tau == b.tau && a.mu == b.mu && a.nu == b.nu;
    }
};

/// Sparse sum of p_tau(x) p_mu(y) p_nu(z) with RatFunc coefficients;
/// multiplication is coordinate-wise partition union.
class TriplePoly {
public:
    TriplePoly() = default;
    static TriplePoly one();

    const std::map<TripleKey, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFunc coeff(const TripleKey& k) const;
    void add_term(const TripleKey& k, const RatFunc& c);

    TriplePoly& operator+=(const TriplePoly& o);
    friend TriplePoly operator+(TriplePoly a, const TriplePoly& b) { return a += b; }
    friend TriplePoly operator-(const TriplePoly& a, const TriplePoly& b);
    friend TriplePoly operator*(const TriplePoly& a, const TriplePoly& b);
    TriplePoly scaled(const RatFunc& c) const;
    TriplePoly scaled(const Rat& c) const { return scaled(RatFunc(c)); }

    bool is_big_o(int k) const;
    std::pair<int, TripleKey> min_valuation() const;  // requires nonzero

    friend bool operator==(const TriplePoly& a, const TriplePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TriplePoly& a, const TriplePoly& b) { return !(a == b); }

private:
    std::map<TripleKey, RatFunc> terms_;
};

// J_lambda(x) J_lambda(y) J_lambda(z) as a triple p-expansion.
TriplePoly triple_jack(JackEngine& engine, const Partition& lambda);

// ---- the two generating-series tables --------------------------------------

/// Degree-sliced tables of the triple product series and its scaled
/// logarithmic t-derivative: slice n of phi is
/// sum_{lambda of n} J(x)J(y)J(z)/(hook * hook'), and psi_n = alpha*n*L_n
/// where the L_n satisfy the formal-logarithm recurrence
/// n L_n = n phi_n - sum_{k<n} k L_k phi_{n-k}.
class GJSeries {
public:
    GJSeries(JackEngine& engine, int n_max);

    int n_max() const { return n_max_; }
    const TriplePoly& phi(int n) const;
    const TriplePoly& log_slice(int n) const;  // L_n
    const TriplePoly& psi(int n) const;

private:
    int n_max_;
    std::vector<TriplePoly> phi_, log_, psi_;
};

// ---- extracted coefficients and their verdicts ------------------------------

struct HEntry {
    int n = 0;
    Partition tau, mu, nu;
    RatFunc raw;
    std::optional<Poly> beta_poly;   // substitution alpha -> beta + 1 when polynomial
    std::string failure_denominator;  // set when beta_poly is absent
    int degree_bound = 0;             // 2 + n - len(tau) - len(mu) - len(nu)
    // h entries are symmetric in all three slots; the z-normalization of the
    // c entries leaves only the mu <-> nu swap.
    bool symmetric_all_slots = true;
    // theorem-level
    bool poly_ok = false;
    bool degree_ok = false;
    bool zero_when_negative_ok = false;
    bool den_alpha_power_ok = false;  // raw denominator is c * alpha^k
    int attained_degree = -1;         // -1 for the zero entry
    // conjecture-level
    bool integer_coeffs = false;
    bool nonneg_coeffs = false;
};

// h entries: psi slice read off directly (x carries tau, y mu, z nu).
std::vector<HEntry> extract_h(const GJSeries& series, int n);
// c entries: phi slice scaled by alpha^len(tau) * z_tau per entry.
std::vector<HEntry> extract_c(const GJSeries& series, int n);

struct CheckReport {
    int entries = 0;
    int theorem_failures = 0;     // polynomiality, degree, zero-when-negative,
                                  // pole location, raw/beta consistency
    int conjecture_findings = 0;  // integrality / nonnegativity violations
    bool symmetry_ok = true;      // invariance under permuting (tau, mu, nu)
    std::vector<std::string> failure_lines;
    std::vector<std::string> conjecture_lines;
    bool theorem_pass() const { return theorem_failures == 0 && symmetry_ok; }
};

// Runs every per-entry verdict, cross-evaluates raw against beta_poly at
// alpha = 1 and alpha = 2, and checks full table symmetry.
CheckReport check_suite(const std::vector<HEntry>& entries);

// Producer/checker pair for the logarithm recurrence: re-exponentiates the
// log slices and compares with phi, slice by slice.
bool verify_log_exp_roundtrip(const GJSeries& series);

// ---- the log-cumulant identity ----------------------------------------------

struct LogCumulantVerdict {
    bool pass = false;
    std::string detail;
};

// Compares, coefficient by coefficient on monomials in the auxiliary t
// alphabet up to total weight `max_weight`, the logarithm of
// sum_lambda F(lambda) / (alpha^(lambda_1) prod_i m_i(lambda^t)!) t^(lambda^t)
// against the cumulant expansion of F over one-column tuples. F(empty) must
// be the ring unit.
template <class R>
LogCumulantVerdict verify_log_cumulant_identity(const std::function<R(const Partition&)>& F,
                                                int max_weight, R one);

// ---- table rendering ---------------------------------------------------------

std::string htable_csv(const std::vector<HEntry>& entries);
std::string htable_json(const std::vector<HEntry>& entries, const CheckReport& report);

}  // namespace jacklab
