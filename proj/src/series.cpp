#include "jacklab/series.hpp"

#include <json.hpp>

#include <array>
#include <climits>
#include <stdexcept>
#include <tuple>

namespace jacklab {

using nlohmann::json;

TriplePoly TriplePoly::one() {
    TriplePoly t;
    t.terms_.emplace(TripleKey{}, RatFunc(1));
    return t;
}

RatFunc TriplePoly::coeff(const TripleKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFunc() : it->second;
}

void TriplePoly::add_term(const TripleKey& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TriplePoly& TriplePoly::operator+=(const TriplePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TriplePoly operator-(const TriplePoly& a, const TriplePoly& b) {
    TriplePoly out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
    return out;
}

TriplePoly operator*(const TriplePoly& a, const TriplePoly& b) {
    TriplePoly out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            TripleKey k{union_merge(ka.tau, kb.tau), union_merge(ka.mu, kb.mu),
                        union_merge(ka.nu, kb.nu)};
            out.add_term(k, ca * cb);
        }
    }
    return out;
}

TriplePoly TriplePoly::scaled(const RatFunc& c) const {
    TriplePoly out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

bool TriplePoly::is_big_o(int k) const {
    for (const auto& [key, c] : terms_)
        if (!c.is_big_o(k)) return false;
    return true;
}

std::pair<int, TripleKey> TriplePoly::min_valuation() const {
    if (is_zero()) throw std::domain_error("valuation of the zero sum");
    bool first = true;
    int best = 0;
    TripleKey where;
    for (const auto& [key, c] : terms_) {
        const int v = c.valuation_at_zero();
        if (first || v < best) {
            best = v;
            where = key;
            first = false;
        }
    }
    return {best, where};
}

TriplePoly triple_jack(JackEngine& engine, const Partition& lambda) {
    const SymFunc jp = engine.jack_p(lambda);
    TriplePoly out;
    for (const auto& [tau, ct] : jp.terms())
        for (const auto& [mu, cm] : jp.terms())
            for (const auto& [nu, cn] : jp.terms())
                out.add_term(TripleKey{tau, mu, nu}, ct * cm * cn);
    return out;
}

GJSeries::GJSeries(JackEngine& engine, int n_max) : n_max_(n_max) {
    if (n_max < 0 || n_max > 8)
        throw std::invalid_argument("series truncation limited to 0..8");
    phi_.resize(static_cast<size_t>(n_max) + 1);
    log_.resize(static_cast<size_t>(n_max) + 1);
    psi_.resize(static_cast<size_t>(n_max) + 1);
    phi_[0] = TriplePoly::one();
    for (int n = 1; n <= n_max; ++n) {
        TriplePoly slice;
        for (const auto& lam : partitions_of(n)) {
            const RatFunc norm = RatFunc(1) / RatFunc(hook(lam) * hook_prime(lam));
            slice += triple_jack(engine, lam).scaled(norm);
        }
        phi_[static_cast<size_t>(n)] = std::move(slice);
    }
    for (int n = 1; n <= n_max; ++n) {
        TriplePoly acc = phi_[static_cast<size_t>(n)].scaled(Rat(n));
        for (int k = 1; k < n; ++k)
            acc += (log_[static_cast<size_t>(k)] * phi_[static_cast<size_t>(n - k)])
                       .scaled(Rat(-k));
        log_[static_cast<size_t>(n)] = acc.scaled(rat_frac(1, static_cast<long>(n)));
        psi_[static_cast<size_t>(n)] =
            log_[static_cast<size_t>(n)].scaled(RatFunc(Poly::monomial(Rat(n), 1)));
    }
}

const TriplePoly& GJSeries::phi(int n) const { return phi_.at(static_cast<size_t>(n)); }
const TriplePoly& GJSeries::log_slice(int n) const { return log_.at(static_cast<size_t>(n)); }
const TriplePoly& GJSeries::psi(int n) const { return psi_.at(static_cast<size_t>(n)); }

namespace {

bool den_is_alpha_power(const RatFunc& x) {
    int nonzero = 0;
    for (const auto& c : x.den().coeffs())
        if (c != 0) ++nonzero;
    return nonzero == 1;
}

HEntry finish_entry(int n, const Partition& tau, const Partition& mu, const Partition& nu,
                    RatFunc raw, bool degree_bound_applies) {
    HEntry e;
    e.n = n;
    e.tau = tau;
    e.mu = mu;
    e.nu = nu;
    e.raw = std::move(raw);
    e.degree_bound = 2 + n - tau.length() - mu.length() - nu.length();
    e.symmetric_all_slots = degree_bound_applies;
    e.den_alpha_power_ok = e.raw.is_zero() || den_is_alpha_power(e.raw);
    e.beta_poly = e.raw.to_beta_polynomial();
    e.poly_ok = e.beta_poly.has_value();
    if (!e.poly_ok) {
        e.failure_denominator = e.raw.den().to_string();
        e.attained_degree = -1;
        return e;
    }
    e.attained_degree = e.beta_poly->degree();  // -1 for the zero entry
    e.degree_ok =
        !degree_bound_applies || e.raw.is_zero() || e.attained_degree <= e.degree_bound;
    e.zero_when_negative_ok =
        !degree_bound_applies || e.degree_bound >= 0 || e.raw.is_zero();
    e.integer_coeffs = true;
    e.nonneg_coeffs = true;
    for (const auto& c : e.beta_poly->coeffs()) {
        if (!rat_is_integer(c)) e.integer_coeffs = false;
        if (c < 0) e.nonneg_coeffs = false;
    }
    return e;
}

std::vector<HEntry> extract_slice(const GJSeries& series, int n, bool h_form) {
    if (n < 1 || n > series.n_max()) throw std::invalid_argument("slice outside the table");
    const TriplePoly& slice = h_form ? series.psi(n) : series.phi(n);
    std::vector<HEntry> out;
    const auto parts = partitions_of(n);
    for (const auto& tau : parts) {
        for (const auto& mu : parts) {
            for (const auto& nu : parts) {
                RatFunc raw = slice.coeff(TripleKey{tau, mu, nu});
                if (!h_form)
                    raw *= RatFunc(Poly::monomial(rat_of(z_stat(tau)), tau.length()));
                out.push_back(finish_entry(n, tau, mu, nu, std::move(raw), h_form));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<HEntry> extract_h(const GJSeries& series, int n) {
    return extract_slice(series, n, true);
}

std::vector<HEntry> extract_c(const GJSeries& series, int n) {
    return extract_slice(series, n, false);
}

CheckReport check_suite(const std::vector<HEntry>& entries) {
    CheckReport report;
    report.entries = static_cast<int>(entries.size());
    std::map<std::tuple<int, Partition, Partition, Partition>, RatFunc> table;
    for (const auto& e : entries)
        table.emplace(std::make_tuple(e.n, e.tau, e.mu, e.nu), e.raw);
    for (const auto& e : entries) {
        const std::string label = "n=" + std::to_string(e.n) + " (" + e.tau.to_string() + " | " +
                                  e.mu.to_string() + " | " + e.nu.to_string() + ")";
        if (!e.poly_ok) {
            ++report.theorem_failures;
            report.failure_lines.push_back(label + ": not a polynomial, denominator " +
                                           e.failure_denominator);
            continue;
        }
        if (!e.degree_ok) {
            ++report.theorem_failures;
            report.failure_lines.push_back(label + ": degree " +
                                           std::to_string(e.attained_degree) + " exceeds bound " +
                                           std::to_string(e.degree_bound));
        }
        if (!e.zero_when_negative_ok) {
            ++report.theorem_failures;
            report.failure_lines.push_back(label + ": negative bound but value " +
                                           e.raw.to_string());
        }
        if (!e.den_alpha_power_ok) {
            ++report.theorem_failures;
            report.failure_lines.push_back(label + ": pole away from alpha=0, denominator " +
                                           e.raw.den().to_string());
        }
        // Internal consistency of raw vs the beta form at two rational points.
        const Poly& bp = *e.beta_poly;
        if (e.raw.eval(Rat(1)) != bp.eval(Rat(0)) || e.raw.eval(Rat(2)) != bp.eval(Rat(1))) {
            ++report.theorem_failures;
            report.failure_lines.push_back(label + ": beta form disagrees with raw value");
        }
        if (!e.integer_coeffs || !e.nonneg_coeffs) {
            ++report.conjecture_findings;
            report.conjecture_lines.push_back(label + ": coefficients " + bp.to_string("b") +
                                              (e.integer_coeffs ? "" : " [non-integer]") +
                                              (e.nonneg_coeffs ? "" : " [negative]"));
        }
    }
    // Slot-permutation symmetry: all six permutations for h entries, the
    // mu <-> nu swap for the z-normalized c entries.
    for (const auto& e : entries) {
        std::vector<std::tuple<int, Partition, Partition, Partition>> perms = {
            std::make_tuple(e.n, e.tau, e.nu, e.mu)};
        if (e.symmetric_all_slots) {
            perms.push_back(std::make_tuple(e.n, e.mu, e.tau, e.nu));
            perms.push_back(std::make_tuple(e.n, e.mu, e.nu, e.tau));
            perms.push_back(std::make_tuple(e.n, e.nu, e.tau, e.mu));
            perms.push_back(std::make_tuple(e.n, e.nu, e.mu, e.tau));
        }
        for (const auto& p : perms) {
            auto it = table.find(p);
            if (it == table.end() || it->second != e.raw) {
                report.symmetry_ok = false;
                break;
            }
        }
        if (!report.symmetry_ok) break;
    }
    return report;
}

bool verify_log_exp_roundtrip(const GJSeries& series) {
    // Re-exponentiation: n g_n = sum_{k=1}^{n} k L_k g_{n-k}, g_0 = 1; the
    // result must reproduce phi slice by slice.
    std::vector<TriplePoly> g(static_cast<size_t>(series.n_max()) + 1);
    g[0] = TriplePoly::one();
    for (int n = 1; n <= series.n_max(); ++n) {
        TriplePoly acc;
        for (int k = 1; k <= n; ++k)
            acc += (series.log_slice(k) * g[static_cast<size_t>(n - k)]).scaled(Rat(k));
        g[static_cast<size_t>(n)] = acc.scaled(rat_frac(1, static_cast<long>(n)));
        if (g[static_cast<size_t>(n)] != series.phi(n)) return false;
    }
    return true;
}

// ---- log-cumulant identity ---------------------------------------------------

namespace {

template <class R>
using TSeries = std::map<Partition, R>;

template <class R>
void tseries_add(TSeries<R>& s, const Partition& key, const R& c) {
    auto [it, inserted] = s.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == R()) s.erase(it);
    }
}

template <class R>
TSeries<R> tseries_mul(const TSeries<R>& a, const TSeries<R>& b, int cap) {
    TSeries<R> out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            if (ka.size() + kb.size() > cap) continue;
            tseries_add(out, union_merge(ka, kb), R(ca * cb));
        }
    }
    return out;
}

}  // namespace

template <class R>
LogCumulantVerdict verify_log_cumulant_identity(const std::function<R(const Partition&)>& F,
                                                int max_weight, R one) {
    LogCumulantVerdict v;
    if (max_weight < 1 || max_weight > 4) {
        v.detail = "weight bound outside 1..4";
        return v;
    }
    if (!(F(Partition()) == one)) {
        v.detail = "F(empty) must be the ring unit";
        return v;
    }

    // Left side: log of the weighted diagram sum, keyed by columns.
    TSeries<R> inner;  // the series minus its constant term 1
    for (int w = 1; w <= max_weight; ++w) {
        for (const auto& lam : partitions_of(w)) {
            const Partition conj = lam.conjugate();
            Rat denom(1);
            for (int i = 1; i <= (conj.empty() ? 0 : conj.parts()[0]); ++i)
                for (int k = 2; k <= conj.multiplicity(i); ++k) denom *= k;
            RatFunc weight =
                RatFunc(Poly(1L), Poly::monomial(Rat(1), lam.part(1))).scaled(1 / denom);
            tseries_add(inner, conj, R(F(lam).scaled(weight)));
        }
    }
    TSeries<R> lhs;  // log(1 + inner) truncated
    TSeries<R> power = inner;
    for (int k = 1; k <= max_weight && !power.empty(); ++k) {
        const Rat coef = (k % 2 == 1) ? rat_frac(1, static_cast<long>(k))
                                      : rat_frac(-1, static_cast<long>(k));
        for (const auto& [key, c] : power) tseries_add(lhs, key, R(c.scaled(coef)));
        power = tseries_mul(power, inner, max_weight);
    }

    // Right side: cumulants of F over one-column tuples.
    TSeries<R> rhs;
    for (int w = 1; w <= max_weight; ++w) {
        for (const auto& rho : partitions_of(w)) {
            const int r = rho.length();
            std::vector<Partition> columns;
            for (int p : rho.parts()) columns.emplace_back(std::vector<int>(static_cast<size_t>(p), 1));
            std::function<R(std::uint32_t)> family = [&](std::uint32_t mask) {
                return F(oplus_subset(columns, mask));
            };
            R kappa = partial_cumulant<R>(family, (1u << r) - 1, R());
            Rat denom(1);
            for (int i = 1; i <= rho.part(1); ++i)
                for (int k = 2; k <= rho.multiplicity(i); ++k) denom *= k;
            RatFunc weight = RatFunc(Poly(1L), Poly::monomial(Rat(1), r)).scaled(1 / denom);
            tseries_add(rhs, rho, R(kappa.scaled(weight)));
        }
    }

    if (lhs == rhs) {
        v.pass = true;
        return v;
    }
    for (const auto& [key, c] : lhs) {
        auto it = rhs.find(key);
        if (it == rhs.end() || !(it->second == c)) {
            v.detail = "mismatch at t-monomial " + key.to_string();
            return v;
        }
    }
    v.detail = "right side has extra t-monomials";
    return v;
}

template LogCumulantVerdict verify_log_cumulant_identity<RatFunc>(
    const std::function<RatFunc(const Partition&)>&, int, RatFunc);
template LogCumulantVerdict verify_log_cumulant_identity<TriplePoly>(
    const std::function<TriplePoly(const Partition&)>&, int, TriplePoly);

// ---- rendering ----------------------------------------------------------------

namespace {

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string beta_coeff_list(const HEntry& e) {
    if (!e.beta_poly) return "";
    if (e.beta_poly->is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < e.beta_poly->coeffs().size(); ++i) {
        if (i) out += ";";
        out += rat_to_string(e.beta_poly->coeffs()[i]);
    }
    return out;
}

}  // namespace

std::string htable_csv(const std::vector<HEntry>& entries) {
    std::string out = "n,tau,mu,nu,h_beta_coeffs,degree,degree_bound,poly_ok,nonneg_int_ok\n";
    for (const auto& e : entries) {
        out += std::to_string(e.n) + "," + csv_quote(e.tau.to_string()) + "," +
               csv_quote(e.mu.to_string()) + "," + csv_quote(e.nu.to_string()) + "," +
               csv_quote(beta_coeff_list(e)) + "," + std::to_string(e.attained_degree) + "," +
               std::to_string(e.degree_bound) + "," + (e.poly_ok ? "1" : "0") + "," +
               (e.integer_coeffs && e.nonneg_coeffs ? "1" : "0") + "\n";
    }
    return out;
}

std::string htable_json(const std::vector<HEntry>& entries, const CheckReport& report) {
    auto poly_coeffs = [](const Poly& p) {
        json coeffs = json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
        return coeffs;
    };
    json doc;
    json rows = json::array();
    for (const auto& e : entries) {
        json row;
        row["n"] = e.n;
        row["tau"] = e.tau.to_string();
        row["mu"] = e.mu.to_string();
        row["nu"] = e.nu.to_string();
        row["raw"] = {{"num", poly_coeffs(e.raw.num())}, {"den", poly_coeffs(e.raw.den())}};
        if (e.beta_poly) {
            json coeffs = json::array();
            for (const auto& c : e.beta_poly->coeffs()) coeffs.push_back(rat_to_string(c));
            row["beta_coeffs"] = coeffs;
        } else {
            row["failure_denominator"] = e.failure_denominator;
        }
        row["degree"] = e.attained_degree;
        row["degree_bound"] = e.degree_bound;
        row["poly_ok"] = e.poly_ok;
        row["degree_ok"] = e.degree_ok;
        row["zero_when_negative_ok"] = e.zero_when_negative_ok;
        row["den_alpha_power_ok"] = e.den_alpha_power_ok;
        row["integer_coeffs"] = e.integer_coeffs;
        row["nonneg_coeffs"] = e.nonneg_coeffs;
        rows.push_back(row);
    }
    doc["entries"] = rows;
    doc["summary"] = {{"entries", report.entries},
                      {"theorem_failures", report.theorem_failures},
                      {"conjecture_findings", report.conjecture_findings},
                      {"symmetry_ok", report.symmetry_ok}};
    return doc.dump(2) + "\n";
}

}  // namespace jacklab
