#include <doctest.h>

#include "jacklab/series.hpp"

using namespace jacklab;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

TripleKey K(std::vector<int> t, std::vector<int> m, std::vector<int> n) {
    return TripleKey{P(std::move(t)), P(std::move(m)), P(std::move(n))};
}

// Hand oracle for the degree-2 slice of the scaled log-derivative: with the
// frozen expansions J_2 = p11 + a p2, J_11 = p11 - p2, compute
// 2a (phi_2 - phi_1^2 / 2) at one (tau, mu, nu) slot from scratch.
RatFunc oracle_psi2(const Partition& tau, const Partition& mu, const Partition& nu) {
    const RatFunc a(Poly::alpha());
    auto j2 = [&](const Partition& lam) {
        if (lam == P({2})) return a;
        return RatFunc(1);
    };
    auto j11 = [&](const Partition& lam) {
        if (lam == P({2})) return RatFunc(-1);
        return RatFunc(1);
    };
    const RatFunc norm2 = RatFunc(1) / RatFunc(hook(P({2})) * hook_prime(P({2})));
    const RatFunc norm11 = RatFunc(1) / RatFunc(hook(P({1, 1})) * hook_prime(P({1, 1})));
    RatFunc phi2 = j2(tau) * j2(mu) * j2(nu) * norm2 + j11(tau) * j11(mu) * j11(nu) * norm11;
    RatFunc phi1_sq;  // phi_1 = (1/a) p1 x p1 x p1, squared lands on (1,1) everywhere
    if (tau == P({1, 1}) && mu == P({1, 1}) && nu == P({1, 1}))
        phi1_sq = RatFunc(1) / (a * a);
    const RatFunc L2 = phi2 - phi1_sq.scaled(rat_frac(1, 2));
    return L2 * a.scaled(Rat(2));
}

const HEntry& find_entry(const std::vector<HEntry>& entries, const Partition& tau,
                         const Partition& mu, const Partition& nu) {
    for (const auto& e : entries)
        if (e.tau == tau && e.mu == mu && e.nu == nu) return e;
    throw std::logic_error("entry not found");
}

}  // namespace

TEST_CASE("triple sums multiply coordinate-wise") {
    TriplePoly x;
    x.add_term(K({1}, {1}, {1}), RatFunc(1));
    TriplePoly y;
    y.add_term(K({2}, {1}, {1, 1}), RatFunc(Poly::alpha()));
    const TriplePoly z = x * y;
    CHECK(z.terms().size() == 1);
    CHECK(z.coeff(K({2, 1}, {1, 1}, {1, 1, 1})) == RatFunc(Poly::alpha()));
    CHECK((x - x).is_zero());
}

TEST_CASE("series slices match hand values") {
    JackEngine engine;
    GJSeries series(engine, 3);
    CHECK(series.phi(0) == TriplePoly::one());
    CHECK(series.phi(1).coeff(K({1}, {1}, {1})) == RatFunc(Poly(1L), Poly::alpha()));
    CHECK(series.psi(1).coeff(K({1}, {1}, {1})) == RatFunc(1));

    // phi_2 at the all-(1,1) slot: 1/(2a^2(1+a)) + 1/(2a(1+a)) = 1/(2a^2).
    CHECK(series.phi(2).coeff(K({1, 1}, {1, 1}, {1, 1})) ==
          RatFunc(Poly(1L), Poly::monomial(Rat(2), 2)));

    // psi_2 against the from-scratch oracle on every slot.
    for (const auto& tau : partitions_of(2))
        for (const auto& mu : partitions_of(2))
            for (const auto& nu : partitions_of(2))
                CHECK(series.psi(2).coeff(TripleKey{tau, mu, nu}) == oracle_psi2(tau, mu, nu));

    // Alphabet symmetry of the tables.
    for (int n = 1; n <= 3; ++n)
        for (const auto& [key, c] : series.phi(n).terms()) {
            CHECK(series.phi(n).coeff(TripleKey{key.mu, key.tau, key.nu}) == c);
            CHECK(series.phi(n).coeff(TripleKey{key.tau, key.nu, key.mu}) == c);
        }
}

TEST_CASE("extracted coefficients and their verdicts") {
    JackEngine engine;
    GJSeries series(engine, 3);
    const auto h1 = extract_h(series, 1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].raw == RatFunc(1));
    CHECK(h1[0].degree_bound == 0);
    CHECK(h1[0].poly_ok);
    CHECK(h1[0].attained_degree == 0);

    const auto h2 = extract_h(series, 2);
    REQUIRE(h2.size() == 8);
    const HEntry& e222 = find_entry(h2, P({2}), P({2}), P({2}));
    CHECK(*e222.beta_poly == Poly::alpha());  // h = beta
    CHECK(e222.degree_bound == 1);
    const HEntry& e_mixed = find_entry(h2, P({1, 1}), P({2}), P({2}));
    CHECK(e_mixed.raw == RatFunc(1));
    CHECK(e_mixed.degree_bound == 0);
    const HEntry& e_zero = find_entry(h2, P({2}), P({1, 1}), P({1, 1}));
    CHECK(e_zero.raw.is_zero());
    CHECK(e_zero.degree_bound == -1);
    CHECK(e_zero.zero_when_negative_ok);
    const HEntry& e_n111 = find_entry(h2, P({1, 1}), P({1, 1}), P({1, 1}));
    CHECK(e_n111.raw.is_zero());

    const auto c1 = extract_c(series, 1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].raw == RatFunc(1));

    const auto report = check_suite(h2);
    CHECK(report.theorem_pass());
    CHECK(report.conjecture_findings == 0);
    CHECK(report.entries == 8);
}

TEST_CASE("check suite verdicts through n = 3, h and c") {
    JackEngine engine;
    GJSeries series(engine, 3);
    for (int n = 1; n <= 3; ++n) {
        const auto h_report = check_suite(extract_h(series, n));
        CHECK(h_report.theorem_pass());
        CHECK(h_report.conjecture_findings == 0);
        const auto c_report = check_suite(extract_c(series, n));
        CHECK(c_report.theorem_pass());
    }
}

TEST_CASE("logarithm and exponential are mutually inverse on the tables") {
    JackEngine engine;
    GJSeries series(engine, 4);
    CHECK(verify_log_exp_roundtrip(series));
}

TEST_CASE("log-cumulant identity for the hook weight") {
    std::function<RatFunc(const Partition&)> F = [](const Partition& lam) {
        return RatFunc(hook(lam));
    };
    const auto v = verify_log_cumulant_identity<RatFunc>(F, 3, RatFunc(1));
    CHECK(v.pass);
}

TEST_CASE("log-cumulant identity for the triple product weight") {
    JackEngine engine;
    std::function<TriplePoly(const Partition&)> F = [&](const Partition& lam) {
        return triple_jack(engine, lam)
            .scaled(RatFunc(Poly(1L), hook(lam) * hook_dprime(lam)));
    };
    const auto v = verify_log_cumulant_identity<TriplePoly>(F, 3, TriplePoly::one());
    CHECK(v.pass);
}

TEST_CASE("precondition failures are reported, not asserted") {
    std::function<RatFunc(const Partition&)> bad = [](const Partition& lam) {
        return RatFunc(Rat(2)) + RatFunc(rat_of(lam.size()));
    };
    const auto v = verify_log_cumulant_identity<RatFunc>(bad, 2, RatFunc(1));
    CHECK_FALSE(v.pass);
    CHECK(v.detail.find("unit") != std::string::npos);
}

TEST_CASE("csv rendering") {
    JackEngine engine;
    GJSeries series(engine, 2);
    const auto entries = extract_h(series, 2);
    const std::string csv = htable_csv(entries);
    // Header plus p(2)^3 = 8 data rows.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
    CHECK(csv.find("n,tau,mu,nu,h_beta_coeffs,degree,degree_bound,poly_ok,nonneg_int_ok") == 0);
    CHECK(csv.find("2,\"2\",\"2\",\"2\",\"0;1\",1,1,1,1") != std::string::npos);
    const std::string js = htable_json(entries, check_suite(entries));
    CHECK(js.find("\"theorem_failures\": 0") != std::string::npos);
}
