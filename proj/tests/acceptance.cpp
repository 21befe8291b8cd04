// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit status is nonzero when a theorem-level criterion fails; the
// conjecture-level report (criterion 8) never gates.

#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "jacklab/cumulants.hpp"
#include "jacklab/operators.hpp"
#include "jacklab/series.hpp"

using namespace jacklab;
namespace fs = std::filesystem;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

struct Criterion {
    int number;
    std::string name;
    bool pass;
    std::string note;
    double seconds;
};

std::vector<Criterion> results;

void run(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool pass = false;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        pass = false;
        note = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back({number, name, pass, note, seconds});
    std::printf("criterion %2d [%-24s] %s  (%.1fs)%s%s\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", seconds, note.empty() ? "" : "  ", note.c_str());
    std::fflush(stdout);
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int n = 1; n <= max_weight; ++n)
        for (const auto& lam : partitions_of(n)) out.push_back(lam);
    return out;
}

bool coeff_in_nonneg_int_alpha(const RatFunc& c) {
    if (!c.is_polynomial()) return false;
    for (const auto& x : c.num().coeffs())
        if (!rat_is_integer(x) || x < 0) return false;
    return true;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

int main() {
    JackEngine engine(kMaxPartitionWeight);

    run(1, "jack-correctness", [&](std::string& note) {
        int checked = 0;
        for (int n = 0; n <= 8; ++n) {
            for (const auto& lam : partitions_of(n)) {
                const SymFunc jm = engine.jack_m(lam);
                for (int nvars = std::max(n, 1); nvars <= std::max(n, 1) + 1; ++nvars) {
                    const SymFunc residual = apply_Dalpha(jm, nvars) -
                                             jm.scaled(RatFunc(dalpha_eigenvalue(lam, nvars)));
                    if (!residual.is_zero()) return false;
                }
                if (jm.coeff(lam) != RatFunc(hook(lam))) return false;
                for (const auto& [nu, c] : jm.terms()) {
                    if (nu != lam && !(dominance_leq(nu, lam) && nu != lam)) return false;
                    if (!coeff_in_nonneg_int_alpha(c)) return false;
                }
                if (!engine.check_alpha0(lam).ok) return false;
                ++checked;
            }
        }
        note = std::to_string(checked) + " partitions";
        return true;
    });

    run(2, "norm-identity", [&](std::string& note) {
        int checked = 0;
        for (int n = 0; n <= 6; ++n) {
            for (const auto& lam : partitions_of(n)) {
                if (!engine.check_norm(lam).ok) return false;
                ++checked;
            }
        }
        note = std::to_string(checked) + " partitions";
        return true;
    });

    run(3, "strong-factorization", [&](std::string& note) {
        // Exact witnesses first.
        SymFunc ap2(Basis::p);
        ap2.add_term(P({2}), RatFunc(Poly::alpha()));
        if (jack_cumulant(engine, {P({1}), P({1})}) != ap2) return false;
        SymFunc a2p3(Basis::p);
        a2p3.add_term(P({3}), RatFunc(Poly::monomial(Rat(2), 2)));
        if (jack_cumulant(engine, {P({1}), P({1}), P({1})}) != a2p3) return false;

        int tuples = 0;
        const auto pool4 = partitions_up_to(4);
        const auto pool5 = partitions_up_to(5);
        for (const auto& la : pool5) {
            for (const auto& lb : pool5) {
                // Per-component weight <= 4, plus the total-weight <= 6 pairs
                // that reach a weight-5 component.
                if ((la.size() > 4 || lb.size() > 4) && la.size() + lb.size() > 6) continue;
                if (!verify_strong_factorization(engine, {la, lb}).pass) {
                    note = "pair (" + la.to_string() + " | " + lb.to_string() + ")";
                    return false;
                }
                ++tuples;
            }
        }
        for (const auto& la : pool4) {
            for (const auto& lb : pool4) {
                for (const auto& lc : pool4) {
                    if (la.size() + lb.size() + lc.size() > 6) continue;
                    if (!verify_strong_factorization(engine, {la, lb, lc}).pass) {
                        note = "triple (" + la.to_string() + " | " + lb.to_string() + " | " +
                               lc.to_string() + ")";
                        return false;
                    }
                    ++tuples;
                }
            }
        }
        if (!verify_strong_factorization(engine, {P({1}), P({1}), P({1}), P({1})}).pass)
            return false;
        ++tuples;
        note = std::to_string(tuples) + " tuples";
        return true;
    });

    run(4, "hook-cumulants", [&](std::string& note) {
        int tuples = 0;
        const auto pool = partitions_up_to(4);
        for (auto variant : {HookVariant::plain, HookVariant::dprime}) {
            for (const auto& la : pool)
                for (const auto& lb : pool) {
                    if (!verify_hook_factorization({la, lb}, variant).pass) return false;
                    ++tuples;
                }
            for (const auto& la : pool)
                for (const auto& lb : pool)
                    for (const auto& lc : pool) {
                        if (!verify_hook_factorization({la, lb, lc}, variant).pass) return false;
                        ++tuples;
                    }
        }
        std::mt19937_64 gen(20160915);
        std::uniform_int_distribution<long> coeff(-5, 5);
        auto bounded = [&](bool unit) {
            for (;;) {
                Poly num = Poly::from_coeffs({Rat(coeff(gen)), Rat(coeff(gen))});
                Poly den = Poly::from_coeffs({Rat(2 * coeff(gen) + 1), Rat(coeff(gen))});
                RatFunc x(num, den);
                if (x.is_zero() && unit) continue;
                if (!x.is_big_o(0)) continue;
                if (unit && x.valuation_at_zero() != 0) continue;
                return x;
            }
        };
        for (int trial = 0; trial < 100; ++trial) {
            const int r = 2 + static_cast<int>(gen() % 3);
            std::vector<RatFunc> cs;
            for (int i = 0; i < r; ++i) cs.push_back(bounded(false));
            const auto verdict = verify_affine_lemma(bounded(true), cs);
            if (!verdict.hypothesis_ok || !verdict.pass) {
                note = verdict.detail;
                return false;
            }
        }
        note = std::to_string(tuples) + " hook tuples + 100 affine instances (seed 20160915)";
        return true;
    });

    run(5, "lattice-and-inversion", [&](std::string& note) {
        for (int r = 1; r <= 5; ++r) {
            const auto all = enumerate_set_partitions(r);
            const SetPartition top = SetPartition::top(r);
            for (const auto& pi : all) {
                long long sum = 0;
                for (const auto& sigma : all)
                    if (leq(pi, sigma)) sum += sigma.mobius_to_top();
                if (sum != (pi == top ? 1 : 0)) return false;
                for (const auto& sigma : all)
                    if (join(pi, sigma).rank() > pi.rank() + sigma.rank()) return false;
            }
        }
        std::mt19937_64 gen(977);
        std::uniform_int_distribution<long> coeff(-5, 5);
        auto unit_value = [&] {
            for (;;) {
                Poly num = Poly::from_coeffs({Rat(coeff(gen)), Rat(coeff(gen)), Rat(coeff(gen))});
                Poly den = Poly::from_coeffs({Rat(2 * coeff(gen) + 1), Rat(coeff(gen))});
                RatFunc x(num, den);
                if (x.is_zero() || !x.is_big_o(0) || x.valuation_at_zero() != 0) continue;
                return x;
            }
        };
        for (int r = 2; r <= 4; ++r) {
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<RatFunc> values(static_cast<size_t>(1) << r);
                values[0] = RatFunc(1);
                for (size_t m = 1; m < values.size(); ++m) values[m] = unit_value();
                std::function<RatFunc(std::uint32_t)> fam = [&](std::uint32_t m) {
                    return values[m];
                };
                std::vector<RatFunc> kappa(values.size());
                for (std::uint32_t h = 1; h < values.size(); ++h)
                    kappa[h] = partial_cumulant<RatFunc>(fam, h, RatFunc());
                std::function<RatFunc(std::uint32_t)> kfam = [&](std::uint32_t m) {
                    return kappa[m];
                };
                for (std::uint32_t h = 1; h < values.size(); ++h)
                    if (moments_from_cumulants<RatFunc>(kfam, h, RatFunc()) != values[h])
                        return false;
                for (std::uint32_t g = 1; g < values.size(); ++g) {
                    if (std::popcount(g) < 2) continue;
                    RatFunc rhs(1);
                    for (int i = 0; i < r; ++i)
                        if (g & (1u << i)) rhs *= values[1u << i];
                    for (std::uint32_t h = 1; h <= g; ++h) {
                        if ((h & g) != h || std::popcount(h) < 2) continue;
                        rhs *= RatFunc(1) + t_error(fam, h);
                    }
                    if (rhs != values[g]) return false;
                }
                if (r == 3) {
                    for (std::uint32_t h = 0; h < 8; ++h) {
                        if (std::popcount(h) < 2) continue;
                        if (strong_factorization_property(fam, h) !=
                            small_cumulant_property(fam, h))
                            return false;
                    }
                }
            }
        }
        // The equivalence also holds on families known to factor.
        const std::vector<Partition> lambdas = {P({2}), P({1, 1}), P({1})};
        std::vector<RatFunc> hooks(8);
        for (std::uint32_t m = 0; m < 8; ++m) hooks[m] = RatFunc(hook(oplus_subset(lambdas, m)));
        std::function<RatFunc(std::uint32_t)> hfam = [&](std::uint32_t m) { return hooks[m]; };
        if (strong_factorization_property(hfam, 0b111) != small_cumulant_property(hfam, 0b111))
            return false;
        note = "exhaustive r <= 5 lattice, seeded families (seed 977)";
        return true;
    });

    run(6, "section4-identities", [&](std::string& note) {
        const auto pool3 = partitions_up_to(3);
        for (const auto& la : pool3)
            for (const auto& lb : pool3)
                for (const auto& lc : pool3)
                    if (ie_stat({la, lb, lc}) != 0) return false;
        std::mt19937_64 gen(31337);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Partition> lambdas;
            for (int i = 0; i < 4; ++i) lambdas.push_back(pool3[gen() % pool3.size()]);
            if (ie_stat(lambdas) != 0) return false;
        }
        int pairs = 0;
        for (const auto& la : partitions_up_to(3))
            for (const auto& lb : partitions_up_to(3)) {
                const int total = la.size() + lb.size();
                if (total > 4) continue;
                const auto v = verify_A1_A2(engine, {la, lb}, total);
                if (!v.a1_ok || !v.a2_ok) {
                    note = v.detail;
                    return false;
                }
                ++pairs;
            }
        for (const auto& la : partitions_up_to(2))
            for (const auto& lb : partitions_up_to(2))
                for (const auto& lc : partitions_up_to(2)) {
                    const int total = la.size() + lb.size() + lc.size();
                    if (total > 4) continue;
                    const auto v = verify_A1_A2(engine, {la, lb, lc}, total);
                    if (!v.a1_ok || !v.a2_ok) {
                        note = v.detail;
                        return false;
                    }
                    ++pairs;
                }
        note = std::to_string(pairs) + " identity instances (seed 31337)";
        return true;
    });

    GJSeries series(engine, 5);
    std::vector<HEntry> all_entries;
    for (int n = 1; n <= 5; ++n) {
        const auto slice = extract_h(series, n);
        all_entries.insert(all_entries.end(), slice.begin(), slice.end());
    }
    const CheckReport report = check_suite(all_entries);

    run(7, "polynomiality-theorem", [&](std::string& note) {
        if (!report.theorem_pass()) {
            note = report.failure_lines.empty() ? "symmetry" : report.failure_lines.front();
            return false;
        }
        auto lookup = [&](std::vector<int> t, std::vector<int> m, std::vector<int> n) {
            for (const auto& e : all_entries)
                if (e.tau == P(t) && e.mu == P(m) && e.nu == P(n)) return e.raw;
            throw std::logic_error("missing entry");
        };
        if (lookup({1}, {1}, {1}) != RatFunc(1)) return false;
        if (lookup({2}, {2}, {2}) != RatFunc(Poly::from_coeffs({Rat(-1), Rat(1)}))) return false;
        if (lookup({1, 1}, {2}, {2}) != RatFunc(1)) return false;
        if (!lookup({2}, {1, 1}, {1, 1}).is_zero()) return false;
        if (!lookup({1, 1}, {2}, {1, 1}).is_zero()) return false;
        if (!verify_log_exp_roundtrip(series)) return false;
        note = std::to_string(all_entries.size()) + " entries, n <= 5";
        return true;
    });

    run(8, "conjecture-report", [&](std::string& note) {
        for (const auto& line : report.conjecture_lines) std::cout << "conjecture  " << line << "\n";
        std::cout << "conjecture findings: " << report.conjecture_findings << "\n";
        note = report.conjecture_findings == 0 ? "all beta coefficients in N"
                                               : "findings printed above (non-gating)";
        return true;
    });

    run(9, "log-cumulant-identity", [&](std::string& note) {
        std::function<RatFunc(const Partition&)> hook_weight = [](const Partition& lam) {
            return RatFunc(hook(lam));
        };
        if (!verify_log_cumulant_identity<RatFunc>(hook_weight, 4, RatFunc(1)).pass) return false;
        std::function<TriplePoly(const Partition&)> triple_weight = [&](const Partition& lam) {
            return triple_jack(engine, lam)
                .scaled(RatFunc(Poly(1L), hook(lam) * hook_dprime(lam)));
        };
        if (!verify_log_cumulant_identity<TriplePoly>(triple_weight, 4, TriplePoly::one()).pass)
            return false;
        note = "t-weight <= 4, both weight functions";
        return true;
    });

    run(10, "determinism-and-cache", [&](std::string& note) {
        const fs::path base = fs::temp_directory_path() / "jacklab_acceptance";
        fs::remove_all(base);
        fs::create_directories(base);
        const fs::path cache_a = base / "cache_a";
        const fs::path cache_b = base / "cache_b";

        auto table_with = [&](const std::string& cache_dir) {
            JackEngine e(kMaxPartitionWeight, cache_dir);
            GJSeries s(e, 3);
            return htable_csv(extract_h(s, 3));
        };
        const std::string plain1 = table_with("");
        const std::string plain2 = table_with("");
        const std::string cold = table_with(cache_a.string());
        const std::string warm = table_with(cache_a.string());
        const std::string other = table_with(cache_b.string());
        if (plain1 != plain2 || plain1 != cold || cold != warm || warm != other) {
            note = "library outputs differ across cache states";
            return false;
        }

        // Cache documents themselves are byte-stable across runs.
        JackEngine e1(kMaxPartitionWeight), e2(kMaxPartitionWeight);
        if (jack_cache_document(P({3, 1}), Basis::m, e1.jack_m(P({3, 1}))) !=
            jack_cache_document(P({3, 1}), Basis::m, e2.jack_m(P({3, 1}))))
            return false;

#ifdef JACKLAB_CLI_PATH
        const std::string cli = JACKLAB_CLI_PATH;
        auto invoke = [&](const std::string& args, const fs::path& out) {
            const std::string cmd = "'" + cli + "' " + args + " > '" + out.string() + "' 2>&1";
            return std::system(cmd.c_str()) == 0;
        };
        const fs::path out1 = base / "run1.csv";
        const fs::path out2 = base / "run2.csv";
        const std::string args = "htable --n 2 --cache-dir '" + (base / "cli_cache").string() + "'";
        if (!invoke(args, out1) || !invoke(args, out2)) {
            note = "CLI invocation failed";
            return false;
        }
        if (slurp(out1) != slurp(out2) || slurp(out1).empty()) {
            note = "CLI outputs differ between runs";
            return false;
        }
        note = "library + CLI runs byte-identical, warm = cold";
#else
        note = "library runs byte-identical, warm = cold";
#endif
        fs::remove_all(base);
        return true;
    });

    int failures = 0;
    for (const auto& c : results)
        if (!c.pass) ++failures;
    std::printf("ACCEPTANCE: %d/%d criteria passed\n", static_cast<int>(results.size()) - failures,
                static_cast<int>(results.size()));
    return failures == 0 ? 0 : 1;
}
