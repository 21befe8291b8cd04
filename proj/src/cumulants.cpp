#include "jacklab/cumulants.hpp"

#include <bit>
#include <climits>

#include <json.hpp>
#include <stdexcept>

#include "jacklab/operators.hpp"

namespace jacklab {

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i + 1);
    return out;
}

std::uint32_t block_mask(const std::vector<int>& block) {
    std::uint32_t m = 0;
    for (int x : block) m |= 1u << (x - 1);
    return m;
}

namespace {

void for_each_subset(std::uint32_t h_mask, const std::function<void(std::uint32_t)>& fn) {
    std::uint32_t sub = h_mask;
    for (;;) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & h_mask;
    }
}

}  // namespace

RatFunc t_error(const std::function<RatFunc(std::uint32_t)>& family, std::uint32_t h_mask) {
    const int h = std::popcount(h_mask);
    if (h < 2) throw std::invalid_argument("cumulative error terms need |H| >= 2");
    RatFunc num(1), den(1);
    for_each_subset(h_mask, [&](std::uint32_t sub) {
        const RatFunc u = family(sub);
        if (u.is_zero()) throw std::domain_error("non-invertible family value");
        if ((h - std::popcount(sub)) % 2 == 0)
            num *= u;
        else
            den *= u;
    });
    return num / den - RatFunc(1);
}

SymFraction t_error_fraction(const std::function<SymFunc(std::uint32_t)>& family,
                             std::uint32_t h_mask) {
    const int h = std::popcount(h_mask);
    if (h < 2) throw std::invalid_argument("cumulative error terms need |H| >= 2");
    SymFunc num = SymFunc::one(Basis::p);
    SymFunc den = SymFunc::one(Basis::p);
    for_each_subset(h_mask, [&](std::uint32_t sub) {
        const SymFunc u = family(sub);
        if (u.is_zero()) throw std::domain_error("non-invertible family value");
        if ((h - std::popcount(sub)) % 2 == 0)
            num = p_multiply(num, u);
        else
            den = p_multiply(den, u);
    });
    return {std::move(num), std::move(den)};
}

std::string verdict_json(const std::vector<Partition>& inputs, const FactorizationVerdict& v) {
    nlohmann::json doc;
    nlohmann::json in = nlohmann::json::array();
    for (const auto& lam : inputs) in.push_back(lam.to_string());
    doc["inputs"] = in;
    doc["required_valuation"] = v.required;
    if (!v.vacuous) doc["achieved_valuation"] = v.achieved;
    doc["pass"] = v.pass;
    if (!v.witness.empty()) doc["witness"] = v.witness;
    return doc.dump();
}

std::string FactorizationVerdict::to_string() const {
    if (vacuous) return pass ? "pass (identically zero)" : "fail";
    std::string s = pass ? "pass" : "FAIL";
    s += " (valuation " + std::to_string(achieved) + ", required " + std::to_string(required);
    if (!witness.empty()) s += ", witness " + witness;
    return s + ")";
}

SymFunc jack_cumulant(JackEngine& engine, const std::vector<Partition>& lambdas) {
    if (lambdas.empty() || lambdas.size() > 5)
        throw std::invalid_argument("cumulants materialize families for 1 <= r <= 5");
    const std::uint32_t top = (1u << lambdas.size()) - 1;
    std::function<SymFunc(std::uint32_t)> family = [&](std::uint32_t mask) {
        return engine.jack_p(oplus_subset(lambdas, mask));
    };
    return partial_cumulant<SymFunc>(family, top, SymFunc::zero(Basis::p));
}

FactorizationVerdict verify_strong_factorization(JackEngine& engine,
                                                 const std::vector<Partition>& lambdas) {
    const int r = static_cast<int>(lambdas.size());
    FactorizationVerdict v;
    v.required = r - 1;
    const SymFunc kappa = jack_cumulant(engine, lambdas);
    if (kappa.is_zero()) {
        v.vacuous = true;
        v.pass = true;
    } else {
        auto [val, where] = kappa.min_valuation();
        v.achieved = val;
        v.pass = val >= v.required;
        v.witness = "p[" + where.to_string() + "] -> " + kappa.coeff(where).to_string();
    }
    if (r >= 2 && r <= 3) {
        // Cross-check through the factorization-error form, as a formal
        // fraction (num - den)/den of p-expansions.
        std::function<SymFunc(std::uint32_t)> family = [&](std::uint32_t mask) {
            return engine.jack_p(oplus_subset(lambdas, mask));
        };
        const SymFraction t = t_error_fraction(family, (1u << r) - 1);
        const SymFunc diff = t.num - t.den;
        bool t_pass;
        if (diff.is_zero()) {
            t_pass = true;
        } else {
            const int val_diff = diff.min_valuation().first;
            const int val_den = t.den.min_valuation().first;
            t_pass = val_diff - val_den >= r - 1;
        }
        if (t_pass != v.pass) {
            v.pass = false;
            v.witness += " [cumulant and factorization-error verdicts disagree]";
        }
    }
    return v;
}

FactorizationVerdict verify_hook_factorization(const std::vector<Partition>& lambdas,
                                               HookVariant variant) {
    const int r = static_cast<int>(lambdas.size());
    if (r < 2 || r > 5) throw std::invalid_argument("hook factorization checks need 2 <= r <= 5");
    std::function<RatFunc(std::uint32_t)> family = [&](std::uint32_t mask) {
        const Partition lam = oplus_subset(lambdas, mask);
        return RatFunc(variant == HookVariant::plain ? hook(lam) : hook_dprime(lam));
    };
    FactorizationVerdict v;
    v.required = r - 1;
    v.pass = true;
    // achieved reports the worst margin, scaled to the top requirement.
    int worst_margin = INT_MAX;
    for (std::uint32_t h = 0; h < (1u << r); ++h) {
        const int size = std::popcount(h);
        if (size < 2) continue;
        const RatFunc t = t_error(family, h);
        if (t.is_zero()) continue;
        const int margin = t.valuation_at_zero() - (size - 1);
        if (margin < worst_margin) {
            worst_margin = margin;
            v.witness = "T over mask " + std::to_string(h) + " = " + t.to_string();
        }
        if (margin < 0) v.pass = false;
    }
    if (worst_margin == INT_MAX)
        v.vacuous = true;  // every error term vanished (multiplicative family)
    else
        v.achieved = v.required + worst_margin;
    return v;
}

AffineLemmaVerdict verify_affine_lemma(const RatFunc& C, const std::vector<RatFunc>& cs) {
    AffineLemmaVerdict v;
    if (cs.size() < 2 || cs.size() > 5) {
        v.detail = "usage: need 2 <= r <= 5 summands (error terms exist only for |H| >= 2)";
        return v;
    }
    if (C.is_zero() || !C.is_big_o(0) || !C.recip().is_big_o(0)) {
        v.detail = "hypothesis not satisfied: C and 1/C must be O(1)";
        return v;
    }
    for (const auto& c : cs) {
        if (!c.is_big_o(0)) {
            v.detail = "hypothesis not satisfied: every summand must be O(1)";
            return v;
        }
    }
    v.hypothesis_ok = true;
    const int r = static_cast<int>(cs.size());
    std::function<RatFunc(std::uint32_t)> family = [&](std::uint32_t mask) {
        RatFunc acc = C;
        RatFunc lin;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) lin += cs[static_cast<size_t>(i)];
        return acc + lin * RatFunc(Poly::alpha());
    };
    v.pass = true;
    for (std::uint32_t h = 0; h < (1u << r); ++h) {
        const int size = std::popcount(h);
        if (size < 2) continue;
        const RatFunc t = t_error(family, h);
        if (!t.is_big_o(size)) {
            v.pass = false;
            v.detail = "T over mask " + std::to_string(h) + " = " + t.to_string() +
                       " is not O(alpha^" + std::to_string(size) + ")";
            return v;
        }
    }
    return v;
}

long long ie_stat(const std::vector<Partition>& lambdas) {
    const int r = static_cast<int>(lambdas.size());
    if (r < 1) throw std::invalid_argument("ie_stat needs r >= 1");
    long long acc = 0;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        const long long term = b_stat(oplus_subset(lambdas, mask));
        acc += ((r - std::popcount(mask)) % 2 == 0) ? term : -term;
    }
    return acc;
}

A12Verdict verify_A1_A2(JackEngine& engine, const std::vector<Partition>& lambdas, int nvars) {
    const int r = static_cast<int>(lambdas.size());
    if (r < 2 || r > 3) throw std::invalid_argument("identity checks cover r in {2, 3}");
    int total = 0;
    for (const auto& lam : lambdas) total += lam.size();
    if (nvars < total) throw std::invalid_argument("need nvars >= total weight");

    const std::uint32_t top = (1u << r) - 1;
    std::function<SymFunc(std::uint32_t)> family = [&](std::uint32_t mask) {
        return engine.jack_p(oplus_subset(lambdas, mask));
    };
    // Cumulants of every subset, in p.
    std::vector<SymFunc> kappa(top + 1, SymFunc::zero(Basis::p));
    for (std::uint32_t h = 1; h <= top; ++h)
        kappa[h] = partial_cumulant<SymFunc>(family, h, SymFunc::zero(Basis::p));

    A12Verdict v;

    // A1 from its definition.
    SymFunc a1_def(Basis::p);
    visit_set_partitions(mask_elements(top), [&](const std::vector<std::vector<int>>& blocks) {
        long long mob = 1;
        for (int k = 1; k < static_cast<int>(blocks.size()); ++k) mob *= -k;
        long long bsum = 0;
        SymFunc prod = SymFunc::one(Basis::p);
        for (const auto& block : blocks) {
            const Partition lam = oplus_subset(lambdas, block_mask(block));
            bsum += b_stat(lam);
            prod = p_multiply(prod, engine.jack_p(lam));
        }
        a1_def += prod.scaled(RatFunc(rat_of(mob * bsum)));
    });
    // A1 compact form.
    SymFunc a1_compact = kappa[top].scaled(RatFunc(rat_of(b_stat(oplus_subset(lambdas, top)))));
    for (std::uint32_t i = 1; i < top; ++i) {
        const std::uint32_t ic = top & ~i;
        const long long ie = ie_stat({oplus_subset(lambdas, i), oplus_subset(lambdas, ic)});
        if (ie == 0) continue;
        a1_compact += p_multiply(kappa[i], kappa[ic]).scaled(RatFunc(rat_of(ie) / 2));
    }
    v.a1_ok = a1_def == a1_compact;
    if (!v.a1_ok)
        v.detail += "A1 mismatch: " + (a1_def - a1_compact).to_string() + "; ";

    // A2 from its definition (mixed derivation over block products).
    SymFunc a2_def(Basis::m);
    visit_set_partitions(mask_elements(top), [&](const std::vector<std::vector<int>>& blocks) {
        if (blocks.size() < 2) return;  // single argument: mixed derivation is 0
        long long mob = 1;
        for (int k = 1; k < static_cast<int>(blocks.size()); ++k) mob *= -k;
        std::vector<SymFunc> args;
        for (const auto& block : blocks)
            args.push_back(convert(engine.jack_p(oplus_subset(lambdas, block_mask(block))),
                                   Basis::m));
        a2_def += apply_D12(args, nvars).scaled(RatFunc(rat_of(mob)));
    });
    // A2 compact form: -1/2 sum_m sum_I (x_m d_m kappa_I)(x_m d_m kappa_Ic).
    // Realized through the same mixed derivation: D12(f, g) equals
    // sum_m (x_m d_m f)(x_m d_m g).
    SymFunc a2_compact(Basis::m);
    for (std::uint32_t i = 1; i < top; ++i) {
        const std::uint32_t ic = top & ~i;
        if (kappa[i].is_zero() || kappa[ic].is_zero()) continue;
        a2_compact += apply_D12({convert(kappa[i], Basis::m), convert(kappa[ic], Basis::m)}, nvars)
                          .scaled(RatFunc(rat_frac(-1, 2)));
    }
    v.a2_ok = a2_def == a2_compact;
    if (!v.a2_ok)
        v.detail += "A2 mismatch: " + (a2_def - a2_compact).to_string() + "; ";
    return v;
}

bool strong_factorization_property(const std::function<RatFunc(std::uint32_t)>& family,
                                   std::uint32_t h_mask) {
    bool ok = true;
    for_each_subset(h_mask, [&](std::uint32_t sub) {
        const int size = std::popcount(sub);
        if (size < 2 || !ok) return;
        if (!t_error(family, sub).is_big_o(size - 1)) ok = false;
    });
    return ok;
}

bool small_cumulant_property(const std::function<RatFunc(std::uint32_t)>& family,
                             std::uint32_t h_mask) {
    bool ok = true;
    for_each_subset(h_mask, [&](std::uint32_t sub) {
        const int size = std::popcount(sub);
        if (size < 2 || !ok) return;
        RatFunc kappa = partial_cumulant<RatFunc>(family, sub, RatFunc());
        RatFunc unit_prod(1);
        for (int x : mask_elements(sub)) unit_prod *= family(1u << (x - 1));
        if (!(kappa / unit_prod).is_big_o(size - 1)) ok = false;
    });
    return ok;
}

}  // namespace jacklab
