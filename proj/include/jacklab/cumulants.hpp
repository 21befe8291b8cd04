#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jacklab/jack.hpp"
#include "jacklab/set_partition.hpp"
#include "jacklab/symfunc.hpp"

namespace jacklab {

// ---- generic partial-cumulant machinery -----------------------------------
//
// Families are indexed by subset bitmasks over a ground set [r] (bit i-1 for
// element i, r <= 5 enforced by the callers that materialize all 2^r values).
// The ring type R needs +, *, unary -, scaled(Rat) and a default-constructed
// additive zero; RatFunc, SymFunc-in-p and TriplePoly all qualify.

std::vector<int> mask_elements(std::uint32_t mask);
std::uint32_t block_mask(const std::vector<int>& block);

template <class R>
R partial_cumulant(const std::function<R(std::uint32_t)>& family, std::uint32_t h_mask, R zero) {
    if (h_mask == 0) throw std::invalid_argument("cumulant of the empty subset");
    R acc = std::move(zero);
    visit_set_partitions(mask_elements(h_mask), [&](const std::vector<std::vector<int>>& blocks) {
        long long mob = 1;
        for (int k = 1; k < static_cast<int>(blocks.size()); ++k) mob *= -k;
        R prod = family(block_mask(blocks[0]));
        for (size_t b = 1; b < blocks.size(); ++b) prod = prod * family(block_mask(blocks[b]));
        acc += prod.scaled(rat_of(mob));
    });
    return acc;
}

template <class R>
R moments_from_cumulants(const std::function<R(std::uint32_t)>& cumulants, std::uint32_t h_mask,
                         R zero) {
    if (h_mask == 0) throw std::invalid_argument("moment of the empty subset");
    R acc = std::move(zero);
    visit_set_partitions(mask_elements(h_mask), [&](const std::vector<std::vector<int>>& blocks) {
        R prod = cumulants(block_mask(blocks[0]));
        for (size_t b = 1; b < blocks.size(); ++b) prod = prod * cumulants(block_mask(blocks[b]));
        acc += prod;
    });
    return acc;
}

// ---- cumulative factorization error ----------------------------------------

// T_H(u) = prod_{G subseteq H} u_G^((-1)^(|H|-|G|)) - 1, the
// inclusion-exclusion form; requires every involved u_G to be nonzero. The
// empty-set value participates (families built from a function on diagrams
// need not have u_{} = 1).
RatFunc t_error(const std::function<RatFunc(std::uint32_t)>& family, std::uint32_t h_mask);

// T as a formal fraction of symmetric functions: numerator/denominator of the
// alternating product, T = (num - den)/den. Used where series inverses are
// unavailable; its O(alpha^k) reading is val(num - den) - val(den) >= k.
struct SymFraction {
    SymFunc num;
    SymFunc den;
};
SymFraction t_error_fraction(const std::function<SymFunc(std::uint32_t)>& family,
                             std::uint32_t h_mask);

// ---- verdicts ---------------------------------------------------------------

struct FactorizationVerdict {
    bool pass = false;
    bool vacuous = false;  // cumulant identically zero
    int required = 0;
    int achieved = 0;  // meaningful unless vacuous
    std::string witness;  // coefficient attaining the minimum valuation
    std::string to_string() const;
};

// One-line JSON report {inputs, required_valuation, achieved_valuation,
// pass, witness?} for batch consumers.
std::string verdict_json(const std::vector<Partition>& inputs, const FactorizationVerdict& v);

// Theorem-level check: min alpha-valuation of the Jack cumulant over all
// p-coefficients is at least r-1. For r <= 3 the cumulative-error form is
// also evaluated as a formal fraction and the two verdicts are required to
// agree; a disagreement is reported as failure with a witness.
FactorizationVerdict verify_strong_factorization(JackEngine& engine,
                                                 const std::vector<Partition>& lambdas);

// Jack cumulant kappa^J(lambda^1..lambda^r) in the p basis.
SymFunc jack_cumulant(JackEngine& engine, const std::vector<Partition>& lambdas);

enum class HookVariant { plain, dprime };

// Props on hook families: T_H is O(alpha^(|H|-1)) for every H of size >= 2.
FactorizationVerdict verify_hook_factorization(const std::vector<Partition>& lambdas,
                                               HookVariant variant);

struct AffineLemmaVerdict {
    bool hypothesis_ok = false;  // C, 1/C and every c_i are O(1)
    bool pass = false;
    std::string detail;
};

// Family v_I = C + alpha * sum_{i in I} c_i over subsets of [r]; checks
// T_H = O(alpha^|H|) for every H of size >= 2.
AffineLemmaVerdict verify_affine_lemma(const RatFunc& C, const std::vector<RatFunc>& cs);

// Alternating sum of b over subset sums; vanishes identically for r >= 3.
long long ie_stat(const std::vector<Partition>& lambdas);

struct A12Verdict {
    bool a1_ok = false;
    bool a2_ok = false;
    std::string detail;
};

// Verifies the two closed forms used in the eigenvalue-recursion proof: the
// Mobius-weighted sums over set partitions against their compact expressions
// in terms of cumulants (exact equality of symmetric functions).
A12Verdict verify_A1_A2(JackEngine& engine, const std::vector<Partition>& lambdas, int nvars);

// Small-cumulant verdict for a scalar family restricted to a subset mask:
// for every H' <= H with |H'| >= 2, kappa_{H'} / prod_{h in H'} u_h is
// O(alpha^(|H'|-1)). Companion of the strong-factorization verdict below.
bool small_cumulant_property(const std::function<RatFunc(std::uint32_t)>& family,
                             std::uint32_t h_mask);
bool strong_factorization_property(const std::function<RatFunc(std::uint32_t)>& family,
                                   std::uint32_t h_mask);

}  // namespace jacklab
