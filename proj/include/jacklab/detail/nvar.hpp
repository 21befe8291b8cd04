#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "jacklab/alpha_rational.hpp"
#include "jacklab/partition.hpp"

namespace jacklab::detail {

// Sparse polynomial in a fixed number of variables, exponent vector -> coeff.
// Coefficient type C is Rat (transition matrices, operator matrices) or
// RatFunc (operator application to expansions with alpha-dependent
// coefficients); in both cases C() must be the additive zero.
template <class C>
using NVarPoly = std::map<std::vector<int>, C>;

template <class C>
inline void nvar_add_term(NVarPoly<C>& p, const std::vector<int>& mono, const C& c) {
    auto it = p.find(mono);
    if (it == p.end()) {
        if (!(c == C())) p.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second == C()) p.erase(it);
}

// Monomial expansion of m_lambda in `nvars` variables: the sum of all
// distinct rearrangements of the padded part vector. Zero when the partition
// needs more variables than available.
template <class C>
NVarPoly<C> expand_monomial_basis(const Partition& lambda, int nvars) {
    NVarPoly<C> out;
    if (lambda.length() > nvars) return out;
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    do {
        out.emplace(exps, C(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

template <class C>
NVarPoly<C> nvar_mul(const NVarPoly<C>& a, const NVarPoly<C>& b) {
    NVarPoly<C> out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> mono(ea.size());
            for (size_t k = 0; k < mono.size(); ++k) mono[k] = ea[k] + eb[k];
            nvar_add_term(out, mono, C(ca * cb));
        }
    }
    return out;
}

// x_i^2 * d/dx_i applied term-wise.
template <class C>
NVarPoly<C> nvar_x2_deriv(const NVarPoly<C>& p, int i) {
    NVarPoly<C> out;
    for (const auto& [mono, c] : p) {
        const int a = mono[static_cast<size_t>(i)];
        if (a == 0) continue;
        std::vector<int> m2 = mono;
        ++m2[static_cast<size_t>(i)];
        nvar_add_term(out, m2, C(c * Rat(a)));
    }
    return out;
}

// x_i * d/dx_i applied term-wise.
template <class C>
NVarPoly<C> nvar_euler_deriv(const NVarPoly<C>& p, int i) {
    NVarPoly<C> out;
    for (const auto& [mono, c] : p) {
        const int a = mono[static_cast<size_t>(i)];
        if (a == 0) continue;
        out.emplace(mono, C(c * Rat(a)));
    }
    return out;
}

// Exact division by (x_i - x_j); throws std::logic_error when the input is
// not divisible (which would signal a non-symmetric intermediate).
template <class C>
NVarPoly<C> nvar_div_by_diff(const NVarPoly<C>& g, int i, int j) {
    // Treat g as univariate in x_i: quotient coefficients by Horner,
    // Q_{k-1} = g_k + x_j * Q_k, remainder g_0 + x_j * Q_0 must vanish.
    int top = 0;
    for (const auto& [mono, c] : g) top = std::max(top, mono[static_cast<size_t>(i)]);
    std::vector<NVarPoly<C>> by_deg(static_cast<size_t>(top) + 1);
    for (const auto& [mono, c] : g) {
        std::vector<int> rest = mono;
        const int k = rest[static_cast<size_t>(i)];
        rest[static_cast<size_t>(i)] = 0;
        by_deg[static_cast<size_t>(k)].emplace(std::move(rest), c);
    }
    auto shift_j = [&](const NVarPoly<C>& p) {
        NVarPoly<C> out;
        for (const auto& [mono, c] : p) {
            std::vector<int> m2 = mono;
            ++m2[static_cast<size_t>(j)];
            out.emplace(std::move(m2), c);
        }
        return out;
    };
    std::vector<NVarPoly<C>> quot(static_cast<size_t>(std::max(top, 1)));
    NVarPoly<C> carry;  // x_j * Q_k while walking down
    for (int k = top; k >= 1; --k) {
        NVarPoly<C> qk = by_deg[static_cast<size_t>(k)];
        for (const auto& [mono, c] : carry) nvar_add_term(qk, mono, c);
        carry = shift_j(qk);
        quot[static_cast<size_t>(k - 1)] = std::move(qk);
    }
    NVarPoly<C> rem = by_deg[0];
    for (const auto& [mono, c] : carry) nvar_add_term(rem, mono, c);
    if (!rem.empty()) throw std::logic_error("polynomial not divisible by (x_i - x_j)");
    NVarPoly<C> out;
    for (int k = 0; k < std::max(top, 1); ++k) {
        for (const auto& [mono, c] : quot[static_cast<size_t>(k)]) {
            std::vector<int> m2 = mono;
            m2[static_cast<size_t>(i)] = k;
            out.emplace(std::move(m2), c);
        }
    }
    return out;
}

// Reads off the m-basis expansion of a symmetric homogeneous polynomial: the
// m_nu coefficient is the coefficient of the dominant monomial x^nu.
template <class C>
std::map<Partition, C> collect_symmetric(const NVarPoly<C>& p, int degree, int nvars) {
    std::map<Partition, C> out;
    for (const auto& nu : partitions_of(degree)) {
        if (nu.length() > nvars) continue;
        std::vector<int> mono(static_cast<size_t>(nvars), 0);
        std::copy(nu.parts().begin(), nu.parts().end(), mono.begin());
        auto it = p.find(mono);
        if (it != p.end() && !(it->second == C())) out.emplace(nu, it->second);
    }
    return out;
}

}  // namespace jacklab::detail
