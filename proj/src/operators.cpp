#include "jacklab/operators.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "jacklab/detail/nvar.hpp"

namespace jacklab {

namespace {

// D1 f = sum_{i<j} (x_i^2 d_i f - x_j^2 d_j f) / (x_i - x_j); the numerator
// is antisymmetric in (i, j) for symmetric f, so the division is exact.
template <class C>
detail::NVarPoly<C> d1_brute(const detail::NVarPoly<C>& f, int nvars) {
    detail::NVarPoly<C> acc;
    for (int i = 0; i < nvars; ++i) {
        auto xi = detail::nvar_x2_deriv(f, i);
        for (int j = i + 1; j < nvars; ++j) {
            auto g = xi;
            for (const auto& [mono, c] : detail::nvar_x2_deriv(f, j))
                detail::nvar_add_term(g, mono, C(-c));
            for (const auto& [mono, c] : detail::nvar_div_by_diff(g, i, j))
                detail::nvar_add_term(acc, mono, c);
        }
    }
    return acc;
}

template <class C>
detail::NVarPoly<C> d2_brute(const detail::NVarPoly<C>& f, int nvars) {
    detail::NVarPoly<C> acc;
    for (const auto& [mono, c] : f) {
        Rat factor(0);
        for (int i = 0; i < nvars; ++i) {
            const long a = mono[static_cast<size_t>(i)];
            factor += Rat(a * (a - 1)) / 2;
        }
        if (factor != 0) detail::nvar_add_term(acc, mono, C(c * factor));
    }
    return acc;
}

void check_operator_args(const SymFunc& f, int nvars) {
    if (f.basis() != Basis::m)
        throw std::invalid_argument("operators act on m-basis expansions");
    if (!f.is_homogeneous())
        throw std::invalid_argument("operators act on homogeneous functions");
    if (nvars < f.degree())
        throw std::invalid_argument("restriction to fewer variables than the degree is not faithful");
}

SymFunc apply_matrix(const SymFunc& f, int nvars,
                     const std::vector<std::vector<Rat>> DMatrices::*mat) {
    check_operator_args(f, nvars);
    SymFunc out(Basis::m);
    if (f.is_zero()) return out;
    const int degree = f.degree();
    const DMatrices& dm = dalpha_matrices(degree, nvars);
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < dm.basis.size(); ++i) index.emplace(dm.basis[i], i);
    for (const auto& [lam, c] : f.terms()) {
        const size_t j = index.at(lam);
        for (size_t i = 0; i < dm.basis.size(); ++i) {
            const Rat& entry = (dm.*mat)[i][j];
            if (entry != 0) out.add_term(dm.basis[i], c * RatFunc(entry));
        }
    }
    return out;
}

}  // namespace

Poly dalpha_eigenvalue(const Partition& lambda, int nvars) {
    if (nvars < 1) throw std::invalid_argument("need at least one variable");
    return Poly::from_coeffs(
        {rat_of(static_cast<long long>(nvars - 1) * lambda.size() - b_stat(lambda.conjugate())),
         rat_of(b_stat(lambda))});
}

const DMatrices& dalpha_matrices(int degree, int nvars) {
    static std::map<std::pair<int, int>, DMatrices> cache;
    static std::shared_mutex mtx;
    const std::pair<int, int> key{degree, nvars};
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::unique_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    DMatrices dm;
    dm.basis = partitions_of(degree);
    const size_t n = dm.basis.size();
    dm.d1.assign(n, std::vector<Rat>(n, Rat(0)));
    dm.d2.assign(n, std::vector<Rat>(n, Rat(0)));
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < n; ++i) index.emplace(dm.basis[i], i);
    for (size_t j = 0; j < n; ++j) {
        if (dm.basis[j].length() > nvars) continue;
        auto f = detail::expand_monomial_basis<Rat>(dm.basis[j], nvars);
        for (const auto& [nu, c] : detail::collect_symmetric(d1_brute(f, nvars), degree, nvars))
            dm.d1[index.at(nu)][j] = c;
        for (const auto& [nu, c] : detail::collect_symmetric(d2_brute(f, nvars), degree, nvars))
            dm.d2[index.at(nu)][j] = c;
    }
    return cache.emplace(key, std::move(dm)).first->second;
}

SymFunc apply_D1(const SymFunc& f, int nvars) { return apply_matrix(f, nvars, &DMatrices::d1); }

SymFunc apply_D2(const SymFunc& f, int nvars) { return apply_matrix(f, nvars, &DMatrices::d2); }

SymFunc apply_Dalpha(const SymFunc& f, int nvars) {
    SymFunc out = apply_D1(f, nvars);
    out += apply_D2(f, nvars).scaled(RatFunc(Poly::alpha()));
    return out;
}

SymFunc apply_D12(const std::vector<SymFunc>& fs, int nvars) {
    SymFunc out(Basis::m);
    if (fs.size() < 2) return out;
    int total = 0;
    std::vector<detail::NVarPoly<RatFunc>> expanded;
    for (const auto& f : fs) {
        if (!f.is_homogeneous())
            throw std::invalid_argument("mixed derivation needs homogeneous arguments");
        total += f.degree();
        detail::NVarPoly<RatFunc> e;
        const SymFunc fm = convert(f, Basis::m);
        for (const auto& [lam, c] : fm.terms())
            for (const auto& [mono, one] : detail::expand_monomial_basis<RatFunc>(lam, nvars))
                detail::nvar_add_term(e, mono, c);
        expanded.push_back(std::move(e));
    }
    if (nvars < total)
        throw std::invalid_argument("restriction to fewer variables than the degree is not faithful");
    detail::NVarPoly<RatFunc> acc;
    for (int m = 0; m < nvars; ++m) {
        std::vector<detail::NVarPoly<RatFunc>> derived;
        derived.reserve(expanded.size());
        for (const auto& e : expanded) derived.push_back(detail::nvar_euler_deriv(e, m));
        for (size_t i = 0; i + 1 < expanded.size(); ++i) {
            for (size_t j = i + 1; j < expanded.size(); ++j) {
                detail::NVarPoly<RatFunc> prod = {{std::vector<int>(static_cast<size_t>(nvars), 0),
                                                   RatFunc(1)}};
                for (size_t k = 0; k < expanded.size(); ++k) {
                    const auto& factor = (k == i || k == j) ? derived[k] : expanded[k];
                    prod = detail::nvar_mul(prod, factor);
                    if (prod.empty()) break;
                }
                for (const auto& [mono, c] : prod) detail::nvar_add_term(acc, mono, c);
            }
        }
    }
    for (const auto& [nu, c] : detail::collect_symmetric(acc, total, nvars)) out.add_term(nu, c);
    return out;
}

}  // namespace jacklab
