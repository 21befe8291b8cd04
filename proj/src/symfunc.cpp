#include "jacklab/symfunc.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "jacklab/detail/nvar.hpp"

namespace jacklab {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::p: return "p";
        case Basis::e: return "e";
    }
    return "?";
}

SymFunc SymFunc::one(Basis basis) {
    SymFunc f(basis);
    f.add_term(Partition(), RatFunc(1));
    return f;
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda) {
    SymFunc f(basis);
    f.add_term(lambda, RatFunc(1));
    return f;
}

RatFunc SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? RatFunc() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool SymFunc::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.size();
    for (const auto& [lam, c] : terms_)
        if (lam.size() != d) return false;
    return true;
}

int SymFunc::degree() const {
    int d = 0;
    for (const auto& [lam, c] : terms_) d = std::max(d, lam.size());
    return d;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(basis_);
    for (const auto& [lam, c] : terms_) r.terms_.emplace(lam, -c);
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in sum");
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in difference");
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SymFunc SymFunc::scaled(const RatFunc& c) const {
    SymFunc r(basis_);
    if (c.is_zero()) return r;
    for (const auto& [lam, coeff] : terms_) r.terms_.emplace(lam, coeff * c);
    return r;
}

bool SymFunc::is_big_o(int k) const {
    for (const auto& [lam, c] : terms_)
        if (!c.is_big_o(k)) return false;
    return true;
}

std::pair<int, Partition> SymFunc::min_valuation() const {
    if (is_zero()) throw std::domain_error("valuation of the zero function");
    bool first = true;
    int best = 0;
    Partition where;
    for (const auto& [lam, c] : terms_) {
        const int v = c.valuation_at_zero();
        if (first || v < best) {
            best = v;
            where = lam;
            first = false;
        }
    }
    return {best, where};
}

namespace {

std::string render_terms(const SymFunc& f,
                         const std::function<std::string(const RatFunc&)>& coeff_str,
                         const std::function<int(const RatFunc&)>& unit_sign, Basis basis) {
    if (f.is_zero()) return "0";
    // Degree-major; within a degree, reverse enumeration order, which puts
    // p[1,1] before p[2].
    std::vector<const std::pair<const Partition, RatFunc>*> ordered;
    for (const auto& term : f.terms()) ordered.push_back(&term);
    std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
        return Partition::cmp(b->first, a->first) < 0;
    });
    std::string out;
    for (const auto* term : ordered) {
        std::string piece;
        if (term->first.empty()) {
            piece = coeff_str(term->second);
        } else {
            const std::string mono = basis_name(basis) + "[" + term->first.to_string() + "]";
            const int u = unit_sign(term->second);
            if (u > 0)
                piece = mono;
            else if (u < 0)
                piece = "-" + mono;
            else
                piece = coeff_str(term->second) + "*" + mono;
        }
        if (out.empty())
            out = piece;
        else if (piece.front() == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

}  // namespace

std::string SymFunc::to_string() const {
    return render_terms(
        *this,
        [](const RatFunc& c) {
            std::string s = c.to_string();
            if (s.find(' ') != std::string::npos) s = "(" + s + ")";
            return s;
        },
        [](const RatFunc& c) {
            if (c == RatFunc(1)) return 1;
            if (c == RatFunc(-1)) return -1;
            return 0;
        },
        basis_);
}

std::string SymFunc::to_string_at(const Rat& alpha_value) const {
    return render_terms(
        *this, [&](const RatFunc& c) { return rat_to_string(c.eval(alpha_value)); },
        [&](const RatFunc& c) {
            const Rat v = c.eval(alpha_value);
            if (v == 1) return 1;
            if (v == -1) return -1;
            return 0;
        },
        basis_);
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("basis mismatch in product");
    switch (a.basis()) {
        case Basis::p: return p_multiply(a, b);
        case Basis::m: return m_multiply(a, b);
        case Basis::e: break;
    }
    throw std::invalid_argument("no product rule in the e basis");
}

SymFunc p_multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::p || g.basis() != Basis::p)
        throw std::invalid_argument("p_multiply requires both factors in the p basis");
    SymFunc out(Basis::p);
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) out.add_term(union_merge(a, b), ca * cb);
    return out;
}

SymFunc m_multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::m || g.basis() != Basis::m)
        throw std::invalid_argument("m_multiply requires both factors in the m basis");
    SymFunc out(Basis::m);
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            const int nvars = std::max(a.length() + b.length(), 1);
            auto ea = detail::expand_monomial_basis<Rat>(a, nvars);
            auto eb = detail::expand_monomial_basis<Rat>(b, nvars);
            auto prod = detail::nvar_mul(ea, eb);
            const RatFunc cc = ca * cb;
            for (const auto& [nu, k] : detail::collect_symmetric(prod, a.size() + b.size(), nvars))
                out.add_term(nu, cc * RatFunc(Rat(k)));
        }
    }
    return out;
}

namespace {

// Transition tables per degree: expansions of p_mu and e_mu in the m basis,
// plus the inverse maps, all with exact rational entries.
struct TransitionTables {
    std::vector<Partition> basis;                       // canonical order
    std::vector<std::map<Partition, Rat>> p_to_m;       // column per basis index
    std::vector<std::map<Partition, Rat>> e_to_m;
    std::vector<std::map<Partition, Rat>> m_to_p;
    std::vector<std::map<Partition, Rat>> m_to_e;
};

std::map<Partition, Rat> multiply_m_rat(const std::map<Partition, Rat>& f,
                                        const std::map<Partition, Rat>& g) {
    std::map<Partition, Rat> out;
    for (const auto& [a, ca] : f) {
        for (const auto& [b, cb] : g) {
            const int nvars = std::max(a.length() + b.length(), 1);
            auto prod = detail::nvar_mul(detail::expand_monomial_basis<Rat>(a, nvars),
                                         detail::expand_monomial_basis<Rat>(b, nvars));
            const Rat cc = ca * cb;
            for (const auto& [nu, k] : detail::collect_symmetric(prod, a.size() + b.size(), nvars)) {
                Rat& slot = out[nu];
                slot += cc * k;
                if (slot == 0) out.erase(nu);
            }
        }
    }
    return out;
}

// Solves M * x = rhs where column j of M is cols[j] (exact Gaussian
// elimination over the rationals).
std::vector<Rat> solve_exact(const std::vector<Partition>& basis,
                             const std::vector<std::map<Partition, Rat>>& cols,
                             const std::map<Partition, Rat>& rhs) {
    const size_t n = basis.size();
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < n; ++i) index.emplace(basis[i], i);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1, Rat(0)));
    for (size_t j = 0; j < n; ++j)
        for (const auto& [lam, v] : cols[j]) a[index.at(lam)][j] = v;
    for (const auto& [lam, v] : rhs) a[index.at(lam)][n] = v;
    for (size_t col = 0, row = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular transition matrix");
        std::swap(a[piv], a[row]);
        const Rat d = a[row][col];
        for (size_t k = col; k <= n; ++k) a[row][k] /= d;
        for (size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (size_t k = col; k <= n; ++k) a[r][k] -= f * a[row][k];
        }
        ++row;
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

const TransitionTables& transition_tables(int degree) {
    static std::map<int, TransitionTables> cache;
    static std::shared_mutex mtx;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(degree);
        if (it != cache.end()) return it->second;
    }
    std::unique_lock lock(mtx);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    TransitionTables t;
    t.basis = partitions_of(degree);
    const size_t n = t.basis.size();
    // Power sums and elementaries of one row expressed in m, then products.
    std::map<int, std::map<Partition, Rat>> p_row, e_row;
    for (int k = 1; k <= degree; ++k) {
        p_row[k] = {{Partition({k}), Rat(1)}};
        std::vector<int> ones(static_cast<size_t>(k), 1);
        e_row[k] = {{Partition(ones), Rat(1)}};
    }
    for (size_t j = 0; j < n; ++j) {
        std::map<Partition, Rat> p_acc = {{Partition(), Rat(1)}};
        std::map<Partition, Rat> e_acc = {{Partition(), Rat(1)}};
        for (int part : t.basis[j].parts()) {
            p_acc = multiply_m_rat(p_acc, p_row[part]);
            e_acc = multiply_m_rat(e_acc, e_row[part]);
        }
        t.p_to_m.push_back(std::move(p_acc));
        t.e_to_m.push_back(std::move(e_acc));
    }
    // Inverse maps: expand each m_mu in the p (resp. e) basis by solving.
    for (size_t j = 0; j < n; ++j) {
        std::map<Partition, Rat> rhs = {{t.basis[j], Rat(1)}};
        auto xp = solve_exact(t.basis, t.p_to_m, rhs);
        auto xe = solve_exact(t.basis, t.e_to_m, rhs);
        std::map<Partition, Rat> mp, me;
        for (size_t i = 0; i < n; ++i) {
            if (xp[i] != 0) mp.emplace(t.basis[i], xp[i]);
            if (xe[i] != 0) me.emplace(t.basis[i], xe[i]);
        }
        t.m_to_p.push_back(std::move(mp));
        t.m_to_e.push_back(std::move(me));
    }
    return cache.emplace(degree, std::move(t)).first->second;
}

SymFunc apply_transition(const SymFunc& f, Basis target,
                         const std::vector<std::map<Partition, Rat>> TransitionTables::*table) {
    SymFunc out(target);
    // Group by degree so the tables stay per-grade.
    std::map<int, std::vector<std::pair<Partition, RatFunc>>> by_degree;
    for (const auto& [lam, c] : f.terms()) by_degree[lam.size()].push_back({lam, c});
    for (const auto& [deg, terms] : by_degree) {
        if (deg > kMaxPartitionWeight) throw std::invalid_argument("conversion degree exceeds bound");
        const TransitionTables& t = transition_tables(deg);
        std::map<Partition, size_t> index;
        for (size_t i = 0; i < t.basis.size(); ++i) index.emplace(t.basis[i], i);
        for (const auto& [lam, c] : terms) {
            const auto& col = (t.*table)[index.at(lam)];
            for (const auto& [nu, v] : col) out.add_term(nu, c * RatFunc(v));
        }
    }
    return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    switch (f.basis()) {
        case Basis::m:
            return apply_transition(f, target, target == Basis::p ? &TransitionTables::m_to_p
                                                                  : &TransitionTables::m_to_e);
        case Basis::p:
            if (target == Basis::m) return apply_transition(f, target, &TransitionTables::p_to_m);
            return convert(convert(f, Basis::m), target);
        case Basis::e:
            if (target == Basis::m) return apply_transition(f, target, &TransitionTables::e_to_m);
            return convert(convert(f, Basis::m), target);
    }
    throw std::logic_error("unreachable");
}

RatFunc scalar_product_alpha(const SymFunc& f, const SymFunc& g) {
    const SymFunc fp = convert(f, Basis::p);
    const SymFunc gp = convert(g, Basis::p);
    RatFunc acc;
    for (const auto& [lam, cf] : fp.terms()) {
        const RatFunc cg = gp.coeff(lam);
        if (cg.is_zero()) continue;
        acc += cf * cg * RatFunc(Poly::monomial(rat_of(z_stat(lam)), lam.length()));
    }
    return acc;
}

}  // namespace jacklab
