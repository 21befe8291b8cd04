#include "jacklab/jack.hpp"

#include <json.hpp>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "jacklab/operators.hpp"

namespace jacklab {

namespace fs = std::filesystem;
using nlohmann::json;

JackEngine::JackEngine(int max_weight, std::string cache_dir)
    : max_weight_(max_weight), cache_dir_(std::move(cache_dir)) {
    if (max_weight_ < 0 || max_weight_ > kMaxPartitionWeight)
        throw std::invalid_argument("jack weight bound outside 0..12");
    if (!cache_dir_.empty()) fs::create_directories(cache_dir_);
}

namespace {

// Partitions strictly dominated by lambda (plus lambda itself), in canonical
// enumeration order, which linearly extends dominance downward.
std::vector<Partition> dominance_downset(const Partition& lambda) {
    std::vector<Partition> out;
    for (const auto& nu : partitions_of(lambda.size()))
        if (dominance_leq(nu, lambda)) out.push_back(nu);
    return out;
}

}  // namespace

SymFunc JackEngine::solve_m(const Partition& lambda, bool alternative_order) const {
    const int n = lambda.size();
    const int nvars = std::max(n, 1);
    std::vector<Partition> order = dominance_downset(lambda);
    if (alternative_order) {
        // Another linear extension: stable-sort by length first. Dominated
        // partitions never have smaller length, so this stays an extension.
        std::stable_sort(order.begin(), order.end(), [](const Partition& a, const Partition& b) {
            return a.length() < b.length();
        });
    }

    const DMatrices& dm = dalpha_matrices(n, nvars);
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < dm.basis.size(); ++i) index.emplace(dm.basis[i], i);

    const Poly ev_lambda = dalpha_eigenvalue(lambda, nvars);
    std::map<Partition, RatFunc> coeffs;
    coeffs.emplace(lambda, RatFunc(hook(lambda)));
    for (const Partition& nu : order) {
        if (nu == lambda) continue;
        const size_t row = index.at(nu);
        RatFunc acc;
        for (const auto& [rho, a_rho] : coeffs) {
            if (rho == nu) continue;
            const size_t col = index.at(rho);
            Poly entry = Poly(dm.d1[row][col]);
            entry += Poly::monomial(dm.d2[row][col], 1);
            if (!entry.is_zero()) acc += a_rho * RatFunc(entry);
        }
        Poly gap = ev_lambda - dalpha_eigenvalue(nu, nvars);
        if (gap.is_zero())
            throw std::logic_error("eigenvalue collision inside the dominance down-set of " +
                                   lambda.to_string());
        const RatFunc value = acc / RatFunc(gap);
        if (!value.is_zero()) coeffs.emplace(nu, value);
    }

    SymFunc result(Basis::m);
    for (const auto& [nu, c] : coeffs) result.add_term(nu, c);

    // The correctness certificate is the defining eigen-equation itself.
    SymFunc residual = apply_Dalpha(result, nvars) - result.scaled(RatFunc(ev_lambda));
    if (!residual.is_zero())
        throw std::logic_error("eigen-solve certificate failed for " + lambda.to_string());
    return result;
}

SymFunc JackEngine::solve_m_alternative_order(const Partition& lambda) const {
    return solve_m(lambda, true);
}

std::string JackEngine::cache_path(const Partition& lambda, Basis basis) const {
    std::string stem = "jack_" + basis_name(basis) + "_";
    if (lambda.empty()) {
        stem += "empty";
    } else {
        for (size_t i = 0; i < lambda.parts().size(); ++i) {
            if (i) stem += "-";
            stem += std::to_string(lambda.parts()[i]);
        }
    }
    return (fs::path(cache_dir_) / (stem + ".json")).string();
}

namespace {

json poly_to_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
    return coeffs;
}

Poly poly_from_json(const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_string(c.get<std::string>()));
    return Poly::from_coeffs(std::move(coeffs));
}

json partition_to_json(const Partition& lambda) {
    json parts = json::array();
    for (int p : lambda.parts()) parts.push_back(p);
    return parts;
}

Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& p : j) parts.push_back(p.get<int>());
    return Partition(std::move(parts));
}

}  // namespace

std::string jack_cache_document(const Partition& lambda, Basis basis, const SymFunc& expansion) {
    json doc;
    doc["lambda"] = partition_to_json(lambda);
    doc["basis"] = basis_name(basis);
    json terms = json::array();
    for (const auto& [mu, c] : expansion.terms()) {
        json term;
        term["mu"] = partition_to_json(mu);
        term["coeff"] = {{"num", poly_to_json(c.num())}, {"den", poly_to_json(c.den())}};
        terms.push_back(term);
    }
    doc["terms"] = terms;
    doc["engine_version"] = kEngineVersion;
    return doc.dump(2) + "\n";
}

SymFunc jack_cache_parse(const std::string& text, const Partition& expected_lambda,
                         Basis expected_basis) {
    json doc = json::parse(text);
    if (doc.at("engine_version").get<std::string>() != kEngineVersion)
        throw std::runtime_error("engine version mismatch");
    if (partition_from_json(doc.at("lambda")) != expected_lambda ||
        doc.at("basis").get<std::string>() != basis_name(expected_basis))
        throw std::runtime_error("cache document does not match its key");
    SymFunc f(expected_basis);
    for (const auto& term : doc.at("terms")) {
        f.add_term(partition_from_json(term.at("mu")),
                   RatFunc(poly_from_json(term.at("coeff").at("num")),
                           poly_from_json(term.at("coeff").at("den"))));
    }
    return f;
}

SymFunc JackEngine::compute(const Partition& lambda, Basis basis) {
    if (lambda.size() > max_weight_)
        throw std::invalid_argument("partition weight " + std::to_string(lambda.size()) +
                                    " exceeds the engine bound " + std::to_string(max_weight_));
    const std::pair<Partition, Basis> key{lambda, basis};
    std::unique_lock lock(mtx_);
    for (;;) {
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (!in_flight_.count(key)) break;
        cv_.wait(lock);
    }
    in_flight_.insert(key);
    lock.unlock();

    SymFunc result(basis);
    try {
        bool loaded = false;
        const std::string path = cache_dir_.empty() ? "" : cache_path(lambda, basis);
        if (!path.empty() && fs::exists(path)) {
            try {
                std::ifstream in(path);
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                result = jack_cache_parse(text, lambda, basis);
                loaded = true;
            } catch (const std::exception&) {
                loaded = false;  // stale or foreign document: recompute
            }
        }
        if (!loaded) {
            result = basis == Basis::m ? solve_m(lambda, false)
                                       : convert(jack_m(lambda), Basis::p);
            if (!path.empty()) {
                const std::string doc = jack_cache_document(lambda, basis, result);
                const std::string tmp = path + ".tmp." + std::to_string(::getpid());
                {
                    std::ofstream out(tmp, std::ios::binary);
                    out << doc;
                }
                fs::rename(tmp, path);
            }
        }
    } catch (...) {
        lock.lock();
        in_flight_.erase(key);
        cv_.notify_all();
        throw;
    }

    lock.lock();
    in_flight_.erase(key);
    auto it = memo_.emplace(key, std::move(result)).first;
    cv_.notify_all();
    return it->second;
}

SymFunc JackEngine::jack_m(const Partition& lambda) { return compute(lambda, Basis::m); }

SymFunc JackEngine::jack_p(const Partition& lambda) { return compute(lambda, Basis::p); }

CheckVerdict JackEngine::check_alpha0(const Partition& lambda) {
    const SymFunc jm = jack_m(lambda);
    SymFunc at_zero(Basis::m);
    for (const auto& [mu, c] : jm.terms()) at_zero.add_term(mu, RatFunc(c.eval(Rat(0))));
    const Partition conj = lambda.conjugate();
    Rat factor(1);
    for (int p : conj.parts())
        for (int k = 2; k <= p; ++k) factor *= k;
    SymFunc expected = convert(SymFunc::basis_element(Basis::e, conj), Basis::m)
                           .scaled(RatFunc(factor));
    if (at_zero == expected) return {};
    return {false, "alpha=0 value " + at_zero.to_string() + " vs " + expected.to_string()};
}

CheckVerdict JackEngine::check_norm(const Partition& lambda) {
    const RatFunc lhs = scalar_product_alpha(jack_p(lambda), jack_p(lambda));
    const RatFunc rhs = RatFunc(hook(lambda) * hook_prime(lambda));
    if (lhs == rhs) return {};
    return {false, "<J,J> = " + lhs.to_string() + " vs hook*hook' = " + rhs.to_string()};
}

}  // namespace jacklab
