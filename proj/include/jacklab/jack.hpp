#pragma once

#include <condition_variable>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "jacklab/symfunc.hpp"

namespace jacklab {

inline constexpr const char* kEngineVersion = "jacklab-1";

struct CheckVerdict {
    bool ok = true;
    std::string detail;  // both sides on failure
};

/// Computes Jack polynomials in the J normalization by the triangular
/// eigen-solve: walk the dominance down-set of lambda, seed the leading
/// coefficient with hook(lambda), divide by eigenvalue gaps. Every solve is
/// certified post hoc against the defining eigen-equation.
///
/// Results are memoized in memory and, when a cache directory is configured,
/// persisted one JSON document per (lambda, basis). Distinct partitions may
/// be requested concurrently; an in-flight guard keeps two threads from
/// solving the same one.
class JackEngine {
public:
    explicit JackEngine(int max_weight = 10, std::string cache_dir = "");

    int max_weight() const { return max_weight_; }
    const std::string& cache_dir() const { return cache_dir_; }

    // m-basis expansion of J_lambda; throws when |lambda| exceeds the bound.
    SymFunc jack_m(const Partition& lambda);
    // p-basis expansion (computed from the m form and cached separately).
    SymFunc jack_p(const Partition& lambda);

    // J_lambda at alpha = 0 equals prod(lambda^t_i!) * e_{lambda^t}.
    CheckVerdict check_alpha0(const Partition& lambda);
    // <J_lambda, J_lambda> equals hook * hook'.
    CheckVerdict check_norm(const Partition& lambda);

    // Test hook: re-solve with an alternative linear extension of dominance.
    SymFunc solve_m_alternative_order(const Partition& lambda) const;

private:
    SymFunc solve_m(const Partition& lambda, bool alternative_order) const;
    SymFunc compute(const Partition& lambda, Basis basis);
    std::string cache_path(const Partition& lambda, Basis basis) const;

    int max_weight_;
    std::string cache_dir_;
    std::mutex mtx_;
    std::condition_variable cv_;
    std::map<std::pair<Partition, Basis>, SymFunc> memo_;
    std::set<std::pair<Partition, Basis>> in_flight_;
};

// Cache (de)serialization, exposed for the cache-soundness tests: the terms
// document described in the interface contract, keys sorted, byte-stable.
std::string jack_cache_document(const Partition& lambda, Basis basis, const SymFunc& expansion);
SymFunc jack_cache_parse(const std::string& text, const Partition& expected_lambda,
                         Basis expected_basis);

}  // namespace jacklab
