#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jacklab/alpha_poly.hpp"

namespace jacklab {

/// Integer partition: weakly decreasing sequence of positive parts. The empty
/// partition is allowed and is the identity for both combination operators.
/// Boxes are addressed (column, row), 1-based, French convention.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates, throws std::invalid_argument

    // "3,1,1" or "-" for the empty partition.
    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const;  // 1-based, 0 past the end
    int multiplicity(int value) const;

    Partition conjugate() const;

    // Canonical order: by size, then reverse-lexicographic within a size
    // ((n) first, (1^n) last) -- the enumeration order of partitions_of.
    static int cmp(const Partition& a, const Partition& b);
    friend bool operator<(const Partition& a, const Partition& b) { return cmp(a, b) < 0; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Entry-wise sum after zero-padding the shorter argument.
Partition oplus(const Partition& a, const Partition& b);
// Multiset merge of parts, sorted decreasing.
Partition union_merge(const Partition& a, const Partition& b);
// oplus over the members of `lambdas` selected by bitmask (bit i <-> index i);
// the empty mask yields the empty partition.
Partition oplus_subset(const std::vector<Partition>& lambdas, std::uint32_t mask);

// Dominance comparison of two partitions of the same size; throws on a size
// mismatch since the order is only defined within one grade.
bool dominance_leq(const Partition& a, const Partition& b);

// arm = lambda_row - col, leg = lambda^t_col - row; throws when the box lies
// outside the diagram.
std::pair<int, int> arm_leg(const Partition& lambda, int col, int row);

long long z_stat(const Partition& lambda);
long long b_stat(const Partition& lambda);

Poly hook(const Partition& lambda);         // prod (alpha*arm + leg + 1)
Poly hook_prime(const Partition& lambda);   // prod (alpha*arm + leg + alpha)
Poly hook_dprime(const Partition& lambda);  // hook_prime restricted to leg != 0

// All partitions of n, reverse-lexicographic largest-first; throws when n
// exceeds `bound` (the desk-scale guard) or is negative.
std::vector<Partition> partitions_of(int n, int bound = 12);

inline constexpr int kMaxPartitionWeight = 12;

}  // namespace jacklab
