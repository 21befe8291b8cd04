#include "jacklab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacklab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    if (text == "-") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed partition: '" + text + "'");
        long v = std::stol(tok);
        if (v <= 0 || v > 1000) throw std::invalid_argument("partition part out of range");
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.assign(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    }
    return Partition(std::move(conj));
}

int Partition::cmp(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_ ? -1 : 1;
    // Within one size: lexicographically larger part vector enumerates first.
    if (a.parts_ == b.parts_) return 0;
    return a.parts_ > b.parts_ ? -1 : 1;
}

Partition oplus(const Partition& a, const Partition& b) {
    std::vector<int> parts(std::max(a.length(), b.length()));
    for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
        parts[static_cast<size_t>(i - 1)] = a.part(i) + b.part(i);
    return Partition(std::move(parts));
}

Partition union_merge(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

Partition oplus_subset(const std::vector<Partition>& lambdas, std::uint32_t mask) {
    if (lambdas.size() < 32 && mask >> lambdas.size())
        throw std::out_of_range("subset mask addresses a missing partition");
    Partition acc;
    for (size_t i = 0; i < lambdas.size(); ++i)
        if (mask & (1u << i)) acc = oplus(acc, lambdas[i]);
    return acc;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance compares partitions of equal size");
    long sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

std::pair<int, int> arm_leg(const Partition& lambda, int col, int row) {
    if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row))
        throw std::out_of_range("box outside the diagram");
    const Partition conj = lambda.conjugate();
    return {lambda.part(row) - col, conj.part(col) - row};
}

long long z_stat(const Partition& lambda) {
    long long z = 1;
    int i = 0;
    const auto& parts = lambda.parts();
    while (i < lambda.length()) {
        int j = i;
        while (j < lambda.length() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)]) ++j;
        const int mult = j - i;
        for (int k = 1; k <= mult; ++k) z *= static_cast<long long>(parts[static_cast<size_t>(i)]) * k;
        i = j;
    }
    return z;
}

long long b_stat(const Partition& lambda) {
    long long b = 0;
    for (int p : lambda.parts()) b += static_cast<long long>(p) * (p - 1) / 2;
    return b;
}

namespace {

// hook box: alpha*arm + leg + 1 ; hook' box: alpha*(arm + 1) + leg.
Poly hook_product(const Partition& lambda, bool prime, bool skip_leg_zero) {
    Poly prod(1L);
    const Partition conj = lambda.conjugate();
    for (int row = 1; row <= lambda.length(); ++row) {
        for (int col = 1; col <= lambda.part(row); ++col) {
            const int arm = lambda.part(row) - col;
            const int leg = conj.part(col) - row;
            if (skip_leg_zero && leg == 0) continue;
            prod *= Poly::from_coeffs({Rat(prime ? leg : leg + 1), Rat(prime ? arm + 1 : arm)});
        }
    }
    return prod;
}

}  // namespace

Poly hook(const Partition& lambda) { return hook_product(lambda, false, false); }
Poly hook_prime(const Partition& lambda) { return hook_product(lambda, true, false); }
Poly hook_dprime(const Partition& lambda) { return hook_product(lambda, true, true); }

std::vector<Partition> partitions_of(int n, int bound) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    if (n > bound) throw std::invalid_argument("partitions_of: size exceeds bound");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Depth-first with parts chosen largest-first yields reverse-lex order.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

}  // namespace jacklab
