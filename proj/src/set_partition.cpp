#include "jacklab/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacklab {

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : ground_(ground_size), blocks_(std::move(blocks)) {
    if (ground_ < 0) throw std::invalid_argument("negative ground set");
    std::vector<bool> seen(static_cast<size_t>(ground_) + 1, false);
    int covered = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("empty block");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 1 || x > ground_) throw std::invalid_argument("element outside ground set");
            if (seen[static_cast<size_t>(x)]) throw std::invalid_argument("element repeated");
            seen[static_cast<size_t>(x)] = true;
            ++covered;
        }
    }
    if (covered != ground_) throw std::invalid_argument("blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::singletons(int r) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= r; ++i) blocks.push_back({i});
    return SetPartition(r, std::move(blocks));
}

SetPartition SetPartition::top(int r) {
    std::vector<int> all(static_cast<size_t>(r));
    std::iota(all.begin(), all.end(), 1);
    return SetPartition(r, {std::move(all)});
}

long long SetPartition::mobius_to_top() const {
    long long v = 1;
    for (int k = 1; k < block_count(); ++k) v *= -k;
    return v;
}

bool leq(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size())
        throw std::invalid_argument("set partitions on different ground sets");
    std::vector<int> owner(static_cast<size_t>(b.ground_size()) + 1, -1);
    for (size_t j = 0; j < b.blocks().size(); ++j)
        for (int x : b.blocks()[j]) owner[static_cast<size_t>(x)] = static_cast<int>(j);
    for (const auto& block : a.blocks()) {
        const int o = owner[static_cast<size_t>(block.front())];
        for (int x : block)
            if (owner[static_cast<size_t>(x)] != o) return false;
    }
    return true;
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size())
        throw std::invalid_argument("set partitions on different ground sets");
    const int r = a.ground_size();
    std::vector<int> parent(static_cast<size_t>(r) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
    for (const auto* part : {&a, &b})
        for (const auto& block : part->blocks())
            for (size_t i = 1; i < block.size(); ++i) unite(block[i - 1], block[i]);
    std::vector<std::vector<int>> by_root(static_cast<size_t>(r) + 1);
    for (int x = 1; x <= r; ++x) by_root[static_cast<size_t>(find(x))].push_back(x);
    std::vector<std::vector<int>> blocks;
    for (auto& v : by_root)
        if (!v.empty()) blocks.push_back(std::move(v));
    return SetPartition(r, std::move(blocks));
}

void visit_set_partitions(const std::vector<int>& elements,
                          const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(elements.size());
    // Index-based: the recursion grows `blocks`, so held references would
    // dangle across the recursive call.
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == elements.size()) {
            fn(blocks);
            return;
        }
        const int x = elements[idx];
        const size_t existing = blocks.size();
        for (size_t b = 0; b < existing; ++b) {
            blocks[b].push_back(x);
            self(self, idx + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({x});
        self(self, idx + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

std::vector<SetPartition> enumerate_set_partitions(int r) {
    if (r < 1 || r > 12) throw std::invalid_argument("set partition enumeration limited to 1..12");
    std::vector<int> ground(static_cast<size_t>(r));
    std::iota(ground.begin(), ground.end(), 1);
    std::vector<SetPartition> out;
    visit_set_partitions(ground, [&](const std::vector<std::vector<int>>& blocks) {
        out.emplace_back(r, blocks);
    });
    return out;
}

}  // namespace jacklab
