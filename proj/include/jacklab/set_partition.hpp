#pragma once

#include <functional>
#include <vector>

namespace jacklab {

/// Set partition of the ground set {1..r}. Canonical form: every block sorted
/// ascending, blocks ordered by their minimum element.
class SetPartition {
public:
    SetPartition(int ground_size, std::vector<std::vector<int>> blocks);  // validates

    static SetPartition singletons(int r);
    static SetPartition top(int r);

    int ground_size() const { return ground_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int rank() const { return ground_ - block_count(); }

    // Mobius value mu(pi, {S}) of the partition lattice:
    // (-1)^(#blocks - 1) * (#blocks - 1)!.
    long long mobius_to_top() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }

private:
    int ground_;
    std::vector<std::vector<int>> blocks_;
};

// Refinement order: every block of a contained in a block of b. Both must
// live on the same ground set.
bool leq(const SetPartition& a, const SetPartition& b);

// Finest common coarsening.
SetPartition join(const SetPartition& a, const SetPartition& b);

// All set partitions of {1..r}; count is the Bell number B(r). Guarded at
// r <= 12.
std::vector<SetPartition> enumerate_set_partitions(int r);

// Visits every set partition of an arbitrary element list (used to sum over
// partitions of a subset H); blocks arrive in canonical form.
void visit_set_partitions(const std::vector<int>& elements,
                          const std::function<void(const std::vector<std::vector<int>>&)>& fn);

}  // namespace jacklab
