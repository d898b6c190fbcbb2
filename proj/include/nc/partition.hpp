#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace nc {

// Non-crossing set partition of {1..n}: no a < b < c < d with a,c in one
// block and b,d in another. Blocks sorted by minimum, elements ascending.
struct NcPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    NcPartition() = default;
    NcPartition(int n_, std::vector<std::vector<int>> blocks_);

    int block_count() const { return static_cast<int>(blocks.size()); }

    friend auto operator<=>(const NcPartition&, const NcPartition&) = default;
};

bool is_non_crossing(const NcPartition& p);

NcPartition rotate(const NcPartition& p, int steps);

// Emits every non-crossing partition of {1..n} with the given number of
// blocks, in a deterministic order.
void enumerate_nc_partitions(int n, int blocks, const std::function<void(const NcPartition&)>& visit);

// Count of fixed partitions under rotation by n/d, over partitions with
// the given block count.
long long count_fixed_partitions(int n, int blocks, int d);

// Text format: `n=4; {1,4}{2,3}`.
std::string format_partition(const NcPartition& p);

std::ostream& operator<<(std::ostream& os, const NcPartition& p);

}  // namespace nc
