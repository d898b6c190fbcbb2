#include "nc/partition.hpp"

#include "nc/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nc {

namespace {

void normalize(std::vector<std::vector<int>>& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) { return x.front() < y.front(); });
}

// Two blocks cross iff neither fits inside a single gap of the other.
bool blocks_cross(const std::vector<int>& x, const std::vector<int>& y) {
    // Find the gap of x holding y's first element; all of y must share it.
    auto gap_of = [&x](int v) {
        // Gap index g: v lies strictly between x[g-1] and x[g]; 0 means
        // before x.front(), x.size() means after x.back().
        return std::lower_bound(x.begin(), x.end(), v) - x.begin();
    };
    auto g0 = gap_of(y.front());
    for (int v : y)
        if (gap_of(v) != g0) return true;
    return false;
}

}  // namespace

NcPartition::NcPartition(int n_, std::vector<std::vector<int>> blocks_) : n(n_), blocks(std::move(blocks_)) {
    normalize(blocks);
}

bool is_non_crossing(const NcPartition& p) {
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < p.blocks.size(); ++j)
            if (blocks_cross(p.blocks[i], p.blocks[j])) return false;
    return true;
}

NcPartition rotate(const NcPartition& p, int steps) {
    int s = steps % p.n;
    if (s < 0) s += p.n;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int v : b) nb.push_back((v - 1 + s) % p.n + 1);
        blocks.push_back(std::move(nb));
    }
    return NcPartition(p.n, std::move(blocks));
}

void enumerate_nc_partitions(int n, int blocks, const std::function<void(const NcPartition&)>& visit) {
    if (n < 1 || blocks < 1 || blocks > n) return;
    // Restricted-growth assignment with a non-crossing check per block pair;
    // element v joins an existing open block only if no member of another
    // block lies between v and that block's latest element.
    std::vector<std::vector<int>> cur;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            if (static_cast<int>(cur.size()) == blocks) {
                NcPartition p(n, cur);
                if (is_non_crossing(p)) visit(p);
            }
            return;
        }
        if (static_cast<int>(cur.size()) < blocks) {
            cur.emplace_back(1, v);
            self(self, v + 1);
            cur.pop_back();
        }
        for (auto& b : cur) {
            // Remaining elements must still be able to fill missing blocks.
            if (static_cast<int>(cur.size()) + (n - v) < blocks) break;
            b.push_back(v);
            self(self, v + 1);
            b.pop_back();
        }
    };
    rec(rec, 1);
}

long long count_fixed_partitions(int n, int blocks, int d) {
    if (d < 1 || n % d != 0) throw InvalidOrder("count_fixed_partitions: d must divide n");
    const int s = n / d;
    long long count = 0;
    enumerate_nc_partitions(n, blocks, [&](const NcPartition& p) {
        if (rotate(p, s) == p) ++count;
    });
    return count;
}

std::string format_partition(const NcPartition& p) {
    std::ostringstream os;
    os << "n=" << p.n << ";";
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        os << (bi == 0 ? " {" : "{");
        const auto& b = p.blocks[bi];
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) os << ",";
            os << b[i];
        }
        os << "}";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const NcPartition& p) { return os << format_partition(p); }

}  // namespace nc
