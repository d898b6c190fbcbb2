#pragma once

// Test-only brute-force oracles, deliberately independent of the DFS
// enumeration path in src/enumerate.cpp: plain combinations over the
// chord list with a quadratic crossing filter.

#include "nc/enumerate.hpp"
#include "nc/graph.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace nc_test {

inline std::vector<nc::Chord> all_chords(int n, bool diagonals_only) {
    std::vector<nc::Chord> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (diagonals_only && ((b - a == 1) || (a == 1 && b == n) || n < 4)) continue;
            out.emplace_back(a, b);
        }
    return out;
}

inline bool pairwise_non_crossing(const std::vector<nc::Chord>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (nc::crosses(edges[i], edges[j])) return false;
    return true;
}

// Visit every k-subset of chords that is pairwise non-crossing.
inline void for_each_nc_subset(int n, int k, bool diagonals_only,
                               const std::function<void(const nc::NcGraph&)>& visit) {
    std::vector<nc::Chord> chords = all_chords(n, diagonals_only);
    const int m = static_cast<int>(chords.size());
    if (k < 0 || k > m) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            std::vector<nc::Chord> edges;
            for (int i : idx) edges.push_back(chords[static_cast<std::size_t>(i)]);
            if (pairwise_non_crossing(edges)) visit(nc::NcGraph(n, edges));
            return;
        }
        for (int i = start; i <= m - (k - pos); ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

inline long long oracle_count(int n, int k, const nc::Family& f) {
    long long count = 0;
    const bool diag = f.tag == nc::FamilyTag::dissection;
    for_each_nc_subset(n, k, diag, [&](const nc::NcGraph& g) {
        switch (f.tag) {
            case nc::FamilyTag::connected:
                if (g.is_connected()) ++count;
                break;
            case nc::FamilyTag::tree:
                if (g.edge_count() == g.n - 1 && g.is_connected()) ++count;
                break;
            case nc::FamilyTag::forest:
                if (g.is_forest() && g.component_count() == f.components) ++count;
                break;
            case nc::FamilyTag::dissection:
            case nc::FamilyTag::any_graph:
                ++count;
                break;
            case nc::FamilyTag::partition:
                break;
        }
    });
    return count;
}

// Fixed points by enumerate-and-filter, the definitional route.
inline long long oracle_count_fixed(int n, int k, int d, const nc::Family& f) {
    long long count = 0;
    const bool diag = f.tag == nc::FamilyTag::dissection;
    for_each_nc_subset(n, k, diag, [&](const nc::NcGraph& g) {
        if (nc::rotate(g, n / d) != g) return;
        switch (f.tag) {
            case nc::FamilyTag::connected:
                if (g.is_connected()) ++count;
                break;
            case nc::FamilyTag::tree:
                if (g.edge_count() == g.n - 1 && g.is_connected()) ++count;
                break;
            case nc::FamilyTag::forest:
                if (g.is_forest() && g.component_count() == f.components) ++count;
                break;
            case nc::FamilyTag::dissection:
            case nc::FamilyTag::any_graph:
                ++count;
                break;
            case nc::FamilyTag::partition:
                break;
        }
    });
    return count;
}

}  // namespace nc_test
