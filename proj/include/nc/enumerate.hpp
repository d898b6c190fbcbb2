#pragma once

#include "nc/graph.hpp"
#include "nc/partition.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nc {

enum class FamilyTag { connected, tree, forest, dissection, partition, any_graph };

// Membership predicate selector. `components` applies to forest,
// `blocks` to partition; both ignored elsewhere.
struct Family {
    FamilyTag tag = FamilyTag::connected;
    int components = 1;
    int blocks = 1;

    static Family connected() { return {FamilyTag::connected, 1, 1}; }
    static Family tree() { return {FamilyTag::tree, 1, 1}; }
    static Family forest(int c) { return {FamilyTag::forest, c, 1}; }
    static Family dissection() { return {FamilyTag::dissection, 1, 1}; }
    static Family partition(int b) { return {FamilyTag::partition, 1, b}; }
    static Family any_graph() { return {FamilyTag::any_graph, 1, 1}; }

    std::string name() const;
};

// Parses one of: connected, tree, forest, dissection, partition, graph.
FamilyTag parse_family_tag(const std::string& s);

// Emits each qualifying graph exactly once, lexicographically on the
// sorted edge list. Families: connected (one component), tree (spanning,
// k must equal n-1), forest(c) (acyclic, c components, k must equal n-c),
// dissection (only polygon diagonals, any k of them), any-graph.
// The partition family is enumerated by enumerate_nc_partitions instead.
void enumerate_graphs(int n, int k, const Family& f, const std::function<void(const NcGraph&)>& visit);

// Count of family members with k edges, by the same traversal.
long long count_graphs(int n, int k, const Family& f);

// One traversal of all non-crossing chord subsets, bucketing family
// members by edge count. Entry k holds the k-edge count.
std::vector<long long> count_by_edges(int n, const Family& f);

// Members fixed under rotation by n/d (d | n, else InvalidOrder).
// Enumerates unions of chord orbits rather than filtering the full
// family, which is what makes desk-scale d >= 2 checks instant; for
// d = 1 this is the plain count.
long long count_fixed(int n, int k, int d, const Family& f);

// Fixed-point counts for every k in one pass; entry k holds the count.
std::vector<long long> count_fixed_by_edges(int n, int d, const Family& f);

// The fixed graphs themselves, sorted lexicographically.
std::vector<NcGraph> fixed_graphs(int n, int k, int d, const Family& f);

// Non-crossing connected graphs on n >= 2 vertices with k edges that
// contain the chord {1, n}.
long long count_with_edge_1n(int n, int k);

// Non-crossing graphs with k edges, exactly two components, and 1 and n
// in different components (n >= 3).
long long count_two_components_separated(int n, int k);

// Connected graphs on 2n vertices fixed under the half-turn with exactly
// k edge orbits (a diameter is a singleton orbit, all other orbits are
// pairs).
long long count_antipodal_pairs(int n, int k);

}  // namespace nc
