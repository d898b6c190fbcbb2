#include "nc/enumerate.hpp"

#include "nc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace nc {

namespace {

// Bitset over chord indices; C(16,2) = 120 fits in two words.
struct Mask {
    std::uint64_t lo = 0, hi = 0;

    bool none() const { return lo == 0 && hi == 0; }
    int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
    bool test(int i) const {
        return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
    }
    void set(int i) {
        if (i < 64)
            lo |= std::uint64_t(1) << i;
        else
            hi |= std::uint64_t(1) << (i - 64);
    }
    // Index of the lowest set bit, which is also cleared.
    int pop_lowest() {
        if (lo) {
            int i = __builtin_ctzll(lo);
            lo &= lo - 1;
            return i;
        }
        int i = __builtin_ctzll(hi);
        hi &= hi - 1;
        return i + 64;
    }
    friend Mask operator&(Mask a, Mask b) { return {a.lo & b.lo, a.hi & b.hi}; }
    bool subset_of(const Mask& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
};

// All candidate chords for a family on n vertices, lexicographically
// ordered, with a compatibility (non-crossing) mask per chord.
struct ChordTable {
    int n = 0;
    std::vector<Chord> chords;
    std::vector<Mask> compat;

    static ChordTable build(int n, bool diagonals_only) {
        if (n > 16) throw std::invalid_argument("enumeration supports n <= 16");
        ChordTable t;
        t.n = n;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                if (diagonals_only) {
                    bool side = (b - a == 1) || (a == 1 && b == n);
                    if (side || n < 4) continue;
                }
                t.chords.emplace_back(a, b);
            }
        t.compat.resize(t.chords.size());
        for (std::size_t i = 0; i < t.chords.size(); ++i)
            for (std::size_t j = 0; j < t.chords.size(); ++j)
                if (i != j && !crosses(t.chords[i], t.chords[j])) t.compat[i].set(static_cast<int>(j));
        return t;
    }

    int index_of(const Chord& c) const {
        auto it = std::lower_bound(chords.begin(), chords.end(), c);
        if (it == chords.end() || *it != c) throw std::invalid_argument("chord not in table");
        return static_cast<int>(it - chords.begin());
    }
};

struct Dsu16 {
    int parent[16];
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

struct LeafStats {
    int components;
    bool acyclic;
    int root1;  // component of vertex 1
    int rootn;  // component of vertex n
};

LeafStats leaf_stats(const ChordTable& t, const int* chosen, int count) {
    Dsu16 dsu;
    dsu.init(t.n);
    int comps = t.n;
    bool acyclic = true;
    for (int i = 0; i < count; ++i) {
        const Chord& e = t.chords[static_cast<std::size_t>(chosen[i])];
        if (dsu.unite(e.a - 1, e.b - 1))
            --comps;
        else
            acyclic = false;
    }
    return {comps, acyclic, dsu.find(0), dsu.find(t.n - 1)};
}

bool family_accepts(const Family& f, const ChordTable& t, const int* chosen, int count) {
    switch (f.tag) {
        case FamilyTag::connected:
            return leaf_stats(t, chosen, count).components == 1;
        case FamilyTag::tree: {
            if (count != t.n - 1) return false;
            return leaf_stats(t, chosen, count).components == 1;
        }
        case FamilyTag::forest: {
            LeafStats s = leaf_stats(t, chosen, count);
            return s.acyclic && s.components == f.components;
        }
        case FamilyTag::dissection:
        case FamilyTag::any_graph:
            return true;
        case FamilyTag::partition:
            throw std::invalid_argument("partition family is not a chord-set family");
    }
    return false;
}

NcGraph graph_of(const ChordTable& t, const int* chosen, int count) {
    std::vector<Chord> edges;
    edges.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) edges.push_back(t.chords[static_cast<std::size_t>(chosen[i])]);
    return NcGraph(t.n, std::move(edges));
}

// Depth-first search over chords in ascending index order: `avail` holds
// chords above the last choice compatible with everything chosen.
// Visits each qualifying k-subset exactly once, lexicographically.
template <class Visit>
void dfs_exact(const ChordTable& t, Mask avail, int* chosen, int count, int k, Visit&& visit) {
    if (count == k) {
        visit(chosen, count);
        return;
    }
    Mask m = avail;
    while (!m.none()) {
        if (count + m.count() < k) return;  // cannot reach k any more
        int idx = m.pop_lowest();
        chosen[count] = idx;
        dfs_exact(t, m & t.compat[static_cast<std::size_t>(idx)], chosen, count + 1, k, visit);
    }
}

// Visits every non-crossing subset once (all sizes), for bucketing runs.
template <class Visit>
void dfs_all(const ChordTable& t, Mask avail, int* chosen, int count, Visit&& visit) {
    visit(chosen, count);
    Mask m = avail;
    while (!m.none()) {
        int idx = m.pop_lowest();
        chosen[count] = idx;
        dfs_all(t, m & t.compat[static_cast<std::size_t>(idx)], chosen, count + 1, visit);
    }
}

Mask full_mask(const ChordTable& t) {
    Mask m;
    for (std::size_t i = 0; i < t.chords.size(); ++i) m.set(static_cast<int>(i));
    return m;
}

bool uses_diagonal_universe(const Family& f) { return f.tag == FamilyTag::dissection; }

// ---- orbit machinery for rotation-fixed counting ----

// Orbits of the chord set under rotation by n/d steps. Orbits whose
// chords cross each other (several diameters at once) can never occur in
// a non-crossing graph and are dropped.
struct OrbitTable {
    const ChordTable* chords = nullptr;
    std::vector<std::vector<int>> members;  // chord indices, per orbit
    std::vector<int> size;
    std::vector<Mask> compat;  // orbit-vs-orbit non-crossing

    static OrbitTable build(const ChordTable& t, int d) {
        OrbitTable o;
        o.chords = &t;
        const int n = t.n;
        const int step = n / d;
        std::vector<char> seen(t.chords.size(), 0);
        for (std::size_t i = 0; i < t.chords.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> orbit;
            Chord c = t.chords[i];
            while (true) {
                int idx = t.index_of(c);
                if (seen[static_cast<std::size_t>(idx)]) break;
                seen[static_cast<std::size_t>(idx)] = 1;
                orbit.push_back(idx);
                c = Chord((c.a - 1 + step) % n + 1, (c.b - 1 + step) % n + 1);
            }
            std::sort(orbit.begin(), orbit.end());
            bool internally_ok = true;
            for (std::size_t x = 0; x < orbit.size() && internally_ok; ++x)
                for (std::size_t y = x + 1; y < orbit.size(); ++y)
                    if (crosses(t.chords[static_cast<std::size_t>(orbit[x])],
                                t.chords[static_cast<std::size_t>(orbit[y])])) {
                        internally_ok = false;
                        break;
                    }
            if (internally_ok) {
                o.size.push_back(static_cast<int>(orbit.size()));
                o.members.push_back(std::move(orbit));
            }
        }
        if (o.members.size() > 128) throw std::invalid_argument("too many orbits");
        o.compat.resize(o.members.size());
        for (std::size_t i = 0; i < o.members.size(); ++i)
            for (std::size_t j = 0; j < o.members.size(); ++j) {
                if (i == j) continue;
                bool ok = true;
                for (int ci : o.members[i]) {
                    for (int cj : o.members[j]) {
                        if (ci == cj ||
                            crosses(t.chords[static_cast<std::size_t>(ci)], t.chords[static_cast<std::size_t>(cj)])) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
                if (ok) o.compat[i].set(static_cast<int>(j));
            }
        return o;
    }

    // Expand chosen orbit ids into chord indices.
    int expand(const int* orbits, int count, int* out) const {
        int m = 0;
        for (int i = 0; i < count; ++i)
            for (int ci : members[static_cast<std::size_t>(orbits[i])]) out[m++] = ci;
        return m;
    }
};

// Visits every orbit-closed non-crossing subset once, reporting total
// edge counts via the expanded chord list.
template <class Visit>
void dfs_orbits(const OrbitTable& o, Mask avail, int* chosen, int count, Visit&& visit) {
    visit(chosen, count);
    Mask m = avail;
    while (!m.none()) {
        int idx = m.pop_lowest();
        chosen[count] = idx;
        dfs_orbits(o, m & o.compat[static_cast<std::size_t>(idx)], chosen, count + 1, visit);
    }
}

void check_order(int n, int d) {
    if (d < 1 || n % d != 0) throw InvalidOrder("rotation order d must divide n");
}

}  // namespace

std::string Family::name() const {
    switch (tag) {
        case FamilyTag::connected: return "connected";
        case FamilyTag::tree: return "tree";
        case FamilyTag::forest: return "forest";
        case FamilyTag::dissection: return "dissection";
        case FamilyTag::partition: return "partition";
        case FamilyTag::any_graph: return "graph";
    }
    return "?";
}

FamilyTag parse_family_tag(const std::string& s) {
    if (s == "connected") return FamilyTag::connected;
    if (s == "tree") return FamilyTag::tree;
    if (s == "forest") return FamilyTag::forest;
    if (s == "dissection") return FamilyTag::dissection;
    if (s == "partition") return FamilyTag::partition;
    if (s == "graph") return FamilyTag::any_graph;
    throw std::invalid_argument("unknown family: " + s);
}

void enumerate_graphs(int n, int k, const Family& f, const std::function<void(const NcGraph&)>& visit) {
    if (n < 1 || k < 0) return;
    ChordTable t = ChordTable::build(n, uses_diagonal_universe(f));
    if (k > static_cast<int>(t.chords.size())) return;
    int chosen[128];
    dfs_exact(t, full_mask(t), chosen, 0, k, [&](const int* c, int cnt) {
        if (family_accepts(f, t, c, cnt)) visit(graph_of(t, c, cnt));
    });
}

long long count_graphs(int n, int k, const Family& f) {
    if (n < 1 || k < 0) return 0;
    ChordTable t = ChordTable::build(n, uses_diagonal_universe(f));
    if (k > static_cast<int>(t.chords.size())) return 0;
    long long total = 0;
    int chosen[128];
    dfs_exact(t, full_mask(t), chosen, 0, k, [&](const int* c, int cnt) {
        if (family_accepts(f, t, c, cnt)) ++total;
    });
    return total;
}

std::vector<long long> count_by_edges(int n, const Family& f) {
    ChordTable t = ChordTable::build(n, uses_diagonal_universe(f));
    std::vector<long long> buckets(t.chords.size() + 1, 0);
    int chosen[128];
    dfs_all(t, full_mask(t), chosen, 0, [&](const int* c, int cnt) {
        if (family_accepts(f, t, c, cnt)) ++buckets[static_cast<std::size_t>(cnt)];
    });
    return buckets;
}

long long count_fixed(int n, int k, int d, const Family& f) {
    check_order(n, d);
    if (k < 0) return 0;
    if (f.tag == FamilyTag::partition) return count_fixed_partitions(n, f.blocks, d);
    auto buckets = count_fixed_by_edges(n, d, f);
    return k < static_cast<int>(buckets.size()) ? buckets[static_cast<std::size_t>(k)] : 0;
}

std::vector<long long> count_fixed_by_edges(int n, int d, const Family& f) {
    check_order(n, d);
    if (f.tag == FamilyTag::partition)
        throw std::invalid_argument("count_fixed_by_edges: partitions are not edge-graded");
    ChordTable t = ChordTable::build(n, uses_diagonal_universe(f));
    OrbitTable o = OrbitTable::build(t, d);
    std::vector<long long> buckets(t.chords.size() + 1, 0);
    Mask all;
    for (std::size_t i = 0; i < o.members.size(); ++i) all.set(static_cast<int>(i));
    int orbits[128];
    int chords[128];
    dfs_orbits(o, all, orbits, 0, [&](const int* ob, int cnt) {
        int m = o.expand(ob, cnt, chords);
        if (family_accepts(f, t, chords, m)) ++buckets[static_cast<std::size_t>(m)];
    });
    return buckets;
}

std::vector<NcGraph> fixed_graphs(int n, int k, int d, const Family& f) {
    check_order(n, d);
    if (f.tag == FamilyTag::partition)
        throw std::invalid_argument("fixed_graphs: use partition enumeration");
    ChordTable t = ChordTable::build(n, uses_diagonal_universe(f));
    OrbitTable o = OrbitTable::build(t, d);
    std::vector<NcGraph> out;
    Mask all;
    for (std::size_t i = 0; i < o.members.size(); ++i) all.set(static_cast<int>(i));
    int orbits[128];
    int chords[128];
    dfs_orbits(o, all, orbits, 0, [&](const int* ob, int cnt) {
        int m = o.expand(ob, cnt, chords);
        if (m == k && family_accepts(f, t, chords, m)) out.push_back(graph_of(t, chords, m));
    });
    std::sort(out.begin(), out.end());
    return out;
}

long long count_with_edge_1n(int n, int k) {
    if (n < 2 || k < 1) return 0;
    ChordTable t = ChordTable::build(n, false);
    const int forced = t.index_of(Chord(1, n));
    long long total = 0;
    int chosen[128];
    chosen[0] = forced;
    // Remaining chords chosen in ascending order from the compatibility
    // set of {1,n}; the forced chord itself sits outside that ordering.
    Mask avail = t.compat[static_cast<std::size_t>(forced)];
    dfs_exact(t, avail, chosen + 1, 0, k - 1, [&](const int*, int cnt) {
        if (family_accepts(Family::connected(), t, chosen, cnt + 1)) ++total;
    });
    return total;
}

long long count_two_components_separated(int n, int k) {
    if (n < 2 || k < 0) return 0;
    ChordTable t = ChordTable::build(n, false);
    long long total = 0;
    int chosen[128];
    dfs_exact(t, full_mask(t), chosen, 0, k, [&](const int* c, int cnt) {
        LeafStats s = leaf_stats(t, c, cnt);
        if (s.components == 2 && s.root1 != s.rootn) ++total;
    });
    return total;
}

long long count_antipodal_pairs(int n, int k) {
    if (n < 1 || k < 1) return 0;
    const int verts = 2 * n;
    ChordTable t = ChordTable::build(verts, false);
    OrbitTable o = OrbitTable::build(t, 2);
    long long total = 0;
    Mask all;
    for (std::size_t i = 0; i < o.members.size(); ++i) all.set(static_cast<int>(i));
    int orbits[128];
    int chords[128];
    dfs_orbits(o, all, orbits, 0, [&](const int* ob, int cnt) {
        if (cnt != k) return;
        int m = o.expand(ob, cnt, chords);
        if (family_accepts(Family::connected(), t, chords, m)) ++total;
    });
    return total;
}

}  // namespace nc
