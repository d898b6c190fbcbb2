#include "nc/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nc {

bool crosses(const Chord& e1, const Chord& e2) {
    return (e1.a < e2.a && e2.a < e1.b && e1.b < e2.b) ||
           (e2.a < e1.a && e1.a < e2.b && e2.b < e1.b);
}

NcGraph::NcGraph(int n_, std::vector<Chord> edges_) : n(n_), edges(std::move(edges_)) {
    std::sort(edges.begin(), edges.end());
}

NcGraph NcGraph::checked(int n, std::vector<Chord> edges) {
    NcGraph g(n, std::move(edges));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Chord& e = g.edges[i];
        if (e.a < 1 || e.b > n || e.a >= e.b) throw std::invalid_argument("NcGraph: bad chord");
        if (i > 0 && g.edges[i - 1] == e) throw std::invalid_argument("NcGraph: duplicate chord");
        for (std::size_t j = i + 1; j < g.edges.size(); ++j)
            if (crosses(e, g.edges[j])) throw std::invalid_argument("NcGraph: crossing chords");
    }
    return g;
}

bool NcGraph::has_edge(const Chord& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

namespace {

struct Dsu {
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // Returns false if the two endpoints were already joined.
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

int NcGraph::component_count() const {
    Dsu dsu(n);
    int comps = n;
    for (const Chord& e : edges)
        if (dsu.unite(e.a - 1, e.b - 1)) --comps;
    return comps;
}

bool NcGraph::is_forest() const {
    Dsu dsu(n);
    for (const Chord& e : edges)
        if (!dsu.unite(e.a - 1, e.b - 1)) return false;
    return true;
}

bool NcGraph::is_spanning_tree() const {
    return edge_count() == n - 1 && is_connected();
}

NcGraph rotate(const NcGraph& g, int steps) {
    int s = steps % g.n;
    if (s < 0) s += g.n;
    std::vector<Chord> rotated;
    rotated.reserve(g.edges.size());
    for (const Chord& e : g.edges)
        rotated.emplace_back((e.a - 1 + s) % g.n + 1, (e.b - 1 + s) % g.n + 1);
    return NcGraph(g.n, std::move(rotated));
}

std::string format_graph(const NcGraph& g) {
    std::ostringstream os;
    os << "n=" << g.n << ";";
    for (const Chord& e : g.edges) os << " " << e.a << "-" << e.b;
    return os.str();
}

NcGraph parse_graph(const std::string& line) {
    std::istringstream is(line);
    std::string head;
    is >> head;
    if (head.rfind("n=", 0) != 0) throw std::invalid_argument("parse_graph: expected `n=N;`");
    if (!head.empty() && head.back() == ';') head.pop_back();
    int n = std::stoi(head.substr(2));
    std::vector<Chord> edges;
    std::string tok;
    while (is >> tok) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("parse_graph: expected `a-b`");
        int a = std::stoi(tok.substr(0, dash));
        int b = std::stoi(tok.substr(dash + 1));
        edges.emplace_back(a, b);
    }
    return NcGraph::checked(n, std::move(edges));
}

std::ostream& operator<<(std::ostream& os, const NcGraph& g) { return os << format_graph(g); }

}  // namespace nc
