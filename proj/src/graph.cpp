#include "hypo/graph.hpp"

#include <algorithm>

namespace hypo {

Graph Graph::cycle(int n) {
    assert(n >= 3);
    Graph g(n);
    for (int i = 0; i < n; ++i) g.link(i, (i + 1) % n);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.link(u, v);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.link(u, v);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = kMaxOrder;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

Graph Graph::add_edge(Edge e) const {
    assert(!has_edge(e.u, e.v));
    Graph g = *this;
    g.link(e.u, e.v);
    return g;
}

Graph Graph::remove_edge(Edge e) const {
    assert(has_edge(e.u, e.v));
    Graph g = *this;
    g.adj_[e.u] &= ~(uint64_t{1} << e.v);
    g.adj_[e.v] &= ~(uint64_t{1} << e.u);
    return g;
}

Graph Graph::delete_vertex(int v) const {
    assert(v < n_);
    Graph g(n_ - 1);
    const uint64_t low = (uint64_t{1} << v) - 1;
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        uint64_t row = adj_[u];
        uint64_t high = v + 1 < kMaxOrder ? (row >> (v + 1)) << v : 0;
        g.adj_[u < v ? u : u - 1] = (row & low) | high;
    }
    return g;
}

int Graph::girth() const {
    // BFS from every vertex; a non-tree edge scanned from u to w gives a
    // closed walk of length dist[u] + dist[w] + 1 through the root, and the
    // minimum of these over all roots is exact.
    int best = kInfiniteGirth;
    std::array<int, kMaxOrder> dist;
    std::array<int, kMaxOrder> parent;
    std::array<int, kMaxOrder> queue;
    for (int root = 0; root < n_; ++root) {
        dist.fill(-1);
        parent.fill(-1);
        int head = 0, tail = 0;
        queue[tail++] = root;
        dist[root] = 0;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[u] >= best) break;
            for (int w : neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        if (best == 3) return 3;
    }
    return best;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
    std::vector<VertexSet> out;
    uint64_t rest = within.bits;
    while (rest) {
        uint64_t comp = rest & -rest;
        for (;;) {
            uint64_t grow = comp;
            uint64_t frontier = comp;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                grow |= adj_[v] & rest;
            }
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back({comp});
        rest &= ~comp;
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    return components(vertices()).size() == 1;
}

bool Graph::is_3_connected() const {
    assert(n_ >= 4);
    VertexSet all = vertices();
    if (components(all).size() != 1) return false;
    for (int a = 0; a < n_; ++a) {
        VertexSet rest = all;
        rest.remove(a);
        if (components(rest).size() > 1) return false;
        for (int b = a + 1; b < n_; ++b) {
            VertexSet rest2 = rest;
            rest2.remove(b);
            if (components(rest2).size() > 1) return false;
        }
    }
    return true;
}

bool Graph::is_bipartite() const {
    std::array<int, kMaxOrder> color;
    color.fill(-1);
    std::array<int, kMaxOrder> queue;
    for (int s = 0; s < n_; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int w : neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = color[u] ^ 1;
                    queue[tail++] = w;
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace hypo
