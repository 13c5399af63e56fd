#ifndef HYPO_GRAPH_HPP
#define HYPO_GRAPH_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace hypo {

// Representation cap. Everything downstream assumes one 64-bit word per
// adjacency row.
inline constexpr int kMaxOrder = 64;

// Returned by Graph::girth() for forests.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Set of vertex indices backed by a single bit mask.
// Iteration yields members in strictly increasing order.
struct VertexSet {
    uint64_t bits = 0;

    static VertexSet full(int n) {
        assert(n >= 0 && n <= kMaxOrder);
        return {n == kMaxOrder ? ~uint64_t{0} : ((uint64_t{1} << n) - 1)};
    }
    static VertexSet single(int v) { return {uint64_t{1} << v}; }

    bool contains(int v) const { return (bits >> v) & 1; }
    void add(int v) { bits |= uint64_t{1} << v; }
    void remove(int v) { bits &= ~(uint64_t{1} << v); }
    int count() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    int first() const {
        assert(bits != 0);
        return __builtin_ctzll(bits);
    }

    VertexSet operator|(VertexSet o) const { return {bits | o.bits}; }
    VertexSet operator&(VertexSet o) const { return {bits & o.bits}; }
    VertexSet operator-(VertexSet o) const { return {bits & ~o.bits}; }
    bool operator==(const VertexSet&) const = default;

    struct iterator {
        uint64_t rest;
        int operator*() const { return __builtin_ctzll(rest); }
        iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

// Normalized undirected edge, u < v.
struct Edge {
    int u, v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) { assert(a != b); }
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on at most 64 vertices, adjacency as per-vertex
// bit rows. Values are immutable after construction; the add/delete
// operations return modified copies.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int order) : n_(order) {
        assert(order >= 0 && order <= kMaxOrder);
    }

    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const {
        assert(u < n_ && v < n_);
        return (adj_[u] >> v) & 1;
    }
    VertexSet neighbors(int v) const {
        assert(v < n_);
        return {adj_[v]};
    }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }
    int max_degree() const;
    int min_degree() const;
    VertexSet vertices() const { return VertexSet::full(n_); }

    Graph add_edge(Edge e) const;
    Graph remove_edge(Edge e) const;
    // Removes v and relabels the remaining vertices contiguously,
    // preserving their relative order.
    Graph delete_vertex(int v) const;

    // Length of a shortest cycle, kInfiniteGirth for forests.
    int girth() const;

    // Connected components of the subgraph induced on `within`,
    // ordered by smallest member.
    std::vector<VertexSet> components(VertexSet within) const;

    bool is_connected() const;
    // True iff order >= 4 and no vertex cut of size <= 2 exists.
    bool is_3_connected() const;
    bool is_bipartite() const;

    bool operator==(const Graph&) const = default;

  private:
    void link(int u, int v) {
        assert(u != v && u < n_ && v < n_);
        adj_[u] |= uint64_t{1} << v;
        adj_[v] |= uint64_t{1} << u;
    }

    int n_ = 0;
    std::array<uint64_t, kMaxOrder> adj_{};
};

}  // namespace hypo

#endif
