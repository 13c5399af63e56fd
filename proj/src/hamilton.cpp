#include "hypo/hamilton.hpp"

#include <algorithm>

namespace hypo {

namespace {

// Depth-first extension of a partial cycle anchored at vertex 0. The path
// runs 0 .. cur; it closes when all vertices are on it and cur sees 0.
//
// Each pruning below is a necessary condition for a completion to exist,
// so the decision stays exact:
//  - every unvisited vertex needs at least 2 neighbors among the unvisited
//    vertices and the two path endpoints;
//  - an unvisited neighbor of cur with exactly 2 such neighbors forces the
//    edge from cur (cur gets no other chance to reach it);
//  - the unvisited vertices and vertex 0 must stay reachable from cur.
class CycleSearch {
  public:
    explicit CycleSearch(const Graph& g) : g_(g), n_(g.order()) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).bits;
    }

    bool run() {
        if (n_ < 3) return false;
        for (int v = 0; v < n_; ++v)
            if (g_.degree(v) < 2) return false;
        return extend(0, uint64_t{1}, 1);
    }

  private:
    bool extend(int cur, uint64_t visited, int count) {
        const uint64_t all = VertexSet::full(n_).bits;
        if (count == n_) return (adj_[cur] >> 0) & 1;
        const uint64_t cand = all & ~visited;
        const uint64_t ends = (uint64_t{1} << cur) | 1;

        // Degree feasibility and forced edges at cur.
        uint64_t forced = 0;
        for (uint64_t rest = cand; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            uint64_t avail = adj_[v] & (cand | ends);
            int d = __builtin_popcountll(avail);
            if (d < 2) return false;
            if (d == 2 && ((adj_[v] >> cur) & 1)) forced |= uint64_t{1} << v;
        }
        // The closing edge into 0 must still have a partner.
        if ((adj_[0] & (cand | (uint64_t{1} << cur))) == 0) return false;

        uint64_t branch = adj_[cur] & cand;
        if (forced) {
            int nforced = __builtin_popcountll(forced);
            if (count == 1) {
                // Both cycle edges at vertex 0 are still free; more than two
                // forced edges cannot all be used.
                if (nforced > 2) return false;
                branch = forced & -forced;
            } else {
                if (nforced > 1) return false;
                branch = forced;
            }
        }
        if (!branch) return false;

        // Connectivity of the remainder: 0 and all unvisited vertices must
        // be reachable from cur.
        {
            const uint64_t allowed = cand | 1;
            uint64_t seen = uint64_t{1} << cur;
            uint64_t frontier = seen;
            while (frontier) {
                uint64_t next = 0;
                while (frontier) {
                    int v = __builtin_ctzll(frontier);
                    frontier &= frontier - 1;
                    next |= adj_[v];
                }
                frontier = next & allowed & ~seen;
                seen |= frontier;
            }
            if ((cand & ~seen) || !(seen & 1)) return false;
        }

        // Fail-first: try neighbors of minimum remaining degree first.
        int order[kMaxOrder];
        int deg[kMaxOrder];
        int m = 0;
        for (uint64_t rest = branch; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            order[m] = v;
            deg[m] = __builtin_popcountll(adj_[v] & (cand | ends));
            ++m;
        }
        for (int i = 1; i < m; ++i) {
            int v = order[i], d = deg[i], j = i;
            while (j > 0 && deg[j - 1] > d) {
                order[j] = order[j - 1];
                deg[j] = deg[j - 1];
                --j;
            }
            order[j] = v;
            deg[j] = d;
        }
        for (int i = 0; i < m; ++i) {
            int v = order[i];
            if (extend(v, visited | (uint64_t{1} << v), count + 1)) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::array<uint64_t, kMaxOrder> adj_;
};

}  // namespace

bool is_hamiltonian(const Graph& g) {
    assert(g.order() >= 3);
    return CycleSearch(g).run();
}

bool is_hypocyclic(const Graph& g) {
    assert(g.order() >= 4);
    for (int v = 0; v < g.order(); ++v)
        if (!is_hamiltonian(g.delete_vertex(v))) return false;
    return true;
}

bool is_hypohamiltonian(const Graph& g) {
    assert(g.order() >= 4);
    if (is_hamiltonian(g)) return false;
    if (!is_hypocyclic(g)) return false;
    // Structural consequences, rechecked on every positive verdict.
    assert(g.min_degree() >= 3);
    assert(g.is_3_connected());
    assert(!g.is_bipartite());
    return true;
}

}  // namespace hypo
