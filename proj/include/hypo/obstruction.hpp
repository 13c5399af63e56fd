#ifndef HYPO_OBSTRUCTION_HPP
#define HYPO_OBSTRUCTION_HPP

#include <optional>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

// Ordered bipartition (W, X) of the vertex set, both sides of size > 1.
struct Partition {
    VertexSet w, x;
};

enum class ObstructionKind { A, B, C };

// Witness that a graph cannot be hypocyclic:
//   A: g[W] is a disjoint union of paths and p(g[W]) >= |X|
//   B: k(g[W]) >= |X|
//   C: W independent, and for witness v in X the vertices of X - v see too
//      little of W: 2*n2 + n1 < 2|W|
struct Obstruction {
    ObstructionKind kind;
    Partition part;
    int witness = -1;  // the distinguished vertex of a type C obstruction
};

// Counts of X - v vertices with exactly one / more than one neighbor in W.
struct WNeighborCounts {
    int one = 0;
    int many = 0;
};

// Number of paths when g[W] is a disjoint union of paths (this equals the
// minimum path cover), nullopt when g[W] has a cycle or a degree-3 vertex.
std::optional<int> path_cover_count(const Graph& g, VertexSet w);

// The recursive path-cover lower bound: 0 for empty g[W];
// max(1, ceil(|V1|/2)) when g[W] has no isolated vertices or edges;
// otherwise |I| + k on the rest, where I collects the isolated vertices and
// isolated edges and V1 the degree-1 vertices.
int k_value(const Graph& g, VertexSet w);

WNeighborCounts c_counts(const Graph& g, VertexSet w, VertexSet x, int v);

// Heuristic searches used inside the generator. Sound (any returned
// obstruction satisfies its defining inequality) but not complete; a missed
// obstruction only costs search time. `budget` is the number of vertices
// the baseline partition may be perturbed by.
std::optional<Obstruction> find_type_a(const Graph& g, int budget = 1);
std::optional<Obstruction> find_type_b(const Graph& g, int budget = 1);
std::optional<Obstruction> find_type_c(const Graph& g);

// Exhaustive search over all partitions (and all witnesses for type C).
// Intended for verification; guarded to order <= 20.
std::optional<Obstruction> find_obstruction_exhaustive(const Graph& g);

// Recomputes the defining inequality of o from scratch.
bool obstruction_holds(const Graph& g, const Obstruction& o);

// The only edges whose addition can destroy the given obstruction, in
// lexicographic order of normalized (u, v).
std::vector<Edge> good_a_edges(const Graph& g, const Obstruction& o);
std::vector<Edge> good_b_edges(const Graph& g, const Obstruction& o);
std::vector<Edge> good_c_edges(const Graph& g, const Obstruction& o);

// Vertices of degree exactly 2, ascending.
std::vector<int> degree_two_vertices(const Graph& g);

// Smallest degree-3 vertex lying on a triangle, if any.
std::optional<int> cubic_triangle_vertex(const Graph& g);

// True iff some diamond (K4 minus an edge) has a central-edge endpoint of
// degree <= 4. Filter-mode check.
bool diamond_violation(const Graph& g);

// True iff g has a 3-edge-cut with both sides larger than K1, or a
// 3-vertex-cut spanning an edge, or an all-cubic 3-vertex-cut that is not
// the neighborhood of a vertex. Requires g 3-connected. Filter-mode check.
bool cut_violations(const Graph& g);

}  // namespace hypo

#endif
