#include "hypo/obstruction.hpp"

#include <algorithm>

namespace hypo {

namespace {

int induced_degree(const Graph& g, VertexSet w, int v) {
    return __builtin_popcountll((g.neighbors(v) & w).bits);
}

bool valid_partition(const Graph& g, VertexSet w) {
    int cw = w.count();
    return cw > 1 && g.order() - cw > 1;
}

// Candidate W sets for the type A and B searches: the set of degree-<=2
// vertices, perturbed by moving up to `budget` vertices across.
std::vector<VertexSet> ab_candidates(const Graph& g, int budget) {
    VertexSet base;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 2) base.add(v);
    std::vector<VertexSet> out{base};
    if (budget >= 1) {
        for (int v : base) {
            VertexSet w = base;
            w.remove(v);
            out.push_back(w);
        }
        for (int v : g.vertices() - base) {
            VertexSet w = base;
            w.add(v);
            out.push_back(w);
        }
    }
    if (budget >= 2) {
        size_t singles_end = out.size();
        for (size_t i = 1; i < singles_end; ++i)
            for (size_t j = i + 1; j < singles_end; ++j) {
                uint64_t moved =
                    (out[i].bits ^ base.bits) | (out[j].bits ^ base.bits);
                if (__builtin_popcountll(moved) != 2) continue;
                out.push_back({base.bits ^ moved});
            }
    }
    return out;
}

}  // namespace

std::optional<int> path_cover_count(const Graph& g, VertexSet w) {
    for (int v : w)
        if (induced_degree(g, w, v) > 2) return std::nullopt;
    auto comps = g.components(w);
    for (const auto& comp : comps) {
        int twice_edges = 0;
        for (int v : comp) twice_edges += induced_degree(g, comp, v);
        if (twice_edges / 2 == comp.count()) return std::nullopt;  // cycle
    }
    return static_cast<int>(comps.size());
}

int k_value(const Graph& g, VertexSet w) {
    int total = 0;
    VertexSet cur = w;
    for (;;) {
        if (cur.empty()) return total;
        VertexSet isolated_piece_vertices;
        int pieces = 0;
        for (int v : cur) {
            int d = induced_degree(g, cur, v);
            if (d == 0) {
                isolated_piece_vertices.add(v);
                ++pieces;
            } else if (d == 1) {
                int u = (g.neighbors(v) & cur).first();
                if (induced_degree(g, cur, u) == 1) {
                    isolated_piece_vertices.add(v);
                    if (u < v) --pieces;  // count the edge once
                    ++pieces;
                }
            }
        }
        if (pieces == 0) {
            int deg1 = 0;
            for (int v : cur)
                if (induced_degree(g, cur, v) == 1) ++deg1;
            return total + std::max(1, (deg1 + 1) / 2);
        }
        total += pieces;
        cur = cur - isolated_piece_vertices;
    }
}

WNeighborCounts c_counts(const Graph& g, VertexSet w, VertexSet x, int v) {
    WNeighborCounts c;
    for (int u : x) {
        if (u == v) continue;
        int d = induced_degree(g, w, u);
        if (d == 1)
            ++c.one;
        else if (d > 1)
            ++c.many;
    }
    return c;
}

std::optional<Obstruction> find_type_a(const Graph& g, int budget) {
    for (VertexSet w : ab_candidates(g, budget)) {
        if (!valid_partition(g, w)) continue;
        auto p = path_cover_count(g, w);
        if (p && *p >= g.order() - w.count())
            return Obstruction{ObstructionKind::A, {w, g.vertices() - w}, -1};
    }
    return std::nullopt;
}

std::optional<Obstruction> find_type_b(const Graph& g, int budget) {
    for (VertexSet w : ab_candidates(g, budget)) {
        if (!valid_partition(g, w)) continue;
        if (k_value(g, w) >= g.order() - w.count())
            return Obstruction{ObstructionKind::B, {w, g.vertices() - w}, -1};
    }
    return std::nullopt;
}

std::optional<Obstruction> find_type_c(const Graph& g) {
    const int n = g.order();
    // Greedy maximal independent sets, one per start vertex, preferring
    // low degree. Starts are ordered the same way.
    int order[kMaxOrder];
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order, order + n, [&](int a, int b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
    });
    std::vector<uint64_t> seen;
    for (int s = 0; s < n; ++s) {
        VertexSet w = VertexSet::single(order[s]);
        VertexSet banned = g.neighbors(order[s]) | w;
        for (int i = 0; i < n; ++i) {
            int v = order[i];
            if (banned.contains(v)) continue;
            w.add(v);
            banned = banned | g.neighbors(v) | VertexSet::single(v);
        }
        // A maximal independent set can swallow too much; give X back its
        // minimum size of two.
        while (n - w.count() < 2 && w.count() > 2) {
            int last = 0;
            for (int v : w) last = v;
            w.remove(last);
        }
        if (!valid_partition(g, w)) continue;
        if (std::find(seen.begin(), seen.end(), w.bits) != seen.end()) continue;
        seen.push_back(w.bits);

        VertexSet x = g.vertices() - w;
        int n1 = 0, n2 = 0;
        int wdeg[kMaxOrder];
        for (int u : x) {
            int d = induced_degree(g, w, u);
            wdeg[u] = d;
            if (d == 1)
                ++n1;
            else if (d > 1)
                ++n2;
        }
        const int need = 2 * w.count();
        for (int v : x) {
            int m1 = n1 - (wdeg[v] == 1);
            int m2 = n2 - (wdeg[v] > 1);
            if (2 * m2 + m1 < need)
                return Obstruction{ObstructionKind::C, {w, x}, v};
        }
    }
    return std::nullopt;
}

std::optional<Obstruction> find_obstruction_exhaustive(const Graph& g) {
    const int n = g.order();
    assert(n <= 20);
    const uint64_t all = VertexSet::full(n).bits;
    for (uint64_t mask = 1; mask < all; ++mask) {
        VertexSet w{mask};
        if (!valid_partition(g, w)) continue;
        VertexSet x{all & ~mask};
        auto p = path_cover_count(g, w);
        if (p && *p >= x.count())
            return Obstruction{ObstructionKind::A, {w, x}, -1};
        if (k_value(g, w) >= x.count())
            return Obstruction{ObstructionKind::B, {w, x}, -1};
        bool independent = true;
        for (int v : w)
            if (!(g.neighbors(v) & w).empty()) {
                independent = false;
                break;
            }
        if (!independent) continue;
        for (int v : x) {
            auto c = c_counts(g, w, x, v);
            if (2 * c.many + c.one < 2 * w.count())
                return Obstruction{ObstructionKind::C, {w, x}, v};
        }
    }
    return std::nullopt;
}

bool obstruction_holds(const Graph& g, const Obstruction& o) {
    VertexSet w = o.part.w, x = o.part.x;
    if ((w & x).count() != 0) return false;
    if ((w | x) != g.vertices()) return false;
    if (w.count() <= 1 || x.count() <= 1) return false;
    switch (o.kind) {
        case ObstructionKind::A: {
            auto p = path_cover_count(g, w);
            return p && *p >= x.count();
        }
        case ObstructionKind::B:
            return k_value(g, w) >= x.count();
        case ObstructionKind::C: {
            if (o.witness < 0 || !x.contains(o.witness)) return false;
            for (int v : w)
                if (!(g.neighbors(v) & w).empty()) return false;
            auto c = c_counts(g, w, x, o.witness);
            return 2 * c.many + c.one < 2 * w.count();
        }
    }
    return false;
}

std::vector<Edge> good_a_edges(const Graph& g, const Obstruction& o) {
    assert(o.kind == ObstructionKind::A);
    VertexSet w = o.part.w;
    auto comps = g.components(w);
    int comp_of[kMaxOrder];
    for (size_t i = 0; i < comps.size(); ++i)
        for (int v : comps[i]) comp_of[v] = static_cast<int>(i);
    std::vector<Edge> out;
    for (int u : w)
        for (int v : w) {
            if (v <= u) continue;
            if (g.has_edge(u, v)) continue;
            if (comp_of[u] == comp_of[v]) continue;
            if (induced_degree(g, w, u) <= 1 || induced_degree(g, w, v) <= 1)
                out.emplace_back(u, v);
        }
    return out;
}

std::vector<Edge> good_b_edges(const Graph& g, const Obstruction& o) {
    assert(o.kind == ObstructionKind::B);
    VertexSet w = o.part.w;
    std::vector<Edge> out;
    for (int u : w)
        for (int v : w) {
            if (v <= u) continue;
            if (g.has_edge(u, v)) continue;
            if (induced_degree(g, w, u) <= 1 || induced_degree(g, w, v) <= 1)
                out.emplace_back(u, v);
        }
    return out;
}

std::vector<Edge> good_c_edges(const Graph& g, const Obstruction& o) {
    assert(o.kind == ObstructionKind::C);
    VertexSet w = o.part.w, x = o.part.x;
    std::vector<Edge> out;
    auto x_side_ok = [&](int u) {
        return x.contains(u) && u != o.witness && induced_degree(g, w, u) <= 1;
    };
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            bool both_w = w.contains(u) && w.contains(v);
            bool mixed = (w.contains(u) && x_side_ok(v)) ||
                         (w.contains(v) && x_side_ok(u));
            if (both_w || mixed) out.emplace_back(u, v);
        }
    return out;
}

std::vector<int> degree_two_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2) out.push_back(v);
    return out;
}

std::optional<int> cubic_triangle_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) continue;
        for (int u : g.neighbors(v))
            if (!(g.neighbors(u) & g.neighbors(v)).empty()) return v;
    }
    return std::nullopt;
}

bool diamond_violation(const Graph& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int c : g.neighbors(a)) {
            if (c <= a) continue;
            if ((g.neighbors(a) & g.neighbors(c)).count() >= 2 &&
                (g.degree(a) <= 4 || g.degree(c) <= 4))
                return true;
        }
    return false;
}

bool cut_violations(const Graph& g) {
    assert(g.is_3_connected());
    const int n = g.order();

    // 3-vertex cuts: spanning an edge, or all-cubic and not a neighborhood.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                VertexSet rest = g.vertices();
                rest.remove(a);
                rest.remove(b);
                rest.remove(c);
                if (g.components(rest).size() < 2) continue;
                if (g.has_edge(a, b) || g.has_edge(b, c) || g.has_edge(a, c))
                    return true;
                if (g.degree(a) == 3 && g.degree(b) == 3 && g.degree(c) == 3) {
                    VertexSet m = VertexSet::single(a) | VertexSet::single(b) |
                                  VertexSet::single(c);
                    bool is_neighborhood = false;
                    for (int z = 0; z < n; ++z)
                        if (g.neighbors(z) == m) {
                            is_neighborhood = true;
                            break;
                        }
                    if (!is_neighborhood) return true;
                }
            }

    // 3-edge cuts with both sides nontrivial. Deleting 3 edges from a
    // 3-connected graph leaves at most two components.
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    const size_t m = edges.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                Graph h = g.remove_edge(edges[i])
                              .remove_edge(edges[j])
                              .remove_edge(edges[k]);
                auto comps = h.components(h.vertices());
                if (comps.size() == 2 && comps[0].count() >= 2 &&
                    comps[1].count() >= 2)
                    return true;
            }
    return false;
}

}  // namespace hypo
