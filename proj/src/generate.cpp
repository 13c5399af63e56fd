#include "hypo/generate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "hypo/graph6.hpp"
#include "hypo/hamilton.hpp"
#include "hypo/obstruction.hpp"
#include "hypo/planar.hpp"

namespace hypo {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    prune_hamiltonian += o.prune_hamiltonian;
    prune_seen += o.prune_seen;
    prune_girth += o.prune_girth;
    prune_planarity += o.prune_planarity;
    hits_a += o.hits_a;
    hits_b += o.hits_b;
    hits_c += o.hits_c;
    hits_degree2 += o.hits_degree2;
    hits_triangle += o.hits_triangle;
    outputs += o.outputs;
    max_edges_added = std::max(max_edges_added, o.max_edges_added);
    wall_seconds += o.wall_seconds;
    return *this;
}

namespace {

uint32_t rotate_mask(uint32_t mask, int r, int len) {
    const uint32_t all = (len == 32) ? ~0u : ((1u << len) - 1);
    return ((mask >> r) | (mask << (len - r))) & all;
}

uint32_t reverse_mask(uint32_t mask, int len) {
    uint32_t out = 0;
    for (int i = 0; i < len; ++i)
        if ((mask >> i) & 1) out |= 1u << (len - 1 - i);
    return out;
}

bool dihedral_minimal(uint32_t mask, int len) {
    uint32_t rev = reverse_mask(mask, len);
    for (int r = 0; r < len; ++r) {
        if (rotate_mask(mask, r, len) < mask) return false;
        if (rotate_mask(rev, r, len) < mask) return false;
    }
    return true;
}

// Output side: global canonical deduplication in front of the sink.
class Emitter {
  public:
    explicit Emitter(OutputSink& sink) : sink_(sink) {}

    bool emit(const std::string& form) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!seen_.insert(form).second) return false;
        sink_.emit(form);
        return true;
    }

  private:
    std::mutex mu_;
    std::set<std::string> seen_;
    OutputSink& sink_;
};

class Search {
  public:
    Search(const GenConfig& cfg, DedupStore& store, Emitter& emitter,
           SearchStats& stats)
        : cfg_(cfg), store_(store), emitter_(emitter), stats_(stats) {}

    void construct(const Graph& g, int max_deg, int depth) {
        ++stats_.nodes;
        stats_.max_edges_added = std::max(stats_.max_edges_added, depth);

        if (cfg_.girth_min > 3 && g.girth() < cfg_.girth_min) {
            ++stats_.prune_girth;
            return;
        }
        if (cfg_.planar_only && depth % cfg_.planarity_interval == 0 &&
            !is_planar(g)) {
            ++stats_.prune_planarity;
            return;
        }
        if (is_hamiltonian(g)) {
            ++stats_.prune_hamiltonian;
            return;
        }
        if (!store_.insert_if_new(g)) {
            ++stats_.prune_seen;
            return;
        }

        if (cfg_.obstruction_pruning) {
            if (auto a = find_type_a(g, cfg_.perturbation_budget)) {
                ++stats_.hits_a;
                branch(g, max_deg, depth, good_a_edges(g, *a));
                return;
            }
            auto deg2 = degree_two_vertices(g);
            if (!deg2.empty()) {
                ++stats_.hits_degree2;
                branch(g, max_deg, depth, vertex_edges(g, deg2.front()));
                return;
            }
            if (auto c = find_type_c(g)) {
                ++stats_.hits_c;
                branch(g, max_deg, depth, good_c_edges(g, *c));
                return;
            }
            if (auto t = cubic_triangle_vertex(g)) {
                ++stats_.hits_triangle;
                branch(g, max_deg, depth, vertex_edges(g, *t));
                return;
            }
            if (auto b = find_type_b(g, cfg_.perturbation_budget)) {
                ++stats_.hits_b;
                branch(g, max_deg, depth, good_b_edges(g, *b));
                return;
            }
        }

        if (is_hypohamiltonian(g) && (!cfg_.planar_only || is_planar(g))) {
            assert(g.max_degree() == max_deg);
            if (emitter_.emit(canonical_form(g).bytes)) ++stats_.outputs;
        }
        branch(g, max_deg, depth, all_nonedges(g));
        return;
    }

  private:
    static std::vector<Edge> vertex_edges(const Graph& g, int v) {
        std::vector<Edge> out;
        for (int u = 0; u < g.order(); ++u)
            if (u != v && !g.has_edge(u, v)) out.emplace_back(u, v);
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::vector<Edge> all_nonedges(const Graph& g) {
        std::vector<Edge> out;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (!g.has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    void branch(const Graph& g, int max_deg, int depth,
                const std::vector<Edge>& candidates) {
        for (Edge e : candidates) {
            if (g.degree(e.u) >= max_deg || g.degree(e.v) >= max_deg) continue;
            construct(g.add_edge(e), max_deg, depth + 1);
        }
    }

    const GenConfig& cfg_;
    DedupStore& store_;
    Emitter& emitter_;
    SearchStats& stats_;
};

}  // namespace

std::vector<Graph> initial_graphs(int n, int D, bool symmetry_reduce) {
    assert(n >= 4 && D >= 3 && D <= n - 1);
    const int len = n - 1;
    assert(len <= 31);  // the generator targets order <= 32
    std::vector<Graph> seeds;
    const Graph base = [&] {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
        return Graph::from_edges(n, edges);
    }();
    // All D-subsets of the cycle vertices, ascending as masks.
    uint32_t mask = (1u << D) - 1;
    const uint32_t limit = 1u << len;
    while (mask < limit) {
        if (!symmetry_reduce || dihedral_minimal(mask, len)) {
            Graph g = base;
            for (int i = 0; i < len; ++i)
                if ((mask >> i) & 1) g = g.add_edge({i, n - 1});
            seeds.push_back(g);
        }
        // Next mask with the same popcount (Gosper).
        uint32_t c = mask & -mask;
        uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return seeds;
}

SearchStats generate(const GenConfig& cfg, OutputSink& sink) {
    assert(cfg.order >= 4 && cfg.order <= kMaxOrder);
    const int n = cfg.order;
    const int d_max = cfg.d_max < 0 ? n - 1 : std::min(cfg.d_max, n - 1);
    const int d_min = std::max(cfg.d_min, 3);
    assert(cfg.girth_min >= 3);

    const auto t0 = std::chrono::steady_clock::now();
    Emitter emitter(sink);
    SearchStats total;
    uint64_t seed_index = 0;

    for (int D = d_min; D <= d_max; ++D) {
        DedupStore store(cfg.dedup_budget);
        std::vector<Graph> seeds = initial_graphs(n, D, cfg.seed_symmetry);
        std::vector<Graph> mine;
        for (const Graph& g : seeds) {
            uint64_t idx = seed_index++;
            if (cfg.split) {
                auto [part, parts] = *cfg.split;
                if (idx % static_cast<uint64_t>(parts) !=
                    static_cast<uint64_t>(part))
                    continue;
            }
            mine.push_back(g);
        }

        const int workers = std::max(1, cfg.workers);
        if (workers == 1 || mine.size() <= 1) {
            SearchStats stats;
            Search search(cfg, store, emitter, stats);
            for (const Graph& g : mine) search.construct(g, D, 0);
            total += stats;
        } else {
            std::vector<SearchStats> per_worker(workers);
            std::atomic<size_t> next{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    Search search(cfg, store, emitter, per_worker[w]);
                    for (;;) {
                        size_t i = next.fetch_add(1);
                        if (i >= mine.size()) break;
                        search.construct(mine[i], D, 0);
                    }
                });
            for (auto& t : pool) t.join();
            for (const auto& s : per_worker) total += s;
        }
    }

    total.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return total;
}

}  // namespace hypo
