#include "hypo/canon.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "hypo/graph6.hpp"

namespace hypo {

namespace {

// Canonical labeling by iterated equitable refinement plus backtracking
// over the cells of the partition, keeping the lexicographically minimal
// relabeled adjacency matrix. Leaves whose encoding ties the current best
// yield automorphisms, which prune branches equivalent to explored ones.
class Canonizer {
  public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).bits;
    }

    Graph run() {
        std::vector<std::vector<int>> cells;
        if (n_ > 0) {
            cells.emplace_back(n_);
            for (int v = 0; v < n_; ++v) cells[0][v] = v;
        }
        explore(cells, {});
        Graph out(n_);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((best_rows_[i] >> j) & 1) edges.emplace_back(i, j);
        return Graph::from_edges(n_, edges);
    }

  private:
    static constexpr size_t kMaxGenerators = 128;

    void refine(std::vector<std::vector<int>>& cells) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t s = 0; s < cells.size(); ++s) {
                uint64_t smask = 0;
                for (int v : cells[s]) smask |= uint64_t{1} << v;
                for (size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() <= 1) continue;
                    auto count = [&](int v) {
                        return __builtin_popcountll(adj_[v] & smask);
                    };
                    int c0 = count(cells[c][0]);
                    bool uniform = true;
                    for (int v : cells[c])
                        if (count(v) != c0) {
                            uniform = false;
                            break;
                        }
                    if (uniform) continue;
                    // Split cell c by neighbor count toward s, ascending.
                    std::stable_sort(cells[c].begin(), cells[c].end(),
                                     [&](int a, int b) { return count(a) < count(b); });
                    std::vector<std::vector<int>> parts;
                    for (int v : cells[c]) {
                        if (parts.empty() || count(parts.back()[0]) != count(v))
                            parts.emplace_back();
                        parts.back().push_back(v);
                    }
                    cells.erase(cells.begin() + c);
                    cells.insert(cells.begin() + c, parts.begin(), parts.end());
                    changed = true;
                    // Restart scanning; cell indices moved.
                    s = static_cast<size_t>(-1);
                    break;
                }
            }
        }
    }

    void explore(std::vector<std::vector<int>> cells, std::vector<int> fixed) {
        refine(cells);
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            record_leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (equivalent_to_tried(v, fixed, tried)) continue;
            auto child = cells;
            std::vector<int> rest = child[target];
            rest.erase(std::find(rest.begin(), rest.end(), v));
            child[target] = {v};
            child.insert(child.begin() + target + 1, rest);
            auto child_fixed = fixed;
            child_fixed.push_back(v);
            explore(std::move(child), std::move(child_fixed));
            tried.push_back(v);
        }
    }

    bool equivalent_to_tried(int v, const std::vector<int>& fixed,
                             const std::vector<int>& tried) const {
        for (const auto& sigma : automorphisms_) {
            bool fixes_prefix = true;
            for (int u : fixed)
                if (sigma[u] != u) {
                    fixes_prefix = false;
                    break;
                }
            if (!fixes_prefix) continue;
            if (std::find(tried.begin(), tried.end(), sigma[v]) != tried.end())
                return true;
        }
        return false;
    }

    void record_leaf(const std::vector<std::vector<int>>& cells) {
        std::array<int, kMaxOrder> perm;  // position -> original vertex
        std::array<int, kMaxOrder> pos;   // original vertex -> position
        for (size_t i = 0; i < cells.size(); ++i) {
            perm[i] = cells[i][0];
            pos[cells[i][0]] = static_cast<int>(i);
        }
        std::array<uint64_t, kMaxOrder> rows{};
        for (int i = 0; i < n_; ++i) {
            uint64_t row = 0;
            for (uint64_t rest = adj_[perm[i]]; rest;) {
                int u = __builtin_ctzll(rest);
                rest &= rest - 1;
                row |= uint64_t{1} << pos[u];
            }
            rows[i] = row;
        }
        if (!have_best_) {
            have_best_ = true;
            best_rows_ = rows;
            best_perm_ = perm;
            return;
        }
        int cmp = 0;
        for (int i = 0; i < n_; ++i) {
            if (rows[i] != best_rows_[i]) {
                cmp = rows[i] < best_rows_[i] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0) {
            best_rows_ = rows;
            best_perm_ = perm;
        } else if (cmp == 0 && automorphisms_.size() < kMaxGenerators) {
            // Both relabelings produce the same matrix, so mapping this
            // leaf's labels onto the best leaf's labels is an automorphism.
            std::vector<int> sigma(n_);
            for (int i = 0; i < n_; ++i) sigma[perm[i]] = best_perm_[i];
            bool identity = true;
            for (int v = 0; v < n_; ++v)
                if (sigma[v] != v) {
                    identity = false;
                    break;
                }
            if (!identity) automorphisms_.push_back(std::move(sigma));
        }
    }

    const Graph& g_;
    int n_;
    std::array<uint64_t, kMaxOrder> adj_;
    bool have_best_ = false;
    std::array<uint64_t, kMaxOrder> best_rows_{};
    std::array<int, kMaxOrder> best_perm_{};
    std::vector<std::vector<int>> automorphisms_;
};

// Backtracking existence test: is there an automorphism fixing
// 0..prefix-1 pointwise and mapping prefix -> target?
class AutomorphismExists {
  public:
    AutomorphismExists(const Graph& g) : g_(g), n_(g.order()) {}

    bool check(int prefix, int target) {
        image_.assign(n_, -1);
        used_.assign(n_, false);
        for (int v = 0; v < prefix; ++v) {
            image_[v] = v;
            used_[v] = true;
        }
        if (!consistent(prefix, target)) return false;
        image_[prefix] = target;
        used_[target] = true;
        return extend(prefix + 1);
    }

  private:
    bool consistent(int v, int w) const {
        if (g_.degree(v) != g_.degree(w)) return false;
        for (int u = 0; u < n_; ++u)
            if (image_[u] >= 0 && g_.has_edge(u, v) != g_.has_edge(image_[u], w))
                return false;
        return true;
    }

    bool extend(int v) {
        if (v == n_) return true;
        if (image_[v] >= 0) return extend(v + 1);
        for (int w = 0; w < n_; ++w) {
            if (used_[w] || !consistent(v, w)) continue;
            image_[v] = w;
            used_[w] = true;
            if (extend(v + 1)) return true;
            image_[v] = -1;
            used_[w] = false;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<int> image_;
    std::vector<bool> used_;
};

}  // namespace

Graph canonical_graph(const Graph& g) { return Canonizer(g).run(); }

CanonicalForm canonical_form(const Graph& g) {
    return {encode_graph6(canonical_graph(g))};
}

uint64_t automorphism_group_size(const Graph& g) {
    const int n = g.order();
    assert(n <= 20);
    // Stabilizer chain on base 0, 1, ..., n-1: the group order is the
    // product of the orbit sizes of v under the stabilizer of 0..v-1.
    uint64_t size = 1;
    AutomorphismExists search(g);
    for (int v = 0; v < n; ++v) {
        uint64_t orbit = 0;
        for (int w = 0; w < n; ++w)
            if (search.check(v, w)) ++orbit;
        size *= orbit;
    }
    return size;
}

DedupStore::DedupStore(size_t level_budget) : budget_(level_budget) {
    const int max_edges = kMaxOrder * (kMaxOrder - 1) / 2;
    levels_.resize(max_edges + 1);
    for (auto& level : levels_) level = std::make_unique<Level>();
}

bool DedupStore::insert_if_new(const Graph& g) {
    std::string form = canonical_form(g).bytes;
    Level& level = *levels_[g.edge_count()];
    std::lock_guard<std::mutex> lock(level.mu);
    if (level.degraded) return true;
    if (level.forms.size() >= budget_) {
        level.degraded = true;
        level.forms.clear();
        return true;
    }
    return level.forms.insert(std::move(form)).second;
}

size_t DedupStore::degraded_levels() const {
    size_t count = 0;
    for (const auto& level : levels_)
        if (level->degraded) ++count;
    return count;
}

}  // namespace hypo
