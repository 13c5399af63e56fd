#ifndef HYPO_GENERATE_HPP
#define HYPO_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypo/canon.hpp"
#include "hypo/graph.hpp"

namespace hypo {

struct GenConfig {
    int order = 0;
    int girth_min = 3;
    bool planar_only = false;
    int d_min = 3;
    int d_max = -1;  // -1 means order - 1
    std::optional<std::pair<int, int>> split;  // (part index, part count)
    int perturbation_budget = 1;   // obstruction-search width
    size_t dedup_budget = SIZE_MAX;  // per-level entry cap of the seen set
    bool obstruction_pruning = true;
    bool seed_symmetry = true;  // one seed per dihedral orbit
    int workers = 1;
    int planarity_interval = 1;  // test planarity every j-th edge addition
};

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t prune_hamiltonian = 0;
    uint64_t prune_seen = 0;
    uint64_t prune_girth = 0;
    uint64_t prune_planarity = 0;
    uint64_t hits_a = 0;
    uint64_t hits_b = 0;
    uint64_t hits_c = 0;
    uint64_t hits_degree2 = 0;
    uint64_t hits_triangle = 0;
    uint64_t outputs = 0;
    int max_edges_added = 0;
    double wall_seconds = 0;

    SearchStats& operator+=(const SearchStats& o);
};

// Destination for accepted graphs, one canonical graph6 line per call.
// Implementations must tolerate concurrent calls.
class OutputSink {
  public:
    virtual ~OutputSink() = default;
    virtual void emit(const std::string& graph6_line) = 0;
};

class VectorSink : public OutputSink {
  public:
    void emit(const std::string& line) override { lines.push_back(line); }
    std::vector<std::string> lines;
};

// Seeds of the search with maximum degree D: the (n-1)-cycle plus a vertex
// h joined to D cycle vertices, one representative per orbit of D-subsets
// under the dihedral symmetry of the cycle (or all subsets when
// symmetry_reduce is off).
std::vector<Graph> initial_graphs(int n, int D, bool symmetry_reduce = true);

// Runs the full search over the configured degree range. The emitted set
// is globally deduplicated by canonical form and is the same for any
// worker count; a split configuration restricts to seeds with index
// congruent to i mod m.
SearchStats generate(const GenConfig& cfg, OutputSink& sink);

}  // namespace hypo

#endif
