#ifndef HYPO_CANON_HPP
#define HYPO_CANON_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

// Canonical graph6 encoding of the canonically relabeled graph: equal for
// isomorphic graphs, distinct otherwise.
struct CanonicalForm {
    std::string bytes;
    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

// The canonically relabeled graph itself (decode of the form).
Graph canonical_graph(const Graph& g);

// |Aut(g)| by stabilizer-chain orbit counting with backtracking existence
// tests. Check-mode nicety, guarded to order <= 20.
uint64_t automorphism_group_size(const Graph& g);

// Set of already-seen isomorphism classes, leveled by edge count. Thread
// safe; insert_if_new is an atomic test-and-insert. When a level exceeds
// the entry budget it degrades to "always new": pruning is lost for that
// level but never correctness (final outputs are deduplicated separately).
class DedupStore {
  public:
    explicit DedupStore(size_t level_budget = SIZE_MAX);

    // True iff no graph with the same canonical form and edge count was
    // inserted before (always true for degraded levels).
    bool insert_if_new(const Graph& g);

    size_t degraded_levels() const;

  private:
    struct Level {
        std::mutex mu;
        std::unordered_set<std::string> forms;
        bool degraded = false;
    };
    size_t budget_;
    std::vector<std::unique_ptr<Level>> levels_;
};

}  // namespace hypo

#endif
