#ifndef HYPO_PLANAR_HPP
#define HYPO_PLANAR_HPP

#include <optional>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

// Combinatorial embedding: per-vertex cyclic neighbor order (clockwise).
// Faces arise by trace walks: the half-edge after (v, w) is (w, u) with u
// the neighbor counterclockwise of v at w.
struct RotationSystem {
    int order = 0;
    std::vector<std::vector<int>> rotations;
};

struct FaceCensus {
    std::vector<int> sizes;  // sorted ascending
    int non2_count = 0;      // faces with size mod 3 != 2
};

// Exact planarity verdict (left-right test).
bool is_planar(const Graph& g);

// An embedding when g is planar and connected, nullopt otherwise.
std::optional<RotationSystem> planar_embedding(const Graph& g);

// Faces as closed vertex walks.
std::vector<std::vector<int>> faces_of(const RotationSystem& r);

FaceCensus face_census(const RotationSystem& r);

// Reasons a cubic planar 3-connected graph is certainly not
// hypohamiltonian, in evaluation order.
enum class CubicPlanarReject {
    TooFewNon2Faces,        // fewer than three faces of size != 2 mod 3
    ThreeNon2CommonVertex,  // exactly three such faces and they meet
    Bad1FaceAdjacency,      // adjacent 1/1 or 1/0 faces (sizes mod 3)
    NoBigFace,              // no face of size >= 7
    GirthAbove5,
};

// First failed necessary condition, nullopt when all pass. Throws
// std::invalid_argument unless g is cubic, planar, and 3-connected.
std::optional<CubicPlanarReject> cubic_planar_reject(const Graph& g);

// True iff g passes all the above conditions: a candidate for the full
// hypohamiltonicity test. False means g cannot be hypohamiltonian.
bool cubic_planar_filter(const Graph& g);

}  // namespace hypo

#endif
