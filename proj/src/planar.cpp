#include "hypo/planar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hypo {

namespace {

// Left-right planarity test with embedding extraction, following the
// standard three-phase formulation: DFS orientation with lowpoints and
// nesting depths, conflict-pair testing, then side resolution and rotation
// construction.
class LeftRight {
  public:
    explicit LeftRight(const Graph& g) : g_(g), n_(g.order()) {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u))
                if (u < v) {
                    head_.push_back(u);
                    head_.push_back(v);
                }
        m_ = static_cast<int>(head_.size()) / 2;
        for (int k = 0; k < m_; ++k)
            index_.emplace(std::pair(tail(2 * k), headv(2 * k)), k);
    }

    bool test() { return phase12(); }

    std::optional<RotationSystem> embed() {
        if (!phase12()) return std::nullopt;
        return phase3();
    }

  private:
    // Directed edge encoding: undirected edge k gives ids 2k (u->v with
    // u < v) and 2k+1 (v->u).
    int tail(int e) const { return head_[e ^ 1]; }
    int headv(int e) const { return head_[e]; }

    struct Interval {
        int low = -1, high = -1;
        bool empty() const { return low < 0 && high < 0; }
    };
    struct ConflictPair {
        Interval left, right;
    };

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }
    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.low];
        if (p.right.empty()) return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    bool phase12() {
        if (done_) return planar_;
        done_ = true;
        if (n_ > 2 && m_ > 3 * n_ - 6) return planar_ = false;

        const int de = 2 * m_;
        height_.assign(n_, -1);
        parent_edge_.assign(n_, -1);
        oriented_.assign(static_cast<size_t>(m_), false);
        lowpt_.assign(de, 0);
        lowpt2_.assign(de, 0);
        nesting_.assign(de, 0);
        out_.assign(n_, {});
        ref_.assign(de, -1);
        side_.assign(de, 1);
        lowpt_edge_.assign(de, -1);
        stack_bottom_.assign(de, 0);

        for (int v = 0; v < n_; ++v)
            if (height_[v] < 0) {
                height_[v] = 0;
                roots_.push_back(v);
                dfs_orient(v);
            }
        for (int v = 0; v < n_; ++v)
            std::sort(out_[v].begin(), out_[v].end(), [&](int a, int b) {
                return nesting_[a] < nesting_[b];
            });
        for (int r : roots_)
            if (!dfs_test(r)) return planar_ = false;
        return planar_ = true;
    }

    void dfs_orient(int v) {
        const int e = parent_edge_[v];
        for (int w : g_.neighbors(v)) {
            int k = edge_index(v, w);
            if (oriented_[k]) continue;
            oriented_[k] = true;
            int vw = directed_id(k, v, w);
            out_[v].push_back(vw);
            lowpt_[vw] = height_[v];
            lowpt2_[vw] = height_[v];
            if (height_[w] < 0) {  // tree edge
                parent_edge_[w] = vw;
                height_[w] = height_[v] + 1;
                dfs_orient(w);
            } else {  // back edge
                lowpt_[vw] = height_[w];
            }
            nesting_[vw] = 2 * lowpt_[vw];
            if (lowpt2_[vw] < height_[v]) ++nesting_[vw];  // chordal
            if (e >= 0) {
                if (lowpt_[vw] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                    lowpt_[e] = lowpt_[vw];
                } else if (lowpt_[vw] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
                }
            }
        }
    }

    bool dfs_test(int v) {
        const int e = parent_edge_[v];
        for (int ei : out_[v]) {
            int w = headv(ei);
            stack_bottom_[ei] = static_cast<int>(stack_.size());
            if (ei == parent_edge_[w]) {  // tree edge
                if (!dfs_test(w)) return false;
            } else {  // back edge
                lowpt_edge_[ei] = ei;
                stack_.push_back(ConflictPair{{}, {ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) {  // ei has a return edge
                if (ei == out_[v][0]) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
        }
        if (e >= 0) remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // Merge the return edges of ei into p.right.
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) std::swap(q.left, q.right);
            if (!q.left.empty()) return false;  // not planar
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty())
                    p.right.high = q.right.high;
                else
                    ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            } else {  // align
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (static_cast<int>(stack_.size()) != stack_bottom_[ei]);
        // Merge conflicting return edges of earlier siblings into p.left.
        while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                                   conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei)) std::swap(q.left, q.right);
            if (conflicting(q.right, ei)) return false;  // not planar
            ref_[p.right.low] = q.right.high;
            if (q.right.low >= 0) p.right.low = q.right.low;
            if (p.left.empty())
                p.left.high = q.left.high;
            else
                ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
        return true;
    }

    void remove_back_edges(int e) {
        const int u = tail(e);
        // Drop entire conflict pairs ending at the parent.
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            if (p.left.low >= 0) side_[p.left.low] = -1;
        }
        if (!stack_.empty()) {  // one more pair to trim
            ConflictPair p = stack_.back();
            stack_.pop_back();
            while (p.left.high >= 0 && headv(p.left.high) == u)
                p.left.high = ref_[p.left.high];
            if (p.left.high < 0 && p.left.low >= 0) {  // just emptied
                ref_[p.left.low] = p.right.low;
                side_[p.left.low] = -1;
                p.left.low = -1;
            }
            while (p.right.high >= 0 && headv(p.right.high) == u)
                p.right.high = ref_[p.right.high];
            if (p.right.high < 0 && p.right.low >= 0) {  // just emptied
                ref_[p.right.low] = p.left.low;
                side_[p.right.low] = -1;
                p.right.low = -1;
            }
            stack_.push_back(p);
        }
        // The side of e is the side of a highest return edge.
        if (lowpt_[e] < height_[u]) {
            int hl = stack_.back().left.high;
            int hr = stack_.back().right.high;
            if (hl >= 0 && (hr < 0 || lowpt_[hl] > lowpt_[hr]))
                ref_[e] = hl;
            else
                ref_[e] = hr;
        }
    }

    int sign(int e) {
        if (ref_[e] >= 0) {
            side_[e] = side_[e] * sign(ref_[e]);
            ref_[e] = -1;
        }
        return side_[e];
    }

    // --- phase 3: embedding ---

    RotationSystem phase3() {
        const int de = 2 * m_;
        for (int v = 0; v < n_; ++v)
            for (int ei : out_[v]) nesting_[ei] *= sign(ei);
        cw_.assign(de, -1);
        ccw_.assign(de, -1);
        first_.assign(n_, -1);
        left_ref_.assign(n_, -1);
        right_ref_.assign(n_, -1);

        for (int v = 0; v < n_; ++v) {
            std::sort(out_[v].begin(), out_[v].end(), [&](int a, int b) {
                return nesting_[a] < nesting_[b];
            });
            int prev = -1;
            for (int ei : out_[v]) {
                add_half_edge_cw(v, ei, prev);
                prev = ei;
            }
        }
        for (int r : roots_) dfs_embed(r);

        RotationSystem rs;
        rs.order = n_;
        rs.rotations.resize(n_);
        for (int v = 0; v < n_; ++v) {
            int start = first_[v];
            if (start < 0) continue;
            int e = start;
            do {
                rs.rotations[v].push_back(headv(e));
                e = cw_[e];
            } while (e != start);
        }
        return rs;
    }

    void dfs_embed(int v) {
        for (int ei : out_[v]) {
            int w = headv(ei);
            int back = ei ^ 1;  // half-edge (w -> v)
            if (ei == parent_edge_[w]) {  // tree edge
                add_half_edge_first(w, back);
                left_ref_[v] = w;
                right_ref_[v] = w;
                dfs_embed(w);
            } else {  // back edge
                if (side_[ei] == 1) {
                    add_half_edge_cw(w, back, halfedge(w, right_ref_[w]));
                } else {
                    add_half_edge_ccw(w, back, halfedge(w, left_ref_[w]));
                    left_ref_[w] = v;
                }
            }
        }
    }

    // Half-edge from v to neighbor u (either orientation id).
    int halfedge(int v, int u) const {
        int k = edge_index(v, u);
        return directed_id(k, v, u);
    }

    void add_half_edge_cw(int v, int he, int ref) {
        if (ref < 0) {
            cw_[he] = he;
            ccw_[he] = he;
            first_[v] = he;
            return;
        }
        int nxt = cw_[ref];
        cw_[ref] = he;
        cw_[he] = nxt;
        ccw_[he] = ref;
        ccw_[nxt] = he;
    }

    void add_half_edge_ccw(int v, int he, int ref) {
        if (ref < 0) {
            add_half_edge_cw(v, he, -1);
            return;
        }
        add_half_edge_cw(v, he, ccw_[ref]);
        if (first_[v] == ref) first_[v] = he;
    }

    void add_half_edge_first(int v, int he) {
        add_half_edge_ccw(v, he, first_[v]);
    }

    int edge_index(int u, int v) const {
        auto it = index_.find(u < v ? std::pair(u, v) : std::pair(v, u));
        return it->second;
    }
    int directed_id(int k, int from, int to) const {
        (void)from;
        return 2 * k + (head_[2 * k] == to ? 0 : 1);
    }
    const Graph& g_;
    int n_, m_ = 0;
    std::vector<int> head_;  // head vertex per directed edge id
    std::map<std::pair<int, int>, int> index_;

    bool done_ = false, planar_ = false;
    std::vector<int> roots_;
    std::vector<int> height_, parent_edge_;
    std::vector<bool> oriented_;
    std::vector<int> lowpt_, lowpt2_, nesting_, ref_, side_, lowpt_edge_,
        stack_bottom_;
    std::vector<std::vector<int>> out_;
    std::vector<ConflictPair> stack_;

    std::vector<int> cw_, ccw_, first_, left_ref_, right_ref_;
};

}  // namespace

bool is_planar(const Graph& g) {
    return LeftRight(g).test();
}

std::optional<RotationSystem> planar_embedding(const Graph& g) {
    if (!g.is_connected()) return std::nullopt;
    return LeftRight(g).embed();
}

std::vector<std::vector<int>> faces_of(const RotationSystem& r) {
    const int n = r.order;
    // Position of each neighbor in each rotation.
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (size_t i = 0; i < r.rotations[v].size(); ++i)
            pos[v][r.rotations[v][i]] = static_cast<int>(i);

    std::vector<std::vector<int>> faces;
    std::set<std::pair<int, int>> visited;
    for (int v = 0; v < n; ++v) {
        for (int w : r.rotations[v]) {
            if (visited.count({v, w})) continue;
            std::vector<int> walk;
            int a = v, b = w;
            do {
                visited.insert({a, b});
                walk.push_back(a);
                // Successor of (a, b): at b, the neighbor counterclockwise
                // of a.
                const auto& rot = r.rotations[b];
                int i = pos[b][a];
                int next = rot[(i + rot.size() - 1) % rot.size()];
                a = b;
                b = next;
            } while (!(a == v && b == w));
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

FaceCensus face_census(const RotationSystem& r) {
    FaceCensus c;
    for (const auto& f : faces_of(r)) c.sizes.push_back(static_cast<int>(f.size()));
    std::sort(c.sizes.begin(), c.sizes.end());
    for (int s : c.sizes)
        if (s % 3 != 2) ++c.non2_count;
    return c;
}

std::optional<CubicPlanarReject> cubic_planar_reject(const Graph& g) {
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("cubic_planar_reject: graph not cubic");
    auto emb = planar_embedding(g);
    if (!emb) throw std::invalid_argument("cubic_planar_reject: graph not planar");
    if (!g.is_3_connected())
        throw std::invalid_argument("cubic_planar_reject: graph not 3-connected");

    auto faces = faces_of(*emb);
    const int nf = static_cast<int>(faces.size());
    std::vector<int> mod3(nf);
    std::vector<int> non2;
    for (int i = 0; i < nf; ++i) {
        mod3[i] = static_cast<int>(faces[i].size()) % 3;
        if (mod3[i] != 2) non2.push_back(i);
    }
    if (static_cast<int>(non2.size()) < 3)
        return CubicPlanarReject::TooFewNon2Faces;
    if (non2.size() == 3) {
        VertexSet common = VertexSet::full(n);
        for (int i : non2) {
            VertexSet face_set;
            for (int v : faces[i]) face_set.add(v);
            common = common & face_set;
        }
        if (!common.empty()) return CubicPlanarReject::ThreeNon2CommonVertex;
    }
    // Face adjacency via shared directed edges.
    std::map<std::pair<int, int>, int> face_of;
    for (int i = 0; i < nf; ++i) {
        const auto& f = faces[i];
        for (size_t j = 0; j < f.size(); ++j)
            face_of[{f[j], f[(j + 1) % f.size()]}] = i;
    }
    for (const auto& [he, i] : face_of) {
        int j = face_of.at({he.second, he.first});
        if (i == j) continue;
        bool bad = (mod3[i] == 1 && mod3[j] == 1) ||
                   (mod3[i] == 1 && mod3[j] == 0) ||
                   (mod3[i] == 0 && mod3[j] == 1);
        if (bad) return CubicPlanarReject::Bad1FaceAdjacency;
    }
    size_t max_face = 0;
    for (const auto& f : faces) max_face = std::max(max_face, f.size());
    if (max_face < 7) return CubicPlanarReject::NoBigFace;
    if (g.girth() > 5) return CubicPlanarReject::GirthAbove5;
    return std::nullopt;
}

bool cubic_planar_filter(const Graph& g) {
    return !cubic_planar_reject(g).has_value();
}

}  // namespace hypo
