#ifndef PCUBE_PARTIAL_CUBE_HPP
#define PCUBE_PARTIAL_CUBE_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "pcube/bits.hpp"
#include "pcube/graph.hpp"

namespace pcube {

// One Djokovic-Winkler class: edge set E_f together with its two
// complementary convex halfspaces.
struct ThetaClass {
    int index = 0;
    VertexSet minus_side, plus_side;
    std::vector<std::pair<int, int>> edge_set;
};

// A graph with a fixed isometric hypercube embedding. Vertex v carries a
// sign vector coords(v) in {+,-}^k, stored as a plus-mask (bit f set means
// v lies in the plus halfspace of class f). Immutable after construction.
class PartialCube {
public:
    int vertex_count() const { return n_; }
    int class_count() const { return k_; }

    const CoordSet& coords(int v) const { return coords_[v]; }
    bool on_plus_side(int v, int f) const { return coords_[v].test(f); }

    int dist(int u, int v) const { return (coords_[u] ^ coords_[v]).count(); }

    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_class(int edge_index) const { return edge_class_[edge_index]; }

    const VertexSet& halfspace(int f, bool plus) const {
        return plus ? plus_side_[f] : minus_side_[f];
    }
    const std::vector<std::pair<int, int>>& class_edges(int f) const { return class_edges_[f]; }

    std::optional<int> vertex_at(const CoordSet& c) const {
        auto it = index_.find(c);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VertexSet full_vertex_set() const { return VertexSet::full(n_); }
    CoordSet all_classes() const { return CoordSet::low_bits(k_); }

    Graph to_graph() const;

    // Canonical under graph isomorphism; lazily computed, shared by copies.
    const std::string& canonical_key() const;

    // Builds a PartialCube from per-vertex sign vectors (bit f = plus side).
    // Edges are the Hamming-distance-1 pairs. Always checks that rows are
    // distinct, every class has both sides and the graph is connected;
    // `check_isometry` additionally verifies graph distance = Hamming
    // distance (needed when the input is untrusted).
    static PartialCube from_coords(int k, std::vector<CoordSet> coords, bool check_isometry);

private:
    friend struct PartialCubeBuilder;
    PartialCube() = default;
    void finish();  // derives adj/edges/halfspaces/index from coords_

    int n_ = 0, k_ = 0;
    std::vector<CoordSet> coords_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> edge_class_;
    std::vector<VertexSet> minus_side_, plus_side_;
    std::vector<std::vector<std::pair<int, int>>> class_edges_;
    std::unordered_map<CoordSet, int, CoordSetHash> index_;
    std::shared_ptr<std::string> key_cache_ = std::make_shared<std::string>();
};

struct EmbedFailure {
    Errc reason = Errc::NotBipartite;
    std::optional<std::pair<int, int>> edge;  // set for NonConvexWSet
    std::string message;
};

using EmbedResult = std::variant<PartialCube, EmbedFailure>;

// Djokovic's criterion: g is a partial cube iff it is bipartite and both
// W-sets of every edge are convex. On success returns the canonical
// embedding: classes numbered by first edge in lexicographic order, signs
// flipped so vertex 0 is all-plus.
EmbedResult embed_partial_cube(const Graph& g);

inline bool embed_ok(const EmbedResult& r) { return std::holds_alternative<PartialCube>(r); }
inline const PartialCube& embedded(const EmbedResult& r) { return std::get<PartialCube>(r); }
inline const EmbedFailure& embed_failure(const EmbedResult& r) {
    return std::get<EmbedFailure>(r);
}

// Convenience for inputs known to be partial cubes; throws PcError otherwise.
PartialCube embed_or_throw(const Graph& g);

std::vector<ThetaClass> theta_classes(const PartialCube& pc);

}  // namespace pcube

#endif
