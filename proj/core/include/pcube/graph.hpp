#ifndef PCUBE_GRAPH_HPP
#define PCUBE_GRAPH_HPP

#include <utility>
#include <vector>

#include "pcube/errors.hpp"

namespace pcube {

// Plain undirected graph, 0-indexed, loop-free, duplicate-free. Edges are
// kept sorted with u < v. Connectivity is not an invariant of this struct;
// operations that need it check and throw DisconnectedGraph.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    bool connected() const;
};

using DistTable = std::vector<std::vector<int>>;

// All-pairs shortest path lengths by BFS from every vertex.
DistTable distances(const Graph& g);

}  // namespace pcube

#endif
