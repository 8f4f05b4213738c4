#include "pcube/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace pcube {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n <= 0) throw PcError(Errc::EmptyGraph, "a graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw PcError(Errc::BadParameter, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n) throw PcError(Errc::BadIndex, "edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw PcError(Errc::BadParameter, "duplicate edge");

    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == n;
}

DistTable distances(const Graph& g) {
    if (!g.connected()) throw PcError(Errc::DisconnectedGraph);
    DistTable d(g.n, std::vector<int>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        auto& row = d[s];
        row[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u])
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    q.push(v);
                }
        }
    }
    return d;
}

}  // namespace pcube
