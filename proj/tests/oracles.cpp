#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace oracles {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

Graph cube_graph(int dim) {
    int n = 1 << dim;
    std::vector<std::pair<int, int>> e;
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < dim; ++b)
            if (!(x >> b & 1)) e.emplace_back(x, x | (1 << b));
    return Graph::from_edges(n, e);
}

namespace {

std::vector<std::vector<int>> bfs_all(const Graph& g) {
    std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        d[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u])
                if (d[s][v] < 0) {
                    d[s][v] = d[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return d;
}

}  // namespace

bool brute_is_partial_cube(const Graph& g) {
    if (!g.connected()) return false;
    // bipartite
    std::vector<int> color(g.n, -1);
    color[0] = 0;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u]) {
            if (color[v] < 0) {
                color[v] = color[u] ^ 1;
                q.push(v);
            } else if (color[v] == color[u]) {
                return false;
            }
        }
    }
    auto d = bfs_all(g);
    for (auto [u, v] : g.edges) {
        for (int swap = 0; swap < 2; ++swap) {
            int a = swap ? v : u, b = swap ? u : v;
            std::vector<int> w;
            for (int x = 0; x < g.n; ++x)
                if (d[x][a] < d[x][b]) w.push_back(x);
            for (int x : w)
                for (int y : w)
                    for (int z = 0; z < g.n; ++z)
                        if (d[x][z] + d[z][y] == d[x][y] &&
                            std::find(w.begin(), w.end(), z) == w.end())
                            return false;
        }
    }
    return true;
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<char>& used,
                int next) {
    if (next == a.n) return true;
    for (int cand = 0; cand < b.n; ++cand) {
        if (used[cand] || a.adj[next].size() != b.adj[cand].size()) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            bool ea = std::binary_search(a.adj[next].begin(), a.adj[next].end(), prev);
            bool eb = std::binary_search(b.adj[cand].begin(), b.adj[cand].end(), map[prev]);
            if (ea != eb) ok = false;
        }
        if (!ok) continue;
        map[next] = cand;
        used[cand] = 1;
        if (extend_iso(a, b, map, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> da, db;
    for (auto& nb : a.adj) da.push_back(static_cast<int>(nb.size()));
    for (auto& nb : b.adj) db.push_back(static_cast<int>(nb.size()));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    return extend_iso(a, b, map, used, 0);
}

VertexSet interval_hull(const PartialCube& pc, const VertexSet& s) {
    VertexSet cur = s;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> members = cur.to_indices();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                for (int z = 0; z < pc.vertex_count(); ++z)
                    if (!cur.test(z) && pc.dist(members[i], z) + pc.dist(z, members[j]) ==
                                            pc.dist(members[i], members[j])) {
                        cur.set(z);
                        grew = true;
                    }
    }
    return cur;
}

std::optional<int> definitional_gate(const PartialCube& pc, const VertexSet& s, int x) {
    std::optional<int> best;
    s.for_each([&](int w) {
        if (best) return;
        bool ok = true;
        s.for_each([&](int y) {
            if (pc.dist(x, w) + pc.dist(w, y) != pc.dist(x, y)) ok = false;
        });
        if (ok) best = w;
    });
    return best;
}

std::vector<Graph> brute_partial_cubes(int n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < (1ULL << all_pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < all_pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(all_pairs[i]);
        if (n > 1 && edges.size() + 1 < static_cast<std::size_t>(n)) continue;
        Graph g = Graph::from_edges(n, edges);
        if (!g.connected() || !brute_is_partial_cube(g)) continue;
        bool fresh = true;
        for (const auto& r : reps)
            if (brute_isomorphic(r, g)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(std::move(g));
    }
    return reps;
}

}  // namespace oracles
