#include "pcube/partial_cube.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <string>

#include "pcube/canonical.hpp"

namespace pcube {

namespace {

// Is S convex? Every vertex on a shortest path between members must belong.
bool set_is_convex(const DistTable& d, const std::vector<int>& members,
                   const std::vector<char>& in_set, int n) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int x = members[i], y = members[j], dxy = d[x][y];
            for (int z = 0; z < n; ++z)
                if (!in_set[z] && d[x][z] + d[z][y] == dxy) return false;
        }
    return true;
}

}  // namespace

void PartialCube::finish() {
    n_ = static_cast<int>(coords_.size());
    index_.clear();
    index_.reserve(coords_.size() * 2);
    for (int v = 0; v < n_; ++v) {
        auto [it, fresh] = index_.emplace(coords_[v], v);
        if (!fresh) throw PcError(Errc::BadParameter, "duplicate coordinate vector");
    }

    adj_.assign(n_, {});
    edges_.clear();
    edge_class_.clear();
    for (int v = 0; v < n_; ++v)
        for (int f = 0; f < k_; ++f) {
            auto it = index_.find(coords_[v] ^ CoordSet::bit(f));
            if (it != index_.end() && it->second > v) {
                edges_.emplace_back(v, it->second);
                edge_class_.push_back(f);
            }
        }
    // edges_ came out sorted by (v, coords order); normalize to lex order
    std::vector<std::size_t> order(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return edges_[a] < edges_[b];
    });
    std::vector<std::pair<int, int>> se(edges_.size());
    std::vector<int> sc(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        se[i] = edges_[order[i]];
        sc[i] = edge_class_[order[i]];
    }
    edges_ = std::move(se);
    edge_class_ = std::move(sc);

    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    minus_side_.assign(k_, VertexSet(n_));
    plus_side_.assign(k_, VertexSet(n_));
    class_edges_.assign(k_, {});
    for (int v = 0; v < n_; ++v)
        for (int f = 0; f < k_; ++f)
            (coords_[v].test(f) ? plus_side_[f] : minus_side_[f]).set(v);
    for (std::size_t e = 0; e < edges_.size(); ++e)
        class_edges_[edge_class_[e]].push_back(edges_[e]);
}

PartialCube PartialCube::from_coords(int k, std::vector<CoordSet> coords, bool check_isometry) {
    if (coords.empty()) throw PcError(Errc::EmptyGraph);
    if (k < 0 || k > CoordSet::max_bits)
        throw PcError(Errc::TooManyClasses, std::to_string(k) + " classes (limit 128)");

    CoordSet mask = CoordSet::low_bits(k);
    CoordSet any_plus, all_plus = mask;
    for (auto& c : coords) {
        if (!c.subset_of(mask)) throw PcError(Errc::BadParameter, "coordinate bit out of range");
        any_plus = any_plus | c;
        all_plus = all_plus & c;
    }
    if (any_plus != mask || all_plus.any())
        throw PcError(Errc::BadParameter, "every class needs vertices on both sides");

    PartialCube pc;
    pc.k_ = k;
    pc.coords_ = std::move(coords);
    pc.finish();

    // connectivity over the Hamming-1 adjacency
    std::vector<char> seen(pc.n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : pc.adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    if (cnt != pc.n_) throw PcError(Errc::DisconnectedGraph);

    if (check_isometry) {
        std::vector<int> dist(pc.n_);
        for (int s = 0; s < pc.n_; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            std::queue<int> bfs;
            bfs.push(s);
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (int v : pc.adj_[u])
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        bfs.push(v);
                    }
            }
            for (int v = 0; v < pc.n_; ++v)
                if (dist[v] != pc.dist(s, v))
                    throw PcError(Errc::BadParameter, "embedding is not isometric");
        }
    }
    return pc;
}

Graph PartialCube::to_graph() const {
    Graph g;
    g.n = n_;
    g.edges = edges_;
    g.adj = adj_;
    return g;
}

const std::string& PartialCube::canonical_key() const {
    static std::mutex m;  // keys are cheap at desk scale; one lock is fine
    std::lock_guard<std::mutex> lock(m);
    if (key_cache_->empty()) *key_cache_ = canonical_key_of_coords(k_, coords_);
    return *key_cache_;
}

EmbedResult embed_partial_cube(const Graph& g) {
    if (g.n <= 0) return EmbedFailure{Errc::EmptyGraph, std::nullopt, "empty graph"};
    if (!g.connected()) return EmbedFailure{Errc::DisconnectedGraph, std::nullopt, "disconnected"};

    // bipartite 2-coloring
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
                return EmbedFailure{Errc::NotBipartite, std::nullopt, "odd cycle"};
            }
        }
    }

    DistTable d = distances(g);

    // Theta classes via the W-sets of each edge; equivalent edges share the
    // same complementary pair. The pair is keyed by its lexicographically
    // smaller side.
    std::map<VertexSet, int> class_of;
    std::vector<VertexSet> side_a;  // W(u,v) of the defining edge
    std::vector<int> edge_cls(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        VertexSet wu(g.n), wv(g.n);
        for (int x = 0; x < g.n; ++x) (d[x][u] < d[x][v] ? wu : wv).set(x);
        const VertexSet& key = std::min(wu, wv);
        auto it = class_of.find(key);
        if (it != class_of.end()) {
            edge_cls[e] = it->second;
            continue;
        }
        for (const VertexSet* side : {&wu, &wv}) {
            auto members = side->to_indices();
            std::vector<char> in_set(g.n, 0);
            for (int m : members) in_set[m] = 1;
            if (!set_is_convex(d, members, in_set, g.n))
                return EmbedFailure{Errc::NonConvexWSet, g.edges[e],
                                    "W-set of edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not convex"};
        }
        int cls = static_cast<int>(side_a.size());
        if (cls >= CoordSet::max_bits)
            return EmbedFailure{Errc::TooManyClasses, std::nullopt,
                                "more than 128 Theta classes"};
        class_of.emplace(key, cls);
        side_a.push_back(wu);
        edge_cls[e] = cls;
    }
    int k = static_cast<int>(side_a.size());

    // Orient every class so vertex 0 sits on the plus side.
    std::vector<CoordSet> coords(g.n);
    for (int f = 0; f < k; ++f) {
        bool zero_in_a = side_a[f].test(0);
        for (int x = 0; x < g.n; ++x)
            if (side_a[f].test(x) == zero_in_a) coords[x].set(f);
    }

    PartialCube pc = PartialCube::from_coords(k, std::move(coords), false);
    // Djokovic's theorem guarantees the embedding; a failure here means a bug.
    if (pc.edges() != g.edges)
        throw PcError(Errc::InternalMismatch, "embedding edges disagree with the input graph");
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (pc.dist(u, v) != d[u][v])
                throw PcError(Errc::InternalMismatch, "embedding is not isometric");
    return pc;
}

PartialCube embed_or_throw(const Graph& g) {
    EmbedResult r = embed_partial_cube(g);
    if (embed_ok(r)) return std::get<PartialCube>(std::move(r));
    const EmbedFailure& f = embed_failure(r);
    throw PcError(f.reason, f.message);
}

std::vector<ThetaClass> theta_classes(const PartialCube& pc) {
    std::vector<ThetaClass> out;
    out.reserve(pc.class_count());
    for (int f = 0; f < pc.class_count(); ++f)
        out.push_back(ThetaClass{f, pc.halfspace(f, false), pc.halfspace(f, true),
                                 pc.class_edges(f)});
    return out;
}

}  // namespace pcube
