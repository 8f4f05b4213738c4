#include "pcube/zones.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "pcube/canonical.hpp"
#include "pcube/metric.hpp"

namespace pcube {

namespace {

void check_class_index(const PartialCube& pc, int f) {
    if (f < 0 || f >= pc.class_count())
        throw PcError(Errc::BadIndex, "class " + std::to_string(f));
}

// Does s induce a single cycle? (every member of degree 2, connected)
bool induces_cycle(const PartialCube& pc, const VertexSet& s) {
    int count = s.count();
    if (count < 4) return false;
    bool ok = true;
    s.for_each([&](int v) {
        if (!ok) return;
        int deg = 0;
        for (int w : pc.neighbors(v)) deg += s.test(w);
        if (deg != 2) ok = false;
    });
    if (!ok) return false;
    // connected: walk the cycle from any member
    int start = -1;
    s.for_each([&](int v) {
        if (start < 0) start = v;
    });
    int prev = -1, cur = start, visited = 0;
    do {
        ++visited;
        int next = -1;
        for (int w : pc.neighbors(cur))
            if (s.test(w) && w != prev) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
    } while (cur != start && cur >= 0);
    return visited == count;
}

}  // namespace

ZoneResult zone_graph(const PartialCube& pc, int f) {
    check_class_index(pc, f);
    ZoneResult zr;
    zr.zone_vertices = pc.class_edges(f);
    std::sort(zr.zone_vertices.begin(), zr.zone_vertices.end());
    int z = static_cast<int>(zr.zone_vertices.size());

    // Any convex cycle through two E_f edges is exactly the hull of their
    // four endpoints, so the adjacency test is hull-of-four-induces-a-cycle.
    std::vector<std::pair<int, int>> zedges;
    for (int a = 0; a < z; ++a)
        for (int b = a + 1; b < z; ++b) {
            VertexSet four(pc.vertex_count());
            four.set(zr.zone_vertices[a].first);
            four.set(zr.zone_vertices[a].second);
            four.set(zr.zone_vertices[b].first);
            four.set(zr.zone_vertices[b].second);
            VertexSet hull = convex_hull(pc, four);
            if (!induces_cycle(pc, hull)) continue;
            zedges.emplace_back(a, b);
            zr.edge_crossings.push_back(
                crossing_classes(pc, hull).andnot(CoordSet::bit(f)));
        }
    zr.graph = Graph::from_edges(z, zedges);
    // from_edges sorts; keep crossings aligned
    {
        std::vector<CoordSet> aligned(zedges.size());
        std::vector<std::pair<int, int>> orig = zedges;
        for (auto& [u, v] : orig)
            if (u > v) std::swap(u, v);
        for (std::size_t i = 0; i < zr.graph.edges.size(); ++i) {
            auto it = std::find(orig.begin(), orig.end(), zr.graph.edges[i]);
            aligned[i] = zr.edge_crossings[it - orig.begin()];
        }
        zr.edge_crossings = std::move(aligned);
    }

    // Crossing sets of any two crossed convex cycles must be identical or
    // disjoint; the blocks then are the prospective zone classes.
    bool partition_ok = true;
    std::unordered_map<int, CoordSet> block_of_class;
    for (const auto& cross : zr.edge_crossings) {
        bool bad = false;
        cross.for_each([&](int g) {
            auto it = block_of_class.find(g);
            if (it == block_of_class.end())
                block_of_class.emplace(g, cross);
            else if (it->second != cross)
                bad = true;
        });
        if (bad) partition_ok = false;
    }

    zr.well_embedded = partition_ok && zr.graph.connected();
    if (zr.well_embedded && z > 0) {
        EmbedResult er = embed_partial_cube(zr.graph);
        if (!embed_ok(er)) {
            zr.well_embedded = false;
        } else {
            const PartialCube& zpc = embedded(er);
            // each block must be one zone class and vice versa
            std::map<int, int> part;
            bool coherent = true;
            for (std::size_t i = 0; i < zr.graph.edges.size() && coherent; ++i) {
                auto [u, v] = zr.graph.edges[i];
                CoordSet diff = zpc.coords(u) ^ zpc.coords(v);
                int zone_class = diff.lowest();
                zr.edge_crossings[i].for_each([&](int g) {
                    auto [it, fresh] = part.emplace(g, zone_class);
                    if (!fresh && it->second != zone_class) coherent = false;
                });
            }
            if (coherent) {
                // distinct blocks may not share a zone class
                std::map<int, CoordSet> rep;
                for (std::size_t i = 0; i < zr.graph.edges.size() && coherent; ++i) {
                    auto [u, v] = zr.graph.edges[i];
                    int zc = (zpc.coords(u) ^ zpc.coords(v)).lowest();
                    auto [it, fresh] = rep.emplace(zc, zr.edge_crossings[i]);
                    if (!fresh && it->second != zr.edge_crossings[i]) coherent = false;
                }
            }
            if (coherent)
                zr.class_partition = std::move(part);
            else
                zr.well_embedded = false;
        }
    }
    return zr;
}

namespace {

struct ZoneMemo {
    std::shared_mutex mutex;
    std::unordered_map<std::string, bool> table;

    std::optional<bool> lookup(const std::string& key) {
        std::shared_lock lock(mutex);
        auto it = table.find(key);
        if (it == table.end()) return std::nullopt;
        return it->second;
    }
    void store(const std::string& key, bool value) {
        std::unique_lock lock(mutex);
        table.emplace(key, value);
    }
};

ZoneMemo& zone_memo() {
    static ZoneMemo memo;
    return memo;
}

}  // namespace

bool iterated_zone_check(const PartialCube& pc) {
    if (pc.class_count() == 0) return true;
    std::string key = pc.canonical_key();
    if (auto hit = zone_memo().lookup(key)) return *hit;

    bool ok = true;
    for (int f = 0; f < pc.class_count() && ok; ++f) {
        ZoneResult zr = zone_graph(pc, f);
        if (!zr.well_embedded) {
            ok = false;
            break;
        }
        if (zr.zone_vertices.size() <= 1) continue;  // K_1 recurses trivially
        PartialCube zpc = embed_or_throw(zr.graph);
        ok = iterated_zone_check(zpc);
    }
    zone_memo().store(key, ok);
    return ok;
}

}  // namespace pcube
