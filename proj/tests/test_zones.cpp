#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pcube/bridge.hpp"
#include "pcube/canonical.hpp"
#include "pcube/metric.hpp"
#include "pcube/minors.hpp"
#include "pcube/recognize.hpp"
#include "pcube/zones.hpp"

using namespace pcube;

namespace {

PartialCube c6() { return embed_or_throw(oracles::cycle_graph(6)); }

bool contains_c5(const Graph& g) {
    // a 5-cycle through some 5-subset, brute force
    std::vector<int> idx(g.n);
    for (int i = 0; i < g.n; ++i) idx[i] = i;
    std::vector<int> pick(5);
    std::function<bool(int, int)> choose = [&](int start, int depth) -> bool {
        if (depth == 5) {
            std::vector<int> perm(pick.begin() + 1, pick.end());
            std::sort(perm.begin(), perm.end());
            do {
                std::vector<int> cyc = {pick[0]};
                cyc.insert(cyc.end(), perm.begin(), perm.end());
                bool ok = true;
                for (int i = 0; i < 5 && ok; ++i) {
                    int u = cyc[i], v = cyc[(i + 1) % 5];
                    ok = std::binary_search(g.adj[u].begin(), g.adj[u].end(), v);
                }
                if (ok) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int v = start; v < g.n; ++v) {
            pick[depth] = v;
            if (choose(v + 1, depth + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

}  // namespace

TEST_CASE("zone graphs of hypercubes are smaller hypercubes") {
    for (int n : {2, 3, 4}) {
        PartialCube qn = generate(Family::Cube, n);
        for (int f = 0; f < n; ++f) {
            ZoneResult zr = zone_graph(qn, f);
            CHECK(zr.well_embedded);
            CHECK(isomorphic(embed_or_throw(zr.graph), generate(Family::Cube, n - 1)));
            // every other class lands in a singleton block
            CHECK(static_cast<int>(zr.class_partition.size()) == n - 1);
        }
    }
    CHECK_THROWS_AS(zone_graph(c6(), 5), PcError);
}

TEST_CASE("zone graphs of C_6 are single edges") {
    PartialCube c = c6();
    for (int f = 0; f < 3; ++f) {
        ZoneResult zr = zone_graph(c, f);
        CHECK(zr.well_embedded);
        CHECK(zr.graph.n == 2);
        CHECK(zr.graph.edges.size() == 1);
        CHECK(zr.class_partition.size() == 2);  // the two other classes share the block
    }
}

TEST_CASE("a zone graph of Q_4^{-*} contains a 5-cycle") {
    PartialCube star = generate(Family::QMinusStar, 4);
    bool found = false;
    for (int f = 0; f < star.class_count() && !found; ++f) {
        ZoneResult zr = zone_graph(star, f);
        if (zr.well_embedded) continue;
        if (contains_c5(zr.graph)) {
            found = true;
            CHECK(!embed_ok(embed_partial_cube(zr.graph)));
        }
    }
    CHECK(found);
}

TEST_CASE("zone of the fully punctured cube drops into the smaller one") {
    // n = 4 bottoms out: the zone graph at a deleted-neighbor class is a
    // triangle, not a partial cube
    {
        ZoneResult zr = zone_graph(generate(Family::QMinusMinusM, 4, 4), 0);
        CHECK(!zr.well_embedded);
        CHECK(zr.graph.n == 3);
        CHECK(zr.graph.edges.size() == 3);
    }
    // n = 5: one zone step along a deleted-neighbor class
    {
        PartialCube g = generate(Family::QMinusMinusM, 5, 5);
        ZoneResult zr = zone_graph(g, 0);
        CHECK(isomorphic(embed_or_throw(zr.graph), generate(Family::QMinusMinusM, 4, 4)));
        CHECK(!iterated_zone_check(g));
    }
}

TEST_CASE("iterated zone check: positives and the punctured-star negative") {
    CHECK(iterated_zone_check(generate(Family::Cube, 3)));
    CHECK(iterated_zone_check(c6()));
    CHECK(iterated_zone_check(embed_or_throw(oracles::path_graph(5))));
    CHECK(iterated_zone_check(embed_or_throw(oracles::star_graph(4))));
    CHECK(!iterated_zone_check(generate(Family::QMinusStar, 4)));
    for (int m = 1; m <= 4; ++m)
        CHECK(!iterated_zone_check(generate(Family::QMinusMinusM, 4, m)));
}

TEST_CASE("zone graphs of recognized COM tope graphs are well-embedded") {
    for (const auto& pc : enumerate_partial_cubes(7)) {
        if (!classify_graph(pc).is_com) continue;
        for (int f = 0; f < pc.class_count(); ++f) CHECK(zone_graph(pc, f).well_embedded);
    }
}

TEST_CASE("zone graph matches the tope graph of the covector hyperplane") {
    std::vector<PartialCube> corpus = enumerate_partial_cubes(6);
    corpus.push_back(generate(Family::Cube, 3));
    for (const auto& pc : corpus) {
        if (!classify_graph(pc).is_com) continue;
        SignSystem l = covectors_of(pc);
        for (int e = 0; e < pc.class_count(); ++e) {
            ZoneResult zr = zone_graph(pc, e);
            REQUIRE(zr.well_embedded);
            SignSystem hyp = system_minor(l, MinorOp::Hyperplane, e);
            bool has_tope_after_simplify = true;
            TopeGraphResult tg = [&] {
                try {
                    return tope_graph(hyp);
                } catch (const PcError&) {
                    has_tope_after_simplify = false;
                    return TopeGraphResult{embed_or_throw(Graph::from_edges(1, {})), {}};
                }
            }();
            if (!has_tope_after_simplify) continue;
            CHECK(isomorphic(embed_or_throw(zr.graph), tg.pc));
        }
    }
}

TEST_CASE("contracting a singleton-block host class contracts the zone class") {
    std::vector<PartialCube> corpus = enumerate_partial_cubes(7);
    for (const auto& pc : corpus) {
        if (!classify_graph(pc).is_com) continue;
        for (int f = 0; f < pc.class_count(); ++f) {
            ZoneResult zr = zone_graph(pc, f);
            if (!zr.well_embedded || zr.graph.n < 2 || zr.graph.edges.empty()) continue;
            PartialCube zpc = embed_or_throw(zr.graph);
            for (auto [g, zone_class] : zr.class_partition) {
                // singleton block?
                int members = 0;
                for (auto [g2, zc2] : zr.class_partition) members += zc2 == zone_class;
                if (members != 1) continue;
                PartialCube lhs = contract(zpc, zone_class);
                PartialCube host2 = contract(pc, g);
                ZoneResult zr2 = zone_graph(host2, f - (f > g));
                REQUIRE(zr2.well_embedded);
                CHECK(isomorphic(lhs, embed_or_throw(zr2.graph)));
            }
        }
    }
}

TEST_CASE("equivalent classes orient coherently along the zone") {
    // two classes in one block: after matching the orientation on one convex
    // cycle, every E_f edge sits on matching sides of both
    std::vector<PartialCube> corpus = {c6(), generate(Family::EvenCycle, 8),
                                       generate(Family::CubeMinusVertex, 3)};
    bool exercised = false;
    for (const auto& pc : corpus) {
        for (int f = 0; f < pc.class_count(); ++f) {
            ZoneResult zr = zone_graph(pc, f);
            if (!zr.well_embedded) continue;
            for (std::size_t ze = 0; ze < zr.edge_crossings.size(); ++ze) {
                std::vector<int> block = zr.edge_crossings[ze].to_indices();
                if (block.size() < 2) continue;
                exercised = true;
                int g = block[0], h = block[1];
                // the two E_f edges on this cycle sit on opposite sides of g
                // and of h; orient so the first sits on the plus side of both
                auto [za, zb] = zr.graph.edges[ze];
                auto ea = zr.zone_vertices[za];
                bool sg = pc.on_plus_side(ea.first, g);
                bool sh = pc.on_plus_side(ea.first, h);
                for (const auto& [u, v] : pc.class_edges(f)) {
                    bool ug = pc.on_plus_side(u, g) == sg;
                    bool uh = pc.on_plus_side(u, h) == sh;
                    CHECK(ug == uh);
                }
            }
        }
    }
    CHECK(exercised);
}
