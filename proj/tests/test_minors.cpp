#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pcube/canonical.hpp"
#include "pcube/metric.hpp"
#include "pcube/minors.hpp"
#include "pcube/recognize.hpp"

using namespace pcube;

namespace {

PartialCube c6() { return embed_or_throw(oracles::cycle_graph(6)); }

VertexSet set_of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
}

// classes of pc surviving a restriction to one halfspace, in index order
std::vector<int> surviving_classes(const PartialCube& pc, int f, char sign) {
    const VertexSet& side = pc.halfspace(f, sign == '+');
    std::vector<int> kept;
    for (int g = 0; g < pc.class_count(); ++g) {
        if (g == f) continue;
        bool has_p = false, has_m = false;
        side.for_each([&](int v) {
            (pc.on_plus_side(v, g) ? has_p : has_m) = true;
        });
        if (has_p && has_m) kept.push_back(g);
    }
    return kept;
}

}  // namespace

TEST_CASE("contract: quotients of cubes and cycles") {
    PartialCube q3 = generate(Family::Cube, 3);
    for (int f = 0; f < 3; ++f) CHECK(isomorphic(contract(q3, f), generate(Family::Cube, 2)));

    PartialCube c = c6();
    for (int f = 0; f < 3; ++f) CHECK(isomorphic(contract(c, f), generate(Family::Cube, 2)));

    CHECK_THROWS_AS(contract(c, 3), PcError);
    CHECK_THROWS_AS(contract(c, -1), PcError);
}

TEST_CASE("contract: Q_4^{-*} contracts into cubes with at most two holes") {
    PartialCube star = generate(Family::QMinusStar, 4);
    PartialCube q3 = generate(Family::Cube, 3);
    PartialCube q3m = generate(Family::CubeMinusVertex, 3);
    PartialCube q3mm = generate(Family::CubeMinusAntipodes, 3);
    for (int f = 0; f < star.class_count(); ++f) {
        PartialCube out = contract(star, f);
        CHECK((isomorphic(out, q3) || isomorphic(out, q3m) || isomorphic(out, q3mm)));
    }
}

TEST_CASE("restrict: halfspaces of cubes, cycles, punctured cubes") {
    for (int n : {3, 4}) {
        PartialCube qn = generate(Family::Cube, n);
        CHECK(isomorphic(restrict_halfspace(qn, 0, '+'), generate(Family::Cube, n - 1)));
    }
    PartialCube p3 = embed_or_throw(oracles::path_graph(3));
    for (int f = 0; f < 3; ++f)
        for (char sign : {'+', '-'}) {
            PartialCube half = restrict_halfspace(c6(), f, sign);
            CHECK(isomorphic(half, p3));
        }
    // a halfspace of Q_n^{--} keeps exactly one of the two deleted antipodes
    for (int n : {4, 5}) {
        PartialCube qmm = generate(Family::QMinusMinusM, n, 0);
        PartialCube qm = generate(Family::CubeMinusVertex, n - 1);
        for (char sign : {'+', '-'}) CHECK(isomorphic(restrict_halfspace(qmm, 1, sign), qm));
    }
}

TEST_CASE("expand: examples and rejection reasons") {
    PartialCube k1 = embed_or_throw(Graph::from_edges(1, {}));
    PartialCube k2 = expand(k1, {set_of(1, {0}), set_of(1, {0})});
    CHECK(k2.vertex_count() == 2);
    CHECK(isomorphic(k2, embed_or_throw(Graph::from_edges(2, {{0, 1}}))));

    PartialCube p3 = expand(k2, {set_of(2, {0, 1}), set_of(2, {1})});
    CHECK(isomorphic(p3, embed_or_throw(oracles::path_graph(3))));

    CHECK_THROWS_WITH_AS(expand(k2, {set_of(2, {0}), set_of(2, {1})}),
                         doctest::Contains("v1\\v2"), PcError);
    CHECK_THROWS_WITH_AS(expand(k2, {set_of(2, {0}), set_of(2, {0})}),
                         doctest::Contains("cover"), PcError);
    PartialCube c = c6();
    CHECK_THROWS_WITH_AS(expand(c, {set_of(6, {0, 3}), VertexSet::full(6)}),
                         doctest::Contains("isometric"), PcError);
}

TEST_CASE("expand then contract the new class is the identity up to isomorphism") {
    for (const auto& pc : enumerate_partial_cubes(8)) {
        for (const auto& spec : enumerate_expansions(pc)) {
            PartialCube grown = expand(pc, spec);
            CHECK(isomorphic(contract(grown, pc.class_count()), pc));
        }
    }
}

TEST_CASE("peripheral sides") {
    PartialCube q3 = generate(Family::Cube, 3);
    for (int f = 0; f < 3; ++f) CHECK(is_peripheral(q3, f) == PeripheralSides::Both);

    // path a-b-c, class of edge ab: only the side {a} is peripheral
    PartialCube p3 = embed_or_throw(oracles::path_graph(3));
    int f_ab = p3.edge_class(0);  // edge (0,1)
    PeripheralSides sides = is_peripheral(p3, f_ab);
    REQUIRE((sides == PeripheralSides::Minus || sides == PeripheralSides::Plus));
    const VertexSet& peri = p3.halfspace(f_ab, sides == PeripheralSides::Plus);
    CHECK(peri.count() == 1);
    CHECK(peri.test(0));

    PartialCube c = c6();
    for (int f = 0; f < 3; ++f) CHECK(is_peripheral(c, f) == PeripheralSides::None);
}

TEST_CASE("pc_minor: paths in cycles, the bold C_6, and family minimality") {
    PartialCube p3 = embed_or_throw(oracles::path_graph(3));
    auto w1 = pc_minor(c6(), p3);
    REQUIRE(w1.has_value());
    CHECK(isomorphic(apply_minor_witness(c6(), *w1), p3));

    PartialCube star = generate(Family::QMinusStar, 4);
    auto w2 = pc_minor(star, c6());
    REQUIRE(w2.has_value());
    CHECK(isomorphic(apply_minor_witness(star, *w2), c6()));

    CHECK(!pc_minor(generate(Family::QMinusMinusM, 4, 1), star).has_value());
}

TEST_CASE("pc_minor: cubes only have cube minors") {
    PartialCube q4 = generate(Family::Cube, 4);
    CHECK(pc_minor(q4, generate(Family::Cube, 2)).has_value());
    CHECK(!pc_minor(q4, c6()).has_value());
    CHECK(!pc_minor(q4, embed_or_throw(oracles::star_graph(3))).has_value());
}

TEST_CASE("contract and restrict bottom out at a single vertex") {
    PartialCube k2 = embed_or_throw(Graph::from_edges(2, {{0, 1}}));
    PartialCube k1a = contract(k2, 0);
    CHECK(k1a.vertex_count() == 1);
    CHECK(k1a.class_count() == 0);
    PartialCube k1b = restrict_halfspace(k2, 0, '-');
    CHECK(k1b.vertex_count() == 1);
    CHECK(k1b.class_count() == 0);
}

TEST_CASE("a peripheral expansion leaves a peripheral class") {
    PartialCube q2 = generate(Family::Cube, 2);
    ExpansionSpec spec{VertexSet::full(4), set_of(4, {0, 1})};
    PartialCube grown = expand(q2, spec);
    CHECK(grown.vertex_count() == 6);
    CHECK(is_peripheral(grown, q2.class_count()) != PeripheralSides::None);
    CHECK(isomorphic(contract(grown, q2.class_count()), q2));
}

TEST_CASE("generate: family sizes and parameter guards") {
    CHECK(generate(Family::QMinusStar, 4).vertex_count() == 14);
    CHECK(generate(Family::QMinusMinusM, 4, 3).vertex_count() == 11);
    CHECK(isomorphic(generate(Family::QMinusMinusM, 4, 0),
                     generate(Family::CubeMinusAntipodes, 4)));
    CHECK(oracles::brute_isomorphic(generate(Family::CubeMinusAntipodes, 3).to_graph(),
                                    oracles::cycle_graph(6)));
    CHECK(generate(Family::Path, 5).vertex_count() == 5);
    CHECK(generate(Family::EvenCycle, 8).class_count() == 4);

    CHECK_THROWS_AS(generate(Family::QMinusStar, 3), PcError);
    CHECK_THROWS_AS(generate(Family::QMinusMinusM, 4, 5), PcError);
    CHECK_THROWS_AS(generate(Family::EvenCycle, 5), PcError);
    CHECK_THROWS_AS(generate(Family::CubeMinusAntipodes, 2), PcError);
}

TEST_CASE("excluded_family: the finite rank-3 lists") {
    auto qm3 = excluded_family(ExcludedKind::QMinusR, 3);
    std::set<std::string> keys;
    for (const auto& g : qm3) keys.insert(g.canonical_key());
    CHECK(qm3.size() == 7);
    CHECK(keys.size() == 7);
    CHECK(keys.count(generate(Family::Cube, 4).canonical_key()));
    CHECK(keys.count(generate(Family::QMinusMinusM, 5, 5).canonical_key()));
    CHECK(keys.count(generate(Family::QMinusStar, 4).canonical_key()));

    auto qmm3 = excluded_family(ExcludedKind::QMinusMinusR, 3);
    REQUIRE(qmm3.size() == 3);
    std::set<std::string> expect = {generate(Family::CubeMinusAntipodes, 3).canonical_key(),
                                    generate(Family::CubeMinusAntipodes, 4).canonical_key(),
                                    generate(Family::Cube, 4).canonical_key()};
    std::set<std::string> got;
    for (const auto& g : qmm3) got.insert(g.canonical_key());
    CHECK(got == expect);

    CHECK_THROWS_AS(excluded_family(ExcludedKind::QMinusR, 2), PcError);
}

TEST_CASE("enumerate: tiny censuses against labeled brute force") {
    auto two = enumerate_partial_cubes(2);
    CHECK(two.size() == 2);

    auto four = enumerate_partial_cubes(4);
    REQUIRE(four.size() == 6);
    std::set<std::string> keys;
    for (const auto& g : four) keys.insert(g.canonical_key());
    CHECK(keys.count(embed_or_throw(oracles::path_graph(4)).canonical_key()));
    CHECK(keys.count(embed_or_throw(oracles::star_graph(3)).canonical_key()));
    CHECK(keys.count(generate(Family::Cube, 2).canonical_key()));

    // completeness per size against the labeled-graph filter
    auto six = enumerate_partial_cubes(6);
    for (int n = 1; n <= 6; ++n) {
        std::size_t brute = oracles::brute_partial_cubes(n).size();
        std::size_t mine = 0;
        for (const auto& g : six)
            if (g.vertex_count() == n) ++mine;
        CHECK(mine == brute);
    }

    bool has_c6 = false;
    for (const auto& g : enumerate_partial_cubes(6))
        if (g.canonical_key() == c6().canonical_key()) has_c6 = true;
    CHECK(has_c6);
}

TEST_CASE("enumerate: deterministic (size, key) order and timeout guard") {
    auto run1 = enumerate_partial_cubes(6);
    auto run2 = enumerate_partial_cubes(6);
    REQUIRE(run1.size() == run2.size());
    for (std::size_t i = 0; i < run1.size(); ++i) {
        CHECK(run1[i].canonical_key() == run2[i].canonical_key());
        if (i + 1 < run1.size()) {
            auto a = std::make_pair(run1[i].vertex_count(), run1[i].canonical_key());
            auto b = std::make_pair(run1[i + 1].vertex_count(), run1[i + 1].canonical_key());
            CHECK(a < b);
        }
    }
    EnumerateOptions opts;
    opts.max_seconds = 1e-9;
    CHECK_THROWS_AS(enumerate_partial_cubes(9, opts), PcError);
}

TEST_CASE("antipodal expansions") {
    PartialCube k1 = embed_or_throw(Graph::from_edges(1, {}));
    auto from_k1 = antipodal_expansions(k1);
    REQUIRE(from_k1.size() == 1);
    CHECK(from_k1[0].vertex_count() == 2);

    PartialCube k2 = embed_or_throw(Graph::from_edges(2, {{0, 1}}));
    auto from_k2 = antipodal_expansions(k2);
    REQUIRE(from_k2.size() == 1);
    CHECK(isomorphic(from_k2[0], generate(Family::Cube, 2)));

    auto from_q2 = antipodal_expansions(generate(Family::Cube, 2));
    std::set<std::string> keys;
    for (const auto& g : from_q2) keys.insert(g.canonical_key());
    CHECK(keys.count(generate(Family::Cube, 3).canonical_key()));
    CHECK(keys.count(c6().canonical_key()));

    CHECK_THROWS_AS(antipodal_expansions(embed_or_throw(oracles::path_graph(3))), PcError);
}

TEST_CASE("contractions commute; contraction and restriction commute") {
    auto corpus = enumerate_partial_cubes(7);
    corpus.push_back(generate(Family::QMinusStar, 4));
    for (const auto& pc : corpus) {
        int k = pc.class_count();
        for (int f = 0; f < k; ++f)
            for (int g = f + 1; g < k; ++g) {
                PartialCube fg = contract(contract(pc, f), g - 1);
                PartialCube gf = contract(contract(pc, g), f);
                CHECK(isomorphic(fg, gf));
            }
        for (int f = 0; f < k; ++f)
            for (int g = 0; g < k; ++g) {
                if (f == g) continue;
                for (char sign : {'+', '-'}) {
                    // restrict at g then contract the image of f, when alive
                    auto kept = surviving_classes(pc, g, sign);
                    auto it = std::find(kept.begin(), kept.end(), f);
                    PartialCube lhs = restrict_halfspace(pc, g, sign);
                    if (it != kept.end())
                        lhs = contract(lhs, static_cast<int>(it - kept.begin()));
                    PartialCube rhs =
                        restrict_halfspace(contract(pc, f), g - (g > f), sign);
                    CHECK(isomorphic(lhs, rhs));
                }
            }
    }
}

TEST_CASE("pc_minor agrees with the closure under elementary operations") {
    // independent oracle: the set of pc-minors of a host is the closure of
    // the host under single contractions and restrictions
    auto corpus = enumerate_partial_cubes(7);
    std::vector<PartialCube> hosts = {corpus[20], corpus.back(),
                                      embed_or_throw(oracles::cycle_graph(6)),
                                      generate(Family::QMinusStar, 4),
                                      generate(Family::QMinusMinusM, 4, 2)};
    for (const auto& host : hosts) {
        std::map<std::string, PartialCube> closure;
        std::vector<PartialCube> frontier = {host};
        closure.emplace(host.canonical_key(), host);
        while (!frontier.empty()) {
            PartialCube cur = std::move(frontier.back());
            frontier.pop_back();
            for (int f = 0; f < cur.class_count(); ++f) {
                std::vector<PartialCube> children;
                children.push_back(contract(cur, f));
                children.push_back(restrict_halfspace(cur, f, '+'));
                children.push_back(restrict_halfspace(cur, f, '-'));
                for (auto& child : children) {
                    std::string key = child.canonical_key();
                    if (closure.emplace(key, child).second) frontier.push_back(closure.at(key));
                }
            }
        }
        // every closure member is found, every other small graph is not
        for (const auto& [key, minor] : closure)
            CHECK(pc_minor(host, minor).has_value());
        for (const auto& pattern : corpus) {
            if (pattern.vertex_count() > host.vertex_count()) continue;
            bool in_closure = closure.count(pattern.canonical_key()) > 0;
            CHECK(pc_minor(host, pattern).has_value() == in_closure);
        }
    }
}

TEST_CASE("antipodal expansion closure matches the antipodal slice of the census") {
    std::vector<PartialCube> family = {embed_or_throw(Graph::from_edges(1, {}))};
    std::set<std::string> keys = {family[0].canonical_key()};
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].vertex_count() > 7) continue;  // expansions add a vertex at least
        for (const auto& g : antipodal_expansions(family[i]))
            if (g.vertex_count() <= 8 && keys.insert(g.canonical_key()).second)
                family.push_back(g);
    }
    std::set<std::string> census_antipodal;
    for (const auto& g : enumerate_partial_cubes(8))
        if (is_antipodal(g, g.full_vertex_set()))
            census_antipodal.insert(g.canonical_key());
    CHECK(keys == census_antipodal);
}

TEST_CASE("minor outputs pass re-embedding") {
    PartialCube star = generate(Family::QMinusStar, 4);
    for (int f = 0; f < star.class_count(); ++f) {
        CHECK(embed_ok(embed_partial_cube(contract(star, f).to_graph())));
        CHECK(embed_ok(embed_partial_cube(restrict_halfspace(star, f, '+').to_graph())));
        CHECK(embed_ok(embed_partial_cube(restrict_halfspace(star, f, '-').to_graph())));
    }
}

TEST_CASE("family minimality: elementary minors of excluded graphs leave the excluded class") {
    std::vector<PartialCube> members;
    for (int n : {4, 5}) {
        members.push_back(generate(Family::QMinusStar, n));
        for (int m = 1; m <= n; ++m) members.push_back(generate(Family::QMinusMinusM, n, m));
    }
    for (const auto& g : members) {
        for (int f = 0; f < g.class_count(); ++f) {
            CHECK(is_com_bounded_rank(contract(g, f), 5).member);
            CHECK(is_com_bounded_rank(restrict_halfspace(g, f, '+'), 5).member);
            CHECK(is_com_bounded_rank(restrict_halfspace(g, f, '-'), 5).member);
        }
    }
}
