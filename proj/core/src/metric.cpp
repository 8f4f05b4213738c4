#include "pcube/metric.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pcube/graph.hpp"

namespace pcube {

namespace {

// Signs fixed on the hull of S: classes where S lies inside one halfspace.
struct HullSignature {
    CoordSet plus, minus;  // non-crossing classes by side
    CoordSet crossing;
};

HullSignature hull_signature(const PartialCube& pc, const VertexSet& s) {
    HullSignature h;
    bool first = true;
    CoordSet any_plus, all_plus;
    s.for_each([&](int v) {
        const CoordSet& c = pc.coords(v);
        if (first) {
            any_plus = all_plus = c;
            first = false;
        } else {
            any_plus = any_plus | c;
            all_plus = all_plus & c;
        }
    });
    CoordSet all = pc.all_classes();
    h.plus = all_plus;
    h.minus = all.andnot(any_plus);
    h.crossing = all.andnot(h.plus | h.minus);
    return h;
}

}  // namespace

VertexSet convex_hull(const PartialCube& pc, const VertexSet& s) {
    if (s.none()) throw PcError(Errc::EmptySet, "hull of the empty set");
    HullSignature h = hull_signature(pc, s);
    VertexSet hull = pc.full_vertex_set();
    h.plus.for_each([&](int f) { hull &= pc.halfspace(f, true); });
    h.minus.for_each([&](int f) { hull &= pc.halfspace(f, false); });
    return hull;
}

bool is_convex(const PartialCube& pc, const VertexSet& s) {
    return s.any() && convex_hull(pc, s) == s;
}

CoordSet crossing_classes(const PartialCube& pc, const VertexSet& s) {
    return hull_signature(pc, s).crossing;
}

SignVec signature(const PartialCube& pc, const VertexSet& s) {
    if (!is_convex(pc, s)) throw PcError(Errc::NotConvex, "signature needs a convex set");
    HullSignature h = hull_signature(pc, s);
    return SignVec{pc.class_count(), h.plus, h.minus};
}

std::optional<int> antipode(const PartialCube& pc, const VertexSet& s, int x) {
    if (!is_convex(pc, s)) throw PcError(Errc::NotConvex, "antipode needs a convex set");
    if (!s.test(x)) throw PcError(Errc::BadParameter, "vertex outside the set");
    CoordSet cross = hull_signature(pc, s).crossing;
    auto y = pc.vertex_at(pc.coords(x) ^ cross);
    if (y && s.test(*y)) return y;
    return std::nullopt;
}

std::optional<int> global_antipode(const PartialCube& pc, int x) {
    return pc.vertex_at(pc.coords(x) ^ pc.all_classes());
}

bool is_antipodal(const PartialCube& pc, const VertexSet& s) {
    if (s.none() || !is_convex(pc, s)) return false;
    CoordSet cross = hull_signature(pc, s).crossing;
    bool ok = true;
    s.for_each([&](int x) {
        if (!ok) return;
        auto y = pc.vertex_at(pc.coords(x) ^ cross);
        if (!y || !s.test(*y)) ok = false;
    });
    return ok;
}

std::vector<VertexSet> antipodal_subgraphs(const PartialCube& pc) {
    std::vector<VertexSet> out;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (int u = 0; u < pc.vertex_count(); ++u)
        for (int v = u; v < pc.vertex_count(); ++v) {
            VertexSet pair(pc.vertex_count());
            pair.set(u);
            pair.set(v);
            VertexSet hull = convex_hull(pc, pair);
            if (!seen.insert(hull).second) continue;
            if (is_antipodal(pc, hull)) out.push_back(hull);
        }
    return out;
}

std::optional<int> gate(const PartialCube& pc, const VertexSet& s, int x) {
    if (!is_convex(pc, s)) throw PcError(Errc::NotConvex, "gate needs a convex set");
    HullSignature h = hull_signature(pc, s);
    // X(S) o X(x): fixed signs of S, x's signs on the crossing classes. The
    // result lies in every halfspace containing S, so membership in S is
    // equivalent to being a vertex at all.
    CoordSet w = h.plus | (pc.coords(x) & h.crossing);
    return pc.vertex_at(w);
}

bool is_gated(const PartialCube& pc, const VertexSet& s) {
    if (!is_convex(pc, s)) throw PcError(Errc::NotConvex, "is_gated needs a convex set");
    HullSignature h = hull_signature(pc, s);
    for (int x = 0; x < pc.vertex_count(); ++x) {
        if (s.test(x)) continue;
        if (!pc.vertex_at(h.plus | (pc.coords(x) & h.crossing))) return false;
    }
    return true;
}

std::optional<AffinityCertificate> is_affine(const PartialCube& pc) {
    int n = pc.vertex_count();
    CoordSet all = pc.all_classes();

    std::vector<std::pair<int, int>> global_pairs;  // (w, -w), every orientation
    for (int w = 0; w < n; ++w) {
        auto mw = pc.vertex_at(pc.coords(w) ^ all);
        if (mw) global_pairs.emplace_back(w, *mw);
    }

    AffinityCertificate cert;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if ((pc.coords(u) ^ pc.coords(v)) != all)
                if (u <= v) cert.na_pairs.emplace_back(u, v);
            bool found = false;
            for (auto [w, mw] : global_pairs) {
                CoordSet cu = pc.coords(u) ^ pc.coords(w);
                CoordSet cv = pc.coords(v) ^ pc.coords(mw);
                if (!cu.intersects(cv)) {
                    cert.pair_witness[{u, v}] = {w, mw};
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
    return cert;
}

PartialCube antipodal_extension(const PartialCube& pc) {
    auto cert = is_affine(pc);
    if (!cert) throw PcError(Errc::NotAffine, "antipodal extension needs an affine graph");

    int n = pc.vertex_count();
    CoordSet all = pc.all_classes();
    std::vector<std::pair<int, int>> edges = pc.edges();
    for (auto [u, v] : pc.edges()) edges.emplace_back(u + n, v + n);
    for (int w = 0; w < n; ++w) {
        auto mw = pc.vertex_at(pc.coords(w) ^ all);
        if (mw) edges.emplace_back(std::min(w, *mw + n), std::max(w, *mw + n));
    }
    Graph g = Graph::from_edges(2 * n, std::move(edges));
    PartialCube ext = embed_or_throw(g);
    if (!is_antipodal(ext, ext.full_vertex_set()))
        throw PcError(Errc::InternalMismatch, "antipodal extension is not antipodal");
    return ext;
}

std::vector<VertexSet> conformal_subgraphs(const PartialCube& pc) {
    if (!is_affine(pc)) throw PcError(Errc::NotAffine, "conformal subgraphs need an affine host");
    int n = pc.vertex_count();
    CoordSet all = pc.all_classes();

    std::vector<char> has_global(n, 0);
    for (int x = 0; x < n; ++x) has_global[x] = pc.vertex_at(pc.coords(x) ^ all).has_value();

    std::vector<VertexSet> out;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            VertexSet pair(n);
            pair.set(u);
            pair.set(v);
            VertexSet hull = convex_hull(pc, pair);
            if (!seen.insert(hull).second) continue;

            CoordSet cross = crossing_classes(pc, hull);
            bool biconditional = true;
            hull.for_each([&](int x) {
                if (!biconditional) return;
                auto ax = pc.vertex_at(pc.coords(x) ^ cross);
                bool local = ax && hull.test(*ax);
                if (local != static_cast<bool>(has_global[x])) biconditional = false;
            });
            if (!biconditional) continue;

            // conformal subgraphs are affine subgraphs; check affinity of the
            // hull as a partial cube in its own right
            std::vector<int> members = hull.to_indices();
            std::vector<int> sub_global;
            for (int w : members) {
                auto mw = pc.vertex_at(pc.coords(w) ^ cross);
                if (mw && hull.test(*mw)) sub_global.push_back(w);
            }
            bool affine = true;
            for (std::size_t i = 0; i < members.size() && affine; ++i)
                for (std::size_t j = 0; j < members.size() && affine; ++j) {
                    bool found = false;
                    for (int w : sub_global) {
                        int mw = *pc.vertex_at(pc.coords(w) ^ cross);
                        CoordSet cu = pc.coords(members[i]) ^ pc.coords(w);
                        CoordSet cv = pc.coords(members[j]) ^ pc.coords(mw);
                        if (!cu.intersects(cv)) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) affine = false;
                }
            if (affine) out.push_back(hull);
        }
    return out;
}

}  // namespace pcube
