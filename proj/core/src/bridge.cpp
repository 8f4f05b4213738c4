#include "pcube/bridge.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <string>

#include "pcube/metric.hpp"

namespace pcube {

TopeGraphResult tope_graph(const SignSystem& l) {
    SimplifyResult simp = simplify(l);
    const SignSystem& s = simp.system;

    std::vector<SignVec> topes = s.topes();
    if (topes.empty()) throw PcError(Errc::NoTopes, "no full-support vector after simplification");
    std::sort(topes.begin(), topes.end());

    int n = static_cast<int>(topes.size());
    int k = s.ground;

    // every coordinate must take both signs among the topes, otherwise the
    // embedding into the coordinate cube is degenerate
    for (int e = 0; e < k; ++e) {
        bool p = false, m = false;
        for (const auto& t : topes) {
            p |= t.pos.test(e);
            m |= t.neg.test(e);
        }
        if (!p || !m)
            throw PcError(Errc::NotPartialCubeSystem,
                          "coordinate " + std::to_string(e) + " is one-sided on the topes");
    }

    // adjacency = sign distance 1; validate isometry by BFS
    std::vector<CoordSet> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = topes[i].pos;
    PartialCube pc = [&] {
        try {
            return PartialCube::from_coords(k, coords, true);
        } catch (const PcError& e) {
            throw PcError(Errc::NotPartialCubeSystem, e.what());
        }
    }();

    // each edge corresponds to a system vector with a single zero
    for (std::size_t ei = 0; ei < pc.edges().size(); ++ei) {
        auto [u, v] = pc.edges()[ei];
        const SignVec& a = topes[u];
        int f = pc.edge_class(ei);
        SignVec mid{k, a.pos.andnot(CoordSet::bit(f)), a.neg.andnot(CoordSet::bit(f))};
        if (!s.contains(mid))
            throw PcError(Errc::NotPartialCubeSystem,
                          "edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has no covector in the system");
    }

    return TopeGraphResult{std::move(pc), simp.coordinate_classes};
}

SignSystem covectors_of(const PartialCube& pc) {
    int k = pc.class_count();
    if (k > 20) throw PcError(Errc::BadParameter, "covector enumeration is desk-scale (k <= 20)");

    // (a) definitional: X such that X o (-T) is a vertex for every vertex T
    std::vector<SignVec> defn;
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        SignVec x = SignVec::zero(k);
        std::uint64_t c = code;
        for (int e = 0; e < k; ++e) {
            switch (c % 3) {
                case 1: x.pos.set(e); break;
                case 2: x.neg.set(e); break;
                default: break;
            }
            c /= 3;
        }
        CoordSet fixed = x.support();
        bool ok = true;
        for (int t = 0; t < pc.vertex_count() && ok; ++t) {
            // X o (-T): X's signs, the negated vertex elsewhere
            CoordSet neg_t = pc.coords(t) ^ pc.all_classes();
            ok = pc.vertex_at(x.pos | neg_t.andnot(fixed)).has_value();
        }
        if (ok) defn.push_back(x);
    }
    SignSystem by_definition = SignSystem::from_vectors(k, std::move(defn));

    // (b) structural: signatures of the antipodal gated subgraphs
    std::vector<SignVec> structural;
    for (const auto& s : antipodal_subgraphs(pc))
        if (is_gated(pc, s)) structural.push_back(signature(pc, s));
    std::sort(structural.begin(), structural.end());
    structural.erase(std::unique(structural.begin(), structural.end()), structural.end());
    SignSystem by_structure = SignSystem::from_vectors(k, std::move(structural));

    if (by_definition.vecs != by_structure.vecs)
        throw PcError(Errc::InternalMismatch,
                      "covector constructions disagree (definitional vs antipodal gated)");
    return by_definition;
}

SignSystem canonicalize_reorientation(const SignSystem& l) {
    std::vector<SignVec> topes = l.topes();
    if (topes.empty()) return l;
    // Flip some tope to all-plus (making it the lexicographically smallest
    // vector); among those candidates keep the smallest resulting system.
    std::optional<SignSystem> best;
    for (const auto& t : topes) {
        SignSystem cand = l.reoriented(t.neg);
        if (!best || cand.vecs < best->vecs) best = std::move(cand);
    }
    return *best;
}

}  // namespace pcube
