#include "pcube/recognize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "pcube/canonical.hpp"
#include "pcube/zones.hpp"

namespace pcube {

namespace {

struct HullInfo {
    VertexSet hull;
    CoordSet crossing;
    int d = 0;  // distance of the generating pair
};

}  // namespace

ClassificationReport classify_graph(const PartialCube& pc) {
    ClassificationReport rep;
    int n = pc.vertex_count();
    CoordSet all = pc.all_classes();

    std::vector<char> has_global(n, 0);
    for (int x = 0; x < n; ++x) has_global[x] = pc.vertex_at(pc.coords(x) ^ all).has_value();

    // conv(u,v) over all pairs, in scan order, deduplicated
    std::vector<HullInfo> hulls;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            CoordSet diff = pc.coords(u) ^ pc.coords(v);
            VertexSet hull = pc.full_vertex_set();
            all.andnot(diff).for_each(
                [&](int f) { hull &= pc.halfspace(f, pc.on_plus_side(u, f)); });
            if (!seen.insert(hull).second) continue;
            hulls.push_back(HullInfo{std::move(hull), diff, diff.count()});
        }

    rep.is_com = true;
    rep.is_lop = true;
    for (const auto& h : hulls) {
        // antipodal: x <-> x ^ crossing must pair S with itself
        bool antipodal = true;
        h.hull.for_each([&](int x) {
            if (!antipodal) return;
            auto y = pc.vertex_at(pc.coords(x) ^ h.crossing);
            if (!y || !h.hull.test(*y)) antipodal = false;
        });
        if (!antipodal) continue;

        bool is_cube = h.d < 31 && h.hull.count() == (1 << h.d);
        if (!is_cube) rep.is_lop = false;

        // gated: the composed vertex X(S) o X(x) must exist for every x
        CoordSet sig_plus;
        bool first = true;
        h.hull.for_each([&](int x) {
            if (first) {
                sig_plus = pc.coords(x).andnot(h.crossing);
                first = false;
            }
        });
        int bad_vertex = -1;
        for (int x = 0; x < n && bad_vertex < 0; ++x) {
            if (h.hull.test(x)) continue;
            if (!pc.vertex_at(sig_plus | (pc.coords(x) & h.crossing))) bad_vertex = x;
        }
        if (bad_vertex >= 0 && rep.is_com) {
            rep.is_com = false;
            rep.certificate = NonGatedCertificate{h.hull, bad_vertex};
        }
    }
    if (!rep.is_com) rep.is_lop = false;

    rep.is_om = rep.is_com;
    for (int x = 0; x < n && rep.is_om; ++x)
        if (!has_global[x]) rep.is_om = false;

    rep.is_aom = false;
    if (rep.is_com && is_affine(pc)) {
        rep.is_aom = true;
        for (const auto& s : conformal_subgraphs(pc))
            if (!is_gated(pc, s)) {
                rep.is_aom = false;
                break;
            }
    }

    rep.rank = graph_rank(pc);
    return rep;
}

bool is_com_via_zones(const PartialCube& pc) { return iterated_zone_check(pc); }

namespace {

struct FamilyCache {
    std::mutex mutex;
    std::map<std::pair<ExcludedKind, int>, std::vector<PartialCube>> table;

    const std::vector<PartialCube>& get(ExcludedKind kind, int r) {
        std::lock_guard<std::mutex> lock(mutex);
        auto key = std::make_pair(kind, r);
        auto it = table.find(key);
        if (it == table.end()) it = table.emplace(key, excluded_family(kind, r)).first;
        return it->second;
    }
};

FamilyCache& family_cache() {
    static FamilyCache cache;
    return cache;
}

BoundedRankResult bounded_rank_test(const PartialCube& pc, ExcludedKind kind, int r) {
    if (r < 3) throw PcError(Errc::BadParameter, "bounded-rank recognition needs r >= 3");
    const auto& family = family_cache().get(kind, r);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].vertex_count() > pc.vertex_count()) continue;
        if (auto w = pc_minor(pc, family[i]))
            return BoundedRankResult{false, static_cast<int>(i), std::move(w)};
    }
    return BoundedRankResult{true, -1, std::nullopt};
}

}  // namespace

BoundedRankResult is_com_bounded_rank(const PartialCube& pc, int r) {
    return bounded_rank_test(pc, ExcludedKind::QMinusR, r);
}

BoundedRankResult is_lop_bounded_rank(const PartialCube& pc, int r) {
    return bounded_rank_test(pc, ExcludedKind::QMinusMinusR, r);
}

int graph_rank(const PartialCube& pc) {
    // Contracting everything outside R yields Q_|R| iff the coordinates
    // restricted to R hit all 2^|R| patterns; such R form a downward-closed
    // family, searched level by level.
    int k = pc.class_count(), n = pc.vertex_count();
    int cap = 0;
    while ((1LL << (cap + 1)) <= n) ++cap;
    cap = std::min(cap, k);

    auto shattered = [&](const std::vector<int>& set) {
        std::uint64_t want = 1ULL << set.size();
        std::vector<char> hit(want, 0);
        std::uint64_t found = 0;
        for (int v = 0; v < n; ++v) {
            std::uint64_t pat = 0;
            for (std::size_t i = 0; i < set.size(); ++i)
                pat |= static_cast<std::uint64_t>(pc.on_plus_side(v, set[i])) << i;
            if (!hit[pat]) {
                hit[pat] = 1;
                if (++found == want) return true;
            }
        }
        return false;
    };

    std::vector<std::vector<int>> frontier = {{}};
    int rank = 0;
    while (rank < cap) {
        std::vector<std::vector<int>> next;
        for (const auto& set : frontier) {
            int start = set.empty() ? 0 : set.back() + 1;
            for (int f = start; f < k; ++f) {
                std::vector<int> cand = set;
                cand.push_back(f);
                if (shattered(cand)) next.push_back(std::move(cand));
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
        ++rank;
    }
    return rank;
}

}  // namespace pcube
