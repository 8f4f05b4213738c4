#include "pcube/minors.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>

#include "pcube/canonical.hpp"
#include "pcube/metric.hpp"

namespace pcube {

namespace {

void check_class_index(const PartialCube& pc, int f) {
    if (f < 0 || f >= pc.class_count())
        throw PcError(Errc::BadIndex, "class " + std::to_string(f));
}

// d restricted to the subgraph induced by s equals d in pc?
bool induces_isometric(const PartialCube& pc, const VertexSet& s) {
    std::vector<int> members = s.to_indices();
    if (members.empty()) return false;
    std::vector<int> pos(pc.vertex_count(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
    std::vector<int> dist(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[i] = 0;
        std::queue<int> q;
        q.push(static_cast<int>(i));
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int w : pc.neighbors(members[a])) {
                int b = pos[w];
                if (b >= 0 && dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    q.push(b);
                }
            }
        }
        for (std::size_t j = 0; j < members.size(); ++j)
            if (dist[j] != pc.dist(members[i], members[j])) return false;
    }
    return true;
}

}  // namespace

PartialCube contract(const PartialCube& pc, int f) {
    check_class_index(pc, f);
    CoordSet keep = pc.all_classes().andnot(CoordSet::bit(f));
    std::vector<CoordSet> coords;
    coords.reserve(pc.vertex_count());
    std::unordered_set<CoordSet, CoordSetHash> seen;
    for (int v = 0; v < pc.vertex_count(); ++v) {
        CoordSet c = pc.coords(v).compress(keep);
        if (seen.insert(c).second) coords.push_back(c);
    }
    return PartialCube::from_coords(pc.class_count() - 1, std::move(coords), false);
}

PartialCube restrict_halfspace(const PartialCube& pc, int f, char sign) {
    check_class_index(pc, f);
    if (sign != '+' && sign != '-') throw PcError(Errc::BadParameter, "sign must be + or -");
    const VertexSet& side = pc.halfspace(f, sign == '+');

    CoordSet any_plus, all_plus = pc.all_classes();
    side.for_each([&](int v) {
        any_plus = any_plus | pc.coords(v);
        all_plus = all_plus & pc.coords(v);
    });
    // f is constant on the halfspace, and other classes can become constant
    CoordSet keep = (any_plus.andnot(all_plus)).andnot(CoordSet::bit(f));

    std::vector<CoordSet> coords;
    coords.reserve(side.count());
    side.for_each([&](int v) { coords.push_back(pc.coords(v).compress(keep)); });
    return PartialCube::from_coords(keep.count(), std::move(coords), false);
}

std::optional<std::string> validate_expansion(const PartialCube& pc, const ExpansionSpec& spec) {
    if (spec.v1.universe() != pc.vertex_count() || spec.v2.universe() != pc.vertex_count())
        return "vertex sets sized for a different graph";
    if (spec.v1.none() || spec.v2.none()) return "both sides must be nonempty";
    if ((spec.v1 | spec.v2) != pc.full_vertex_set()) return "sides do not cover the graph";
    for (auto [u, v] : pc.edges()) {
        bool u1 = spec.v1.test(u), u2 = spec.v2.test(u);
        bool v1 = spec.v1.test(v), v2 = spec.v2.test(v);
        if ((u1 && !u2 && v2 && !v1) || (v1 && !v2 && u2 && !u1))
            return "edge joins v1\\v2 to v2\\v1";
    }
    if (!induces_isometric(pc, spec.v1)) return "v1 is not isometric";
    if (!induces_isometric(pc, spec.v2)) return "v2 is not isometric";
    return std::nullopt;
}

PartialCube expand(const PartialCube& pc, const ExpansionSpec& spec) {
    if (auto reason = validate_expansion(pc, spec))
        throw PcError(Errc::InvalidExpansion, *reason);
    int k = pc.class_count();
    if (k + 1 > CoordSet::max_bits) throw PcError(Errc::TooManyClasses);
    std::vector<CoordSet> coords;
    coords.reserve(spec.v1.count() + spec.v2.count());
    spec.v1.for_each([&](int v) { coords.push_back(pc.coords(v)); });
    spec.v2.for_each([&](int v) {
        CoordSet c = pc.coords(v);
        c.set(k);
        coords.push_back(c);
    });
    return PartialCube::from_coords(k + 1, std::move(coords), false);
}

PeripheralSides is_peripheral(const PartialCube& pc, int f) {
    check_class_index(pc, f);
    VertexSet matched_minus(pc.vertex_count()), matched_plus(pc.vertex_count());
    for (auto [u, v] : pc.class_edges(f)) {
        (pc.on_plus_side(u, f) ? matched_plus : matched_minus).set(u);
        (pc.on_plus_side(v, f) ? matched_plus : matched_minus).set(v);
    }
    bool minus_peri = matched_minus == pc.halfspace(f, false);
    bool plus_peri = matched_plus == pc.halfspace(f, true);
    if (minus_peri && plus_peri) return PeripheralSides::Both;
    if (minus_peri) return PeripheralSides::Minus;
    if (plus_peri) return PeripheralSides::Plus;
    return PeripheralSides::None;
}

namespace {

struct CoordPairHash {
    std::size_t operator()(const std::pair<CoordSet, CoordSet>& p) const {
        return CoordSetHash{}(p.first) * 1000003u ^ CoordSetHash{}(p.second);
    }
};

struct MinorSearch {
    const PartialCube& host;
    const PartialCube& pattern;
    std::string pattern_key;
    std::vector<int> pattern_deg;
    std::unordered_set<std::pair<CoordSet, CoordSet>, CoordPairHash> seen;
    std::optional<MinorWitness> found;

    bool candidate_matches(int kp, const std::vector<CoordSet>& rows) {
        std::unordered_set<CoordSet, CoordSetHash> set(rows.begin(), rows.end());
        std::vector<int> deg;
        deg.reserve(rows.size());
        for (const auto& r : rows) {
            int d = 0;
            for (int f = 0; f < kp; ++f) d += set.count(r ^ CoordSet::bit(f));
            deg.push_back(d);
        }
        std::sort(deg.begin(), deg.end());
        if (deg != pattern_deg) return false;
        return canonical_key_of_coords(kp, rows) == pattern_key;
    }

    // Evaluate the hull described by (fixed, signs): try all contraction
    // subsets of its crossing classes.
    void evaluate(CoordSet fixed, CoordSet signs, const std::vector<int>& chosen) {
        CoordSet crossing = host.all_classes().andnot(fixed);
        int kk = crossing.count(), kp = pattern.class_count();
        if (kk < kp) return;

        VertexSet hull = host.full_vertex_set();
        fixed.for_each([&](int f) { hull &= host.halfspace(f, signs.test(f)); });
        if (hull.count() < pattern.vertex_count()) return;
        std::vector<CoordSet> member_coords;
        member_coords.reserve(hull.count());
        hull.for_each([&](int v) { member_coords.push_back(host.coords(v)); });

        std::vector<int> cls = crossing.to_indices();
        int pick = kk - kp;
        std::vector<int> comb(pick);
        // lexicographic combinations of the contraction subset
        auto try_comb = [&](const std::vector<int>& idx) -> bool {
            CoordSet keep = crossing;
            for (int i : idx) keep.reset(cls[i]);
            std::vector<CoordSet> rows;
            rows.reserve(member_coords.size());
            for (const auto& c : member_coords) rows.push_back(c.compress(keep));
            std::sort(rows.begin(), rows.end());
            rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
            if (static_cast<int>(rows.size()) != pattern.vertex_count()) return false;
            if (!candidate_matches(kp, rows)) return false;

            MinorWitness w;
            fixed.for_each([&](int f) { w.restricted_signs[f] = signs.test(f) ? '+' : '-'; });
            for (int i : idx) w.contracted_classes.push_back(cls[i]);
            w.vertex_subset = chosen;
            found = w;
            return true;
        };
        if (pick == 0) {
            try_comb({});
            return;
        }
        for (int i = 0; i < pick; ++i) comb[i] = i;
        while (true) {
            if (try_comb(comb)) return;
            int i = pick - 1;
            while (i >= 0 && comb[i] == kk - pick + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < pick; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    // Depth-first over vertex subsets in lexicographic (prefix) order; the
    // hull only depends on the signature (fixed, signs & fixed), so a node
    // is evaluated only when its signature is new. Adding a vertex that
    // leaves the signature unchanged needs no lookup at all.
    void walk(std::vector<int>& chosen, CoordSet fixed, CoordSet first_signs,
              bool signature_changed) {
        if (found) return;
        if (signature_changed && seen.insert({fixed, first_signs & fixed}).second)
            evaluate(fixed, first_signs, chosen);
        if (found) return;
        if (static_cast<int>(chosen.size()) == pattern.vertex_count()) return;
        // once nothing is fixed the signature can never change again
        if (!chosen.empty() && fixed.none()) return;
        int start = chosen.empty() ? 0 : chosen.back() + 1;
        for (int v = start; v < host.vertex_count(); ++v) {
            CoordSet child_fixed =
                chosen.empty() ? host.all_classes()
                               : fixed.andnot(host.coords(v) ^ first_signs);
            CoordSet child_signs = chosen.empty() ? host.coords(v) : first_signs;
            chosen.push_back(v);
            walk(chosen, child_fixed, child_signs, chosen.size() == 1 || child_fixed != fixed);
            chosen.pop_back();
            if (found) return;
        }
    }
};

}  // namespace

std::optional<MinorWitness> pc_minor(const PartialCube& host, const PartialCube& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.class_count() > host.class_count()) return std::nullopt;

    MinorSearch search{host, pattern, pattern.canonical_key(), {}, {}, std::nullopt};
    for (int v = 0; v < pattern.vertex_count(); ++v)
        search.pattern_deg.push_back(static_cast<int>(pattern.neighbors(v).size()));
    std::sort(search.pattern_deg.begin(), search.pattern_deg.end());

    std::vector<int> chosen;
    search.walk(chosen, host.all_classes(), CoordSet{}, false);
    return search.found;
}

PartialCube apply_minor_witness(const PartialCube& host, const MinorWitness& w) {
    VertexSet hull = host.full_vertex_set();
    CoordSet fixed;
    for (auto [f, sign] : w.restricted_signs) {
        check_class_index(host, f);
        fixed.set(f);
        hull &= host.halfspace(f, sign == '+');
    }
    CoordSet keep = host.all_classes().andnot(fixed);
    for (int f : w.contracted_classes) {
        check_class_index(host, f);
        keep.reset(f);
    }
    if (hull.none()) throw PcError(Errc::EmptyResult, "witness restricts to nothing");
    std::vector<CoordSet> rows;
    hull.for_each([&](int v) { rows.push_back(host.coords(v).compress(keep)); });
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return PartialCube::from_coords(keep.count(), std::move(rows), false);
}

namespace {

PartialCube cube_family(int n, const std::vector<std::uint64_t>& deleted) {
    std::set<std::uint64_t> del(deleted.begin(), deleted.end());
    std::vector<CoordSet> coords;
    CoordSet any, all = CoordSet::low_bits(n);
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        if (del.count(x)) continue;
        CoordSet c;
        c.w0 = x;
        any = any | c;
        all = all & c;
        coords.push_back(c);
    }
    // deletions can silence a coordinate entirely (Q_1 minus a vertex)
    CoordSet keep = any.andnot(all);
    if (keep != CoordSet::low_bits(n))
        for (auto& c : coords) c = c.compress(keep);
    return PartialCube::from_coords(keep.count(), std::move(coords), true);
}

}  // namespace

PartialCube generate(Family family, int n, int m) {
    bool cube_like = family == Family::Cube || family == Family::CubeMinusVertex ||
                     family == Family::CubeMinusAntipodes || family == Family::QMinusStar ||
                     family == Family::QMinusMinusM;
    if (cube_like && n > 20) throw PcError(Errc::BadParameter, "cube dimension too large");
    switch (family) {
        case Family::Cube:
            if (n < 0) throw PcError(Errc::BadParameter, "cube needs n >= 0");
            return cube_family(n, {});
        case Family::CubeMinusVertex: {
            if (n < 1) throw PcError(Errc::BadParameter, "cube minus vertex needs n >= 1");
            return cube_family(n, {(1ULL << n) - 1});
        }
        case Family::CubeMinusAntipodes: {
            if (n < 3) throw PcError(Errc::BadParameter, "cube minus antipodes needs n >= 3");
            std::uint64_t ones = (1ULL << n) - 1;
            return cube_family(n, {0, ones});
        }
        case Family::QMinusStar: {
            if (n < 4) throw PcError(Errc::BadParameter, "Q^{-*} needs n >= 4");
            std::uint64_t ones = (1ULL << n) - 1;
            return cube_family(n, {ones, 1ULL});
        }
        case Family::QMinusMinusM: {
            if (n < 4) throw PcError(Errc::BadParameter, "Q^{--}(m) needs n >= 4");
            if (m < 0 || m > n) throw PcError(Errc::BadParameter, "m must be in [0, n]");
            std::vector<std::uint64_t> del = {(1ULL << n) - 1, 0};
            for (int i = 0; i < m; ++i) del.push_back(1ULL << i);
            return cube_family(n, del);
        }
        case Family::Path: {
            if (n < 1) throw PcError(Errc::BadParameter, "path needs n >= 1");
            if (n > CoordSet::max_bits + 1) throw PcError(Errc::TooManyClasses);
            std::vector<CoordSet> coords(n);
            for (int i = 0; i < n; ++i) coords[i] = CoordSet::low_bits(i);
            return PartialCube::from_coords(n - 1, std::move(coords), true);
        }
        case Family::EvenCycle: {
            if (n < 4 || n % 2) throw PcError(Errc::BadParameter, "even cycle needs even n >= 4");
            int t = n / 2;
            std::vector<CoordSet> coords(n);
            for (int i = 0; i <= t; ++i) coords[i] = CoordSet::low_bits(i);
            for (int i = t + 1; i < n; ++i)
                coords[i] = CoordSet::low_bits(t).andnot(CoordSet::low_bits(i - t));
            return PartialCube::from_coords(t, std::move(coords), true);
        }
    }
    throw PcError(Errc::BadParameter, "unknown family");
}

std::vector<PartialCube> excluded_family(ExcludedKind kind, int r) {
    if (r < 3) throw PcError(Errc::BadParameter, "excluded families need r >= 3");
    std::vector<PartialCube> raw;
    if (kind == ExcludedKind::QMinusR) {
        for (int n = 4; n <= r + 1; ++n) {
            raw.push_back(generate(Family::QMinusStar, n));
            for (int m = 1; m <= n; ++m) raw.push_back(generate(Family::QMinusMinusM, n, m));
        }
        raw.push_back(generate(Family::QMinusMinusM, r + 2, r + 2));
        raw.push_back(generate(Family::Cube, r + 1));
    } else {
        for (int n = 3; n <= r + 1; ++n) raw.push_back(generate(Family::CubeMinusAntipodes, n));
        raw.push_back(generate(Family::Cube, r + 1));
    }
    std::vector<PartialCube> out;
    std::set<std::string> keys;
    for (auto& pc : raw)
        if (keys.insert(pc.canonical_key()).second) out.push_back(std::move(pc));
    return out;
}

std::vector<ExpansionSpec> enumerate_expansions(const PartialCube& pc) {
    int n = pc.vertex_count();
    if (n > 20) throw PcError(Errc::BadParameter, "expansion enumeration is desk-scale (n <= 20)");
    std::vector<ExpansionSpec> out;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        VertexSet v1(n), v2(n);
        for (int i = 0; i < n; ++i) {
            int d = static_cast<int>(c % 3);
            c /= 3;
            if (d != 1) v1.set(i);
            if (d != 0) v2.set(i);
        }
        ExpansionSpec spec{std::move(v1), std::move(v2)};
        if (!validate_expansion(pc, spec)) out.push_back(std::move(spec));
    }
    return out;
}

void enumerate_partial_cubes(int max_vertices,
                             const std::function<void(const PartialCube&)>& sink,
                             const EnumerateOptions& opts) {
    if (max_vertices < 1) throw PcError(Errc::BadParameter, "max_vertices must be >= 1");
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(opts.max_seconds));
    auto expired = [&] {
        return opts.max_seconds > 0 && std::chrono::steady_clock::now() > deadline;
    };

    // bucket per vertex count, keyed canonically for dedup + sorted emission
    std::vector<std::map<std::string, PartialCube>> bucket(max_vertices + 1);
    PartialCube k1 = PartialCube::from_coords(0, {CoordSet{}}, false);
    bucket[1].emplace(k1.canonical_key(), std::move(k1));

    for (int size = 1; size <= max_vertices; ++size) {
        for (auto& [key, pc] : bucket[size]) {
            if (expired()) throw PcError(Errc::Timeout, "enumeration time limit");
            sink(pc);
            if (size == max_vertices) continue;
            for (auto& spec : enumerate_expansions(pc)) {
                int target = spec.v1.count() + spec.v2.count();
                if (target > max_vertices) continue;
                PartialCube grown = expand(pc, spec);
                std::string gk = grown.canonical_key();
                bucket[target].emplace(std::move(gk), std::move(grown));
            }
        }
    }
}

std::vector<PartialCube> enumerate_partial_cubes(int max_vertices, const EnumerateOptions& opts) {
    std::vector<PartialCube> out;
    enumerate_partial_cubes(max_vertices, [&](const PartialCube& pc) { out.push_back(pc); }, opts);
    return out;
}

std::vector<PartialCube> antipodal_expansions(const PartialCube& pc) {
    if (!is_antipodal(pc, pc.full_vertex_set()))
        throw PcError(Errc::NotAntipodal, "antipodal expansions need an antipodal base");
    int n = pc.vertex_count();
    if (n > 20) throw PcError(Errc::BadParameter, "expansion enumeration is desk-scale (n <= 20)");
    std::vector<int> anti(n);
    for (int v = 0; v < n; ++v) anti[v] = *global_antipode(pc, v);

    std::map<std::string, PartialCube> out;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        VertexSet v1(n), v2(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) {
                v1.set(v);
                v2.set(anti[v]);
            }
        ExpansionSpec spec{std::move(v1), std::move(v2)};
        if (validate_expansion(pc, spec)) continue;
        PartialCube grown = expand(pc, spec);
        std::string key = grown.canonical_key();
        out.emplace(std::move(key), std::move(grown));
    }
    std::vector<PartialCube> result;
    result.reserve(out.size());
    for (auto& [key, g] : out) result.push_back(std::move(g));
    return result;
}

}  // namespace pcube
