#include "pcube/sign_system.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <unordered_set>

namespace pcube {

namespace {

struct SignVecHash {
    std::size_t operator()(const SignVec& v) const {
        return CoordSetHash{}(v.pos) * 31u ^ CoordSetHash{}(v.neg);
    }
};

using VecSet = std::unordered_set<SignVec, SignVecHash>;

VecSet make_set(const SignSystem& l) { return VecSet(l.vecs.begin(), l.vecs.end()); }

}  // namespace

SignSystem SignSystem::from_vectors(int ground, std::vector<SignVec> vecs) {
    if (ground < 0 || ground > CoordSet::max_bits)
        throw PcError(Errc::TooManyClasses, "ground set larger than 128");
    if (vecs.empty()) throw PcError(Errc::EmptyResult, "a sign system must be nonempty");
    for (const auto& v : vecs)
        if (v.size != ground) throw PcError(Errc::LengthMismatch, "uneven vector lengths");
    std::sort(vecs.begin(), vecs.end());
    if (std::adjacent_find(vecs.begin(), vecs.end()) != vecs.end())
        throw PcError(Errc::DuplicateVector);
    SignSystem l;
    l.ground = ground;
    l.vecs = std::move(vecs);
    return l;
}

SignSystem SignSystem::full(int r) {
    if (r < 0 || r > 16) throw PcError(Errc::BadParameter, "full system is desk-scale (r <= 16)");
    std::vector<SignVec> vecs;
    std::string digits(r, '0');
    // all of {+,-,0}^r
    std::uint64_t total = 1;
    for (int i = 0; i < r; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < r; ++i) {
            digits[i] = "+-0"[c % 3];
            c /= 3;
        }
        vecs.push_back(SignVec::from_string(digits));
    }
    return from_vectors(r, std::move(vecs));
}

bool SignSystem::contains(const SignVec& x) const {
    return std::binary_search(vecs.begin(), vecs.end(), x);
}

std::vector<SignVec> SignSystem::topes() const {
    std::vector<SignVec> t;
    for (const auto& v : vecs)
        if (v.full_support()) t.push_back(v);
    return t;
}

SignSystem SignSystem::reoriented(CoordSet a) const {
    std::vector<SignVec> vecs;
    vecs.reserve(this->vecs.size());
    for (const auto& v : this->vecs) vecs.push_back(v.reoriented(a));
    return from_vectors(ground, std::move(vecs));
}

const AxiomViolation* AxiomReport::violation(const std::string& axiom) const {
    for (const auto& v : first_violations)
        if (v.axiom == axiom) return &v;
    return nullptr;
}

AxiomReport check_axioms(const SignSystem& l) {
    VecSet set = make_set(l);
    AxiomReport rep;
    auto fail = [&](const char* axiom, std::string witness) {
        rep.first_violations.push_back({axiom, std::move(witness)});
    };

    // (C): X o Y in L
    rep.c = true;
    for (const auto& x : l.vecs) {
        for (const auto& y : l.vecs)
            if (!set.count(compose(x, y))) {
                rep.c = false;
                fail("C", "X=" + x.to_string() + " Y=" + y.to_string());
                break;
            }
        if (!rep.c) break;
    }

    // (FS): X o -Y in L
    rep.fs = true;
    for (const auto& x : l.vecs) {
        for (const auto& y : l.vecs)
            if (!set.count(compose(x, y.negated()))) {
                rep.fs = false;
                fail("FS", "X=" + x.to_string() + " Y=" + y.to_string());
                break;
            }
        if (!rep.fs) break;
    }

    // (SE): for each e in S(X,Y) some Z with Z_e = 0 agreeing with X o Y
    // outside the separator
    rep.se = true;
    for (const auto& x : l.vecs) {
        for (const auto& y : l.vecs) {
            CoordSet sep = separator(x, y);
            if (sep.none()) continue;
            SignVec xy = compose(x, y);
            CoordSet outside = CoordSet::low_bits(l.ground).andnot(sep);
            bool pair_ok = true;
            sep.for_each([&](int e) {
                if (!pair_ok) return;
                bool found = false;
                for (const auto& z : l.vecs) {
                    if (z.pos.test(e) || z.neg.test(e)) continue;
                    if ((z.pos & outside) == (xy.pos & outside) &&
                        (z.neg & outside) == (xy.neg & outside)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    pair_ok = false;
                    fail("SE", "X=" + x.to_string() + " Y=" + y.to_string() + " e=" +
                                   std::to_string(e));
                }
            });
            if (!pair_ok) {
                rep.se = false;
                break;
            }
        }
        if (!rep.se) break;
    }

    // (IC): every completion of X's zero set stays in L
    rep.ic = true;
    for (const auto& x : l.vecs) {
        std::vector<int> zeros = x.zero_set().to_indices();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < zeros.size(); ++i) total *= 3;
        for (std::uint64_t code = 0; code < total && rep.ic; ++code) {
            SignVec y = x;
            std::uint64_t c = code;
            for (int e : zeros) {
                switch (c % 3) {
                    case 0: break;
                    case 1: y.pos.set(e); break;
                    case 2: y.neg.set(e); break;
                }
                c /= 3;
            }
            if (!set.count(y)) {
                rep.ic = false;
                fail("IC", "X=" + x.to_string() + " completion=" + y.to_string());
            }
        }
        if (!rep.ic) break;
    }

    // (Z)
    rep.z = set.count(SignVec::zero(l.ground)) > 0;
    if (!rep.z) fail("Z", "zero vector missing");

    // (Sym)
    rep.sym = true;
    for (const auto& x : l.vecs)
        if (!set.count(x.negated())) {
            rep.sym = false;
            fail("Sym", "X=" + x.to_string());
            break;
        }

    // (A): (X (+) -Y) o Z in L for all admitted triples. A pair (X,Y) is
    // admitted when for every e in S(X,-Y) and every W in L with W_e = 0
    // there are coordinates f, g outside S(X,-Y) with W_f != (X o -Y)_f and
    // W_g != (-X o Y)_g.
    rep.a = true;
    {
        std::vector<char> admitted(l.vecs.size() * l.vecs.size(), 0);
        for (std::size_t i = 0; i < l.vecs.size(); ++i)
            for (std::size_t j = 0; j < l.vecs.size(); ++j) {
                const SignVec& x = l.vecs[i];
                const SignVec y_neg = l.vecs[j].negated();
                CoordSet sep = separator(x, y_neg);
                CoordSet outside = CoordSet::low_bits(l.ground).andnot(sep);
                SignVec xy = compose(x, y_neg);                      // X o -Y
                SignVec yx = compose(x.negated(), l.vecs[j]);        // -X o Y
                bool ok = true;
                sep.for_each([&](int e) {
                    if (!ok) return;
                    for (const auto& w : l.vecs) {
                        if (w.pos.test(e) || w.neg.test(e)) continue;
                        // W_f != (X o -Y)_f for some f outside the separator
                        CoordSet diff_f =
                            ((w.pos ^ xy.pos) | (w.neg ^ xy.neg)) & outside;
                        CoordSet diff_g =
                            ((w.pos ^ yx.pos) | (w.neg ^ yx.neg)) & outside;
                        if (diff_f.none() || diff_g.none()) {
                            ok = false;
                            return;
                        }
                    }
                });
                admitted[i * l.vecs.size() + j] = ok;
            }
        for (std::size_t i = 0; i < l.vecs.size() && rep.a; ++i)
            for (std::size_t j = 0; j < l.vecs.size() && rep.a; ++j) {
                if (!admitted[i * l.vecs.size() + j]) continue;
                SignVec base = affine_compose(l.vecs[i], l.vecs[j].negated());
                for (const auto& z : l.vecs)
                    if (!set.count(compose(base, z))) {
                        rep.a = false;
                        fail("A", "X=" + l.vecs[i].to_string() + " Y=" + l.vecs[j].to_string() +
                                      " Z=" + z.to_string());
                        break;
                    }
            }
    }

    // implication chain sanity: IC => FS => C
    assert(!rep.fs || rep.c);
    assert(!rep.ic || rep.fs);
    return rep;
}

std::set<SystemClass> classify_system(const AxiomReport& r) {
    std::set<SystemClass> out;
    if (r.fs && r.se) out.insert(SystemClass::COM);
    if (r.z && r.fs && r.se) out.insert(SystemClass::OM);
    if (r.a && r.fs && r.se) out.insert(SystemClass::AOM);
    if (r.ic && r.se) out.insert(SystemClass::LOP);
    return out;
}

std::set<SystemClass> classify_system(const SignSystem& l) {
    return classify_system(check_axioms(l));
}

SignSystem system_minor(const SignSystem& l, MinorOp op, int e, char sign) {
    if (e < 0 || e >= l.ground) throw PcError(Errc::BadIndex, "coordinate " + std::to_string(e));
    std::vector<SignVec> out;
    for (const auto& x : l.vecs) {
        switch (op) {
            case MinorOp::Delete: out.push_back(x.drop(e)); break;
            case MinorOp::Hyperplane:
                if (!x.pos.test(e) && !x.neg.test(e)) out.push_back(x.drop(e));
                break;
            case MinorOp::Halfspace:
                if (sign != '+' && sign != '-')
                    throw PcError(Errc::BadParameter, "halfspace sign must be + or -");
                if ((sign == '+' ? x.pos : x.neg).test(e)) out.push_back(x.drop(e));
                break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw PcError(Errc::EmptyResult, "minor has no vectors");
    return SignSystem::from_vectors(l.ground - 1, std::move(out));
}

SimplifyResult simplify(const SignSystem& l) {
    SimplifyResult res;

    // N1*: a coordinate must take all three values
    std::vector<int> informative;
    for (int e = 0; e < l.ground; ++e) {
        bool has_p = false, has_m = false, has_z = false;
        for (const auto& x : l.vecs) {
            has_p |= x.pos.test(e);
            has_m |= x.neg.test(e);
            has_z |= !x.pos.test(e) && !x.neg.test(e);
        }
        if (has_p && has_m && has_z)
            informative.push_back(e);
        else
            res.dropped_redundant.push_back(e);
    }

    // N2*: group parallel coordinates; keep the lowest index of each class
    int m = static_cast<int>(informative.size());
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    auto products = [&](int e, int f) {
        bool plus = false, minus = false;
        for (const auto& x : l.vecs) {
            int se = x.pos.test(e) ? 1 : x.neg.test(e) ? -1 : 0;
            int sf = x.pos.test(f) ? 1 : x.neg.test(f) ? -1 : 0;
            int p = se * sf;
            plus |= p > 0;
            minus |= p < 0;
        }
        return std::make_pair(plus, minus);
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [plus, minus] = products(informative[i], informative[j]);
            if (!(plus && minus)) parent[find(i)] = find(j);  // parallel
        }

    std::map<int, std::vector<int>> classes;  // root -> members (orig indices)
    for (int i = 0; i < m; ++i) classes[find(i)].push_back(informative[i]);

    std::vector<std::pair<int, std::vector<int>>> ordered;  // (representative, class)
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        ordered.emplace_back(members.front(), members);
    }
    std::sort(ordered.begin(), ordered.end());

    CoordSet keep;
    for (auto& [rep, members] : ordered) {
        keep.set(rep);
        res.coordinate_classes.push_back(members);
        std::vector<bool> flips;
        for (int e : members) {
            auto [plus, minus] = products(rep, e);
            flips.push_back(minus && !plus);  // consistently opposite to rep
        }
        res.flipped.push_back(std::move(flips));
    }

    std::vector<SignVec> vecs;
    int new_ground = keep.count();
    for (const auto& x : l.vecs)
        vecs.push_back(SignVec{new_ground, x.pos.compress(keep), x.neg.compress(keep)});
    std::sort(vecs.begin(), vecs.end());
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
    res.system = SignSystem::from_vectors(new_ground, std::move(vecs));
    res.collapsed_to_point = new_ground == 0;
    return res;
}

int system_rank(const SignSystem& l) {
    // descending brute force: delete all but r coordinates, demand {+,-,0}^r.
    // 3^r can never exceed the stored vector count, which bounds r well below
    // any overflow concern.
    int upper = 0;
    for (std::uint64_t need = 3; upper < l.ground && need <= l.vecs.size(); need *= 3) ++upper;
    for (int r = upper; r >= 1; --r) {
        std::vector<int> comb(r);
        for (int i = 0; i < r; ++i) comb[i] = i;
        std::uint64_t want = 1;
        for (int i = 0; i < r; ++i) want *= 3;
        while (true) {
            CoordSet keep;
            for (int e : comb) keep.set(e);
            std::unordered_set<SignVec, SignVecHash> proj;
            for (const auto& x : l.vecs)
                proj.insert(SignVec{r, x.pos.compress(keep), x.neg.compress(keep)});
            if (proj.size() == want) return r;
            int i = r - 1;
            while (i >= 0 && comb[i] == l.ground - r + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return 0;
}

}  // namespace pcube
