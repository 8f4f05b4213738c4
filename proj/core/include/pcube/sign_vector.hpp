#ifndef PCUBE_SIGN_VECTOR_HPP
#define PCUBE_SIGN_VECTOR_HPP

#include <string>

#include "pcube/bits.hpp"
#include "pcube/errors.hpp"

namespace pcube {

// Element of {+,-,0}^E, stored as two disjoint masks.
struct SignVec {
    int size = 0;
    CoordSet pos, neg;

    static SignVec zero(int k) { return SignVec{k, {}, {}}; }
    static SignVec from_string(const std::string& s);

    CoordSet support() const { return pos | neg; }
    CoordSet zero_set() const { return CoordSet::low_bits(size).andnot(support()); }

    char at(int e) const { return pos.test(e) ? '+' : neg.test(e) ? '-' : '0'; }
    bool full_support() const { return support() == CoordSet::low_bits(size); }

    SignVec negated() const { return SignVec{size, neg, pos}; }
    SignVec reoriented(CoordSet a) const {
        return SignVec{size, pos.andnot(a) | (neg & a), neg.andnot(a) | (pos & a)};
    }
    // Drop coordinate e, packing the remaining ones.
    SignVec drop(int e) const {
        CoordSet keep = CoordSet::low_bits(size).andnot(CoordSet::bit(e));
        return SignVec{size - 1, pos.compress(keep), neg.compress(keep)};
    }

    std::string to_string() const {
        std::string s(size, '0');
        for (int e = 0; e < size; ++e) s[e] = at(e);
        return s;
    }

    friend bool operator==(const SignVec& a, const SignVec& b) {
        return a.size == b.size && a.pos == b.pos && a.neg == b.neg;
    }
    friend bool operator!=(const SignVec& a, const SignVec& b) { return !(a == b); }
    friend bool operator<(const SignVec& a, const SignVec& b) {
        return a.to_string() < b.to_string();  // ASCII: '+' < '-' < '0'
    }
};

// Composition: X's sign where nonzero, else Y's.
SignVec compose(const SignVec& x, const SignVec& y);

// Separator S(X,Y): coordinates with strictly opposite signs.
CoordSet separator(const SignVec& x, const SignVec& y);

// Composition with the separator coordinates zeroed out.
SignVec affine_compose(const SignVec& x, const SignVec& y);

}  // namespace pcube

#endif
