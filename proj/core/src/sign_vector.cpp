#include "pcube/sign_vector.hpp"

namespace pcube {

SignVec SignVec::from_string(const std::string& s) {
    if (static_cast<int>(s.size()) > CoordSet::max_bits)
        throw PcError(Errc::TooManyClasses, "sign vector longer than 128");
    SignVec v;
    v.size = static_cast<int>(s.size());
    for (int e = 0; e < v.size; ++e) {
        switch (s[e]) {
            case '+': v.pos.set(e); break;
            case '-': v.neg.set(e); break;
            case '0': break;
            default: throw PcError(Errc::ParseError, std::string("bad sign character '") + s[e] + "'");
        }
    }
    return v;
}

SignVec compose(const SignVec& x, const SignVec& y) {
    if (x.size != y.size) throw PcError(Errc::LengthMismatch);
    CoordSet sx = x.support();
    return SignVec{x.size, x.pos | y.pos.andnot(sx), x.neg | y.neg.andnot(sx)};
}

CoordSet separator(const SignVec& x, const SignVec& y) {
    if (x.size != y.size) throw PcError(Errc::LengthMismatch);
    return (x.pos & y.neg) | (x.neg & y.pos);
}

SignVec affine_compose(const SignVec& x, const SignVec& y) {
    CoordSet s = separator(x, y);
    SignVec c = compose(x, y);
    return SignVec{c.size, c.pos.andnot(s), c.neg.andnot(s)};
}

}  // namespace pcube
