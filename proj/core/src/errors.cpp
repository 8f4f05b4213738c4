#include "pcube/errors.hpp"

namespace pcube {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DisconnectedGraph: return "DisconnectedGraph";
        case Errc::NotBipartite: return "NotBipartite";
        case Errc::NonConvexWSet: return "NonConvexWSet";
        case Errc::EmptyGraph: return "EmptyGraph";
        case Errc::TooManyClasses: return "TooManyClasses";
        case Errc::BadIndex: return "BadIndex";
        case Errc::BadParameter: return "BadParameter";
        case Errc::InvalidExpansion: return "InvalidExpansion";
        case Errc::NotAntipodal: return "NotAntipodal";
        case Errc::NotAffine: return "NotAffine";
        case Errc::NotConvex: return "NotConvex";
        case Errc::EmptySet: return "EmptySet";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::EmptyResult: return "EmptyResult";
        case Errc::DuplicateVector: return "DuplicateVector";
        case Errc::NoTopes: return "NoTopes";
        case Errc::NotPartialCubeSystem: return "NotPartialCubeSystem";
        case Errc::InternalMismatch: return "InternalMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::Timeout: return "Timeout";
    }
    return "UnknownError";
}

}  // namespace pcube
