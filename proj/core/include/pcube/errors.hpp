#ifndef PCUBE_ERRORS_HPP
#define PCUBE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcube {

enum class Errc {
    DisconnectedGraph,
    NotBipartite,
    NonConvexWSet,
    EmptyGraph,
    TooManyClasses,
    BadIndex,
    BadParameter,
    InvalidExpansion,
    NotAntipodal,
    NotAffine,
    NotConvex,
    EmptySet,
    LengthMismatch,
    EmptyResult,
    DuplicateVector,
    NoTopes,
    NotPartialCubeSystem,
    InternalMismatch,
    ParseError,
    Timeout,
};

const char* errc_name(Errc c);

class PcError : public std::runtime_error {
public:
    PcError(Errc code, const std::string& detail)
        : std::runtime_error(detail.empty() ? std::string(errc_name(code))
                                            : std::string(errc_name(code)) + ": " + detail),
          code_(code) {}
    explicit PcError(Errc code) : PcError(code, "") {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace pcube

#endif
