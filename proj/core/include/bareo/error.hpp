#pragma once

#include <stdexcept>
#include <string>

namespace bareo {

/// Error categories shared by every module. The CLI maps any Error to
/// exit code 1; the code() survives the throw so tests can assert on it.
enum class Errc {
    LoopEdge,
    UnknownEndpoint,
    DuplicateVertex,
    UnknownVertex,
    UnknownEdge,
    NotDisjoint,
    BadParameter,
    PartialMap,
    UnknownPoint,
    AmbientMismatch,
    TooLarge,
    EmptyGraph,
    DomainMismatch,
    NotHomomorphism,
    NotWeakHomomorphism,
    SameVertex,
    NameClash,
    StaleEdge,
    NotASubdivision,
    NotContinuous,
    NotVertexMap,
    Disconnected,
    UnreachableCodomain,
    NotInjective,
    IsolatedVertexPresent,
    NotBijective,
    InverseNotContinuous,
    NotColorable,
    NoEdges,
    NotFactorable,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace bareo
