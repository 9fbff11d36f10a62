#include "bareo/error.hpp"

namespace bareo {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::UnknownEndpoint: return "UnknownEndpoint";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::BadParameter: return "BadParameter";
    case Errc::PartialMap: return "PartialMap";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::NotWeakHomomorphism: return "NotWeakHomomorphism";
    case Errc::SameVertex: return "SameVertex";
    case Errc::NameClash: return "NameClash";
    case Errc::StaleEdge: return "StaleEdge";
    case Errc::NotASubdivision: return "NotASubdivision";
    case Errc::NotContinuous: return "NotContinuous";
    case Errc::NotVertexMap: return "NotVertexMap";
    case Errc::Disconnected: return "Disconnected";
    case Errc::UnreachableCodomain: return "UnreachableCodomain";
    case Errc::NotInjective: return "NotInjective";
    case Errc::IsolatedVertexPresent: return "IsolatedVertexPresent";
    case Errc::NotBijective: return "NotBijective";
    case Errc::InverseNotContinuous: return "InverseNotContinuous";
    case Errc::NotColorable: return "NotColorable";
    case Errc::NoEdges: return "NoEdges";
    case Errc::NotFactorable: return "NotFactorable";
    }
    return "Error";
}

} // namespace bareo
