#include "hyperspec/error.hpp"

namespace hyperspec {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonUniformEdge: return "NonUniformEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::InputNotATree: return "InputNotATree";
    case Errc::UniformityMismatch: return "UniformityMismatch";
    case Errc::VertexNotInBase: return "VertexNotInBase";
    case Errc::ParseError: return "ParseError";
    case Errc::OddUniformity: return "OddUniformity";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotConnected: return "NotConnected";
    case Errc::WrongUniformity: return "WrongUniformity";
    case Errc::BranchNotOddBipartite: return "BranchNotOddBipartite";
    case Errc::InvalidBipartition: return "InvalidBipartition";
    case Errc::NotPowerHypertree: return "NotPowerHypertree";
    case Errc::ZeroRootEntry: return "ZeroRootEntry";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace hyperspec
