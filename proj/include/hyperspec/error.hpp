#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperspec {

enum class Errc {
  InvalidArgument,
  NonUniformEdge,
  VertexOutOfRange,
  DuplicateEdge,
  InputNotATree,
  UniformityMismatch,
  VertexNotInBase,
  ParseError,
  OddUniformity,
  TooLarge,
  DimensionMismatch,
  ZeroVector,
  NotConnected,
  WrongUniformity,
  BranchNotOddBipartite,
  InvalidBipartition,
  NotPowerHypertree,
  ZeroRootEntry,
  HypothesisNotMet,
  BudgetExceeded,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this type; the code is stable
// and the message carries context (line numbers, offending vertex, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyperspec
