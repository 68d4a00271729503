#pragma once

#include <stdexcept>
#include <string>

namespace qsd {

enum class ErrorKind {
  Dimension,
  EnumerationBudget,
  UndefinedMinimum,
  NoSelfDualCode,
  Permutation,
  UnknownSeed,
  DegenerateNeighbor,
  Precondition,
  SamplingExhausted,
  Parse,
  InfeasibleParameters,
  DegenerateDesign,
  Membership,
  Stage2Overflow,
  InternalConsistency,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qsd
