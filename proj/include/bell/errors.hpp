#pragma once

#include <stdexcept>

namespace bell {

// Input / format errors.
struct MalformedGraph6 : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct BadFamilyParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Precondition violations.
struct NotAClique : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TrianglePresent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotNearPerfect : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotUniquelyUnmatched : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotATree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadCycleLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Reconstruction failures: the input is not (a simple projection / multigraph
// of) a Bell coloring graph of the claimed kind.
struct NotPowerOfTwoOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoBroomSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotATreeResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotABellTreeGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotALineGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotABellMultigraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verification sweep found a violation of a claimed invariant.
struct CounterexampleFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bell
