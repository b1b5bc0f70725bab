#pragma once

#include <stdexcept>
#include <string>

namespace pennyflip {

struct NotHermitian : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPSD : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotUnitary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotNormalized : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ProbabilityOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadTolerance : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WrongStrategyKind : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ProfileShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadInitialState : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace pennyflip
