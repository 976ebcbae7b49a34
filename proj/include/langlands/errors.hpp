#pragma once

#include <stdexcept>
#include <string>

namespace langlands {

// Each failure condition named in a module contract gets its own type,
// so tests and the CLI can catch exactly what they expect.

struct ZeroElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionLoss : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAdmissible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotRegular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IncompatibleVarpiOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedPresentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormNotSurjective : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent computation routes disagreed.  This is always a bug in
// the workbench, never bad input data.
struct CrossCheckFailure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace langlands
