#pragma once

#include <stdexcept>
#include <string>

namespace heatlab {

// Thrown when a computation would exceed the configured cell budget
// (see cell_budget below). Runners map it to exit code 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Memory budget for grid*time storage, in cells. Overridable through the
// HEATLAB_BUDGET_CELLS environment variable.
long long cell_budget();

} // namespace heatlab
