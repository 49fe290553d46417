#pragma once

#include <functional>
#include <string>
#include <vector>

#include "heatlab/grid.hpp"
#include "heatlab/rational.hpp"

namespace heatlab {

// Named initial conditions shared by the CLI and the test suites:
//   cos           x -> cos x
//   cos+halfcos2  x -> cos x + (1/2) cos 2x
//   expcos        x -> e^{cos x}
//   delta         indicator of cell 0
//   uniform       constant 1
std::vector<std::string> preset_names();

bool is_function_preset(const std::string& name);

std::function<double(double)> preset_function(const std::string& name);

GridFunction preset_grid(const std::string& name, int eta);

// Chain-side presets of length eta: delta = (1,0,...), uniform = (1,...,1)/eta,
// ramp = (2,1,0,...).
std::vector<Rational> preset_chain_initial(const std::string& name, int eta);

} // namespace heatlab
