#include "heatlab/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace heatlab {

std::vector<std::string> preset_names() {
    return {"cos", "cos+halfcos2", "expcos", "delta", "uniform"};
}

bool is_function_preset(const std::string& name) {
    return name == "cos" || name == "cos+halfcos2" || name == "expcos";
}

std::function<double(double)> preset_function(const std::string& name) {
    if (name == "cos") return [](double x) { return std::cos(x); };
    if (name == "cos+halfcos2")
        return [](double x) { return std::cos(x) + 0.5 * std::cos(2.0 * x); };
    if (name == "expcos") return [](double x) { return std::exp(std::cos(x)); };
    throw std::invalid_argument("unknown function preset: " + name);
}

GridFunction preset_grid(const std::string& name, int eta) {
    if (is_function_preset(name)) return sample_real(preset_function(name), eta);
    if (name == "delta") {
        GridFunction f{CircleGrid(eta)};
        f.values[0] = cplx(1.0);
        return f;
    }
    if (name == "uniform") {
        GridFunction f{CircleGrid(eta)};
        for (cplx& v : f.values) v = cplx(1.0);
        return f;
    }
    throw std::invalid_argument("unknown grid preset: " + name);
}

std::vector<Rational> preset_chain_initial(const std::string& name, int eta) {
    if (eta < 2) throw std::invalid_argument("preset_chain_initial: need eta >= 2");
    std::vector<Rational> w(eta, Rational(0));
    if (name == "delta") {
        w[0] = 1;
        return w;
    }
    if (name == "uniform") {
        for (Rational& v : w) v = Rational(1, eta);
        return w;
    }
    if (name == "ramp") {
        w[0] = 2;
        w[1] = 1;
        return w;
    }
    throw std::invalid_argument("unknown chain preset: " + name);
}

} // namespace heatlab
