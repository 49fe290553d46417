#include "heatlab/errors.hpp"

#include <cstdlib>

namespace heatlab {

long long cell_budget() {
    static const long long budget = [] {
        const char* env = std::getenv("HEATLAB_BUDGET_CELLS");
        if (env != nullptr) {
            const long long v = std::atoll(env);
            if (v > 0) return v;
        }
        return 50'000'000LL;
    }();
    return budget;
}

} // namespace heatlab
