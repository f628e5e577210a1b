#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

struct PrecisionContext {
    long bits = 256;
    enum class Rounding { Nearest, Downward, Upward } mode = Rounding::Nearest;
};

// Thrown when an enumeration would exceed a configured budget; the CLI maps
// it to exit code 3.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
    long bits = 256;
    int threads = 1;
    long max_cover_intervals = 1 << 20;   // |B|^m budget for covers and orbits
    long max_sum_nodes = 40'000'000;      // pair-tree nodes in sum_cover
    long max_window_nodes = 80'000'000;   // search-tree nodes in approximate_spectra
    int inner_period_cap = 12;            // period bound for inner spectrum points

    void validate() const {
        if (bits < 64) throw std::invalid_argument("precision must be >= 64 bits");
        if (threads < 1) throw std::invalid_argument("threads must be positive");
        if (max_cover_intervals < 1 || max_sum_nodes < 1 || max_window_nodes < 1 ||
            inner_period_cap < 1)
            throw std::invalid_argument("budgets must be positive");
    }
};

}  // namespace spectra
