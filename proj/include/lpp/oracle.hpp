#pragma once

#include <cstdint>
#include <vector>

#include "lpp/time_source.hpp"

namespace lpp {

// Exhaustive-path evaluation of the passage times on a small grid: the
// definition taken literally, independent of the wavefront recursion.
struct BruteForceResult {
    int width = 0;
    int height = 0;
    std::vector<double> g;                      // row-major best path sum
    std::vector<std::uint64_t> max_paths;       // paths attaining the best sum
    std::vector<std::uint64_t> paths_enumerated;  // C(x+y, x)

    double g_at(int x, int y) const { return g[static_cast<std::size_t>(y) * width + x]; }
    std::uint64_t max_paths_at(int x, int y) const {
        return max_paths[static_cast<std::size_t>(y) * width + x];
    }
    std::uint64_t paths_at(int x, int y) const {
        return paths_enumerated[static_cast<std::size_t>(y) * width + x];
    }
};

// Enumerates every monotone path to every site. Grids beyond 8x8 are refused.
BruteForceResult brute_force_g(const TimeGrid& times);

}  // namespace lpp
