#include "lpp/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace lpp {

namespace {

struct PathAccumulator {
    double best = -1.0;
    std::uint64_t best_count = 0;
    std::uint64_t total = 0;

    void visit(double sum) {
        ++total;
        if (sum > best) {
            best = sum;
            best_count = 1;
        } else if (sum == best) {
            ++best_count;
        }
    }
};

void walk(const TimeGrid& t, int cx, int cy, int tx, int ty, double acc, PathAccumulator& out) {
    acc += t.at(cx, cy);
    if (cx == tx && cy == ty) {
        out.visit(acc);
        return;
    }
    if (cx < tx) walk(t, cx + 1, cy, tx, ty, acc, out);
    if (cy < ty) walk(t, cx, cy + 1, tx, ty, acc, out);
}

}  // namespace

BruteForceResult brute_force_g(const TimeGrid& times) {
    if (times.width > 8 || times.height > 8)
        throw std::invalid_argument("brute_force_g: grid larger than 8x8");
    for (int y = 0; y < times.height; ++y)
        for (int x = 0; x < times.width; ++x)
            if (!times.has(x, y)) throw std::invalid_argument("brute_force_g: unset cell in grid");

    BruteForceResult out;
    out.width = times.width;
    out.height = times.height;
    const std::size_t cells = static_cast<std::size_t>(times.width) * times.height;
    out.g.resize(cells);
    out.max_paths.resize(cells);
    out.paths_enumerated.resize(cells);
    for (int y = 0; y < times.height; ++y) {
        for (int x = 0; x < times.width; ++x) {
            PathAccumulator acc;
            walk(times, 0, 0, x, y, 0.0, acc);
            const std::size_t i = static_cast<std::size_t>(y) * times.width + x;
            out.g[i] = acc.best;
            out.max_paths[i] = acc.best_count;
            out.paths_enumerated[i] = acc.total;
        }
    }
    return out;
}

}  // namespace lpp
