#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lpp/env.hpp"

namespace lpp {

// Dense rectangle of explicit times anchored at the origin. Cells may be
// left unset (NaN) to mark "no value here".
struct TimeGrid {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // row-major, y * width + x; NaN = unset

    TimeGrid() = default;
    TimeGrid(int w, int h)
        : width(w), height(h),
          values(static_cast<std::size_t>(w) * h, std::numeric_limits<double>::quiet_NaN()) {
        if (w <= 0 || h <= 0) throw std::invalid_argument("TimeGrid: dimensions must be positive");
    }

    // Build from row vectors ordered y = 0 upward.
    static TimeGrid from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("TimeGrid: empty rows");
        TimeGrid g(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
        for (int y = 0; y < g.height; ++y) {
            if (static_cast<int>(rows[y].size()) != g.width)
                throw std::invalid_argument("TimeGrid: ragged rows");
            for (int x = 0; x < g.width; ++x) g.set(x, y, rows[y][x]);
        }
        return g;
    }

    bool in_bounds(std::int64_t x, std::int64_t y) const {
        return x >= 0 && y >= 0 && x < width && y < height;
    }
    bool has(std::int64_t x, std::int64_t y) const {
        return in_bounds(x, y) && !std::isnan(values[static_cast<std::size_t>(y) * width + x]);
    }
    double at(std::int64_t x, std::int64_t y) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    void set(std::int64_t x, std::int64_t y, double v) {
        values[static_cast<std::size_t>(y) * width + x] = v;
    }
};

// Where a field's times come from: a hashed environment, optionally shadowed
// by an explicit grid (fixtures, witness assignments). Value semantics.
class TimeSource {
public:
    TimeSource() = default;
    TimeSource(EnvSpec spec) : spec_(spec) {}  // NOLINT: implicit by design
    TimeSource(TimeGrid grid, EnvSpec base = {}) : spec_(base), grid_(std::move(grid)), has_grid_(true) {}

    double operator()(std::int64_t x, std::int64_t y) const {
        if (has_grid_ && grid_.has(x, y)) return grid_.at(x, y);
        return sample_time(spec_, Site{x, y});
    }
    double operator()(Site z) const { return (*this)(z.x, z.y); }

    const EnvSpec& env() const { return spec_; }
    bool has_overlay() const { return has_grid_; }
    const TimeGrid& overlay() const { return grid_; }

private:
    EnvSpec spec_{};
    TimeGrid grid_{};
    bool has_grid_ = false;
};

}  // namespace lpp
