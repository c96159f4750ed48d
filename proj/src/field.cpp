#include "lpp/field.hpp"

#include <algorithm>
#include <memory>

#include "lpp/parallel.hpp"

namespace lpp {

namespace {

// Refuse parent maps that would not fit in sane memory before allocating.
constexpr std::uint64_t kParentMapByteCap = 1ull << 31;  // 2 GiB

// Below this many sites a diagonal is cheaper to do on the calling thread.
constexpr std::int64_t kParallelGrain = 4096;

}  // namespace

ParentMap::ParentMap(int n, GridMode mode) : n_(n), mode_(mode) {
    if (n < 0) throw std::invalid_argument("ParentMap: negative size");
    offsets_.resize(static_cast<std::size_t>(n) + 2);
    std::uint64_t total = 0;
    for (int y = 0; y <= n; ++y) {
        offsets_[static_cast<std::size_t>(y)] = static_cast<std::size_t>(total);
        total += static_cast<std::uint64_t>(row_bits(y) + 7) / 8;
        if (total > kParentMapByteCap)
            throw std::length_error("parent map too large for addressable memory");
    }
    offsets_.back() = static_cast<std::size_t>(total);
    bits_.assign(static_cast<std::size_t>(total), 0);
}

PassageField compute_field(const TimeSource& times, int n, FieldOptions options) {
    if (n < 1) throw std::invalid_argument("compute_field: size must be positive");
    const int last_diagonal = options.mode == GridMode::Square ? 2 * n : n;
    if (options.keep_diagonals > last_diagonal)
        throw std::invalid_argument("compute_field: keep_diagonals exceeds field size");

    PassageField field;
    field.times_ = times;
    field.n_ = n;
    field.mode_ = options.mode;
    field.parents_ = ParentMap(n, options.mode);  // may throw before any sweep work

    const bool square = options.mode == GridMode::Square;
    const int kmax = square ? 2 * n : n;
    std::vector<double> prev(static_cast<std::size_t>(n) + 1);
    std::vector<double> cur(static_cast<std::size_t>(n) + 1);

    std::unique_ptr<ThreadPool> pool;
    if (options.workers > 1) pool = std::make_unique<ThreadPool>(options.workers);

    field.iface_x_.reserve(static_cast<std::size_t>(n) + 1);
    field.iface_x_.push_back(0);

    ParentMap& parents = field.parents_;
    for (int k = 0; k <= kmax; ++k) {
        const std::int64_t xmin = square ? std::max(0, k - n) : 0;
        const std::int64_t xmax = std::min(k, n);
        const double* p = prev.data();
        double* c = cur.data();
        auto body = [&times, &parents, p, c, k](std::int64_t b, std::int64_t e) {
            for (std::int64_t x = b; x < e; ++x) {
                const std::int64_t y = k - x;
                const double w = times(x, y);
                double g;
                if (k == 0) {
                    g = w;
                } else if (x == 0) {
                    g = p[0] + w;
                    parents.set(x, y, true);
                } else if (y == 0) {
                    g = p[x - 1] + w;
                    parents.set(x, y, false);
                } else {
                    const double left = p[x - 1];
                    const double bottom = p[x];
                    const bool bit = bottom > left;  // tie -> left parent
                    g = (bit ? bottom : left) + w;
                    parents.set(x, y, bit);
                }
                c[x] = g;
            }
        };
        if (pool && xmax + 1 - xmin >= kParallelGrain)
            pool->parallel_for(xmin, xmax + 1, body);
        else
            body(xmin, xmax + 1);

        if (k <= options.keep_diagonals)
            field.kept_.emplace_back(cur.begin() + xmin, cur.begin() + xmax + 1);
        if (k >= 1 && k <= n) {
            const std::int32_t px = field.iface_x_.back();
            field.iface_x_.push_back(cur[static_cast<std::size_t>(px) + 1] < cur[px] ? px + 1 : px);
        }
        if (k == kmax) {
            field.far_xmin_ = static_cast<int>(xmin);
            field.far_.assign(cur.begin() + xmin, cur.begin() + xmax + 1);
        }
        std::swap(prev, cur);
    }
    return field;
}

DiagonalVectors diagonal_vectors(const PassageField& field, int m) {
    if (m < 1) throw std::invalid_argument("diagonal_vectors: m must be positive");
    const auto g_by_x = field.diagonal(m);  // throws "diagonal not kept"
    DiagonalVectors out;
    out.m = m;
    out.g.resize(static_cast<std::size_t>(m) + 1);
    out.x.resize(static_cast<std::size_t>(m) + 1);
    out.y.resize(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        const Site z{m - i, i};
        out.g[static_cast<std::size_t>(i)] = g_by_x[static_cast<std::size_t>(z.x)];
        out.x[static_cast<std::size_t>(i)] = field.times()(z);
        out.y[static_cast<std::size_t>(i)] =
            out.g[static_cast<std::size_t>(i)] - out.x[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace lpp
