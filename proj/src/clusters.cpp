#include "lpp/clusters.hpp"

#include <cmath>
#include <stdexcept>

namespace lpp {

ClusterLabeling label_clusters(const TimeSource& times, int n, int d) {
    if (n < 1) throw std::invalid_argument("label_clusters: size must be positive");
    if (d < 0 || d >= n) throw std::invalid_argument("label_clusters: need 0 <= d < n");
    if (d + 1 > 0xFFFF) throw std::invalid_argument("label_clusters: too many roots");

    ClusterLabeling out;
    out.n = n;
    out.d = d;
    out.labels.assign(static_cast<std::size_t>(n + 1) * (n + 2) / 2, kNoLabel);
    out.boundary_hits.assign(static_cast<std::size_t>(d) + 1, 0);

    std::vector<double> prev_g(static_cast<std::size_t>(n) + 1);
    std::vector<double> cur_g(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        std::uint16_t* lab = out.labels.data() + static_cast<std::size_t>(k) * (k + 1) / 2;
        const std::uint16_t* plab =
            out.labels.data() + static_cast<std::size_t>(k - 1) * k / 2;  // valid for k >= 1
        for (std::int64_t x = 0; x <= k; ++x) {
            const std::int64_t y = k - x;
            const double w = times(x, y);
            if (k == 0) {
                cur_g[x] = w;
            } else if (x == 0) {
                cur_g[0] = prev_g[0] + w;
                if (k > d) lab[0] = plab[0];
            } else if (y == 0) {
                cur_g[x] = prev_g[x - 1] + w;
                if (k > d) lab[x] = plab[x - 1];
            } else {
                const double left = prev_g[x - 1];
                const double bottom = prev_g[x];
                const bool bit = bottom > left;  // tie -> left parent
                cur_g[x] = (bit ? bottom : left) + w;
                if (k > d) lab[x] = plab[bit ? x : x - 1];
            }
            if (k == d) lab[x] = static_cast<std::uint16_t>(x);
        }
        std::swap(prev_g, cur_g);
    }

    const std::uint16_t* far = out.labels.data() + static_cast<std::size_t>(n) * (n + 1) / 2;
    for (int x = 0; x <= n; ++x) ++out.boundary_hits[far[x]];
    return out;
}

InterfacePath competition_interface(const PassageField& field, int n) {
    const auto& trace = field.interface_x();
    if (n < 0 || n >= static_cast<int>(trace.size()))
        throw std::out_of_range("competition_interface: diagonal beyond traced range");
    InterfacePath path;
    path.sites.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        path.sites.push_back(Site{trace[static_cast<std::size_t>(k)],
                                  k - trace[static_cast<std::size_t>(k)]});
    path.angle = path.sites.back().angle();
    return path;
}

std::vector<SplitAngle> split_directions(const ClusterLabeling& labeling, int n) {
    if (n < 1 || n > labeling.n)
        throw std::invalid_argument("split_directions: diagonal not labeled");
    std::vector<SplitAngle> out;
    for (std::int64_t x = n; x >= 1; --x) {
        const Site here{x, n - x};
        const Site next{x - 1, n - x + 1};
        const std::uint16_t a = labeling.label_at(here);
        const std::uint16_t b = labeling.label_at(next);
        if (a != b) out.push_back(SplitAngle{here.angle(), here, b, a});
    }
    return out;
}

double subtree_density(const ClusterLabeling& labeling, Site root, int n) {
    if (root.l1() != labeling.d) throw std::invalid_argument("subtree_density: not a root site");
    if (2 * n > labeling.n)
        throw std::invalid_argument("subtree_density: square not fully labeled (need n <= N/2)");
    const std::uint16_t want = static_cast<std::uint16_t>(root.x);
    std::uint64_t counted = 0;
    std::uint64_t owned = 0;
    for (std::int64_t y = 0; y <= n; ++y) {
        for (std::int64_t x = 0; x <= n; ++x) {
            if (x + y < labeling.d) continue;
            ++counted;
            if (labeling.label_at(Site{x, y}) == want) ++owned;
        }
    }
    return counted == 0 ? 0.0 : static_cast<double>(owned) / static_cast<double>(counted);
}

}  // namespace lpp
