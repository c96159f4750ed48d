#include "lpp/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpp {

GeodesicPath geodesic_to(const PassageField& field, Site z) {
    if (!field.contains(z)) throw std::out_of_range("geodesic_to: site outside field");
    GeodesicPath path;
    path.sites.reserve(static_cast<std::size_t>(z.l1()) + 1);
    path.steps.reserve(static_cast<std::size_t>(z.l1()));
    Site cur = z;
    while (!(cur.x == 0 && cur.y == 0)) {
        path.sites.push_back(cur);
        if (field.parents().get(cur.x, cur.y)) {
            path.steps.push_back(StepDir::Up);
            cur.y -= 1;
        } else {
            path.steps.push_back(StepDir::Right);
            cur.x -= 1;
        }
    }
    path.sites.push_back(cur);
    std::reverse(path.sites.begin(), path.sites.end());
    std::reverse(path.steps.begin(), path.steps.end());
    return path;
}

double transversal_fluctuation(const GeodesicPath& path) {
    const Site& end = path.endpoint();
    if (end.x == 0 && end.y == 0)
        throw std::invalid_argument("transversal_fluctuation: endpoint is the origin");
    const double ex = static_cast<double>(end.x);
    const double ey = static_cast<double>(end.y);
    const double norm = std::hypot(ex, ey);
    double worst = 0.0;
    // Monotone paths project inside the chord, so segment distance = line distance.
    for (const Site& s : path.sites) {
        const double cross = std::abs(static_cast<double>(s.x) * ey - static_cast<double>(s.y) * ex);
        worst = std::max(worst, cross / norm);
    }
    return worst;
}

namespace {

// One bit per site of {|z| <= n}: does the subtree rooted there reach
// diagonal n? Filled by a backward sweep over the parent bits.
class SurvivalMask {
public:
    SurvivalMask(const PassageField& field, int n) : n_(n) {
        const std::size_t sites = static_cast<std::size_t>(n + 1) * (n + 2) / 2;
        alive_.assign(sites, false);
        for (std::int64_t x = 0; x <= n; ++x) alive_[index(x, n - x)] = true;
        const ParentMap& parents = field.parents();
        for (int k = n - 1; k >= 0; --k) {
            for (std::int64_t x = 0; x <= k; ++x) {
                const std::int64_t y = k - x;
                bool alive = false;
                // right child (x+1, y) hangs off us iff its bit is 0
                if (!parents.get(x + 1, y) && alive_[index(x + 1, y)]) alive = true;
                // up child (x, y+1) hangs off us iff its bit is 1
                if (!alive && parents.get(x, y + 1) && alive_[index(x, y + 1)]) alive = true;
                alive_[index(x, y)] = alive;
            }
        }
    }

    bool alive(std::int64_t x, std::int64_t y) const { return alive_[index(x, y)]; }

private:
    std::size_t index(std::int64_t x, std::int64_t y) const {
        const std::int64_t k = x + y;
        return static_cast<std::size_t>(k * (k + 1) / 2 + x);
    }
    int n_;
    std::vector<bool> alive_;
};

}  // namespace

GeodesicPath extreme_survivor_path(const PassageField& field, Site start, SurvivorSide side, int n) {
    if (field.mode() != GridMode::Diagonal)
        throw std::invalid_argument("extreme_survivor_path: diagonal-mode field required");
    if (n > field.size()) throw std::out_of_range("extreme_survivor_path: diagonal beyond field");
    if (!field.contains(start) || start.l1() > n)
        throw std::out_of_range("extreme_survivor_path: start outside field");

    const SurvivalMask mask(field, n);
    if (!mask.alive(start.x, start.y))
        throw std::runtime_error("extreme_survivor_path: start does not survive");

    const ParentMap& parents = field.parents();
    GeodesicPath path;
    path.sites.push_back(start);
    Site cur = start;
    while (cur.l1() < n) {
        const bool right_ok = !parents.get(cur.x + 1, cur.y) && mask.alive(cur.x + 1, cur.y);
        const bool up_ok = parents.get(cur.x, cur.y + 1) && mask.alive(cur.x, cur.y + 1);
        bool go_up;
        if (right_ok && up_ok)
            go_up = side == SurvivorSide::High;
        else
            go_up = up_ok;
        if (go_up) {
            cur.y += 1;
            path.steps.push_back(StepDir::Up);
        } else {
            cur.x += 1;
            path.steps.push_back(StepDir::Right);
        }
        path.sites.push_back(cur);
    }
    return path;
}

}  // namespace lpp
