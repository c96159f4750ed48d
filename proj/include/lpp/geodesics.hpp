#pragma once

#include <cstdint>
#include <vector>

#include "lpp/field.hpp"

namespace lpp {

enum class StepDir : std::uint8_t { Right, Up };

// A directed lattice path; consecutive sites differ by (1,0) or (0,1).
struct GeodesicPath {
    std::vector<Site> sites;
    std::vector<StepDir> steps;

    const Site& endpoint() const { return sites.back(); }
};

// The unique maximizing path from the origin to z, read off the parent map.
GeodesicPath geodesic_to(const PassageField& field, Site z);

// Maximum Euclidean distance from a path site to the chord [origin, endpoint].
double transversal_fluctuation(const GeodesicPath& path);

enum class SurvivorSide : std::uint8_t { High, Low };

// From `start`, follow the unique child whose subtree reaches anti-diagonal
// `n`; where both children survive, go Up (High) or Right (Low). The returned
// path begins at `start` and ends on diagonal n. Throws if start's subtree
// dies before diagonal n.
GeodesicPath extreme_survivor_path(const PassageField& field, Site start, SurvivorSide side, int n);

}  // namespace lpp
