#pragma once

#include <cstdint>
#include <vector>

#include "lpp/field.hpp"

namespace lpp {

inline constexpr std::uint16_t kNoLabel = 0xFFFF;

// Root labels of the competing subtrees hanging off anti-diagonal d: root i
// is the site (i, d - i), and every site with |z| >= d inherits the label of
// its parent. Geodesics do not cross, so labels on each anti-diagonal form
// contiguous runs.
struct ClusterLabeling {
    int n = 0;  // labeled through anti-diagonal n
    int d = 0;  // root diagonal
    std::vector<std::uint16_t> labels;       // triangular layout, kNoLabel below d
    std::vector<std::uint64_t> boundary_hits;  // per root, sites owned on diagonal n

    std::uint16_t label_at(Site z) const {
        const std::int64_t k = z.l1();
        if (z.x < 0 || z.y < 0 || k > n) return kNoLabel;
        return labels[static_cast<std::size_t>(k * (k + 1) / 2 + z.x)];
    }
    bool root_alive(int root) const { return boundary_hits[static_cast<std::size_t>(root)] > 0; }
    int roots() const { return d + 1; }
};

// Forward wavefront sweep propagating root indices; no parent map is built.
ClusterLabeling label_clusters(const TimeSource& times, int n, int d);

inline ClusterLabeling label_clusters(const EnvSpec& spec, int n, int d) {
    return label_clusters(TimeSource(spec), n, d);
}

// The staircase separating the subtrees of (1,0) and (0,1), stepping toward
// the smaller passage time.
struct InterfacePath {
    std::vector<Site> sites;  // phi_0 = (0,0) .. phi_n
    double angle = 0.0;       // atan2 direction of phi_n
};

InterfacePath competition_interface(const PassageField& field, int n);

// A direction on the far diagonal where cluster ownership changes hands.
struct SplitAngle {
    double angle = 0.0;
    Site site;                 // boundary site carrying the angle (larger-x side)
    std::uint16_t left_root = 0;   // owner on the higher-angle side
    std::uint16_t right_root = 0;  // owner on the lower-angle side
};

// Label changes along anti-diagonal n, scanned from (n,0) to (0,n); angles
// come out strictly increasing. n may be any diagonal <= labeling.n.
std::vector<SplitAngle> split_directions(const ClusterLabeling& labeling, int n);

// Fraction of the labeled part of [0, n]^2 owned by the given root
// (sites below the root diagonal are excluded from both counts).
double subtree_density(const ClusterLabeling& labeling, Site root, int n);

}  // namespace lpp
