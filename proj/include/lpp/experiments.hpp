#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpp/env.hpp"
#include "lpp/localtree.hpp"

namespace lpp {

// Binomial estimate with a 95% Wilson score interval (stable at extreme
// proportions, where the normal approximation collapses).
struct McSummary {
    std::uint64_t reps = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;

    static McSummary from_counts(std::uint64_t hits, std::uint64_t reps);
};

struct ExperimentConfig {
    std::uint64_t seed_base = 0;
    std::uint64_t reps = 0;
    std::vector<int> sizes;  // strictly increasing box sizes
    int n = 0;               // coexistence order
    int m = 0;               // tree order
    double alpha = 0.0;      // direction, radians in [0, pi/2]
    double scale = 1.0;
    int workers = 1;
};

// Replicate r always runs on EnvSpec{replicate_seed(seed_base, r), scale};
// merging is a sum of integer counts, so results are identical for any
// worker count.

struct CoexistenceSizeRow {
    int n = 0;
    McSummary mc;
};

struct CoexistenceResult {
    std::vector<CoexistenceSizeRow> per_size;
    std::uint64_t violations = 0;  // per-replicate monotonicity breaks (must be 0)
    double wall_time_s = 0.0;
};

// Hit at size N iff all n subtrees rooted on diagonal n-1 still own sites on
// diagonal N. One environment per replicate serves every size, so the
// per-replicate indicators are nested and nonincreasing in N.
CoexistenceResult estimate_coexistence(const ExperimentConfig& cfg);

struct TmFrequencyRow {
    TmTree tree;
    McSummary mc;
};

struct TmFrequencyResult {
    int m = 0;
    std::vector<TmFrequencyRow> histogram;  // ascending mask order
    double wall_time_s = 0.0;
};

// Empirical law of the geodesic tree restricted to {|z| <= m}.
TmFrequencyResult tm_frequency(const ExperimentConfig& cfg);

struct CoalescencePairRow {
    int n_small = 0;
    int n_large = 0;
    McSummary mc;  // hit iff agreement >= n_small / 2
    double agree_mean = 0.0;
    int agree_min = 0;
    int agree_max = 0;
    std::vector<int> agreement_lengths;  // raw, one per replicate
};

struct CoalescenceResult {
    double alpha = 0.0;
    std::vector<CoalescencePairRow> pairs;  // consecutive size pairs
    double wall_time_s = 0.0;
};

// Geodesics aimed at direction alpha from two scales share a prefix; the
// agreement length is the last diagonal where they still coincide.
CoalescenceResult coalescence(const ExperimentConfig& cfg);

struct FluctuationSizeRow {
    int n = 0;
    std::uint64_t reps = 0;
    double mean_fluctuation = 0.0;
    double mean_over_n = 0.0;
};

struct FluctuationResult {
    std::vector<FluctuationSizeRow> per_size;
    double slope = 0.0;  // least-squares slope of log mean vs log N
    double wall_time_s = 0.0;
};

// Mean transversal fluctuation of the geodesic to the midpoint of diagonal N.
FluctuationResult fluctuation_scaling(const ExperimentConfig& cfg);

// JSON result documents (see docs/experiment_result.schema.json).
std::string to_json(const CoexistenceResult& r, const ExperimentConfig& cfg);
std::string to_json(const TmFrequencyResult& r, const ExperimentConfig& cfg);
std::string to_json(const CoalescenceResult& r, const ExperimentConfig& cfg);
std::string to_json(const FluctuationResult& r, const ExperimentConfig& cfg);

}  // namespace lpp
