#include "lpp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "lpp/clusters.hpp"
#include "lpp/geodesics.hpp"

namespace lpp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_sizes(const ExperimentConfig& cfg, std::size_t at_least) {
    if (cfg.sizes.size() < at_least) throw std::invalid_argument("config: not enough sizes");
    for (std::size_t i = 0; i + 1 < cfg.sizes.size(); ++i)
        if (cfg.sizes[i] >= cfg.sizes[i + 1])
            throw std::invalid_argument("config: sizes must be strictly increasing");
    if (cfg.sizes.front() < 1) throw std::invalid_argument("config: sizes must be positive");
    if (cfg.reps == 0) throw std::invalid_argument("config: reps must be positive");
}

// Runs fn(r) for every replicate in [0, reps) across workers. fn must only
// write to its own replicate's slots.
void run_replicates(std::uint64_t reps, int workers,
                    const std::function<void(std::uint64_t)>& fn) {
    const int nw = std::max(1, std::min<int>(workers, static_cast<int>(reps)));
    if (nw == 1) {
        for (std::uint64_t r = 0; r < reps; ++r) fn(r);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(nw) - 1);
    auto span = [&](int w) {
        for (std::uint64_t r = w; r < reps; r += static_cast<std::uint64_t>(nw)) fn(r);
    };
    for (int w = 1; w < nw; ++w) threads.emplace_back(span, w);
    span(0);
    for (auto& t : threads) t.join();
}

EnvSpec replicate_env(const ExperimentConfig& cfg, std::uint64_t r) {
    return EnvSpec{replicate_seed(cfg.seed_base, r), cfg.scale};
}

// Site of anti-diagonal n whose direction is closest to alpha.
Site aim_site(int n, double alpha) {
    Site best{n, 0};
    double best_err = std::abs(best.angle() - alpha);
    for (std::int64_t x = n - 1; x >= 0; --x) {
        const Site s{x, n - x};
        const double err = std::abs(s.angle() - alpha);
        if (err < best_err) {
            best = s;
            best_err = err;
        }
    }
    return best;
}

nlohmann::json config_json(const ExperimentConfig& cfg) {
    nlohmann::json j{{"seed_base", cfg.seed_base},
                     {"reps", cfg.reps},
                     {"sizes", cfg.sizes},
                     {"scale", cfg.scale}};
    if (cfg.n > 0) j["n"] = cfg.n;
    if (cfg.m > 0) j["m"] = cfg.m;
    if (cfg.alpha > 0.0) j["alpha"] = cfg.alpha;
    return j;
}

nlohmann::json mc_json(int n, const McSummary& mc) {
    return nlohmann::json{{"N", n},          {"reps", mc.reps},       {"hits", mc.hits},
                          {"estimate", mc.estimate}, {"ci_low", mc.ci_low}, {"ci_high", mc.ci_high}};
}

}  // namespace

McSummary McSummary::from_counts(std::uint64_t hits, std::uint64_t reps) {
    if (reps == 0) throw std::invalid_argument("McSummary: reps must be positive");
    if (hits > reps) throw std::invalid_argument("McSummary: hits > reps");
    McSummary s;
    s.reps = reps;
    s.hits = hits;
    s.estimate = static_cast<double>(hits) / static_cast<double>(reps);
    const double z = 1.959963984540054;  // 97.5% normal quantile
    const double n = static_cast<double>(reps);
    const double p = s.estimate;
    const double denom = 1.0 + z * z / n;
    const double center = (p + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
    s.ci_low = std::max(0.0, center - half);
    s.ci_high = std::min(1.0, center + half);
    return s;
}

CoexistenceResult estimate_coexistence(const ExperimentConfig& cfg) {
    const auto start = Clock::now();
    check_sizes(cfg, 1);
    if (cfg.n < 2) throw std::invalid_argument("estimate_coexistence: n must be >= 2");
    if (cfg.sizes.front() < 4 * cfg.n)
        throw std::invalid_argument("estimate_coexistence: sizes must be >= 4n");

    const int d = cfg.n - 1;
    const int max_n = cfg.sizes.back();
    const std::size_t nsizes = cfg.sizes.size();
    std::vector<std::uint8_t> ind(cfg.reps * nsizes, 0);

    run_replicates(cfg.reps, cfg.workers, [&](std::uint64_t r) {
        const ClusterLabeling lab = label_clusters(replicate_env(cfg, r), max_n, d);
        for (std::size_t s = 0; s < nsizes; ++s) {
            const int k = cfg.sizes[s];
            const std::uint16_t* diag = lab.labels.data() + static_cast<std::size_t>(k) * (k + 1) / 2;
            std::uint64_t seen = 0;
            for (int x = 0; x <= k; ++x) seen |= 1ull << diag[x];
            ind[r * nsizes + s] = seen == (1ull << cfg.n) - 1 ? 1 : 0;
        }
    });

    CoexistenceResult out;
    for (std::size_t s = 0; s < nsizes; ++s) {
        std::uint64_t hits = 0;
        for (std::uint64_t r = 0; r < cfg.reps; ++r) hits += ind[r * nsizes + s];
        out.per_size.push_back({cfg.sizes[s], McSummary::from_counts(hits, cfg.reps)});
    }
    for (std::uint64_t r = 0; r < cfg.reps; ++r)
        for (std::size_t s = 0; s + 1 < nsizes; ++s)
            if (ind[r * nsizes + s] < ind[r * nsizes + s + 1]) ++out.violations;
    out.wall_time_s = seconds_since(start);
    return out;
}

TmFrequencyResult tm_frequency(const ExperimentConfig& cfg) {
    const auto start = Clock::now();
    if (cfg.m < 2 || cfg.m > 4)
        throw std::invalid_argument("tm_frequency: m must be in [2, 4]");
    if (cfg.reps == 0) throw std::invalid_argument("config: reps must be positive");

    const std::uint64_t ntrees = tm_tree_count(cfg.m);
    std::vector<std::uint32_t> which(cfg.reps, 0);
    run_replicates(cfg.reps, cfg.workers, [&](std::uint64_t r) {
        const PassageField field = compute_field(replicate_env(cfg, r), cfg.m, 0);
        which[r] = static_cast<std::uint32_t>(extract_tm(field, cfg.m).low_mask());
    });

    std::vector<std::uint64_t> hist(ntrees, 0);
    for (std::uint64_t r = 0; r < cfg.reps; ++r) ++hist[which[r]];

    TmFrequencyResult out;
    out.m = cfg.m;
    for (std::uint64_t mask = 0; mask < ntrees; ++mask) {
        TmTree tree(cfg.m);
        tree.assign_mask(mask);
        out.histogram.push_back({tree, McSummary::from_counts(hist[mask], cfg.reps)});
    }
    out.wall_time_s = seconds_since(start);
    return out;
}

CoalescenceResult coalescence(const ExperimentConfig& cfg) {
    const auto start = Clock::now();
    check_sizes(cfg, 2);
    if (cfg.alpha < 0.0 || cfg.alpha > std::asin(1.0) * 2.0)
        throw std::invalid_argument("coalescence: alpha must be in [0, pi/2]");

    const int max_n = cfg.sizes.back();
    const std::size_t npairs = cfg.sizes.size() - 1;
    std::vector<int> agree(cfg.reps * npairs, 0);

    std::vector<Site> targets;
    targets.reserve(cfg.sizes.size());
    for (int n : cfg.sizes) targets.push_back(aim_site(n, cfg.alpha));

    run_replicates(cfg.reps, cfg.workers, [&](std::uint64_t r) {
        const PassageField field = compute_field(replicate_env(cfg, r), max_n, 0);
        std::vector<GeodesicPath> paths;
        paths.reserve(targets.size());
        for (const Site& t : targets) paths.push_back(geodesic_to(field, t));
        for (std::size_t p = 0; p < npairs; ++p) {
            const auto& small = paths[p].sites;
            const auto& large = paths[p + 1].sites;
            std::size_t k = 0;
            while (k + 1 < small.size() && small[k + 1] == large[k + 1]) ++k;
            agree[r * npairs + p] = static_cast<int>(k);
        }
    });

    CoalescenceResult out;
    out.alpha = cfg.alpha;
    for (std::size_t p = 0; p < npairs; ++p) {
        CoalescencePairRow row;
        row.n_small = cfg.sizes[p];
        row.n_large = cfg.sizes[p + 1];
        row.agreement_lengths.reserve(cfg.reps);
        std::uint64_t hits = 0;
        long double sum = 0.0;
        row.agree_min = agree[p];
        row.agree_max = agree[p];
        for (std::uint64_t r = 0; r < cfg.reps; ++r) {
            const int a = agree[r * npairs + p];
            row.agreement_lengths.push_back(a);
            sum += a;
            row.agree_min = std::min(row.agree_min, a);
            row.agree_max = std::max(row.agree_max, a);
            if (2 * a >= row.n_small) ++hits;
        }
        row.mc = McSummary::from_counts(hits, cfg.reps);
        row.agree_mean = static_cast<double>(sum / static_cast<long double>(cfg.reps));
        out.pairs.push_back(std::move(row));
    }
    out.wall_time_s = seconds_since(start);
    return out;
}

FluctuationResult fluctuation_scaling(const ExperimentConfig& cfg) {
    const auto start = Clock::now();
    check_sizes(cfg, 3);

    const int max_n = cfg.sizes.back();
    const std::size_t nsizes = cfg.sizes.size();
    std::vector<double> fluct(cfg.reps * nsizes, 0.0);

    run_replicates(cfg.reps, cfg.workers, [&](std::uint64_t r) {
        const PassageField field = compute_field(replicate_env(cfg, r), max_n, 0);
        for (std::size_t s = 0; s < nsizes; ++s) {
            const int n = cfg.sizes[s];
            const Site mid{n / 2, n - n / 2};
            fluct[r * nsizes + s] = transversal_fluctuation(geodesic_to(field, mid));
        }
    });

    FluctuationResult out;
    for (std::size_t s = 0; s < nsizes; ++s) {
        long double sum = 0.0;
        for (std::uint64_t r = 0; r < cfg.reps; ++r) sum += fluct[r * nsizes + s];
        FluctuationSizeRow row;
        row.n = cfg.sizes[s];
        row.reps = cfg.reps;
        row.mean_fluctuation = static_cast<double>(sum / static_cast<long double>(cfg.reps));
        row.mean_over_n = row.mean_fluctuation / row.n;
        out.per_size.push_back(row);
    }
    // least squares on (log N, log mean)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& row : out.per_size) {
        const double lx = std::log(static_cast<double>(row.n));
        const double ly = std::log(row.mean_fluctuation);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double k = static_cast<double>(nsizes);
    out.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    out.wall_time_s = seconds_since(start);
    return out;
}

std::string to_json(const CoexistenceResult& r, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["experiment"] = "coexistence";
    j["config"] = config_json(cfg);
    j["per_size"] = nlohmann::json::array();
    for (const auto& row : r.per_size) j["per_size"].push_back(mc_json(row.n, row.mc));
    j["violations"] = r.violations;
    j["wall_time_s"] = r.wall_time_s;
    return j.dump(2);
}

std::string to_json(const TmFrequencyResult& r, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["experiment"] = "tm_frequency";
    j["config"] = config_json(cfg);
    j["per_size"] = nlohmann::json::array();
    j["histogram"] = nlohmann::json::array();
    for (const auto& row : r.histogram) {
        nlohmann::json h = mc_json(r.m, row.mc);
        h["tree"] = row.tree.to_string();
        h.erase("N");
        j["histogram"].push_back(h);
    }
    j["violations"] = 0;
    j["wall_time_s"] = r.wall_time_s;
    return j.dump(2);
}

std::string to_json(const CoalescenceResult& r, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["experiment"] = "coalescence";
    j["config"] = config_json(cfg);
    j["per_size"] = nlohmann::json::array();
    for (const auto& row : r.pairs) {
        nlohmann::json e = mc_json(row.n_small, row.mc);
        e["N_large"] = row.n_large;
        e["agree_mean"] = row.agree_mean;
        e["agree_min"] = row.agree_min;
        e["agree_max"] = row.agree_max;
        e["agreement_lengths"] = row.agreement_lengths;
        j["per_size"].push_back(e);
    }
    j["violations"] = 0;
    j["wall_time_s"] = r.wall_time_s;
    return j.dump(2);
}

std::string to_json(const FluctuationResult& r, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["experiment"] = "fluctuation_scaling";
    j["config"] = config_json(cfg);
    j["per_size"] = nlohmann::json::array();
    for (const auto& row : r.per_size)
        j["per_size"].push_back(nlohmann::json{{"N", row.n},
                                               {"reps", row.reps},
                                               {"mean_fluctuation", row.mean_fluctuation},
                                               {"mean_over_n", row.mean_over_n}});
    j["slope"] = r.slope;
    j["violations"] = 0;
    j["wall_time_s"] = r.wall_time_s;
    return j.dump(2);
}

}  // namespace lpp
