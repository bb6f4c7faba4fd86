#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnormal/geometry.hpp"

namespace dnormal {

struct SearchConfig {
    std::size_t dim = 2;
    std::size_t target_size = 3;
    std::size_t restarts = 32;
    std::size_t steps_per_restart = 20000;
    double init_temperature = 0.25;
    double cooling = 0.9995;
    std::uint64_t seed = 0;
    /// 0 = acute search; > 0 relaxes the objective to max angle <= pi/2 + delta.
    double delta = 0.0;
    /// Start from random hypercube vertices instead of the uniform cube.
    bool init_hypercube = false;
};

struct SearchResult {
    PointSet best_points;
    double best_margin = 0.0;
    /// True iff the geometry predicates re-verified the best configuration.
    bool verified = false;
    std::vector<double> history;  ///< best margin per restart
};

/// Min over ordered triples of (pi/2 - angle at the middle vertex).
/// Positive iff the set is pairwise acute. Requires at least three points.
double acute_margin(const PointSet& P);

/// Same margin shifted by delta: min over triples of (pi/2 + delta - angle).
double relaxed_margin(const PointSet& P, double delta);

/// Simulated annealing on the hard min-over-triples margin: independent
/// restarts, Gaussian single-point proposals with temperature-tied scale,
/// Metropolis acceptance. Deterministic given the config (restart streams are
/// derived from (seed, restart_index); merging prefers the lowest restart on
/// margin ties). The returned flag is set by re-running the geometry
/// predicates on the best configuration, never by the search itself.
SearchResult search(const SearchConfig& config);

struct ProbeReport {
    std::size_t dim = 0;
    double delta = 0.0;
    std::size_t target = 0;
    double best_max_angle = 0.0;
    bool satisfied = false;
    std::string outcome;
};

/// Tries to place 2^dim + 1 points with every angle <= pi/2 + delta. An
/// unsatisfied outcome is labeled "no counterexample found (not a proof)":
/// the probe is exploratory and proves nothing either way.
ProbeReport probe_relaxed_bound(std::size_t dim, double delta,
                            const SearchConfig& budget);

}  // namespace dnormal
