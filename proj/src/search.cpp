#include "dnormal/search.hpp"

#include <algorithm>
#include <numbers>

#include "dnormal/parallel.hpp"
#include "dnormal/rng.hpp"

namespace dnormal {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;

double margin_of(const std::vector<Vec>& pts, double delta) {
    const std::size_t n = pts.size();
    double best = kHalfPi + delta;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            const Vec a = sub(pts[i], pts[j]);
            const double na = norm(a);
            if (na < 1e-12) return -kHalfPi;  // collapsed pair, reject outright
            for (std::size_t k = i + 1; k < n; ++k) {
                if (k == j) continue;
                const Vec b = sub(pts[k], pts[j]);
                const double nb = norm(b);
                if (nb < 1e-12) return -kHalfPi;
                const double c = std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
                best = std::min(best, kHalfPi + delta - std::acos(c));
            }
        }
    return best;
}

}  // namespace

double acute_margin(const PointSet& P) {
    if (P.size() < 3)
        throw TooFewPoints("acute_margin needs at least three points");
    double best = kHalfPi;
    for (std::size_t j = 0; j < P.size(); ++j)
        for (std::size_t i = 0; i < P.size(); ++i) {
            if (i == j) continue;
            for (std::size_t k = i + 1; k < P.size(); ++k) {
                if (k == j) continue;
                best = std::min(best, kHalfPi - angle_at(P[j], P[i], P[k]));
            }
        }
    return best;
}

double relaxed_margin(const PointSet& P, double delta) {
    return acute_margin(P) + delta;
}

namespace {

struct RestartOutcome {
    std::vector<Vec> best_points;
    double best_margin = -kHalfPi;
};

RestartOutcome run_restart(const SearchConfig& cfg, std::size_t index) {
    auto rng = make_engine(cfg.seed, index);
    const std::size_t n = cfg.target_size;

    std::vector<Vec> pts(n, Vec(cfg.dim));
    for (Vec& p : pts)
        for (double& c : p)
            c = cfg.init_hypercube ? (next_unit(rng) < 0.5 ? 0.0 : 1.0)
                                   : next_unit(rng);

    double current = margin_of(pts, cfg.delta);
    RestartOutcome out{pts, current};

    double temperature = cfg.init_temperature;
    const double sigma0 = 0.3;
    for (std::size_t step = 0; step < cfg.steps_per_restart; ++step) {
        const std::size_t pick = static_cast<std::size_t>(next_index(rng, n));
        const double sigma =
            sigma0 * (temperature / cfg.init_temperature) + 1e-3;
        Vec saved = pts[pick];
        for (double& c : pts[pick])
            c = std::clamp(c + sigma * next_gaussian(rng), 0.0, 1.0);
        const double proposed = margin_of(pts, cfg.delta);
        const double diff = proposed - current;
        bool accept = diff >= 0.0;
        if (!accept && temperature > 0.0)
            accept = next_unit(rng) < std::exp(diff / temperature);
        if (accept) {
            current = proposed;
            if (current > out.best_margin) {
                out.best_margin = current;
                out.best_points = pts;
            }
        } else {
            pts[pick] = std::move(saved);
        }
        temperature *= cfg.cooling;
    }
    return out;
}

}  // namespace

SearchResult search(const SearchConfig& cfg) {
    if (cfg.target_size < 3) throw OutOfRange("search needs target_size >= 3");
    if (cfg.dim < 1) throw OutOfRange("search needs dim >= 1");
    if (cfg.restarts < 1 || cfg.steps_per_restart < 1)
        throw OutOfRange("search needs restarts >= 1 and steps >= 1");
    if (!(cfg.cooling > 0.0 && cfg.cooling < 1.0))
        throw OutOfRange("cooling must lie in (0, 1)");
    if (cfg.delta < 0.0) throw OutOfRange("delta must be non-negative");

    std::vector<RestartOutcome> outcomes(cfg.restarts);
    parallel_for(cfg.restarts,
                 [&](std::size_t r) { outcomes[r] = run_restart(cfg, r); });

    std::size_t winner = 0;
    for (std::size_t r = 1; r < cfg.restarts; ++r)
        if (outcomes[r].best_margin > outcomes[winner].best_margin) winner = r;

    SearchResult result{
        PointSet(cfg.dim, outcomes[winner].best_points, Tolerance{}, true),
        outcomes[winner].best_margin, false, {}};
    result.history.reserve(cfg.restarts);
    for (const RestartOutcome& o : outcomes)
        result.history.push_back(o.best_margin);

    // Verification is owned by the geometry predicates, not the objective.
    const Tolerance tol;
    try {
        const PointSet checked(cfg.dim, result.best_points.points(), tol);
        result.verified = cfg.delta == 0.0
                              ? all_angles_acute(checked, tol)
                              : tol.leq(max_angle(checked, tol), kHalfPi + cfg.delta);
    } catch (const InvalidPointSet&) {
        result.verified = false;  // coincident points: best effort, unverified
    }
    return result;
}

ProbeReport probe_relaxed_bound(std::size_t dim, double delta,
                            const SearchConfig& budget) {
    if (dim < 2 || dim > 3)
        throw OutOfRange("probe_relaxed_bound covers dim 2 and 3 only");
    if (!(delta > 0.0)) throw OutOfRange("probe_relaxed_bound needs delta > 0");

    SearchConfig cfg = budget;
    cfg.dim = dim;
    cfg.delta = delta;
    cfg.target_size = (std::size_t{1} << dim) + 1;

    const SearchResult result = search(cfg);

    ProbeReport report;
    report.dim = dim;
    report.delta = delta;
    report.target = cfg.target_size;
    report.best_max_angle = kHalfPi + delta - result.best_margin;
    report.satisfied = result.verified;
    report.outcome = result.verified
                         ? "threshold met: " + std::to_string(report.target) +
                               " points within pi/2 + delta at this delta"
                         : "no counterexample found (not a proof)";
    return report;
}

}  // namespace dnormal
