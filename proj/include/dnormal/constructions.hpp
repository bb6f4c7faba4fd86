#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnormal/graph.hpp"

namespace dnormal {

struct DimensionTooLarge : GeometryError {
    using GeometryError::GeometryError;
};

struct NotAcute : GeometryError {
    using GeometryError::GeometryError;
};

struct NumericalFailure : GeometryError {
    using GeometryError::GeometryError;
};

struct FeasibilityFailure : GeometryError {
    FeasibilityFailure(std::size_t part_, int step_, const std::string& what_)
        : GeometryError(what_), part(part_), step(step_) {}
    std::size_t part;
    int step;
};

struct VerificationFailure : GeometryError {
    VerificationFailure(Certificate cert, const std::string& what_)
        : GeometryError(what_), certificate(std::move(cert)) {}
    Certificate certificate;
};

/// All 2^d vertices of {0,1}^d. Guarded at d <= 20.
PointSet hypercube_vertices(std::size_t d);

/// m pairwise-equidistant points in dimension m-1 (edge length sqrt(2)).
/// Every angle is pi/3, so every pair is a strict double-normal pair.
PointSet regular_simplex(std::size_t m);

/// Random hypercube-vertex sampling followed by deletion of the apex of each
/// non-acute triple; best round kept, regular triangle fallback when fewer
/// than three points survive. The output always passes all_angles_acute;
/// its size is best-effort.
PointSet random_acute_set(std::size_t d, std::uint64_t seed,
                          std::size_t max_rounds = 32, Tolerance tol = {});

struct SupportDirection {
    Vec u;          ///< unit outward-supporting normal at p_i
    double margin;  ///< min_j <u, p_j - p_i>, certified positive
};

/// Direction of the minimum-norm point of conv{p_j - p_i : j != i}, found by
/// Wolfe's method with a deterministic starting vertex. The hyperplane
/// through p_i orthogonal to u meets the hull of P only at p_i.
SupportDirection support_direction(std::size_t i, const PointSet& P,
                                   Tolerance tol = {});

struct EmbeddingParams {
    std::size_t parts_size = 1;  ///< N, points per part
    /// Neighborhood half-width; when unset, min over parts of
    /// min(margin, R, min_t)/8.
    std::optional<double> epsilon;
    /// Per-part circle radii; when unset, R = max_j t_j per part.
    std::optional<std::vector<double>> radii;
    std::size_t max_halvings = 60;
    std::uint64_t seed = 0;  ///< recorded for replay; the construction is deterministic
};

struct EmbeddingPartTrace {
    Vec u;               ///< supporting normal, embedded in the output space
    Vec v;               ///< fresh orthogonal axis for this part
    double margin = 0.0;
    double radius = 0.0;
    Vec center;          ///< c_i
    Vec antipode;        ///< q_i
    double seg_a = 0.0;  ///< segment endpoints on the axis, as parameters
    double seg_b = 0.0;
    std::vector<double> thetas;  ///< chosen circle angles, descending
};

struct EmbeddingTrace {
    double epsilon = 0.0;
    std::vector<EmbeddingPartTrace> parts;
};

struct EmbeddingResult {
    PartitionedConfig config;
    EmbeddingTrace trace;
    Certificate certificate;  ///< of the mandatory strict cross-pair sweep
};

/// Lifts m acute points in R^d to m parts of N points each in R^{d+m} such
/// that every cross-part pair of the output is a strict double-normal pair.
/// Per part: supporting normal u_i and a fresh axis v_i span a plane holding
/// a circle through p_i that strictly contains the axis projections of the
/// other base points; the part's points sit on that circle at angles chosen
/// by verified halving. The full brute-force strict check runs before
/// returning; a violation throws VerificationFailure, never a silent return.
EmbeddingResult km_embedding(const PointSet& P, const EmbeddingParams& params,
                             Tolerance tol = {});

/// An independently verified acute configuration: `size` points in `dim`.
struct AcuteEvidence {
    std::size_t size = 0;
    std::size_t dim = 0;
};

struct BoundsRow {
    std::size_t d = 0;
    std::size_t k_lower = 0;
    std::size_t k_upper = 0;
    std::size_t k1_upper = 0;
    /// Whether some k satisfies k + ceil(log2 k) = d exactly.
    bool k1_exact = false;
    std::string status() const { return k_lower == k_upper ? "tight" : "open"; }
};

/// Per-dimension bounds: k_upper = max{k : k + ceil(log2 k) <= d};
/// k_lower = best verified acute evidence with size + dim <= d, floored at
/// ceil(d/2) via the regular simplex.
std::vector<BoundsRow> bounds_table(std::size_t d_min, std::size_t d_max,
                                    const std::vector<AcuteEvidence>& evidence = {});

}  // namespace dnormal
