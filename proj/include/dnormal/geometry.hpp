#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnormal {

using Vec = std::vector<double>;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateAngle : GeometryError {
    using GeometryError::GeometryError;
};

struct DegeneratePair : GeometryError {
    using GeometryError::GeometryError;
};

struct InvalidPointSet : GeometryError {
    using GeometryError::GeometryError;
};

struct OutOfRange : GeometryError {
    using GeometryError::GeometryError;
};

struct TooFewPoints : GeometryError {
    using GeometryError::GeometryError;
};

/// Comparison contract used by every predicate in the library:
/// x <= y holds when x - y <= abs + rel * max(|x|, |y|).
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    double gap(double scale) const { return abs + rel * std::fabs(scale); }

    bool leq(double x, double y) const {
        return x - y <= gap(std::fmax(std::fabs(x), std::fabs(y)));
    }
    /// x < y beyond the tolerance band.
    bool lt(double x, double y) const {
        return y - x > gap(std::fmax(std::fabs(x), std::fabs(y)));
    }
    bool eq(double x, double y) const {
        return std::fabs(x - y) <= gap(std::fmax(std::fabs(x), std::fabs(y)));
    }
};

// Small dense-vector helpers. Dimension mismatches are programming errors;
// they are asserted by the callers that construct the vectors.
double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
double dist(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double s);

/// A finite list of points in a fixed dimension. Construction validates that
/// every point has exactly `dim` finite coordinates and (unless explicitly
/// allowed) that no two points coincide within tolerance.
class PointSet {
  public:
    PointSet(std::size_t dim, std::vector<Vec> points, Tolerance tol = {},
             bool allow_duplicates = false);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return pts_.size(); }
    const Vec& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Vec>& points() const { return pts_; }

  private:
    std::size_t dim_;
    std::vector<Vec> pts_;
};

enum class AngleKind { Acute, Right, Obtuse };

/// Classified angle. Right is a closed band of width 2*tol around pi/2 so
/// that Acute and Obtuse are robust under perturbations smaller than tol.
struct AngleClass {
    AngleKind kind;
    double measure;
};

/// Double-normal pair mode. Standard: the whole set lies in the closed slab
/// between the two hyperplanes through p and q orthogonal to pq. Strict:
/// additionally no third point lies on either hyperplane. Almost(delta):
/// every other point z satisfies angle(z,p,q) <= pi/2 + delta and
/// angle(z,q,p) <= pi/2 + delta.
struct PairMode {
    enum class Kind { Standard, Strict, Almost };
    Kind kind = Kind::Standard;
    double delta = 0.0;

    static PairMode standard() { return {Kind::Standard, 0.0}; }
    static PairMode strict() { return {Kind::Strict, 0.0}; }
    static PairMode almost(double delta);
};

std::string to_string(PairMode::Kind kind);
PairMode::Kind pair_mode_kind_from_string(const std::string& s);

/// Angle at `vertex` between the arms toward `arm1` and `arm2`, in [0, pi].
/// The cosine is clamped to [-1, 1] before acos. Throws DegenerateAngle if
/// either arm coincides with the vertex within tolerance.
double angle_at(const Vec& vertex, const Vec& arm1, const Vec& arm2,
                Tolerance tol = {});

AngleClass classify_angle(const Vec& vertex, const Vec& arm1, const Vec& arm2,
                          Tolerance tol = {});

/// Normalized projection t = <r - p, q - p> / |q - p|^2. The point r lies in
/// the slab of the pair (p, q) iff t in [0, 1], strictly inside iff t in
/// (0, 1). Throws DegeneratePair if p and q coincide within tolerance.
double slab_parameter(const Vec& p, const Vec& q, const Vec& r,
                      Tolerance tol = {});

/// Whether points i and j of V form a double-normal pair under `mode`.
bool is_pair(PairMode mode, std::size_t i, std::size_t j, const PointSet& V,
             Tolerance tol = {});

/// Standard-mode pair test via the dual angle formulation: for every other
/// r, both angle(r,p,q) and angle(r,q,p) are <= pi/2 within tolerance.
/// Independent route from the slab formulation; kept for cross-checking.
bool is_pair_by_angles(std::size_t i, std::size_t j, const PointSet& V,
                       Tolerance tol = {});

/// Scan of all ordered triples. Sets with at most two points pass trivially.
bool all_angles_nonobtuse(const PointSet& V, Tolerance tol = {});
bool all_angles_acute(const PointSet& V, Tolerance tol = {});

/// Largest angle over all ordered triples; requires |V| >= 3.
double max_angle(const PointSet& V, Tolerance tol = {});

}  // namespace dnormal
