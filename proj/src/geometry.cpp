#include "dnormal/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace dnormal {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double dist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec scaled(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

PointSet::PointSet(std::size_t dim, std::vector<Vec> points, Tolerance tol,
                   bool allow_duplicates)
    : dim_(dim), pts_(std::move(points)) {
    if (dim_ == 0) throw InvalidPointSet("point set dimension must be positive");
    for (const Vec& p : pts_) {
        if (p.size() != dim_)
            throw InvalidPointSet("point has " + std::to_string(p.size()) +
                                  " coordinates, expected " + std::to_string(dim_));
        for (double c : p)
            if (!std::isfinite(c))
                throw InvalidPointSet("non-finite coordinate in point set");
    }
    if (!allow_duplicates) {
        for (std::size_t i = 0; i < pts_.size(); ++i)
            for (std::size_t j = i + 1; j < pts_.size(); ++j)
                if (tol.eq(dist(pts_[i], pts_[j]), 0.0))
                    throw InvalidPointSet("duplicate points at indices " +
                                          std::to_string(i) + " and " +
                                          std::to_string(j));
    }
}

PairMode PairMode::almost(double delta) {
    if (delta < 0.0 || !std::isfinite(delta))
        throw OutOfRange("almost-pair delta must be a non-negative real");
    return {Kind::Almost, delta};
}

std::string to_string(PairMode::Kind kind) {
    switch (kind) {
        case PairMode::Kind::Standard: return "standard";
        case PairMode::Kind::Strict: return "strict";
        case PairMode::Kind::Almost: return "almost";
    }
    return "standard";
}

PairMode::Kind pair_mode_kind_from_string(const std::string& s) {
    if (s == "standard") return PairMode::Kind::Standard;
    if (s == "strict") return PairMode::Kind::Strict;
    if (s == "almost") return PairMode::Kind::Almost;
    throw OutOfRange("unknown pair mode: " + s);
}

double angle_at(const Vec& vertex, const Vec& arm1, const Vec& arm2,
                Tolerance tol) {
    const Vec u = sub(arm1, vertex);
    const Vec v = sub(arm2, vertex);
    const double nu = norm(u);
    const double nv = norm(v);
    if (tol.eq(nu, 0.0) || tol.eq(nv, 0.0))
        throw DegenerateAngle("angle arm coincides with the vertex");
    const double c = std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

AngleClass classify_angle(const Vec& vertex, const Vec& arm1, const Vec& arm2,
                          Tolerance tol) {
    const double a = angle_at(vertex, arm1, arm2, tol);
    if (tol.lt(a, kHalfPi)) return {AngleKind::Acute, a};
    if (tol.lt(kHalfPi, a)) return {AngleKind::Obtuse, a};
    return {AngleKind::Right, a};
}

double slab_parameter(const Vec& p, const Vec& q, const Vec& r, Tolerance tol) {
    const Vec axis = sub(q, p);
    const double len2 = dot(axis, axis);
    if (tol.eq(std::sqrt(len2), 0.0))
        throw DegeneratePair("slab endpoints coincide");
    return dot(sub(r, p), axis) / len2;
}

bool is_pair(PairMode mode, std::size_t i, std::size_t j, const PointSet& V,
             Tolerance tol) {
    if (i >= V.size() || j >= V.size() || i == j)
        throw OutOfRange("pair indices must be distinct and in range");
    const Vec& p = V[i];
    const Vec& q = V[j];

    if (mode.kind == PairMode::Kind::Almost) {
        const double bound = kHalfPi + mode.delta;
        for (std::size_t r = 0; r < V.size(); ++r) {
            if (r == i || r == j) continue;
            if (!tol.leq(angle_at(p, V[r], q, tol), bound)) return false;
            if (!tol.leq(angle_at(q, V[r], p, tol), bound)) return false;
        }
        return true;
    }

    for (std::size_t r = 0; r < V.size(); ++r) {
        const double t = slab_parameter(p, q, V[r], tol);
        if (!tol.leq(0.0, t) || !tol.leq(t, 1.0)) return false;
        if (mode.kind == PairMode::Kind::Strict && r != i && r != j) {
            if (!tol.lt(0.0, t) || !tol.lt(t, 1.0)) return false;
        }
    }
    return true;
}

bool is_pair_by_angles(std::size_t i, std::size_t j, const PointSet& V,
                       Tolerance tol) {
    if (i >= V.size() || j >= V.size() || i == j)
        throw OutOfRange("pair indices must be distinct and in range");
    const Vec& p = V[i];
    const Vec& q = V[j];
    for (std::size_t r = 0; r < V.size(); ++r) {
        if (r == i || r == j) continue;
        if (!tol.leq(angle_at(p, V[r], q, tol), kHalfPi)) return false;
        if (!tol.leq(angle_at(q, V[r], p, tol), kHalfPi)) return false;
    }
    return true;
}

namespace {

template <typename Pred>
bool scan_triples(const PointSet& V, Tolerance tol, Pred ok) {
    const std::size_t n = V.size();
    if (n <= 2) return true;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            for (std::size_t k = i + 1; k < n; ++k) {
                if (k == j) continue;
                if (!ok(angle_at(V[j], V[i], V[k], tol))) return false;
            }
        }
    return true;
}

}  // namespace

bool all_angles_nonobtuse(const PointSet& V, Tolerance tol) {
    return scan_triples(V, tol, [&](double a) { return tol.leq(a, kHalfPi); });
}

bool all_angles_acute(const PointSet& V, Tolerance tol) {
    return scan_triples(V, tol, [&](double a) { return tol.lt(a, kHalfPi); });
}

double max_angle(const PointSet& V, Tolerance tol) {
    if (V.size() < 3)
        throw TooFewPoints("max_angle needs at least three points");
    double best = 0.0;
    scan_triples(V, tol, [&](double a) {
        best = std::max(best, a);
        return true;
    });
    return best;
}

}  // namespace dnormal
