#pragma once

#include <random>
#include <vector>

#include "dnormal/geometry.hpp"
#include "dnormal/rng.hpp"

namespace test_helpers {

using dnormal::PointSet;
using dnormal::Tolerance;
using dnormal::Vec;

inline PointSet random_point_set(std::mt19937_64& rng, std::size_t dim,
                                 std::size_t n, double lo = -1.0,
                                 double hi = 1.0) {
    std::vector<Vec> pts(n, Vec(dim));
    for (Vec& p : pts)
        for (double& c : p) c = dnormal::next_uniform(rng, lo, hi);
    return PointSet(dim, std::move(pts));
}

/// Random orthogonal matrix (rows) via Gram-Schmidt on a Gaussian matrix.
inline std::vector<Vec> random_orthogonal(std::mt19937_64& rng, std::size_t d) {
    std::vector<Vec> q(d, Vec(d));
    for (Vec& row : q)
        for (double& c : row) c = dnormal::next_gaussian(rng);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t pass = 0; pass < 2; ++pass)
            for (std::size_t j = 0; j < i; ++j) {
                const double proj = dnormal::dot(q[i], q[j]);
                for (std::size_t c = 0; c < d; ++c) q[i][c] -= proj * q[j][c];
            }
        const double len = dnormal::norm(q[i]);
        for (double& c : q[i]) c /= len;
    }
    return q;
}

inline Vec apply_matrix(const std::vector<Vec>& q, const Vec& x) {
    Vec y(q.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) y[i] = dnormal::dot(q[i], x);
    return y;
}

inline PointSet transform(const PointSet& ps, const std::vector<Vec>& q,
                          double scale, const Vec& shift) {
    std::vector<Vec> out;
    out.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        Vec y = apply_matrix(q, ps[i]);
        for (std::size_t c = 0; c < y.size(); ++c) y[c] = scale * y[c] + shift[c];
        out.push_back(std::move(y));
    }
    return PointSet(ps.dim(), std::move(out));
}

}  // namespace test_helpers
