#include "dnormal/constructions.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <set>

#include "dnormal/rng.hpp"

namespace dnormal {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

PointSet hypercube_vertices(std::size_t d) {
    if (d < 1 || d > 20)
        throw DimensionTooLarge("hypercube dimension must be in [1, 20]");
    const std::size_t count = std::size_t{1} << d;
    std::vector<Vec> pts;
    pts.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Vec p(d);
        for (std::size_t b = 0; b < d; ++b) p[b] = (mask >> b) & 1 ? 1.0 : 0.0;
        pts.push_back(std::move(p));
    }
    // distinct by construction; skip the quadratic duplicate scan
    return PointSet(d, std::move(pts), Tolerance{}, true);
}

PointSet regular_simplex(std::size_t m) {
    if (m < 2) throw OutOfRange("regular_simplex needs m >= 2");
    // Rows of the Helmert orthonormal basis of the hyperplane sum(x) = 0 in
    // R^m give m points in R^{m-1} at pairwise distance sqrt(2).
    std::vector<Vec> pts(m, Vec(m - 1, 0.0));
    for (std::size_t k = 1; k < m; ++k) {
        const double denom = std::sqrt(static_cast<double>(k) * (k + 1));
        for (std::size_t i = 0; i < k; ++i) pts[i][k - 1] = 1.0 / denom;
        pts[k][k - 1] = -static_cast<double>(k) / denom;
    }
    return PointSet(m - 1, std::move(pts));
}

namespace {

// Deletes the apex of the first non-acute triple until none remain or fewer
// than three points are left.
void prune_to_acute(std::vector<Vec>& pts, Tolerance tol) {
    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        const std::size_t n = pts.size();
        for (std::size_t j = 0; j < n && !changed; ++j)
            for (std::size_t i = 0; i < n && !changed; ++i) {
                if (i == j) continue;
                for (std::size_t k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    if (!tol.lt(angle_at(pts[j], pts[i], pts[k], tol), kHalfPi)) {
                        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(j));
                        changed = true;
                        break;
                    }
                }
            }
    }
}

}  // namespace

PointSet random_acute_set(std::size_t d, std::uint64_t seed,
                          std::size_t max_rounds, Tolerance tol) {
    if (d < 2) throw OutOfRange("random_acute_set needs d >= 2");
    const double target = std::pow(2.0 / std::sqrt(3.0), static_cast<double>(d)) / 2.0;
    std::size_t candidates = static_cast<std::size_t>(std::ceil(target));
    if (d < 60) candidates = std::min(candidates, std::size_t{1} << d);

    std::vector<Vec> best;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        auto rng = make_engine(seed, round);
        // Distinct random hypercube vertices, keyed by 64-bit coordinate blocks.
        std::set<std::vector<std::uint64_t>> keys;
        std::size_t attempts = 0;
        while (keys.size() < candidates && attempts < candidates * 64 + 256) {
            std::vector<std::uint64_t> key((d + 63) / 64);
            for (std::uint64_t& block : key) block = rng();
            const std::size_t tail = d % 64;
            if (tail != 0) key.back() &= (std::uint64_t{1} << tail) - 1;
            keys.insert(std::move(key));
            ++attempts;
        }
        std::vector<Vec> pts;
        pts.reserve(keys.size());
        for (const auto& key : keys) {
            Vec p(d);
            for (std::size_t b = 0; b < d; ++b)
                p[b] = (key[b / 64] >> (b % 64)) & 1 ? 1.0 : 0.0;
            pts.push_back(std::move(p));
        }
        prune_to_acute(pts, tol);
        if (pts.size() >= 3 && pts.size() > best.size()) best = pts;
    }

    if (best.size() < 3) {
        // Acute triangle embedded in dimension d.
        const PointSet tri = regular_simplex(3);
        best.clear();
        for (std::size_t i = 0; i < tri.size(); ++i) {
            Vec p(d, 0.0);
            p[0] = tri[i][0];
            p[1] = tri[i][1];
            best.push_back(std::move(p));
        }
    }

    PointSet out(d, std::move(best), tol);
    if (!all_angles_acute(out, tol))
        throw NumericalFailure("random_acute_set postcondition failed");
    return out;
}

namespace {

// Minimum-norm point in conv{z_0, ..., z_{k-1}} by Wolfe's method: linear
// minimization adds a vertex, minor cycles restore a feasible corral.
Vec wolfe_min_norm(const std::vector<Vec>& z, Tolerance tol) {
    const std::size_t k = z.size();
    double scale = 0.0;
    for (const Vec& v : z) scale = std::max(scale, norm(v));
    if (scale == 0.0) return Vec(z.front().size(), 0.0);

    // Deterministic start: lowest-index vector of minimal norm.
    std::size_t start = 0;
    for (std::size_t j = 1; j < k; ++j)
        if (norm(z[j]) < norm(z[start])) start = j;

    std::vector<std::size_t> active{start};
    std::vector<double> lambda{1.0};
    const double stop_gap = 1e-12 * scale * scale + 1e-300;
    const double weight_floor = 1e-14;

    // Equality-constrained least squares: min |sum a_i z_i|^2, sum a_i = 1.
    auto affine_minimizer = [&](const std::vector<std::size_t>& s) {
        const std::size_t m = s.size();
        std::vector<std::vector<double>> M(m + 1, std::vector<double>(m + 2, 0.0));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) M[a][b] = dot(z[s[a]], z[s[b]]);
            M[a][m] = 1.0;
            M[a][m + 1] = 0.0;
            M[m][a] = 1.0;
        }
        M[m][m + 1] = 1.0;
        // Gaussian elimination with partial pivoting on (m+1)x(m+1).
        const std::size_t nrows = m + 1;
        for (std::size_t col = 0; col < nrows; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < nrows; ++r)
                if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
            std::swap(M[col], M[piv]);
            if (std::fabs(M[col][col]) < 1e-300)
                throw NumericalFailure("singular system in min-norm solve");
            for (std::size_t r = 0; r < nrows; ++r) {
                if (r == col) continue;
                const double f = M[r][col] / M[col][col];
                for (std::size_t c2 = col; c2 < nrows + 1; ++c2)
                    M[r][c2] -= f * M[col][c2];
            }
        }
        std::vector<double> alpha(m);
        for (std::size_t a = 0; a < m; ++a) alpha[a] = M[a][nrows] / M[a][a];
        return alpha;
    };

    auto combination = [&]() {
        Vec x(z.front().size(), 0.0);
        for (std::size_t a = 0; a < active.size(); ++a)
            x = add(x, scaled(z[active[a]], lambda[a]));
        return x;
    };

    const std::size_t max_major = 16 * k + 64;
    for (std::size_t major = 0; major < max_major; ++major) {
        const Vec x = combination();
        const double xx = dot(x, x);
        std::size_t jbest = 0;
        double dbest = dot(x, z[0]);
        for (std::size_t j = 1; j < k; ++j) {
            const double dj = dot(x, z[j]);
            if (dj < dbest) {
                dbest = dj;
                jbest = j;
            }
        }
        if (dbest >= xx - stop_gap) break;  // optimality certificate
        if (std::find(active.begin(), active.end(), jbest) != active.end()) break;
        active.push_back(jbest);
        lambda.push_back(0.0);

        for (std::size_t minor = 0; minor < 4 * k + 16; ++minor) {
            std::vector<double> alpha = affine_minimizer(active);
            bool interior = true;
            for (double a : alpha)
                if (a <= weight_floor) {
                    interior = false;
                    break;
                }
            if (interior) {
                lambda = alpha;
                break;
            }
            double theta = 1.0;
            for (std::size_t a = 0; a < alpha.size(); ++a)
                if (alpha[a] <= weight_floor && lambda[a] > alpha[a])
                    theta = std::min(theta, lambda[a] / (lambda[a] - alpha[a]));
            for (std::size_t a = 0; a < alpha.size(); ++a)
                lambda[a] = (1.0 - theta) * lambda[a] + theta * alpha[a];
            for (std::size_t a = active.size(); a-- > 0;) {
                if (lambda[a] <= weight_floor) {
                    active.erase(active.begin() + static_cast<std::ptrdiff_t>(a));
                    lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(a));
                }
            }
            if (active.empty())
                throw NumericalFailure("min-norm active set emptied");
            double total = 0.0;
            for (double a : lambda) total += a;
            for (double& a : lambda) a /= total;
        }
    }
    (void)tol;
    return combination();
}

}  // namespace

SupportDirection support_direction(std::size_t i, const PointSet& P,
                                   Tolerance tol) {
    if (i >= P.size()) throw OutOfRange("support_direction index out of range");
    if (P.size() < 2) throw OutOfRange("support_direction needs at least two points");
    if (!all_angles_acute(P, tol))
        throw NotAcute("support_direction requires a pairwise-acute point set");

    std::vector<Vec> diffs;
    diffs.reserve(P.size() - 1);
    for (std::size_t j = 0; j < P.size(); ++j)
        if (j != i) diffs.push_back(sub(P[j], P[i]));

    const Vec x = wolfe_min_norm(diffs, tol);
    const double nx = norm(x);
    double scale = 0.0;
    for (const Vec& v : diffs) scale = std::max(scale, norm(v));
    if (nx <= 10.0 * tol.gap(scale))
        throw NumericalFailure("min-norm point too close to the origin");

    SupportDirection out;
    out.u = scaled(x, 1.0 / nx);
    out.margin = dot(out.u, diffs.front());
    for (const Vec& v : diffs) out.margin = std::min(out.margin, dot(out.u, v));
    if (out.margin <= 10.0 * tol.gap(scale))
        throw NumericalFailure("support margin could not be certified positive");
    return out;
}

namespace {

Vec embed(const Vec& p, std::size_t out_dim) {
    Vec e(out_dim, 0.0);
    std::copy(p.begin(), p.end(), e.begin());
    return e;
}

struct PartGeometry {
    Vec u;           // in the input dimension
    double margin = 0.0;
    double min_t = 0.0;
    double max_t = 0.0;
    double radius = 0.0;
};

}  // namespace

EmbeddingResult km_embedding(const PointSet& P, const EmbeddingParams& params,
                             Tolerance tol) {
    const std::size_t m = P.size();
    const std::size_t d = P.dim();
    const std::size_t N = params.parts_size;
    if (m < 2) throw OutOfRange("km_embedding needs at least two base points");
    if (N < 1) throw OutOfRange("km_embedding needs parts_size >= 1");
    if (!all_angles_acute(P, tol))
        throw NotAcute("km_embedding requires a pairwise-acute base set");
    if (params.radii && params.radii->size() != m)
        throw OutOfRange("explicit radius list must have one entry per part");

    // Per part: supporting normal, axis projections, circle radius.
    std::vector<PartGeometry> parts(m);
    for (std::size_t i = 0; i < m; ++i) {
        const SupportDirection sd = support_direction(i, P, tol);
        PartGeometry& pg = parts[i];
        pg.u = sd.u;
        pg.margin = sd.margin;
        bool first = true;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            const double t = dot(sub(P[j], P[i]), pg.u);
            pg.min_t = first ? t : std::min(pg.min_t, t);
            pg.max_t = first ? t : std::max(pg.max_t, t);
            first = false;
        }
        pg.radius = params.radii ? (*params.radii)[i] : pg.max_t;
        if (!(pg.radius > 0.0))
            throw FeasibilityFailure(i + 1, 2, "circle radius must be positive");
        // Projections strictly inside the circle: 0 < t < 2R for every t.
        const double band = tol.gap(std::max(pg.max_t, 2.0 * pg.radius));
        if (!(pg.min_t > band) || !(pg.max_t < 2.0 * pg.radius - band))
            throw FeasibilityFailure(i + 1, 2,
                                     "axis projections are not strictly inside the circle");
    }

    double epsilon;
    if (params.epsilon) {
        epsilon = *params.epsilon;
        if (!(epsilon > 0.0)) throw OutOfRange("epsilon must be positive");
    } else {
        epsilon = std::numeric_limits<double>::infinity();
        for (const PartGeometry& pg : parts)
            epsilon = std::min(epsilon,
                               std::min({pg.margin, pg.radius, pg.min_t}) / 8.0);
    }

    const std::size_t out_dim = d + m;
    const double angle_band = 10.0 * tol.gap(kHalfPi);

    EmbeddingTrace trace;
    trace.epsilon = epsilon;
    trace.parts.resize(m);

    std::vector<Vec> points;
    points.reserve(m * N);
    std::vector<std::size_t> labels;
    labels.reserve(m * N);

    for (std::size_t i = 0; i < m; ++i) {
        const PartGeometry& pg = parts[i];
        const double R = pg.radius;

        // Segment [a, b] holds every projection with a 2*epsilon cushion and
        // keeps clear of the epsilon-neighborhoods of the circle endpoints.
        const double a = pg.min_t - 2.0 * epsilon;
        const double b = pg.max_t + 2.0 * epsilon;
        if (!(a - 2.0 * epsilon >= epsilon) || !(b + 2.0 * epsilon <= 2.0 * R - epsilon))
            throw FeasibilityFailure(i + 1, 2,
                                     "segment cannot avoid the endpoint neighborhoods");

        const Vec u = embed(pg.u, out_dim);
        Vec v(out_dim, 0.0);
        v[d + i] = 1.0;
        const Vec base = embed(P[i], out_dim);
        const Vec center = add(base, scaled(u, R));
        const Vec antipode = add(base, scaled(u, 2.0 * R));
        const Vec point_a = add(base, scaled(u, a));
        const Vec point_b = add(base, scaled(u, b));

        auto on_circle = [&](double theta) {
            return add(center, add(scaled(u, -R * std::cos(theta)),
                                   scaled(v, R * std::sin(theta))));
        };

        // Angle schedule by halving. The first point sits at half the
        // epsilon allowance; each next angle halves until both endpoint
        // constraints verify with margin.
        std::vector<double> thetas;
        double sine = std::min(epsilon / (4.0 * R), 0.5);
        double theta = 2.0 * std::asin(sine);
        thetas.push_back(theta);
        for (std::size_t s = 1; s < N; ++s) {
            const Vec prev = on_circle(thetas.back());
            double cand = thetas.back() / 2.0;
            std::size_t halvings = 1;
            for (;; ++halvings) {
                const Vec next = on_circle(cand);
                const bool ok_b =
                    angle_at(prev, next, point_b, tol) < kHalfPi - angle_band;
                const bool ok_a =
                    angle_at(next, prev, point_a, tol) < kHalfPi - angle_band;
                if (ok_a && ok_b) break;
                if (halvings >= params.max_halvings)
                    throw FeasibilityFailure(
                        i + 1, 3, "halving budget exhausted before constraints verified");
                cand /= 2.0;
            }
            thetas.push_back(cand);
        }

        for (double t : thetas) {
            points.push_back(on_circle(t));
            labels.push_back(i + 1);
        }

        EmbeddingPartTrace& pt = trace.parts[i];
        pt.u = u;
        pt.v = v;
        pt.margin = pg.margin;
        pt.radius = R;
        pt.center = center;
        pt.antipode = antipode;
        pt.seg_a = a;
        pt.seg_b = b;
        pt.thetas = thetas;
    }

    PartitionedConfig config(PointSet(out_dim, std::move(points), tol),
                             std::move(labels));

    // Mandatory brute-force strict check of every cross-part pair.
    Certificate cert;
    const PointSet& V = config.point_set();
    const auto& part = config.part_of();
    for (std::size_t x = 0; x < V.size(); ++x)
        for (std::size_t y = x + 1; y < V.size(); ++y)
            if (part[x] != part[y] && !is_pair(PairMode::strict(), x, y, V, tol))
                cert.violations.push_back({x, y});
    cert.pass = cert.violations.empty();
    if (!cert.pass)
        throw VerificationFailure(
            cert, "strict cross-pair verification failed with " +
                      std::to_string(cert.violations.size()) + " violations");

    return EmbeddingResult{std::move(config), std::move(trace), std::move(cert)};
}

namespace {

std::size_t ceil_log2(std::size_t k) {
    std::size_t bits = 0;
    std::size_t v = 1;
    while (v < k) {
        v <<= 1;
        ++bits;
    }
    return bits;
}

}  // namespace

std::vector<BoundsRow> bounds_table(std::size_t d_min, std::size_t d_max,
                                    const std::vector<AcuteEvidence>& evidence) {
    if (d_min < 2 || d_min > d_max)
        throw OutOfRange("bounds_table needs 2 <= d_min <= d_max");
    std::vector<BoundsRow> rows;
    rows.reserve(d_max - d_min + 1);
    for (std::size_t d = d_min; d <= d_max; ++d) {
        BoundsRow row;
        row.d = d;
        std::size_t k = 1;
        while ((k + 1) + ceil_log2(k + 1) <= d) ++k;
        row.k_upper = k;
        row.k1_upper = k;
        row.k1_exact = (k + ceil_log2(k) == d);
        // Simplex floor: ceil(d/2) acute points in dimension ceil(d/2) - 1.
        row.k_lower = (d + 1) / 2;
        for (const AcuteEvidence& e : evidence)
            if (e.size >= 1 && e.size + e.dim <= d)
                row.k_lower = std::max(row.k_lower, e.size);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dnormal
