// include/latgaps/gaps.hpp — the gap lower bound around rational-slope
// points and its verification over enumerated orbits.
//
// For any w of rational slope and any g in the ball of radius T,
// |g v - w| >= D_v(rho(w)) / T: g^{-1} w keeps the period of w, so it stays
// in P(rho(w)), and g^{-1} stretches distances by at most its Frobenius
// norm. verify_gap checks this over the whole enumerated ball; the curve
// helpers convert the bound into the (radius, slope) picture where the gap
// is a visible wedge around each rational line.

#pragma once

#include "latgaps/ball.hpp"
#include "latgaps/numeric.hpp"
#include "latgaps/rational_geometry.hpp"
#include "latgaps/spectrum.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace latgaps {

inline constexpr double kDefaultOrbitMaxRadius = 2000.0;

inline double gap_pass_slack(double w_norm) { return 1e-12 * (1.0 + w_norm); }

namespace detail {

inline void require_orbit_radius(double T, double max_T) {
    if (!(T > 0.0)) throw std::domain_error("ball radius must be positive");
    if (T > max_T) throw GuardError("orbit enumeration guard exceeded (raise the limit explicitly)");
}

inline BallSpec ball_spec_for(double T) {
    return BallSpec::from_radius_sq(Rational::from_double(T) * Rational::from_double(T));
}

}  // namespace detail

/// D_v(rho(w)) / T with rho(w) computed exactly from w.
inline double gap_lower_bound(const Vec2R& v, const Vec2Q& w, double T) {
    if (v.x == 0.0 && v.y == 0.0) throw std::domain_error("gap bound needs a nonzero base point");
    if (w.is_zero()) throw std::domain_error("gap bound needs a nonzero target");
    if (!(T > 0.0)) throw std::domain_error("ball radius must be positive");
    const double rho = period(w).to_double();
    return spectrum_value(v, rho).value / T;
}

/// Same bound through the tautological route rho(w) = h(w)^2 / |w|^2.
inline double gap_lower_bound_via_height(const Vec2R& v, const Vec2Q& w, double T) {
    if (w.is_zero()) throw std::domain_error("gap bound needs a nonzero target");
    const double rho = (height_sq(w) / w.norm_sq()).to_double();
    return spectrum_value(v, rho).value / T;
}

/// |w| / (2 h(w) T), valid whenever |w| >= 2 |v| h(w); nullopt otherwise.
inline std::optional<double> simplified_gap_bound(const Vec2R& v, const Vec2Q& w, double T) {
    if (w.is_zero()) throw std::domain_error("gap bound needs a nonzero target");
    if (!(T > 0.0)) throw std::domain_error("ball radius must be positive");
    const double w_norm = std::sqrt(w.norm_sq().to_double());
    const double h = std::sqrt(height_sq(w).to_double());
    if (w_norm < 2.0 * v.norm() * h) return std::nullopt;
    return w_norm / (2.0 * h * T);
}

struct GapReport {
    Vec2Q w;
    Rational rho_w;
    double bound = 0.0;
    double observed_min = std::numeric_limits<double>::infinity();
    UnimodularMatrix argmin = UnimodularMatrix::identity();
    bool pass = false;
};

/// Streams the ball once and reports min |g v - w| per target, with the
/// lexicographically first minimizer.
inline std::vector<GapReport> verify_gaps(const Vec2R& v, std::span<const Vec2Q> targets, double T,
                                          int workers = 1, double max_T = kDefaultOrbitMaxRadius) {
    detail::require_orbit_radius(T, max_T);
    if (v.x == 0.0 && v.y == 0.0) throw std::domain_error("orbit of the zero vector");
    struct Best {
        double dist_sq = std::numeric_limits<double>::infinity();
        Mat2Z arg = Mat2Z::identity();
    };
    struct State {
        std::vector<Best> best;
    };
    std::vector<Vec2R> ws;
    ws.reserve(targets.size());
    for (const auto& w : targets) ws.push_back(to_vec2r(w));

    State init;
    init.best.resize(targets.size());
    const State final_state = ball_reduce(
        detail::ball_spec_for(T), workers, init,
        [&](State& st, const UnimodularMatrix& g) {
            const Vec2R gv = apply(g, v);
            for (std::size_t i = 0; i < ws.size(); ++i) {
                const double dx = gv.x - ws[i].x;
                const double dy = gv.y - ws[i].y;
                const double d_sq = dx * dx + dy * dy;
                if (d_sq < st.best[i].dist_sq) {
                    st.best[i].dist_sq = d_sq;
                    st.best[i].arg = g.mat();
                }
            }
        },
        [](State& acc, const State& part) {
            for (std::size_t i = 0; i < acc.best.size(); ++i) {
                if (part.best[i].dist_sq < acc.best[i].dist_sq) acc.best[i] = part.best[i];
            }
        });

    std::vector<GapReport> reports;
    reports.reserve(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        GapReport rep{targets[i], period(targets[i]), gap_lower_bound(v, targets[i], T),
                      std::sqrt(final_state.best[i].dist_sq),
                      UnimodularMatrix(final_state.best[i].arg), false};
        rep.pass = rep.observed_min >= rep.bound - gap_pass_slack(ws[i].norm());
        reports.push_back(std::move(rep));
    }
    return reports;
}

inline GapReport verify_gap(const Vec2R& v, const Vec2Q& w, double T, int workers = 1,
                            double max_T = kDefaultOrbitMaxRadius) {
    const Vec2Q targets[] = {w};
    return verify_gaps(v, targets, T, workers, max_T).front();
}

struct GapCurve {
    std::vector<double> radius;
    std::vector<double> upper;  // +g(r), slope half-width
    std::vector<double> lower;  // -g(r)
    double T = 0.0;
    IntPair line;
};

/// Slope half-width g(r) = D_v(h^2 / r^2) / (T r) along the line R*(p,q):
/// a point at radius r and slope deviation s from the line sits at
/// euclidean distance ~ r*s, so the euclidean gap D_v/T becomes a slope
/// gap shrinking like 1/r.
inline GapCurve gap_region_curves(const Vec2R& v, double T, IntPair line,
                                  std::span<const double> radius_grid) {
    if (!is_primitive(line)) throw std::domain_error("line direction must be a coprime pair");
    if (!(T > 0.0)) throw std::domain_error("ball radius must be positive");
    if (radius_grid.empty()) throw std::domain_error("empty radius grid");
    for (std::size_t i = 0; i < radius_grid.size(); ++i) {
        if (!(radius_grid[i] > 0.0)) throw std::domain_error("radii must be positive");
        if (i + 1 < radius_grid.size() && !(radius_grid[i] < radius_grid[i + 1])) {
            throw std::domain_error("radius grid must be strictly increasing");
        }
    }
    const double h_sq = static_cast<double>(line.p) * line.p + static_cast<double>(line.q) * line.q;
    GapCurve curve;
    curve.T = T;
    curve.line = line;
    curve.radius.assign(radius_grid.begin(), radius_grid.end());
    curve.upper.reserve(radius_grid.size());
    curve.lower.reserve(radius_grid.size());
    for (double r : radius_grid) {
        const double rho = h_sq / (r * r);
        const double g = spectrum_value(v, rho).value / (T * r);
        curve.upper.push_back(g);
        curve.lower.push_back(-g);
    }
    return curve;
}

struct ClipRect {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool contains(const Vec2R& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
};

struct ClipAnnulus {
    double r_min = 0, r_max = 0;
    bool contains(const Vec2R& p) const {
        const double r = p.norm();
        return r >= r_min && r <= r_max;
    }
};

using Clip = std::variant<ClipRect, ClipAnnulus>;

inline bool clip_contains(const Clip& clip, const Vec2R& p) {
    return std::visit([&](const auto& c) { return c.contains(p); }, clip);
}

struct ScatterPoint {
    Vec2R point;
    UnimodularMatrix source;
};

/// All orbit points inside the clip region, tagged with their matrix, in
/// lexicographic matrix order.
inline std::vector<ScatterPoint> orbit_scatter(const Vec2R& v, double T, const Clip& clip,
                                               int workers = 1,
                                               double max_T = kDefaultOrbitMaxRadius) {
    detail::require_orbit_radius(T, max_T);
    using Chunk = std::vector<ScatterPoint>;
    return ball_reduce(
        detail::ball_spec_for(T), workers, Chunk{},
        [&](Chunk& chunk, const UnimodularMatrix& g) {
            const Vec2R gv = apply(g, v);
            if (clip_contains(clip, gv)) chunk.push_back(ScatterPoint{gv, g});
        },
        [](Chunk& acc, Chunk& part) {
            acc.insert(acc.end(), part.begin(), part.end());
            Chunk().swap(part);
        });
}

struct LinePoint {
    double radius = 0.0;  // signed projection onto the line direction
    double slope = 0.0;   // perpendicular deviation divided by the projection
};

/// Orbit points in the (radius, slope) frame of a rational line, restricted
/// to |radius| in [r_min, r_max] and |slope| <= slope_band.
inline std::vector<LinePoint> line_scatter(const Vec2R& v, double T, IntPair line, double r_min,
                                           double r_max, double slope_band, int workers = 1,
                                           double max_T = kDefaultOrbitMaxRadius) {
    detail::require_orbit_radius(T, max_T);
    if (!is_primitive(line)) throw std::domain_error("line direction must be a coprime pair");
    if (!(0.0 < r_min && r_min < r_max)) throw std::domain_error("bad radius window");
    if (!(slope_band > 0.0)) throw std::domain_error("slope band must be positive");
    const double h = std::hypot(static_cast<double>(line.p), static_cast<double>(line.q));
    const double ux = static_cast<double>(line.p) / h;
    const double uy = static_cast<double>(line.q) / h;
    using Chunk = std::vector<LinePoint>;
    return ball_reduce(
        detail::ball_spec_for(T), workers, Chunk{},
        [&](Chunk& chunk, const UnimodularMatrix& g) {
            const Vec2R p = apply(g, v);
            const double along = p.x * ux + p.y * uy;
            if (std::abs(along) < r_min || std::abs(along) > r_max) return;
            const double slope = (p.x * uy - p.y * ux) / -along;
            if (std::abs(slope) > slope_band) return;
            chunk.push_back(LinePoint{along, slope});
        },
        [](Chunk& acc, Chunk& part) {
            acc.insert(acc.end(), part.begin(), part.end());
            Chunk().swap(part);
        });
}

struct GapWindowCheck {
    std::uint64_t points_in_window = 0;  // orbit points whose foot lies in [r_min, r_max]
    std::uint64_t points_tested = 0;     // of those, close enough to need the exact bound
    std::uint64_t violations = 0;        // points strictly inside the gap region
    double min_slack = std::numeric_limits<double>::infinity();  // min(dist - bound) over tested
};

/// Pointwise form of the gap statement along one line: for every orbit
/// point P with foot w* = (P.u)u on the line (u the unit direction), the
/// perpendicular deviation must be at least D_v(rho(w*))/T. Points whose
/// deviation already exceeds the a-priori cap (|P| + r/h + 1)/T cannot
/// violate the bound and are not tested exactly.
inline GapWindowCheck check_gap_window(const Vec2R& v, double T, IntPair line, double r_min,
                                       double r_max, int workers = 1,
                                       double max_T = kDefaultOrbitMaxRadius) {
    detail::require_orbit_radius(T, max_T);
    if (!is_primitive(line)) throw std::domain_error("line direction must be a coprime pair");
    if (!(0.0 < r_min && r_min < r_max)) throw std::domain_error("bad radius window");
    const double h = std::hypot(static_cast<double>(line.p), static_cast<double>(line.q));
    const double ux = static_cast<double>(line.p) / h;
    const double uy = static_cast<double>(line.q) / h;
    const double v_norm = v.norm();

    return ball_reduce(
        detail::ball_spec_for(T), workers, GapWindowCheck{},
        [&](GapWindowCheck& st, const UnimodularMatrix& g) {
            const Vec2R p = apply(g, v);
            const double along = p.x * ux + p.y * uy;
            const double r = std::abs(along);
            if (r < r_min || r > r_max) return;
            ++st.points_in_window;
            const double dev = std::abs(p.x * uy - p.y * ux);
            // d(y, Z^Z) <= |y| + 1 gives D_v(rho) <= |v| + r/h at rho = h^2/r^2.
            const double cap = (v_norm + r / h + 1.0) / T;
            if (dev > cap) return;
            ++st.points_tested;
            const double rho = (h * h) / (r * r);
            const double bound = spectrum_value(v, rho).value / T;
            const double slack = dev - bound;
            if (slack < st.min_slack) st.min_slack = slack;
            if (dev < bound - gap_pass_slack(r)) ++st.violations;
        },
        [](GapWindowCheck& acc, const GapWindowCheck& part) {
            acc.points_in_window += part.points_in_window;
            acc.points_tested += part.points_tested;
            acc.violations += part.violations;
            if (part.min_slack < acc.min_slack) acc.min_slack = part.min_slack;
        });
}

}  // namespace latgaps
