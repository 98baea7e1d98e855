// include/latgaps/equidist.hpp — orbit statistics against the radial
// measure dw/|w|.
//
// S_T(phi) = (1/T) * sum over the ball of phi(g v) converges to a multiple
// of I(phi) = integral of phi(w) dw/|w|. The normalizing constant depends
// on a Haar convention the statistics cannot pin down, so every assertion
// here is ratio- or consistency-form. Test functions factor as
// phi(w) = f(|w|) * g(arg w); in polar coordinates dw/|w| = dr dtheta, so
// I(phi) is a product of two line integrals.

#pragma once

#include "latgaps/ball.hpp"
#include "latgaps/gaps.hpp"
#include "latgaps/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace latgaps {

/// C^1 trapezoid bump on [lo, hi]: smoothstep ramps of width `rolloff` at
/// both ends, plateau value 1 between them.
struct BumpProfile {
    double lo = 0.0, hi = 1.0, rolloff = 0.1;

    void validate() const {
        if (!(rolloff > 0.0) || !(hi - lo > 2.0 * rolloff)) {
            throw std::domain_error("bump needs hi - lo > 2*rolloff > 0");
        }
    }

    double operator()(double x) const {
        if (x <= lo || x >= hi) return 0.0;
        if (x < lo + rolloff) {
            const double u = (x - lo) / rolloff;
            return u * u * (3.0 - 2.0 * u);
        }
        if (x > hi - rolloff) {
            const double u = (hi - x) / rolloff;
            return u * u * (3.0 - 2.0 * u);
        }
        return 1.0;
    }

    /// Exact integral: plateau plus two smoothstep ramps of mass rolloff/2.
    double integral() const { return (hi - lo) - rolloff; }
};

/// phi(w) = scale * f(|w|) * g(arg w), compactly supported away from 0.
struct TestFunction {
    BumpProfile radial;   // on |w|; radial.lo must stay positive
    BumpProfile angular;  // on arg w, an arc of length < 2*pi
    double scale = 1.0;

    void validate() const {
        radial.validate();
        angular.validate();
        if (!(radial.lo > 0.0)) throw std::domain_error("support must avoid the origin");
        if (!(angular.hi - angular.lo < 2.0 * std::numbers::pi)) {
            throw std::domain_error("angular support must be a proper arc");
        }
    }

    double operator()(const Vec2R& w) const {
        const double r = w.norm();
        if (r <= radial.lo || r >= radial.hi) return 0.0;
        double theta = std::atan2(w.y, w.x);
        // Shift by full turns into the arc's frame.
        const double two_pi = 2.0 * std::numbers::pi;
        double offset = theta - angular.lo;
        offset -= two_pi * std::floor(offset / two_pi);
        return scale * radial(r) * angular(angular.lo + offset);
    }
};

namespace detail {

template <class Fn>
double adaptive_simpson(Fn&& f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class Fn>
double integrate(Fn&& f, double a, double b, double rel_tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double scale = std::abs(whole) > 1e-300 ? std::abs(whole) : 1.0;
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, rel_tol * scale, 48);
}

}  // namespace detail

/// I(phi) = (integral of f) * (integral of g), each by adaptive quadrature
/// to relative 1e-8.
inline double target_integral(const TestFunction& phi) {
    phi.validate();
    const double i_r = detail::integrate(phi.radial, phi.radial.lo, phi.radial.hi, 1e-9);
    const double i_a = detail::integrate(phi.angular, phi.angular.lo, phi.angular.hi, 1e-9);
    return phi.scale * i_r * i_a;
}

/// Neumaier-compensated accumulator; partials merge exactly the same way
/// regardless of how the ball was partitioned.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    void merge(const CompensatedSum& o) {
        add(o.sum);
        comp += o.comp;
    }
    double value() const { return sum + comp; }
};

struct OrbitStatistic {
    double T = 0.0;
    double value = 0.0;               // S_T(phi)
    std::uint64_t sample_count = 0;   // orbit points with phi != 0
};

/// One pass over the ball evaluating several test functions at once.
template <class Phi>
std::vector<OrbitStatistic> orbit_statistics(const Vec2R& v, double T, std::span<const Phi> phis,
                                             int workers = 1,
                                             double max_T = kDefaultOrbitMaxRadius) {
    detail::require_orbit_radius(T, max_T);
    if (v.x == 0.0 && v.y == 0.0) throw std::domain_error("orbit of the zero vector");
    struct State {
        std::vector<CompensatedSum> sums;
        std::vector<std::uint64_t> counts;
    };
    State init;
    init.sums.resize(phis.size());
    init.counts.assign(phis.size(), 0);
    const State total = ball_reduce(
        detail::ball_spec_for(T), workers, init,
        [&](State& st, const UnimodularMatrix& g) {
            const Vec2R gv = apply(g, v);
            for (std::size_t i = 0; i < phis.size(); ++i) {
                const double val = phis[i](gv);
                if (val != 0.0) {
                    st.sums[i].add(val);
                    ++st.counts[i];
                }
            }
        },
        [](State& acc, const State& part) {
            for (std::size_t i = 0; i < acc.sums.size(); ++i) {
                acc.sums[i].merge(part.sums[i]);
                acc.counts[i] += part.counts[i];
            }
        });
    std::vector<OrbitStatistic> out;
    out.reserve(phis.size());
    for (std::size_t i = 0; i < phis.size(); ++i) {
        out.push_back(OrbitStatistic{T, total.sums[i].value() / T, total.counts[i]});
    }
    return out;
}

template <class Phi>
OrbitStatistic orbit_statistic(const Vec2R& v, double T, const Phi& phi, int workers = 1,
                               double max_T = kDefaultOrbitMaxRadius) {
    const Phi phis[] = {phi};
    return orbit_statistics<Phi>(v, T, phis, workers, max_T).front();
}

struct RatioTest {
    double lhs_ratio = 0.0;  // S_T(phi1) / S_T(phi2)
    double rhs_ratio = 0.0;  // I(phi1) / I(phi2)
    double rel_err = 0.0;    // |lhs/rhs - 1|
};

/// Constant-free form of the equidistribution limit: the unknown
/// normalization cancels between two test functions.
inline RatioTest ratio_test(const Vec2R& v, double T, const TestFunction& phi1,
                            const TestFunction& phi2, int workers = 1,
                            double max_T = kDefaultOrbitMaxRadius) {
    const TestFunction phis[] = {phi1, phi2};
    const auto stats = orbit_statistics<TestFunction>(v, T, phis, workers, max_T);
    if (!(stats[1].value > 0.0)) throw std::domain_error("reference test function misses the orbit");
    RatioTest out;
    out.lhs_ratio = stats[0].value / stats[1].value;
    out.rhs_ratio = target_integral(phi1) / target_integral(phi2);
    out.rel_err = std::abs(out.lhs_ratio / out.rhs_ratio - 1.0);
    return out;
}

/// c_hat = I(phi) / (|v| S_T(phi)); stabilizes to the same value across phi
/// and v as T grows.
inline double constant_estimate(const Vec2R& v, double T, const TestFunction& phi, int workers = 1,
                                double max_T = kDefaultOrbitMaxRadius) {
    const OrbitStatistic stat = orbit_statistic(v, T, phi, workers, max_T);
    if (!(stat.value > 0.0)) throw std::domain_error("test function misses the orbit");
    return target_integral(phi) / (v.norm() * stat.value);
}

struct Annulus {
    double r_min = 0.0, r_max = 0.0;

    void validate() const {
        if (!(0.0 < r_min && r_min < r_max)) throw std::domain_error("bad annulus");
    }
};

/// #(orbit points with r_min <= |g v| <= r_max); grows linearly in T.
inline std::uint64_t annulus_count(const Vec2R& v, double T, const Annulus& annulus,
                                   int workers = 1, double max_T = kDefaultOrbitMaxRadius) {
    detail::require_orbit_radius(T, max_T);
    annulus.validate();
    return ball_reduce(
        detail::ball_spec_for(T), workers, std::uint64_t{0},
        [&](std::uint64_t& n, const UnimodularMatrix& g) {
            const double r = apply(g, v).norm();
            if (r >= annulus.r_min && r <= annulus.r_max) ++n;
        },
        [](std::uint64_t& acc, const std::uint64_t& part) { acc += part; });
}

}  // namespace latgaps
