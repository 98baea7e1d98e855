// include/latgaps/optimality.hpp — how sharp the gap bound is.
//
// Two constructions show the bound D_v(rho(w))/T is nearly attained:
//   * a shear (1, m; 0, 1) with the largest m keeping it inside the ball
//     pushes v next to an axis point, within a 10/T relative margin;
//   * a contracting matrix (N, -1; 1, 0) with N^2 + 2 <= T^2 squeezes v
//     against a scaled copy of the on-line nearest point of P(q^2/a^2),
//     with a controlled drift of the period.
// diophantine_recover turns the second construction around: scanning the
// orbit against P(rho') over a small window of periods recovers the best
// rational approximation to the slope with denominator q.

#pragma once

#include "latgaps/ball.hpp"
#include "latgaps/gaps.hpp"
#include "latgaps/numeric.hpp"
#include "latgaps/spectrum.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace latgaps {

namespace detail {

inline std::int64_t largest_int_with_norm(double T) {
    // max m with m^2 + 2 <= T^2
    const auto guess = static_cast<std::int64_t>(std::floor(T));
    std::int64_t m = guess + 2;
    const double t_sq = T * T;
    while (m > 0 && static_cast<double>(m) * static_cast<double>(m) + 2.0 > t_sq) --m;
    return m;
}

}  // namespace detail

struct ShearCertificate {
    UnimodularMatrix gamma = UnimodularMatrix::identity();
    Vec2R w;             // axis point of rational slope
    double dist = 0.0;   // |gamma v - w|
    double bound = 0.0;  // D_v(rho(w)) / T
    double slack = 0.0;  // dist - bound
};

/// The shear construction; the certificate satisfies
/// dist - bound <= 10 * bound / T for every T >= 10.
inline ShearCertificate near_optimal_shear(const Vec2R& v, double T) {
    if (!(T >= 10.0)) throw std::domain_error("shear certificate requires T >= 10");
    if (v.x == 0.0 || v.y == 0.0) {
        throw std::domain_error("shear certificate requires a point of irrational slope");
    }
    const std::int64_t m = detail::largest_int_with_norm(T);
    ShearCertificate cert;
    if (std::abs(v.x) <= std::abs(v.y)) {
        cert.gamma = UnimodularMatrix(1, m, 0, 1);
        cert.w = Vec2R{v.x + static_cast<double>(m) * v.y, 0.0};
        cert.dist = std::abs(v.y);
        cert.bound = spectrum_value(v, 1.0 / (cert.w.x * cert.w.x)).value / T;
    } else {
        cert.gamma = UnimodularMatrix(1, 0, m, 1);
        cert.w = Vec2R{0.0, static_cast<double>(m) * v.x + v.y};
        cert.dist = std::abs(v.x);
        cert.bound = spectrum_value(v, 1.0 / (cert.w.y * cert.w.y)).value / T;
    }
    cert.slack = cert.dist - cert.bound;
    return cert;
}

struct ContractionCertificate {
    std::int64_t N = 0;
    UnimodularMatrix gamma = UnimodularMatrix::identity();
    Vec2R w0;                  // on-line nearest point of P(q^2/a^2)
    double alpha = 0.0;
    double lambda = 0.0;
    Vec2R w;                   // gamma(alpha * w0)
    double rho = 0.0;          // q^2 / a^2
    double rho_prime = 0.0;    // rho / alpha^2
    double dist = 0.0;         // |gamma v - w| = |lambda|
    double spectrum_ref = 0.0; // D_v(rho), independent 2-d search
    bool dist_ok = false;      // dist <= (1+eps) D_v(rho) / T
    bool period_ok = false;    // |rho' a^2/q^2 - 1| <= 2(1+eps) D_v(rho) / (|a| T)
};

/// Nearest integer to `target` that is coprime to q, scanning outward from
/// round(target); candidates at equal distance resolve to the lower one.
inline std::int64_t nearest_coprime_to(double target, std::int64_t q) {
    const std::int64_t base = std::llround(target);
    for (std::int64_t step = 0;; ++step) {
        const std::int64_t lo = base - step, hi = base + step;
        const bool lo_ok = std::gcd(q, lo < 0 ? -lo : lo) == 1;
        const bool hi_ok = step > 0 && std::gcd(q, hi < 0 ? -hi : hi) == 1;
        if (lo_ok && hi_ok) {
            return std::abs(target - static_cast<double>(hi)) <
                           std::abs(target - static_cast<double>(lo))
                       ? hi
                       : lo;
        }
        if (lo_ok) return lo;
        if (hi_ok) return hi;
    }
}

inline ContractionCertificate contracting_approx(const Vec2R& v, std::int64_t q, double T,
                                                 double eps) {
    if (v.x == 0.0) throw std::domain_error("contraction certificate requires a nonzero first coordinate");
    if (q <= 1) throw std::domain_error("contraction certificate requires q > 1");
    if (!(T > 2.0)) throw std::domain_error("ball radius too small");
    if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
    const double a = v.x, b = v.y;

    ContractionCertificate cert;
    cert.rho = static_cast<double>(q) * static_cast<double>(q) / (a * a);

    // sqrt(rho)*w0 = (q*sign(a), b_hat) must be primitive, i.e. gcd(q, b_hat) = 1.
    const std::int64_t b_hat = nearest_coprime_to(static_cast<double>(q) * b / a, q);
    const double b_prime = a * static_cast<double>(b_hat) / static_cast<double>(q);
    cert.w0 = Vec2R{a, b_prime};

    cert.N = detail::largest_int_with_norm(T);
    if (cert.N * a - b_prime == 0.0) --cert.N;  // the one singular N
    cert.gamma = UnimodularMatrix(cert.N, -1, 1, 0);

    const double denom = static_cast<double>(cert.N) * a - b_prime;
    cert.alpha = (static_cast<double>(cert.N) * a - b) / denom;
    cert.lambda = a * (b - b_prime) / denom;
    const Vec2R scaled_w0{cert.alpha * a, cert.alpha * b_prime};
    cert.w = apply(cert.gamma, scaled_w0);
    cert.rho_prime = cert.rho / (cert.alpha * cert.alpha);
    cert.dist = std::abs(cert.lambda);

    cert.spectrum_ref = spectrum_value(v, cert.rho).value;
    const double budget = (1.0 + eps) * cert.spectrum_ref / T;
    cert.dist_ok = cert.dist <= budget;
    const double period_drift = std::abs(cert.rho_prime * a * a / (static_cast<double>(q) * q) - 1.0);
    cert.period_ok = period_drift <= 2.0 * (1.0 + eps) * cert.spectrum_ref / (std::abs(a) * T);
    return cert;
}

/// Oracle: inf_p |s - p/q| = |s - round(q s)/q|.
inline double best_approximation_error(double slope, std::int64_t q) {
    if (q < 1) throw std::domain_error("q must be >= 1");
    const double scaled = static_cast<double>(q) * slope;
    return std::abs(slope - static_cast<double>(std::llround(scaled)) / static_cast<double>(q));
}

/// (T/a) * inf { d(orbit, P(rho')) : |a^2 rho'/q^2 - 1| <= 2/(qT) }, the
/// inner infimum discretized over a uniform grid containing both endpoints
/// and the center.
inline double diophantine_recover(const Vec2R& v, std::int64_t q, double T, int grid_size,
                                  int workers = 1, double max_T = kDefaultOrbitMaxRadius) {
    detail::require_orbit_radius(T, max_T);
    if (!(v.x > 0.0)) throw std::domain_error("recovery requires a > 0");
    if (q < 1) throw std::domain_error("q must be >= 1");
    if (grid_size < 1) throw std::domain_error("grid size must be >= 1");
    const double a = v.x;
    const double rho = static_cast<double>(q) * static_cast<double>(q) / (a * a);
    const double half_width = 2.0 / (static_cast<double>(q) * T);

    std::vector<double> roots;  // sqrt(rho') over the window
    roots.reserve(static_cast<std::size_t>(grid_size));
    if (grid_size == 1) {
        roots.push_back(std::sqrt(rho));
    } else {
        for (int i = 0; i < grid_size; ++i) {
            const double rel = -half_width +
                               2.0 * half_width * static_cast<double>(i) / (grid_size - 1);
            roots.push_back(std::sqrt(rho * (1.0 + rel)));
        }
    }

    const double best = ball_reduce(
        detail::ball_spec_for(T), workers, std::numeric_limits<double>::infinity(),
        [&](double& best_dist, const UnimodularMatrix& g) {
            const Vec2R x = apply(g, v);
            for (const double root : roots) {
                const double y1 = root * x.x;
                const double y2 = root * x.y;
                // d(y, Z^Z) >= d(y, Z^2): cheap reject against the current best.
                const double r1 = y1 - std::nearbyint(y1);
                const double r2 = y2 - std::nearbyint(y2);
                const double d_sq = r1 * r1 + r2 * r2;
                const double cutoff = best_dist * root;
                if (d_sq >= cutoff * cutoff) continue;
                const double exact = nearest_primitive(Vec2R{y1, y2}).dist / root;
                if (exact < best_dist) best_dist = exact;
            }
        },
        [](double& acc, const double& part) {
            if (part < acc) acc = part;
        });
    return best * T / a;
}

}  // namespace latgaps
