// include/latgaps/spectrum.hpp — the spectrum of periods D_v.
//
// D_v(rho) = d(v, P(rho)) = (1/sqrt(rho)) * d(sqrt(rho) * v, Z ^ Z), the
// distance from v to the set of points of period rho. The inner distance is
// to the coprime integer pairs, computed by an exhaustive search over
// expanding square rings: a fixed-radius search is not enough, because near
// non-primitive axis points such as (6, 0) the nearest coprime pair can be
// farther than 1.

#pragma once

#include "latgaps/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace latgaps {

struct IntPair {
    std::int64_t p = 0, q = 0;

    bool operator==(const IntPair& o) const { return p == o.p && q == o.q; }
    bool lex_less(const IntPair& o) const { return p != o.p ? p < o.p : q < o.q; }
};

inline bool is_primitive(const IntPair& w) {
    return std::gcd(w.p < 0 ? -w.p : w.p, w.q < 0 ? -w.q : w.q) == 1;
}

struct NearestPrimitive {
    IntPair witness;
    double dist = 0.0;
};

/// Nearest coprime integer pair to x; ties broken by lexicographic (p, q).
inline NearestPrimitive nearest_primitive(const Vec2R& x) {
    if (!(std::abs(x.x) < 1e15 && std::abs(x.y) < 1e15)) {
        throw std::domain_error("nearest_primitive: coordinate too large for exact rounding");
    }
    const std::int64_t cx = std::llround(x.x);
    const std::int64_t cy = std::llround(x.y);
    double best_sq = std::numeric_limits<double>::infinity();
    IntPair best{};
    auto consider = [&](std::int64_t p, std::int64_t q) {
        if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1) return;
        const double dx = x.x - static_cast<double>(p);
        const double dy = x.y - static_cast<double>(q);
        const double d_sq = dx * dx + dy * dy;
        const IntPair cand{p, q};
        if (d_sq < best_sq || (d_sq == best_sq && cand.lex_less(best))) {
            best_sq = d_sq;
            best = cand;
        }
    };
    for (std::int64_t ring = 0;; ++ring) {
        // Every point of ring k is at distance >= k - 1/2 from x.
        const double reach = static_cast<double>(ring) - 0.5;
        if (ring > 0 && best_sq < std::numeric_limits<double>::infinity() &&
            reach > 0.0 && reach * reach > best_sq) {
            break;
        }
        if (ring == 0) {
            consider(cx, cy);
            continue;
        }
        for (std::int64_t p = cx - ring; p <= cx + ring; ++p) {
            const bool edge_col = (p == cx - ring || p == cx + ring);
            if (edge_col) {
                for (std::int64_t q = cy - ring; q <= cy + ring; ++q) consider(p, q);
            } else {
                consider(p, cy - ring);
                consider(p, cy + ring);
            }
        }
    }
    return NearestPrimitive{best, std::sqrt(best_sq)};
}

struct SpectrumSample {
    double rho = 0.0;
    double value = 0.0;      // D_v(rho)
    IntPair witness;         // coprime pair realizing the minimum
    Vec2R scaled_point;      // sqrt(rho) * v
};

inline SpectrumSample spectrum_value(const Vec2R& v, double rho) {
    if (v.x == 0.0 && v.y == 0.0) throw std::domain_error("spectrum of the zero vector");
    if (!(rho > 0.0)) throw std::domain_error("period must be positive");
    const double root = std::sqrt(rho);
    const Vec2R scaled{root * v.x, root * v.y};
    const NearestPrimitive near = nearest_primitive(scaled);
    return SpectrumSample{rho, near.dist / root, near.witness, scaled};
}

inline std::vector<SpectrumSample> spectrum_curve(const Vec2R& v, std::span<const double> rho_grid) {
    if (rho_grid.empty()) throw std::domain_error("empty period grid");
    for (std::size_t i = 0; i + 1 < rho_grid.size(); ++i) {
        if (!(rho_grid[i] < rho_grid[i + 1])) {
            throw std::domain_error("period grid must be strictly increasing");
        }
    }
    std::vector<SpectrumSample> out;
    out.reserve(rho_grid.size());
    for (double rho : rho_grid) out.push_back(spectrum_value(v, rho));
    return out;
}

}  // namespace latgaps
