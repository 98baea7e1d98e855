// include/latgaps/ball.hpp — exact enumeration of norm balls in SL(2,Z).
//
// The ball of radius T is { g in SL(2,Z) : ||g||_F <= T } where ||.||_F is
// the Frobenius norm. Membership is decided exactly: with integer entries,
// a^2+b^2+c^2+d^2 <= T^2 reduces to norm_sq <= floor(T^2) for rational T^2,
// so no floating point enters the decision.
//
// Fast path: for a != 0 the determinant condition a*d - b*c = 1 forces
// b*c = -1 (mod a), solvable exactly when gcd(a, b) = 1; the admissible c
// form a single arithmetic progression mod |a| and d = (1 + b*c)/a. The
// a = 0 case degenerates to (b, c) in {(1,-1), (-1,1)} with d free.
//
// Matrices are produced in lexicographic (a, b, c, d) order. Parallel scans
// partition the a-axis into a fixed task list (independent of the worker
// count) and merge per-task results in task order, so output never depends
// on how many workers ran.

#pragma once

#include "latgaps/numeric.hpp"
#include "latgaps/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace latgaps {

/// Squared radius of the ball, kept exact.
struct BallSpec {
    Rational radius_sq;

    static BallSpec from_radius_sq(Rational t_sq) {
        if (!t_sq.is_positive()) throw std::domain_error("ball radius^2 must be positive");
        return BallSpec{std::move(t_sq)};
    }
    static BallSpec from_radius(const Rational& t) {
        if (!t.is_positive()) throw std::domain_error("ball radius must be positive");
        return BallSpec{t * t};
    }
};

// Entry width guard: entries are bounded by T, and the scan keeps every
// intermediate in int64, which is safe up to T = 10^7.
inline constexpr std::int64_t kMaxFloorRadiusSq = 100'000'000'000'000;  // (10^7)^2

// Naive cross-check oracle is cubic in T; keep it small.
inline constexpr std::int64_t kNaiveBallMaxRadius = 64;

namespace detail {

inline std::int64_t isqrt_i64(std::int64_t n) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct BallPlan {
    std::int64_t floor_t_sq = 0;  // norm_sq <= floor_t_sq is exact membership
    std::int64_t a_max = 0;       // |a| <= a_max
    std::int64_t d_cap = 0;       // |d| > d_cap certainly violates the norm
};

inline BallPlan make_plan(const BallSpec& spec) {
    const BigInt floor_big = spec.radius_sq.num() / spec.radius_sq.den();
    if (floor_big > kMaxFloorRadiusSq) {
        throw OverflowError("ball radius exceeds the configured entry width (|entry| <= 1e7)");
    }
    BallPlan plan;
    plan.floor_t_sq = floor_big.convert_to<std::int64_t>();
    plan.d_cap = isqrt_i64(plan.floor_t_sq);
    plan.a_max = plan.d_cap;
    return plan;
}

// Modular inverse for gcd(x, m) = 1, m >= 1.
inline std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
    std::int64_t r0 = m, r1 = ((x % m) + m) % m;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        s0 -= k * s1;
        std::swap(s0, s1);
    }
    return ((s0 % m) + m) % m;
}

// Emits every ball element with first entry a, in lex (b, c, d) order.
template <class Fn>
void scan_column(const BallPlan& plan, std::int64_t a, Fn&& fn) {
    const std::int64_t t_sq = plan.floor_t_sq;
    if (a == 0) {
        if (t_sq < 2) return;
        const std::int64_t d_max = isqrt_i64(t_sq - 2);
        for (std::int64_t d = -d_max; d <= d_max; ++d) fn(Mat2Z{0, -1, 1, d});
        for (std::int64_t d = -d_max; d <= d_max; ++d) fn(Mat2Z{0, 1, -1, d});
        return;
    }
    const std::int64_t m = a < 0 ? -a : a;
    if (a * a > t_sq) return;
    const std::int64_t b_max = isqrt_i64(t_sq - a * a);
    for (std::int64_t b = -b_max; b <= b_max; ++b) {
        if (std::gcd(m, b < 0 ? -b : b) != 1) continue;
        // c == -b^{-1} (mod m); m == 1 admits every c.
        std::int64_t c0 = 0;
        if (m > 1) c0 = (m - mod_inverse(b, m)) % m;
        const std::int64_t rem = t_sq - a * a - b * b;
        const std::int64_t c_lim = isqrt_i64(rem);
        std::int64_t c = c0 - ((c0 + c_lim) / m) * m;
        while (c < -c_lim) c += m;
        while (c - m >= -c_lim) c -= m;
        for (; c <= c_lim; c += m) {
            const std::int64_t d = (1 + b * c) / a;
            if (d > plan.d_cap || d < -plan.d_cap) continue;
            if (a * a + b * b + c * c + d * d <= t_sq) fn(Mat2Z{a, b, c, d});
        }
    }
}

template <class Fn>
void scan_range(const BallPlan& plan, std::int64_t a_lo, std::int64_t a_hi, Fn&& fn) {
    for (std::int64_t a = a_lo; a <= a_hi; ++a) scan_column(plan, a, fn);
}

// Contiguous a-ranges with roughly equal work. The list depends only on the
// plan, never on the worker count.
inline std::vector<std::pair<std::int64_t, std::int64_t>> partition_columns(const BallPlan& plan) {
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    const std::int64_t a_max = plan.a_max;
    if (a_max < 0) return ranges;
    auto weight = [&](std::int64_t a) {
        const double abs_a = a == 0 ? 1.0 : static_cast<double>(a < 0 ? -a : a);
        const double area = static_cast<double>(plan.floor_t_sq - a * a);
        return area / abs_a + std::sqrt(static_cast<double>(plan.floor_t_sq)) + 1.0;
    };
    double total = 0.0;
    for (std::int64_t a = -a_max; a <= a_max; ++a) total += weight(a);
    const std::int64_t n_cols = 2 * a_max + 1;
    const int n_tasks = static_cast<int>(std::min<std::int64_t>(n_cols, 64));
    const double per_task = total / n_tasks;
    std::int64_t lo = -a_max;
    double acc = 0.0;
    for (std::int64_t a = -a_max; a <= a_max; ++a) {
        acc += weight(a);
        if (acc >= per_task * (static_cast<double>(ranges.size()) + 1.0) || a == a_max) {
            ranges.emplace_back(lo, a);
            lo = a + 1;
        }
    }
    return ranges;
}

}  // namespace detail

/// Streams the ball in lexicographic order, single-threaded.
template <class Fn>
void for_each_in_ball(const BallSpec& spec, Fn&& fn) {
    const auto plan = detail::make_plan(spec);
    detail::scan_range(plan, -plan.a_max, plan.a_max,
                       [&](const Mat2Z& m) { fn(UnimodularMatrix(m)); });
}

/// Partition-parallel reduction over the ball. `per(state, g)` consumes one
/// matrix; `merge(acc, part)` folds per-task states in task (= lex) order.
template <class State, class PerMatrix, class Merge>
State ball_reduce(const BallSpec& spec, int workers, State init, PerMatrix per, Merge merge) {
    const auto plan = detail::make_plan(spec);
    const auto ranges = detail::partition_columns(plan);
    std::vector<State> parts(ranges.size(), init);
    run_indexed_tasks(static_cast<int>(ranges.size()), workers, [&](int i) {
        detail::scan_range(plan, ranges[static_cast<std::size_t>(i)].first,
                           ranges[static_cast<std::size_t>(i)].second, [&](const Mat2Z& m) {
                               per(parts[static_cast<std::size_t>(i)], UnimodularMatrix(m));
                           });
    });
    State acc = std::move(init);
    for (auto& part : parts) merge(acc, part);
    return acc;
}

/// Materializes the ball in lexicographic (a, b, c, d) order.
inline std::vector<UnimodularMatrix> enumerate_ball(const BallSpec& spec, int workers = 1) {
    using Chunk = std::vector<UnimodularMatrix>;
    return ball_reduce(
        spec, workers, Chunk{},
        [](Chunk& chunk, const UnimodularMatrix& g) { chunk.push_back(g); },
        [](Chunk& acc, Chunk& part) {
            acc.insert(acc.end(), part.begin(), part.end());
            Chunk().swap(part);
        });
}

/// Cardinality of the ball without materializing it.
inline std::uint64_t count_ball(const BallSpec& spec, int workers = 1) {
    return ball_reduce(
        spec, workers, std::uint64_t{0},
        [](std::uint64_t& n, const UnimodularMatrix&) { ++n; },
        [](std::uint64_t& acc, const std::uint64_t& part) { acc += part; });
}

/// Brute-force oracle: triple loop over (a, b, c), d solved from the
/// determinant. Guarded to T <= 64.
inline std::vector<UnimodularMatrix> enumerate_ball_naive(const BallSpec& spec) {
    const auto plan = detail::make_plan(spec);
    if (plan.floor_t_sq > kNaiveBallMaxRadius * kNaiveBallMaxRadius) {
        throw GuardError("naive ball enumeration is limited to T <= 64");
    }
    std::vector<UnimodularMatrix> out;
    const std::int64_t n = plan.a_max;
    for (std::int64_t a = -n; a <= n; ++a) {
        for (std::int64_t b = -n; b <= n; ++b) {
            for (std::int64_t c = -n; c <= n; ++c) {
                if (a == 0) {
                    if (b * c != -1) continue;
                    for (std::int64_t d = -n; d <= n; ++d) {
                        if (b * b + c * c + d * d <= plan.floor_t_sq) {
                            out.emplace_back(Mat2Z{0, b, c, d});
                        }
                    }
                    continue;
                }
                const std::int64_t num = 1 + b * c;
                if (num % a != 0) continue;
                const std::int64_t d = num / a;
                if (a * a + b * b + c * c + d * d <= plan.floor_t_sq) {
                    out.emplace_back(Mat2Z{a, b, c, d});
                }
            }
        }
    }
    return out;
}

}  // namespace latgaps
