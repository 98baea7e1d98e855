// include/latgaps/rational_geometry.hpp — periods and heights of rational
// points, the section into SL(2,R), the horocycle generator, and the exact
// conjugation witness behind the period formula.
//
// A nonzero rational point factors uniquely as v = t * (p, q) with t > 0 and
// coprime integers (p, q). The closed-orbit period of v is rho(v) = 1/t^2,
// the height is h(v)^2 = p^2 + q^2, and rho(v) * |v|^2 = h(v)^2 identically.
// P(rho) = (1/sqrt(rho)) * (Z ^ Z) is the set of points of period rho, where
// Z ^ Z denotes the coprime integer pairs.

#pragma once

#include "latgaps/numeric.hpp"

#include <utility>

namespace latgaps {

/// v = t * (p, q), t > 0, gcd(|p|, |q|) = 1; signs live in (p, q).
struct PrimitiveDecomposition {
    Rational t;
    BigInt p, q;
};

inline PrimitiveDecomposition primitive_decompose(const Vec2Q& v) {
    if (v.is_zero()) throw std::domain_error("cannot decompose the zero vector");
    const BigInt xn = v.x.num(), xd = v.x.den();
    const BigInt yn = v.y.num(), yd = v.y.den();
    const BigInt l = boost::multiprecision::lcm(xd, yd);
    const BigInt ax = xn * (l / xd);
    const BigInt ay = yn * (l / yd);
    const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(ax),
                                                boost::multiprecision::abs(ay));
    return PrimitiveDecomposition{Rational(g, l), ax / g, ay / g};
}

/// Period rho(v) = 1/t^2 of the closed horocycle orbit attached to v.
inline Rational period(const Vec2Q& v) {
    const auto dec = primitive_decompose(v);
    return (dec.t * dec.t).reciprocal();
}

/// Squared height p^2 + q^2 of the primitive direction of v.
inline Rational height_sq(const Vec2Q& v) {
    const auto dec = primitive_decompose(v);
    return Rational(BigInt(dec.p * dec.p + dec.q * dec.q));
}

/// rho(v) * |v|^2 == h(v)^2, evaluated exactly.
inline bool tautological_identity_holds(const Vec2Q& v) {
    return period(v) * v.norm_sq() == height_sq(v);
}

/// Section (a, b) -> (a, 0; b, 1/a) into SL(2,R); defined for a != 0.
inline Mat2Q section(const Vec2Q& v) {
    if (v.x.is_zero()) throw std::domain_error("section requires a nonzero first coordinate");
    return Mat2Q{v.x, Rational(0), v.y, v.x.reciprocal()};
}

/// Section after swapping coordinates: (a, b) -> (b, 0; a, 1/b), for b != 0.
/// Covers the points the plain section misses.
inline Mat2Q section_swapped(const Vec2Q& v) {
    if (v.y.is_zero()) throw std::domain_error("swapped section requires a nonzero second coordinate");
    return Mat2Q{v.y, Rational(0), v.x, v.y.reciprocal()};
}

/// Horocycle generator u(t) = (1, t; 0, 1).
inline Mat2Q horocycle(const Rational& t) {
    return Mat2Q{Rational(1), t, Rational(0), Rational(1)};
}

/// The unimodular witness gamma = (1 - pq, p^2; -q^2, 1 + pq) conjugating
/// the section of t*(p,q) into u(1/t^2). Note the sign arrangement: the
/// naive (1 + pq, p^2; q^2, 1 - pq) has determinant 1 - 2 p^2 q^2, so only
/// this variant lies in SL(2,Z) for pq != 0.
inline UnimodularMatrix period_witness(const BigInt& p, const BigInt& q) {
    if (boost::multiprecision::gcd(boost::multiprecision::abs(p),
                                   boost::multiprecision::abs(q)) != 1) {
        throw std::domain_error("period witness requires coprime (p, q)");
    }
    const BigInt pq = p * q;
    return UnimodularMatrix(to_int128(1 - pq), to_int128(p * p),
                            to_int128(-(q * q)), to_int128(1 + pq));
}

/// Exact check of gamma * sigma(v) == sigma(v) * u(1/t^2) for v = t*(p,q).
/// For p == 0 the identity is read through the swapped section, with the
/// witness of the swapped pair (q, p).
inline bool period_witness_identity_holds(const BigInt& p, const BigInt& q, const Rational& t) {
    if (!t.is_positive()) throw std::domain_error("t must be positive");
    const Rational tp = t * Rational(p);
    const Rational tq = t * Rational(q);
    const Rational s = (t * t).reciprocal();
    if (p != 0) {
        const Vec2Q v{tp, tq};
        const Mat2Q sigma = section(v);
        return to_mat2q(period_witness(p, q).mat()) * sigma == sigma * horocycle(s);
    }
    const Vec2Q swapped{tq, tp};
    const Mat2Q sigma = section(swapped);
    return to_mat2q(period_witness(q, p).mat()) * sigma == sigma * horocycle(s);
}

/// Membership in P(rho) = (1/sqrt(rho)) * (Z ^ Z) for rational points: true
/// iff rho is the square of a rational r and r*w has coprime integer
/// coordinates.
inline bool primitive_set_contains(const Rational& rho, const Vec2Q& w) {
    if (!rho.is_positive()) throw std::domain_error("period must be positive");
    if (w.is_zero()) return false;
    const BigInt sn = boost::multiprecision::sqrt(rho.num());
    const BigInt sd = boost::multiprecision::sqrt(rho.den());
    if (sn * sn != rho.num() || sd * sd != rho.den()) return false;
    const Rational root(sn, sd);
    const Rational u = root * w.x;
    const Rational v = root * w.y;
    if (!u.is_integer() || !v.is_integer()) return false;
    return boost::multiprecision::gcd(boost::multiprecision::abs(u.num()),
                                      boost::multiprecision::abs(v.num())) == 1;
}

}  // namespace latgaps
