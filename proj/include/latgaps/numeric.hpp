// include/latgaps/numeric.hpp — exact scalar, vector and 2x2 matrix arithmetic.
//
// Matrix entries are checked 128-bit integers: every operation is exact or
// throws OverflowError, never wraps. Rational values (periods, heights,
// section entries) use arbitrary-precision numerator/denominator so the
// conjugation identities can be evaluated without any width limit.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latgaps {

using Int128 = __int128;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Arithmetic left the representable range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// A resource guard (enumeration size limit) was exceeded.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

inline Int128 checked_add(Int128 x, Int128 y) {
    Int128 r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("int128 addition overflow");
    return r;
}

inline Int128 checked_sub(Int128 x, Int128 y) {
    Int128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("int128 subtraction overflow");
    return r;
}

inline Int128 checked_mul(Int128 x, Int128 y) {
    Int128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("int128 multiplication overflow");
    return r;
}

inline Int128 checked_neg(Int128 x) { return checked_sub(0, x); }

inline std::string to_string(Int128 value) {
    if (value == 0) return "0";
    const bool neg = value < 0;
    // Peel digits from the absolute value; works for INT128_MIN as well
    // because the unsigned image keeps the magnitude.
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(value)
                                : static_cast<unsigned __int128>(value);
    std::string digits;
    while (mag > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

inline BigInt to_bigint(Int128 value) {
    return BigInt(value);
}

/// Narrow a big integer to Int128, throwing instead of truncating.
inline Int128 to_int128(const BigInt& value) {
    static const BigInt hi = (BigInt(1) << 127) - 1;
    if (value < -hi || value > hi) throw OverflowError("value does not fit in 128 bits");
    const bool neg = value < 0;
    BigInt mag = neg ? -value : value;
    unsigned __int128 acc = 0;
    for (int shift = 96; shift >= 0; shift -= 32) {
        acc = (acc << 32) | static_cast<std::uint32_t>((mag >> shift) & 0xffffffffu);
    }
    Int128 out = static_cast<Int128>(acc);
    return neg ? -out : out;
}

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision fraction, always in lowest terms with a
// positive denominator. Equality is equality of the canonical representation.
// ---------------------------------------------------------------------------
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(const BigInt& n) : v_(n) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {  // the backend insists on a positive denominator
            num = -num;
            den = -den;
        }
        v_ = BigRat(num, den);
    }
    explicit Rational(BigRat v) : v_(std::move(v)) {}

    static Rational from_int128(Int128 value) { return Rational(to_bigint(value)); }

    /// Exact conversion of a finite double (every finite double is dyadic).
    static Rational from_double(double value) {
        if (!std::isfinite(value)) throw std::domain_error("non-finite value has no rational form");
        if (value == 0.0) return Rational();
        int exp = 0;
        const double frac = std::frexp(value, &exp);
        const auto mant = static_cast<long long>(std::ldexp(frac, 53));  // exact: |mant| < 2^53
        const int e2 = exp - 53;
        BigInt num(mant);
        BigInt den(1);
        if (e2 >= 0) num <<= e2; else den <<= -e2;
        return Rational(num, den);
    }

    /// Parse "3", "-4/9" or "1.96" exactly.
    static Rational parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_positive() const { return v_ > 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return den() == 1; }

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(BigRat(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(BigRat(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(BigRat(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.v_ == 0) throw std::domain_error("rational division by zero");
        return Rational(BigRat(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return is_negative() ? -*this : *this; }
    Rational reciprocal() const {
        if (v_ == 0) throw std::domain_error("reciprocal of zero");
        return Rational(den(), num());
    }
    Rational squared() const { return *this * *this; }

    double to_double() const { return v_.convert_to<double>(); }

    std::string to_string() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

private:
    BigRat v_;
};

namespace detail {

// cpp_int's string constructor honors 0x/0 prefixes; force base 10 here.
inline BigInt parse_decimal_int(std::string_view text) {
    auto bad = [&] { return std::domain_error("bad integer: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    bool neg = false;
    if (text.front() == '+' || text.front() == '-') {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) throw bad();
    BigInt value(0);
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw bad();
        value = value * 10 + (ch - '0');
    }
    return neg ? BigInt(-value) : value;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return std::domain_error("cannot parse rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const BigInt n = detail::parse_decimal_int(text.substr(0, slash));
        const BigInt d = detail::parse_decimal_int(text.substr(slash + 1));
        if (d == 0) throw bad();
        return Rational(n, d);
    }
    std::string_view body = text;
    bool neg = false;
    if (body.front() == '+' || body.front() == '-') {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw bad();
    BigInt num(0);
    std::size_t frac_len = 0;
    std::size_t digit_count = 0;
    bool seen_dot = false;
    for (char ch : body) {
        if (ch == '.') {
            if (seen_dot) throw bad();
            seen_dot = true;
        } else if (ch >= '0' && ch <= '9') {
            num = num * 10 + (ch - '0');
            ++digit_count;
            if (seen_dot) ++frac_len;
        } else {
            throw bad();
        }
    }
    if (digit_count == 0) throw bad();
    if (neg) num = -num;
    BigInt den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// Rational point of the plane.
struct Vec2Q {
    Rational x, y;

    bool operator==(const Vec2Q& o) const { return x == o.x && y == o.y; }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    Vec2Q operator+(const Vec2Q& o) const { return {x + o.x, y + o.y}; }
    Vec2Q operator-(const Vec2Q& o) const { return {x - o.x, y - o.y}; }
    Vec2Q operator-() const { return {-x, -y}; }
    Rational norm_sq() const { return x * x + y * y; }
};

inline Vec2Q operator*(const Rational& s, const Vec2Q& v) { return {s * v.x, s * v.y}; }

/// Double-precision point of the plane.
struct Vec2R {
    double x = 0.0, y = 0.0;

    bool operator==(const Vec2R& o) const { return x == o.x && y == o.y; }
    Vec2R operator+(const Vec2R& o) const { return {x + o.x, y + o.y}; }
    Vec2R operator-(const Vec2R& o) const { return {x - o.x, y - o.y}; }
    Vec2R operator-() const { return {-x, -y}; }
    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2R operator*(double s, const Vec2R& v) { return {s * v.x, s * v.y}; }

inline Vec2R to_vec2r(const Vec2Q& v) { return {v.x.to_double(), v.y.to_double()}; }

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Integer 2x2 matrix, row-major (a b; c d), checked 128-bit entries.
struct Mat2Z {
    Int128 a = 0, b = 0, c = 0, d = 0;

    static Mat2Z identity() { return {1, 0, 0, 1}; }

    bool operator==(const Mat2Z& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

    Mat2Z operator*(const Mat2Z& o) const {
        return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)),
                checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
                checked_add(checked_mul(c, o.a), checked_mul(d, o.c)),
                checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
    }

    Mat2Z operator-() const { return {checked_neg(a), checked_neg(b), checked_neg(c), checked_neg(d)}; }

    Mat2Z transpose() const { return {a, c, b, d}; }

    Int128 det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
};

inline Int128 frobenius_norm_sq(const Mat2Z& m) {
    return checked_add(checked_add(checked_mul(m.a, m.a), checked_mul(m.b, m.b)),
                       checked_add(checked_mul(m.c, m.c), checked_mul(m.d, m.d)));
}

/// Lexicographic order on (a, b, c, d); used for deterministic streams.
inline bool lex_less(const Mat2Z& x, const Mat2Z& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
}

/// Rational 2x2 matrix.
struct Mat2Q {
    Rational a, b, c, d;

    static Mat2Q identity() { return {1, 0, 0, 1}; }

    bool operator==(const Mat2Q& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

    Mat2Q operator*(const Mat2Q& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Rational det() const { return a * d - b * c; }
};

inline Mat2Q to_mat2q(const Mat2Z& m) {
    return {Rational::from_int128(m.a), Rational::from_int128(m.b),
            Rational::from_int128(m.c), Rational::from_int128(m.d)};
}

inline Vec2Q apply(const Mat2Z& g, const Vec2Q& v) {
    const Rational a = Rational::from_int128(g.a), b = Rational::from_int128(g.b);
    const Rational c = Rational::from_int128(g.c), d = Rational::from_int128(g.d);
    return {a * v.x + b * v.y, c * v.x + d * v.y};
}

inline Vec2R apply(const Mat2Z& g, const Vec2R& v) {
    return {static_cast<double>(g.a) * v.x + static_cast<double>(g.b) * v.y,
            static_cast<double>(g.c) * v.x + static_cast<double>(g.d) * v.y};
}

inline Vec2Q apply(const Mat2Q& g, const Vec2Q& v) {
    return {g.a * v.x + g.b * v.y, g.c * v.x + g.d * v.y};
}

/// Element of SL(2,Z): determinant checked to be exactly 1 at construction.
class UnimodularMatrix {
public:
    explicit UnimodularMatrix(Mat2Z m) : m_(m) {
        if (m_.det() != 1) {
            throw std::domain_error("matrix is not unimodular: det = " + latgaps::to_string(m_.det()));
        }
    }
    UnimodularMatrix(Int128 a, Int128 b, Int128 c, Int128 d) : UnimodularMatrix(Mat2Z{a, b, c, d}) {}

    static UnimodularMatrix identity() { return UnimodularMatrix(Mat2Z::identity()); }

    const Mat2Z& mat() const { return m_; }

    UnimodularMatrix inverse() const {
        return UnimodularMatrix(Mat2Z{m_.d, checked_neg(m_.b), checked_neg(m_.c), m_.a});
    }

    UnimodularMatrix operator*(const UnimodularMatrix& o) const {
        return UnimodularMatrix(m_ * o.m_);
    }

    UnimodularMatrix operator-() const { return UnimodularMatrix(-m_); }

    bool operator==(const UnimodularMatrix& o) const { return m_ == o.m_; }

private:
    Mat2Z m_;
};

inline Int128 frobenius_norm_sq(const UnimodularMatrix& g) { return frobenius_norm_sq(g.mat()); }

inline Vec2Q apply(const UnimodularMatrix& g, const Vec2Q& v) { return apply(g.mat(), v); }
inline Vec2R apply(const UnimodularMatrix& g, const Vec2R& v) { return apply(g.mat(), v); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Mat2Z& m) {
    return os << "(" << to_string(m.a) << "," << to_string(m.b) << ";" << to_string(m.c) << ","
              << to_string(m.d) << ")";
}

inline std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& g) { return os << g.mat(); }

inline std::ostream& operator<<(std::ostream& os, const Vec2Q& v) {
    return os << "(" << v.x << ", " << v.y << ")";
}

}  // namespace latgaps
