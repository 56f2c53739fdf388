#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalars: canonical big rationals and the ordered quadratic
 *        extension Q(sqrt m).
 *
 * Every bound in the library is either rational or lives in a single real
 * quadratic field Q(sqrt m) with m square-free. Comparisons in Q(sqrt m) are
 * decided by sign analysis on integers; floating point only appears in
 * to_decimal(), which is a display helper.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace curvebound {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of the square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);

/// Split n >= 0 into square * core with core square-free. Returns {root, core}
/// where n = root^2 * core. For n = 0 returns {0, 0}.
std::pair<BigInt, BigInt> square_free_split(const BigInt& n);

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    template <std::integral T>
    Rational(T v) : num_(v), den_(1) {}                   // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : num_(v), den_(1) {}       // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    int sign() const noexcept { return num_.sign(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational abs() const { return Rational(num_.sign() < 0 ? BigInt(-num_) : num_, den_, canonical_tag{}); }
    Rational inverse() const;
    Rational pow(unsigned exponent) const;
    BigInt floor() const;
    BigInt ceil() const;

    /// "p/q", or "p" when q = 1.
    std::string str() const;
    /// Rounded decimal with `digits` digits after the point (display only).
    std::string to_decimal(int digits = 6) const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(BigInt(-num_), den_, canonical_tag{}); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct canonical_tag {};
    Rational(BigInt num, BigInt den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    BigInt num_;
    BigInt den_;  // > 0, coprime to num_
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/**
 * a + b * sqrt(m) with m square-free and m >= 2, or a pure rational
 * (b = 0, m = 0). Constructors reduce the radicand, so two values with the
 * same field always carry the same m.
 */
class QuadNumber {
public:
    QuadNumber() = default;
    QuadNumber(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    QuadNumber(T a) : a_(a) {}                // NOLINT(google-explicit-constructor)
    QuadNumber(const BigInt& a) : a_(a) {}    // NOLINT(google-explicit-constructor)
    QuadNumber(Rational a, Rational b, const BigInt& m);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const BigInt& radicand() const noexcept { return m_; }
    bool is_rational() const noexcept { return b_.is_zero(); }

    /// Throws InvalidArgument unless is_rational().
    const Rational& as_rational() const;

    int sign() const;
    QuadNumber conjugate() const { return QuadNumber(a_, -b_, m_, reduced_tag{}); }
    QuadNumber inverse() const;

    BigInt floor() const;
    BigInt ceil() const;

    /// "a", "b*sqrt(m)" or "a + b*sqrt(m)" with rationals in p/q form.
    std::string str() const;
    std::string to_decimal(int digits = 6) const;

    QuadNumber& operator+=(const QuadNumber& o);
    QuadNumber& operator-=(const QuadNumber& o);
    QuadNumber& operator*=(const QuadNumber& o);
    QuadNumber& operator/=(const QuadNumber& o);

    friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
    friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
    friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
    friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }
    QuadNumber operator-() const { return QuadNumber(-a_, -b_, m_, reduced_tag{}); }

    friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
    }

private:
    struct reduced_tag {};
    QuadNumber(Rational a, Rational b, BigInt m, reduced_tag);

    Rational a_;
    Rational b_;
    BigInt m_ = 0;
};

/// Common radicand of two operands; throws IncompatibleRadicand.
BigInt common_radicand(const QuadNumber& x, const QuadNumber& y);

/// Exact three-way comparison; throws IncompatibleRadicand.
std::strong_ordering quad_cmp(const QuadNumber& x, const QuadNumber& y);

inline QuadNumber quad_add(const QuadNumber& x, const QuadNumber& y) { return x + y; }
inline QuadNumber quad_mul(const QuadNumber& x, const QuadNumber& y) { return x * y; }
inline QuadNumber quad_neg(const QuadNumber& x) { return -x; }

inline bool operator<(const QuadNumber& x, const QuadNumber& y) { return quad_cmp(x, y) < 0; }
inline bool operator<=(const QuadNumber& x, const QuadNumber& y) { return quad_cmp(x, y) <= 0; }
inline bool operator>(const QuadNumber& x, const QuadNumber& y) { return quad_cmp(x, y) > 0; }
inline bool operator>=(const QuadNumber& x, const QuadNumber& y) { return quad_cmp(x, y) >= 0; }

QuadNumber min(const QuadNumber& x, const QuadNumber& y);
QuadNumber max(const QuadNumber& x, const QuadNumber& y);

/// Exact sqrt(q) for rational q >= 0, with minimal integer radicand.
/// sqrt(p/s) is represented as (1/s) * sqrt(p*s). Throws NegativeRadicand.
QuadNumber sqrt_rational(const Rational& q);

}  // namespace curvebound
