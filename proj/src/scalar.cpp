#include "curvebound/scalar.hpp"

#include <cctype>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "curvebound/error.hpp"

namespace curvebound {

namespace {

using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;

Decimal to_dec(const Rational& q) {
    return Decimal(q.num()) / Decimal(q.den());
}

std::string format_decimal(const Decimal& v, int digits) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(digits);
    out << v;
    std::string s = out.str();
    // "-0.000000" reads badly; normalise to "0.000000".
    if (!s.empty() && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::IncompatibleRadicand: return "IncompatibleRadicand";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::EvidenceInconsistentWithDegree: return "EvidenceInconsistentWithDegree";
    case ErrorCode::InconsistentEvidence: return "InconsistentEvidence";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::NonpositiveGamma: return "NonpositiveGamma";
    case ErrorCode::NonpositiveEta: return "NonpositiveEta";
    case ErrorCode::NoEvidence: return "NoEvidence";
    case ErrorCode::NullCorrelationExcluded: return "NullCorrelationExcluded";
    case ErrorCode::LambdaNegative: return "LambdaNegative";
    case ErrorCode::UnboundedBox: return "UnboundedBox";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Integer helpers

BigInt isqrt(const BigInt& n) {
    if (n.sign() < 0) {
        throw Error(ErrorCode::NegativeRadicand, "isqrt of negative integer");
    }
    return boost::multiprecision::sqrt(n);
}

std::pair<BigInt, BigInt> square_free_split(const BigInt& n) {
    if (n.sign() < 0) {
        throw Error(ErrorCode::NegativeRadicand, "square-free split of negative integer");
    }
    if (n.is_zero()) {
        return {BigInt(0), BigInt(0)};
    }
    BigInt root = 1;
    BigInt small_core = 1;
    BigInt rest = n;
    // Strip every prime p with p^3 <= rest. The unfactored remainder then has
    // at most two prime factors, both above the cube root, so it is
    // square-free unless it is a perfect square.
    for (BigInt p = 2; p * p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            root *= p;
        }
        if (rest % p == 0) {
            rest /= p;
            small_core *= p;
        }
    }
    BigInt s = isqrt(rest);
    if (rest > 1 && s * s == rest) {
        root *= s;
        rest = 1;
    }
    return {root, small_core * rest};
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    canonicalize();
}

void Rational::canonicalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s, bool allow_sign) -> BigInt {
        s = trim(s);
        std::size_t start = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
        if (s.size() == start) {
            throw Error(ErrorCode::ParseError, "expected integer in rational '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                throw Error(ErrorCode::ParseError, "invalid character in rational '" + std::string(text) + "'");
            }
        }
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return BigInt(digits);
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, true));
    }
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den.is_zero()) {
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash), true), den);
}

Rational Rational::inverse() const {
    if (num_.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    return Rational(den_, num_);
}

Rational Rational::pow(unsigned exponent) const {
    return Rational(boost::multiprecision::pow(num_, exponent), boost::multiprecision::pow(den_, exponent),
                    canonical_tag{});
}

BigInt Rational::floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_.sign() < 0 && q * den_ != num_) {
        q -= 1;
    }
    return q;
}

BigInt Rational::ceil() const {
    BigInt q = num_ / den_;
    if (num_.sign() > 0 && q * den_ != num_) {
        q += 1;
    }
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal(int digits) const {
    return format_decimal(to_dec(*this), digits);
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by zero rational");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------
// QuadNumber

QuadNumber::QuadNumber(Rational a, Rational b, const BigInt& m) : a_(std::move(a)), b_(std::move(b)) {
    if (m.sign() < 0) {
        throw Error(ErrorCode::NegativeRadicand, "radicand " + m.str() + " is negative");
    }
    auto [root, core] = square_free_split(m);
    if (b_.is_zero() || core.is_zero()) {
        b_ = Rational();
        m_ = 0;
        return;
    }
    b_ *= Rational(root);
    if (core == 1) {
        a_ += b_;
        b_ = Rational();
        m_ = 0;
        return;
    }
    m_ = core;
}

QuadNumber::QuadNumber(Rational a, Rational b, BigInt m, reduced_tag)
    : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
    if (b_.is_zero()) {
        m_ = 0;
    }
}

const Rational& QuadNumber::as_rational() const {
    if (!is_rational()) {
        throw Error(ErrorCode::InvalidArgument, "value " + str() + " is irrational");
    }
    return a_;
}

int QuadNumber::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: |a| vs |b| sqrt(m), compared through squares.
    Rational a2 = a_ * a_;
    Rational b2m = b_ * b_ * Rational(m_);
    auto c = a2 <=> b2m;
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
}

QuadNumber QuadNumber::inverse() const {
    // 1/(a + b sqrt m) = (a - b sqrt m) / (a^2 - b^2 m); the norm is nonzero
    // for nonzero values because m is not a square.
    Rational norm = a_ * a_ - b_ * b_ * Rational(m_);
    if (norm.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    return QuadNumber(a_ / norm, -b_ / norm, m_, reduced_tag{});
}

BigInt QuadNumber::floor() const {
    if (is_rational()) {
        return a_.floor();
    }
    // Estimate with an integer square root, then correct by exact comparison.
    Rational b2m = b_ * b_ * Rational(m_);
    BigInt root = isqrt(b2m.num() * b2m.den());
    Rational mag(root, b2m.den());  // <= |b| sqrt(m) < mag + 1/den
    Rational approx = a_ + (b_.sign() > 0 ? mag : -mag);
    BigInt n = approx.floor();
    while (quad_cmp(*this, QuadNumber(n)) < 0) {
        n -= 1;
    }
    while (quad_cmp(*this, QuadNumber(BigInt(n + 1))) >= 0) {
        n += 1;
    }
    return n;
}

BigInt QuadNumber::ceil() const {
    BigInt f = floor();
    if (quad_cmp(*this, QuadNumber(f)) == 0) {
        return f;
    }
    return f + 1;
}

std::string QuadNumber::str() const {
    if (is_rational()) {
        return a_.str();
    }
    std::string radical;
    if (b_ == Rational(1)) {
        radical = "sqrt(" + m_.str() + ")";
    } else if (b_ == Rational(-1)) {
        radical = "-sqrt(" + m_.str() + ")";
    } else {
        radical = b_.str() + "*sqrt(" + m_.str() + ")";
    }
    if (a_.is_zero()) {
        return radical;
    }
    if (b_.sign() < 0) {
        std::string pos = (-b_ == Rational(1)) ? "sqrt(" + m_.str() + ")" : (-b_).str() + "*sqrt(" + m_.str() + ")";
        return a_.str() + " - " + pos;
    }
    return a_.str() + " + " + radical;
}

std::string QuadNumber::to_decimal(int digits) const {
    Decimal v = to_dec(a_);
    if (!is_rational()) {
        v += to_dec(b_) * boost::multiprecision::sqrt(Decimal(m_));
    }
    return format_decimal(v, digits);
}

BigInt common_radicand(const QuadNumber& x, const QuadNumber& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand()) {
        throw Error(ErrorCode::IncompatibleRadicand,
                    "sqrt(" + x.radicand().str() + ") and sqrt(" + y.radicand().str() + ") in one expression");
    }
    return x.radicand();
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
    BigInt m = common_radicand(*this, o);
    *this = QuadNumber(a_ + o.a_, b_ + o.b_, m, reduced_tag{});
    return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
    BigInt m = common_radicand(*this, o);
    *this = QuadNumber(a_ - o.a_, b_ - o.b_, m, reduced_tag{});
    return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
    BigInt m = common_radicand(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(m);
    Rational b = a_ * o.b_ + b_ * o.a_;
    *this = QuadNumber(std::move(a), std::move(b), m, reduced_tag{});
    return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o) {
    common_radicand(*this, o);
    return *this *= o.inverse();
}

std::strong_ordering quad_cmp(const QuadNumber& x, const QuadNumber& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadNumber min(const QuadNumber& x, const QuadNumber& y) { return quad_cmp(y, x) < 0 ? y : x; }
QuadNumber max(const QuadNumber& x, const QuadNumber& y) { return quad_cmp(x, y) < 0 ? y : x; }

QuadNumber sqrt_rational(const Rational& q) {
    if (q.sign() < 0) {
        throw Error(ErrorCode::NegativeRadicand, "sqrt of negative rational " + q.str());
    }
    return QuadNumber(Rational(), Rational(BigInt(1), q.den()), q.num() * q.den());
}

}  // namespace curvebound
