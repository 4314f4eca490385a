#include "lowaccess/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "lowaccess/errors.hpp"

namespace lowaccess {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const __int128 g = num == 0 ? den : gcd128(num, den);
    num /= g;
    den /= g;
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (num < lo || num > hi || den > hi) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
}

Rational::Rational(long long numerator, long long denominator) {
    *this = from_i128(numerator, denominator);
}

Rational Rational::operator-() const { return from_i128(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    *this = from_i128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    *this = from_i128(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division of rational by zero");
    *this = from_i128(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty number literal");
    const std::string s(text);
    try {
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
            std::size_t na = 0, nb = 0;
            const long long num = std::stoll(s.substr(0, slash), &na);
            const long long den = std::stoll(s.substr(slash + 1), &nb);
            if (na != slash || nb != s.size() - slash - 1) {
                throw ParseError("malformed fraction: " + s);
            }
            if (den == 0) throw ParseError("zero denominator: " + s);
            return Rational(num, den);
        }
        const auto dot = s.find('.');
        if (dot != std::string::npos) {
            const std::string frac = s.substr(dot + 1);
            std::size_t na = 0, nb = 0;
            long long whole = std::stoll(s.substr(0, dot), &na);
            const long long digits = frac.empty() ? 0 : std::stoll(frac, &nb);
            if (na != dot || nb != frac.size() || digits < 0) {
                throw ParseError("malformed decimal: " + s);
            }
            long long scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            const bool negative = s[0] == '-';
            if (negative) whole = -whole;
            Rational r = Rational(whole * scale + digits, scale);
            return negative ? -r : r;
        }
        std::size_t n = 0;
        const long long value = std::stoll(s, &n);
        if (n != s.size()) throw ParseError("malformed integer: " + s);
        return Rational(value);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed number literal: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("number literal out of range: " + s);
    }
}

}  // namespace lowaccess
