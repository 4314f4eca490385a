#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lowaccess {

/// Exact rational number with canonical representation (gcd-reduced,
/// positive denominator). Arithmetic goes through 128-bit intermediates;
/// a result that does not fit 64 bits throws std::overflow_error.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT implicit
    Rational(long long numerator, long long denominator);

    /// Accepts "-3", "5/4" and terminating decimals like "0.25".
    static Rational parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

  private:
    long long num_;
    long long den_;

    static Rational from_i128(__int128 num, __int128 den);
};

}  // namespace lowaccess
