#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ramsey {

// Exact rational arithmetic on 64-bit integers, always kept in lowest terms
// with a positive denominator. All density and threshold comparisons in this
// project go through this type; nothing numeric-critical touches floating
// point. Overflow in intermediate products is detected via 128-bit widening
// and reported by throwing, never wrapped.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long numerator, long long denominator);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational reciprocal() const { return Rational(den_, num_); }

    // Smallest integer >= this value.
    long long ceil() const;

    // Canonical form "p/q" (denominator always printed, lowest terms).
    std::string to_string() const;
    // Advisory decimal rendering, for display only.
    std::string to_decimal_string(int digits = 6) const;

    // Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
    // malformed input or a zero denominator.
    static Rational parse(std::string_view text);

private:
    long long num_;
    long long den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ramsey
