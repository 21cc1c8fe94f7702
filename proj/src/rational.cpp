#include "ramsey/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ramsey {

namespace {

long long narrow(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
        throw std::overflow_error(std::string("rational overflow in ") + what);
    }
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    long long g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    if (g == 0) g = 1;
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    // Reduce in 128 bits before narrowing.
    auto gcd128 = [](__int128 x, __int128 y) {
        if (x < 0) x = -x;
        while (y != 0) {
            __int128 t = x % y;
            x = y;
            y = t;
        }
        return x;
    };
    __int128 g = gcd128(n, d);
    if (g == 0) g = 1;
    return Rational(narrow(n / g, "+"), narrow(d / g, "+"));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
    __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
    return Rational(narrow(n, "*"), narrow(d, "*"));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return a * b.reciprocal();
}

long long Rational::ceil() const {
    long long q = num_ / den_;
    if (num_ > 0 && num_ % den_ != 0) ++q;
    return q;
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string(int digits) const {
    // Long division; display only, never used in comparisons.
    std::ostringstream os;
    long long n = num_;
    if (n < 0) {
        os << '-';
        n = -n;
    }
    os << n / den_;
    long long rem = n % den_;
    if (rem != 0 && digits > 0) {
        os << '.';
        for (int i = 0; i < digits && rem != 0; ++i) {
            rem *= 10;
            os << rem / den_;
            rem %= den_;
        }
    }
    return os.str();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> long long {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw std::invalid_argument("malformed rational: " + std::string(s));
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    long long p = parse_int(text.substr(0, slash));
    long long q = parse_int(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational with zero denominator: " + std::string(text));
    return Rational(p, q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace ramsey
