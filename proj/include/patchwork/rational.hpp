#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace patchwork {

// Exact rational with 64-bit parts; intermediate products use 128 bits.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }
    double to_double() const { return (double)num_ / (double)den_; }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // accepts "p", "-p", "p/q"; throws std::invalid_argument
    static Rational parse(const std::string& s);

private:
    static Rational from128(__int128 n, __int128 d);
    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace patchwork
