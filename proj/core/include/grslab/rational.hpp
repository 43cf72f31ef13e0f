#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "grslab/errors.hpp"

namespace grslab {

// Exact rational with 64-bit parts; comparisons cross-multiply in 128 bits.
// The density m is always kept as a rational so floor counts like
// floor((m-1)*n) are exact.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw ParameterError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    static Rational from_int(std::int64_t v) { return Rational(v, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw MathError("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    int cmp(const Rational& o) const {
        __int128 lhs = static_cast<__int128>(num_) * o.den_;
        __int128 rhs = static_cast<__int128>(o.num_) * den_;
        if (lhs < rhs) return -1;
        if (lhs > rhs) return 1;
        return 0;
    }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  private:
    std::int64_t num_, den_;
};

// Parses "num/den" or a bare integer.
Rational parse_rational(const std::string& s);

}  // namespace grslab
