#ifndef PIRJOINT_RATIONAL_HPP
#define PIRJOINT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "pirjoint/errors.hpp"

namespace pirjoint {

/// Exact reduced fraction. Every rate/capacity comparison in this project is
/// required to be exact, so floating point is banned from these paths.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(checked(static_cast<__int128>(num_) * o.den_ +
                                static_cast<__int128>(o.num_) * den_),
                        checked(static_cast<__int128>(den_) * o.den_));
    }
    Rational operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }
    Rational operator*(const Rational& o) const {
        return Rational(checked(static_cast<__int128>(num_) * o.num_),
                        checked(static_cast<__int128>(den_) * o.den_));
    }
    Rational inverse() const {
        if (num_ == 0) throw DivisionByZeroError("Rational: inverse of zero");
        return Rational(den_, num_);
    }
    Rational operator/(const Rational& o) const { return *this * o.inverse(); }

    Rational pow(unsigned e) const {
        Rational r(1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw DivisionByZeroError("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw CapacityError("Rational: overflow");
        return static_cast<std::int64_t>(v);
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace pirjoint

#endif
