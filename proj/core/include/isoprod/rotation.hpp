#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace isoprod {

/// Exact rational in [0,1) standing for the root of unity e^{2 pi i num/den}.
/// Character values and eigenvalue scalars are always Rotations, so the test
/// "equals 1" is integer arithmetic, never floating point.
class Rotation {
  public:
    Rotation() = default;

    Rotation(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::invalid_argument("rotation number with zero denominator");
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        num_ %= den_;
        if (num_ < 0)
            num_ += den_;
        long long g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    /// True iff the scalar is 1 (rotation 0).
    bool is_zero() const { return num_ == 0; }

    Rotation operator+(const Rotation& o) const {
        long long d = std::lcm(den_, o.den_);
        return Rotation(num_ * (d / den_) + o.num_ * (d / o.den_), d);
    }

    /// Complex conjugate scalar.
    Rotation operator-() const { return Rotation(-num_, den_); }

    friend bool operator==(const Rotation&, const Rotation&) = default;

    std::strong_ordering operator<=>(const Rotation& o) const {
        return num_ * o.den_ <=> o.num_ * den_;
    }

    std::string str() const {
        if (num_ == 0)
            return "0";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace isoprod
