#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "workbench/errors.hpp"

namespace wb {

// Exact rational charge. Every constant in the discharging rules lies in
// (1/24)*Z (denominators 1, 2, 3, 4, 8), so a single 64-bit count of
// twenty-fourths is exact; no floating point enters the module.
class Charge {
  public:
    constexpr Charge() = default;
    constexpr Charge(std::int64_t whole) : units_(whole * 24) {}  // NOLINT: implicit by design

    static constexpr Charge fraction(std::int64_t num, std::int64_t den) {
        if (den == 0 || 24 % den != 0) throw InvariantError("charge denominator must divide 24");
        return Charge::from_units(num * (24 / den));
    }

    static constexpr Charge from_units(std::int64_t units) {
        Charge c;
        c.units_ = units;
        return c;
    }

    constexpr std::int64_t units() const { return units_; }

    constexpr Charge operator+(Charge o) const { return from_units(units_ + o.units_); }
    constexpr Charge operator-(Charge o) const { return from_units(units_ - o.units_); }
    constexpr Charge operator-() const { return from_units(-units_); }
    Charge& operator+=(Charge o) {
        units_ += o.units_;
        return *this;
    }
    Charge& operator-=(Charge o) {
        units_ -= o.units_;
        return *this;
    }
    constexpr Charge operator*(std::int64_t k) const { return from_units(units_ * k); }

    constexpr auto operator<=>(const Charge&) const = default;

    // Reduced fraction, "p" when integral, otherwise "p/q".
    std::string str() const {
        std::int64_t num = units_;
        std::int64_t den = 24;
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g == 0) return "0";
        num /= g;
        den /= g;
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    std::int64_t units_ = 0;
};

}  // namespace wb
