#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace collective {

/// Exact half-integer (angular momentum quantum numbers j and m), stored as
/// twice its value.
class HalfInt {
  public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

    constexpr auto operator<=>(const HalfInt &) const = default;

    /// "3/2", "-1/2", "4", "0".
    std::string str() const {
        if (is_integer())
            return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

  private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

} // namespace collective
