#pragma once

#include <compare>
#include <string>

namespace crr {

// Element of (1/2)Z stored as twice its value, so all arithmetic stays exact.
// Degrees and degree shifts live here: the two-color cases use genuine
// half-integer degrees.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int doubled) : twice(doubled) {}
    static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

    constexpr bool isInteger() const { return twice % 2 == 0; }
    constexpr int floor() const { return twice >= 0 ? twice / 2 : (twice - 1) / 2; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend constexpr HalfInt operator*(int k, HalfInt a) { return HalfInt(k * a.twice); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        if (isInteger()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

}  // namespace crr
