#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace crr {

// Classical weight written in the simple-root basis: coords[i] is the
// coefficient of alpha_{i+1}.  All weights of one alphabet share the length.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    bool isZero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }

    // <rho, .> with <rho, alpha_i> = 1: the sum of the root coordinates.
    int rhoPairing() const { return std::accumulate(coords.begin(), coords.end(), 0); }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r = a;
        for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (int& c : r.coords) c = -c;
        return r;
    }
    auto operator<=>(const Weight&) const = default;

    // "(1,1)" -- compact display used in tables and reports.
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

}  // namespace crr
