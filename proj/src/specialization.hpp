#pragma once

#include <vector>

#include "alphabet.hpp"
#include "errors.hpp"
#include "half_int.hpp"

namespace crr {

// Degree map |(-j)_beta| = m*j - shift(beta).  Shifts may be half-integers,
// so everything is kept doubled.  e^{-delta} |-> q^m fixes the box weight m.
struct Specialization {
    AlphabetPtr alphabet;
    int m = 1;
    std::vector<HalfInt> shift;  // per color id

    Specialization() = default;
    Specialization(AlphabetPtr a, int m_, std::vector<HalfInt> shifts)
        : alphabet(std::move(a)), m(m_), shift(std::move(shifts)) {
        if (m <= 0) throw DomainError("specialization needs m >= 1");
        if (static_cast<int>(shift.size()) != alphabet->size())
            throw DomainError("specialization shift table size mismatch");
    }

    // Doubled degree of the part (-magnitude)_color; magnitude >= 1.
    int degree2(int magnitude, int color) const {
        return 2 * m * magnitude - shift[color].twice;
    }

    // Every color must already have positive degree at magnitude 1; degrees
    // then grow with the magnitude, which keeps all counts finite.
    bool allDegreesPositive() const {
        for (int c = 0; c < alphabet->size(); ++c)
            if (degree2(1, c) <= 0) return false;
        return true;
    }

    // Grading by the plain box count ||pi||: m = 1, no shifts.
    static Specialization boxGrading(const AlphabetPtr& a) {
        return Specialization(a, 1, std::vector<HalfInt>(a->size()));
    }

    // shift(beta) = <rho, wt beta>, the principal degree rule.
    static Specialization principal(const AlphabetPtr& a, int m) {
        std::vector<HalfInt> shifts;
        shifts.reserve(a->size());
        for (const Color& c : a->colors()) shifts.push_back(HalfInt::whole(c.weight.rhoPairing()));
        return Specialization(a, m, std::move(shifts));
    }
};

}  // namespace crr
