#pragma once

#include <functional>

#include "qseries.hpp"
#include "rules.hpp"
#include "specialization.hpp"

namespace crr {

// Generating function of the partition ideal: coefficient of q^{n} is the
// number of members of P_D with specialized degree n, through order N
// (integer part of the exponent grid; half-integer terms up to N included).
// Layered dynamic programming over part magnitudes with a two-consecutive-
// value window; exact.  Errors when some color has nonpositive degree.
QSeries genFunction(const DifferenceRuleSet& d, const Specialization& s, int orderN);

// Independent oracle: enumerate every colored partition of degree <= N and
// filter by the containment definition of the D condition.  Exponential;
// desk scale only.
QSeries bruteForceGenFunction(const DifferenceRuleSet& d, const Specialization& s, int orderN);

// Visit every member of P_D with specialized degree <= orderN exactly once.
// The enumeration prunes with the same window logic as genFunction.
void enumerateIdeal(const DifferenceRuleSet& d, const Specialization& s, int orderN,
                    const std::function<void(const ColoredPartition&)>& emit);

// Exact (weight, box count) histogram of P_D through box budget B.
WeightedSeries weightedCharacter(const DifferenceRuleSet& d, int boxBudget);

}  // namespace crr
