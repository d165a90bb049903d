#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal.hpp"
#include "partition.hpp"

namespace crr {

// One cell of a forbidden pattern: instantiated at value i as (i - offset)_color.
struct PatternCell {
    int offset = 0;  // 0 or 1 for everything in the catalog
    int color = 0;
    bool operator==(const PatternCell&) const = default;
};

// Translation-invariant forbidden pattern; the instance at i < 0 is the
// colored partition with one part (i - offset)_color per cell.
struct ForbiddenPattern {
    std::vector<PatternCell> cells;

    int maxOffset() const;
    int minOffset() const;
    // Shift offsets so the minimum is 0; instances are unchanged as a family.
    ForbiddenPattern normalized() const;
    ColoredPartition instance(const AlphabetPtr& alphabet, int i) const;
    bool operator==(const ForbiddenPattern&) const = default;
};

// The difference-condition set D derived from an energy matrix, plus any
// explicit extra patterns.
class DifferenceRuleSet {
public:
    DifferenceRuleSet(EnergyMatrix energy, std::vector<ForbiddenPattern> extras);

    const AlphabetPtr& alphabet() const { return energy_.alphabet(); }
    const EnergyMatrix& energy() const { return energy_; }
    const std::vector<ForbiddenPattern>& patterns() const { return patterns_; }
    const std::vector<ForbiddenPattern>& extras() const { return extras_; }
    bool hasExtras() const { return !extras_.empty(); }

    // True when every pattern keeps per-color cell multiplicity <= 1 within
    // each offset; the windowed enumerator relies on this.
    bool windowSafe() const { return windowSafe_; }

    // Cells grouped by (offset, color) with the required multiplicity;
    // lets the matcher test containment without building instances.
    struct GroupedCell {
        int offset;
        int color;
        int need;
    };
    const std::vector<std::vector<GroupedCell>>& groupedPatterns() const { return grouped_; }

private:
    EnergyMatrix energy_;
    std::vector<ForbiddenPattern> extras_;
    std::vector<ForbiddenPattern> patterns_;
    std::vector<std::vector<GroupedCell>> grouped_;
    bool windowSafe_ = true;
};

// Generators: same-value pair {i_a i_b} when E_ab * E_ba >= 1, consecutive
// pair {(i-1)_a i_b} when E_ab = 2, extras appended verbatim.
DifferenceRuleSet buildD(const EnergyMatrix& energy, std::vector<ForbiddenPattern> extras = {});

// Membership in the partition ideal P_D: no pattern instance is contained.
bool satisfiesD(const ColoredPartition& pi, const DifferenceRuleSet& d);

// Two-part membership; pre: first part <= second in the order on A.
bool pairAdmissible(const ColoredPart& lower, const ColoredPart& upper,
                    const DifferenceRuleSet& d);

struct TripleWitness {
    int alpha, beta, gamma;
};

// E_{ac} <= E_{ab} + E_{bc} for all triples.
bool checkTriangle(const EnergyMatrix& e, std::vector<TripleWitness>* witnesses = nullptr);

// E_{ab} = 0 implies a precedes-or-equals b in the alphabet order.
bool checkOrderCompat(const EnergyMatrix& e, std::vector<std::pair<int, int>>* witnesses = nullptr);

// For i_a <= j_b <= k_c with |i-k| <= 1 and {i_a k_c} forbidden, one of the
// adjacent pairs must be forbidden too.  Exhausted over colors and the
// value layouts (0,0,0), (0,0,1), (0,1,1).
bool checkMiddleInterpolation(const DifferenceRuleSet& d,
                              std::vector<std::string>* witnesses = nullptr);

// E_{sigma(a) sigma(b)} = E_{ab} for a color permutation given as old id -> new id.
bool checkSymmetry(const EnergyMatrix& e, const std::vector<int>& sigma);

// A total order satisfying E_{ab} = 0 => a precedes b, as order ranks
// (rank 0 = smallest); ties broken toward descending numeric labels.
// nullopt when the zero-relation has a cycle.
std::optional<std::vector<int>> deriveOrder(const std::vector<std::vector<int>>& entries,
                                            const std::vector<std::string>& labels);

}  // namespace crr
