#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crystal.hpp"
#include "partition.hpp"
#include "rules.hpp"

namespace crr {

// Element of the ground-state-tailed path space: p(j) for j <= prefix length,
// ground forever after.  Canonical form trims trailing ground letters.
class Path {
public:
    explicit Path(AlphabetPtr alphabet, std::vector<int> prefix = {});

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<int>& prefix() const { return prefix_; }
    // Letter at 1-based position j (ground beyond the prefix).
    int at(int j) const;
    bool isGroundPath() const { return prefix_.empty(); }

    bool operator==(const Path& other) const;
    std::string str() const;  // "5,1"; ground path prints as "-"
    static Path parse(const AlphabetPtr& alphabet, const std::string& text);

private:
    AlphabetPtr alphabet_;
    std::vector<int> prefix_;
};

// -|p| = sum_j j * E_{p(j) p(j+1)}; finite because E is zero at the ground
// pair.  Errors when E_{aa} != 0.
std::int64_t pathDegree(const Path& p, const EnergyMatrix& e);

Weight pathWeight(const Path& p);

// Accumulate energies into exact adjacent differences:
// -i_r = sum_{t>=r} E_{p(t) p(t+1)}, zero parts dropped.
ColoredPartition partD(const Path& p, const EnergyMatrix& e);

// Inverse of (p, Delta) |-> partD(p) (+) Delta on members of P_D.  Greedy:
// the color sequence of pi fixes p, the slack against the exact differences
// fixes Delta; validated by a round trip.
std::pair<Path, PlainPartition> decompose(const ColoredPartition& pi, const EnergyMatrix& e,
                                          const DifferenceRuleSet& d);

// Every path with pathDegree <= budget, each exactly once.  Errors when the
// matrix admits zero-cost escapes to ground (the set would be infinite).
void enumeratePaths(const EnergyMatrix& e, std::int64_t budget,
                    const std::function<void(const Path&)>& emit);
std::vector<Path> enumeratePathsVec(const EnergyMatrix& e, std::int64_t budget);

}  // namespace crr
