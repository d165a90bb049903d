#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal.hpp"
#include "genfun.hpp"
#include "paths.hpp"
#include "qseries.hpp"
#include "rules.hpp"
#include "specialization.hpp"

namespace crr {

// One verification case: a rule set, a degree rule, and (in assert mode)
// the closed-form product the generating function must match.
struct IdentityCase {
    enum class Mode { Assert, Explore };

    std::string name;
    std::string summary;
    AlphabetPtr alphabet;
    std::optional<CrystalGraph> graph;  // present when derived from a crystal
    EnergyMatrix energy;
    std::vector<ForbiddenPattern> extras;
    DifferenceRuleSet rules;
    Specialization spec;
    std::optional<ProductSide> product;
    Mode mode = Mode::Assert;
    int defaultOrder = 20;
    std::vector<std::string> notes;

    bool assertMode() const { return mode == Mode::Assert; }
};

// Names in catalog order.
std::vector<std::string> catalogNames();
bool catalogHas(const std::string& name);
// Build a fresh case; graph-derived energies are solved on the spot.
IdentityCase makeCase(const std::string& name);

// The raw crystals (weights solved, order derived from the energy matrix).
CrystalGraph makeCrystalA2();
CrystalGraph makeCrystalA3();

// Assemble a crystal graph from labeled arrows: weights propagated from the
// ground letter (theta defaults to the all-ones highest root), energy solved,
// color order derived from the zero entries of the energy matrix.
CrystalGraph buildCrystalGraph(const std::vector<std::string>& labels,
                               const std::vector<std::tuple<std::string, int, std::string>>& arrows,
                               const std::string& ground, int rank,
                               const std::optional<Weight>& theta = std::nullopt);

}  // namespace crr
