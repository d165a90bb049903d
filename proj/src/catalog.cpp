#include "catalog.hpp"

#include <algorithm>

#include "errors.hpp"

namespace crr {

namespace {

struct GraphSpec {
    std::vector<std::string> labels;
    std::vector<std::tuple<std::string, int, std::string>> arrows;
    std::string ground;
    int rank;
};

GraphSpec a2Spec() {
    return {
        {"1", "2", "3", "4", "5", "6", "7", "8", "9"},
        {
            {"1", 1, "2"}, {"3", 1, "6"}, {"6", 1, "7"}, {"8", 1, "9"},
            {"1", 2, "3"}, {"2", 2, "5"}, {"5", 2, "8"}, {"7", 2, "9"},
            {"9", 0, "4"}, {"4", 0, "1"}, {"8", 0, "3"}, {"7", 0, "2"},
        },
        "4",
        2,
    };
}

GraphSpec a3Spec() {
    return {
        {"14", "24", "34", "44", "13", "23", "33", "43", "12", "22", "32", "42", "11", "21",
         "31", "41"},
        {
            {"14", 1, "24"}, {"24", 2, "34"}, {"34", 3, "44"},
            {"14", 3, "13"}, {"24", 3, "23"}, {"44", 3, "43"},
            {"13", 1, "23"}, {"23", 2, "33"},
            {"13", 2, "12"}, {"33", 2, "32"}, {"43", 2, "42"},
            {"12", 1, "22"}, {"32", 3, "42"},
            {"22", 1, "21"}, {"32", 1, "31"}, {"42", 1, "41"},
            {"21", 2, "31"}, {"31", 3, "41"},
            {"41", 0, "11"}, {"11", 0, "14"}, {"21", 0, "24"}, {"31", 0, "34"},
            {"42", 0, "12"}, {"43", 0, "13"},
        },
        "11",
        3,
    };
}

// Alphabet for a matrix-only entry.  Weights are optional; the order comes
// from the zero entries of the matrix, ground from a zero-diagonal letter of
// zero weight when requested.
AlphabetPtr matrixAlphabet(const std::vector<std::string>& labels,
                           const std::vector<std::vector<int>>& entries, int rank,
                           const std::vector<Weight>& weights, std::optional<int> ground) {
    auto rk = deriveOrder(entries, labels);
    if (!rk) throw DomainError("no order compatible with the zero entries of E");
    std::vector<Color> colors;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        colors.push_back({i, labels[i], weights.empty() ? Weight::zero(rank) : weights[i]});
    return std::make_shared<const Alphabet>(colors, *rk, ground, rank);
}

std::vector<HalfInt> shiftsWhole(std::initializer_list<int> xs) {
    std::vector<HalfInt> out;
    for (int x : xs) out.push_back(HalfInt::whole(x));
    return out;
}

std::vector<HalfInt> shiftsDoubled(std::initializer_list<int> xs) {
    std::vector<HalfInt> out;
    for (int x : xs) out.push_back(HalfInt(x));
    return out;
}

IdentityCase fromGraph(std::string name, std::string summary, CrystalGraph graph, int m,
                       std::optional<ProductSide> product, IdentityCase::Mode mode,
                       int defaultOrder) {
    EnergyMatrix e = solveEnergy(graph);
    DifferenceRuleSet rules = buildD(e);
    Specialization spec = Specialization::principal(graph.alphabet(), m);
    return IdentityCase{std::move(name), std::move(summary), graph.alphabet(),
                        std::move(graph),  std::move(e),      {},
                        std::move(rules),  std::move(spec),   std::move(product),
                        mode,              defaultOrder,      {}};
}

}  // namespace

// Weights propagated from the ground letter, energy solved, color order
// derived from the zero entries of the energy matrix (largest numeric label
// first among the available choices).
CrystalGraph buildCrystalGraph(const std::vector<std::string>& labels,
                               const std::vector<std::tuple<std::string, int, std::string>>& arrowSpecs,
                               const std::string& ground, int rank,
                               const std::optional<Weight>& thetaOverride) {
    const int n = static_cast<int>(labels.size());
    std::vector<Color> provisional;
    provisional.reserve(labels.size());
    for (const std::string& l : labels) provisional.push_back({-1, l, Weight::zero(rank)});
    std::vector<int> labelOrder(n);
    for (int i = 0; i < n; ++i) labelOrder[i] = i;
    auto tmpAlpha = std::make_shared<const Alphabet>(provisional, labelOrder, std::nullopt, rank);

    std::vector<Arrow> arrows;
    arrows.reserve(arrowSpecs.size());
    for (const auto& [src, label, dst] : arrowSpecs)
        arrows.push_back({tmpAlpha->requireLabel(src), label, tmpAlpha->requireLabel(dst)});
    auto tmpGrounded = std::make_shared<const Alphabet>(
        provisional, labelOrder, std::optional<int>(tmpAlpha->requireLabel(ground)), rank);
    CrystalGraph tmp(tmpGrounded, arrows, rank);

    const Weight theta = thetaOverride.value_or(Weight(std::vector<int>(rank, 1)));
    const std::vector<Weight> wt = solveWeights(tmp, theta);
    const EnergyMatrix tmpEnergy = solveEnergy(tmp);

    auto orderRank = deriveOrder(tmpEnergy.entries(), labels);
    if (!orderRank) throw DomainError("no order compatible with the zero entries of E");

    std::vector<Color> colors;
    colors.reserve(labels.size());
    for (int i = 0; i < n; ++i) colors.push_back({i, labels[i], wt[i]});
    auto alpha =
        std::make_shared<const Alphabet>(colors, *orderRank, tmpGrounded->ground(), rank);
    return CrystalGraph(alpha, arrows, rank);
}

namespace {
CrystalGraph buildGraph(const GraphSpec& gs) {
    return buildCrystalGraph(gs.labels, gs.arrows, gs.ground, gs.rank);
}
}  // namespace

CrystalGraph makeCrystalA2() { return buildGraph(a2Spec()); }
CrystalGraph makeCrystalA3() { return buildGraph(a3Spec()); }

std::vector<std::string> catalogNames() {
    return {"a2-basic",          "a3-basic",       "a1-three-color", "capparelli",
            "mp3-gamma-prime",   "rr-single",      "distinct-single", "half-int-distinct",
            "half-int-diff3",    "a1-four-color"};
}

bool catalogHas(const std::string& name) {
    auto names = catalogNames();
    return std::find(names.begin(), names.end(), name) != names.end();
}

IdentityCase makeCase(const std::string& name) {
    if (name == "a2-basic") {
        IdentityCase c = fromGraph(
            "a2-basic", "nine-color crystal, principal degrees, unrestricted-partition product",
            makeCrystalA2(), 3, productAllGeometric(), IdentityCase::Mode::Assert, 30);
        return c;
    }
    if (name == "a3-basic") {
        IdentityCase c = fromGraph(
            "a3-basic", "sixteen-color crystal, principal degrees, unrestricted-partition product",
            makeCrystalA3(), 4, productAllGeometric(), IdentityCase::Mode::Assert, 25);
        return c;
    }
    if (name == "a1-three-color" || name == "capparelli") {
        const std::vector<std::string> labels{"1", "2", "3"};
        std::vector<std::vector<int>> entries{{2, 2, 2}, {1, 1, 2}, {0, 1, 2}};
        std::vector<Weight> weights{Weight({1}), Weight({0}), Weight({-1})};
        AlphabetPtr al = matrixAlphabet(labels, entries, 1, weights, std::nullopt);
        EnergyMatrix e(al, entries);
        DifferenceRuleSet rules = buildD(e);
        if (name == "a1-three-color") {
            Specialization spec = Specialization::principal(al, 2);
            return IdentityCase{"a1-three-color",
                                "three-color chain, principal degrees, odd-part product",
                                al,
                                std::nullopt,
                                std::move(e),
                                {},
                                std::move(rules),
                                std::move(spec),
                                productGeometricResidues(2, {1}),
                                IdentityCase::Mode::Assert,
                                40,
                                {}};
        }
        Specialization spec(al, 3, shiftsWhole({2, 0, -2}));
        return IdentityCase{"capparelli",
                            "three-color chain, (1,2)-specialized degrees, Capparelli product",
                            al,
                            std::nullopt,
                            std::move(e),
                            {},
                            std::move(rules),
                            std::move(spec),
                            productBinomialResidues(6, {1, 3, 5, 0}),
                            IdentityCase::Mode::Assert,
                            40,
                            {}};
    }
    if (name == "mp3-gamma-prime") {
        const std::vector<std::string> labels{"1", "2", "3", "5", "6", "7", "8", "9"};
        std::vector<std::vector<int>> entries{
            {2, 2, 2, 2, 2, 2, 2, 2},
            {1, 2, 1, 2, 1, 2, 2, 2},
            {1, 1, 2, 1, 2, 2, 2, 2},
            {0, 1, 1, 1, 1, 1, 2, 2},
            {1, 1, 1, 1, 1, 2, 1, 2},
            {0, 1, 0, 1, 1, 2, 1, 2},
            {0, 0, 1, 1, 1, 1, 2, 2},
            {0, 0, 0, 0, 1, 1, 1, 2},
        };
        std::vector<Weight> weights{Weight({1, 1}), Weight({0, 1}),   Weight({1, 0}),
                                    Weight({0, 0}), Weight({0, 0}),   Weight({-1, 0}),
                                    Weight({0, -1}), Weight({-1, -1})};
        AlphabetPtr al = matrixAlphabet(labels, entries, 2, weights, std::nullopt);
        EnergyMatrix e(al, entries);
        // the two triple corrections {(i-1)_3 i_5 i_1} and {(i-1)_9 (i-1)_5 i_7}
        std::vector<ForbiddenPattern> extras{
            {{{1, al->requireLabel("3")}, {0, al->requireLabel("5")}, {0, al->requireLabel("1")}}},
            {{{1, al->requireLabel("9")}, {1, al->requireLabel("5")}, {0, al->requireLabel("7")}}},
        };
        DifferenceRuleSet rules = buildD(e, extras);
        Specialization spec(al, 3, shiftsWhole({2, 1, 1, 0, 0, -1, -1, -2}));
        return IdentityCase{"mp3-gamma-prime",
                            "eight-color matrix with triple corrections, product over r not "
                            "divisible by 3",
                            al,
                            std::nullopt,
                            std::move(e),
                            std::move(extras),
                            std::move(rules),
                            std::move(spec),
                            productGeometricResidues(3, {1, 2}),
                            IdentityCase::Mode::Assert,
                            30,
                            {}};
    }
    if (name == "rr-single") {
        AlphabetPtr al = matrixAlphabet({"1"}, {{2}}, 0, {Weight{}}, std::nullopt);
        EnergyMatrix e(al, {{2}});
        DifferenceRuleSet rules = buildD(e);
        Specialization spec(al, 1, shiftsWhole({0}));
        return IdentityCase{"rr-single",
                            "single color, difference-two condition, Rogers-Ramanujan product",
                            al,
                            std::nullopt,
                            std::move(e),
                            {},
                            std::move(rules),
                            std::move(spec),
                            productGeometricResidues(5, {1, 4}),
                            IdentityCase::Mode::Assert,
                            40,
                            {"product side is the classical Rogers-Ramanujan partner, supplied "
                             "as known context rather than derived here"}};
    }
    if (name == "distinct-single") {
        AlphabetPtr al = matrixAlphabet({"1"}, {{1}}, 0, {Weight{}}, std::nullopt);
        EnergyMatrix e(al, {{1}});
        DifferenceRuleSet rules = buildD(e);
        Specialization spec(al, 1, shiftsWhole({0}));
        return IdentityCase{"distinct-single",
                            "single color, distinct parts, binomial product",
                            al,
                            std::nullopt,
                            std::move(e),
                            {},
                            std::move(rules),
                            std::move(spec),
                            productAllBinomial(),
                            IdentityCase::Mode::Assert,
                            40,
                            {}};
    }
    if (name == "half-int-distinct" || name == "half-int-diff3") {
        const bool distinct = name == "half-int-distinct";
        std::vector<std::vector<int>> entries =
            distinct ? std::vector<std::vector<int>>{{1, 1}, {0, 1}}
                     : std::vector<std::vector<int>>{{2, 2}, {1, 2}};
        AlphabetPtr al =
            matrixAlphabet({"1", "2"}, entries, 0, {Weight{}, Weight{}}, std::nullopt);
        EnergyMatrix e(al, entries);
        DifferenceRuleSet rules = buildD(e);
        Specialization spec(al, 2, shiftsDoubled({1, -1}));  // 2j - 1/2 and 2j + 1/2
        if (distinct)
            return IdentityCase{"half-int-distinct",
                                "two colors, half-integer degrees, distinct-half-part product",
                                al,
                                std::nullopt,
                                std::move(e),
                                {},
                                std::move(rules),
                                std::move(spec),
                                productBinomialHalfShift(),
                                IdentityCase::Mode::Assert,
                                20,
                                {}};
        return IdentityCase{"half-int-diff3",
                            "two colors, half-integer degrees with a difference-three condition; "
                            "no closed product is known",
                            al,
                            std::nullopt,
                            std::move(e),
                            {},
                            std::move(rules),
                            std::move(spec),
                            std::nullopt,
                            IdentityCase::Mode::Explore,
                            30,
                            {}};
    }
    if (name == "a1-four-color") {
        std::vector<std::vector<int>> entries{{2, 1, 2, 2}, {1, 0, 1, 1}, {0, 1, 0, 2},
                                              {0, 1, 0, 2}};
        std::vector<Weight> weights{Weight({1}), Weight({0}), Weight({0}), Weight({-1})};
        AlphabetPtr al = matrixAlphabet({"1", "2", "3", "4"}, entries, 1, weights,
                                        std::optional<int>(1));
        EnergyMatrix e(al, entries);
        DifferenceRuleSet rules = buildD(e);
        Specialization spec = Specialization::principal(al, 2);
        return IdentityCase{"a1-four-color",
                            "four-color crystal matrix; whether the unrestricted-partition "
                            "product matches is open, so the series is only reported",
                            al,
                            std::nullopt,
                            std::move(e),
                            {},
                            std::move(rules),
                            std::move(spec),
                            productAllGeometric(),  // reference only; never asserted
                            IdentityCase::Mode::Explore,
                            30,
                            {"the product column is a reference; this case reports observed "
                             "agreement and never asserts"}};
    }
    throw UnknownCaseError("unknown case '" + name + "'");
}

}  // namespace crr
