#include <doctest.h>

#include <map>
#include <set>

#include "catalog.hpp"
#include "crystal.hpp"
#include "errors.hpp"
#include "test_util.hpp"

using namespace crr;
using namespace crr::testutil;

namespace {

// the nine-color matrix exactly as printed; calibration oracle for the solver
const std::vector<std::vector<int>> kNineColorMatrix = {
    {2, 2, 2, 1, 2, 2, 2, 2, 2},
    {1, 2, 1, 1, 2, 1, 2, 2, 2},
    {1, 1, 2, 1, 1, 2, 2, 2, 2},
    {1, 1, 1, 0, 1, 1, 1, 1, 1},
    {0, 0, 1, 1, 0, 1, 1, 2, 2},
    {0, 1, 0, 1, 1, 0, 2, 1, 2},
    {0, 1, 0, 1, 1, 0, 2, 1, 2},
    {0, 0, 1, 1, 0, 1, 1, 2, 2},
    {0, 0, 0, 1, 0, 0, 1, 1, 2},
};

int id(const CrystalGraph& g, const std::string& label) {
    return g.alphabet()->requireLabel(label);
}

}  // namespace

TEST_CASE("epsilon and phi string lengths on the nine-color crystal") {
    const CrystalGraph g = makeCrystalA2();
    CHECK(g.epsilonPhi(id(g, "1"), 1) == std::pair<int, int>(0, 1));
    CHECK(g.epsilonPhi(id(g, "4"), 1) == std::pair<int, int>(0, 0));
    CHECK(g.epsilonPhi(id(g, "4"), 0) == std::pair<int, int>(1, 1));
    CHECK(g.epsilonPhi(id(g, "9"), 0) == std::pair<int, int>(0, 2));
}

TEST_CASE("solveWeights reproduces the nine-color weight table") {
    const CrystalGraph g = makeCrystalA2();
    const std::vector<Weight> wt = solveWeights(g, Weight({1, 1}));
    const std::map<std::string, Weight> expected = {
        {"1", Weight({1, 1})},  {"2", Weight({0, 1})},  {"3", Weight({1, 0})},
        {"4", Weight({0, 0})},  {"5", Weight({0, 0})},  {"6", Weight({0, 0})},
        {"7", Weight({-1, 0})}, {"8", Weight({0, -1})}, {"9", Weight({-1, -1})},
    };
    for (const auto& [label, w] : expected) CHECK(wt[id(g, label)] == w);
    // the alphabet built by the catalog embeds the same weights
    for (const Color& c : g.alphabet()->colors()) CHECK(c.weight == wt[c.id]);
}

TEST_CASE("weights of the sixteen-color crystal pair off and sum to zero") {
    const CrystalGraph g = makeCrystalA3();
    const std::vector<Weight> wt = solveWeights(g, Weight({1, 1, 1}));
    Weight total = Weight::zero(3);
    for (const Weight& w : wt) total = total + w;
    CHECK(total.isZero());
    CHECK(wt[id(g, "11")].isZero());
    CHECK(wt[id(g, "14")] == Weight({1, 1, 1}));
    CHECK(wt[id(g, "41")] == -wt[id(g, "14")]);
    CHECK(wt[id(g, "24")] == -wt[id(g, "42")]);
    CHECK(wt[id(g, "34")] == -wt[id(g, "43")]);
    CHECK(wt[id(g, "13")] == -wt[id(g, "31")]);
    CHECK(wt[id(g, "23")] == -wt[id(g, "32")]);
    CHECK(wt[id(g, "12")] == -wt[id(g, "21")]);
}

TEST_CASE("solveWeights rejects weight-inconsistent graphs") {
    // two letters joined by both a 1-arrow and a 0-arrow in the same direction
    std::vector<Color> colors = {{0, "g", Weight({0})}, {1, "x", Weight({0})}};
    auto al = std::make_shared<const Alphabet>(colors, std::vector<int>{0, 1},
                                               std::optional<int>(0), 1);
    const CrystalGraph g(al, {{0, 1, 1}, {0, 0, 1}}, 1);
    CHECK_THROWS_AS(solveWeights(g, Weight({1})), DomainError);
}

TEST_CASE("solveEnergy reproduces the printed nine-color matrix entrywise") {
    const CrystalGraph g = makeCrystalA2();
    const EnergyMatrix e = solveEnergy(g);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            const int row = std::stoi(g.alphabet()->color(a).label) - 1;
            const int col = std::stoi(g.alphabet()->color(b).label) - 1;
            CHECK(e.at(a, b) == kNineColorMatrix[row][col]);
        }
    CHECK(e.at(id(g, "4"), id(g, "4")) == 0);
    CHECK(e.at(id(g, "8"), id(g, "9")) == 2);
}

TEST_CASE("solver output for the sixteen-color crystal is a valid energy matrix") {
    const CrystalGraph g = makeCrystalA3();
    const EnergyMatrix e = solveEnergy(g);
    CHECK(e.size() == 16);
    // entries in {0,1,2} are enforced by the type; the ground pair sits at 0
    CHECK(e.at(id(g, "11"), id(g, "11")) == 0);
    CHECK(g.alphabet()->color(g.alphabet()->ground()).weight.isZero());
}

TEST_CASE("tensor square shapes") {
    // trivial one-letter crystal: a single pair, no arrows
    std::vector<Color> one = {{0, "a", Weight{}}};
    auto al1 = std::make_shared<const Alphabet>(one, std::vector<int>{0}, std::optional<int>(0), 0);
    const CrystalGraph trivial(al1, {}, 0);
    const TensorSquare ts1(trivial);
    CHECK(ts1.arrows().empty());

    const CrystalGraph g = makeCrystalA2();
    const TensorSquare ts(g);
    CHECK(ts.base() == 9);
    std::set<int> vertices;
    for (const auto& a : ts.arrows()) {
        vertices.insert(a.source);
        vertices.insert(a.target);
    }
    CHECK(vertices.size() <= 81);

    // (4 (x) 4) and (1 (x) 4) lie in one component of the full tensor graph
    const int g4 = id(g, "4"), c1 = id(g, "1");
    std::vector<std::vector<int>> adj(81);
    for (const auto& a : ts.arrows()) {
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    std::vector<bool> seen(81, false);
    std::vector<int> stack{ts.vertex(g4, g4)};
    seen[ts.vertex(g4, g4)] = true;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    CHECK(seen[ts.vertex(c1, g4)]);
}

TEST_CASE("cataloged matrices match their printed forms") {
    const IdentityCase fourColor = makeCase("a1-four-color");
    const std::vector<std::vector<int>> four = {
        {2, 1, 2, 2}, {1, 0, 1, 1}, {0, 1, 0, 2}, {0, 1, 0, 2}};
    CHECK(fourColor.energy.entries() == four);

    const IdentityCase threeColor = makeCase("a1-three-color");
    const std::vector<std::vector<int>> three = {{2, 2, 2}, {1, 1, 2}, {0, 1, 2}};
    CHECK(threeColor.energy.entries() == three);
    CHECK(makeCase("capparelli").energy.entries() == three);

    const IdentityCase gammaPrime = makeCase("mp3-gamma-prime");
    const std::vector<std::vector<int>> eight = {
        {2, 2, 2, 2, 2, 2, 2, 2}, {1, 2, 1, 2, 1, 2, 2, 2}, {1, 1, 2, 1, 2, 2, 2, 2},
        {0, 1, 1, 1, 1, 1, 2, 2}, {1, 1, 1, 1, 1, 2, 1, 2}, {0, 1, 0, 1, 1, 2, 1, 2},
        {0, 0, 1, 1, 1, 1, 2, 2}, {0, 0, 0, 0, 1, 1, 1, 2}};
    CHECK(gammaPrime.energy.entries() == eight);
    CHECK(gammaPrime.rules.hasExtras());

    // the consecutive-value conditions of the eight-color matrix agree with
    // the nine-color matrix restricted to the shared colors
    const IdentityCase nine = makeCase("a2-basic");
    for (const std::string a : {"1", "2", "3", "5", "6", "7", "8", "9"})
        for (const std::string b : {"1", "2", "3", "5", "6", "7", "8", "9"}) {
            const bool two9 = nine.energy.at(nine.alphabet->requireLabel(a),
                                             nine.alphabet->requireLabel(b)) == 2;
            const bool two8 = gammaPrime.energy.at(gammaPrime.alphabet->requireLabel(a),
                                                   gammaPrime.alphabet->requireLabel(b)) == 2;
            CHECK(two9 == two8);
        }
}

TEST_CASE("crystal graph validation") {
    std::vector<Color> colors = {{0, "a", Weight{}}, {1, "b", Weight{}}};
    auto al = std::make_shared<const Alphabet>(colors, std::vector<int>{0, 1},
                                               std::optional<int>(0), 0);
    // two outgoing arrows with one label
    CHECK_THROWS_AS(CrystalGraph(al, {{0, 0, 1}, {0, 0, 0}}, 1), DomainError);
    // a classical cycle is rejected at construction
    CHECK_THROWS_AS(CrystalGraph(al, {{0, 1, 1}, {1, 1, 0}}, 1), DomainError);
    // a 0-cycle is representable but cannot be walked
    const CrystalGraph zeroCycle(al, {{0, 0, 1}, {1, 0, 0}}, 1);
    CHECK_THROWS_AS(zeroCycle.epsilonPhi(0, 0), DomainError);
}
