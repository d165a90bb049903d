#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "genfun.hpp"
#include "rules.hpp"
#include "test_util.hpp"

using namespace crr;
using namespace crr::testutil;

namespace {

AlphabetPtr tinyAlphabet(int n) {
    std::vector<Color> colors;
    std::vector<int> order;
    for (int i = 0; i < n; ++i) {
        colors.push_back({i, std::to_string(i + 1), Weight{}});
        order.push_back(n - 1 - i);  // descending labels
    }
    return std::make_shared<const Alphabet>(colors, order, std::nullopt, 0);
}

}  // namespace

TEST_CASE("buildD generators") {
    const auto& a2 = a2Case();
    // E_89 = 2 gives both the same-value pair and the consecutive pair
    CHECK_FALSE(satisfiesD(parseA2("(-1)_8 (-1)_9"), a2.rules));
    CHECK_FALSE(satisfiesD(parseA2("(-3)_8 (-2)_9"), a2.rules));

    AlphabetPtr one = tinyAlphabet(1);
    const DifferenceRuleSet none = buildD(EnergyMatrix(one, {{0}}));
    CHECK(none.patterns().empty());

    const DifferenceRuleSet diffTwo = buildD(EnergyMatrix(one, {{2}}));
    REQUIRE(diffTwo.patterns().size() == 2);
    // both generators fire: {i_1 i_1} and {(i-1)_1 i_1}
    CHECK_FALSE(satisfiesD(ColoredPartition(one, {{-1, 0, 2}}), diffTwo));
    CHECK_FALSE(satisfiesD(ColoredPartition(one, {{-2, 0, 1}, {-1, 0, 1}}), diffTwo));
    CHECK(satisfiesD(ColoredPartition(one, {{-3, 0, 1}, {-1, 0, 1}}), diffTwo));
}

TEST_CASE("satisfiesD on the worked example") {
    const auto& a2 = a2Case();
    CHECK_FALSE(satisfiesD(parseA2("(-5)_1 (-3)_8 (-2)_9"), a2.rules));
    CHECK(satisfiesD(ColoredPartition(a2.alphabet), a2.rules));
    CHECK(satisfiesD(parseA2("(-1)_4 (-1)_4"), a2.rules));
    CHECK(satisfiesD(parseA2("(-5)_1 (-3)_8"), a2.rules));
}

TEST_CASE("pairAdmissible examples") {
    const auto& a2 = a2Case();
    const auto label = [&](const std::string& l) { return a2.alphabet->requireLabel(l); };
    CHECK_FALSE(pairAdmissible({-3, label("8")}, {-2, label("9")}, a2.rules));
    CHECK(pairAdmissible({-4, label("1")}, {-2, label("9")}, a2.rules));
    CHECK(pairAdmissible({-1, label("4")}, {-1, label("4")}, a2.rules));
}

TEST_CASE("pairAdmissible agrees with the gap criterion for extras-free sets") {
    for (const std::string name : {"a2-basic", "a3-basic", "a1-three-color", "a1-four-color"}) {
        const IdentityCase c = makeCase(name);
        const int n = c.alphabet->size();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int gap = 0; gap <= 3; ++gap) {
                    // lower part (-4-gap)_a, upper part (-4)_b
                    if (gap == 0 && !(c.alphabet->orderRank(a) <= c.alphabet->orderRank(b)))
                        continue;  // not a canonical chain
                    const bool admissible = pairAdmissible({-4 - gap, a}, {-4, b}, c.rules);
                    CHECK(admissible == (gap >= c.energy.at(a, b)));
                }
    }
}

TEST_CASE("triple corrections forbid exactly their instances") {
    const IdentityCase mp3 = makeCase("mp3-gamma-prime");
    const auto part = [&](const std::string& t) {
        return ColoredPartition::parse(mp3.alphabet, t);
    };
    // {(i-1)_3 i_5 i_1}: pairwise admissible, forbidden as a whole
    const ColoredPartition t1 = part("(-2)_3 (-1)_5 (-1)_1");
    CHECK_FALSE(satisfiesD(t1, mp3.rules));
    for (const std::string sub : {"(-2)_3 (-1)_5", "(-2)_3 (-1)_1", "(-1)_5 (-1)_1"})
        CHECK(satisfiesD(part(sub), mp3.rules));
    // {(i-1)_9 (i-1)_5 i_7}
    const ColoredPartition t2 = part("(-2)_9 (-2)_5 (-1)_7");
    CHECK_FALSE(satisfiesD(t2, mp3.rules));
    for (const std::string sub : {"(-2)_9 (-2)_5", "(-2)_9 (-1)_7", "(-2)_5 (-1)_7"})
        CHECK(satisfiesD(part(sub), mp3.rules));
    // deeper instances of the same family are forbidden too
    CHECK_FALSE(satisfiesD(part("(-5)_3 (-4)_5 (-4)_1"), mp3.rules));
}

TEST_CASE("membership equals adjacent-pair admissibility, exhaustively by box count") {
    // for extras-free rule sets, the canonical chain of adjacent pairs
    // decides membership; checked against the containment definition over
    // every colored partition with at most 8 boxes
    const auto& c = a2Case();
    const EnergyMatrix free_(c.alphabet,
                             std::vector<std::vector<int>>(9, std::vector<int>(9, 0)));
    const DifferenceRuleSet noRules = buildD(free_);
    long checked = 0;
    enumerateIdeal(noRules, Specialization::boxGrading(c.alphabet), 8,
                   [&](const ColoredPartition& pi) {
                       const auto parts = pi.partsExpanded();
                       bool adjacentOk = true;
                       for (size_t i = 0; i + 1 < parts.size() && adjacentOk; ++i)
                           adjacentOk = pairAdmissible(parts[i], parts[i + 1], c.rules);
                       CHECK(satisfiesD(pi, c.rules) == adjacentOk);
                       ++checked;
                   });
    CHECK(checked > 1000);
}

TEST_CASE("membership is local to windows of the pattern size") {
    const auto& a2 = a2Case();
    std::mt19937 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        const ColoredPartition pi = randomPartition(a2.alphabet, rng, 5, 4);
        // check all sub-partitions of <= 2 parts (the maximal pattern size)
        const auto parts = pi.partsExpanded();
        bool allPairsFine = true;
        for (size_t i = 0; i < parts.size() && allPairsFine; ++i) {
            ColoredPartition single(a2.alphabet, {{parts[i].value, parts[i].color, 1}});
            if (!satisfiesD(single, a2.rules)) allPairsFine = false;
            for (size_t j = i + 1; j < parts.size() && allPairsFine; ++j) {
                ColoredPartition two(a2.alphabet, {{parts[i].value, parts[i].color, 1},
                                                   {parts[j].value, parts[j].color, 1}});
                if (!satisfiesD(two, a2.rules)) allPairsFine = false;
            }
        }
        CHECK(satisfiesD(pi, a2.rules) == allPairsFine);
    }
}

TEST_CASE("the ideal is downward closed under part removal") {
    const auto& a2 = a2Case();
    const auto& mp3 = makeCase("mp3-gamma-prime");
    std::mt19937 rng(67);
    for (int trial = 0; trial < 150; ++trial) {
        for (const IdentityCase* c : {&a2, &mp3}) {
            const ColoredPartition pi = randomPartition(c->alphabet, rng);
            const ColoredPartition rho = randomPartition(c->alphabet, rng);
            if (satisfiesD(product(pi, rho), c->rules)) CHECK(satisfiesD(pi, c->rules));
        }
    }
}

TEST_CASE("checkTriangle") {
    CHECK(checkTriangle(a2Case().energy));
    CHECK(checkTriangle(a3Case().energy));

    // deliberate violation: E_13 = 2 with a free middle letter
    AlphabetPtr three = tinyAlphabet(3);
    const EnergyMatrix bad(three, {{0, 0, 2}, {0, 0, 0}, {0, 0, 0}});
    std::vector<TripleWitness> witnesses;
    CHECK_FALSE(checkTriangle(bad, &witnesses));
    REQUIRE(!witnesses.empty());
    CHECK(witnesses.front().alpha == 0);
    CHECK(witnesses.front().beta == 1);
    CHECK(witnesses.front().gamma == 2);
}

TEST_CASE("checkOrderCompat") {
    CHECK(checkOrderCompat(a2Case().energy));
    CHECK(checkOrderCompat(a3Case().energy));

    AlphabetPtr one = tinyAlphabet(1);
    CHECK(checkOrderCompat(EnergyMatrix(one, {{0}})));

    // zero entry pointing against the order
    AlphabetPtr two = tinyAlphabet(2);  // order: 2 < 1
    std::vector<std::pair<int, int>> witnesses;
    CHECK_FALSE(checkOrderCompat(EnergyMatrix(two, {{2, 0}, {1, 2}}), &witnesses));
    REQUIRE(!witnesses.empty());
    CHECK(witnesses.front() == std::pair<int, int>(0, 1));
}

TEST_CASE("checkMiddleInterpolation holds for the cataloged crystal matrices") {
    CHECK(checkMiddleInterpolation(a2Case().rules));
    CHECK(checkMiddleInterpolation(a3Case().rules));
}

TEST_CASE("checkSymmetry") {
    const auto& a2 = a2Case();
    const auto label = [&](const std::string& l) { return a2.alphabet->requireLabel(l); };
    std::vector<int> sigma(9);
    for (int i = 0; i < 9; ++i) sigma[i] = i;
    CHECK(checkSymmetry(a2.energy, sigma));  // identity

    // the color swap 2<->3, 5<->6, 7<->8 fixes the matrix
    std::vector<int> swap = sigma;
    std::swap(swap[label("2")], swap[label("3")]);
    std::swap(swap[label("5")], swap[label("6")]);
    std::swap(swap[label("7")], swap[label("8")]);
    CHECK(checkSymmetry(a2.energy, swap));

    // swapping only the extreme colors does not
    std::vector<int> ends = sigma;
    std::swap(ends[label("1")], ends[label("9")]);
    CHECK_FALSE(checkSymmetry(a2.energy, ends));

    CHECK_THROWS_AS(checkSymmetry(a2.energy, std::vector<int>(9, 0)), DomainError);
}

TEST_CASE("deriveOrder reproduces the printed nine-color order") {
    const auto& a2 = a2Case();
    // descending labels: 9 smallest ... 1 largest
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            const int la = std::stoi(a2.alphabet->color(a).label);
            const int lb = std::stoi(a2.alphabet->color(b).label);
            CHECK(a2.alphabet->precedes(a, b) == (la > lb));
        }

    // cyclic zero-relation has no compatible order
    const auto cyc = deriveOrder({{1, 0}, {0, 1}}, {"1", "2"});
    CHECK_FALSE(cyc.has_value());
}

TEST_CASE("extra patterns validate their colors") {
    AlphabetPtr two = tinyAlphabet(2);
    const EnergyMatrix e(two, {{1, 1}, {0, 1}});
    CHECK_THROWS_AS(buildD(e, {{{{0, 5}}}}), DomainError);
    CHECK_THROWS_AS(buildD(e, {{{}}}), DomainError);
}

TEST_CASE("rule set window safety") {
    CHECK(a2Case().rules.windowSafe());
    CHECK(makeCase("mp3-gamma-prime").rules.windowSafe());

    AlphabetPtr two = tinyAlphabet(2);
    const EnergyMatrix e(two, {{1, 1}, {0, 1}});
    // offset 2 exceeds the two-layer window
    const DifferenceRuleSet wide = buildD(e, {{{{2, 0}, {0, 1}}}});
    CHECK_FALSE(wide.windowSafe());
}
