#include <doctest.h>

#include <random>
#include <set>

#include "genfun.hpp"
#include "test_util.hpp"

using namespace crr;
using namespace crr::testutil;

TEST_CASE("genFunction small values on the nine-color case") {
    const auto& c = a2Case();
    const QSeries s = genFunction(c.rules, c.spec, 4);
    // degree 1 is forced to the single magnitude-one part of the top color
    const long expect[5] = {1, 1, 2, 3, 5};
    for (int n = 0; n <= 4; ++n) CHECK(s.coeff2(2 * n) == expect[n]);
}

TEST_CASE("genFunction at order zero is the constant 1") {
    for (const std::string name : {"a2-basic", "capparelli", "half-int-diff3"}) {
        const IdentityCase c = makeCase(name);
        CHECK(genFunction(c.rules, c.spec, 0) == QSeries::one(0));
    }
}

TEST_CASE("single color with difference one counts distinct partitions") {
    const IdentityCase c = makeCase("distinct-single");
    const QSeries s = genFunction(c.rules, c.spec, 6);
    const long expect[7] = {1, 1, 1, 2, 2, 3, 4};
    for (int n = 0; n <= 6; ++n) CHECK(s.coeff2(2 * n) == expect[n]);
}

TEST_CASE("principal degree shifts of the cataloged matrix cases") {
    // four-color case: degrees 2i-1, 2i, 2i, 2i+1
    const IdentityCase four = makeCase("a1-four-color");
    const int expectFour[4] = {1, 0, 0, -1};
    for (int c = 0; c < 4; ++c)
        CHECK(four.spec.shift[c] == HalfInt::whole(expectFour[c]));
    CHECK(four.spec.m == 2);

    // three-color chain: 2i-1, 2i, 2i+1 principally; 3i-2, 3i, 3i+2 for the
    // (1,2)-specialized variant
    const IdentityCase three = makeCase("a1-three-color");
    const int expectThree[3] = {1, 0, -1};
    for (int c = 0; c < 3; ++c)
        CHECK(three.spec.shift[c] == HalfInt::whole(expectThree[c]));
    const IdentityCase capp = makeCase("capparelli");
    const int expectCapp[3] = {2, 0, -2};
    for (int c = 0; c < 3; ++c)
        CHECK(capp.spec.shift[c] == HalfInt::whole(expectCapp[c]));
    CHECK(capp.spec.m == 3);

    // half-integer two-color cases: 2j - 1/2 and 2j + 1/2
    for (const std::string name : {"half-int-distinct", "half-int-diff3"}) {
        const IdentityCase c = makeCase(name);
        CHECK(c.spec.shift[0] == HalfInt(1));
        CHECK(c.spec.shift[1] == HalfInt(-1));
        CHECK(c.spec.m == 2);
    }
}

TEST_CASE("divergent specializations are rejected") {
    const auto& c = a2Case();
    // shift 2m makes magnitude-one parts free
    std::vector<HalfInt> shifts(c.alphabet->size(), HalfInt::whole(6));
    const Specialization bad(c.alphabet, 3, shifts);
    CHECK_THROWS_AS(genFunction(c.rules, bad, 5), DivergentError);
    CHECK_THROWS_AS(bruteForceGenFunction(c.rules, bad, 5), DivergentError);
}

TEST_CASE("enumerator equals the brute-force oracle on random rule sets") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(0, 2);
    std::uniform_int_distribution<int> nColors(1, 4);
    std::uniform_int_distribution<int> nExtras(0, 2);
    std::uniform_int_distribution<int> cellCount(2, 3);
    std::uniform_int_distribution<int> offset(0, 1);

    for (int trial = 0; trial < 40; ++trial) {
        const int n = nColors(rng);
        std::vector<Color> colors;
        std::vector<int> order;
        for (int i = 0; i < n; ++i) {
            colors.push_back({i, std::to_string(i + 1), Weight{}});
            order.push_back(i);
        }
        auto al = std::make_shared<const Alphabet>(colors, order, std::nullopt, 0);
        std::vector<std::vector<int>> entries(n, std::vector<int>(n));
        for (auto& row : entries)
            for (int& x : row) x = entry(rng);

        // window-safe extras: offsets in {0,1}, one cell per (offset, color)
        std::vector<ForbiddenPattern> extras;
        const int k = nExtras(rng);
        for (int i = 0; i < k; ++i) {
            ForbiddenPattern p;
            std::set<std::pair<int, int>> used;
            const int cells = cellCount(rng);
            for (int j = 0; j < cells; ++j) {
                std::uniform_int_distribution<int> col(0, n - 1);
                const std::pair<int, int> cell{offset(rng), col(rng)};
                if (used.insert(cell).second) p.cells.push_back({cell.first, cell.second});
            }
            if (!p.cells.empty()) extras.push_back(p);
        }

        const DifferenceRuleSet rules = buildD(EnergyMatrix(al, entries), extras);
        REQUIRE(rules.windowSafe());
        const Specialization spec(al, 1, std::vector<HalfInt>(n));  // degree = box count
        const QSeries fast = genFunction(rules, spec, 7);
        const QSeries slow = bruteForceGenFunction(rules, spec, 7);
        INFO("trial ", trial);
        CHECK_FALSE(QSeries::firstMismatch2(fast, slow).has_value());
    }
}

TEST_CASE("enumerator equals the brute-force oracle at the worked-example orders") {
    const auto& a2 = a2Case();
    CHECK_FALSE(QSeries::firstMismatch2(genFunction(a2.rules, a2.spec, 15),
                                        bruteForceGenFunction(a2.rules, a2.spec, 15))
                    .has_value());
    const IdentityCase mp3 = makeCase("mp3-gamma-prime");
    CHECK_FALSE(QSeries::firstMismatch2(genFunction(mp3.rules, mp3.spec, 12),
                                        bruteForceGenFunction(mp3.rules, mp3.spec, 12))
                    .has_value());
}

TEST_CASE("enumerator equals the brute-force oracle on every cataloged case") {
    for (const std::string& name : catalogNames()) {
        const IdentityCase c = makeCase(name);
        const int order = c.alphabet->size() >= 16 ? 6 : 8;
        const QSeries fast = genFunction(c.rules, c.spec, order);
        const QSeries slow = bruteForceGenFunction(c.rules, c.spec, order);
        INFO(name);
        CHECK_FALSE(QSeries::firstMismatch2(fast, slow).has_value());
    }
}

TEST_CASE("coefficients are nonnegative and start at 1 for every case") {
    for (const std::string& name : catalogNames()) {
        const IdentityCase c = makeCase(name);
        const QSeries s = genFunction(c.rules, c.spec, 10);
        CHECK(s.coeff2(0) == 1);
        for (int e2 = 0; e2 <= s.trunc2(); ++e2) CHECK(s.coeff2(e2) >= 0);
    }
}

TEST_CASE("enumerateIdeal emits each member exactly once, in agreement with the series") {
    const auto& c = a2Case();
    const int order = 7;
    std::set<std::string> seen;
    std::vector<long> byDegree(order + 1, 0);
    enumerateIdeal(c.rules, c.spec, order, [&](const ColoredPartition& pi) {
        CHECK(seen.insert(pi.str()).second);
        CHECK(satisfiesD(pi, c.rules));
        const HalfInt d = pi.specializedDegree(c.spec);
        REQUIRE(d.isInteger());
        byDegree[d.twice / 2] += 1;
    });
    const QSeries s = genFunction(c.rules, c.spec, order);
    for (int n = 0; n <= order; ++n) CHECK(s.coeff2(2 * n) == byDegree[n]);
}

TEST_CASE("weightedCharacter") {
    const auto& c = a2Case();
    {
        const WeightedSeries ws = weightedCharacter(c.rules, 0);
        REQUIRE(ws.terms().size() == 1);
        const auto& [key, count] = *ws.terms().begin();
        CHECK(key.first.isZero());
        CHECK(key.second == 0);
        CHECK(count == 1);
    }
    {
        // at box count one: exactly the nine single parts, weights per color
        const WeightedSeries ws = weightedCharacter(c.rules, 1);
        BigInt atBoxOne = 0;
        for (const auto& [key, count] : ws.terms())
            if (key.second == 1) atBoxOne += count;
        CHECK(atBoxOne == 9);
        for (const Color& col : c.alphabet->colors()) {
            const auto it = ws.terms().find({col.weight, 1});
            REQUIRE(it != ws.terms().end());
            CHECK(it->second >= 1);
        }
    }
}

TEST_CASE("specializing the weighted character reproduces the generating function") {
    const auto& c = a2Case();
    const int budget = 8;
    const WeightedSeries ws = weightedCharacter(c.rules, budget);
    // degree = m * boxes - <rho, weight>; every member of degree <= budget
    // has box count <= budget here, so the comparison window is complete
    QSeries viaWeights(2 * budget);
    for (const auto& [key, count] : ws.terms()) {
        const int e2 = 2 * c.spec.m * key.second - 2 * key.first.rhoPairing();
        REQUIRE(e2 >= 0);
        viaWeights.add2(e2, count);
    }
    const QSeries direct = genFunction(c.rules, c.spec, budget);
    for (int e2 = 0; e2 <= 2 * budget; ++e2) CHECK(viaWeights.coeff2(e2) == direct.coeff2(e2));
}
