#pragma once

#include <random>
#include <vector>

#include "catalog.hpp"
#include "partition.hpp"
#include "qseries.hpp"

namespace crr::testutil {

inline const IdentityCase& a2Case() {
    static IdentityCase c = makeCase("a2-basic");
    return c;
}

inline const IdentityCase& a3Case() {
    static IdentityCase c = makeCase("a3-basic");
    return c;
}

inline ColoredPartition parseA2(const std::string& text) {
    return ColoredPartition::parse(a2Case().alphabet, text);
}

// Independent staircase oracle for nu (+) Delta: literally add one box to
// each of the first -j rows, appending ground rows as needed.
inline ColoredPartition staircaseOplus(const ColoredPartition& nu, const PlainPartition& delta) {
    std::vector<std::pair<int, int>> rows;  // (magnitude, color)
    for (const ColoredPart& p : nu.partsExpanded()) rows.push_back({-p.value, p.color});
    for (int d : delta.rows()) {
        while (static_cast<int>(rows.size()) < d)
            rows.push_back({0, nu.alphabet()->ground()});
        for (int n = 0; n < d; ++n) rows[n].first += 1;
    }
    std::vector<PartEntry> entries;
    for (const auto& [mag, col] : rows)
        if (mag > 0) entries.push_back({-mag, col, 1});
    return ColoredPartition(nu.alphabet(), std::move(entries));
}

inline ColoredPartition randomPartition(const AlphabetPtr& alphabet, std::mt19937& rng,
                                        int maxParts = 6, int maxMagnitude = 5) {
    std::uniform_int_distribution<int> nParts(0, maxParts);
    std::uniform_int_distribution<int> mag(1, maxMagnitude);
    std::uniform_int_distribution<int> col(0, alphabet->size() - 1);
    std::vector<PartEntry> entries;
    const int k = nParts(rng);
    for (int i = 0; i < k; ++i) entries.push_back({-mag(rng), col(rng), 1});
    return ColoredPartition(alphabet, std::move(entries));
}

inline PlainPartition randomPlain(std::mt19937& rng, int maxRows = 4, int maxLen = 5) {
    std::uniform_int_distribution<int> nRows(0, maxRows);
    std::uniform_int_distribution<int> len(1, maxLen);
    std::vector<int> rows;
    const int k = nRows(rng);
    for (int i = 0; i < k; ++i) rows.push_back(len(rng));
    std::sort(rows.rbegin(), rows.rend());
    return PlainPartition(rows);
}

// Number of partitions of n with all parts distinct / unrestricted, by
// direct recursion; small-n oracles for the product expansions.
inline long countPartitions(int n, int maxPart, bool distinct) {
    if (n == 0) return 1;
    long total = 0;
    for (int p = std::min(n, maxPart); p >= 1; --p)
        total += countPartitions(n - p, distinct ? p - 1 : p, distinct);
    return total;
}

}  // namespace crr::testutil
