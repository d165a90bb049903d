#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "qseries.hpp"

namespace crr {

// Outcome of one verification or audit run.  For audits the two series are
// the per-box-count member counts (sum) and mapped-pair counts (product).
struct Report {
    std::string caseName;
    int order = 0;
    std::string verdict;  // "pass" | "fail" | "reported"
    QSeries sum{0};
    std::optional<QSeries> product;
    std::optional<int> firstMismatch2;
    std::int64_t ms = 0;
    std::vector<std::string> notes;
    bool oracleChecked = false;

    bool passed() const { return verdict != "fail"; }
};

// Compare the generating function against the case's product side through
// order N.  Assert cases get pass/fail; explore cases get "reported" and,
// when a reference product is present, the observed agreement order.
// withOracle additionally cross-checks against the brute-force enumeration.
Report verify(const IdentityCase& c, int orderN, bool withOracle = false);

// Every cataloged case at its default order (or the override), reports
// ordered by case name.
std::vector<Report> runAll(std::optional<int> orderOverride = std::nullopt,
                           bool withOracle = false);

// Desk-scale check of the path parameterization: enumerate (path, plain
// partition) pairs within the box budget, map them through the exact-
// difference construction, and compare against the directly enumerated
// ideal: injectivity, membership, surjectivity, degree and weight
// conservation, and the greedy inverse round trip.
Report bijectionAudit(const IdentityCase& c, int boxBudget);

std::string renderReportText(const Report& r);

}  // namespace crr
