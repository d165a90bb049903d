#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"
#include "paths.hpp"

namespace crr {

namespace {

std::string expStr(int e2) {
    if (e2 % 2 == 0) return "q^" + std::to_string(e2 / 2);
    return "q^(" + std::to_string(e2) + "/2)";
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Compact lookup key; entries are canonical, so this is injective.
std::string compactKey(const ColoredPartition& pi) {
    std::string key;
    key.reserve(pi.entries().size() * 12);
    for (const PartEntry& e : pi.entries()) {
        key += std::to_string(e.value);
        key += ':';
        key += std::to_string(e.color);
        key += ':';
        key += std::to_string(e.mult);
        key += ';';
    }
    return key;
}

// All plain partitions with box count <= maxTotal, grouped by total.
std::vector<std::vector<PlainPartition>> plainPartitionsByTotal(int maxTotal) {
    std::vector<std::vector<PlainPartition>> byTotal(maxTotal + 1);
    std::vector<int> rows;
    auto rec = [&](auto&& self, int remaining, int maxRow) -> void {
        byTotal[maxTotal - remaining].push_back(PlainPartition(rows));
        for (int r = std::min(remaining, maxRow); r >= 1; --r) {
            rows.push_back(r);
            self(self, remaining - r, r);
            rows.pop_back();
        }
    };
    rec(rec, maxTotal, maxTotal);
    return byTotal;
}

}  // namespace

Report verify(const IdentityCase& c, int orderN, bool withOracle) {
    Stopwatch watch;
    Report r;
    r.caseName = c.name;
    r.order = orderN;
    r.notes = c.notes;

    if (c.rules.windowSafe()) {
        r.sum = genFunction(c.rules, c.spec, orderN);
    } else {
        r.sum = bruteForceGenFunction(c.rules, c.spec, orderN);
        r.notes.push_back("patterns exceed the enumerator window; brute force used for the sum");
    }

    if (withOracle) {
        const QSeries oracle = bruteForceGenFunction(c.rules, c.spec, orderN);
        r.oracleChecked = true;
        if (auto m = QSeries::firstMismatch2(r.sum, oracle)) {
            r.verdict = "fail";
            r.firstMismatch2 = *m;
            r.notes.push_back("enumerator disagrees with the brute-force oracle at " +
                              expStr(*m));
            r.ms = watch.ms();
            return r;
        }
        r.notes.push_back("brute-force oracle agrees through order " + std::to_string(orderN));
    }

    if (c.product) {
        r.product = expandProduct(*c.product, 2 * orderN);
        r.firstMismatch2 = QSeries::firstMismatch2(r.sum, *r.product);
    }

    if (c.assertMode()) {
        if (!c.product) throw DomainError("assert-mode case without a product side");
        r.verdict = r.firstMismatch2 ? "fail" : "pass";
        if (r.firstMismatch2)
            r.notes.push_back("first mismatch at " + expStr(*r.firstMismatch2));
    } else {
        r.verdict = "reported";
        if (c.product) {
            if (r.firstMismatch2)
                r.notes.push_back("agrees with the reference product below " +
                                  expStr(*r.firstMismatch2));
            else
                r.notes.push_back("agrees with the reference product through the full order " +
                                  std::to_string(orderN));
        }
    }
    r.ms = watch.ms();
    return r;
}

std::vector<Report> runAll(std::optional<int> orderOverride, bool withOracle) {
    std::vector<Report> reports;
    for (const std::string& name : catalogNames()) {
        IdentityCase c = makeCase(name);
        const int order = orderOverride.value_or(c.defaultOrder);
        try {
            reports.push_back(verify(c, order, withOracle));
        } catch (const std::exception& ex) {
            Report r;
            r.caseName = name;
            r.order = order;
            r.verdict = "fail";
            r.notes.push_back(std::string("error: ") + ex.what());
            reports.push_back(std::move(r));
        }
    }
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.caseName < b.caseName; });
    return reports;
}

Report bijectionAudit(const IdentityCase& c, int boxBudget) {
    Stopwatch watch;
    if (!c.graph) throw DomainError("bijection audit requires a graph-derived case");
    if (boxBudget < 0) throw DomainError("box budget must be >= 0");
    const EnergyMatrix& e = c.energy;
    const AlphabetPtr& al = c.alphabet;

    Report r;
    r.caseName = c.name;
    r.order = boxBudget;
    r.sum = QSeries(2 * boxBudget);      // members of P_D per box count
    r.product = QSeries(2 * boxBudget);  // images of (path, Delta) pairs per box count
    std::vector<std::string>& bad = r.notes;
    const size_t maxNotes = 5;
    auto complain = [&](const std::string& what) {
        if (bad.size() < maxNotes) bad.push_back(what);
    };

    const auto deltas = plainPartitionsByTotal(boxBudget);
    std::unordered_map<std::string, std::string> image;  // canonical pi -> "path|delta"
    std::size_t violations = 0;

    enumeratePaths(e, boxBudget, [&](const Path& p) {
        const std::int64_t d0 = pathDegree(p, e);
        const ColoredPartition base = partD(p, e);
        if (base.boxCount() != d0) {
            ++violations;
            complain("box count of the exact-difference partition differs from the path degree "
                     "at path " + p.str());
        }
        if (!(base.weight() == pathWeight(p))) {
            ++violations;
            complain("weight mismatch between path and partition at path " + p.str());
        }
        for (int t = 0; t + d0 <= boxBudget; ++t)
            for (const PlainPartition& delta : deltas[t]) {
                const ColoredPartition pi = oplus(base, delta);
                const std::int64_t boxes = d0 + t;
                if (pi.boxCount() != boxes) {
                    ++violations;
                    complain("box count not conserved at path " + p.str() + " with staircase " +
                             delta.str());
                    continue;
                }
                if (!satisfiesD(pi, c.rules)) {
                    ++violations;
                    complain("image violates the difference condition: " + pi.str());
                    continue;
                }
                const std::string key = compactKey(pi);
                const std::string tag = p.str() + "|" + delta.str();
                auto [it, inserted] = image.emplace(key, tag);
                if (!inserted) {
                    ++violations;
                    complain("injectivity violation: " + key + " reached from " + it->second +
                             " and " + tag);
                    continue;
                }
                r.product->add2(2 * static_cast<int>(boxes), 1);
                try {
                    auto [p2, delta2] = decompose(pi, e, c.rules);
                    if (!(p2 == p) || !(delta2 == delta)) {
                        ++violations;
                        complain("greedy inverse returned a different pair for " + key);
                    }
                } catch (const std::exception& ex) {
                    ++violations;
                    complain(std::string("greedy inverse failed for ") + key + ": " + ex.what());
                }
            }
    });

    std::size_t membersMissing = 0;
    enumerateIdeal(c.rules, Specialization::boxGrading(al), boxBudget,
                   [&](const ColoredPartition& pi) {
                       r.sum.add2(2 * static_cast<int>(pi.boxCount()), 1);
                       if (!image.count(compactKey(pi))) {
                           ++membersMissing;
                           complain("surjectivity violation: member " + pi.str() +
                                    " is not an image");
                       }
                   });
    violations += membersMissing;

    r.firstMismatch2 = QSeries::firstMismatch2(r.sum, *r.product);
    if (r.firstMismatch2) {
        ++violations;
        complain("per-box-count counts differ first at " + expStr(*r.firstMismatch2));
    }
    r.verdict = violations == 0 ? "pass" : "fail";
    if (violations > 0)
        r.notes.push_back(std::to_string(violations) + " violation(s) in total");
    r.ms = watch.ms();
    return r;
}

std::string renderReportText(const Report& r) {
    std::ostringstream os;
    os << r.caseName << " [order " << r.order << "]: " << r.verdict;
    if (r.firstMismatch2) os << " (first mismatch at " << expStr(*r.firstMismatch2) << ")";
    os << " in " << r.ms << " ms\n";
    os << "  sum:     " << r.sum.str() << "\n";
    if (r.product) os << "  product: " << r.product->str() << "\n";
    for (const std::string& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace crr
