#include "rules.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "errors.hpp"

namespace crr {

int ForbiddenPattern::maxOffset() const {
    int m = 0;
    for (const PatternCell& c : cells) m = std::max(m, c.offset);
    return m;
}

int ForbiddenPattern::minOffset() const {
    if (cells.empty()) return 0;
    int m = cells.front().offset;
    for (const PatternCell& c : cells) m = std::min(m, c.offset);
    return m;
}

ForbiddenPattern ForbiddenPattern::normalized() const {
    ForbiddenPattern p = *this;
    const int lo = minOffset();
    for (PatternCell& c : p.cells) c.offset -= lo;
    std::sort(p.cells.begin(), p.cells.end(), [](const PatternCell& a, const PatternCell& b) {
        return a.offset != b.offset ? a.offset < b.offset : a.color < b.color;
    });
    return p;
}

ColoredPartition ForbiddenPattern::instance(const AlphabetPtr& alphabet, int i) const {
    std::vector<PartEntry> entries;
    entries.reserve(cells.size());
    for (const PatternCell& c : cells) entries.push_back({i - c.offset, c.color, 1});
    return ColoredPartition(alphabet, std::move(entries));
}

DifferenceRuleSet::DifferenceRuleSet(EnergyMatrix energy, std::vector<ForbiddenPattern> extras)
    : energy_(std::move(energy)) {
    const int n = energy_.size();
    extras_.reserve(extras.size());
    for (const ForbiddenPattern& p : extras) {
        if (p.cells.empty()) throw DomainError("forbidden pattern must be nonempty");
        for (const PatternCell& c : p.cells) {
            if (c.color < 0 || c.color >= n)
                throw DomainError("extra pattern references unknown color");
            if (c.offset < 0) throw DomainError("pattern offsets must be nonnegative");
        }
        extras_.push_back(p.normalized());
    }

    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            if (energy_.at(a, b) * energy_.at(b, a) >= 1)
                patterns_.push_back({{{0, a}, {0, b}}});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (energy_.at(a, b) == 2) patterns_.push_back({{{1, a}, {0, b}}});
    for (const ForbiddenPattern& p : extras_) patterns_.push_back(p);

    // The layered enumerator checks extras through per-layer color supports;
    // that is sound only for offsets in {0,1} and no repeated cell per offset.
    for (const ForbiddenPattern& p : extras_) {
        if (p.maxOffset() > 1) windowSafe_ = false;
        std::map<std::pair<int, int>, int> cellMult;
        for (const PatternCell& c : p.cells)
            if (++cellMult[{c.offset, c.color}] > 1) windowSafe_ = false;
    }

    for (const ForbiddenPattern& p : patterns_) {
        std::map<std::pair<int, int>, int> need;
        for (const PatternCell& c : p.cells) need[{c.offset, c.color}]++;
        std::vector<GroupedCell> g;
        for (const auto& [key, count] : need) g.push_back({key.first, key.second, count});
        grouped_.push_back(std::move(g));
    }
}

DifferenceRuleSet buildD(const EnergyMatrix& energy, std::vector<ForbiddenPattern> extras) {
    return DifferenceRuleSet(energy, std::move(extras));
}

bool satisfiesD(const ColoredPartition& pi, const DifferenceRuleSet& d) {
    requireSameAlphabet(pi.alphabet(), d.alphabet(), "satisfiesD");
    if (pi.empty()) return true;
    const int vmin = pi.minValue();
    for (const auto& cells : d.groupedPatterns()) {
        int maxOff = 0;
        for (const auto& c : cells) maxOff = std::max(maxOff, c.offset);
        for (int i = -1; i - maxOff >= vmin; --i) {
            bool hit = true;
            for (const auto& c : cells)
                if (pi.multiplicity(i - c.offset, c.color) < c.need) {
                    hit = false;
                    break;
                }
            if (hit) return false;
        }
    }
    return true;
}

bool pairAdmissible(const ColoredPart& lower, const ColoredPart& upper,
                    const DifferenceRuleSet& d) {
    ColoredPartition two(d.alphabet(), {{lower.value, lower.color, 1}, {upper.value, upper.color, 1}});
    return satisfiesD(two, d);
}

bool checkTriangle(const EnergyMatrix& e, std::vector<TripleWitness>* witnesses) {
    const int n = e.size();
    bool ok = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (e.at(a, c) > e.at(a, b) + e.at(b, c)) {
                    ok = false;
                    if (witnesses) witnesses->push_back({a, b, c});
                }
    return ok;
}

bool checkOrderCompat(const EnergyMatrix& e, std::vector<std::pair<int, int>>* witnesses) {
    const Alphabet& a = *e.alphabet();
    bool ok = true;
    for (int x = 0; x < e.size(); ++x)
        for (int y = 0; y < e.size(); ++y)
            if (e.at(x, y) == 0 && x != y && !a.precedes(x, y)) {
                ok = false;
                if (witnesses) witnesses->push_back({x, y});
            }
    return ok;
}

bool checkMiddleInterpolation(const DifferenceRuleSet& d, std::vector<std::string>* witnesses) {
    const Alphabet& al = *d.alphabet();
    const int n = al.size();
    // value layouts as offsets below a base value i: (i,i,i), (i-1,i-1,i), (i-1,i,i)
    static const int layouts[3][3] = {{0, 0, 0}, {1, 1, 0}, {1, 0, 0}};
    const int i = -3;  // any value deep enough that i-1 is still a valid part
    bool ok = true;
    auto pairForbidden = [&](int va, int ca, int vb, int cb) {
        return !pairAdmissible({va, ca}, {vb, cb}, d);
    };
    for (const auto& lay : layouts)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const int va = i - lay[0], vb = i - lay[1], vc = i - lay[2];
                    // the chain i_a <= j_b <= k_c in the order on A
                    if (va == vb && !(al.orderRank(a) <= al.orderRank(b))) continue;
                    if (vb == vc && !(al.orderRank(b) <= al.orderRank(c))) continue;
                    if (!pairForbidden(va, a, vc, c)) continue;
                    if (pairForbidden(va, a, vb, b) || pairForbidden(vb, b, vc, c)) continue;
                    ok = false;
                    if (witnesses)
                        witnesses->push_back("(" + std::to_string(va) + ")_" + al.color(a).label +
                                             " (" + std::to_string(vb) + ")_" + al.color(b).label +
                                             " (" + std::to_string(vc) + ")_" + al.color(c).label);
                }
    return ok;
}

bool checkSymmetry(const EnergyMatrix& e, const std::vector<int>& sigma) {
    const int n = e.size();
    if (static_cast<int>(sigma.size()) != n)
        throw DomainError("permutation size does not match the alphabet");
    std::vector<bool> hit(n, false);
    for (int x : sigma) {
        if (x < 0 || x >= n || hit[x]) throw DomainError("sigma is not a permutation");
        hit[x] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (e.at(sigma[a], sigma[b]) != e.at(a, b)) return false;
    return true;
}

std::optional<std::vector<int>> deriveOrder(const std::vector<std::vector<int>>& entries,
                                            const std::vector<std::string>& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::set<int>> above(n);  // a -> {b : a must precede b}
    std::vector<int> indeg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && entries[a][b] == 0 && above[a].insert(b).second) indeg[b]++;

    auto numericKey = [&](int id) {
        const std::string& s = labels[id];
        try {
            size_t pos = 0;
            long v = std::stol(s, &pos);
            if (pos == s.size()) return std::pair<long, std::string>(v, s);
        } catch (const std::exception&) {
        }
        return std::pair<long, std::string>(std::numeric_limits<long>::min(), s);
    };

    std::vector<int> order;
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (used[v] || indeg[v] != 0) continue;
            if (pick == -1 || numericKey(v) > numericKey(pick)) pick = v;
        }
        if (pick == -1) return std::nullopt;  // cycle in the zero-relation
        used[pick] = true;
        order.push_back(pick);
        for (int b : above[pick]) indeg[b]--;
    }
    std::vector<int> rank(n);
    for (int r = 0; r < n; ++r) rank[order[r]] = r;
    return rank;
}

}  // namespace crr
