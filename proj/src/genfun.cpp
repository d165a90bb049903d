#include "genfun.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace crr {

namespace {

using Mask = std::uint32_t;
using Poly = std::vector<BigInt>;  // index = doubled exponent

struct WindowTables {
    int n = 0;
    std::vector<bool> selfRepeat;              // E_cc == 0: color may repeat in a layer
    std::vector<std::vector<bool>> samePairOk; // E_ab * E_ba == 0
    std::vector<Mask> crossBad;                // crossBad[a] = {b : E_ab == 2}
    struct Extra {
        Mask upper;  // offset-1 colors (live at the larger magnitude)
        Mask lower;  // offset-0 colors
    };
    std::vector<Extra> mixedExtras;   // upper != 0
    std::vector<Mask> inLayerExtras;  // all-offset-0 patterns
};

WindowTables makeTables(const DifferenceRuleSet& d) {
    const EnergyMatrix& e = d.energy();
    const int n = e.size();
    if (n > 31) throw DomainError("windowed enumerator supports at most 31 colors");
    if (!d.windowSafe())
        throw DomainError(
            "rule set has patterns outside the two-layer window; use the brute-force oracle");
    WindowTables t;
    t.n = n;
    t.selfRepeat.assign(n, false);
    t.samePairOk.assign(n, std::vector<bool>(n, false));
    t.crossBad.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        t.selfRepeat[a] = e.at(a, a) == 0;
        for (int b = 0; b < n; ++b) {
            t.samePairOk[a][b] = e.at(a, b) * e.at(b, a) == 0;
            if (e.at(a, b) == 2) t.crossBad[a] |= Mask(1) << b;
        }
    }
    for (const ForbiddenPattern& p : d.extras()) {
        Mask upper = 0, lower = 0;
        for (const PatternCell& c : p.cells)
            (c.offset == 1 ? upper : lower) |= Mask(1) << c.color;
        if (upper)
            t.mixedExtras.push_back({upper, lower});
        else
            t.inLayerExtras.push_back(lower);
    }
    return t;
}

bool supportAdmissible(const WindowTables& t, Mask u) {
    for (int a = 0; a < t.n; ++a) {
        if (!(u >> a & 1)) continue;
        for (int b = a + 1; b < t.n; ++b)
            if ((u >> b & 1) && !t.samePairOk[a][b]) return false;
    }
    for (Mask m : t.inLayerExtras)
        if ((m & u) == m) return false;
    return true;
}

bool transitionOk(const WindowTables& t, Mask upper, Mask lower) {
    for (int a = 0; a < t.n; ++a)
        if ((upper >> a & 1) && (t.crossBad[a] & lower)) return false;
    for (const auto& x : t.mixedExtras)
        if ((x.upper & upper) == x.upper && (x.lower & lower) == x.lower) return false;
    return true;
}

std::vector<Mask> allSupports(const WindowTables& t) {
    std::vector<Mask> out;
    for (Mask u = 1; u < (Mask(1) << t.n); ++u)
        if (supportAdmissible(t, u)) out.push_back(u);
    return out;
}

void checkConvergence(const Specialization& s) {
    if (!s.allDegreesPositive())
        throw DivergentError("divergent specialization: some color has nonpositive degree");
}

}  // namespace

QSeries genFunction(const DifferenceRuleSet& d, const Specialization& s, int orderN) {
    requireSameAlphabet(d.alphabet(), s.alphabet, "genFunction");
    checkConvergence(s);
    if (orderN < 0) throw DomainError("order must be >= 0");
    const int trunc2 = 2 * orderN;
    const WindowTables t = makeTables(d);
    const std::vector<Mask> supports = allSupports(t);

    std::map<Mask, Poly> states;
    Poly unit(trunc2 + 1, BigInt(0));
    unit[0] = 1;
    states[0] = std::move(unit);

    for (int k = 1;; ++k) {
        int cheapest = s.degree2(k, 0);
        for (int c = 1; c < t.n; ++c) cheapest = std::min(cheapest, s.degree2(k, c));
        if (cheapest > trunc2) break;

        std::map<Mask, Poly> next;
        // the empty layer keeps every state's mass, folded into support 0
        Poly& idle = next[0];
        idle.assign(trunc2 + 1, BigInt(0));
        for (const auto& [mask, poly] : states)
            for (int e = 0; e <= trunc2; ++e) idle[e] += poly[e];

        for (Mask u : supports) {
            int base = 0;  // one copy of each support color
            for (int c = 0; c < t.n; ++c)
                if (u >> c & 1) base += s.degree2(k, c);
            if (base > trunc2) continue;

            Poly acc(trunc2 + 1, BigInt(0));
            bool any = false;
            for (const auto& [mask, poly] : states) {
                if (!transitionOk(t, u, mask)) continue;
                for (int e = 0; e <= trunc2; ++e) acc[e] += poly[e];
                any = true;
            }
            if (!any) continue;

            // multiply in the layer weight color by color
            for (int c = 0; c < t.n; ++c) {
                if (!(u >> c & 1)) continue;
                const int d2 = s.degree2(k, c);
                Poly shifted(trunc2 + 1, BigInt(0));
                for (int e = d2; e <= trunc2; ++e) shifted[e] = acc[e - d2];
                if (t.selfRepeat[c])
                    for (int e = d2; e <= trunc2; ++e) shifted[e] += shifted[e - d2];
                acc = std::move(shifted);
            }
            Poly& slot = next[u];
            if (slot.empty()) slot.assign(trunc2 + 1, BigInt(0));
            for (int e = 0; e <= trunc2; ++e) slot[e] += acc[e];
        }
        states = std::move(next);
    }

    QSeries out(trunc2);
    for (const auto& [mask, poly] : states)
        for (int e = 0; e <= trunc2; ++e) out.add2(e, poly[e]);
    return out;
}

void enumerateIdeal(const DifferenceRuleSet& d, const Specialization& s, int orderN,
                    const std::function<void(const ColoredPartition&)>& emit) {
    requireSameAlphabet(d.alphabet(), s.alphabet, "enumerateIdeal");
    checkConvergence(s);
    const int trunc2 = 2 * orderN;
    const WindowTables t = makeTables(d);

    std::vector<PartEntry> entries;
    emit(ColoredPartition(d.alphabet()));

    // extend the layer at magnitude k, then descend to later magnitudes
    auto growLayer = [&](auto&& growSelf, auto&& nextSelf, int k, Mask layer, Mask prev,
                         int minColor, int spent2) -> void {
        for (int c = minColor; c < t.n; ++c) {
            // admissibility of adding color c to this layer
            bool ok = true;
            for (int b = 0; b < t.n && ok; ++b)
                if ((layer >> b & 1) && b != c && !t.samePairOk[c][b]) ok = false;
            if (!ok) continue;
            if ((t.crossBad[c] & prev)) continue;
            const Mask withC = layer | (Mask(1) << c);
            bool extraHit = false;
            for (Mask m : t.inLayerExtras)
                if ((m & withC) == m) extraHit = true;
            for (const auto& x : t.mixedExtras)
                if ((x.upper & withC) == x.upper && (x.lower & prev) == x.lower) extraHit = true;
            if (extraHit) continue;

            const int d2 = s.degree2(k, c);
            const std::int64_t maxMult = t.selfRepeat[c] ? (trunc2 - spent2) / d2 : 1;
            for (std::int64_t m = 1; m <= maxMult && spent2 + m * d2 <= trunc2; ++m) {
                entries.push_back({-k, c, m});
                const int spent = spent2 + static_cast<int>(m) * d2;
                emit(ColoredPartition(d.alphabet(), entries));
                nextSelf(growSelf, nextSelf, k, withC, spent);
                growSelf(growSelf, nextSelf, k, withC, prev, c + 1, spent);
                entries.pop_back();
            }
        }
    };
    auto nextLayer = [&](auto&& growSelf, auto&& nextSelf, int kDone, Mask doneSupport,
                         int spent2) -> void {
        for (int k = kDone + 1;; ++k) {
            int cheapest = s.degree2(k, 0);
            for (int c = 1; c < t.n; ++c) cheapest = std::min(cheapest, s.degree2(k, c));
            if (spent2 + cheapest > trunc2) break;
            const Mask prev = (k == kDone + 1) ? doneSupport : 0;
            growSelf(growSelf, nextSelf, k, 0, prev, 0, spent2);
        }
    };
    nextLayer(growLayer, nextLayer, 0, 0, 0);
}

QSeries bruteForceGenFunction(const DifferenceRuleSet& d, const Specialization& s, int orderN) {
    requireSameAlphabet(d.alphabet(), s.alphabet, "bruteForceGenFunction");
    checkConvergence(s);
    const int trunc2 = 2 * orderN;
    const int n = d.alphabet()->size();
    QSeries out(trunc2);

    // Walk every (magnitude, color) slot in order and choose a multiplicity
    // for each; every colored partition of bounded degree shows up at exactly
    // one leaf, where the containment definition decides membership.
    std::vector<PartEntry> acc;
    auto walk = [&](auto&& self, int k, int c, int spent2) -> void {
        if (c == n) {
            // advance to the next magnitude if any part could still fit
            int cheapest = s.degree2(k + 1, 0);
            for (int cc = 1; cc < n; ++cc) cheapest = std::min(cheapest, s.degree2(k + 1, cc));
            if (spent2 + cheapest <= trunc2) self(self, k + 1, 0, spent2);
            else {
                ColoredPartition pi(d.alphabet(), acc);
                if (satisfiesD(pi, d)) out.add2(spent2, 1);
            }
            return;
        }
        const int d2 = s.degree2(k, c);
        for (std::int64_t m = 0; spent2 + m * d2 <= trunc2; ++m) {
            if (m > 0) acc.push_back({-k, c, m});
            self(self, k, c + 1, spent2 + static_cast<int>(m) * d2);
            if (m > 0) acc.pop_back();
        }
    };
    walk(walk, 1, 0, 0);
    return out;
}

WeightedSeries weightedCharacter(const DifferenceRuleSet& d, int boxBudget) {
    WeightedSeries ws(boxBudget);
    const Specialization boxes = Specialization::boxGrading(d.alphabet());
    enumerateIdeal(d, boxes, boxBudget, [&](const ColoredPartition& pi) {
        ws.add(pi.weight(), static_cast<int>(pi.boxCount()), 1);
    });
    return ws;
}

}  // namespace crr
