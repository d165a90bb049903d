#include "paths.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace crr {

Path::Path(AlphabetPtr alphabet, std::vector<int> prefix)
    : alphabet_(std::move(alphabet)), prefix_(std::move(prefix)) {
    const int ground = alphabet_->ground();
    for (int c : prefix_)
        if (c < 0 || c >= alphabet_->size()) throw DomainError("path letter out of range");
    while (!prefix_.empty() && prefix_.back() == ground) prefix_.pop_back();
}

int Path::at(int j) const {
    if (j < 1) throw DomainError("path positions are 1-based");
    return j <= static_cast<int>(prefix_.size()) ? prefix_[j - 1] : alphabet_->ground();
}

bool Path::operator==(const Path& other) const {
    if (alphabet_ != other.alphabet_ && !(*alphabet_ == *other.alphabet_)) return false;
    return prefix_ == other.prefix_;
}

std::string Path::str() const {
    if (prefix_.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < prefix_.size(); ++i) {
        if (i) s += ",";
        s += alphabet_->color(prefix_[i]).label;
    }
    return s;
}

Path Path::parse(const AlphabetPtr& alphabet, const std::string& text) {
    std::vector<int> prefix;
    if (text != "-" && !text.empty()) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) prefix.push_back(alphabet->requireLabel(tok));
    }
    return Path(alphabet, std::move(prefix));
}

static void requireGroundIdles(const EnergyMatrix& e) {
    const int a = e.alphabet()->ground();
    if (e.at(a, a) != 0)
        throw DomainError("path degree diverges: E is nonzero at the ground pair");
}

std::int64_t pathDegree(const Path& p, const EnergyMatrix& e) {
    requireSameAlphabet(p.alphabet(), e.alphabet(), "pathDegree");
    requireGroundIdles(e);
    std::int64_t sum = 0;
    const int len = static_cast<int>(p.prefix().size());
    for (int j = 1; j <= len; ++j) sum += static_cast<std::int64_t>(j) * e.at(p.at(j), p.at(j + 1));
    return sum;
}

Weight pathWeight(const Path& p) {
    Weight w = Weight::zero(p.alphabet()->rank());
    for (int c : p.prefix()) w = w + p.alphabet()->color(c).weight;
    return w;
}

ColoredPartition partD(const Path& p, const EnergyMatrix& e) {
    requireSameAlphabet(p.alphabet(), e.alphabet(), "partD");
    requireGroundIdles(e);
    const int len = static_cast<int>(p.prefix().size());
    std::vector<PartEntry> entries;
    int magnitude = 0;  // -i_r, accumulated from the tail
    for (int r = len; r >= 1; --r) {
        magnitude += e.at(p.at(r), p.at(r + 1));
        if (magnitude > 0) entries.push_back({-magnitude, p.prefix()[r - 1], 1});
    }
    return ColoredPartition(p.alphabet(), std::move(entries));
}

std::pair<Path, PlainPartition> decompose(const ColoredPartition& pi, const EnergyMatrix& e,
                                          const DifferenceRuleSet& d) {
    requireSameAlphabet(pi.alphabet(), e.alphabet(), "decompose");
    if (!satisfiesD(pi, d)) throw DomainError("decompose: partition violates the D condition");
    const std::vector<ColoredPart> parts = pi.partsExpanded();
    const int r = static_cast<int>(parts.size());

    std::vector<int> colors(r);
    for (int n = 0; n < r; ++n) colors[n] = parts[n].color;
    Path p(pi.alphabet(), colors);

    // exact-difference magnitudes of partD(p) along the full color sequence
    const int ground = pi.alphabet()->ground();
    std::vector<std::int64_t> exact(r + 2, 0);
    for (int n = r; n >= 1; --n) {
        const int next = n < r ? colors[n] : ground;
        exact[n] = exact[n + 1] + e.at(colors[n - 1], next);
    }

    std::vector<int> slack(r);
    for (int n = 0; n < r; ++n) {
        const std::int64_t c = -static_cast<std::int64_t>(parts[n].value) - exact[n + 1];
        if (c < 0) throw DomainError("bijection violation: negative staircase slack");
        slack[n] = static_cast<int>(c);
    }
    for (int n = 0; n + 1 < r; ++n)
        if (slack[n] < slack[n + 1])
            throw DomainError("bijection violation: staircase slack not nonincreasing");

    PlainPartition delta = PlainPartition::fromConjugate(slack);
    if (!(oplus(partD(p, e), delta) == pi))
        throw DomainError("bijection violation: round trip does not return the input");
    return {std::move(p), std::move(delta)};
}

// Cheapest total energy of any walk from each color down to the ground
// letter; the positional weights in the degree only amplify these costs.
static std::vector<int> minCostToGround(const EnergyMatrix& e) {
    const int n = e.size();
    const int ground = e.alphabet()->ground();
    const int inf = 1 << 20;
    std::vector<int> d(n, inf);
    d[ground] = 0;
    for (int pass = 0; pass < n; ++pass)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (d[b] < inf) d[a] = std::min(d[a], e.at(a, b) + d[b]);
    return d;
}

void enumeratePaths(const EnergyMatrix& e, std::int64_t budget,
                    const std::function<void(const Path&)>& emit) {
    requireGroundIdles(e);
    if (budget < 0) return;
    const AlphabetPtr& al = e.alphabet();
    const int n = al->size();
    const int ground = al->ground();
    const std::vector<int> dist = minCostToGround(e);
    int dmin = 1 << 20;
    for (int c = 0; c < n; ++c) {
        if (c == ground) continue;
        if (dist[c] == 0)
            throw DomainError("path enumeration diverges: color '" + al->color(c).label +
                              "' reaches ground at zero energy");
        dmin = std::min(dmin, dist[c]);
    }

    emit(Path(al));  // the ground path
    if (n == 1) return;

    // DFS over prefixes; partial = degree of the transitions fixed so far.
    std::vector<int> prefix;
    auto rec = [&](auto&& self, std::int64_t partial) -> void {
        const int j = static_cast<int>(prefix.size());  // position being filled is j+1
        for (int c = 0; c < n; ++c) {
            const std::int64_t added =
                j == 0 ? 0 : static_cast<std::int64_t>(j) * e.at(prefix[j - 1], c);
            const std::int64_t next = partial + added;
            if (c == ground) {
                // only worth continuing if a later non-ground letter could fit
                if (next + static_cast<std::int64_t>(j + 2) * dmin > budget) continue;
            } else {
                // any completion pays at least (j+1) * dist for the new letter
                if (next + static_cast<std::int64_t>(j + 1) * dist[c] > budget) continue;
            }
            prefix.push_back(c);
            if (c != ground) {
                const std::int64_t closing =
                    next + static_cast<std::int64_t>(j + 1) * e.at(c, ground);
                if (closing <= budget) emit(Path(al, prefix));
            }
            self(self, next);
            prefix.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<Path> enumeratePathsVec(const EnergyMatrix& e, std::int64_t budget) {
    std::vector<Path> out;
    enumeratePaths(e, budget, [&](const Path& p) { out.push_back(p); });
    return out;
}

}  // namespace crr
