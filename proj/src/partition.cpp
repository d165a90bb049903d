#include "partition.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace crr {

PlainPartition::PlainPartition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1) throw DomainError("plain partition rows must be >= 1");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw DomainError("plain partition rows must be nonincreasing");
    }
}

std::int64_t PlainPartition::boxCount() const {
    std::int64_t n = 0;
    for (int r : rows_) n += r;
    return n;
}

std::vector<int> PlainPartition::conjugate() const {
    if (rows_.empty()) return {};
    std::vector<int> cols(rows_[0], 0);
    for (int r : rows_)
        for (int n = 0; n < r; ++n) cols[n] += 1;
    return cols;
}

PlainPartition PlainPartition::fromConjugate(const std::vector<int>& cols) {
    if (cols.empty()) return PlainPartition();
    int tallest = *std::max_element(cols.begin(), cols.end());
    std::vector<int> rows;
    for (int m = 1; m <= tallest; ++m) {
        int len = 0;
        for (int c : cols)
            if (c >= m) ++len;
        rows.push_back(len);
    }
    return PlainPartition(std::move(rows));
}

std::string PlainPartition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rows_[i]);
    }
    return s + ")";
}

ColoredPartition::ColoredPartition(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

ColoredPartition::ColoredPartition(AlphabetPtr alphabet, std::vector<PartEntry> entries)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
    canonicalize();
}

void ColoredPartition::canonicalize() {
    for (const PartEntry& e : entries_) {
        if (e.value >= 0) throw DomainError("colored part values must be negative");
        if (e.color < 0 || e.color >= alphabet_->size())
            throw DomainError("colored part has unknown color id");
        if (e.mult < 0) throw DomainError("part multiplicity must be nonnegative");
    }
    const Alphabet& a = *alphabet_;
    std::sort(entries_.begin(), entries_.end(), [&a](const PartEntry& x, const PartEntry& y) {
        if (x.value != y.value) return x.value < y.value;
        return a.orderRank(x.color) < a.orderRank(y.color);
    });
    std::vector<PartEntry> merged;
    for (const PartEntry& e : entries_) {
        if (e.mult == 0) continue;
        if (!merged.empty() && merged.back().value == e.value && merged.back().color == e.color)
            merged.back().mult += e.mult;
        else
            merged.push_back(e);
    }
    entries_ = std::move(merged);
}

std::int64_t ColoredPartition::length() const {
    std::int64_t n = 0;
    for (const PartEntry& e : entries_) n += e.mult;
    return n;
}

std::int64_t ColoredPartition::multiplicity(int value, int color) const {
    for (const PartEntry& e : entries_) {
        if (e.value > value) break;  // entries sorted by value
        if (e.value == value && e.color == color) return e.mult;
    }
    return 0;
}

std::vector<ColoredPart> ColoredPartition::partsExpanded() const {
    std::vector<ColoredPart> parts;
    for (const PartEntry& e : entries_)
        for (std::int64_t k = 0; k < e.mult; ++k) parts.push_back({e.value, e.color});
    return parts;
}

int ColoredPartition::minValue() const { return entries_.empty() ? 0 : entries_.front().value; }

bool ColoredPartition::operator==(const ColoredPartition& other) const {
    if (alphabet_ != other.alphabet_ && !(*alphabet_ == *other.alphabet_)) return false;
    return entries_ == other.entries_;
}

ColoredPartition product(const ColoredPartition& a, const ColoredPartition& b) {
    requireSameAlphabet(a.alphabet_, b.alphabet_, "product");
    std::vector<PartEntry> entries = a.entries_;
    entries.insert(entries.end(), b.entries_.begin(), b.entries_.end());
    return ColoredPartition(a.alphabet_, std::move(entries));
}

bool contains(const ColoredPartition& pi, const ColoredPartition& rho) {
    requireSameAlphabet(pi.alphabet_, rho.alphabet_, "contains");
    for (const PartEntry& e : rho.entries_)
        if (pi.multiplicity(e.value, e.color) < e.mult) return false;
    return true;
}

std::int64_t ColoredPartition::boxCount() const {
    std::int64_t n = 0;
    for (const PartEntry& e : entries_) n += static_cast<std::int64_t>(-e.value) * e.mult;
    return n;
}

Weight ColoredPartition::weight() const {
    Weight w = Weight::zero(alphabet_->rank());
    for (const PartEntry& e : entries_)
        for (std::int64_t k = 0; k < e.mult; ++k) w = w + alphabet_->color(e.color).weight;
    return w;
}

HalfInt ColoredPartition::specializedDegree(const Specialization& s) const {
    requireSameAlphabet(alphabet_, s.alphabet, "specializedDegree");
    int d2 = 0;
    for (const PartEntry& e : entries_)
        d2 += static_cast<int>(e.mult) * s.degree2(-e.value, e.color);
    return HalfInt(d2);
}

std::string ColoredPartition::str() const {
    if (entries_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const PartEntry& e : entries_)
        for (std::int64_t k = 0; k < e.mult; ++k) {
            if (!first) os << " ";
            first = false;
            os << "(" << e.value << ")_" << alphabet_->color(e.color).label;
        }
    return os.str();
}

ColoredPartition ColoredPartition::parse(const AlphabetPtr& alphabet, const std::string& text) {
    std::vector<PartEntry> entries;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1" && entries.empty() && !(is >> tok)) break;  // monoid identity
        // token shape: (-5)_1
        auto close = tok.find(")_");
        if (tok.empty() || tok.front() != '(' || close == std::string::npos)
            throw ParseError("bad part token '" + tok + "', expected e.g. (-5)_1");
        int value = 0;
        try {
            value = std::stoi(tok.substr(1, close - 1));
        } catch (const std::exception&) {
            throw ParseError("bad part value in '" + tok + "'");
        }
        if (value >= 0) throw ParseError("part value must be negative in '" + tok + "'");
        std::string label = tok.substr(close + 2);
        entries.push_back({value, alphabet->requireLabel(label), 1});
    }
    return ColoredPartition(alphabet, std::move(entries));
}

ColoredPartition oplus(const ColoredPartition& nu, const PlainPartition& delta) {
    if (delta.empty()) return nu;
    std::vector<ColoredPart> rows = nu.partsExpanded();
    const int s = static_cast<int>(rows.size());
    const std::vector<int> cols = delta.conjugate();
    const int r = std::max<int>(s, static_cast<int>(cols.size()));
    if (r > s && !nu.alphabet()->hasGround())
        throw DomainError("oplus needs ground-colored rows but the alphabet has no ground");
    std::vector<PartEntry> out;
    out.reserve(r);
    for (int n = 0; n < r; ++n) {
        const int base = n < s ? rows[n].value : 0;
        const int color = n < s ? rows[n].color : nu.alphabet()->ground();
        const int added = n < static_cast<int>(cols.size()) ? cols[n] : 0;
        const int k = base - added;
        if (k < 0) out.push_back({k, color, 1});
    }
    return ColoredPartition(nu.alphabet(), std::move(out));
}

}  // namespace crr
