#include "alphabet.hpp"

#include <algorithm>

#include "errors.hpp"

namespace crr {

Alphabet::Alphabet(std::vector<Color> colors, std::vector<int> orderRank,
                   std::optional<int> ground, int rank)
    : colors_(std::move(colors)), orderRank_(std::move(orderRank)), ground_(ground), rank_(rank) {
    const int n = static_cast<int>(colors_.size());
    if (n == 0) throw DomainError("alphabet must have at least one color");
    if (static_cast<int>(orderRank_.size()) != n)
        throw DomainError("order rank table size does not match color count");
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        colors_[i].id = i;
        if (static_cast<int>(colors_[i].weight.coords.size()) != rank_)
            throw DomainError("color '" + colors_[i].label + "' has weight of wrong rank");
        if (orderRank_[i] < 0 || orderRank_[i] >= n || seen[orderRank_[i]])
            throw DomainError("order ranks must be a permutation of 0..n-1");
        seen[orderRank_[i]] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (colors_[i].label == colors_[j].label)
                throw DomainError("duplicate color label '" + colors_[i].label + "'");
    if (ground_) {
        if (*ground_ < 0 || *ground_ >= n) throw DomainError("ground color id out of range");
        if (!colors_[*ground_].weight.isZero())
            throw DomainError("ground color must have zero weight");
    }
}

int Alphabet::ground() const {
    if (!ground_) throw DomainError("alphabet has no ground color");
    return *ground_;
}

std::vector<int> Alphabet::orderAscending() const {
    std::vector<int> ids(colors_.size());
    for (int i = 0; i < static_cast<int>(colors_.size()); ++i) ids[orderRank_[i]] = i;
    return ids;
}

std::optional<int> Alphabet::findLabel(const std::string& label) const {
    for (const Color& c : colors_)
        if (c.label == label) return c.id;
    return std::nullopt;
}

int Alphabet::requireLabel(const std::string& label) const {
    auto id = findLabel(label);
    if (!id) throw ParseError("unknown color label '" + label + "'");
    return *id;
}

bool Alphabet::operator==(const Alphabet& other) const {
    if (rank_ != other.rank_ || ground_ != other.ground_ || orderRank_ != other.orderRank_)
        return false;
    if (colors_.size() != other.colors_.size()) return false;
    for (size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i].label != other.colors_[i].label ||
            colors_[i].weight != other.colors_[i].weight)
            return false;
    return true;
}

void requireSameAlphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* where) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    throw DomainError(std::string(where) + ": operands live over different alphabets");
}

}  // namespace crr
