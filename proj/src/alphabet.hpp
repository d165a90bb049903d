#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weight.hpp"

namespace crr {

// One letter of the color alphabet.  id is the index into the owning
// Alphabet; label is the display name ("1".."9", "14", ...).
struct Color {
    int id = -1;
    std::string label;
    Weight weight;
};

// Immutable color alphabet: the letters, a strict total order on them,
// and (when the matrix has a zero diagonal letter of weight zero) the
// designated ground letter.
class Alphabet {
public:
    // orderRank[id] = position of the color in the total order, 0 = smallest.
    Alphabet(std::vector<Color> colors, std::vector<int> orderRank,
             std::optional<int> ground, int rank);

    int size() const { return static_cast<int>(colors_.size()); }
    int rank() const { return rank_; }
    const Color& color(int id) const { return colors_.at(id); }
    const std::vector<Color>& colors() const { return colors_; }

    bool hasGround() const { return ground_.has_value(); }
    int ground() const;  // throws if absent

    // Strict order a < b in the alphabet's total order.
    bool precedes(int a, int b) const { return orderRank_.at(a) < orderRank_.at(b); }
    int orderRank(int id) const { return orderRank_.at(id); }
    // Color ids listed smallest-first in the total order.
    std::vector<int> orderAscending() const;

    std::optional<int> findLabel(const std::string& label) const;
    int requireLabel(const std::string& label) const;  // throws ParseError

    bool operator==(const Alphabet& other) const;

private:
    std::vector<Color> colors_;
    std::vector<int> orderRank_;
    std::optional<int> ground_;
    int rank_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Both operands of a binary partition operation must live over one alphabet.
void requireSameAlphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* where);

}  // namespace crr
