#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "half_int.hpp"
#include "specialization.hpp"
#include "weight.hpp"

namespace crr {

// One colored part j_beta: a strictly negative value j and a color.
struct ColoredPart {
    int value = -1;  // < 0
    int color = 0;   // color id

    bool operator==(const ColoredPart&) const = default;
};

// Part with multiplicity, the unit of the canonical run-length form.
struct PartEntry {
    int value = -1;
    int color = 0;
    std::int64_t mult = 1;

    bool operator==(const PartEntry&) const = default;
};

// Plain partition Delta: nonincreasing positive row lengths.
class PlainPartition {
public:
    PlainPartition() = default;
    explicit PlainPartition(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int size() const { return static_cast<int>(rows_.size()); }
    std::int64_t boxCount() const;

    // conjugate()[n] = number of rows of length > n (0-based), i.e. the
    // column heights.
    std::vector<int> conjugate() const;
    static PlainPartition fromConjugate(const std::vector<int>& cols);

    bool operator==(const PlainPartition&) const = default;
    std::string str() const;

private:
    std::vector<int> rows_;
};

// Element of the free commutative monoid over A = colors x Z_{<0}.
// Canonical form: entries sorted by value ascending, then by the alphabet
// order of the color, multiplicities positive.
class ColoredPartition {
public:
    explicit ColoredPartition(AlphabetPtr alphabet);
    // Accepts entries in any order, merges duplicates, drops mult 0.
    ColoredPartition(AlphabetPtr alphabet, std::vector<PartEntry> entries);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<PartEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::int64_t length() const;                       // number of parts with multiplicity
    std::int64_t multiplicity(int value, int color) const;
    // Parts listed singly (multiplicity expanded), canonical order.
    std::vector<ColoredPart> partsExpanded() const;
    int minValue() const;  // 0 when empty

    bool operator==(const ColoredPartition& other) const;

    // Monoid product: multiplicities add pointwise.
    friend ColoredPartition product(const ColoredPartition& a, const ColoredPartition& b);
    // pi contains rho: every multiplicity of rho is available in pi.
    friend bool contains(const ColoredPartition& pi, const ColoredPartition& rho);

    std::int64_t boxCount() const;  // ||pi||: sum of magnitudes
    Weight weight() const;          // sum of color weights
    HalfInt specializedDegree(const Specialization& s) const;

    // Canonical text: whitespace-separated parts "(-5)_1 (-3)_8"; the empty
    // partition prints as the monoid identity "1".
    std::string str() const;
    static ColoredPartition parse(const AlphabetPtr& alphabet, const std::string& text);

private:
    void canonicalize();
    AlphabetPtr alphabet_;
    std::vector<PartEntry> entries_;
};

// nu (+) Delta: row n of the staircase adds one box to each of the first
// -j_m rows of nu, appending ground-colored rows when Delta is taller than
// nu.  Errors when ground rows are needed but the alphabet has no ground.
ColoredPartition oplus(const ColoredPartition& nu, const PlainPartition& delta);

}  // namespace crr
