#pragma once

#include <string>

#include "catalog.hpp"
#include "harness.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "rules.hpp"

namespace crr {

// Partitions: array of {value, color, mult} with colors by label.
std::string partitionToJson(const ColoredPartition& pi);
ColoredPartition partitionFromJson(const AlphabetPtr& alphabet, const std::string& text);

// Series: object {doubled exponent -> decimal coefficient string}.
std::string seriesToJson(const QSeries& s);

// Rule sets: {colors, matrix, extras: [[[offset, color], ...], ...]}.
std::string ruleSetToJson(const DifferenceRuleSet& d);

// Product sides: {factors: [{form, modulus, residues, half_offset}, ...]}.
std::string productSideToJson(const ProductSide& ps);

// Reports: {case, order, verdict, sum, product, first_mismatch, ms, notes?}.
// Deterministic except for the ms field.
std::string reportToJson(const Report& r);

// Case definitions for `load`: either a crystal {colors, arrows, ground} or
// a matrix {colors, matrix}, plus specialization, optional product, mode.
IdentityCase caseFromJson(const std::string& text);

// Catalog listing: array of {name, mode, colors, default_order, summary}.
std::string catalogToJson();

}  // namespace crr
