#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forestbound/curve.hpp"
#include "forestbound/forest.hpp"
#include "forestbound/selection.hpp"

// Text formats. Forest files are JSON:
//
//   {
//     "m": 25,
//     "atom_sizes": [2, 2, 6, 6, 4, 1, 1, 3],
//     "regions": [
//       {"i": 1, "j": 5, "zeta": 6},
//       ...
//     ]
//   }
//
// Depth is derived, never stored. serialize_forest writes regions in
// (depth, i) order, and parse -> serialize reproduces such input byte for
// byte. Path, selection and p-value files are one-column CSV with a header.
namespace forestbound::io {

ForestFamily parse_forest(std::string_view text);
std::string serialize_forest(const ForestFamily& family);

std::vector<Hypothesis> parse_hypotheses(std::string_view text);
std::string serialize_hypotheses(std::span<const Hypothesis> hypotheses);

std::vector<double> parse_pvalues(std::string_view text);
std::string serialize_pvalues(std::span<const double> p_values);

// Columns t, hypothesis_index, V_t, fdp_bound for t = 1..T.
std::string curve_csv(const BoundCurve& curve, const SelectionPath& path);
// Columns i, j.
std::string removed_csv(std::span<const RegionKey> removed);

// Decimal rendering with 17 significant digits, independent
// of the global locale.
std::string format_decimal(double value);

// Throw IoError when the file cannot be read or written.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

inline constexpr std::string_view kHypothesisHeader = "hypothesis_index";
inline constexpr std::string_view kPValueHeader = "p_value";

}  // namespace forestbound::io
