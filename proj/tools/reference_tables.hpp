#pragma once

#include <optional>
#include <span>

namespace hgs::tables {

// Reference E_NPT values (eigenvalues of 2^n * rho^T) for the leading cut of
// each length, given to 4-5 significant digits.

struct ReferenceCell {
  int n;
  int k;           // edge cardinality of the complete k-graph (n for single-edge)
  int cut_length;
  double value;
  bool trusted;    // false for rows known to disagree with the construction
};

// Single hyperedge on all n vertices. Rows n >= 9 duplicate the complete
// 2-graph rows below and are not used as regression targets.
inline constexpr ReferenceCell kSingleEdge[] = {
    {2, 2, 1, 2.0, true},
    {3, 3, 1, 3.4641, true},
    {4, 4, 1, 5.2915, true},       {4, 4, 2, 6.0, true},
    {5, 5, 1, 7.746, true},        {5, 5, 2, 9.1652, true},
    {6, 6, 1, 11.1355, true},      {6, 6, 2, 13.4164, true},   {6, 6, 3, 14.0, true},
    {7, 7, 1, 15.8745, true},      {7, 7, 2, 19.2873, true},   {7, 7, 3, 20.4939, true},
    {8, 8, 1, 22.5389, true},      {8, 8, 2, 27.4955, true},   {8, 8, 3, 29.4618, true},
    {8, 8, 4, 30.0, true},
    {9, 9, 1, 22.1108, false},     {9, 9, 2, 32.7755, false},  {9, 9, 3, 37.909, false},
    {9, 9, 4, 40.2092, false},
    {10, 10, 1, 31.4883, false},   {10, 10, 2, 46.8466, false},
    {10, 10, 3, 54.3568, false},   {10, 10, 4, 57.9142, false},
    {10, 10, 5, 59.329, false},
    {11, 11, 1, 44.7465, false},   {11, 11, 2, 66.7373, false},
    {11, 11, 3, 77.5852, false},   {11, 11, 4, 82.8611, false},
    {11, 11, 5, 85.2378, false},
    {12, 12, 1, 63.4941, false},   {12, 12, 2, 94.8609, false},
    {12, 12, 3, 110.4123, false},  {12, 12, 4, 118.0756, false},
    {12, 12, 5, 121.7194, false},  {12, 12, 6, 123.1735, false},
};

// Complete k-graphs. None of these rows are consistent with the construction
// (e.g. the triangle n = 3, k = 2 is maximally entangled across every single
// qubit cut, giving 4.0), so the whole table is informational.
inline constexpr ReferenceCell kCompleteK[] = {
    {3, 2, 1, 2.1723, false},
    {4, 2, 1, 3.3982, false},   {4, 2, 2, 4.5815, false},
    {4, 3, 1, 3.3982, false},   {4, 3, 2, 4.5815, false},
    {5, 2, 1, 5.0877, false},   {5, 2, 2, 7.1738, false},
    {5, 3, 1, 5.0877, false},   {5, 3, 2, 7.1738, false},
    {5, 4, 1, 5.0877, false},   {5, 4, 2, 7.1738, false},
    {6, 2, 1, 7.4521, false},   {6, 2, 2, 10.751, false},   {6, 2, 3, 12.0162, false},
    {6, 3, 1, 7.4521, false},   {6, 3, 2, 10.751, false},   {6, 3, 3, 12.0162, false},
    {6, 4, 1, 7.4521, false},   {6, 4, 2, 10.751, false},   {6, 4, 3, 12.0162, false},
    {6, 5, 1, 7.4521, false},   {6, 5, 2, 10.751, false},   {6, 5, 3, 12.0162, false},
    {7, 2, 1, 10.7802, false},  {7, 2, 2, 15.7611, false},  {7, 2, 3, 17.9526, false},
    {8, 2, 1, 15.4764, false},  {8, 2, 2, 22.8167, false},  {8, 2, 3, 26.2464, false},
    {8, 2, 4, 27.5979, false},
    {9, 2, 1, 22.1108, false},  {9, 2, 2, 32.7755, false},  {9, 2, 3, 37.909, false},
    {9, 2, 4, 40.2092, false},
    {10, 2, 1, 31.4883, false}, {10, 2, 2, 46.8466, false}, {10, 2, 3, 54.3568, false},
    {10, 2, 4, 57.9142, false}, {10, 2, 5, 59.329, false},
    {11, 2, 1, 44.7465, false}, {11, 2, 2, 66.7373, false}, {11, 2, 3, 77.5852, false},
    {11, 2, 4, 82.8611, false}, {11, 2, 5, 85.2378, false},
    {12, 2, 1, 63.4941, false}, {12, 2, 2, 94.8609, false}, {12, 2, 3, 110.4123, false},
    {12, 2, 4, 118.0756, false}, {12, 2, 5, 121.7194, false}, {12, 2, 6, 123.1735, false},
};

inline std::optional<ReferenceCell> lookup(std::span<const ReferenceCell> table, int n, int k,
                                           int cut_length) {
  for (const auto& c : table) {
    if (c.n == n && c.k == k && c.cut_length == cut_length) return c;
  }
  return std::nullopt;
}

}  // namespace hgs::tables
