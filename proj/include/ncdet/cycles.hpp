#pragma once

// Disjoint-cycle decompositions normalized around a distinguished index.
//
// Left-ordered (row determinants): the leader cycle comes first and starts
// with the leader; every other cycle starts with its minimal element and the
// cycles are sorted by that element. Right-ordered (column determinants) is
// the mirror: each cycle is rotated so that its closing element (leader or
// minimum) is written last. `cycles[0]` is always the leader cycle, which in
// right-ordered notation is the rightmost block.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ncdet/error.hpp"

namespace ncdet {

using Permutation = std::vector<std::size_t>;  // k -> perm[k], 0-based

enum class CycleOrder { left, right };

struct OrderedCycles {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t leader = 0;
  std::size_t n = 0;
  CycleOrder order = CycleOrder::left;

  std::size_t r() const { return cycles.size(); }
  /// (-1)^(n-r), the sign of the permutation.
  int sign() const { return ((n - r()) % 2 == 0) ? 1 : -1; }

  /// Display form with 1-based indices, blocks left to right.
  std::string to_string() const {
    std::string s;
    auto block = [&](const std::vector<std::size_t>& c) {
      s += "(";
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k)
          s += " ";
        s += std::to_string(c[k] + 1);
      }
      s += ")";
    };
    if (order == CycleOrder::left)
      for (const auto& c : cycles)
        block(c);
    else
      for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
        block(*it);
    return s;
  }
};

inline void validate_permutation(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t v : perm) {
    if (v >= perm.size() || seen[v])
      throw shape_error("not a permutation of {1.." + std::to_string(perm.size()) + "}");
    seen[v] = true;
  }
}

namespace detail {

/// Cycles following k -> perm[k], leader cycle first, others by ascending minimum.
inline std::vector<std::vector<std::size_t>> leader_first_cycles(const Permutation& perm, std::size_t leader) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> used(perm.size(), false);
  auto trace = [&](std::size_t start) {
    std::vector<std::size_t> c;
    std::size_t x = start;
    do {
      c.push_back(x);
      used[x] = true;
      x = perm[x];
    } while (x != start);
    out.push_back(std::move(c));
  };
  trace(leader);
  for (std::size_t m = 0; m < perm.size(); ++m)
    if (!used[m])
      trace(m);
  return out;
}

} // namespace detail

inline OrderedCycles left_ordered(const Permutation& perm, std::size_t leader) {
  validate_permutation(perm);
  if (leader >= perm.size())
    throw shape_error("leader index out of range");
  return OrderedCycles{detail::leader_first_cycles(perm, leader), leader, perm.size(), CycleOrder::left};
}

inline OrderedCycles right_ordered(const Permutation& perm, std::size_t leader) {
  OrderedCycles oc = left_ordered(perm, leader);
  for (auto& c : oc.cycles)
    std::rotate(c.begin(), c.begin() + 1, c.end());
  oc.order = CycleOrder::right;
  return oc;
}

} // namespace ncdet
