#pragma once

// Independent reference implementations used by several test files. They
// trade speed for obviousness and share no code with the library beyond the
// data types.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "polyspace/combinatorics.hpp"

namespace oracle {

using polyspace::SubsetMask;

// Tries every order preserving injection J1 -> J2.
inline bool poset_leq(SubsetMask j1, SubsetMask j2) {
  const std::vector<int> a = j1.indices();
  const std::vector<int> b = j2.indices();
  std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t from) {
    if (i == a.size()) return true;
    for (std::size_t k = from; k < b.size(); ++k) {
      if (a[i] <= b[k] && place(i + 1, k + 1)) return true;
    }
    return false;
  };
  return place(0, 0);
}

// Short sets straight from the definition, on integer lengths.
inline std::vector<SubsetMask> short_family(const std::vector<int>& ell) {
  const int n = static_cast<int>(ell.size());
  int total = 0;
  for (int x : ell) total += x;
  std::vector<SubsetMask> out;
  for (std::uint32_t bits = 0; bits < (1U << (n - 1)); ++bits) {
    int sum = ell[static_cast<std::size_t>(n - 1)];
    for (int i = 0; i < n - 1; ++i) {
      if (bits >> i & 1U) sum += ell[static_cast<std::size_t>(i)];
    }
    if (2 * sum < total) out.push_back(SubsetMask(bits << 1));
  }
  std::sort(out.begin(), out.end(), polyspace::canonical_less);
  return out;
}

// Every ordered integer vector with entries in 1..max_entry and odd total,
// reduced to its short family. Odd totals keep all vectors generic.
inline std::set<std::vector<std::uint32_t>> sampled_chambers(int n, int max_entry) {
  std::set<std::vector<std::uint32_t>> found;
  std::vector<int> ell(static_cast<std::size_t>(n), 1);
  std::function<void(int, int)> fill = [&](int pos, int lo) {
    if (pos == n) {
      int total = 0;
      for (int x : ell) total += x;
      if (total % 2 == 0) return;
      std::vector<std::uint32_t> key;
      for (SubsetMask m : short_family(ell)) key.push_back(m.bits());
      found.insert(key);
      return;
    }
    for (int v = lo; v <= max_entry; ++v) {
      ell[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1, v);
    }
  };
  fill(0, 1);
  return found;
}

}  // namespace oracle
