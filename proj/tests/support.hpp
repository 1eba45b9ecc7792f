#pragma once

// Test-only helpers: random intersecting families and slow reference
// implementations that share no code with the library paths they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ifam/family.hpp"

namespace ifam::testing {

/// Random intersecting family: shuffle all k-sets, keep each one that meets
/// every set kept so far, stop at a random target size.
inline SetFamily random_intersecting(int n, int k, std::mt19937_64& rng) {
  auto all = all_subsets(n, k);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> target_dist(1, all.size());
  const std::size_t target = target_dist(rng);
  std::vector<Mask> kept;
  for (Mask s : all) {
    if (kept.size() >= target) break;
    bool ok = true;
    for (Mask m : kept) {
      if ((m & s) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(s);
  }
  return SetFamily::from_masks(n, k, std::move(kept));
}

/// Random family with no intersecting constraint.
inline SetFamily random_family(int n, int k, std::mt19937_64& rng) {
  std::vector<Mask> out;
  std::bernoulli_distribution keep(0.3);
  for (Mask s : all_subsets(n, k)) {
    if (keep(rng)) out.push_back(s);
  }
  return SetFamily::from_masks(n, k, std::move(out));
}

/// Coordinatewise dominance on sorted element lists: b ⪯ a.
inline bool dominated_by_lists(const std::vector<int>& b, const std::vector<int>& a) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (b[t] > a[t]) return false;
  }
  return true;
}

/// Type straight from the definition on element lists.
inline int reference_type(const std::vector<int>& s, int k) {
  for (int i = 0; i < k; ++i) {
    const int limit = 2 * k - i - 1;
    const auto hits = std::count_if(s.begin(), s.end(), [&](int e) { return e <= limit; });
    if (hits >= k - i) return i;
  }
  return -1;
}

/// Pascal's triangle in unsigned __int128, exact up to n = 127.
inline std::vector<std::vector<unsigned __int128>> pascal(int rows) {
  std::vector<std::vector<unsigned __int128>> t(static_cast<std::size_t>(rows) + 1);
  for (int r = 0; r <= rows; ++r) {
    auto& row = t[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c) {
      const auto& prev = t[static_cast<std::size_t>(r - 1)];
      row[static_cast<std::size_t>(c)] = prev[static_cast<std::size_t>(c - 1)] + prev[static_cast<std::size_t>(c)];
    }
  }
  return t;
}

}  // namespace ifam::testing
