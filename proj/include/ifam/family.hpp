#pragma once

// k-uniform set families on [n]: construction, the intersecting test,
// (i,j)-shifts and their closure, and the named extremal families.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ifam/element_set.hpp"

namespace ifam {

/// A deduplicated k-uniform family on [n], members sorted by mask value.
class SetFamily {
 public:
  SetFamily() = default;

  /// Validates every mask, sorts and collapses duplicates.
  static SetFamily from_masks(int n, int k, std::vector<Mask> masks) {
    check_params(n, k);
    const Mask ground = prefix_mask(n);
    for (Mask m : masks) {
      if ((m & ~ground) != 0 || popcount(m) != k) {
        throw std::invalid_argument("mask " + to_string(ElementSet::from_mask(kMaxGround, m)) +
                                    " is not a " + std::to_string(k) + "-subset of [" +
                                    std::to_string(n) + "]");
      }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return SetFamily(n, k, std::move(masks));
  }

  static SetFamily from_sets(int n, int k, std::span<const ElementSet> sets) {
    std::vector<Mask> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(s.mask());
    return from_masks(n, k, std::move(masks));
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
  [[nodiscard]] bool empty() const noexcept { return masks_.empty(); }
  [[nodiscard]] std::span<const Mask> masks() const noexcept { return masks_; }

  [[nodiscard]] ElementSet operator[](std::size_t idx) const {
    return ElementSet::from_mask(n_, masks_[idx]);
  }
  [[nodiscard]] std::vector<ElementSet> members() const {
    std::vector<ElementSet> out;
    out.reserve(masks_.size());
    for (Mask m : masks_) out.push_back(ElementSet::from_mask(n_, m));
    return out;
  }

  [[nodiscard]] bool contains(Mask m) const noexcept {
    return std::binary_search(masks_.begin(), masks_.end(), m);
  }
  [[nodiscard]] bool contains(const ElementSet& s) const noexcept { return contains(s.mask()); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
  friend auto operator<=>(const SetFamily& a, const SetFamily& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.masks_.begin(), a.masks_.end(),
                                                  b.masks_.begin(), b.masks_.end());
  }

 private:
  SetFamily(int n, int k, std::vector<Mask> masks) : n_(n), k_(k), masks_(std::move(masks)) {}

  static void check_params(int n, int k) {
    if (n < 1 || n > kMaxGround) {
      throw std::invalid_argument("ground size n=" + std::to_string(n) + " outside [1," +
                                  std::to_string(kMaxGround) + "]");
    }
    if (k < 1 || k > n) {
      throw std::invalid_argument("uniformity k=" + std::to_string(k) + " outside [1," +
                                  std::to_string(n) + "]");
    }
  }

  int n_ = 1;
  int k_ = 1;
  std::vector<Mask> masks_;
};

/// Builds a family from 1-based element lists. Each list must be strictly
/// increasing, inside [1,n], and of length k.
inline SetFamily make_family(int n, int k, const std::vector<std::vector<int>>& sets) {
  if (n < 1 || n > kMaxGround) {
    throw std::invalid_argument("ground size n=" + std::to_string(n) + " outside [1," +
                                std::to_string(kMaxGround) + "]");
  }
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& list : sets) {
    std::vector<int> sorted = list;
    // Lists are sets; order of entry does not matter, repeats do.
    std::sort(sorted.begin(), sorted.end());
    const auto s = ElementSet::from_elements(n, sorted);
    if (s.k() != k) {
      throw std::invalid_argument("set " + to_string(s) + " has " + std::to_string(s.k()) +
                                  " elements, expected " + std::to_string(k));
    }
    masks.push_back(s.mask());
  }
  return SetFamily::from_masks(n, k, std::move(masks));
}

/// Mask-level intersecting test over an arbitrary list of masks.
inline bool masks_intersecting(std::span<const Mask> masks) noexcept {
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = a + 1; b < masks.size(); ++b) {
      if ((masks[a] & masks[b]) == 0) return false;
    }
  }
  return true;
}

/// A disjoint pair if one exists.
inline std::optional<std::pair<Mask, Mask>> find_disjoint_pair(std::span<const Mask> masks) {
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = a + 1; b < masks.size(); ++b) {
      if ((masks[a] & masks[b]) == 0) return std::pair{masks[a], masks[b]};
    }
  }
  return std::nullopt;
}

inline bool is_intersecting(const SetFamily& f) noexcept { return masks_intersecting(f.masks()); }

/// The (i,j)-shift: every member S with j ∈ S, i ∉ S becomes S - j + i unless
/// that set is already a member.
inline SetFamily ij_shift(const SetFamily& f, int i, int j) {
  if (!(1 <= i && i < j && j <= f.n())) {
    throw std::invalid_argument("ij_shift requires 1 <= i < j <= n, got (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
  }
  std::vector<Mask> out;
  out.reserve(f.size());
  const Mask bi = bit(i);
  const Mask bj = bit(j);
  for (Mask s : f.masks()) {
    if ((s & bj) && !(s & bi)) {
      const Mask moved = (s & ~bj) | bi;
      out.push_back(f.contains(moved) ? s : moved);
    } else {
      out.push_back(s);
    }
  }
  return SetFamily::from_masks(f.n(), f.k(), std::move(out));
}

/// First (i,j) with i < j and a member S, j ∈ S, i ∉ S whose shift image is
/// missing. Works on any mask list, uniform or not.
struct ShiftViolation {
  Mask member;
  Mask missing;
};

inline std::optional<ShiftViolation> find_shift_violation(std::span<const Mask> sorted_masks,
                                                          int n) {
  for (Mask s : sorted_masks) {
    for (int j = 2; j <= n; ++j) {
      if (!(s & bit(j))) continue;
      for (int i = 1; i < j; ++i) {
        if (s & bit(i)) continue;
        const Mask moved = (s & ~bit(j)) | bit(i);
        if (!std::binary_search(sorted_masks.begin(), sorted_masks.end(), moved)) {
          return ShiftViolation{s, moved};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_shifted(const SetFamily& f) {
  return !find_shift_violation(f.masks(), f.n()).has_value();
}

/// Repeated lexicographic sweeps of (i,j)-shifts until a sweep changes nothing.
inline SetFamily shift_closure(const SetFamily& f) {
  SetFamily cur = f;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i <= f.n(); ++i) {
      for (int j = i + 1; j <= f.n(); ++j) {
        SetFamily next = ij_shift(cur, i, j);
        if (next != cur) {
          changed = true;
          cur = std::move(next);
        }
      }
    }
  }
  return cur;
}

/// Smallest element in every member, if any. Empty families are rejected.
inline std::optional<int> common_element(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("common_element: empty family");
  Mask core = prefix_mask(f.n());
  for (Mask s : f.masks()) core &= s;
  if (core == 0) return std::nullopt;
  return std::countr_zero(core) + 1;
}

/// True iff no k-set of [n] outside f meets every member of f.
/// Returns the first addable set otherwise.
inline std::optional<Mask> find_addable_set(const SetFamily& f) {
  std::optional<Mask> found;
  for_each_subset(f.n(), f.k(), [&](Mask x) {
    if (found || f.contains(x)) return;
    for (Mask m : f.masks()) {
      if ((m & x) == 0) return;
    }
    found = x;
  });
  return found;
}

inline bool is_maximal_intersecting(const SetFamily& f) {
  return is_intersecting(f) && !find_addable_set(f).has_value();
}

// --- named families -------------------------------------------------------

/// All k-sets containing 1. Requires n >= 2k.
inline SetFamily star(int n, int k) {
  if (k < 1 || n < 2 * k || n > kMaxGround) {
    throw std::invalid_argument("star requires 1 <= k and 2k <= n <= 64");
  }
  std::vector<Mask> out;
  for_each_subset(n, k, [&](Mask s) {
    if (s & bit(1)) out.push_back(s);
  });
  return SetFamily::from_masks(n, k, std::move(out));
}

/// All k-sets containing 1 and meeting {2..k+1}, plus {2..k+1}.
/// Requires k >= 2 and n >= 2k.
inline SetFamily hilton_milner(int n, int k) {
  if (k < 2 || n < 2 * k || n > kMaxGround) {
    throw std::invalid_argument("hm requires 2 <= k and 2k <= n <= 64");
  }
  const Mask block = range_mask(2, k + 1);
  std::vector<Mask> out{block};
  for_each_subset(n, k, [&](Mask s) {
    if ((s & bit(1)) && (s & block)) out.push_back(s);
  });
  return SetFamily::from_masks(n, k, std::move(out));
}

/// All 3-sets meeting {1,2,3} in at least two elements.
inline SetFamily k3_special(int n) {
  if (n < 3 || n > kMaxGround) throw std::invalid_argument("k3-special requires 3 <= n <= 64");
  const Mask head = prefix_mask(3);
  std::vector<Mask> out;
  for_each_subset(n, 3, [&](Mask s) {
    if (popcount(s & head) >= 2) out.push_back(s);
  });
  return SetFamily::from_masks(n, 3, std::move(out));
}

/// Every k-subset of [n].
inline SetFamily full_level(int n, int k) {
  if (n < 1 || n > kMaxGround || k < 1 || k > n) {
    throw std::invalid_argument("full-level requires 1 <= k <= n <= 64");
  }
  return SetFamily::from_masks(n, k, all_subsets(n, k));
}

/// Dispatch by name: star | hm | k3-special | full-level.
inline SetFamily make_named_family(std::string_view name, int n, int k) {
  if (name == "star") return star(n, k);
  if (name == "hm") return hilton_milner(n, k);
  if (name == "k3-special") {
    if (k != 3) throw std::invalid_argument("k3-special requires k = 3");
    return k3_special(n);
  }
  if (name == "full-level") return full_level(n, k);
  throw std::invalid_argument("unknown family name '" + std::string(name) + "'");
}

}  // namespace ifam
