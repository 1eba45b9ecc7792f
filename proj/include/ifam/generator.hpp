#pragma once

// Generator encoding of maximal shifted intersecting families.
//
// A maximal shifted intersecting family F on [n] contains, with every member
// A of type i, the whole slot S_i(π_i(A)): every k-set B with
// B ∩ [2k-i-1] = π_i(A), 2k-i ∉ B and the other i elements taken from
// {2k-i+1..n}. F is therefore the union of slots over the generator
// G = ∪ G_i, G_i = π_i(F_i), which lives on [2k-1] and does not depend on n.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ifam/element_set.hpp"
#include "ifam/family.hpp"
#include "ifam/limits.hpp"
#include "ifam/partition.hpp"

namespace ifam {

/// Level-structured system over [2k-1]; level i holds (k-i)-subsets of [2k-i-1].
class Generator {
 public:
  Generator() = default;

  /// Checks the level shapes only. Intersecting and shifted are properties
  /// of the union, tested by generator_is_intersecting / generator_is_shifted.
  static Generator from_levels(int k, std::vector<SetFamily> levels) {
    if (k < 1 || 2 * k - 1 > kMaxGround) throw std::invalid_argument("generator: bad k");
    if (levels.size() != static_cast<std::size_t>(k)) {
      throw std::invalid_argument("generator: expected " + std::to_string(k) + " levels, got " +
                                  std::to_string(levels.size()));
    }
    for (int i = 0; i < k; ++i) {
      const auto& lvl = levels[static_cast<std::size_t>(i)];
      if (lvl.n() != 2 * k - i - 1 || lvl.k() != k - i) {
        throw std::invalid_argument("generator: level " + std::to_string(i) + " must hold " +
                                    std::to_string(k - i) + "-subsets of [" +
                                    std::to_string(2 * k - i - 1) + "]");
      }
    }
    return Generator(k, std::move(levels));
  }

  /// Same, from raw element lists per level.
  static Generator from_lists(int k, const std::vector<std::vector<std::vector<int>>>& levels) {
    if (levels.size() != static_cast<std::size_t>(k)) {
      throw std::invalid_argument("generator: expected " + std::to_string(k) + " levels");
    }
    std::vector<SetFamily> fams;
    for (int i = 0; i < k; ++i) {
      fams.push_back(make_family(2 * k - i - 1, k - i, levels[static_cast<std::size_t>(i)]));
    }
    return from_levels(k, std::move(fams));
  }

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<SetFamily>& levels() const noexcept { return levels_; }
  [[nodiscard]] const SetFamily& level(int i) const { return levels_.at(static_cast<std::size_t>(i)); }

  /// Every level set as a mask on [2k-1], sorted.
  [[nodiscard]] std::vector<Mask> union_masks() const {
    std::vector<Mask> out;
    for (const auto& lvl : levels_) out.insert(out.end(), lvl.masks().begin(), lvl.masks().end());
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] std::size_t total_size() const noexcept {
    std::size_t s = 0;
    for (const auto& lvl : levels_) s += lvl.size();
    return s;
  }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.levels_.begin(), a.levels_.end(),
                                                  b.levels_.begin(), b.levels_.end());
  }

 private:
  Generator(int k, std::vector<SetFamily> levels) : k_(k), levels_(std::move(levels)) {}

  int k_ = 1;
  std::vector<SetFamily> levels_;
};

inline bool generator_is_intersecting(const Generator& g) {
  const auto u = g.union_masks();
  return masks_intersecting(u);
}

/// Shiftedness of the mixed-size union on [2k-1].
inline bool generator_is_shifted(const Generator& g) {
  const auto u = g.union_masks();
  return !find_shift_violation(u, 2 * g.k() - 1).has_value();
}

namespace detail {

inline void check_slot_args(Mask head, int i, int n, int k) {
  if (k < 1 || i < 0 || i >= k) throw std::invalid_argument("expand_slot: level out of range");
  if (n < 2 * k || n > kMaxGround) throw std::invalid_argument("expand_slot requires 2k <= n <= 64");
  if (popcount(head) != k - i || (head & ~prefix_mask(2 * k - i - 1)) != 0) {
    throw std::invalid_argument("expand_slot: head must be a " + std::to_string(k - i) +
                                "-subset of [" + std::to_string(2 * k - i - 1) + "]");
  }
}

/// Appends every member of S_i(head) to out, tails in ascending mask order.
inline void append_slot(Mask head, int i, int n, int k, std::vector<Mask>& out) {
  const int offset = 2 * k - i;  // tails live in {offset+1..n}
  for_each_subset(n - offset, i, [&](Mask tail) { out.push_back(head | (tail << offset)); });
}

}  // namespace detail

/// The slot S_i(head): all k-sets of [n] whose type-i head is `head`.
/// Has C(n-2k+i, i) members.
inline std::vector<ElementSet> expand_slot(const ElementSet& head, int i, int n, int k) {
  detail::check_slot_args(head.mask(), i, n, k);
  std::vector<Mask> masks;
  detail::append_slot(head.mask(), i, n, k, masks);
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(ElementSet::from_mask(n, m));
  return out;
}

/// Union of all slots of a shifted intersecting generator.
inline SetFamily family_from_generator(const Generator& g, int n) {
  const int k = g.k();
  if (n < 2 * k || n > kMaxGround) {
    throw std::invalid_argument("family_from_generator requires 2k <= n <= 64");
  }
  const auto u = g.union_masks();
  if (auto pair = find_disjoint_pair(u)) {
    throw std::invalid_argument(
        "generator is not intersecting: " + to_string(ElementSet::from_mask(2 * k - 1, pair->first)) +
        " and " + to_string(ElementSet::from_mask(2 * k - 1, pair->second)));
  }
  if (auto v = find_shift_violation(u, 2 * k - 1)) {
    throw std::invalid_argument("generator is not shifted: missing " +
                                to_string(ElementSet::from_mask(2 * k - 1, v->missing)));
  }
  std::vector<Mask> out;
  for (int i = 0; i < k; ++i) {
    for (Mask head : g.level(i).masks()) detail::append_slot(head, i, n, k, out);
  }
  return SetFamily::from_masks(n, k, std::move(out));
}

/// G_i = π_i(F_i) from the canonical partition.
inline Generator generator_from_family(const SetFamily& f) {
  auto part = partition(f);
  return Generator::from_levels(f.k(), std::move(part.projections));
}

struct GeneratorCheck {
  bool valid = false;
  std::string reason;
  /// For a non-maximal expansion, a k-set of [n] that could be added.
  std::optional<ElementSet> witness;
};

/// A generator is valid at n when its expansion is intersecting, shifted and
/// maximal among intersecting k-uniform families on [n].
inline GeneratorCheck is_valid_generator(const Generator& g, int n) {
  SetFamily f;
  try {
    f = family_from_generator(g, n);
  } catch (const std::invalid_argument& e) {
    return {false, e.what(), std::nullopt};
  }
  if (auto pair = find_disjoint_pair(f.masks())) {
    return {false, "expansion is not intersecting", ElementSet::from_mask(n, pair->first)};
  }
  if (auto v = find_shift_violation(f.masks(), n)) {
    return {false, "expansion is not shifted", ElementSet::from_mask(n, v->missing)};
  }
  if (auto x = find_addable_set(f)) {
    return {false, "expansion is not maximal", ElementSet::from_mask(n, *x)};
  }
  return {true, {}, std::nullopt};
}

namespace detail {

// Depth-first search over generator candidates, level-major then ascending
// mask. Each candidate A at level i stands for the k-set
// X_A = A ∪ {2k-i+1..2k} of [2k]. Constraints kept incrementally:
//  - included heads pairwise intersect;
//  - a head is included only if all its single-swap shift images are;
//  - X_A and [2k] \ X_A cannot both be absent (a maximal shifted family
//    meets every complementary pair of k-subsets of [2k]).
class GeneratorSearch {
 public:
  explicit GeneratorSearch(int k) : k_(k) {
    std::map<std::pair<int, Mask>, int> index;
    for (int i = 0; i < k; ++i) {
      for (Mask m : all_subsets(2 * k - i - 1, k - i)) {
        index[{i, m}] = static_cast<int>(cands_.size());
        cands_.push_back({i, m, -1, {}});
      }
    }
    const Mask ground = prefix_mask(2 * k);
    for (auto& c : cands_) {
      const Mask x = c.head | range_mask(2 * k - c.level + 1, 2 * k);
      const Mask comp = ground & ~x;
      if (auto t = mask_type(comp, k)) {
        c.partner = index.at({*t, comp & prefix_mask(2 * k - *t - 1)});
      }
      for (int hi = 2; hi <= 2 * k - c.level - 1; ++hi) {
        if (!(c.head & bit(hi))) continue;
        for (int lo = 1; lo < hi; ++lo) {
          if (c.head & bit(lo)) continue;
          c.preds.push_back(index.at({c.level, (c.head & ~bit(hi)) | bit(lo)}));
        }
      }
    }
    state_.assign(cands_.size(), kUndecided);
  }

  std::vector<Generator> run() {
    results_.clear();
    visit(0);
    return std::move(results_);
  }

  [[nodiscard]] std::size_t candidate_count() const noexcept { return cands_.size(); }

 private:
  static constexpr signed char kUndecided = -1;
  static constexpr signed char kOut = 0;
  static constexpr signed char kIn = 1;

  struct Candidate {
    int level;
    Mask head;
    int partner;  // -1 when the complement has no type
    std::vector<int> preds;
  };

  void visit(std::size_t idx) {
    if (idx == cands_.size()) {
      emit();
      return;
    }
    const auto& c = cands_[idx];
    if (can_include(c)) {
      state_[idx] = kIn;
      included_.push_back(c.head);
      visit(idx + 1);
      included_.pop_back();
    }
    if (c.partner >= 0 && state_[static_cast<std::size_t>(c.partner)] != kOut) {
      state_[idx] = kOut;
      visit(idx + 1);
    }
    state_[idx] = kUndecided;
  }

  bool can_include(const Candidate& c) const {
    for (int p : c.preds) {
      if (state_[static_cast<std::size_t>(p)] != kIn) return false;
    }
    for (Mask m : included_) {
      if ((m & c.head) == 0) return false;
    }
    return true;
  }

  void emit() {
    std::vector<std::vector<Mask>> lv(static_cast<std::size_t>(k_));
    for (std::size_t j = 0; j < cands_.size(); ++j) {
      if (state_[j] == kIn) lv[static_cast<std::size_t>(cands_[j].level)].push_back(cands_[j].head);
    }
    std::vector<SetFamily> fams;
    for (int i = 0; i < k_; ++i) {
      fams.push_back(SetFamily::from_masks(2 * k_ - i - 1, k_ - i, std::move(lv[static_cast<std::size_t>(i)])));
    }
    results_.push_back(Generator::from_levels(k_, std::move(fams)));
  }

  int k_;
  std::vector<Candidate> cands_;
  std::vector<signed char> state_;
  std::vector<Mask> included_;
  std::vector<Generator> results_;
};

inline void check_enumeration_scale(int n, int k) {
  if (k < 1 || k > kMaxGeneratorK) {
    throw ScaleError("generator enumeration supports 1 <= k <= " + std::to_string(kMaxGeneratorK) +
                     ", got k=" + std::to_string(k));
  }
  if (n < 2 * k || n > kMaxEnumerationN) {
    throw ScaleError("enumeration supports 2k <= n <= " + std::to_string(kMaxEnumerationN) +
                     ", got n=" + std::to_string(n));
  }
}

}  // namespace detail

/// All valid generators for k at ground size n, canonically ordered.
inline std::vector<Generator> enumerate_generators(int k, int n) {
  detail::check_enumeration_scale(n, k);
  auto candidates = detail::GeneratorSearch(k).run();
  std::vector<Generator> out;
  for (auto& g : candidates) {
    if (is_valid_generator(g, n).valid) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All maximal shifted intersecting k-uniform families on [n], canonically ordered.
inline std::vector<SetFamily> enumerate_maximal_shifted(int n, int k) {
  std::vector<SetFamily> out;
  for (const auto& g : enumerate_generators(k, n)) out.push_back(family_from_generator(g, n));
  std::sort(out.begin(), out.end());
  return out;
}

struct Lemma7Check {
  bool passed = true;
  /// A slot member missing from the family, or a member without a type.
  std::optional<ElementSet> witness;
};

/// Every member A of type i must bring its whole slot S_i(π_i(A)) along.
inline Lemma7Check check_lemma7(const SetFamily& f) {
  const int n = f.n();
  const int k = f.k();
  if (n < 2 * k) throw std::invalid_argument("check_lemma7 requires n >= 2k");
  std::vector<Mask> slot;
  for (Mask a : f.masks()) {
    const auto t = mask_type(a, k);
    if (!t) return {false, ElementSet::from_mask(n, a)};
    slot.clear();
    detail::append_slot(a & prefix_mask(2 * k - *t - 1), *t, n, k, slot);
    for (Mask b : slot) {
      if (!f.contains(b)) return {false, ElementSet::from_mask(n, b)};
    }
  }
  return {};
}

}  // namespace ifam
