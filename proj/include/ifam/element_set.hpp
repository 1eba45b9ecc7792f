#pragma once

// ElementSet: a subset of [n] = {1..n} packed into one 64-bit word.
// Element e lives in bit (e - 1), so element 1 is the lowest bit.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifam {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

/// Bit for element `e` (1-based).
constexpr Mask bit(int e) noexcept { return Mask{1} << (e - 1); }

/// Mask of the initial segment [m] = {1..m}; m may be 0.
constexpr Mask prefix_mask(int m) noexcept {
  if (m <= 0) return 0;
  if (m >= kMaxGround) return ~Mask{0};
  return (Mask{1} << m) - 1;
}

/// Mask of the interval {lo..hi}; empty when lo > hi.
constexpr Mask range_mask(int lo, int hi) noexcept {
  if (lo > hi) return 0;
  return prefix_mask(hi) & ~prefix_mask(lo - 1);
}

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

/// Elements of a mask in increasing order.
inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

/// Next mask with the same popcount (Gosper's hack). Caller bounds the range.
constexpr Mask next_same_popcount(Mask m) noexcept {
  const Mask lowest = m & (~m + 1);
  const Mask ripple = m + lowest;
  return ripple | (((m ^ ripple) >> 2) / lowest);
}

/// Calls fn(mask) for every r-subset of [m], in ascending mask order.
template <typename Fn>
void for_each_subset(int m, int r, Fn&& fn) {
  if (r < 0 || r > m) return;
  if (r == 0) {
    fn(Mask{0});
    return;
  }
  const Mask last = prefix_mask(m) & ~prefix_mask(m - r);
  for (Mask s = prefix_mask(r);; s = next_same_popcount(s)) {
    fn(s);
    if (s == last) break;
  }
}

/// All r-subsets of [m] as masks, ascending.
inline std::vector<Mask> all_subsets(int m, int r) {
  std::vector<Mask> out;
  for_each_subset(m, r, [&](Mask s) { out.push_back(s); });
  return out;
}

/// A subset of [n] with a fixed ground size. The empty set is representable
/// (it appears as the tail of a type-0 projection); families require k >= 1.
class ElementSet {
 public:
  ElementSet() = default;

  /// Validating constructor from a mask.
  static ElementSet from_mask(int n, Mask mask) {
    check_ground(n);
    if ((mask & ~prefix_mask(n)) != 0) {
      throw std::invalid_argument("element set has bits outside [1," +
                                  std::to_string(n) + "]");
    }
    return ElementSet(n, mask);
  }

  /// Validating constructor from a strictly increasing element list.
  static ElementSet from_elements(int n, std::span<const int> elements) {
    check_ground(n);
    Mask mask = 0;
    int prev = 0;
    for (int e : elements) {
      if (e < 1 || e > n) {
        throw std::invalid_argument("element " + std::to_string(e) +
                                    " outside [1," + std::to_string(n) + "]");
      }
      if (e <= prev) {
        throw std::invalid_argument("elements must be strictly increasing");
      }
      prev = e;
      mask |= bit(e);
    }
    return ElementSet(n, mask);
  }

  static ElementSet from_elements(int n, std::initializer_list<int> elements) {
    return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
  }

  [[nodiscard]] Mask mask() const noexcept { return mask_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int k() const noexcept { return std::popcount(mask_); }
  [[nodiscard]] bool empty() const noexcept { return mask_ == 0; }
  [[nodiscard]] bool contains(int e) const noexcept {
    return e >= 1 && e <= n_ && (mask_ & bit(e)) != 0;
  }
  [[nodiscard]] bool intersects(const ElementSet& other) const noexcept {
    return (mask_ & other.mask_) != 0;
  }
  [[nodiscard]] std::vector<int> elements() const { return mask_elements(mask_); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.mask_ <=> b.mask_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  ElementSet(int n, Mask mask) : n_(n), mask_(mask) {}

  static void check_ground(int n) {
    if (n < 1 || n > kMaxGround) {
      throw std::invalid_argument("ground size " + std::to_string(n) +
                                  " outside [1," + std::to_string(kMaxGround) + "]");
    }
  }

  int n_ = 1;
  Mask mask_ = 0;
};

/// "{1,2,3}" rendering.
inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  return os << to_string(s);
}

/// Mask-level dominance: true iff b ⪯ a, i.e. the t-th smallest element of b
/// is at most the t-th smallest element of a for every t. Sizes must match.
constexpr bool mask_dominated_by(Mask b, Mask a) noexcept {
  // b ⪯ a  iff  |b ∩ [x]| >= |a ∩ [x]| for every prefix [x].
  int balance = 0;
  for (Mask both = a | b; both != 0; both &= both - 1) {
    const Mask low = both & (~both + 1);
    if (b & low) ++balance;
    if (a & low) --balance;
    if (balance < 0) return false;
  }
  return balance == 0;
}

/// True iff B ⪯ A (coordinatewise on the sorted element lists).
inline bool dominates(const ElementSet& a, const ElementSet& b) {
  if (a.k() != b.k()) {
    throw std::invalid_argument("dominates: sets of different sizes " +
                                to_string(a) + " and " + to_string(b));
  }
  return mask_dominated_by(b.mask(), a.mask());
}

}  // namespace ifam
