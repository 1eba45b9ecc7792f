#pragma once

// Canonical type partition of a shifted intersecting family.
//
// A k-set S has type i when i is the smallest index in [0, k-1] with
// |S ∩ [2k-i-1]| >= k-i. For such S the head π_i(S) = S ∩ [2k-i-1] has
// exactly k-i elements, 2k-i is not in S, and the tail ψ_i(S) lies in
// [2k-i+1, n]. Inside a shifted intersecting family every member has a type;
// a set without one is dominated by a disjoint set, which certifies that the
// family cannot be both shifted and intersecting.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ifam/binomial.hpp"
#include "ifam/element_set.hpp"
#include "ifam/family.hpp"

namespace ifam {

/// Mask-level type index; k is the uniformity of the containing family.
inline std::optional<int> mask_type(Mask s, int k) noexcept {
  for (int i = 0; i < k; ++i) {
    if (popcount(s & prefix_mask(2 * k - i - 1)) >= k - i) return i;
  }
  return std::nullopt;
}

/// Type of a k-set, or nullopt when it has none.
inline std::optional<int> type_of(const ElementSet& s, int k) {
  if (s.k() != k) {
    throw std::invalid_argument("type_of: " + to_string(s) + " is not a " + std::to_string(k) +
                                "-set");
  }
  return mask_type(s.mask(), k);
}

/// The first k integers not in s.
inline Mask first_k_outside(Mask s, int k) noexcept {
  Mask t = 0;
  for (int e = 1, taken = 0; taken < k; ++e) {
    if (!(s & bit(e))) {
      t |= bit(e);
      ++taken;
    }
  }
  return t;
}

/// For a typeless set S, the first k integers outside S (a disjoint set
/// dominated by S). Returns nullopt when S has a type. Requires n >= 2k.
inline std::optional<ElementSet> find_disjoint_dominated(const ElementSet& s, int k) {
  if (s.k() != k) throw std::invalid_argument("find_disjoint_dominated: size mismatch");
  if (s.n() < 2 * k) throw std::invalid_argument("find_disjoint_dominated requires n >= 2k");
  if (mask_type(s.mask(), k)) return std::nullopt;
  return ElementSet::from_mask(s.n(), first_k_outside(s.mask(), k));
}

/// Head and tail of a set of type i.
struct Projection {
  ElementSet head;  // π_i(S) = S ∩ [2k-i-1], k-i elements
  ElementSet tail;  // ψ_i(S) = S \ [2k-i-1], i elements in [2k-i+1, n]
};

inline Projection project(const ElementSet& s, int i) {
  const int k = s.k();
  const auto t = mask_type(s.mask(), k);
  if (!t || *t != i) {
    throw std::invalid_argument("project: " + to_string(s) + " does not have type " +
                                std::to_string(i));
  }
  const Mask head = s.mask() & prefix_mask(2 * k - i - 1);
  return Projection{ElementSet::from_mask(s.n(), head),
                    ElementSet::from_mask(s.n(), s.mask() & ~head)};
}

/// Raised when a family cannot be partitioned. `witness` is a member without
/// a type, a member whose shift image is missing, or one of a disjoint pair.
class PartitionError : public std::runtime_error {
 public:
  enum class Reason { kTypeless, kNotShifted, kNotIntersecting };

  PartitionError(Reason reason, ElementSet witness, std::string what)
      : std::runtime_error(std::move(what)), reason_(reason), witness_(witness) {}

  [[nodiscard]] Reason reason() const noexcept { return reason_; }
  [[nodiscard]] const ElementSet& witness() const noexcept { return witness_; }

 private:
  Reason reason_;
  ElementSet witness_;
};

struct TypePartition {
  SetFamily source;
  /// classes[i] = members of type i, as k-sets of [n].
  std::vector<SetFamily> classes;
  /// projections[i] = π_i(F_i), a (k-i)-uniform family on [2k-i-1].
  std::vector<SetFamily> projections;
};

/// Splits a shifted intersecting family into its type classes.
inline TypePartition partition(const SetFamily& f) {
  const int n = f.n();
  const int k = f.k();
  std::vector<std::vector<Mask>> members(static_cast<std::size_t>(k));
  std::vector<std::vector<Mask>> heads(static_cast<std::size_t>(k));
  for (Mask s : f.masks()) {
    const auto t = mask_type(s, k);
    if (!t) {
      const auto w = ElementSet::from_mask(n, s);
      throw PartitionError(PartitionError::Reason::kTypeless, w,
                           "member " + to_string(w) + " has no type");
    }
    members[static_cast<std::size_t>(*t)].push_back(s);
    heads[static_cast<std::size_t>(*t)].push_back(s & prefix_mask(2 * k - *t - 1));
  }
  if (auto v = find_shift_violation(f.masks(), n)) {
    throw PartitionError(PartitionError::Reason::kNotShifted, ElementSet::from_mask(n, v->member),
                         "family is not shifted: " + to_string(ElementSet::from_mask(n, v->member)) +
                             " present but " + to_string(ElementSet::from_mask(n, v->missing)) +
                             " missing");
  }
  if (auto pair = find_disjoint_pair(f.masks())) {
    const auto a = ElementSet::from_mask(n, pair->first);
    const auto b = ElementSet::from_mask(n, pair->second);
    throw PartitionError(PartitionError::Reason::kNotIntersecting, a,
                         "family is not intersecting: " + to_string(a) + " and " + to_string(b) +
                             " are disjoint");
  }

  TypePartition out{f, {}, {}};
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out.classes.push_back(SetFamily::from_masks(n, k, std::move(members[idx])));
    out.projections.push_back(SetFamily::from_masks(2 * k - i - 1, k - i, std::move(heads[idx])));
  }
  return out;
}

/// Maps every type-i member S to π_i(S) ∪ {2k-i+1..2k}, an intersecting
/// k-uniform family on [2k] with one member per distinct projection.
inline SetFamily compress_to_2k(const SetFamily& f) {
  const int k = f.k();
  if (f.n() < 2 * k) throw std::invalid_argument("compress_to_2k requires n >= 2k");
  const auto part = partition(f);
  std::vector<Mask> out;
  std::size_t expected = 0;
  for (int i = 0; i < k; ++i) {
    const auto& proj = part.projections[static_cast<std::size_t>(i)];
    expected += proj.size();
    const Mask top = range_mask(2 * k - i + 1, 2 * k);
    for (Mask head : proj.masks()) out.push_back(head | top);
  }
  auto result = SetFamily::from_masks(2 * k, k, std::move(out));
  if (result.size() != expected) {
    throw std::logic_error("compress_to_2k: " + std::to_string(expected) +
                           " projections collapsed to " + std::to_string(result.size()) +
                           " sets");
  }
  return result;
}

/// Per-type row of the counting chain
///   |F_i| <= |π_i(F_i)| C(n-2k+i, i) <= C(2k-i-2, k-i-1) C(n-2k+i, i).
struct TypeBound {
  int type = 0;
  Integer member_count;                   // |F_i|
  Integer projected_count;                // |π_i(F_i)|
  std::optional<Integer> projected_cap;   // C(2k-i-2, k-i-1); absent for type 0
  Integer member_cap;                     // |π_i(F_i)| C(n-2k+i, i)
  std::optional<Integer> full_cap;        // C(2k-i-2, k-i-1) C(n-2k+i, i); absent for type 0
  bool member_ok = false;
  bool projected_ok = false;
  bool full_ok = false;
};

struct BoundsReport {
  int n = 0;
  int k = 0;
  std::vector<TypeBound> rows;
  Integer projected_sum;  // Σ |π_i(F_i)|
  Integer sum_cap;        // C(2k-1, k-1)
  bool sum_ok = false;

  [[nodiscard]] bool all_ok() const {
    if (!sum_ok) return false;
    for (const auto& r : rows) {
      if (!r.member_ok || !r.projected_ok || !r.full_ok) return false;
    }
    return true;
  }
};

inline BoundsReport type_bounds_report(const SetFamily& f) {
  const int n = f.n();
  const int k = f.k();
  if (n < 2 * k) throw std::invalid_argument("type_bounds_report requires n >= 2k");
  const auto part = partition(f);
  BoundsReport rep;
  rep.n = n;
  rep.k = k;
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    TypeBound row;
    row.type = i;
    row.member_count = part.classes[idx].size();
    row.projected_count = part.projections[idx].size();
    const Integer tails = binom(n - 2 * k + i, i);
    row.member_cap = row.projected_count * tails;
    row.member_ok = row.member_count <= row.member_cap;
    if (i == 0) {
      row.projected_ok = true;
      row.full_ok = true;
    } else {
      row.projected_cap = binom(2 * k - i - 2, k - i - 1);
      row.full_cap = *row.projected_cap * tails;
      row.projected_ok = row.projected_count <= *row.projected_cap;
      row.full_ok = row.member_count <= *row.full_cap;
    }
    rep.projected_sum += row.projected_count;
    rep.rows.push_back(std::move(row));
  }
  rep.sum_cap = binom(2 * k - 1, k - 1);
  rep.sum_ok = rep.projected_sum <= rep.sum_cap;
  return rep;
}

}  // namespace ifam
