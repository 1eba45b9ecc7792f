#pragma once

// Exact binomial identities behind the counting proofs, and desk-scale
// verification of the Erdős–Ko–Rado and Hilton–Milner bounds by exhaustive
// enumeration of maximal shifted families.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ifam/binomial.hpp"
#include "ifam/element_set.hpp"
#include "ifam/family.hpp"
#include "ifam/generator.hpp"
#include "ifam/partition.hpp"

namespace ifam {

/// C(n-1, k-1). Requires n >= 2k >= 2.
inline Integer ekr_bound(int n, int k) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("ekr_bound requires n >= 2k >= 2");
  return binom(n - 1, k - 1);
}

/// C(n-1, k-1) - C(n-k-1, k-1) + 1. Requires n > 2k, k >= 2.
inline Integer hm_bound(int n, int k) {
  if (k < 2 || n <= 2 * k) throw std::invalid_argument("hm_bound requires n > 2k >= 4");
  return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
}

struct IdentityResult {
  bool passed = false;
  Integer lhs;
  Integer rhs;
  /// Only for the product identity when the subset classification ran.
  std::optional<bool> classification_passed;
  std::vector<Integer> summands;
  std::vector<Integer> class_sizes;
};

/// C(2k-2, k-1) + Σ_{i=1}^{k-1} C(2k-i-2, k-1) = C(2k-1, k-1).
inline IdentityResult identity_star(int k) {
  if (k < 1) throw std::invalid_argument("identity_star requires k >= 1");
  IdentityResult r;
  r.lhs = binom(2 * k - 2, k - 1);
  r.summands.push_back(r.lhs);
  for (int i = 1; i <= k - 1; ++i) {
    auto term = binom(2 * k - i - 2, k - 1);
    r.lhs += term;
    r.summands.push_back(std::move(term));
  }
  r.rhs = binom(2 * k - 1, k - 1);
  r.passed = r.lhs == r.rhs;
  return r;
}

/// Subsets beyond this count skip the classification cross-check.
inline constexpr long long kClassifyLimit = 200000;

/// Σ_{i=0}^{k-1} C(2k-i-2, k-i-1) C(n-2k+i, i) = C(n-1, k-1).
///
/// When C(n-1, k-1) is small enough, also sorts every (k-1)-subset X of [n-1]
/// into the class i = the largest index with |X ∩ [2k-i, n-1]| >= i, checks
/// that X then has exactly i elements there and k-i-1 in [2k-i-2], and
/// compares class sizes with the summands.
inline IdentityResult identity_product(int n, int k, bool classify = true) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("identity_product requires n >= 2k >= 2");
  IdentityResult r;
  for (int i = 0; i <= k - 1; ++i) {
    auto term = binom(2 * k - i - 2, k - i - 1) * binom(n - 2 * k + i, i);
    r.lhs += term;
    r.summands.push_back(std::move(term));
  }
  r.rhs = binom(n - 1, k - 1);
  r.passed = r.lhs == r.rhs;

  if (classify && n - 1 <= kMaxGround && r.rhs <= kClassifyLimit) {
    std::vector<long long> counts(static_cast<std::size_t>(k), 0);
    bool shape_ok = true;
    for_each_subset(n - 1, k - 1, [&](Mask x) {
      int cls = 0;
      for (int i = k - 1; i >= 0; --i) {
        if (popcount(x & range_mask(2 * k - i, n - 1)) >= i) {
          cls = i;
          break;
        }
      }
      if (popcount(x & range_mask(2 * k - cls, n - 1)) != cls ||
          popcount(x & prefix_mask(2 * k - cls - 2)) != k - cls - 1) {
        shape_ok = false;
      }
      ++counts[static_cast<std::size_t>(cls)];
    });
    bool sizes_ok = true;
    for (int i = 0; i < k; ++i) {
      r.class_sizes.emplace_back(counts[static_cast<std::size_t>(i)]);
      if (r.class_sizes.back() != r.summands[static_cast<std::size_t>(i)]) sizes_ok = false;
    }
    r.classification_passed = shape_ok && sizes_ok;
    r.passed = r.passed && *r.classification_passed;
  }
  return r;
}

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct VerificationReport {
  int n = 0;
  int k = 0;
  std::string theorem;  // "ekr" or "hm"
  Integer bound;
  Integer achieved_max;
  std::size_t families_examined = 0;
  std::vector<SetFamily> extremal;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  [[nodiscard]] bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  void add(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
  }
};

inline std::string describe(const SetFamily& f) {
  std::string out = "n=" + std::to_string(f.n()) + " k=" + std::to_string(f.k()) + " [";
  bool first = true;
  for (const auto& s : f.members()) {
    if (!first) out += ' ';
    out += to_string(s);
    first = false;
  }
  return out + "]";
}

namespace detail {

inline std::vector<SetFamily> largest(const std::vector<SetFamily>& fams, Integer& max_out) {
  std::size_t best = 0;
  for (const auto& f : fams) best = std::max(best, f.size());
  max_out = best;
  std::vector<SetFamily> out;
  for (const auto& f : fams) {
    if (f.size() == best) out.push_back(f);
  }
  return out;
}

}  // namespace detail

/// Maximum over maximal shifted intersecting families equals C(n-1, k-1);
/// for n > 2k the only shifted family attaining it is the star at 1.
inline VerificationReport verify_ekr(int n, int k) {
  VerificationReport rep;
  rep.n = n;
  rep.k = k;
  rep.theorem = "ekr";
  rep.bound = ekr_bound(n, k);
  const auto fams = enumerate_maximal_shifted(n, k);
  rep.families_examined = fams.size();
  rep.extremal = detail::largest(fams, rep.achieved_max);

  std::string over;
  for (const auto& f : fams) {
    if (!is_intersecting(f) || !is_shifted(f)) over = "not shifted intersecting: " + describe(f);
    if (Integer(f.size()) > rep.bound) over = "exceeds bound: " + describe(f);
  }
  rep.add("every family within bound", over.empty(), over);
  rep.add("maximum equals bound", rep.achieved_max == rep.bound,
          "max=" + rep.achieved_max.str() + " bound=" + rep.bound.str());

  if (n > 2 * k) {
    const auto expected = star(n, k);
    const bool unique = rep.extremal.size() == 1 && rep.extremal.front() == expected;
    std::string w;
    for (const auto& f : rep.extremal) {
      if (f != expected) w = "extra extremal family " + describe(f);
    }
    if (w.empty() && !unique) w = "star missing from extremal list";
    rep.add("unique extremal family is star", unique, w);
  } else {
    std::string w;
    for (const auto& f : fams) {
      if (Integer(f.size()) != rep.bound) w = "maximal family below bound: " + describe(f);
    }
    rep.add("every maximal family at n=2k attains bound", w.empty(), w);
    rep.notes.push_back("n = 2k: extremal families are not unique (" +
                        std::to_string(rep.extremal.size()) + " found)");
  }
  return rep;
}

/// Maximum over maximal shifted intersecting families with no common element
/// equals the Hilton–Milner bound, with the extremal families of the
/// equality characterization. k = 2 (bound 3, the triangle) is also accepted.
inline VerificationReport verify_hm(int n, int k) {
  VerificationReport rep;
  rep.n = n;
  rep.k = k;
  rep.theorem = "hm";
  rep.bound = hm_bound(n, k);
  std::vector<SetFamily> fams;
  for (auto& f : enumerate_maximal_shifted(n, k)) {
    if (!common_element(f)) fams.push_back(std::move(f));
  }
  rep.families_examined = fams.size();
  rep.extremal = detail::largest(fams, rep.achieved_max);

  std::string over;
  for (const auto& f : fams) {
    if (Integer(f.size()) > rep.bound) over = "exceeds bound: " + describe(f);
  }
  rep.add("every family within bound", over.empty(), over);
  rep.add("maximum equals bound", rep.achieved_max == rep.bound,
          "max=" + rep.achieved_max.str() + " bound=" + rep.bound.str());

  // Structural facts behind the counting argument.
  const Mask block = range_mask(2, k + 1);
  std::string missing_block;
  std::string top_type;
  for (const auto& f : fams) {
    if (!f.contains(block)) missing_block = describe(f);
    const auto part = partition(f);
    if (!part.classes.back().empty()) top_type = describe(f);
  }
  rep.add("every coreless family contains {2..k+1}", missing_block.empty(), missing_block);
  rep.add("no coreless family has a set of type k-1", top_type.empty(), top_type);

  std::vector<SetFamily> expected{hilton_milner(n, k)};
  if (k == 3) expected.push_back(k3_special(n));
  std::sort(expected.begin(), expected.end());
  std::string w;
  if (rep.extremal != expected) {
    w = "got " + std::to_string(rep.extremal.size()) + " extremal families";
    for (const auto& f : rep.extremal) w += "; " + describe(f);
  }
  rep.add(k == 3 ? "extremal families are hm and k3-special" : "unique extremal family is hm",
          w.empty(), w);

  if (k >= 4) {
    Mask with_one = bit(1) | bit(k + 1) | range_mask(k + 3, 2 * k);
    Mask excluded = range_mask(2, k) | bit(k + 2);
    std::string sw;
    for (const auto& f : rep.extremal) {
      if (!f.contains(with_one) || f.contains(excluded)) sw = describe(f);
    }
    rep.add("extremal contains {1,k+1,k+3..2k} and excludes {2..k,k+2}", sw.empty(), sw);
  }
  if (k == 2) rep.notes.push_back("k = 2 lies outside the equality characterization, which covers k >= 3");
  return rep;
}

}  // namespace ifam
