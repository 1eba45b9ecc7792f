// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ifam/bounds.hpp"
#include "ifam/generator.hpp"
#include "ifam/oracle.hpp"
#include "ifam/partition.hpp"
#include "support.hpp"

using namespace ifam;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

const std::vector<std::pair<int, int>> kOracleScales{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}};

Outcome identity_suites() {
  Outcome out;
  int classified = 0;
  for (int k = 1; k <= 64; ++k) {
    const auto r = identity_star(k);
    if (!r.passed) out.fail("identity_star k=" + std::to_string(k));
  }
  int pairs = 0;
  for (int k = 1; k <= 20; ++k) {
    for (int n = 2 * k; n <= 3 * k + 20; ++n) {
      const bool classify = k <= 5 && n <= 14;
      const auto r = identity_product(n, k, classify);
      ++pairs;
      if (!r.passed) out.fail("identity_product n=" + std::to_string(n) + " k=" + std::to_string(k));
      if (classify) {
        if (r.classification_passed != true) {
          out.fail("classification n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        ++classified;
      }
    }
  }
  if (out.passed) {
    out.detail = "64 star identities, " + std::to_string(pairs) + " product identities, " +
                 std::to_string(classified) + " classified";
  }
  return out;
}

Outcome ekr_reproduction() {
  Outcome out;
  const std::vector<std::pair<int, int>> scales{{4, 2}, {5, 2}, {6, 2}, {7, 2},
                                                {6, 3}, {7, 3}, {8, 3}, {9, 3}};
  for (auto [n, k] : scales) {
    const auto rep = verify_ekr(n, k);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    if (rep.achieved_max != binom(n - 1, k - 1)) out.fail(tag + " max=" + rep.achieved_max.str());
    if (n > 2 * k && (rep.extremal.size() != 1 || rep.extremal.front() != star(n, k))) {
      out.fail(tag + " extremal family is not unique star");
    }
    for (const auto& c : rep.checks) {
      if (!c.passed) out.fail(tag + " " + c.name + ": " + c.witness);
    }
  }
  if (out.passed) out.detail = "max = C(n-1,k-1) at 8 scales, star unique for n > 2k";
  return out;
}

Outcome hm_reproduction() {
  Outcome out;
  for (auto [n, k] : {std::pair{5, 2}, {7, 3}, {8, 3}, {9, 4}}) {
    const auto rep = verify_hm(n, k);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    const Integer bound = binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
    if (rep.achieved_max != bound) out.fail(tag + " max=" + rep.achieved_max.str());

    std::vector<SetFamily> expected;
    if (k == 2) expected.push_back(make_family(n, 2, {{1, 2}, {1, 3}, {2, 3}}));
    if (k >= 3) expected.push_back(hilton_milner(n, k));
    if (k == 3) expected.push_back(k3_special(n));
    std::sort(expected.begin(), expected.end());
    if (rep.extremal != expected) out.fail(tag + " extremal set mismatch");
    for (const auto& c : rep.checks) {
      if (!c.passed) out.fail(tag + " " + c.name + ": " + c.witness);
    }
  }
  if (out.passed) out.detail = "HM bound attained with the expected extremal families at 4 scales";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::ostringstream counts;
  for (auto [n, k] : kOracleScales) {
    const auto gen = enumerate_maximal_shifted(n, k);
    const auto oracle = brute_force_maximal(n, k, true);
    if (gen != oracle) {
      out.fail("(" + std::to_string(n) + "," + std::to_string(k) + ") generator " +
               std::to_string(gen.size()) + " vs oracle " + std::to_string(oracle.size()));
    }
    counts << " (" << n << "," << k << "):" << gen.size();
  }
  if (out.passed) out.detail = "identical family sets," + counts.str();
  return out;
}

Outcome bijection_properties() {
  Outcome out;
  std::ostringstream counts;
  for (int k = 1; k <= 3; ++k) {
    std::size_t expected_count = 0;
    for (int n = 2 * k; n <= 2 * k + 3; ++n) {
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      const auto gens = enumerate_generators(k, n);
      if (n == 2 * k) {
        expected_count = gens.size();
        counts << " k=" << k << ":" << gens.size();
      } else if (gens.size() != expected_count) {
        out.fail(tag + " generator count " + std::to_string(gens.size()) + " != " +
                 std::to_string(expected_count));
      }
      for (const auto& g : gens) {
        if (generator_from_family(family_from_generator(g, n)) != g) out.fail(tag + " G->F->G");
      }
      std::vector<SetFamily> families = enumerate_maximal_shifted(n, k);
      if (binom(n, k) <= kMaxOracleVertices) families = brute_force_maximal(n, k, true);
      for (const auto& f : families) {
        if (family_from_generator(generator_from_family(f), n) != f) out.fail(tag + " F->G->F");
      }
    }
  }
  if (out.passed) out.detail = "both round trips hold; generator counts" + counts.str();
  return out;
}

Outcome partition_properties() {
  Outcome out;
  std::mt19937_64 rng(0x5eed2026);
  std::size_t violations = 0;
  auto violation = [&](const std::string& what) {
    ++violations;
    out.fail(what);
  };
  for (auto [n, k] : {std::pair{7, 3}, {9, 3}, {9, 4}}) {
    const auto everything = all_subsets(n, k);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto f = shift_closure(testing::random_intersecting(n, k, rng));
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ") #" +
                              std::to_string(trial);
      if (!is_shifted(f) || !is_intersecting(f)) violation(tag + " closure not shifted intersecting");

      // Every member has a type; none dominates a disjoint set.
      for (Mask s : f.masks()) {
        if (!mask_type(s, k)) violation(tag + " typeless member");
        if (find_disjoint_dominated(ElementSet::from_mask(n, s), k)) violation(tag + " disjoint dominated");
      }
      const auto p = partition(f);
      // Classes cover F and have the head/tail shape.
      std::size_t covered = 0;
      for (int i = 0; i < k; ++i) {
        const auto& cls = p.classes[static_cast<std::size_t>(i)];
        covered += cls.size();
        for (Mask s : cls.masks()) {
          if (popcount(s & prefix_mask(2 * k - i - 1)) != k - i || (s & bit(2 * k - i))) {
            violation(tag + " class shape");
          }
        }
        // Heads within a class pairwise intersect.
        if (!is_intersecting(p.projections[static_cast<std::size_t>(i)])) {
          violation(tag + " projection not intersecting");
        }
      }
      if (covered != f.size()) violation(tag + " classes do not cover");

      const auto c = compress_to_2k(f);
      std::size_t proj_total = 0;
      for (const auto& proj : p.projections) proj_total += proj.size();
      if (c.size() != proj_total || !is_intersecting(c) || Integer(c.size()) > binom(2 * k - 1, k - 1)) {
        violation(tag + " compress_to_2k contract");
      }

      for (Mask a : f.masks()) {
        for (Mask b : everything) {
          if (mask_dominated_by(b, a) && !f.contains(b)) violation(tag + " downward closure");
        }
      }
      if (!type_bounds_report(f).all_ok()) violation(tag + " type bounds");
    }
  }
  if (out.passed) {
    out.detail = "3000 families, 0 violations";
  } else {
    out.detail += " (" + std::to_string(violations) + " violations)";
  }
  return out;
}

Outcome slot_containment_suite() {
  Outcome out;
  std::size_t checked = 0;
  for (auto [n, k] : kOracleScales) {
    for (const auto& f : brute_force_maximal(n, k, true)) {
      ++checked;
      if (!check_lemma7(f).passed) out.fail("slot containment fails on " + describe(f));
    }
    for (const auto& f : enumerate_maximal_shifted(n, k)) {
      ++checked;
      if (!check_lemma7(f).passed) out.fail("slot containment fails on " + describe(f));
    }
  }
  const auto counter = check_lemma7(make_family(5, 2, {{1, 2}, {1, 3}, {1, 4}}));
  if (counter.passed) out.fail("counterexample passed");
  if (!counter.witness || *counter.witness != ElementSet::from_elements(5, {1, 5})) {
    out.fail("counterexample witness is not {1,5}");
  }
  if (out.passed) {
    out.detail = std::to_string(checked) + " families pass; counterexample fails with witness {1,5}";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "identity suites", 1.0, identity_suites},
      {2, "EKR reproduction", 30.0, ekr_reproduction},
      {3, "HM reproduction", 300.0, hm_reproduction},
      {4, "oracle equivalence", 60.0, oracle_equivalence},
      {5, "bijection properties", 60.0, bijection_properties},
      {6, "partition property suite", 60.0, partition_properties},
      {7, "slot containment suite", 60.0, slot_containment_suite},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.time_limit_s) {
      o.fail("runtime " + std::to_string(secs) + " s over limit");
    }
    if (!o.passed) ++failed;
    std::printf("[%s] criterion %d: %s (%.3f s, limit %.0f s) -- %s\n", o.passed ? "PASS" : "FAIL",
                c.id, c.title.c_str(), secs, c.time_limit_s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
