#include <catch_amalgamated.hpp>

#include <random>

#include "ifam/family.hpp"
#include "ifam/partition.hpp"
#include "support.hpp"

using namespace ifam;

namespace {

ElementSet es(int n, std::initializer_list<int> e) { return ElementSet::from_elements(n, e); }

}  // namespace

TEST_CASE("type_of examples") {
  CHECK(type_of(es(7, {1, 2, 3}), 3) == 0);
  CHECK(type_of(es(9, {1, 5, 7, 8}), 4) == 2);
  CHECK(type_of(es(7, {2, 4, 6}), 3) == 1);
  CHECK_FALSE(type_of(es(7, {4, 5, 6}), 3).has_value());
  CHECK_THROWS_AS(type_of(es(7, {1, 2}), 3), std::invalid_argument);
}

TEST_CASE("type_of agrees with the list-based definition on every k-set") {
  for (int k = 1; k <= 4; ++k) {
    const int n = 2 * k + 2;
    for (Mask m : all_subsets(n, k)) {
      const auto s = ElementSet::from_mask(n, m);
      const int ref = testing::reference_type(s.elements(), k);
      const auto t = type_of(s, k);
      if (ref < 0) {
        CHECK_FALSE(t.has_value());
      } else {
        CHECK(t == ref);
      }
    }
  }
}

TEST_CASE("find_disjoint_dominated examples") {
  CHECK(find_disjoint_dominated(es(7, {4, 5, 6}), 3) == es(7, {1, 2, 3}));
  CHECK_FALSE(find_disjoint_dominated(es(7, {1, 2, 3}), 3).has_value());
  CHECK_FALSE(find_disjoint_dominated(es(7, {2, 4, 6}), 3).has_value());
  CHECK_THROWS_AS(find_disjoint_dominated(es(5, {3, 4, 5}), 3), std::invalid_argument);
}

TEST_CASE("typeless sets are dominated by a disjoint set") {
  for (int k = 2; k <= 4; ++k) {
    const int n = 2 * k + 1;
    const auto everything = all_subsets(n, k);
    for (Mask m : everything) {
      const auto s = ElementSet::from_mask(n, m);
      const auto t = find_disjoint_dominated(s, k);
      if (!t) continue;
      CHECK_FALSE(t->intersects(s));
      CHECK(dominates(s, *t));
      // The down-set of S is shifted, contains S and T, and is not intersecting.
      std::vector<Mask> down;
      for (Mask b : everything) {
        if (mask_dominated_by(b, m)) down.push_back(b);
      }
      const auto d = SetFamily::from_masks(n, k, down);
      CHECK(is_shifted(d));
      CHECK(d.contains(*t));
      CHECK_FALSE(is_intersecting(d));
    }
  }
}

TEST_CASE("partition examples") {
  const auto p = partition(star(5, 2));
  REQUIRE(p.classes.size() == 2);
  CHECK(p.classes[0] == make_family(5, 2, {{1, 2}, {1, 3}}));
  CHECK(p.classes[1] == make_family(5, 2, {{1, 4}, {1, 5}}));
  CHECK(p.projections[1] == make_family(2, 1, {{1}}));

  const auto single = partition(make_family(7, 3, {{1, 2, 3}}));
  CHECK(single.classes[0].size() == 1);
  CHECK(single.classes[1].empty());
  CHECK(single.classes[2].empty());

  try {
    (void)partition(make_family(7, 3, {{4, 5, 6}, {1, 2, 3}}));
    FAIL("expected PartitionError");
  } catch (const PartitionError& e) {
    CHECK(e.reason() == PartitionError::Reason::kTypeless);
    CHECK(e.witness() == es(7, {4, 5, 6}));
  }

  CHECK_THROWS_AS(partition(make_family(5, 2, {{1, 3}})), PartitionError);
  CHECK_THROWS_AS(partition(make_family(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}})), PartitionError);
}

TEST_CASE("project examples") {
  const auto a = project(es(5, {1, 4}), 1);
  CHECK(a.head == es(5, {1}));
  CHECK(a.tail == es(5, {4}));
  const auto b = project(es(7, {1, 2, 3}), 0);
  CHECK(b.head == es(7, {1, 2, 3}));
  CHECK(b.tail.empty());
  const auto c = project(es(9, {1, 5, 7, 8}), 2);
  CHECK(c.head == es(9, {1, 5}));
  CHECK(c.tail == es(9, {7, 8}));
  CHECK_THROWS_AS(project(es(9, {1, 5, 7, 8}), 1), std::invalid_argument);
}

TEST_CASE("compress_to_2k examples") {
  CHECK(compress_to_2k(star(5, 2)) == make_family(4, 2, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(compress_to_2k(make_family(7, 3, {{1, 2, 3}})) == make_family(6, 3, {{1, 2, 3}}));
  const auto tri = make_family(4, 2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(compress_to_2k(tri) == tri);
  CHECK_THROWS_AS(compress_to_2k(make_family(3, 2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("type_bounds_report examples") {
  const auto rep = type_bounds_report(star(7, 3));
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].projected_count == 6);
  CHECK(rep.rows[1].projected_count == 3);
  CHECK(rep.rows[2].projected_count == 1);
  CHECK_FALSE(rep.rows[0].projected_cap.has_value());
  CHECK(*rep.rows[1].projected_cap == 3);
  CHECK(*rep.rows[2].projected_cap == 1);
  CHECK(rep.rows[1].member_count == 6);
  CHECK(rep.rows[2].member_count == 3);
  CHECK(rep.projected_sum == 10);
  CHECK(rep.sum_cap == 10);
  CHECK(rep.all_ok());

  const auto hm = type_bounds_report(hilton_milner(7, 3));
  CHECK(hm.rows[2].member_count == 0);
  CHECK(hm.all_ok());

  const auto one = type_bounds_report(make_family(7, 3, {{1, 2, 3}}));
  CHECK(one.rows[0].projected_count == 1);
  CHECK(one.rows[1].projected_count == 0);
  CHECK(one.rows[2].projected_count == 0);
  CHECK(one.all_ok());
}

TEST_CASE("partition invariants on random shifted intersecting families") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + trial % 3;
    const int n = 2 * k + trial % 4;
    const auto f = shift_closure(testing::random_intersecting(n, k, rng));
    const auto p = partition(f);

    std::size_t total = 0;
    for (int i = 0; i < k; ++i) {
      const auto& cls = p.classes[static_cast<std::size_t>(i)];
      total += cls.size();
      for (Mask s : cls.masks()) {
        CHECK(popcount(s & prefix_mask(2 * k - i - 1)) == k - i);
        CHECK_FALSE((s & bit(2 * k - i)));
        CHECK(find_disjoint_dominated(ElementSet::from_mask(n, s), k) == std::nullopt);
      }
      const auto& proj = p.projections[static_cast<std::size_t>(i)];
      CHECK(is_intersecting(proj));
      CHECK(proj.size() <= cls.size());
    }
    CHECK(total == f.size());

    const auto c = compress_to_2k(f);
    CHECK(is_intersecting(c));
    std::size_t proj_total = 0;
    for (const auto& proj : p.projections) proj_total += proj.size();
    CHECK(c.size() == proj_total);
    CHECK(type_bounds_report(f).all_ok());
  }
}
