#pragma once

// Independent oracle: maximal intersecting families are exactly the maximal
// cliques of the graph on all k-subsets of [n] with an edge between every
// intersecting pair. Uses nothing from the partition or generator code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ifam/element_set.hpp"
#include "ifam/family.hpp"
#include "ifam/limits.hpp"

namespace ifam {

namespace detail {

using VertexSet = std::uint64_t;

class BronKerbosch {
 public:
  explicit BronKerbosch(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<VertexSet> run() {
    cliques_.clear();
    const VertexSet all = adj_.size() == 64 ? ~VertexSet{0} : (VertexSet{1} << adj_.size()) - 1;
    expand(0, all, 0);
    return std::move(cliques_);
  }

 private:
  // Tomita pivoting: branch only on P \ N(u) for the u in P ∪ X that
  // maximizes |P ∩ N(u)|.
  void expand(VertexSet r, VertexSet p, VertexSet x) {
    if (p == 0) {
      if (x == 0) cliques_.push_back(r);
      return;
    }
    int pivot = -1;
    int best = -1;
    for (VertexSet px = p | x; px != 0; px &= px - 1) {
      const int u = std::countr_zero(px);
      const int deg = std::popcount(p & adj_[static_cast<std::size_t>(u)]);
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    for (VertexSet cand = p & ~adj_[static_cast<std::size_t>(pivot)]; cand != 0; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      const VertexSet vb = VertexSet{1} << v;
      const VertexSet nv = adj_[static_cast<std::size_t>(v)];
      expand(r | vb, p & nv, x & nv);
      p &= ~vb;
      x |= vb;
    }
  }

  std::vector<VertexSet> adj_;
  std::vector<VertexSet> cliques_;
};

}  // namespace detail

/// Every maximal intersecting k-uniform family on [n] (optionally only the
/// shifted ones), canonically ordered. Requires C(n,k) <= 64.
inline std::vector<SetFamily> brute_force_maximal(int n, int k, bool shifted_only) {
  if (n < 1 || n > kMaxGround || k < 1 || k > n) {
    throw std::invalid_argument("brute_force_maximal requires 1 <= k <= n");
  }
  const auto verts = all_subsets(n, k);
  if (static_cast<long long>(verts.size()) > kMaxOracleVertices) {
    throw ScaleError("oracle supports C(n,k) <= " + std::to_string(kMaxOracleVertices) + ", got " +
                     std::to_string(verts.size()));
  }
  std::vector<detail::VertexSet> adj(verts.size(), 0);
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = 0; b < verts.size(); ++b) {
      if (a != b && (verts[a] & verts[b]) != 0) adj[a] |= detail::VertexSet{1} << b;
    }
  }
  std::vector<SetFamily> out;
  for (auto clique : detail::BronKerbosch(std::move(adj)).run()) {
    std::vector<Mask> members;
    for (; clique != 0; clique &= clique - 1) {
      members.push_back(verts[static_cast<std::size_t>(std::countr_zero(clique))]);
    }
    auto fam = SetFamily::from_masks(n, k, std::move(members));
    if (!shifted_only || is_shifted(fam)) out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ifam
