#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tmine/tree.hpp"

namespace tmine {

// Vertices are 1..n; every edge is a nonempty subset of them.
struct Hypergraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> edges;

  // Sorts and deduplicates each edge; throws ArgumentError on an empty edge
  // or an id outside 1..n.
  void normalize();
};

// One itemset per transaction over items 1..n.
struct TransactionDb {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> transactions;

  void normalize();
};

using ItemSet = std::vector<std::size_t>;

// Canonical key -> representative tree. Iteration order is by key.
using PatternSet = std::map<CanonKey, Tree>;

struct BruteLimits {
  // Cap on the number of induced subtrees enumerated per input tree.
  std::size_t max_subtrees_per_tree = std::size_t{1} << 20;
  // Cap on the vertex count for subset enumeration (2^n subsets).
  std::size_t max_subset_vertices = 20;
};

// Number of induced subtrees of `t` (over all root choices), by the product
// formula over children. Saturates at SIZE_MAX.
std::size_t count_induced_subtrees(const Tree& t);

// Every induced subtree of every dataset tree, deduplicated by canonical key
// under the dataset mode. Throws SizeGuardError when a tree exceeds the limit.
PatternSet all_patterns(const Dataset& dataset, const BruteLimits& limits = {});

// Induced subtrees of a single tree under `mode`.
PatternSet induced_subtrees(const Tree& t, Mode mode, const BruteLimits& limits = {});

// Exhaustive embedding test: every induced subtree of the target with as many
// vertices as the pattern is tried against every parent-preserving bijection.
bool brute_subtree_iso(const Tree& pattern, const Tree& target, Mode mode, const BruteLimits& limits = {});

PatternSet brute_frequent(const Dataset& dataset, std::size_t theta, const BruteLimits& limits = {});
PatternSet brute_maximal(const Dataset& dataset, std::size_t theta, const BruteLimits& limits = {});
PatternSet brute_closed(const Dataset& dataset, std::size_t theta, const BruteLimits& limits = {});
// Maximal common trees: brute_maximal with theta = |dataset|.
PatternSet brute_mct(const Dataset& dataset, const BruteLimits& limits = {});

// Maximal independent sets (no edge fully inside), sorted lexicographically.
std::vector<ItemSet> brute_mis(const Hypergraph& h, const BruteLimits& limits = {});

// Itemsets contained in at least `theta` transactions.
std::vector<ItemSet> brute_frequent_itemsets(const TransactionDb& db, std::size_t theta,
                                             const BruteLimits& limits = {});
std::vector<ItemSet> brute_maximal_itemsets(const TransactionDb& db, std::size_t theta,
                                            const BruteLimits& limits = {});

}  // namespace tmine
