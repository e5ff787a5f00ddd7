#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tmine/iso.hpp"
#include "tmine/tree.hpp"

namespace tmine {

struct MiningConfig {
  std::size_t theta = 1;
  // Stop after this many solutions.
  std::optional<std::size_t> limit;
};

struct SearchNode {
  Tree pattern;
  SupportSet support;
  CanonKey canon;
};

struct MiningSummary {
  std::size_t count = 0;
  // Longest gap between the start, consecutive emissions and the end.
  std::chrono::duration<double, std::milli> max_delay{0};
  // Deepest chain of open search frames (bounded by |dataset| + 1).
  std::size_t max_depth = 0;
  // Most patterns held by the search at once, over all open frames.
  std::size_t peak_live_patterns = 0;
  // The sink asked to stop, or the limit was reached.
  bool stopped = false;
};

// Returns false to stop the enumeration.
using SolutionSink = std::function<bool(const SearchNode&)>;

// All operations below require an unordered dataset whose trees all have
// height <= 2 (ConstraintError otherwise, naming the offending index).

// The maximal common tree of the support set of `pattern` that contains
// `pattern`; the height-2 one is preferred when both candidates do. Throws
// ArgumentError when the support is empty.
Tree closure(const Tree& pattern, const Dataset& dataset);

// A pattern is closed iff it equals its closure.
bool is_closed(const Tree& pattern, const Dataset& dataset);

// Parent in the reverse-search forest of a closed pattern.
//
// Height-2 patterns: among the trees T' of height 2 outside the support, the
// candidate meet(support + T') that is maximal under subtree isomorphism;
// ties go to the smaller canonical key, then the smaller index of T'. The
// support strictly grows, so iterating reaches the height-2 root.
//
// Stars (height <= 1): the next smaller closed star.
//
// Throws ArgumentError on a root of the forest or a non-closed pattern.
Tree parent_of(const Tree& pattern, const Dataset& dataset);

// Closed roots of the forest: the height-2 root meet(all height-2 trees) and
// the smallest closed star, whichever exist. mct(dataset) is always first.
std::vector<Tree> forest_roots(const Dataset& dataset);

// For every vertex v at depth <= 1, the closure of add_leaf(pattern, v) when
// that extension has support >= theta; deduplicated, without `pattern`.
std::vector<Tree> neighbors(const Tree& pattern, const Dataset& dataset, std::size_t theta);

// Streams every closed theta-frequent tree exactly once, in a deterministic
// order. Closed stars come from a scan of star sizes; closed height-2 trees
// from a depth-first reverse search. The search holds only the open frames of
// the current root-to-node path.
MiningSummary enumerate_closed(const Dataset& dataset, const MiningConfig& config, const SolutionSink& sink);

}  // namespace tmine
