#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tmine/tree.hpp"

namespace tmine {

// Pattern node id -> target node id of a subtree isomorphism mapping.
struct EmbeddingWitness {
  std::vector<NodeId> map;
};

// Dataset indices of the trees that contain a pattern, sorted ascending.
struct SupportSet {
  std::vector<std::size_t> indices;

  std::size_t count() const noexcept { return indices.size(); }
  bool contains(std::size_t i) const;
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

// True iff some induced subtree of `target` (any root, parent-closed set of
// its descendants) is isomorphic (unordered) or equivalent (ordered) to
// `pattern`. Child sets are matched by maximum bipartite matching in unordered
// mode and by greedy order-preserving matching in ordered mode.
bool subtree_iso(const Tree& pattern, const Tree& target, Mode mode);

// Same decision, returning a mapping when one exists.
std::optional<EmbeddingWitness> find_embedding(const Tree& pattern, const Tree& target, Mode mode);

// Checks a mapping against the definition directly: injective, parent of
// every non-root pattern node maps to the parent of its image, the image of
// the pattern root has no parent inside the image, and (ordered) siblings keep
// their relative order.
bool validate_witness(const Tree& pattern, const Tree& target, Mode mode, const EmbeddingWitness& w);

bool tree_equal(const Tree& a, const Tree& b, Mode mode);

SupportSet support_set(const Tree& pattern, const Dataset& dataset);

// Throws ArgumentError when theta < 1.
bool is_frequent(const Tree& pattern, const Dataset& dataset, std::size_t theta);

}  // namespace tmine
