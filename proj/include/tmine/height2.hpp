#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tmine/tree.hpp"

namespace tmine {

// Multiset of positive integers kept as a non-increasing sequence. For a tree
// of height <= 2 it records, per child of the root, that child's number of
// children plus one (so 1 stands for a leaf child).
class Signature {
 public:
  Signature() = default;
  // Sorts the entries; throws ArgumentError on an entry of 0.
  explicit Signature(std::vector<std::uint32_t> entries);

  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::uint32_t> entries_;
};

// Throws ConstraintError when the tree is taller than 2.
Signature chi(const Tree& t);

// Root with one child per entry x, that child carrying x - 1 leaves.
Tree chi_inv(const Signature& sig);

// X ⊑ Y: an injection from X into Y that never decreases a value. With both
// sequences non-increasing this is |X| <= |Y| and X[i] <= Y[i] for all i.
bool signature_leq(const Signature& x, const Signature& y);

// Greatest lower bound under ⊑: entry-wise minimum of the non-increasing
// sequences over the shortest length. Throws ArgumentError on an empty list.
Signature signature_meet(std::span<const Signature> sigs);

// Largest child count over all vertices.
std::size_t max_child_count(const Tree& t);

// Unordered subtree isomorphism for trees of height <= 2 decided from the
// signatures and child counts only. Throws ConstraintError above height 2.
bool h2_subtree_iso(const Tree& pattern, const Tree& target);

// Maximal common tree by the closed formula: a single vertex when some input
// has height 0; otherwise the largest star common to all inputs when some
// input has height 1; otherwise chi_inv of the signature meet.
//
// When every input has height 2 a star can also be common without fitting
// inside the signature meet (a wide root in one tree, a wide child in
// another); maximal_common_trees() reports that second maximal tree.
// Throws ArgumentError on an empty list and ConstraintError above height 2.
Tree mct(std::span<const Tree> trees);
Tree mct(const Dataset& dataset, std::span<const std::size_t> indices);

// Every maximal common tree of height-<=2 inputs, height-2 tree first. Has
// one element, or two when the star described above exists.
std::vector<Tree> maximal_common_trees(std::span<const Tree> trees);
std::vector<Tree> maximal_common_trees(const Dataset& dataset, std::span<const std::size_t> indices);

}  // namespace tmine
