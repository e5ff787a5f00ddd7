#include "tmine/height2.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "tmine/errors.hpp"

namespace tmine {

namespace {

using TreeRefs = std::vector<std::reference_wrapper<const Tree>>;

void require_height2(const Tree& t, std::size_t height) {
  if (height > 2) {
    throw ConstraintError("tree of height " + std::to_string(height) + " exceeds the height-2 bound: " +
                          serialize_tree(t));
  }
}

std::vector<Tree> maximal_common_impl(const TreeRefs& trees) {
  if (trees.empty()) throw ArgumentError("maximal common tree of an empty list is undefined");
  std::size_t min_height = std::numeric_limits<std::size_t>::max();
  std::size_t min_degree = std::numeric_limits<std::size_t>::max();
  std::vector<Signature> sigs;
  for (const Tree& t : trees) {
    std::size_t h = t.height();
    require_height2(t, h);
    min_height = std::min(min_height, h);
    min_degree = std::min(min_degree, max_child_count(t));
  }
  if (min_height == 0) return {Tree{}};
  if (min_height == 1) return {make_star(min_degree)};
  for (const Tree& t : trees) sigs.push_back(chi(t));
  Tree meet = chi_inv(signature_meet(sigs));
  std::vector<Tree> out{meet};
  // A star with min_degree leaves fits every input; it lies inside the meet
  // tree only if the meet tree has a vertex with that many children.
  if (min_degree > max_child_count(meet)) out.push_back(make_star(min_degree));
  return out;
}

TreeRefs refs_of(std::span<const Tree> trees) { return TreeRefs(trees.begin(), trees.end()); }

TreeRefs refs_of(const Dataset& dataset, std::span<const std::size_t> indices) {
  TreeRefs out;
  for (std::size_t i : indices) out.emplace_back(dataset.tree(i));
  return out;
}

}  // namespace

Signature::Signature(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  if (std::find(entries_.begin(), entries_.end(), 0u) != entries_.end()) {
    throw ArgumentError("signature entries must be positive");
  }
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

Signature chi(const Tree& t) {
  require_height2(t, t.height());
  std::vector<std::uint32_t> entries;
  for (NodeId c : t.children(t.root())) entries.push_back(static_cast<std::uint32_t>(t.child_count(c) + 1));
  return Signature(std::move(entries));
}

Tree chi_inv(const Signature& sig) {
  Tree t;
  for (std::uint32_t x : sig.entries()) {
    NodeId c = t.add_child(t.root());
    for (std::uint32_t k = 1; k < x; ++k) t.add_child(c);
  }
  return t;
}

bool signature_leq(const Signature& x, const Signature& y) {
  if (x.size() > y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

Signature signature_meet(std::span<const Signature> sigs) {
  if (sigs.empty()) throw ArgumentError("meet of an empty signature list is undefined");
  std::size_t len = sigs.front().size();
  for (const auto& s : sigs) len = std::min(len, s.size());
  std::vector<std::uint32_t> out(len, std::numeric_limits<std::uint32_t>::max());
  for (const auto& s : sigs) {
    for (std::size_t i = 0; i < len; ++i) out[i] = std::min(out[i], s[i]);
  }
  return Signature(std::move(out));
}

std::size_t max_child_count(const Tree& t) {
  std::size_t best = 0;
  for (NodeId v = 0; v < t.size(); ++v) best = std::max(best, t.child_count(v));
  return best;
}

bool h2_subtree_iso(const Tree& pattern, const Tree& target) {
  std::size_t hp = pattern.height();
  std::size_t ht = target.height();
  require_height2(pattern, hp);
  require_height2(target, ht);
  switch (hp) {
    case 0:
      return true;
    case 1:
      return max_child_count(target) >= pattern.child_count(pattern.root());
    default:
      return ht == 2 && signature_leq(chi(pattern), chi(target));
  }
}

Tree mct(std::span<const Tree> trees) { return maximal_common_impl(refs_of(trees)).front(); }

Tree mct(const Dataset& dataset, std::span<const std::size_t> indices) {
  return maximal_common_impl(refs_of(dataset, indices)).front();
}

std::vector<Tree> maximal_common_trees(std::span<const Tree> trees) { return maximal_common_impl(refs_of(trees)); }

std::vector<Tree> maximal_common_trees(const Dataset& dataset, std::span<const std::size_t> indices) {
  return maximal_common_impl(refs_of(dataset, indices));
}

}  // namespace tmine
