#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tmine {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

// How sibling order is treated when comparing trees.
enum class Mode { ordered, unordered };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

// Rooted, unlabeled tree stored as an append-only arena. Node 0 is always the
// root and ids are dense. Child lists keep insertion order, so the same value
// serves as an ordered or an unordered tree depending on the Mode used.
class Tree {
 public:
  // A single vertex.
  Tree();

  std::size_t size() const noexcept { return parent_.size(); }
  NodeId root() const noexcept { return 0; }

  NodeId parent(NodeId v) const { return parent_.at(v); }
  const std::vector<NodeId>& children(NodeId v) const { return children_.at(v); }
  std::size_t child_count(NodeId v) const { return children_.at(v).size(); }
  bool is_leaf(NodeId v) const { return v != root() && children_.at(v).empty(); }
  bool contains(NodeId v) const noexcept { return v < size(); }

  // Distance from the root.
  std::size_t depth(NodeId v) const;
  // Longest root-to-vertex path length; 0 for a single vertex.
  std::size_t height() const;

  // Appends a new childless vertex as the last child of `parent`.
  NodeId add_child(NodeId parent);
  // Appends a copy of `sub` as the last child subtree of `parent`; returns the
  // id the copied root received.
  NodeId graft(NodeId parent, const Tree& sub);

  // Copy of the subtree rooted at `v` (all descendants), renumbered densely.
  Tree subtree_at(NodeId v) const;

  // Node-for-node equality, including child order and ids.
  friend bool operator==(const Tree& a, const Tree& b) = default;

 private:
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
};

// Canonical text of a tree under a mode. Equal keys mean isomorphic
// (unordered) or equivalent (ordered) trees.
struct CanonKey {
  std::string text;

  friend bool operator==(const CanonKey&, const CanonKey&) = default;
  friend std::strong_ordering operator<=>(const CanonKey& a, const CanonKey& b) {
    return a.text.compare(b.text) <=> 0;
  }
};

struct TreeStats {
  std::size_t height = 0;
  std::size_t vertex_count = 0;
  std::size_t max_child_count = 0;
};

// tree := "(" tree* ")". Whitespace between tokens is ignored. Throws
// ParseError carrying the byte offset of the first problem.
Tree parse_tree(std::string_view text);

std::string serialize_tree(const Tree& t);

// Ordered mode: the literal serialization. Unordered mode: child encodings are
// sorted ascending by byte value before concatenation. Since '(' < ')', larger
// subtrees come first ("(()(()))" becomes "((())())"), which lines up with the
// non-increasing order of height-2 signatures.
CanonKey canonical_form(const Tree& t, Mode mode);

// New tree with one extra leaf appended as the last child of `v`. Node ids of
// the input are preserved; the new leaf gets id size().
Tree add_leaf(const Tree& t, NodeId v);

// New tree whose root has the old root as its only child.
Tree add_root_above(const Tree& t);

TreeStats tree_stats(const Tree& t);

// Root with `leaves` leaf children (height 1; a single vertex for 0).
Tree make_star(std::size_t leaves);

// Indexed multiset of trees with a comparison mode and cached canonical keys.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<Tree> trees, Mode mode);

  std::size_t size() const noexcept { return trees_.size(); }
  bool empty() const noexcept { return trees_.empty(); }
  Mode mode() const noexcept { return mode_; }
  const std::vector<Tree>& trees() const noexcept { return trees_; }
  const Tree& tree(std::size_t i) const { return trees_.at(i); }
  const CanonKey& canon(std::size_t i) const { return canon_.at(i); }

 private:
  std::vector<Tree> trees_;
  Mode mode_ = Mode::unordered;
  std::vector<CanonKey> canon_;
};

// One tree per non-blank line; lines starting with '#' are comments. A
// "# mode=ordered|unordered" comment sets the mode unless `mode_override` is
// given; the default is unordered. Parse errors report the line number.
Dataset load_dataset(std::istream& in, std::optional<Mode> mode_override = std::nullopt);
Dataset load_dataset_text(std::string_view text, std::optional<Mode> mode_override = std::nullopt);

// Writes the dataset format with a "# mode=..." header, an optional
// "# theta=..." comment and any extra comment lines.
void write_dataset(std::ostream& out, const Dataset& dataset, std::optional<std::size_t> theta = std::nullopt,
                   const std::vector<std::string>& comments = {});

}  // namespace tmine
