#include "tmine/iso.hpp"

#include <algorithm>
#include <map>

#include "tmine/errors.hpp"

namespace tmine {

namespace {

struct SubtreeShape {
  std::vector<std::size_t> height;
  std::vector<std::size_t> size;
  std::vector<NodeId> postorder;
};

SubtreeShape shape_of(const Tree& t) {
  SubtreeShape s;
  s.height.assign(t.size(), 0);
  s.size.assign(t.size(), 1);
  std::vector<NodeId> pre;
  pre.reserve(t.size());
  std::vector<NodeId> stack{t.root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    pre.push_back(v);
    for (NodeId c : t.children(v)) stack.push_back(c);
  }
  s.postorder.assign(pre.rbegin(), pre.rend());
  for (NodeId v : s.postorder) {
    for (NodeId c : t.children(v)) {
      s.height[v] = std::max(s.height[v], s.height[c] + 1);
      s.size[v] += s.size[c];
    }
  }
  return s;
}

// Kuhn's augmenting-path matching of pattern children (left) into target
// children (right). `ok(i, j)` says left i may take right j.
template <class Compatible>
bool try_augment(std::size_t i, std::size_t right_count, Compatible& ok, std::vector<int>& owner,
                 std::vector<char>& visited) {
  for (std::size_t j = 0; j < right_count; ++j) {
    if (visited[j] || !ok(i, j)) continue;
    visited[j] = 1;
    if (owner[j] < 0 || try_augment(static_cast<std::size_t>(owner[j]), right_count, ok, owner, visited)) {
      owner[j] = static_cast<int>(i);
      return true;
    }
  }
  return false;
}

// Isomorphism class of every rooted subtree under `mode`, numbered densely;
// reps[c] is one node of class c, and reps lists classes children-first.
struct SubtreeClasses {
  std::vector<std::uint32_t> of;
  std::vector<NodeId> reps;
};

SubtreeClasses classes_of(const Tree& t, const SubtreeShape& shape, Mode mode) {
  SubtreeClasses c;
  c.of.assign(t.size(), 0);
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> key;
  for (NodeId v : shape.postorder) {
    key.clear();
    for (NodeId ch : t.children(v)) key.push_back(c.of[ch]);
    if (mode == Mode::unordered) std::sort(key.begin(), key.end());
    auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(c.reps.size()));
    if (fresh) c.reps.push_back(v);
    c.of[v] = it->second;
  }
  return c;
}

// embed(p, t) for every pattern node p and target node t: the subtree of
// `pattern` rooted at p maps into the subtree of `target` rooted at t with p
// sent to t. The answer only depends on the isomorphism classes of the two
// subtrees, so it is filled once per class pair, bottom-up over the pattern.
class EmbedTable {
 public:
  EmbedTable(const Tree& pattern, const Tree& target, Mode mode)
      : pattern_(pattern), target_(target), mode_(mode) {
    SubtreeShape ps = shape_of(pattern);
    SubtreeShape ts = shape_of(target);
    pc_ = classes_of(pattern, ps, mode);
    tc_ = classes_of(target, ts, mode);
    cols_ = tc_.reps.size();
    cell_.assign(pc_.reps.size() * cols_, 0);
    for (std::size_t a = 0; a < pc_.reps.size(); ++a) {
      NodeId p = pc_.reps[a];
      for (std::size_t b = 0; b < cols_; ++b) {
        NodeId t = tc_.reps[b];
        if (ps.height[p] > ts.height[t] || ps.size[p] > ts.size[t] ||
            pattern.child_count(p) > target.child_count(t)) {
          continue;
        }
        cell_[a * cols_ + b] = match_children(p, t, nullptr) ? 1 : 0;
      }
    }
  }

  bool at(NodeId p, NodeId t) const { return cell_[pc_.of[p] * cols_ + tc_.of[t]] != 0; }

  // Matches the children of p into the children of t. When `assignment` is
  // given it receives, per child of p, the chosen child of t.
  bool match_children(NodeId p, NodeId t, std::vector<NodeId>* assignment) const {
    const auto& pc = pattern_.children(p);
    const auto& tc = target_.children(t);
    if (pc.empty()) return true;
    if (pc.size() > tc.size()) return false;
    if (mode_ == Mode::ordered) {
      // Greedy earliest match is optimal for order-preserving injections.
      std::size_t j = 0;
      std::vector<NodeId> chosen;
      for (NodeId c : pc) {
        while (j < tc.size() && !at(c, tc[j])) ++j;
        if (j == tc.size()) return false;
        chosen.push_back(tc[j]);
        ++j;
      }
      if (assignment) *assignment = std::move(chosen);
      return true;
    }
    auto ok = [&](std::size_t i, std::size_t j) { return at(pc[i], tc[j]); };
    std::vector<int> owner(tc.size(), -1);
    std::vector<char> visited(tc.size());
    for (std::size_t i = 0; i < pc.size(); ++i) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!try_augment(i, tc.size(), ok, owner, visited)) return false;
    }
    if (assignment) {
      assignment->assign(pc.size(), kNoNode);
      for (std::size_t j = 0; j < tc.size(); ++j) {
        if (owner[j] >= 0) (*assignment)[static_cast<std::size_t>(owner[j])] = tc[j];
      }
    }
    return true;
  }

  std::optional<NodeId> any_root_image() const {
    for (NodeId t = 0; t < target_.size(); ++t) {
      if (at(pattern_.root(), t)) return t;
    }
    return std::nullopt;
  }

  EmbeddingWitness witness(NodeId root_image) const {
    EmbeddingWitness w;
    w.map.assign(pattern_.size(), kNoNode);
    std::vector<std::pair<NodeId, NodeId>> stack{{pattern_.root(), root_image}};
    while (!stack.empty()) {
      auto [p, t] = stack.back();
      stack.pop_back();
      w.map[p] = t;
      std::vector<NodeId> assignment;
      match_children(p, t, &assignment);
      const auto& pc = pattern_.children(p);
      for (std::size_t i = 0; i < pc.size(); ++i) stack.emplace_back(pc[i], assignment[i]);
    }
    return w;
  }

 private:
  const Tree& pattern_;
  const Tree& target_;
  Mode mode_;
  SubtreeClasses pc_;
  SubtreeClasses tc_;
  std::size_t cols_ = 0;
  std::vector<char> cell_;
};

}  // namespace

bool SupportSet::contains(std::size_t i) const { return std::binary_search(indices.begin(), indices.end(), i); }

bool subtree_iso(const Tree& pattern, const Tree& target, Mode mode) {
  if (pattern.size() > target.size()) return false;
  if (pattern.size() == 1) return true;
  return EmbedTable(pattern, target, mode).any_root_image().has_value();
}

std::optional<EmbeddingWitness> find_embedding(const Tree& pattern, const Tree& target, Mode mode) {
  if (pattern.size() > target.size()) return std::nullopt;
  EmbedTable table(pattern, target, mode);
  auto root = table.any_root_image();
  if (!root) return std::nullopt;
  return table.witness(*root);
}

bool validate_witness(const Tree& pattern, const Tree& target, Mode mode, const EmbeddingWitness& w) {
  if (w.map.size() != pattern.size()) return false;
  std::vector<char> used(target.size(), 0);
  for (NodeId img : w.map) {
    if (!target.contains(img) || used[img]) return false;
    used[img] = 1;
  }
  NodeId root_img = w.map[pattern.root()];
  if (root_img != target.root() && used[target.parent(root_img)]) return false;
  for (NodeId v = 0; v < pattern.size(); ++v) {
    if (v == pattern.root()) continue;
    if (target.parent(w.map[v]) != w.map[pattern.parent(v)]) return false;
  }
  if (mode == Mode::ordered) {
    for (NodeId v = 0; v < pattern.size(); ++v) {
      const auto& pc = pattern.children(v);
      if (pc.size() < 2) continue;
      const auto& tc = target.children(w.map[v]);
      auto pos = [&](NodeId x) { return std::find(tc.begin(), tc.end(), x) - tc.begin(); };
      for (std::size_t i = 1; i < pc.size(); ++i) {
        if (pos(w.map[pc[i - 1]]) >= pos(w.map[pc[i]])) return false;
      }
    }
  }
  return true;
}

bool tree_equal(const Tree& a, const Tree& b, Mode mode) {
  if (a.size() != b.size()) return false;
  return canonical_form(a, mode) == canonical_form(b, mode);
}

SupportSet support_set(const Tree& pattern, const Dataset& dataset) {
  SupportSet s;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (subtree_iso(pattern, dataset.tree(i), dataset.mode())) s.indices.push_back(i);
  }
  return s;
}

bool is_frequent(const Tree& pattern, const Dataset& dataset, std::size_t theta) {
  if (theta < 1) throw ArgumentError("theta must be at least 1");
  return support_set(pattern, dataset).count() >= theta;
}

}  // namespace tmine
