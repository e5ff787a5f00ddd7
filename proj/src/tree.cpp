#include "tmine/tree.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "tmine/errors.hpp"

namespace tmine {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Reversing a preorder gives an order in which children precede parents.
std::vector<NodeId> preorder(const Tree& t) {
  std::vector<NodeId> order;
  order.reserve(t.size());
  std::vector<NodeId> stack{t.root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& ch = t.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::ordered ? "ordered" : "unordered"; }

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "ordered") return Mode::ordered;
  if (text == "unordered") return Mode::unordered;
  return std::nullopt;
}

Tree::Tree() : parent_{kNoNode}, children_(1) {}

std::size_t Tree::depth(NodeId v) const {
  if (!contains(v)) throw ArgumentError("unknown node id " + std::to_string(v));
  std::size_t d = 0;
  while (v != root()) {
    v = parent_[v];
    ++d;
  }
  return d;
}

std::size_t Tree::height() const {
  std::vector<std::size_t> depth(size(), 0);
  std::size_t best = 0;
  for (NodeId v : preorder(*this)) {
    if (v != root()) depth[v] = depth[parent_[v]] + 1;
    best = std::max(best, depth[v]);
  }
  return best;
}

NodeId Tree::add_child(NodeId parent) {
  if (!contains(parent)) throw ArgumentError("unknown node id " + std::to_string(parent));
  auto id = static_cast<NodeId>(size());
  parent_.push_back(parent);
  children_.emplace_back();
  children_[parent].push_back(id);
  return id;
}

NodeId Tree::graft(NodeId parent, const Tree& sub) {
  if (!contains(parent)) throw ArgumentError("unknown node id " + std::to_string(parent));
  std::vector<NodeId> image(sub.size(), kNoNode);
  for (NodeId v : preorder(sub)) {
    NodeId at = v == sub.root() ? parent : image[sub.parent(v)];
    image[v] = add_child(at);
  }
  return image[sub.root()];
}

Tree Tree::subtree_at(NodeId v) const {
  if (!contains(v)) throw ArgumentError("unknown node id " + std::to_string(v));
  Tree out;
  std::vector<std::pair<NodeId, NodeId>> stack{{v, out.root()}};
  while (!stack.empty()) {
    auto [src, dst] = stack.back();
    stack.pop_back();
    // Push in reverse so children are appended in their original order.
    std::vector<std::pair<NodeId, NodeId>> next;
    for (NodeId c : children_[src]) next.emplace_back(c, out.add_child(dst));
    stack.insert(stack.end(), next.rbegin(), next.rend());
  }
  return out;
}

Tree parse_tree(std::string_view text) {
  Tree t;
  std::vector<NodeId> open;
  bool seen_root = false;
  bool root_closed = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (is_space(c)) continue;
    if (c == '(') {
      if (root_closed) throw ParseError("content after the root closes", i);
      if (!seen_root) {
        seen_root = true;
        open.push_back(t.root());
      } else {
        open.push_back(t.add_child(open.back()));
      }
    } else if (c == ')') {
      if (open.empty()) throw ParseError("unbalanced ')'", i);
      open.pop_back();
      if (open.empty()) root_closed = true;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (!seen_root) throw ParseError("empty tree encoding", text.size());
  if (!open.empty()) throw ParseError("unbalanced '(' (missing ')')", text.size());
  return t;
}

std::string serialize_tree(const Tree& t) {
  std::string out;
  out.reserve(2 * t.size());
  // Each stack entry is (node, entered?).
  std::vector<std::pair<NodeId, bool>> stack{{t.root(), false}};
  while (!stack.empty()) {
    auto [v, entered] = stack.back();
    stack.pop_back();
    if (entered) {
      out.push_back(')');
      continue;
    }
    out.push_back('(');
    stack.emplace_back(v, true);
    const auto& ch = t.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, false);
  }
  return out;
}

CanonKey canonical_form(const Tree& t, Mode mode) {
  if (mode == Mode::ordered) return CanonKey{serialize_tree(t)};
  std::vector<std::string> enc(t.size());
  auto order = preorder(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    std::vector<std::string*> parts;
    std::size_t len = 2;
    for (NodeId c : t.children(v)) {
      parts.push_back(&enc[c]);
      len += enc[c].size();
    }
    std::sort(parts.begin(), parts.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string s;
    s.reserve(len);
    s.push_back('(');
    for (std::string* p : parts) {
      s += *p;
      std::string().swap(*p);
    }
    s.push_back(')');
    enc[v] = std::move(s);
  }
  return CanonKey{std::move(enc[t.root()])};
}

Tree add_leaf(const Tree& t, NodeId v) {
  if (!t.contains(v)) throw ArgumentError("add_leaf: unknown node id " + std::to_string(v));
  Tree out = t;
  out.add_child(v);
  return out;
}

Tree add_root_above(const Tree& t) {
  Tree out;
  out.graft(out.root(), t);
  return out;
}

TreeStats tree_stats(const Tree& t) {
  TreeStats s;
  s.vertex_count = t.size();
  s.height = t.height();
  for (NodeId v = 0; v < t.size(); ++v) s.max_child_count = std::max(s.max_child_count, t.child_count(v));
  return s;
}

Tree make_star(std::size_t leaves) {
  Tree t;
  for (std::size_t i = 0; i < leaves; ++i) t.add_child(t.root());
  return t;
}

Dataset::Dataset(std::vector<Tree> trees, Mode mode) : trees_(std::move(trees)), mode_(mode) {
  canon_.reserve(trees_.size());
  for (const Tree& t : trees_) canon_.push_back(canonical_form(t, mode_));
}

Dataset load_dataset(std::istream& in, std::optional<Mode> mode_override) {
  std::vector<Tree> trees;
  std::optional<Mode> header_mode;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      std::string body = trim(std::string_view(s).substr(1));
      if (body.rfind("mode=", 0) == 0) {
        auto m = parse_mode(trim(std::string_view(body).substr(5)));
        if (!m) throw ParseError("unknown mode in header '" + body + "'", 0, line_no);
        header_mode = m;
      }
      continue;
    }
    try {
      trees.push_back(parse_tree(s));
    } catch (const ParseError& e) {
      throw ParseError("bad tree encoding", e.offset(), line_no);
    }
  }
  Mode mode = mode_override.value_or(header_mode.value_or(Mode::unordered));
  return Dataset(std::move(trees), mode);
}

Dataset load_dataset_text(std::string_view text, std::optional<Mode> mode_override) {
  std::istringstream in{std::string(text)};
  return load_dataset(in, mode_override);
}

void write_dataset(std::ostream& out, const Dataset& dataset, std::optional<std::size_t> theta,
                   const std::vector<std::string>& comments) {
  out << "# mode=" << to_string(dataset.mode()) << '\n';
  if (theta) out << "# theta=" << *theta << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Tree& t : dataset.trees()) out << serialize_tree(t) << '\n';
}

}  // namespace tmine
