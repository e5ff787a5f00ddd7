#include "tmine/closed_miner.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tmine/errors.hpp"
#include "tmine/height2.hpp"

namespace tmine {

namespace {

using Clock = std::chrono::steady_clock;

// Per-tree facts the miner needs, computed once per call.
class MinerContext {
 public:
  explicit MinerContext(const Dataset& dataset) : dataset_(dataset) {
    if (dataset.mode() != Mode::unordered) {
      throw ConstraintError("closed mining requires an unordered dataset");
    }
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      const Tree& t = dataset.tree(i);
      std::size_t h = t.height();
      if (h > 2) {
        throw ConstraintError("tree " + std::to_string(i) + " has height " + std::to_string(h) +
                              "; closed mining supports height <= 2");
      }
      heights_.push_back(h);
      degrees_.push_back(max_child_count(t));
      max_degree_ = std::max(max_degree_, degrees_.back());
      sigs_.push_back(h == 2 ? chi(t) : Signature{});
      if (h == 2) tall_.push_back(i);
    }
  }

  const Dataset& dataset() const { return dataset_; }
  std::size_t size() const { return dataset_.size(); }
  std::size_t max_degree() const { return max_degree_; }
  const std::vector<std::size_t>& tall() const { return tall_; }
  const Signature& sig(std::size_t i) const { return sigs_[i]; }
  bool has_short_tree() const { return tall_.size() < dataset_.size(); }

  SupportSet support_of_star(std::size_t leaves) const {
    SupportSet s;
    for (std::size_t i = 0; i < size(); ++i) {
      if (degrees_[i] >= leaves) s.indices.push_back(i);
    }
    return s;
  }

  SupportSet support_of_sig(const Signature& x) const {
    SupportSet s;
    for (std::size_t i : tall_) {
      if (signature_leq(x, sigs_[i])) s.indices.push_back(i);
    }
    return s;
  }

  SupportSet support_of(const Tree& pattern) const {
    std::size_t h = pattern.height();
    if (h == 0) return support_of_star(0);
    if (h == 1) return support_of_star(pattern.child_count(pattern.root()));
    if (h == 2) return support_of_sig(chi(pattern));
    return {};
  }

  Signature meet_of(const SupportSet& s) const {
    std::vector<Signature> sigs;
    for (std::size_t i : s.indices) sigs.push_back(sigs_[i]);
    return signature_meet(sigs);
  }

  Tree closure(const Tree& pattern) const {
    SupportSet s = support_of(pattern);
    if (s.indices.empty()) {
      throw ArgumentError("closure undefined: pattern " + serialize_tree(pattern) + " has empty support");
    }
    for (Tree& c : maximal_common_trees(dataset_, s.indices)) {
      if (h2_subtree_iso(pattern, c)) return std::move(c);
    }
    throw ArgumentError("closure: no maximal common tree contains the pattern");  // unreachable
  }

  bool star_closed(std::size_t leaves) const {
    Tree star = make_star(leaves);
    return tree_equal(star, closure(star), Mode::unordered);
  }

  // Closed star sizes in increasing order.
  std::vector<std::size_t> closed_stars() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j <= max_degree_; ++j) {
      if (star_closed(j)) out.push_back(j);
    }
    return out;
  }

  // Height-2 parent of a closed height-2 pattern with signature x.
  std::optional<Signature> parent_sig(const Signature& x, const SupportSet& support) const {
    struct Candidate {
      Signature sig;
      CanonKey key;
      std::size_t index;
    };
    std::vector<Candidate> cands;
    for (std::size_t i : tall_) {
      if (support.contains(i)) continue;
      std::vector<Signature> pair{x, sigs_[i]};
      Signature m = signature_meet(pair);
      CanonKey key = canonical_form(chi_inv(m), Mode::unordered);
      cands.push_back({std::move(m), std::move(key), i});
    }
    if (cands.empty()) return std::nullopt;
    const Candidate* best = nullptr;
    for (const auto& c : cands) {
      bool dominated = std::any_of(cands.begin(), cands.end(), [&](const Candidate& o) {
        return !(o.sig == c.sig) && signature_leq(c.sig, o.sig);
      });
      if (dominated) continue;
      if (!best || c.key < best->key || (c.key == best->key && c.index < best->index)) best = &c;
    }
    return best->sig;
  }

  // Signatures of add_leaf(chi_inv(x), v) for every vertex v at depth <= 1,
  // in vertex id order: the root, then each root child in turn.
  static std::vector<Signature> leaf_extensions(const Signature& x) {
    std::vector<Signature> out;
    std::vector<std::uint32_t> e = x.entries();
    e.push_back(1);
    out.emplace_back(e);
    e.pop_back();
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto f = e;
      ++f[i];
      out.emplace_back(std::move(f));
    }
    return out;
  }

 private:
  const Dataset& dataset_;
  std::vector<std::size_t> heights_;
  std::vector<std::size_t> degrees_;
  std::vector<Signature> sigs_;
  std::vector<std::size_t> tall_;
  std::size_t max_degree_ = 0;
};

bool is_star(const Tree& t) { return t.height() <= 1; }

class Emitter {
 public:
  Emitter(const MiningConfig& config, const SolutionSink& sink, MiningSummary& summary)
      : config_(config), sink_(sink), summary_(summary), last_(Clock::now()) {}

  // Returns false once enumeration must stop.
  bool emit(const SearchNode& node) {
    note_gap();
    ++summary_.count;
    bool go_on = sink_(node);
    last_ = Clock::now();
    if (!go_on || (config_.limit && summary_.count >= *config_.limit)) {
      summary_.stopped = true;
      return false;
    }
    return true;
  }

  void finish() { note_gap(); }

 private:
  void note_gap() {
    auto now = Clock::now();
    summary_.max_delay = std::max(summary_.max_delay, std::chrono::duration<double, std::milli>(now - last_));
  }

  const MiningConfig& config_;
  const SolutionSink& sink_;
  MiningSummary& summary_;
  Clock::time_point last_;
};

bool run_star_scan(const MinerContext& ctx, std::size_t theta, Emitter& out, MiningSummary& summary) {
  for (std::size_t j = 0; j <= ctx.max_degree(); ++j) {
    SupportSet s = ctx.support_of_star(j);
    if (s.count() < theta) break;
    summary.max_depth = std::max<std::size_t>(summary.max_depth, 1);
    summary.peak_live_patterns = std::max<std::size_t>(summary.peak_live_patterns, 1);
    if (!ctx.star_closed(j)) continue;
    Tree star = make_star(j);
    CanonKey key = canonical_form(star, Mode::unordered);
    if (!out.emit(SearchNode{std::move(star), std::move(s), std::move(key)})) return false;
  }
  return true;
}

struct Frame {
  Signature sig;
  SupportSet support;
  std::vector<Signature> extensions;
  std::size_t next = 0;
  std::set<std::vector<std::uint32_t>> seen;
};

bool run_reverse_search(const MinerContext& ctx, std::size_t theta, Emitter& out, MiningSummary& summary) {
  if (ctx.tall().size() < theta) return true;
  SupportSet root_support;
  root_support.indices = ctx.tall();
  Signature root = ctx.meet_of(root_support);

  auto make_node = [](const Signature& sig, const SupportSet& support) {
    Tree t = chi_inv(sig);
    CanonKey key = canonical_form(t, Mode::unordered);
    return SearchNode{std::move(t), support, std::move(key)};
  };

  if (!out.emit(make_node(root, root_support))) return false;
  std::vector<Frame> stack;
  stack.push_back(Frame{root, root_support, MinerContext::leaf_extensions(root), 0, {}});
  auto audit = [&] {
    std::size_t live = 0;
    for (const Frame& f : stack) live += 1 + f.extensions.size() + f.seen.size();
    summary.max_depth = std::max(summary.max_depth, stack.size());
    summary.peak_live_patterns = std::max(summary.peak_live_patterns, live);
  };
  audit();

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.extensions.size()) {
      stack.pop_back();
      continue;
    }
    const Signature& ext = top.extensions[top.next++];
    SupportSet s = ctx.support_of_sig(ext);
    if (s.count() < theta) continue;
    Signature closed = ctx.meet_of(s);
    if (closed == top.sig || !top.seen.insert(closed.entries()).second) continue;
    auto parent = ctx.parent_sig(closed, s);
    if (!parent || !(*parent == top.sig)) continue;
    if (!out.emit(make_node(closed, s))) return false;
    auto exts = MinerContext::leaf_extensions(closed);
    stack.push_back(Frame{std::move(closed), std::move(s), std::move(exts), 0, {}});
    audit();
  }
  return true;
}

void require_closed(const MinerContext& ctx, const Tree& pattern) {
  if (!tree_equal(pattern, ctx.closure(pattern), Mode::unordered)) {
    throw ArgumentError("pattern " + serialize_tree(pattern) + " is not closed");
  }
}

}  // namespace

Tree closure(const Tree& pattern, const Dataset& dataset) { return MinerContext(dataset).closure(pattern); }

bool is_closed(const Tree& pattern, const Dataset& dataset) {
  return tree_equal(pattern, closure(pattern, dataset), Mode::unordered);
}

Tree parent_of(const Tree& pattern, const Dataset& dataset) {
  MinerContext ctx(dataset);
  require_closed(ctx, pattern);
  if (is_star(pattern)) {
    std::size_t leaves = pattern.child_count(pattern.root());
    std::optional<std::size_t> below;
    for (std::size_t j : ctx.closed_stars()) {
      if (j < leaves) below = j;
    }
    if (!below) throw ArgumentError("pattern " + serialize_tree(pattern) + " is a root of the search forest");
    return make_star(*below);
  }
  Signature x = chi(pattern);
  auto parent = ctx.parent_sig(x, ctx.support_of_sig(x));
  if (!parent) throw ArgumentError("pattern " + serialize_tree(pattern) + " is a root of the search forest");
  return chi_inv(*parent);
}

std::vector<Tree> forest_roots(const Dataset& dataset) {
  MinerContext ctx(dataset);
  std::vector<Tree> stars, tall;
  if (auto closed = ctx.closed_stars(); !closed.empty()) stars.push_back(make_star(closed.front()));
  if (!ctx.tall().empty()) {
    SupportSet s;
    s.indices = ctx.tall();
    tall.push_back(chi_inv(ctx.meet_of(s)));
  }
  std::vector<Tree> out;
  auto& first = ctx.has_short_tree() ? stars : tall;
  auto& second = ctx.has_short_tree() ? tall : stars;
  out.insert(out.end(), first.begin(), first.end());
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

std::vector<Tree> neighbors(const Tree& pattern, const Dataset& dataset, std::size_t theta) {
  if (theta < 1) throw ArgumentError("theta must be at least 1");
  MinerContext ctx(dataset);
  CanonKey self = canonical_form(pattern, Mode::unordered);
  std::set<CanonKey> seen{self};
  std::vector<Tree> out;
  for (NodeId v = 0; v < pattern.size(); ++v) {
    if (pattern.depth(v) > 1) continue;
    Tree ext = add_leaf(pattern, v);
    if (ctx.support_of(ext).count() < theta) continue;
    Tree c = ctx.closure(ext);
    if (seen.insert(canonical_form(c, Mode::unordered)).second) out.push_back(std::move(c));
  }
  return out;
}

MiningSummary enumerate_closed(const Dataset& dataset, const MiningConfig& config, const SolutionSink& sink) {
  if (config.theta < 1) throw ArgumentError("theta must be at least 1");
  MinerContext ctx(dataset);
  MiningSummary summary;
  Emitter out(config, sink, summary);
  if (config.theta <= dataset.size()) {
    // mct(dataset) leads: it is a star whenever some tree is shorter than 2.
    if (ctx.has_short_tree()) {
      if (run_star_scan(ctx, config.theta, out, summary)) run_reverse_search(ctx, config.theta, out, summary);
    } else {
      if (run_reverse_search(ctx, config.theta, out, summary)) run_star_scan(ctx, config.theta, out, summary);
    }
  }
  out.finish();
  return summary;
}

}  // namespace tmine
