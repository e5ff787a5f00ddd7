#include "tmine/brute.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "tmine/errors.hpp"
#include "tmine/iso.hpp"

namespace tmine {

namespace {

constexpr std::size_t kSat = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSat - b ? kSat : a + b; }

// Number of induced subtrees rooted exactly at each vertex.
std::vector<std::size_t> rooted_counts(const Tree& t) {
  std::vector<std::size_t> f(t.size(), 1);
  std::vector<NodeId> pre;
  std::vector<NodeId> stack{t.root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    pre.push_back(v);
    for (NodeId c : t.children(v)) stack.push_back(c);
  }
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    for (NodeId c : t.children(*it)) f[*it] = sat_mul(f[*it], sat_add(f[c], 1));
  }
  return f;
}

void check_guard(const Tree& t, const BruteLimits& limits) {
  std::size_t n = count_induced_subtrees(t);
  if (n > limits.max_subtrees_per_tree) {
    throw SizeGuardError("brute-force oracle refuses a tree with " +
                         (n == kSat ? std::string("too many") : std::to_string(n)) + " induced subtrees (limit " +
                         std::to_string(limits.max_subtrees_per_tree) + ")");
  }
}

// Ordered serializations of every induced subtree rooted at v, keeping the
// literal child order of `t`.
std::vector<std::string> rooted_encodings(const Tree& t, NodeId v) {
  std::vector<std::string> acc{"("};
  for (NodeId c : t.children(v)) {
    std::vector<std::string> sub = rooted_encodings(t, c);
    std::vector<std::string> next;
    next.reserve(acc.size() * (sub.size() + 1));
    for (const auto& prefix : acc) {
      next.push_back(prefix);
      for (const auto& s : sub) next.push_back(prefix + s);
    }
    acc = std::move(next);
  }
  for (auto& s : acc) s.push_back(')');
  return acc;
}

// Vertex sets of induced subtrees rooted at v with at most `cap` vertices.
std::vector<std::vector<NodeId>> rooted_vertex_sets(const Tree& t, NodeId v, std::size_t cap) {
  std::vector<std::vector<NodeId>> acc{{v}};
  if (cap <= 1) return acc;
  for (NodeId c : t.children(v)) {
    auto sub = rooted_vertex_sets(t, c, cap - 1);
    std::vector<std::vector<NodeId>> next;
    for (const auto& base : acc) {
      next.push_back(base);
      for (const auto& s : sub) {
        if (base.size() + s.size() > cap) continue;
        auto joined = base;
        joined.insert(joined.end(), s.begin(), s.end());
        next.push_back(std::move(joined));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Searches for a bijection phi: pattern -> `subset` such that u is the parent
// of v in the pattern iff phi(u) is the parent of phi(v) in the target, and in
// ordered mode sibling order is preserved both ways.
class BijectionSearch {
 public:
  BijectionSearch(const Tree& pattern, const Tree& target, Mode mode, const std::vector<NodeId>& subset)
      : pattern_(pattern), target_(target), mode_(mode), subset_(subset), phi_(pattern.size(), kNoNode) {
    std::vector<NodeId> stack{pattern.root()};
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      order_.push_back(v);
      for (NodeId c : pattern.children(v)) stack.push_back(c);
    }
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t k) {
    if (k == order_.size()) return verify();
    NodeId x = order_[k];
    for (NodeId y : subset_) {
      if (std::find(phi_.begin(), phi_.end(), y) != phi_.end()) continue;
      if (x != pattern_.root() && target_.parent(y) != phi_[pattern_.parent(x)]) continue;
      phi_[x] = y;
      if (extend(k + 1)) return true;
      phi_[x] = kNoNode;
    }
    return false;
  }

  bool verify() const {
    auto preimage = [&](NodeId y) -> NodeId {
      auto it = std::find(phi_.begin(), phi_.end(), y);
      return it == phi_.end() ? kNoNode : static_cast<NodeId>(it - phi_.begin());
    };
    for (NodeId a : subset_) {
      for (NodeId b : subset_) {
        bool target_edge = b != target_.root() && target_.parent(b) == a;
        NodeId pa = preimage(a), pb = preimage(b);
        bool pattern_edge = pb != pattern_.root() && pattern_.parent(pb) == pa;
        if (target_edge != pattern_edge) return false;
      }
    }
    if (mode_ == Mode::ordered) {
      for (NodeId v = 0; v < pattern_.size(); ++v) {
        const auto& pc = pattern_.children(v);
        const auto& tc = target_.children(phi_[v]);
        for (std::size_t i = 0; i < pc.size(); ++i) {
          for (std::size_t j = 0; j < pc.size(); ++j) {
            auto pi = std::find(tc.begin(), tc.end(), phi_[pc[i]]);
            auto pj = std::find(tc.begin(), tc.end(), phi_[pc[j]]);
            if ((i < j) != (pi < pj)) return false;
          }
        }
      }
    }
    return true;
  }

  const Tree& pattern_;
  const Tree& target_;
  Mode mode_;
  const std::vector<NodeId>& subset_;
  std::vector<NodeId> phi_;
  std::vector<NodeId> order_;
};

struct Scored {
  CanonKey key;
  const Tree* tree;
  SupportSet support;
};

// Candidate universe for theta-frequent patterns: such a pattern occurs in at
// least theta trees, so the union over any |D| - theta + 1 trees contains it.
// The trees with the fewest induced subtrees are used.
PatternSet frequent_universe(const Dataset& dataset, std::size_t theta, const BruteLimits& limits) {
  std::vector<std::size_t> idx(dataset.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> cost(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) cost[i] = count_induced_subtrees(dataset.tree(i));
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });
  idx.resize(dataset.size() - theta + 1);
  PatternSet out;
  for (std::size_t i : idx) out.merge(induced_subtrees(dataset.tree(i), dataset.mode(), limits));
  return out;
}

std::vector<Scored> scored_frequent(const Dataset& dataset, std::size_t theta, const PatternSet& universe) {
  std::vector<Scored> out;
  for (const auto& [key, tree] : universe) {
    SupportSet s = support_set(tree, dataset);
    if (s.count() >= theta) out.push_back({key, &tree, std::move(s)});
  }
  return out;
}

void require_theta(std::size_t theta) {
  if (theta < 1) throw ArgumentError("theta must be at least 1");
}

std::vector<std::size_t> bits_to_set(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (mask >> v & 1u) out.push_back(v + 1);
  }
  return out;
}

std::uint64_t set_to_bits(const std::vector<std::size_t>& s) {
  std::uint64_t m = 0;
  for (std::size_t v : s) m |= std::uint64_t{1} << (v - 1);
  return m;
}

void normalize_sets(std::size_t n, std::vector<std::vector<std::size_t>>& sets, const char* what) {
  for (auto& s : sets) {
    for (std::size_t v : s) {
      if (v < 1 || v > n) {
        throw ArgumentError(std::string(what) + " id " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

void check_subset_guard(std::size_t n, const BruteLimits& limits) {
  if (n > limits.max_subset_vertices || n >= 63) {
    throw SizeGuardError("brute-force subset enumeration refuses n=" + std::to_string(n) + " (limit " +
                         std::to_string(limits.max_subset_vertices) + ")");
  }
}

}  // namespace

void Hypergraph::normalize() {
  normalize_sets(n, edges, "vertex");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty()) throw ArgumentError("hyperedge " + std::to_string(i + 1) + " is empty");
  }
}

void TransactionDb::normalize() { normalize_sets(n, transactions, "item"); }

std::size_t count_induced_subtrees(const Tree& t) {
  std::size_t total = 0;
  for (std::size_t f : rooted_counts(t)) total = sat_add(total, f);
  return total;
}

PatternSet induced_subtrees(const Tree& t, Mode mode, const BruteLimits& limits) {
  check_guard(t, limits);
  std::set<std::string> literal;
  for (NodeId v = 0; v < t.size(); ++v) {
    for (auto& s : rooted_encodings(t, v)) literal.insert(std::move(s));
  }
  PatternSet out;
  for (const auto& s : literal) {
    Tree p = parse_tree(s);
    CanonKey key = canonical_form(p, mode);
    out.try_emplace(std::move(key), std::move(p));
  }
  return out;
}

PatternSet all_patterns(const Dataset& dataset, const BruteLimits& limits) {
  for (const Tree& t : dataset.trees()) check_guard(t, limits);
  PatternSet out;
  for (const Tree& t : dataset.trees()) out.merge(induced_subtrees(t, dataset.mode(), limits));
  return out;
}

bool brute_subtree_iso(const Tree& pattern, const Tree& target, Mode mode, const BruteLimits& limits) {
  check_guard(target, limits);
  if (pattern.size() > target.size()) return false;
  for (NodeId v = 0; v < target.size(); ++v) {
    for (const auto& subset : rooted_vertex_sets(target, v, pattern.size())) {
      if (subset.size() != pattern.size()) continue;
      if (BijectionSearch(pattern, target, mode, subset).run()) return true;
    }
  }
  return false;
}

PatternSet brute_frequent(const Dataset& dataset, std::size_t theta, const BruteLimits& limits) {
  require_theta(theta);
  if (theta > dataset.size()) return {};
  PatternSet universe = frequent_universe(dataset, theta, limits);
  PatternSet out;
  for (auto& s : scored_frequent(dataset, theta, universe)) out.emplace(s.key, *s.tree);
  return out;
}

PatternSet brute_maximal(const Dataset& dataset, std::size_t theta, const BruteLimits& limits) {
  require_theta(theta);
  if (theta > dataset.size()) return {};
  PatternSet universe = frequent_universe(dataset, theta, limits);
  auto freq = scored_frequent(dataset, theta, universe);
  std::stable_sort(freq.begin(), freq.end(),
                   [](const Scored& a, const Scored& b) { return a.tree->size() > b.tree->size(); });
  // Anything below a frequent pattern is below some maximal one, and maximal
  // patterns larger than the current candidate were already decided.
  std::vector<const Scored*> maximal;
  for (const auto& p : freq) {
    bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](const Scored* m) {
      return m->tree->size() > p.tree->size() && subtree_iso(*p.tree, *m->tree, dataset.mode());
    });
    if (!dominated) maximal.push_back(&p);
  }
  PatternSet out;
  for (const Scored* m : maximal) out.emplace(m->key, *m->tree);
  return out;
}

PatternSet brute_closed(const Dataset& dataset, std::size_t theta, const BruteLimits& limits) {
  require_theta(theta);
  if (theta > dataset.size()) return {};
  PatternSet universe = frequent_universe(dataset, theta, limits);
  auto freq = scored_frequent(dataset, theta, universe);
  std::stable_sort(freq.begin(), freq.end(),
                   [](const Scored& a, const Scored& b) { return a.tree->size() > b.tree->size(); });
  // A strict super-pattern with equal support lies below a closed pattern
  // with that same support.
  std::map<std::vector<std::size_t>, std::vector<const Scored*>> closed_by_support;
  PatternSet out;
  for (const auto& p : freq) {
    auto& group = closed_by_support[p.support.indices];
    bool absorbed = std::any_of(group.begin(), group.end(), [&](const Scored* q) {
      return q->tree->size() > p.tree->size() && subtree_iso(*p.tree, *q->tree, dataset.mode());
    });
    if (!absorbed) {
      group.push_back(&p);
      out.emplace(p.key, *p.tree);
    }
  }
  return out;
}

PatternSet brute_mct(const Dataset& dataset, const BruteLimits& limits) {
  if (dataset.empty()) return {};
  return brute_maximal(dataset, dataset.size(), limits);
}

std::vector<ItemSet> brute_mis(const Hypergraph& h, const BruteLimits& limits) {
  check_subset_guard(h.n, limits);
  std::vector<std::uint64_t> edge_bits;
  for (const auto& e : h.edges) edge_bits.push_back(set_to_bits(e));
  auto independent = [&](std::uint64_t s) {
    return std::none_of(edge_bits.begin(), edge_bits.end(), [&](std::uint64_t e) { return (e & s) == e; });
  };
  std::vector<ItemSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.n); ++s) {
    if (!independent(s)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < h.n && maximal; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (!(s & bit) && independent(s | bit)) maximal = false;
    }
    if (maximal) out.push_back(bits_to_set(s, h.n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ItemSet> brute_frequent_itemsets(const TransactionDb& db, std::size_t theta, const BruteLimits& limits) {
  require_theta(theta);
  check_subset_guard(db.n, limits);
  std::vector<std::uint64_t> rows;
  for (const auto& t : db.transactions) rows.push_back(set_to_bits(t));
  std::vector<ItemSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << db.n); ++s) {
    auto support = std::count_if(rows.begin(), rows.end(), [&](std::uint64_t r) { return (r & s) == s; });
    if (static_cast<std::size_t>(support) >= theta) out.push_back(bits_to_set(s, db.n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ItemSet> brute_maximal_itemsets(const TransactionDb& db, std::size_t theta, const BruteLimits& limits) {
  auto freq = brute_frequent_itemsets(db, theta, limits);
  std::set<std::uint64_t> freq_bits;
  for (const auto& s : freq) freq_bits.insert(set_to_bits(s));
  std::vector<ItemSet> out;
  for (const auto& s : freq) {
    std::uint64_t b = set_to_bits(s);
    bool maximal = std::none_of(freq_bits.begin(), freq_bits.end(),
                                [&](std::uint64_t o) { return o != b && (o & b) == b; });
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace tmine
