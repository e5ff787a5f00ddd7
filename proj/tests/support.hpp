#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmine/brute.hpp"
#include "tmine/height2.hpp"
#include "tmine/tree.hpp"

namespace testsupport {

using tmine::Mode;
using tmine::Tree;

// Random recursive tree: vertex k attaches below a uniform earlier vertex,
// rejected until the height bound holds.
inline Tree random_tree(std::mt19937_64& rng, std::size_t vertices, std::size_t max_height) {
  Tree t;
  while (t.size() < vertices) {
    std::vector<tmine::NodeId> open;
    for (tmine::NodeId v = 0; v < t.size(); ++v) {
      if (t.depth(v) < max_height) open.push_back(v);
    }
    if (open.empty()) break;
    t.add_child(open[rng() % open.size()]);
  }
  return t;
}

// Height <= 2 tree shaped from a random signature, optionally mixing in short
// trees; the vertex count stays <= max_vertices.
inline Tree random_h2_tree(std::mt19937_64& rng, std::size_t max_vertices, bool allow_short = true) {
  if (allow_short && rng() % 10 == 0) {
    if (rng() % 3 == 0) return Tree{};
    return tmine::make_star(1 + rng() % (max_vertices - 1));
  }
  std::vector<std::uint32_t> entries;
  std::size_t budget = max_vertices - 1;
  while (budget >= 1) {
    std::uint32_t e = 1 + rng() % std::min<std::size_t>(budget, 5);
    if (entries.empty() && e == 1 && budget >= 2) e = 2;
    entries.push_back(e);
    budget -= e;
    if (rng() % 3 == 0) break;
  }
  if (std::all_of(entries.begin(), entries.end(), [](std::uint32_t e) { return e == 1; })) entries[0] = 2;
  Tree t = tmine::chi_inv(tmine::Signature(entries));
  return t;
}

inline tmine::Dataset random_h2_dataset(std::mt19937_64& rng, std::size_t trees, std::size_t max_vertices,
                                        bool allow_short = true) {
  std::vector<Tree> out;
  for (std::size_t i = 0; i < trees; ++i) out.push_back(random_h2_tree(rng, max_vertices, allow_short));
  return tmine::Dataset(std::move(out), Mode::unordered);
}

inline tmine::Signature random_signature(std::mt19937_64& rng, std::size_t max_len, std::uint32_t max_entry) {
  std::vector<std::uint32_t> e(1 + rng() % max_len);
  for (auto& x : e) x = 1 + rng() % max_entry;
  return tmine::Signature(e);
}

// Every ordered tree with exactly `n` vertices (Dyck words of length 2n - 2
// wrapped in the root pair).
inline std::vector<Tree> all_ordered_trees(std::size_t n) {
  std::vector<Tree> out;
  std::string word;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t open, std::size_t close) {
    if (open == n - 1 && close == n - 1) {
      out.push_back(tmine::parse_tree("(" + word + ")"));
      return;
    }
    if (open < n - 1) {
      word.push_back('(');
      rec(open + 1, close);
      word.pop_back();
    }
    if (close < open) {
      word.push_back(')');
      rec(open, close + 1);
      word.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

// One representative per isomorphism class in `mode`, for all sizes 1..n.
inline std::vector<Tree> all_trees_up_to(std::size_t n, Mode mode) {
  std::vector<Tree> out;
  std::set<tmine::CanonKey> seen;
  for (std::size_t k = 1; k <= n; ++k) {
    for (Tree& t : all_ordered_trees(k)) {
      if (seen.insert(tmine::canonical_form(t, mode)).second) out.push_back(std::move(t));
    }
  }
  return out;
}

inline std::set<tmine::CanonKey> keys(const tmine::PatternSet& s) {
  std::set<tmine::CanonKey> out;
  for (const auto& kv : s) out.insert(kv.first);
  return out;
}

// Rejection-samples hypergraphs without a universal vertex. A single edge
// always has one, so m must be at least 2.
inline tmine::Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  if (m < 2) throw std::invalid_argument("random_hypergraph needs m >= 2");
  while (true) {
    tmine::Hypergraph h;
    h.n = n;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::size_t> e;
      for (std::size_t v = 1; v <= n; ++v) {
        if (rng() % 3 == 0) e.push_back(v);
      }
      if (e.empty()) e.push_back(1 + rng() % n);
      h.edges.push_back(e);
    }
    h.normalize();
    bool universal = false;
    for (std::size_t v = 1; v <= n && !universal; ++v) {
      universal = std::all_of(h.edges.begin(), h.edges.end(),
                              [&](const auto& e) { return std::binary_search(e.begin(), e.end(), v); });
    }
    if (!universal) return h;
  }
}

inline tmine::TransactionDb random_transactions(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  tmine::TransactionDb db;
  db.n = n;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::size_t> x;
    for (std::size_t v = 1; v <= n; ++v) {
      if (rng() % 2 == 0) x.push_back(v);
    }
    db.transactions.push_back(x);
  }
  db.normalize();
  return db;
}

}  // namespace testsupport
