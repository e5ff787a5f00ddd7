// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "support.hpp"
#include "tmine/brute.hpp"
#include "tmine/closed_miner.hpp"
#include "tmine/gadgets.hpp"
#include "tmine/height2.hpp"
#include "tmine/iso.hpp"

using namespace tmine;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail, Clock::time_point start) {
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("[%s] C%d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(std::size_t x) { return std::to_string(x); }

// Height <= 2 datasets from two generators: signature-shaped trees (with some
// stars and single vertices) and random recursive trees capped at height 2.
Dataset random_dataset(std::mt19937_64& rng) {
  std::size_t k = 2 + rng() % 5;
  if (rng() % 2) return testsupport::random_h2_dataset(rng, k, 12);
  std::vector<Tree> trees;
  for (std::size_t i = 0; i < k; ++i) trees.push_back(testsupport::random_tree(rng, 1 + rng() % 12, 2));
  return Dataset(std::move(trees), Mode::unordered);
}

struct MinedRun {
  std::vector<CanonKey> keys;
  MiningSummary summary;
};

MinedRun mine(const Dataset& ds, std::size_t theta) {
  MinedRun r;
  MiningConfig cfg;
  cfg.theta = theta;
  r.summary = enumerate_closed(ds, cfg, [&](const SearchNode& n) {
    r.keys.push_back(n.canon);
    return true;
  });
  return r;
}

// Criterion 9 statistics gathered during criterion 1.
struct StreamStats {
  std::size_t runs = 0;
  std::size_t duplicate_runs = 0;
  double max_delay_ms = 0;
};

void criterion1(StreamStats& stream) {
  auto start = Clock::now();
  std::mt19937_64 rng(20240101);
  std::size_t datasets = 0, runs = 0, mismatches = 0, solutions = 0;
  for (; datasets < 220; ++datasets) {
    Dataset ds = random_dataset(rng);
    for (std::size_t theta = 1; theta <= ds.size(); ++theta) {
      MinedRun r = mine(ds, theta);
      ++runs;
      std::set<CanonKey> got(r.keys.begin(), r.keys.end());
      stream.duplicate_runs += got.size() != r.keys.size() ? 1 : 0;
      stream.max_delay_ms = std::max(stream.max_delay_ms, r.summary.max_delay.count());
      solutions += r.keys.size();
      if (got != testsupport::keys(brute_closed(ds, theta))) ++mismatches;
    }
  }
  stream.runs = runs;
  report(1, mismatches == 0, "enumerate_closed == brute_closed",
         num(datasets) + " datasets, " + num(runs) + " (dataset, theta) runs, " + num(solutions) +
             " closed trees, " + num(mismatches) + " mismatching runs",
         start);
}

void criterion2() {
  auto start = Clock::now();
  std::mt19937_64 rng(777);
  std::size_t datasets = 520, not_single = 0, wrong_tree = 0, extendable = 0, generalized_mismatch = 0;
  std::string example;
  for (std::size_t i = 0; i < datasets; ++i) {
    Dataset ds = random_dataset(rng);
    PatternSet brute = brute_mct(ds);
    Tree m = mct(ds.trees());
    CanonKey mk = canonical_form(m, Mode::unordered);
    if (brute.size() != 1) {
      ++not_single;
      if (example.empty()) {
        example = " e.g. {";
        for (std::size_t t = 0; t < ds.size(); ++t) example += (t ? " " : "") + ds.canon(t).text;
        example += "} has " + num(brute.size()) + " maximal common trees";
      }
    }
    if (!brute.count(mk)) ++wrong_tree;
    for (NodeId v = 0; v < m.size(); ++v) {
      Tree ext = add_leaf(m, v);
      if (support_set(ext, ds).count() == ds.size()) {
        ++extendable;
        break;
      }
    }
    std::set<CanonKey> all;
    for (const Tree& t : maximal_common_trees(ds.trees())) all.insert(canonical_form(t, Mode::unordered));
    if (all != testsupport::keys(brute)) ++generalized_mismatch;
  }
  report(2, not_single == 0 && wrong_tree == 0 && extendable == 0, "brute_mct is exactly {mct}",
         num(datasets) + " datasets, " + num(not_single) + " with more than one maximal common tree, " +
             num(wrong_tree) + " where mct is not maximal, " + num(extendable) + " where a leaf extension stays common" +
             example,
         start);
  std::printf("       info: maximal_common_trees == brute_mct on %zu/%zu datasets\n",
              datasets - generalized_mismatch, datasets);
}

void criterion3() {
  auto start = Clock::now();
  std::vector<Tree> h2;
  for (Tree& t : testsupport::all_trees_up_to(8, Mode::unordered)) {
    if (t.height() == 2) h2.push_back(std::move(t));
  }
  std::size_t pairs = 0, mismatches = 0;
  for (const Tree& a : h2) {
    for (const Tree& b : h2) {
      ++pairs;
      mismatches += signature_leq(chi(a), chi(b)) != subtree_iso(a, b, Mode::unordered) ? 1 : 0;
    }
  }
  std::mt19937_64 rng(31);
  std::size_t random_pairs = 0;
  while (random_pairs < 1200) {
    Tree a = testsupport::random_h2_tree(rng, 9 + rng() % 20, false);
    Tree b = testsupport::random_h2_tree(rng, 9 + rng() % 30, false);
    if (a.height() != 2 || b.height() != 2) continue;
    ++random_pairs;
    mismatches += signature_leq(chi(a), chi(b)) != subtree_iso(a, b, Mode::unordered) ? 1 : 0;
  }
  report(3, mismatches == 0, "chi order == subtree isomorphism on height-2 trees",
         num(h2.size()) + " trees, " + num(pairs) + " exhaustive pairs + " + num(random_pairs) + " random pairs, " +
             num(mismatches) + " mismatches",
         start);
}

void criterion4() {
  auto start = Clock::now();
  std::mt19937_64 rng(41);
  std::size_t triples = 2000, violations = 0, antisym_premises = 0, trans_premises = 0;
  for (std::size_t i = 0; i < triples; ++i) {
    Signature x = testsupport::random_signature(rng, 3, 3);
    Signature y = testsupport::random_signature(rng, 3, 3);
    Signature z = testsupport::random_signature(rng, 3, 3);
    violations += signature_leq(x, x) ? 0 : 1;
    if (signature_leq(x, y) && signature_leq(y, x)) {
      ++antisym_premises;
      violations += x == y ? 0 : 1;
    }
    if (signature_leq(x, y) && signature_leq(y, z)) {
      ++trans_premises;
      violations += signature_leq(x, z) ? 0 : 1;
    }
  }
  report(4, violations == 0, "partial order laws",
         num(triples) + " triples, " + num(antisym_premises) + " antisymmetry and " + num(trans_premises) +
             " transitivity premises, " + num(violations) + " violations",
         start);
}

void criterion5() {
  auto start = Clock::now();
  std::size_t pairs = 0, mismatches = 0;
  std::string sizes;
  for (Mode mode : {Mode::unordered, Mode::ordered}) {
    auto trees = testsupport::all_trees_up_to(8, mode);
    sizes += std::string(sizes.empty() ? "" : ", ") + num(trees.size()) + " " + std::string(to_string(mode));
    for (const Tree& t : trees) {
      for (const Tree& p : trees) {
        ++pairs;
        mismatches += subtree_iso(p, t, mode) != brute_subtree_iso(p, t, mode) ? 1 : 0;
      }
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  report(5, mismatches == 0 && secs < 60, "iso engine == exhaustive embedding search",
         "all trees <= 8 vertices (" + sizes + "), " + num(pairs) + " pairs, " + num(mismatches) + " mismatches",
         start);
}

void criterion6() {
  auto start = Clock::now();
  std::mt19937_64 rng(61);
  std::size_t instances = 60, mismatches = 0, total_mis = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    std::size_t n = 2 + rng() % 7;
    std::size_t m = 2 + rng() % 5;
    Hypergraph h = testsupport::random_hypergraph(rng, n, m);
    DualGadget g = gen_dualization_instance(h);
    auto mis = brute_mis(h);
    total_mis += mis.size();
    std::set<CanonKey> want{canonical_form(build_w(n), Mode::ordered)};
    for (const auto& s : mis) want.insert(canonical_form(vertexset_to_tree(s, n), Mode::ordered));
    auto got = testsupport::keys(brute_mct(g.dataset));
    if (got != want || got.size() != mis.size() + 1) ++mismatches;
  }
  report(6, mismatches == 0, "dualization gadget: maximal common trees == chi_inv(MIS) + W",
         num(instances) + " hypergraphs, " + num(total_mis) + " maximal independent sets, " + num(mismatches) +
             " mismatches",
         start);
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int lit : c) sat = sat || (lit > 0 ? a[lit - 1] : !a[-lit - 1]);
    if (!sat) return false;
  }
  return true;
}

void criterion7() {
  auto start = Clock::now();
  std::vector<std::pair<std::string, CnfFormula>> formulas;
  {
    CnfFormula f;
    f.n = 11;
    for (int mask = 0; mask < 8; ++mask) f.clauses.push_back({mask & 1 ? 1 : -1, mask & 2 ? 2 : -2, mask & 4 ? 3 : -3});
    f.clauses.push_back({4, 5, 6});
    f.clauses.push_back({7, 8, 9});
    f.clauses.push_back({10, 11, 4});
    formulas.emplace_back("unsat n=11 m=11", f);
  }
  formulas.emplace_back("random n=12 m=14", random_34_cnf(12, 14, 1));
  formulas.emplace_back("random n=16 m=20", random_34_cnf(16, 20, 2));
  {
    CnfFormula f = random_34_cnf(11, 12, 3);
    f.clauses[0] = {1, 2, 3};
    formulas.emplace_back("positive clause n=11 m=12", f);
  }

  std::size_t mismatches = 0, assignments = 0, satisfying = 0;
  std::string detail;
  for (const auto& [name, f] : formulas) {
    if (!check_34_form(f).empty()) {
      ++mismatches;
      continue;
    }
    SatGadget g = gen_sat_instance(f);
    std::size_t m = f.clauses.size();
    for (std::size_t j = 1; j <= m; ++j) {
      for (std::size_t k = 1; k <= m; ++k) {
        mismatches += subtree_iso(build_nu(m, j), build_nu(m, k), Mode::unordered) != (j == k) ? 1 : 0;
      }
      mismatches += subtree_iso(g.dataset.tree(j), g.dataset.tree(0), Mode::unordered) ? 0 : 1;
      mismatches += subtree_iso(g.dataset.tree(j), g.dataset.tree(m + 1), Mode::unordered) ? 1 : 0;
    }
    std::size_t samples = f.n <= 11 ? std::size_t{1} << f.n : 80;
    for (const Assignment& a : sample_assignments(f, samples, 5)) {
      ++assignments;
      bool sat = evaluate(f, a);
      satisfying += sat ? 1 : 0;
      Tree ga = build_gamma_alpha(f, a);
      bool below = false;
      for (std::size_t j = 1; j <= m && !below; ++j) below = subtree_iso(ga, g.dataset.tree(j), Mode::unordered);
      mismatches += below == !sat ? 0 : 1;
      mismatches += sat == satisfies(f, a) ? 0 : 1;
      mismatches += subtree_iso(ga, g.dataset.tree(0), Mode::unordered) &&
                            subtree_iso(ga, g.dataset.tree(m + 1), Mode::unordered)
                        ? 0
                        : 1;
    }
    detail += (detail.empty() ? "" : "; ") + name;
  }
  report(7, mismatches == 0, "SAT gadget lemmas",
         detail + "; " + num(assignments) + " assignments (" + num(satisfying) + " satisfying), " + num(mismatches) +
             " mismatches",
         start);
}

// Maximal theta-frequent itemsets by bitmask enumeration.
std::set<std::vector<std::size_t>> maximal_itemsets_oracle(const TransactionDb& db, std::size_t theta) {
  std::size_t n = db.n;
  std::vector<std::uint32_t> tx;
  for (const auto& t : db.transactions) {
    std::uint32_t mask = 0;
    for (std::size_t v : t) mask |= 1u << (v - 1);
    tx.push_back(mask);
  }
  std::vector<std::uint32_t> frequent;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::size_t c = 0;
    for (std::uint32_t t : tx) c += (s & t) == s ? 1 : 0;
    if (c >= theta) frequent.push_back(s);
  }
  std::set<std::vector<std::size_t>> out;
  for (std::uint32_t s : frequent) {
    bool maximal = true;
    for (std::uint32_t u : frequent) maximal = maximal && !(u != s && (u & s) == s);
    if (!maximal) continue;
    std::vector<std::size_t> items;
    for (std::size_t v = 1; v <= n; ++v) {
      if (s >> (v - 1) & 1u) items.push_back(v);
    }
    out.insert(items);
  }
  return out;
}

void criterion8() {
  auto start = Clock::now();
  std::size_t pairs = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        std::vector<std::size_t> xa, xb;
        for (std::size_t v = 1; v <= n; ++v) {
          if (a >> (v - 1) & 1u) xa.push_back(v);
          if (b >> (v - 1) & 1u) xb.push_back(v);
        }
        ++pairs;
        mismatches += subtree_iso(itemset_tree(xa, n), itemset_tree(xb, n), Mode::ordered) != ((a & b) == a) ? 1 : 0;
      }
    }
  }
  std::mt19937_64 rng(81);
  std::size_t accepted = 0, rejected = 0, instance_mismatches = 0;
  while (accepted < 60) {
    std::size_t n = 3 + rng() % 6;
    TransactionDb db = testsupport::random_transactions(rng, n, 1 + rng() % 8);
    std::size_t eta = 1 + rng() % db.transactions.size();
    auto maximal = maximal_itemsets_oracle(db, eta);
    bool guard = std::all_of(maximal.begin(), maximal.end(), [&](const auto& y) { return y.size() + 1 < n; });
    if (!guard) {
      ++rejected;
      continue;
    }
    ++accepted;
    ItemsetGadget g = gen_itemset_instance(db, {maximal.begin(), maximal.end()}, eta);
    std::set<CanonKey> want{canonical_form(build_w(n), Mode::ordered)};
    for (const auto& y : maximal) want.insert(canonical_form(itemset_tree(y, n), Mode::ordered));
    if (testsupport::keys(brute_maximal(g.dataset, eta)) != want) ++instance_mismatches;
  }
  report(8, mismatches == 0 && instance_mismatches == 0, "itemset gadget correspondence",
         num(pairs) + " subset pairs (n <= 5) with " + num(mismatches) + " mismatches; " + num(accepted) +
             " guarded databases (" + num(rejected) + " rejected by the guard) with " + num(instance_mismatches) +
             " mismatches",
         start);
}

void criterion9(const StreamStats& stream) {
  auto start = Clock::now();
  // Seeded search for a dataset with at least 100 closed trees.
  std::mt19937_64 rng(91);
  Dataset best;
  MinedRun best_run;
  for (int attempt = 0; attempt < 200 && best_run.keys.size() < 100; ++attempt) {
    std::vector<Tree> trees;
    // Equal-length signatures keep every coordinate of the meets in play.
    std::size_t k = 20 + rng() % 10;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::uint32_t> e(5);
      for (auto& x : e) x = 1 + rng() % 9;
      trees.push_back(chi_inv(Signature(e)));
    }
    Dataset ds(std::move(trees), Mode::unordered);
    MinedRun r = mine(ds, 1);
    if (r.keys.size() > best_run.keys.size()) {
      best = ds;
      best_run = std::move(r);
    }
  }
  std::size_t max_vertices = 0;
  for (const Tree& t : best.trees()) max_vertices = std::max(max_vertices, t.size());
  const MiningSummary& s = best_run.summary;
  std::set<CanonKey> unique(best_run.keys.begin(), best_run.keys.end());
  // Each open frame holds its pattern, at most |V| + 1 pending extensions and
  // as many remembered closures; the depth is bounded by the support chain.
  std::size_t depth_bound = best.size() + 1;
  std::size_t live_bound = depth_bound * (1 + 2 * (max_vertices + 1));
  bool memory_ok = s.max_depth <= depth_bound && s.peak_live_patterns <= live_bound;
  bool ok = stream.duplicate_runs == 0 && unique.size() == best_run.keys.size() && best_run.keys.size() >= 100 &&
            memory_ok;
  char delay[64];
  std::snprintf(delay, sizeof delay, "%.3f", stream.max_delay_ms);
  char delay_big[64];
  std::snprintf(delay_big, sizeof delay_big, "%.3f", s.max_delay.count());
  report(9, ok, "streaming contract",
         num(stream.duplicate_runs) + " of " + num(stream.runs) + " runs with duplicates, max delay " + delay +
             " ms; audit dataset: " + num(best.size()) + " trees, " + num(best_run.keys.size()) +
             " closed trees, max delay " + delay_big + " ms, max depth " + num(s.max_depth) + " (bound " +
             num(depth_bound) + "), peak live patterns " + num(s.peak_live_patterns) + " (bound " +
             num(live_bound) + ")",
         start);
}

}  // namespace

int main() {
  StreamStats stream;
  criterion1(stream);
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(stream);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
