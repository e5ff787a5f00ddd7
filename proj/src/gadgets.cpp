#include "tmine/gadgets.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "tmine/errors.hpp"
#include "tmine/iso.hpp"

namespace tmine {

namespace {

void require_range(std::size_t value, std::size_t lo, std::size_t hi, const char* what) {
  if (value < lo || value > hi) {
    throw ArgumentError(std::string(what) + " " + std::to_string(value) + " outside " + std::to_string(lo) + ".." +
                        std::to_string(hi));
  }
}

std::set<CanonKey> keys_of(const std::vector<Tree>& trees, Mode mode) {
  std::set<CanonKey> out;
  for (const Tree& t : trees) out.insert(canonical_form(t, mode));
  return out;
}

std::set<CanonKey> keys_of(const PatternSet& set) {
  std::set<CanonKey> out;
  for (const auto& kv : set) out.insert(kv.first);
  return out;
}

LemmaCheck make_check(std::string name, bool ok, std::vector<std::pair<std::string, std::string>> fields = {}) {
  return LemmaCheck{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(fields)};
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skip:
      return "skip";
    case CheckStatus::flagged:
      return "flagged";
  }
  return "fail";
}

std::vector<std::size_t> parse_ids(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::vector<std::size_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || v < 1) throw ParseError("expected a positive integer, got '" + tok + "'", 0, line_no);
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

bool is_comment_or_blank(const std::string& line) {
  auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

}  // namespace

// ---- CNF -------------------------------------------------------------------

void CnfFormula::normalize() {
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    auto& c = clauses[j];
    if (c.empty()) throw ArgumentError("clause " + std::to_string(j + 1) + " is empty");
    for (int lit : c) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > n) {
        throw ArgumentError("clause " + std::to_string(j + 1) + " has literal " + std::to_string(lit) +
                            " outside the " + std::to_string(n) + " declared variables");
      }
    }
    std::vector<int> uniq;
    for (int lit : c) {
      if (std::find(uniq.begin(), uniq.end(), lit) == uniq.end()) uniq.push_back(lit);
    }
    c = std::move(uniq);
  }
}

bool satisfies(const CnfFormula& cnf, const Assignment& alpha) {
  if (alpha.size() != cnf.n) throw ArgumentError("assignment must give a value to every variable");
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const std::vector<int>& c) {
    return std::any_of(c.begin(), c.end(), [&](int lit) { return alpha[std::abs(lit) - 1] == (lit > 0); });
  });
}

std::vector<std::string> check_34_form(const CnfFormula& cnf) {
  std::vector<std::string> out;
  std::map<int, std::size_t> occurrences;
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    if (cnf.clauses[j].size() > 3) {
      out.push_back("clause " + std::to_string(j + 1) + " has " + std::to_string(cnf.clauses[j].size()) +
                    " literals");
    }
    for (int lit : cnf.clauses[j]) ++occurrences[lit];
  }
  for (const auto& [lit, count] : occurrences) {
    if (count > 4) out.push_back("literal " + std::to_string(lit) + " occurs " + std::to_string(count) + " times");
  }
  return out;
}

CnfFormula random_34_cnf(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 3 || 3 * m > 8 * n) throw ArgumentError("need n >= 3 and at most 8n/3 clauses");
  std::mt19937_64 rng(seed);
  for (;;) {
    CnfFormula f;
    f.n = n;
    std::map<int, std::size_t> used;
    std::size_t attempts = 0;
    while (f.clauses.size() < m && ++attempts < 1000 * (m + 1)) {
      std::vector<int> c;
      while (c.size() < 3) {
        int v = static_cast<int>(1 + rng() % n);
        if (std::find(c.begin(), c.end(), v) != c.end() || std::find(c.begin(), c.end(), -v) != c.end()) continue;
        c.push_back(rng() & 1u ? v : -v);
      }
      if (std::any_of(c.begin(), c.end(), [&](int lit) { return used[lit] >= 4; })) continue;
      for (int lit : c) ++used[lit];
      f.clauses.push_back(std::move(c));
    }
    if (f.clauses.size() == m) return f;
  }
}

// ---- SAT family -------------------------------------------------------------

Tree build_nu(std::size_t m, std::size_t j) {
  require_range(j, 1, m, "nu index");
  Tree t;
  for (std::size_t c = 0; c < m - j + 1; ++c) {
    NodeId child = t.add_child(t.root());
    for (std::size_t k = 0; k < j; ++k) t.add_child(child);
  }
  return t;
}

Tree build_zeta(std::size_t m, std::optional<std::size_t> omit) {
  if (m < 1) throw ArgumentError("zeta needs m >= 1");
  if (omit) require_range(*omit, 1, m, "zeta omitted index");
  Tree t;
  for (std::size_t i = 1; i <= m; ++i) {
    if (omit && *omit == i) continue;
    t.graft(t.root(), build_nu(m, i));
  }
  return t;
}

namespace {

// u-branch of mu_i for one literal sign: a vertex carrying nu(m, j) for every
// clause j that holds the literal.
void attach_branch(Tree& t, NodeId parent, const CnfFormula& cnf, int literal) {
  NodeId u = t.add_child(parent);
  std::size_t m = cnf.clauses.size();
  for (std::size_t j = 0; j < m; ++j) {
    const auto& c = cnf.clauses[j];
    if (std::find(c.begin(), c.end(), literal) != c.end()) t.graft(u, build_nu(m, j + 1));
  }
}

}  // namespace

Tree build_mu(std::size_t i, const CnfFormula& cnf) {
  require_range(i, 1, cnf.n, "variable");
  Tree t;
  attach_branch(t, t.root(), cnf, static_cast<int>(i));
  attach_branch(t, t.root(), cnf, -static_cast<int>(i));
  return t;
}

Tree build_gamma_phi(const CnfFormula& cnf) {
  Tree t;
  for (std::size_t i = 1; i <= cnf.n; ++i) t.graft(t.root(), build_mu(i, cnf));
  return t;
}

Tree build_gamma_alpha(const CnfFormula& cnf, const Assignment& alpha) {
  if (alpha.size() != cnf.n) throw ArgumentError("assignment must give a value to every variable");
  Tree t;
  for (std::size_t i = 1; i <= cnf.n; ++i) {
    NodeId mu = t.add_child(t.root());
    int lit = alpha[i - 1] ? static_cast<int>(i) : -static_cast<int>(i);
    attach_branch(t, mu, cnf, lit);
  }
  return t;
}

Tree build_xi(std::size_t n, std::size_t m, std::optional<std::size_t> omit) {
  Tree zeta = build_zeta(m, omit);
  Tree t;
  for (std::size_t i = 0; i < n; ++i) {
    NodeId c = t.add_child(t.root());
    t.graft(c, zeta);
  }
  return t;
}

SatGadget gen_sat_instance(const CnfFormula& input) {
  CnfFormula cnf = input;
  cnf.normalize();
  if (auto bad = check_34_form(cnf); !bad.empty()) {
    std::string msg = "formula is not in (3,4) form:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw ConstraintError(msg);
  }
  if (cnf.clauses.empty()) throw ArgumentError("formula needs at least one clause");
  SatGadget g;
  std::size_t m = cnf.clauses.size();
  if (cnf.n <= 10 || m <= 10) {
    g.warnings.push_back("the reduction assumes more than 10 variables and clauses (n=" + std::to_string(cnf.n) +
                         ", m=" + std::to_string(m) + ")");
  }
  std::vector<Tree> trees;
  trees.push_back(build_xi(cnf.n, m));
  for (std::size_t j = 1; j <= m; ++j) {
    trees.push_back(build_xi(cnf.n, m, j));
    g.known_solutions.push_back(trees.back());
  }
  trees.push_back(build_gamma_phi(cnf));
  g.dataset = Dataset(std::move(trees), Mode::unordered);
  g.cnf = std::move(cnf);
  return g;
}

// ---- dualization family -------------------------------------------------------

Tree vertexset_to_tree(const std::vector<std::size_t>& u, std::size_t n) {
  Tree t;
  for (std::size_t i = 1; i <= n; ++i) {
    NodeId c = t.add_child(t.root());
    if (std::find(u.begin(), u.end(), i) != u.end()) t.add_child(c);
  }
  for (std::size_t v : u) require_range(v, 1, n, "vertex");
  return t;
}

std::vector<std::size_t> tree_to_vertexset(const Tree& t, std::size_t n) {
  const auto& ch = t.children(t.root());
  if (ch.size() != n) {
    throw ArgumentError("expected a root with " + std::to_string(n) + " children, got " + std::to_string(ch.size()));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& grand = t.children(ch[i]);
    if (grand.size() > 1 || (grand.size() == 1 && !t.children(grand[0]).empty())) {
      throw ArgumentError("child " + std::to_string(i + 1) + " is neither a leaf nor a single-leaf parent");
    }
    if (grand.size() == 1) out.push_back(i + 1);
  }
  return out;
}

Tree edge_tree(const std::vector<std::size_t>& edge, std::size_t n) {
  std::vector<std::size_t> e = edge;
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  if (e.empty()) throw ArgumentError("edge must be nonempty");
  for (std::size_t v : e) require_range(v, 1, n, "vertex");
  std::set<std::size_t> leaf_positions;
  for (std::size_t j = 1; j <= e.size(); ++j) leaf_positions.insert(e[j - 1] + j - 1);
  Tree t;
  for (std::size_t pos = 1; pos <= n + e.size() - 1; ++pos) {
    NodeId c = t.add_child(t.root());
    if (!leaf_positions.count(pos)) t.add_child(c);
  }
  return t;
}

Tree build_w(std::size_t n) {
  Tree t;
  for (std::size_t i = 1; i < n; ++i) t.add_child(t.add_child(t.root()));
  return t;
}

DualGadget gen_dualization_instance(Hypergraph h) {
  h.normalize();
  for (std::size_t v = 1; v <= h.n; ++v) {
    bool universal = std::all_of(h.edges.begin(), h.edges.end(), [&](const std::vector<std::size_t>& e) {
      return std::binary_search(e.begin(), e.end(), v);
    });
    if (universal) {
      throw ConstraintError("vertex " + std::to_string(v) +
                            " lies in every hyperedge; remove it first (mis(H) splits into V minus v and mis(H - v))");
    }
  }
  DualGadget g;
  g.n = h.n;
  g.m = h.edges.size();
  std::vector<std::size_t> all(h.n);
  for (std::size_t i = 0; i < h.n; ++i) all[i] = i + 1;
  std::vector<Tree> trees{vertexset_to_tree(all, h.n)};
  for (const auto& e : h.edges) trees.push_back(edge_tree(e, h.n));
  g.dataset = Dataset(std::move(trees), Mode::ordered);
  g.w_tree = build_w(h.n);
  g.hypergraph = std::move(h);
  return g;
}

// ---- itemset family ---------------------------------------------------------

Tree itemset_tree(const std::vector<std::size_t>& x, std::size_t n) { return vertexset_to_tree(x, n); }

ItemsetGadget gen_itemset_instance(TransactionDb db, std::vector<ItemSet> maximal_itemsets, std::size_t eta) {
  if (eta < 1) throw ArgumentError("eta must be at least 1");
  db.normalize();
  for (auto& y : maximal_itemsets) {
    for (std::size_t v : y) require_range(v, 1, db.n, "item");
    std::sort(y.begin(), y.end());
  }
  ItemsetGadget g;
  g.n = db.n;
  g.theta = eta;
  std::vector<Tree> trees;
  for (const auto& x : db.transactions) trees.push_back(itemset_tree(x, db.n));
  Tree r = build_w(db.n);
  for (std::size_t k = 0; k < eta; ++k) trees.push_back(r);
  g.dataset = Dataset(std::move(trees), Mode::ordered);
  for (const auto& y : maximal_itemsets) g.s_set.push_back(itemset_tree(y, db.n));
  g.s_set.push_back(r);
  g.transactions = std::move(db);
  g.maximal_itemsets = std::move(maximal_itemsets);
  return g;
}

// ---- verification -----------------------------------------------------------

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.status == CheckStatus::fail; });
}

const LemmaCheck* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& c : report.checks) {
    out << c.name << '=' << status_name(c.status);
    for (const auto& [k, v] : c.fields) out << ' ' << k << '=' << v;
    out << '\n';
  }
  out << "overall=" << (report.passed() ? "pass" : "fail") << '\n';
}

VerifyReport verify_gadget(const DualGadget& g, const VerifyOptions& options) {
  VerifyReport r;
  const Mode mode = Mode::ordered;
  std::size_t w_hits = 0;
  for (const Tree& t : g.dataset.trees()) w_hits += subtree_iso(g.w_tree, t, mode) ? 1 : 0;
  r.checks.push_back(make_check("w_common", w_hits == g.dataset.size(),
                                {{"contained_in", std::to_string(w_hits)}, {"trees", std::to_string(g.dataset.size())}}));

  auto mis = brute_mis(g.hypergraph, options.limits);
  std::vector<Tree> expected{g.w_tree};
  std::size_t mis_common = 0;
  for (const auto& i : mis) {
    expected.push_back(vertexset_to_tree(i, g.n));
    bool common = std::all_of(g.dataset.trees().begin(), g.dataset.trees().end(),
                              [&](const Tree& t) { return subtree_iso(expected.back(), t, mode); });
    mis_common += common ? 1 : 0;
  }
  r.checks.push_back(make_check("mis_trees_common", mis_common == mis.size(),
                                {{"mis", std::to_string(mis.size())}, {"common", std::to_string(mis_common)}}));

  PatternSet brute = brute_mct(g.dataset, options.limits);
  auto want = keys_of(expected, mode);
  auto got = keys_of(brute);
  r.checks.push_back(make_check("mct_equals_mis_plus_w", want == got && got.size() == mis.size() + 1,
                                {{"brute_mct", std::to_string(got.size())},
                                 {"mis", std::to_string(mis.size())},
                                 {"expected", std::to_string(want.size())}}));
  return r;
}

std::vector<Assignment> sample_assignments(const CnfFormula& cnf, std::size_t samples, std::uint64_t seed) {
  std::vector<Assignment> out;
  if (cnf.n < 63 && (std::uint64_t{1} << cnf.n) <= samples) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cnf.n); ++mask) {
      Assignment a(cnf.n);
      for (std::size_t i = 0; i < cnf.n; ++i) a[i] = mask >> i & 1u;
      out.push_back(std::move(a));
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  auto random_assignment = [&] {
    Assignment a(cnf.n);
    for (std::size_t i = 0; i < cnf.n; ++i) a[i] = rng() & 1u;
    return a;
  };
  out.push_back(Assignment(cnf.n, true));
  out.push_back(Assignment(cnf.n, false));
  for (const auto& c : cnf.clauses) {
    bool tautology = std::any_of(c.begin(), c.end(), [&](int lit) {
      return std::find(c.begin(), c.end(), -lit) != c.end();
    });
    if (tautology) continue;
    Assignment a = random_assignment();
    for (int lit : c) a[std::abs(lit) - 1] = lit < 0;
    out.push_back(std::move(a));
  }
  while (out.size() < samples) out.push_back(random_assignment());
  return out;
}

VerifyReport verify_gadget(const SatGadget& g, const VerifyOptions& options) {
  VerifyReport r;
  const Mode mode = Mode::unordered;
  const CnfFormula& cnf = g.cnf;
  const std::size_t m = cnf.clauses.size();
  const Tree& xi = g.dataset.tree(0);
  const Tree& gamma = g.dataset.tree(m + 1);

  std::size_t tall = 0;
  for (const Tree& t : g.dataset.trees()) tall += t.height() == 5 ? 1 : 0;
  r.checks.push_back(make_check("heights_are_5", tall == g.dataset.size(),
                                {{"height5", std::to_string(tall)}, {"trees", std::to_string(g.dataset.size())}}));

  std::vector<Tree> nus;
  for (std::size_t j = 1; j <= m; ++j) nus.push_back(build_nu(m, j));
  std::size_t antichain_bad = 0;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) antichain_bad += subtree_iso(nus[j], nus[k], mode) != (j == k) ? 1 : 0;
  }
  r.checks.push_back(make_check("nu_antichain", antichain_bad == 0,
                                {{"pairs", std::to_string(m * m)}, {"mismatches", std::to_string(antichain_bad)}}));

  std::size_t in_xi = 0, in_gamma = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    in_xi += subtree_iso(g.dataset.tree(j), xi, mode) ? 1 : 0;
    in_gamma += subtree_iso(g.dataset.tree(j), gamma, mode) ? 1 : 0;
  }
  r.checks.push_back(make_check("xi_j_in_xi", in_xi == m, {{"contained", std::to_string(in_xi)}, {"m", std::to_string(m)}}));
  r.checks.push_back(make_check("xi_j_not_in_gamma_phi", in_gamma == 0, {{"contained", std::to_string(in_gamma)}}));

  auto assignments = sample_assignments(cnf, options.samples, options.seed);
  std::size_t below_both = 0, mismatches = 0, satisfying = 0;
  for (const auto& alpha : assignments) {
    Tree ga = build_gamma_alpha(cnf, alpha);
    below_both += subtree_iso(ga, gamma, mode) && subtree_iso(ga, xi, mode) ? 1 : 0;
    bool some_xi_j = false;
    for (std::size_t j = 1; j <= m && !some_xi_j; ++j) some_xi_j = subtree_iso(ga, g.dataset.tree(j), mode);
    bool sat = satisfies(cnf, alpha);
    satisfying += sat ? 1 : 0;
    mismatches += some_xi_j == sat ? 1 : 0;
  }
  r.checks.push_back(make_check("gamma_alpha_in_gamma_phi_and_xi", below_both == assignments.size(),
                                {{"assignments", std::to_string(assignments.size())},
                                 {"contained", std::to_string(below_both)}}));
  r.checks.push_back(make_check("gamma_alpha_criterion", mismatches == 0,
                                {{"assignments", std::to_string(assignments.size())},
                                 {"satisfying", std::to_string(satisfying)},
                                 {"mismatches", std::to_string(mismatches)}}));
  return r;
}

VerifyReport verify_gadget(const ItemsetGadget& g, const VerifyOptions& options) {
  VerifyReport r;
  const Mode mode = Mode::ordered;
  const auto& xs = g.transactions.transactions;

  std::size_t order_bad = 0;
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
      order_bad += subtree_iso(itemset_tree(a, g.n), itemset_tree(b, g.n), mode) != subset ? 1 : 0;
    }
  }
  r.checks.push_back(make_check("itemset_order_embedding", order_bad == 0,
                                {{"pairs", std::to_string(xs.size() * xs.size())},
                                 {"mismatches", std::to_string(order_bad)}}));

  auto frequent = brute_frequent_itemsets(g.transactions, g.theta, options.limits);
  std::size_t large = std::count_if(frequent.begin(), frequent.end(),
                                    [&](const ItemSet& s) { return s.size() + 1 >= g.n; });
  auto maximal = brute_maximal_itemsets(g.transactions, g.theta, options.limits);
  if (large > 0) {
    r.checks.push_back(LemmaCheck{"guard_no_frequent_itemset_of_size_n_minus_1", CheckStatus::flagged,
                                  {{"large_frequent_itemsets", std::to_string(large)}}});
    r.checks.push_back(LemmaCheck{"maximal_trees_equal_itemsets_plus_r", CheckStatus::skip, {{"reason", "guard"}}});
    return r;
  }
  r.checks.push_back(make_check("guard_no_frequent_itemset_of_size_n_minus_1", true, {{"large_frequent_itemsets", "0"}}));

  std::vector<Tree> expected{build_w(g.n)};
  for (const auto& y : maximal) expected.push_back(itemset_tree(y, g.n));
  auto want = keys_of(expected, mode);
  auto got = keys_of(brute_maximal(g.dataset, g.theta, options.limits));
  r.checks.push_back(make_check("maximal_trees_equal_itemsets_plus_r", want == got,
                                {{"brute_maximal", std::to_string(got.size())},
                                 {"maximal_itemsets", std::to_string(maximal.size())}}));

  auto declared = keys_of(g.s_set, mode);
  bool declared_ok = std::includes(got.begin(), got.end(), declared.begin(), declared.end());
  r.checks.push_back(make_check("declared_solutions_maximal", declared_ok,
                                {{"declared", std::to_string(declared.size())},
                                 {"another_solution", got.size() > declared.size() ? "yes" : "no"}}));
  return r;
}

// ---- text formats -------------------------------------------------------------

Hypergraph read_hypergraph(std::istream& in) {
  Hypergraph h;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> m;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    if (!m) {
      std::istringstream head(line);
      long long n = -1, count = -1;
      std::string extra;
      if (!(head >> n >> count) || (head >> extra) || n < 0 || count < 0) {
        throw ParseError("expected header 'n m'", 0, line_no);
      }
      h.n = static_cast<std::size_t>(n);
      m = static_cast<std::size_t>(count);
      continue;
    }
    if (h.edges.size() == *m) throw ParseError("more hyperedges than declared", 0, line_no);
    auto ids = parse_ids(line, line_no);
    for (std::size_t v : ids) {
      if (v > h.n) throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(h.n), 0, line_no);
    }
    h.edges.push_back(std::move(ids));
  }
  if (!m) throw ParseError("missing header 'n m'", 0, line_no);
  if (h.edges.size() != *m) throw ParseError("fewer hyperedges than declared", 0, line_no);
  h.normalize();
  return h;
}

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream s(line);
    std::string tok;
    if (!(s >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string kind;
      long long n = -1, m = -1;
      if (!(s >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0) {
        throw ParseError("expected 'p cnf <vars> <clauses>'", 0, line_no);
      }
      f.n = static_cast<std::size_t>(n);
      declared = static_cast<std::size_t>(m);
      continue;
    }
    if (!declared) throw ParseError("clause before the 'p cnf' header", 0, line_no);
    do {
      std::size_t pos = 0;
      long long lit = 0;
      try {
        lit = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw ParseError("bad literal '" + tok + "'", 0, line_no);
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", 0, line_no);
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::size_t>(std::llabs(lit)) > f.n) {
          throw ParseError("literal " + tok + " exceeds the declared variable count", 0, line_no);
        }
        current.push_back(static_cast<int>(lit));
      }
    } while (s >> tok);
  }
  if (!declared) throw ParseError("missing 'p cnf' header", 0, line_no);
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (f.clauses.size() != *declared) {
    throw ParseError("header declares " + std::to_string(*declared) + " clauses, found " +
                         std::to_string(f.clauses.size()),
                     0, line_no);
  }
  f.normalize();
  return f;
}

void write_dimacs(std::ostream& out, const CnfFormula& cnf) {
  out << "p cnf " << cnf.n << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

TransactionDb read_transactions(std::istream& in) {
  TransactionDb db;
  std::optional<std::size_t> declared_n;
  std::string line;
  std::size_t line_no = 0;
  std::size_t max_item = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    if (line[p] == '#') {
      auto eq = line.find("n=", p);
      if (eq != std::string::npos) {
        auto ids = parse_ids(line.substr(eq + 2), line_no);
        if (ids.size() != 1) throw ParseError("bad '# n=<int>' header", 0, line_no);
        declared_n = ids[0];
      }
      continue;
    }
    auto ids = parse_ids(line, line_no);
    for (std::size_t v : ids) max_item = std::max(max_item, v);
    db.transactions.push_back(std::move(ids));
  }
  db.n = declared_n.value_or(max_item);
  if (max_item > db.n) throw ParseError("item " + std::to_string(max_item) + " exceeds n=" + std::to_string(db.n), 0, line_no);
  db.normalize();
  return db;
}

}  // namespace tmine
