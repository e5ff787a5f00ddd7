#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tmine/brute.hpp"
#include "tmine/tree.hpp"

namespace tmine {

// CNF over variables 1..n; literals are signed ints as in DIMACS.
struct CnfFormula {
  std::size_t n = 0;
  std::vector<std::vector<int>> clauses;

  // Drops repeated literals inside a clause; throws ArgumentError on an empty
  // clause, a zero literal or a variable outside 1..n.
  void normalize();
};

// alpha[i] is the value of variable i + 1.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& cnf, const Assignment& alpha);

// Violations of the (3,4) form: clauses longer than 3 and literals occurring
// more than 4 times. Empty when the formula conforms.
std::vector<std::string> check_34_form(const CnfFormula& cnf);

// Seeded random formula with m clauses of 3 distinct variables each, no
// literal used more than 4 times. Throws ArgumentError when n < 3 or 3m > 8n.
CnfFormula random_34_cnf(std::size_t n, std::size_t m, std::uint64_t seed);

// ---- unordered maximal-frequent family (height 5) -------------------------

// Root with m - j + 1 children, each carrying j leaves.
Tree build_nu(std::size_t m, std::size_t j);
// Root whose children are the roots of nu(m, 1..m), skipping `omit`.
Tree build_zeta(std::size_t m, std::optional<std::size_t> omit = std::nullopt);
// Root with children u1, u2: u1 carries nu(m, j) for every clause j holding
// the literal x_i, u2 for every clause holding -x_i.
Tree build_mu(std::size_t i, const CnfFormula& cnf);
// Gamma_phi with one u-branch removed per variable. The branch of the literal
// made true by alpha stays: u1 when alpha(x_i) is true, u2 otherwise. With
// that choice nu(m, k) survives iff clause k is satisfied.
Tree build_gamma_alpha(const CnfFormula& cnf, const Assignment& alpha);
// Root with n children, each with a single child whose subtree is zeta (or
// zeta minus nu(m, omit)).
Tree build_xi(std::size_t n, std::size_t m, std::optional<std::size_t> omit = std::nullopt);
Tree build_gamma_phi(const CnfFormula& cnf);

struct SatGadget {
  Dataset dataset;  // [xi, xi_1 .. xi_m, Gamma_phi], unordered
  std::size_t theta = 2;
  CnfFormula cnf;
  std::vector<Tree> known_solutions;  // xi_1 .. xi_m
  std::vector<std::string> warnings;
};

// Throws ConstraintError when the formula is not in (3,4) form. Formulas with
// n <= 10 or m <= 10 are accepted with a warning.
SatGadget gen_sat_instance(const CnfFormula& cnf);

// ---- ordered dualization family (height 2) --------------------------------

// Root with n children; child i carries one leaf iff i is in `u`.
Tree vertexset_to_tree(const std::vector<std::size_t>& u, std::size_t n);
// Inverse of vertexset_to_tree; throws ArgumentError on other shapes.
std::vector<std::size_t> tree_to_vertexset(const Tree& t, std::size_t n);
// T(E): root with n + |E| - 1 children; the child at 1-based position
// w_j + j - 1 (E sorted ascending as w_1 < w_2 < ...) is a leaf, every other
// child carries one leaf.
Tree edge_tree(const std::vector<std::size_t>& edge, std::size_t n);
// Root with n - 1 children, each carrying one leaf.
Tree build_w(std::size_t n);

struct DualGadget {
  Dataset dataset;  // [S, T(E_1) .. T(E_m)], ordered
  std::size_t n = 0;
  std::size_t m = 0;
  Tree w_tree;
  Hypergraph hypergraph;
};

// Throws ConstraintError when some vertex lies in every edge (including the
// edgeless case); such vertices must be peeled off by the caller first.
DualGadget gen_dualization_instance(Hypergraph h);

// ---- ordered maximal-frequent family (height 2) ---------------------------

// Root with n children; child j carries one leaf iff j is in `x`.
Tree itemset_tree(const std::vector<std::size_t>& x, std::size_t n);

struct ItemsetGadget {
  Dataset dataset;  // [T(X_1) .. T(X_k), R_1 .. R_eta], ordered
  std::size_t n = 0;
  std::size_t theta = 0;
  std::vector<Tree> s_set;  // T(Y_1) .. T(Y_l), R_1
  TransactionDb transactions;
  std::vector<ItemSet> maximal_itemsets;
};

// Throws ArgumentError when an item lies outside 1..n or eta < 1.
ItemsetGadget gen_itemset_instance(TransactionDb db, std::vector<ItemSet> maximal_itemsets, std::size_t eta);

// ---- verification ---------------------------------------------------------

enum class CheckStatus { pass, fail, skip, flagged };

struct LemmaCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct VerifyReport {
  std::vector<LemmaCheck> checks;

  bool passed() const;
  const LemmaCheck* find(const std::string& name) const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  // Minimum number of assignments tried by the SAT verifier.
  std::size_t samples = 50;
  BruteLimits limits;
};

VerifyReport verify_gadget(const DualGadget& g, const VerifyOptions& options = {});
VerifyReport verify_gadget(const SatGadget& g, const VerifyOptions& options = {});
VerifyReport verify_gadget(const ItemsetGadget& g, const VerifyOptions& options = {});

// One "name=status key=value ..." line per check.
void write_report(std::ostream& out, const VerifyReport& report);

// Assignments the SAT verifier tries: all-true, all-false, one falsifier per
// non-tautological clause, then seeded random ones up to `samples`; every
// assignment when 2^n <= samples.
std::vector<Assignment> sample_assignments(const CnfFormula& cnf, std::size_t samples, std::uint64_t seed);

// ---- text formats ---------------------------------------------------------

// "n m" on the first non-comment line, then m lines of 1-based vertex ids.
Hypergraph read_hypergraph(std::istream& in);
// DIMACS: "c" comments, "p cnf n m", 0-terminated clauses.
CnfFormula read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& cnf);
// One transaction per non-blank line; "# n=<int>" sets the universe size,
// otherwise the largest item does.
TransactionDb read_transactions(std::istream& in);

}  // namespace tmine
