#include "tmine/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "tmine/brute.hpp"
#include "tmine/closed_miner.hpp"
#include "tmine/errors.hpp"
#include "tmine/gadgets.hpp"
#include "tmine/height2.hpp"
#include "tmine/iso.hpp"
#include "tmine/tree.hpp"

namespace tmine {

namespace {

struct Options {
  std::string input;
  std::size_t theta = 1;
  std::string mode;
  std::optional<std::string> pattern;
  std::optional<std::string> target;
  std::string out;
  std::uint64_t seed = 1;
  std::optional<std::size_t> limit;
  std::string maximal;
  std::size_t samples = 50;
};

// Streams for one invocation; owns the files opened by --input and --out.
class Io {
 public:
  Io(const Options& o, std::ostream& out, std::istream& in) : out_(&out), in_(&in), input_(o.input) {
    if (!o.out.empty()) {
      file_out_.open(o.out);
      if (!file_out_) throw ArgumentError("cannot open output file " + o.out);
      out_ = &file_out_;
    }
  }

  std::istream& input() {
    if (input_.empty() || input_ == "-") return *in_;
    if (!file_in_.is_open()) {
      file_in_.open(input_);
      if (!file_in_) throw ArgumentError("cannot open input file " + input_);
    }
    return file_in_;
  }

  std::istream& standard_input() { return *in_; }

  bool input_is_stdin() const { return input_.empty() || input_ == "-"; }

  std::ostream& out() { return *out_; }

  // False once the consumer is gone.
  bool line(const std::string& s) {
    *out_ << s << '\n';
    out_->flush();
    return out_->good();
  }

 private:
  std::ostream* out_;
  std::istream* in_;
  std::string input_;
  std::ifstream file_in_;
  std::ofstream file_out_;
};

std::optional<Mode> mode_flag(const Options& o) {
  if (o.mode.empty()) return std::nullopt;
  auto m = parse_mode(o.mode);
  if (!m) throw ArgumentError("--mode must be ordered or unordered, got '" + o.mode + "'");
  return m;
}

Dataset read_dataset(Io& io, const Options& o) { return load_dataset(io.input(), mode_flag(o)); }

void require_theta(const Options& o) {
  if (o.theta < 1) throw ArgumentError("--theta must be at least 1");
}

void print_patterns(Io& io, const PatternSet& set) {
  for (const auto& kv : set) {
    if (!io.line(kv.first.text)) return;
  }
}

std::string join_ids(const std::vector<std::size_t>& ids, char sep) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(ids[i]);
  return s;
}

int cmd_mine_closed(const Options& o, Io& io, std::ostream& err) {
  require_theta(o);
  Dataset ds = read_dataset(io, o);
  MiningConfig cfg;
  cfg.theta = o.theta;
  cfg.limit = o.limit;
  MiningSummary s = enumerate_closed(ds, cfg, [&](const SearchNode& n) { return io.line(n.canon.text); });
  err << "count=" << s.count << " max_delay_ms=" << s.max_delay.count() << " max_depth=" << s.max_depth
      << " peak_live_patterns=" << s.peak_live_patterns << '\n';
  return 0;
}

int cmd_oracle(const std::string& which, const Options& o, Io& io) {
  if (which == "mis") {
    Hypergraph h = read_hypergraph(io.input());
    for (const auto& set : brute_mis(h)) {
      if (!io.line(join_ids(set, ' '))) break;
    }
    return 0;
  }
  Dataset ds = read_dataset(io, o);
  if (which == "mct") {
    print_patterns(io, brute_mct(ds));
    return 0;
  }
  require_theta(o);
  if (which == "frequent") print_patterns(io, brute_frequent(ds, o.theta));
  if (which == "maximal") print_patterns(io, brute_maximal(ds, o.theta));
  if (which == "closed") print_patterns(io, brute_closed(ds, o.theta));
  return 0;
}

int cmd_mct(const Options& o, Io& io, std::ostream& err) {
  Dataset ds = read_dataset(io, o);
  if (ds.mode() != Mode::unordered) throw ConstraintError("mct needs an unordered dataset");
  if (ds.empty()) throw ArgumentError("mct of an empty dataset is undefined");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.tree(i).height() > 2) {
      throw ConstraintError("tree " + std::to_string(i) + " has height " + std::to_string(ds.tree(i).height()) +
                            "; mct supports height <= 2");
    }
  }
  auto all = maximal_common_trees(ds.trees());
  io.line(canonical_form(all.front(), Mode::unordered).text);
  for (std::size_t i = 1; i < all.size(); ++i) {
    err << "note: another maximal common tree exists: " << canonical_form(all[i], Mode::unordered).text << '\n';
  }
  return 0;
}

int cmd_support(const Options& o, Io& io) {
  if (!o.pattern && io.input_is_stdin()) {
    throw ArgumentError("support reads patterns from standard input, so the dataset needs --input PATH");
  }
  Dataset ds = read_dataset(io, o);
  auto report = [&](const std::string& text) {
    Tree p = parse_tree(text);
    SupportSet s = support_set(p, ds);
    return io.line(canonical_form(p, ds.mode()).text + ' ' + std::to_string(s.count()) + ' ' +
                   (s.indices.empty() ? "-" : join_ids(s.indices, ',')));
  };
  if (o.pattern) {
    report(*o.pattern);
    return 0;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(io.standard_input(), line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      if (!report(line)) break;
    } catch (const ParseError& e) {
      throw ParseError(std::string("pattern: ") + e.what(), e.offset(), line_no);
    }
  }
  return 0;
}

int cmd_iso(const Options& o, Io& io) {
  if (!o.pattern || !o.target) throw ArgumentError("iso needs --pattern and --target");
  Mode mode = mode_flag(o).value_or(Mode::unordered);
  io.line(subtree_iso(parse_tree(*o.pattern), parse_tree(*o.target), mode) ? "true" : "false");
  return 0;
}

int cmd_canon(const Options& o, Io& io) {
  if (o.pattern) {
    io.line(canonical_form(parse_tree(*o.pattern), mode_flag(o).value_or(Mode::unordered)).text);
    return 0;
  }
  Dataset ds = read_dataset(io, o);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!io.line(ds.canon(i).text)) break;
  }
  return 0;
}

std::vector<ItemSet> read_itemsets(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open itemset file " + path);
  return read_transactions(f).transactions;
}

ItemsetGadget itemset_gadget(const Options& o, Io& io) {
  require_theta(o);
  TransactionDb db = read_transactions(io.input());
  std::vector<ItemSet> maximal =
      o.maximal.empty() ? brute_maximal_itemsets(db, o.theta) : read_itemsets(o.maximal);
  return gen_itemset_instance(std::move(db), std::move(maximal), o.theta);
}

int cmd_gen(const std::string& kind, const Options& o, Io& io, std::ostream& err) {
  if (kind == "dual") {
    DualGadget g = gen_dualization_instance(read_hypergraph(io.input()));
    write_dataset(io.out(), g.dataset, g.dataset.size(),
                  {"gadget=dual n=" + std::to_string(g.n) + " m=" + std::to_string(g.m),
                   "w=" + canonical_form(g.w_tree, Mode::ordered).text});
  } else if (kind == "sat") {
    SatGadget g = gen_sat_instance(read_dimacs(io.input()));
    for (const auto& w : g.warnings) err << "warning: " << w << '\n';
    write_dataset(io.out(), g.dataset, g.theta,
                  {"gadget=sat n=" + std::to_string(g.cnf.n) + " m=" + std::to_string(g.cnf.clauses.size())});
  } else {
    ItemsetGadget g = itemset_gadget(o, io);
    std::vector<std::string> comments{"gadget=itemset n=" + std::to_string(g.n)};
    for (const Tree& t : g.s_set) comments.push_back("solution=" + canonical_form(t, Mode::ordered).text);
    write_dataset(io.out(), g.dataset, g.theta, comments);
  }
  io.out().flush();
  return 0;
}

int cmd_verify(const std::string& kind, const Options& o, Io& io, std::ostream& err) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.samples = o.samples;
  VerifyReport r;
  if (kind == "dual") {
    r = verify_gadget(gen_dualization_instance(read_hypergraph(io.input())), vo);
  } else if (kind == "sat") {
    SatGadget g = gen_sat_instance(read_dimacs(io.input()));
    for (const auto& w : g.warnings) err << "warning: " << w << '\n';
    r = verify_gadget(g, vo);
  } else {
    r = verify_gadget(itemset_gadget(o, io), vo);
  }
  write_report(io.out(), r);
  io.out().flush();
  return r.passed() ? 0 : 1;
}

void add_input(CLI::App* c, Options& o) {
  c->add_option("--input", o.input, "Input file, or - for standard input");
}
void add_mode(CLI::App* c, Options& o) {
  c->add_option("--mode", o.mode, "ordered or unordered (default: dataset header, else unordered)");
}
void add_theta(CLI::App* c, Options& o) { c->add_option("--theta", o.theta, "Minimum support (default 1)"); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  CLI::App app{"Frequent and closed rooted-tree mining toolkit"};
  app.require_subcommand(1, 1);
  std::function<int(Io&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->add_option("--out", o.out, "Write results here instead of standard output");
    return c;
  };

  CLI::App* mine = app.add_subcommand("mine", "Closed tree mining");
  mine->require_subcommand(1, 1);
  {
    CLI::App* c = leaf(mine, "closed", "Stream closed frequent trees (unordered, height <= 2)");
    add_input(c, o);
    add_mode(c, o);
    add_theta(c, o);
    c->add_option("--limit", o.limit, "Stop after this many trees");
    c->callback([&] { action = [&](Io& io) { return cmd_mine_closed(o, io, err); }; });
  }

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  oracle->require_subcommand(1, 1);
  for (std::string which : {"frequent", "closed", "maximal", "mct", "mis"}) {
    CLI::App* c = leaf(oracle, which, "Brute-force " + which);
    add_input(c, o);
    if (which != "mis") add_mode(c, o);
    if (which != "mis" && which != "mct") add_theta(c, o);
    c->callback([&, which] { action = [&, which](Io& io) { return cmd_oracle(which, o, io); }; });
  }

  {
    CLI::App* c = leaf(&app, "mct", "Maximal common tree of a height <= 2 unordered dataset");
    add_input(c, o);
    add_mode(c, o);
    c->callback([&] { action = [&](Io& io) { return cmd_mct(o, io, err); }; });
  }
  {
    CLI::App* c = leaf(&app, "support", "Support of --pattern, or of each pattern line on standard input");
    add_input(c, o);
    add_mode(c, o);
    c->add_option("--pattern", o.pattern, "Pattern tree");
    c->callback([&] { action = [&](Io& io) { return cmd_support(o, io); }; });
  }
  {
    CLI::App* c = leaf(&app, "iso", "Is --pattern subtree isomorphic to --target");
    add_mode(c, o);
    c->add_option("--pattern", o.pattern, "Pattern tree")->required();
    c->add_option("--target", o.target, "Target tree")->required();
    c->callback([&] { action = [&](Io& io) { return cmd_iso(o, io); }; });
  }
  {
    CLI::App* c = leaf(&app, "canon", "Canonical form of --pattern or of every dataset tree");
    add_input(c, o);
    add_mode(c, o);
    c->add_option("--pattern", o.pattern, "Single tree");
    c->callback([&] { action = [&](Io& io) { return cmd_canon(o, io); }; });
  }

  CLI::App* gen = app.add_subcommand("gen", "Build a reduction gadget dataset");
  CLI::App* verify = app.add_subcommand("verify", "Check the gadget lemmas on one instance");
  gen->require_subcommand(1, 1);
  verify->require_subcommand(1, 1);
  for (std::string kind : {"dual", "sat", "itemset"}) {
    std::string source = kind == "dual" ? "hypergraph" : kind == "sat" ? "DIMACS CNF" : "transaction";
    CLI::App* g = leaf(gen, kind, "Gadget from a " + source + " file");
    CLI::App* v = leaf(verify, kind, "Verify the gadget built from a " + source + " file");
    for (CLI::App* c : {g, v}) {
      add_input(c, o);
      if (kind == "itemset") {
        c->add_option("--theta", o.theta, "Itemset support threshold eta (default 1)");
        c->add_option("--maximal", o.maximal, "Maximal frequent itemsets (default: computed by brute force)");
      }
    }
    v->add_option("--seed", o.seed, "Seed for sampled assignments");
    v->add_option("--samples", o.samples, "Minimum number of sampled assignments");
    g->callback([&, kind] { action = [&, kind](Io& io) { return cmd_gen(kind, o, io, err); }; });
    v->callback([&, kind] { action = [&, kind](Io& io) { return cmd_verify(kind, o, io, err); }; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Io io(o, out, in);
    int code = action ? action(io) : 2;
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace tmine
