#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibhuff/fibhuff.hpp"

#ifndef FIBHUFF_FIXTURE_DIR
#define FIBHUFF_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace fibhuff;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

std::vector<Nat> parse_weights(const std::string& text) {
  std::vector<Nat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(parse_nat(b == std::string::npos ? std::string() : item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw Error(ErrorCode::EmptySequence, "no weights given");
  return out;
}

WeightSeq make_seq(const std::string& text, bool sort) {
  auto w = parse_weights(text);
  return sort ? WeightSeq::sorted(std::move(w)) : WeightSeq(std::move(w));
}

void print_tree(std::ostream& os, const HuffTree& tree, std::size_t id, const std::string& indent, bool last,
                bool is_root) {
  const auto& n = tree.node(id);
  os << indent;
  if (!is_root) os << (last ? "`-- " : "|-- ");
  if (n.is_leaf()) {
    os << n.weight << " [leaf " << n.leaf + 1 << "]\n";
    return;
  }
  os << n.weight << '\n';
  const std::string child_indent = is_root ? indent : indent + (last ? "    " : "|   ");
  print_tree(os, tree, n.left, child_indent, false, false);
  print_tree(os, tree, n.right, child_indent, true, false);
}

struct HuffmanArgs {
  std::string weights;
  bool sort = false;
  bool trace = false;
  bool tree = false;
  bool codebook = false;
  OutputFormat format = OutputFormat::Table;
  TiePolicy tie = TiePolicy::Canonical;
  std::string marker = "*";
};

int run_huffman_cmd(const HuffmanArgs& a) {
  const auto P = make_seq(a.weights, a.sort);
  const auto trace = run_huffman(P, a.tie);
  const auto tree = build_tree(P, a.tie);
  const auto cost = wepl(tree);

  if (a.format == OutputFormat::Json) {
    nlohmann::json j;
    if (a.trace) j["trace"] = trace_to_json(trace);
    j["total"] = trace.total.str();
    j["wepl"] = cost.str();
    if (a.tree) {
      j["depths"] = tree.leaf_depths();
      j["elongated"] = is_elongated(tree);
      j["left_sided"] = is_left_sided(tree);
    }
    if (a.codebook) {
      auto cb = nlohmann::json::array();
      for (const auto& c : codebook(tree)) cb.push_back({{"leaf", c.leaf}, {"weight", P[c.leaf].str()}, {"code", c.bits}});
      j["codebook"] = cb;
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  if (a.format == OutputFormat::Csv) {
    if (a.trace) std::cout << render_csv(trace);
    if (a.codebook) {
      std::cout << "leaf,weight,code\n";
      for (const auto& c : codebook(tree)) std::cout << c.leaf << ',' << P[c.leaf] << ',' << c.bits << '\n';
    }
    if (!a.trace && !a.codebook) std::cout << "total,wepl\n" << trace.total << ',' << cost << '\n';
    return kExitOk;
  }

  if (a.trace) std::cout << render_table(trace, a.marker);
  if (a.tree) {
    print_tree(std::cout, tree, tree.root_id(), "", true, true);
    std::cout << "elongated: " << (is_elongated(tree) ? "yes" : "no")
              << ", left-sided: " << (is_left_sided(tree) ? "yes" : "no") << '\n';
  }
  if (a.codebook) {
    for (const auto& c : codebook(tree)) std::cout << c.leaf << '\t' << P[c.leaf] << '\t' << c.bits << '\n';
  }
  std::cout << "total: " << trace.total << "\nwepl: " << cost << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Huffman traces, the generalized Wythoff array and minimizing weight sequences"};
  app.require_subcommand(1);

  std::size_t n = 0, k = 0;
  std::string row_text = "0";
  std::size_t cols = 10;
  bool generalized = false, absolute = false;
  std::optional<std::uint64_t> max_weight;
  std::uint64_t limit = kDefaultCandidateLimit;
  unsigned threads = 1;
  std::string fixtures = FIBHUFF_FIXTURE_DIR;
  HuffmanArgs hargs;
  std::string classify_weights;
  bool classify_sort = false;
  OutputFormat minseq_format = OutputFormat::Table;

  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  const std::map<std::string, TiePolicy> ties{{"canonical", TiePolicy::Canonical},
                                              {"after", TiePolicy::MergedAfterEquals},
                                              {"before", TiePolicy::MergedBeforeEquals}};

  auto* fib_cmd = app.add_subcommand("fib", "Print F(n)");
  fib_cmd->add_option("--n", n, "Index")->required();

  auto* lucas_cmd = app.add_subcommand("lucas", "Print L(n), n >= 1");
  lucas_cmd->add_option("--n", n, "Index")->required();

  auto* wythoff_cmd = app.add_subcommand("wythoff", "Print a row of the Wythoff array");
  wythoff_cmd->add_option("--row", row_text, "Row index")->required();
  wythoff_cmd->add_option("--cols", cols, "Number of columns")->required()->check(CLI::PositiveNumber);
  wythoff_cmd->add_flag("--generalized", generalized, "Include the row-index and lower-Wythoff columns");

  auto* minseq_cmd = app.add_subcommand("minseq", "Print the minimizing sequence and its cost");
  minseq_cmd->add_option("--n", n, "Sequence size (>= 3)")->required();
  auto* minseq_k = minseq_cmd->add_option("--k", k, "Order k in [0, n-3]");
  auto* minseq_abs = minseq_cmd->add_flag("--abs", absolute, "Absolutely ordered class");
  minseq_k->excludes(minseq_abs);
  minseq_cmd->add_option("--format", minseq_format, "table|json")->transform(CLI::CheckedTransformer(formats));

  auto* huff_cmd = app.add_subcommand("huffman", "Run the Huffman algorithm on a weight list");
  huff_cmd->add_option("--weights", hargs.weights, "Comma-separated weights")->required();
  huff_cmd->add_flag("--sort", hargs.sort, "Sort the weights first");
  huff_cmd->add_flag("--trace", hargs.trace, "Print the step table");
  huff_cmd->add_flag("--tree", hargs.tree, "Print the tree");
  huff_cmd->add_flag("--codebook", hargs.codebook, "Print codewords");
  huff_cmd->add_option("--format", hargs.format, "table|json|csv")->transform(CLI::CheckedTransformer(formats));
  huff_cmd->add_option("--tie", hargs.tie, "canonical|after|before")->transform(CLI::CheckedTransformer(ties));
  huff_cmd->add_option("--marker", hargs.marker, "Suffix marking the merged value in table mode");

  auto* classify_cmd = app.add_subcommand("classify", "Print the order class of a weight list");
  classify_cmd->add_option("--weights", classify_weights, "Comma-separated weights")->required();
  classify_cmd->add_flag("--sort", classify_sort, "Sort the weights first");

  auto* verify_cmd = app.add_subcommand("verify", "Brute-force check of the closed-form minimum");
  verify_cmd->add_option("--n", n, "Sequence size (>= 3)")->required();
  auto* verify_k = verify_cmd->add_option("--k", k, "Order k in [0, n-3]");
  auto* verify_abs = verify_cmd->add_flag("--abs", absolute, "Absolutely ordered class");
  verify_k->excludes(verify_abs);
  verify_cmd->add_option("--max-weight", max_weight, "Weight bound (default: largest closed-form weight + 2)");
  verify_cmd->add_option("--limit", limit, "Maximum number of candidate sequences");
  verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* selftest_cmd = app.add_subcommand("selftest", "Reproduce the five golden step tables");
  selftest_cmd->add_option("--fixtures", fixtures, "Directory holding example1.txt .. example5.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fib_cmd->parsed()) {
      std::cout << fib(n) << '\n';
    } else if (lucas_cmd->parsed()) {
      std::cout << lucas(n) << '\n';
    } else if (wythoff_cmd->parsed()) {
      const Nat row = parse_nat(row_text);
      const std::size_t skip = generalized ? 0 : 2;
      const auto entries = wythoff_row(row, cols + skip);
      for (std::size_t j = skip; j < entries.size(); ++j) std::cout << (j > skip ? "," : "") << entries[j];
      std::cout << '\n';
    } else if (minseq_cmd->parsed()) {
      if (!absolute && minseq_k->count() == 0) throw Error(ErrorCode::InvalidIndex, "minseq needs --k or --abs");
      const auto spec = absolute ? MinSeqSpec::abs(n) : MinSeqSpec::ordered(n, k);
      const auto seq = min_sequence(spec);
      const auto cost = min_cost(spec);
      if (minseq_format == OutputFormat::Json) {
        nlohmann::json j{{"n", n}, {"sequence", detail::to_json_array(seq)}, {"cost", cost.str()}};
        if (absolute) j["class"] = "absolute"; else j["k"] = k;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << join(seq) << "\ncost: " << cost << '\n';
      }
    } else if (huff_cmd->parsed()) {
      return run_huffman_cmd(hargs);
    } else if (classify_cmd->parsed()) {
      std::cout << to_string(classify_order(make_seq(classify_weights, classify_sort))) << '\n';
    } else if (verify_cmd->parsed()) {
      if (!absolute && verify_k->count() == 0) throw Error(ErrorCode::InvalidIndex, "verify needs --k or --abs");
      const auto spec = absolute ? MinSeqSpec::abs(n) : MinSeqSpec::ordered(n, k);
      const auto report = brute_force_min(spec, max_weight, limit, threads);
      std::cout << report_to_json(report).dump(2) << '\n';
      if (!report.matches_closed_form) {
        std::cerr << "closed form does not match the brute-force minimum\n";
        return kExitMismatch;
      }
    } else if (selftest_cmd->parsed()) {
      bool all = true;
      for (const auto& r : run_selftest(fixtures)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.fixture << '\n';
        if (!r.passed) {
          all = false;
          std::cerr << "expected:\n" << r.expected << "actual:\n" << r.actual;
        }
      }
      return all ? kExitOk : kExitMismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
