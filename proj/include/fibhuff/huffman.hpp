#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fibhuff/error.hpp"
#include "fibhuff/numbers.hpp"

namespace fibhuff {

// A non-empty, non-decreasing sequence of positive weights.
class WeightSeq {
 public:
  explicit WeightSeq(std::vector<Nat> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error(ErrorCode::EmptySequence, "weight sequence is empty");
    for (std::size_t t = 0; t < weights_.size(); ++t) {
      if (weights_[t] < 1) {
        throw Error(ErrorCode::NonPositiveWeight, "weight at position " + std::to_string(t + 1) + " is not positive");
      }
      if (t > 0 && weights_[t - 1] > weights_[t]) {
        throw Error(ErrorCode::NotSorted, "weights decrease at position " + std::to_string(t + 1));
      }
    }
  }

  static WeightSeq sorted(std::vector<Nat> weights) {
    std::sort(weights.begin(), weights.end());
    return WeightSeq(std::move(weights));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  const Nat& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Nat>& values() const noexcept { return weights_; }
  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

  Nat sum() const {
    Nat s = 0;
    for (const auto& w : weights_) s += w;
    return s;
  }

  friend bool operator==(const WeightSeq&, const WeightSeq&) = default;

 private:
  std::vector<Nat> weights_;
};

inline std::string join(const WeightSeq& seq, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += sep;
    out += seq[i].str();
  }
  return out;
}

// Where a merged value lands among remaining values equal to it.
//
// Canonical places it before equal values, except that when the tie is at the
// head of the sequence the leaf stays first. That is the layout of the worked
// example tables, and it keeps elongated inputs producing elongated trees.
enum class TiePolicy {
  Canonical,
  MergedAfterEquals,
  MergedBeforeEquals,
};

// One merge: the step consumes `input` (P^(step-1)), merges its two smallest
// values into `merged`, and places the result at `insert_pos` (0-based) of the
// output sequence.
struct StepRecord {
  std::size_t step;
  WeightSeq input;
  Nat merged;
  std::size_t insert_pos;
};

struct HuffmanTrace {
  WeightSeq initial;
  std::vector<StepRecord> steps;
  Nat total;

  std::size_t size() const noexcept { return initial.size(); }

  // P^(i) for i in [0, n-1]; P^(n-1) is the single total.
  WeightSeq sequence(std::size_t i) const {
    if (i < steps.size()) return steps[i].input;
    if (i == steps.size()) return WeightSeq(std::vector<Nat>{total});
    throw Error(ErrorCode::InvalidIndex, "trace has no sequence P(" + std::to_string(i) + ")");
  }

  Nat merge_sum() const {
    Nat s = 0;
    for (const auto& st : steps) s += st.merged;
    return s;
  }
};

class HuffTree;

namespace detail {
inline std::pair<HuffmanTrace, HuffTree> run(const WeightSeq& P, TiePolicy policy);
}  // namespace detail

// Strictly binary tree stored as a node arena; the root is the last node.
class HuffTree {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Node {
    Nat weight;
    std::size_t left = npos;
    std::size_t right = npos;
    std::size_t leaf = npos;  // leaf index, npos for internal nodes

    bool is_leaf() const noexcept { return leaf != npos; }
  };

  static HuffTree leaf(Nat weight) {
    HuffTree t;
    t.nodes_.push_back(Node{std::move(weight), npos, npos, 0});
    t.leaves_ = 1;
    return t;
  }

  // Leaf indices of `right` are shifted past those of `left`.
  static HuffTree join(const HuffTree& left, const HuffTree& right) {
    HuffTree t;
    t.nodes_ = left.nodes_;
    const std::size_t offset = t.nodes_.size();
    for (Node n : right.nodes_) {
      if (n.is_leaf()) {
        n.leaf += left.leaves_;
      } else {
        n.left += offset;
        n.right += offset;
      }
      t.nodes_.push_back(std::move(n));
    }
    t.nodes_.push_back(Node{left.root().weight + right.root().weight, offset - 1, t.nodes_.size() - 1, npos});
    t.leaves_ = left.leaves_ + right.leaves_;
    return t;
  }

  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t root_id() const noexcept { return nodes_.size() - 1; }
  const Node& root() const { return nodes_.back(); }
  const Node& node(std::size_t id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  // Root-to-leaf path lengths, indexed by leaf index.
  std::vector<std::size_t> leaf_depths() const {
    std::vector<std::size_t> depths(leaves_, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root_id(), 0}};
    while (!stack.empty()) {
      auto [id, depth] = stack.back();
      stack.pop_back();
      const Node& n = nodes_[id];
      if (n.is_leaf()) {
        depths[n.leaf] = depth;
      } else {
        stack.emplace_back(n.right, depth + 1);
        stack.emplace_back(n.left, depth + 1);
      }
    }
    return depths;
  }

  // Leaf weights in leaf-index order.
  std::vector<Nat> leaf_weights() const {
    std::vector<Nat> out(leaves_);
    for (const auto& n : nodes_) {
      if (n.is_leaf()) out[n.leaf] = n.weight;
    }
    return out;
  }

 private:
  friend std::pair<HuffmanTrace, HuffTree> detail::run(const WeightSeq& P, TiePolicy policy);
  HuffTree() = default;

  std::vector<Node> nodes_;
  std::size_t leaves_ = 0;
};

namespace detail {

struct Item {
  Nat weight;
  std::size_t node;
};

inline std::size_t insert_position(const std::vector<Item>& rest, const Nat& merged, TiePolicy policy) {
  auto lower = std::partition_point(rest.begin(), rest.end(), [&](const Item& it) { return it.weight < merged; });
  auto upper = std::partition_point(lower, rest.end(), [&](const Item& it) { return it.weight == merged; });
  switch (policy) {
    case TiePolicy::MergedAfterEquals:
      return static_cast<std::size_t>(upper - rest.begin());
    case TiePolicy::MergedBeforeEquals:
      return static_cast<std::size_t>(lower - rest.begin());
    case TiePolicy::Canonical:
      if (lower == rest.begin() && upper != rest.begin()) return 1;
      return static_cast<std::size_t>(lower - rest.begin());
  }
  return static_cast<std::size_t>(lower - rest.begin());
}

inline WeightSeq values_of(const std::vector<Item>& items) {
  std::vector<Nat> v;
  v.reserve(items.size());
  for (const auto& it : items) v.push_back(it.weight);
  return WeightSeq(std::move(v));
}

// Runs the n - 1 merge steps, recording the trace and the tree together.
// A leaf merged with a subtree becomes the right child; otherwise the smaller
// (earlier) item goes left.
inline std::pair<HuffmanTrace, HuffTree> run(const WeightSeq& P, TiePolicy policy) {
  HuffTree tree;
  auto& nodes = tree.nodes_;
  std::vector<Item> items;
  items.reserve(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    nodes.push_back(HuffTree::Node{P[i], HuffTree::npos, HuffTree::npos, i});
    items.push_back(Item{P[i], i});
  }
  tree.leaves_ = P.size();

  std::vector<StepRecord> steps;
  steps.reserve(P.size() - 1);
  for (std::size_t step = 1; items.size() > 1; ++step) {
    WeightSeq input = values_of(items);
    Item a = std::move(items[0]);
    Item b = std::move(items[1]);
    items.erase(items.begin(), items.begin() + 2);

    std::size_t left = a.node, right = b.node;
    if (nodes[a.node].is_leaf() && !nodes[b.node].is_leaf()) std::swap(left, right);
    Nat merged = a.weight + b.weight;
    nodes.push_back(HuffTree::Node{merged, left, right, HuffTree::npos});

    const std::size_t pos = insert_position(items, merged, policy);
    items.insert(items.begin() + static_cast<std::ptrdiff_t>(pos), Item{merged, nodes.size() - 1});
    steps.push_back(StepRecord{step, std::move(input), std::move(merged), pos});
  }

  HuffmanTrace trace{P, std::move(steps), items.front().weight};
  return {std::move(trace), std::move(tree)};
}

}  // namespace detail

inline HuffmanTrace run_huffman(const WeightSeq& P, TiePolicy policy = TiePolicy::Canonical) {
  return detail::run(P, policy).first;
}

inline HuffTree build_tree(const WeightSeq& P, TiePolicy policy = TiePolicy::Canonical) {
  return detail::run(P, policy).second;
}

// Weighted external path length: sum of depth * weight over the leaves.
inline Nat wepl(const HuffTree& tree) {
  const auto depths = tree.leaf_depths();
  const auto weights = tree.leaf_weights();
  Nat total = 0;
  for (std::size_t i = 0; i < depths.size(); ++i) total += weights[i] * depths[i];
  return total;
}

struct Codeword {
  std::size_t leaf;
  std::string bits;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// Left edges emit '0', right edges '1'. Sorted by leaf index.
inline std::vector<Codeword> codebook(const HuffTree& tree) {
  std::vector<Codeword> out(tree.leaf_count());
  std::vector<std::pair<std::size_t, std::string>> stack{{tree.root_id(), {}}};
  while (!stack.empty()) {
    auto [id, prefix] = std::move(stack.back());
    stack.pop_back();
    const auto& n = tree.node(id);
    if (n.is_leaf()) {
      out[n.leaf] = Codeword{n.leaf, std::move(prefix)};
    } else {
      stack.emplace_back(n.right, prefix + '1');
      stack.emplace_back(n.left, prefix + '0');
    }
  }
  return out;
}

inline bool is_elongated(const HuffTree& tree) {
  for (const auto& n : tree.nodes()) {
    if (!n.is_leaf() && !tree.node(n.left).is_leaf() && !tree.node(n.right).is_leaf()) return false;
  }
  return true;
}

inline bool is_left_sided(const HuffTree& tree) {
  for (const auto& n : tree.nodes()) {
    if (!n.is_leaf() && !tree.node(n.right).is_leaf()) return false;
  }
  return true;
}

// p(1) + p(2) <= p(4) for every intermediate sequence with at least four values.
inline bool check_elongated_inequality(const HuffmanTrace& trace) {
  for (const auto& st : trace.steps) {
    const auto& p = st.input;
    if (p.size() >= 4 && p[0] + p[1] > p[3]) return false;
  }
  return true;
}

struct OrderClass {
  enum class Kind { AbsolutelyOrdered, KOrdered, Unordered };

  Kind kind;
  std::size_t k = 0;  // meaningful only for KOrdered

  static OrderClass absolute() { return {Kind::AbsolutelyOrdered, 0}; }
  static OrderClass ordered(std::size_t k) { return {Kind::KOrdered, k}; }
  static OrderClass unordered() { return {Kind::Unordered, 0}; }

  friend bool operator==(const OrderClass&, const OrderClass&) = default;
};

inline std::string to_string(const OrderClass& c) {
  switch (c.kind) {
    case OrderClass::Kind::AbsolutelyOrdered: return "AbsolutelyOrdered";
    case OrderClass::Kind::KOrdered: return "KOrdered(" + std::to_string(c.k) + ")";
    case OrderClass::Kind::Unordered: return "Unordered";
  }
  return "Unordered";
}

// Compares p(2) and p(3) of P^(i) for i = 0..n-3. A prefix of equalities
// followed only by strict inequalities is k-ordered; no equalities at all is
// absolutely ordered.
inline OrderClass classify_order(const HuffmanTrace& trace) {
  const std::size_t n = trace.size();
  if (n < 3) throw Error(ErrorCode::TooShort, "order classification needs at least 3 weights");
  std::size_t equal_prefix = 0;
  while (equal_prefix <= n - 3 && trace.steps[equal_prefix].input[1] == trace.steps[equal_prefix].input[2]) {
    ++equal_prefix;
  }
  for (std::size_t i = equal_prefix; i <= n - 3; ++i) {
    if (trace.steps[i].input[1] == trace.steps[i].input[2]) return OrderClass::unordered();
  }
  if (equal_prefix == 0) return OrderClass::absolute();
  return OrderClass::ordered(equal_prefix - 1);
}

inline OrderClass classify_order(const WeightSeq& P) {
  if (P.size() < 3) throw Error(ErrorCode::TooShort, "order classification needs at least 3 weights");
  return classify_order(run_huffman(P));
}

}  // namespace fibhuff
