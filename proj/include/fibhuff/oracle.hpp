#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "fibhuff/huffman.hpp"
#include "fibhuff/numbers.hpp"
#include "fibhuff/theorems.hpp"

namespace fibhuff {

// Brute-force verification. Nothing here calls the closed forms except the
// final comparison in brute_force_min; costs come from Huffman traces and from
// exhaustive tree-shape enumeration.

// Every non-decreasing sequence of n integers in [1, max_weight], each exactly
// once, in lexicographic order.
class SequenceEnumerator {
 public:
  SequenceEnumerator(std::size_t n, std::uint64_t max_weight, std::uint64_t first_min = 1,
                     std::uint64_t first_max = 0)
      : max_weight_(max_weight), first_max_(first_max == 0 ? max_weight : first_max), current_(n, first_min) {
    if (n == 0) throw Error(ErrorCode::InvalidIndex, "sequence length must be at least 1");
    if (max_weight == 0) throw Error(ErrorCode::InvalidIndex, "max_weight must be at least 1");
    done_ = first_min > first_max_;
  }

  // Writes the next sequence into `out`; false once exhausted.
  bool next(std::vector<std::uint64_t>& out) {
    if (done_) return false;
    out = current_;
    advance();
    return true;
  }

 private:
  void advance() {
    std::size_t i = current_.size();
    while (i > 0 && current_[i - 1] == max_weight_) --i;
    if (i == 0 || (i == 1 && current_[0] == first_max_)) {
      done_ = true;
      return;
    }
    const std::uint64_t v = ++current_[i - 1];
    std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i), current_.end(), v);
  }

  std::uint64_t max_weight_;
  std::uint64_t first_max_;
  std::vector<std::uint64_t> current_;
  bool done_ = false;
};

inline std::vector<std::vector<std::uint64_t>> enumerate_sequences(std::size_t n, std::uint64_t max_weight) {
  std::vector<std::vector<std::uint64_t>> out;
  SequenceEnumerator e(n, max_weight);
  std::vector<std::uint64_t> seq;
  while (e.next(seq)) out.push_back(seq);
  return out;
}

// Number of multisets of size n over [1, max_weight], saturating at `cap + 1`.
inline std::uint64_t multiset_count(std::size_t n, std::uint64_t max_weight, std::uint64_t cap) {
  // C(max_weight + n - 1, n), computed incrementally; each partial product is itself a binomial.
  Nat c = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    c = c * (max_weight + i - 1) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

inline constexpr std::uint64_t kDefaultCandidateLimit = 100'000'000;

struct OracleReport {
  std::size_t n = 0;
  bool absolute = false;
  std::size_t k = 0;
  std::uint64_t weight_bound = 0;
  std::uint64_t candidates_examined = 0;
  std::uint64_t class_members = 0;
  Nat best_cost = 0;
  std::vector<WeightSeq> best_sequences;
  bool matches_closed_form = false;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

// Partial result over one slice of the enumeration. merge() is associative and
// commutative, so any partitioning gives the same final state.
struct OraclePartial {
  std::uint64_t examined = 0;
  std::uint64_t members = 0;
  std::optional<Nat> best_cost;
  std::vector<std::vector<std::uint64_t>> best;

  void offer(const std::vector<std::uint64_t>& seq, const Nat& cost) {
    if (!best_cost || cost < *best_cost) {
      best_cost = cost;
      best.clear();
    }
    if (cost == *best_cost) best.push_back(seq);
  }

  void merge(const OraclePartial& other) {
    examined += other.examined;
    members += other.members;
    if (!other.best_cost) return;
    if (!best_cost || *other.best_cost < *best_cost) {
      best_cost = other.best_cost;
      best = other.best;
    } else if (*other.best_cost == *best_cost) {
      best.insert(best.end(), other.best.begin(), other.best.end());
    }
    std::sort(best.begin(), best.end());
  }
};

// Membership in the class: the Huffman intermediate sequences carry the target
// order pattern and the Huffman tree is elongated. Returns the cost (trace
// merge-sum) for members.
inline std::optional<Nat> class_member_cost(const WeightSeq& P, const OrderClass& target) {
  auto [trace, tree] = detail::run(P, TiePolicy::Canonical);
  if (classify_order(trace) != target) return std::nullopt;
  if (!is_elongated(tree)) return std::nullopt;
  return trace.merge_sum();
}

inline OraclePartial scan_slice(std::size_t n, std::uint64_t max_weight, std::uint64_t first_min,
                                std::uint64_t first_max, const OrderClass& target) {
  OraclePartial part;
  SequenceEnumerator e(n, max_weight, first_min, first_max);
  std::vector<std::uint64_t> seq;
  std::vector<Nat> weights(n);
  while (e.next(seq)) {
    ++part.examined;
    for (std::size_t i = 0; i < n; ++i) weights[i] = seq[i];
    if (auto cost = class_member_cost(WeightSeq(weights), target)) {
      ++part.members;
      part.offer(seq, *cost);
    }
  }
  return part;
}

// Largest weight of the closed-form sequence plus 2.
inline std::uint64_t default_weight_bound(const MinSeqSpec& spec) {
  const auto seq = min_sequence(spec);
  const Nat bound = seq[seq.size() - 1] + 2;
  if (bound > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::SearchSpaceTooLarge, "closed-form weights exceed the enumerable range");
  }
  return static_cast<std::uint64_t>(bound);
}

// Exhaustive minimum over the class described by `spec` with weights bounded
// by max_weight. The scan is split by first weight across `threads` workers.
inline OracleReport brute_force_min(const MinSeqSpec& spec, std::optional<std::uint64_t> max_weight = std::nullopt,
                                    std::uint64_t candidate_limit = kDefaultCandidateLimit,
                                    unsigned threads = 1) {
  const std::uint64_t bound = max_weight.value_or(default_weight_bound(spec));
  if (bound == 0) throw Error(ErrorCode::InvalidIndex, "max_weight must be at least 1");
  const std::uint64_t count = multiset_count(spec.n, bound, candidate_limit);
  if (count > candidate_limit) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "more than " + std::to_string(candidate_limit) + " candidate sequences; lower max_weight or raise the limit");
  }

  const OrderClass target = spec.order_class();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(bound)));
  std::vector<OraclePartial> parts(workers);
  if (workers == 1) {
    parts[0] = scan_slice(spec.n, bound, 1, bound, target);
  } else {
    // Worker w takes every first weight f with (f - 1) % workers == w.
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t f = 1 + w; f <= bound; f += workers) parts[w].merge(scan_slice(spec.n, bound, f, f, target));
      });
    }
    for (auto& t : pool) t.join();
  }

  OraclePartial total;
  for (const auto& p : parts) total.merge(p);
  if (!total.best_cost) {
    throw Error(ErrorCode::EmptyClass, "no sequence with weights <= " + std::to_string(bound) +
                                           " belongs to the class; raise max_weight");
  }

  OracleReport report;
  report.n = spec.n;
  report.absolute = spec.absolute;
  report.k = spec.k;
  report.weight_bound = bound;
  report.candidates_examined = total.examined;
  report.class_members = total.members;
  report.best_cost = *total.best_cost;
  for (const auto& s : total.best) report.best_sequences.emplace_back(std::vector<Nat>(s.begin(), s.end()));

  const auto closed = min_sequence(spec);
  report.matches_closed_form =
      report.best_cost == min_cost(spec) &&
      std::find(report.best_sequences.begin(), report.best_sequences.end(), closed) != report.best_sequences.end();
  return report;
}

inline OracleReport brute_force_min(std::size_t n, std::size_t k, std::optional<std::uint64_t> max_weight = std::nullopt,
                                    std::uint64_t candidate_limit = kDefaultCandidateLimit, unsigned threads = 1) {
  return brute_force_min(MinSeqSpec::ordered(n, k), max_weight, candidate_limit, threads);
}

inline constexpr std::size_t kMaxOracleTreeSize = 10;

// Sorted (descending) leaf-depth profiles of every strictly binary tree with n
// leaves. Shapes sharing a profile collapse into one entry.
inline std::vector<std::vector<std::size_t>> depth_profiles(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptySequence, "a tree needs at least one leaf");
  if (n > kMaxOracleTreeSize) throw Error(ErrorCode::TooLarge, "shape enumeration is limited to 10 leaves");
  std::vector<std::set<std::vector<std::size_t>>> by_size(n + 1);
  by_size[1].insert({0});
  for (std::size_t size = 2; size <= n; ++size) {
    for (std::size_t left = 1; left < size; ++left) {
      for (const auto& a : by_size[left]) {
        for (const auto& b : by_size[size - left]) {
          std::vector<std::size_t> d;
          d.reserve(size);
          for (auto x : a) d.push_back(x + 1);
          for (auto x : b) d.push_back(x + 1);
          std::sort(d.rbegin(), d.rend());
          by_size[size].insert(std::move(d));
        }
      }
    }
  }
  return {by_size[n].begin(), by_size[n].end()};
}

// Minimum weighted external path length over all strictly binary trees with
// these leaf weights. Per shape, the smallest weights take the deepest leaves.
inline Nat optimal_tree_cost(const WeightSeq& P) {
  if (P.size() > kMaxOracleTreeSize) throw Error(ErrorCode::TooLarge, "optimal_tree_cost supports at most 10 weights");
  std::optional<Nat> best;
  for (const auto& depths : depth_profiles(P.size())) {
    Nat cost = 0;
    for (std::size_t i = 0; i < depths.size(); ++i) cost += P[i] * depths[i];
    if (!best || cost < *best) best = cost;
  }
  return *best;
}

}  // namespace fibhuff
