#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fibhuff/huffman.hpp"
#include "fibhuff/oracle.hpp"

namespace fibhuff {

enum class OutputFormat { Table, Json, Csv };

// Step table: a header row, then one row per intermediate sequence P^(i),
// tab-separated. The value produced by the previous merge carries `marker`
// except in the final single-value row.
inline std::string render_table(const HuffmanTrace& trace, const std::string& marker = "*") {
  std::ostringstream os;
  os << "Step\tP(i)";
  for (std::size_t j = 1; j <= trace.size(); ++j) os << "\tp" << j;
  os << '\n';
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto seq = trace.sequence(i);
    const bool marked = i > 0 && seq.size() > 1;
    const std::size_t mark_at = marked ? trace.steps[i - 1].insert_pos : 0;
    os << i << "\tP(" << i << ')';
    for (std::size_t j = 0; j < seq.size(); ++j) {
      os << '\t' << seq[j];
      if (marked && j == mark_at) os << marker;
    }
    os << '\n';
  }
  return os.str();
}

// step,merged,pos,p1,...  with one row per merge; pos is 0-based.
inline std::string render_csv(const HuffmanTrace& trace) {
  std::ostringstream os;
  os << "step,merged,pos,input\n";
  for (const auto& st : trace.steps) {
    os << st.step << ',' << st.merged << ',' << st.insert_pos;
    for (const auto& w : st.input) os << ',' << w;
    os << '\n';
  }
  os << "total," << trace.total << ",,\n";
  return os.str();
}

namespace detail {

inline nlohmann::json to_json_array(const WeightSeq& seq) {
  auto arr = nlohmann::json::array();
  for (const auto& w : seq) arr.push_back(w.str());
  return arr;
}

inline Nat nat_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_nat(j.get<std::string>());
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  throw Error(ErrorCode::ParseError, "expected a decimal string, got " + j.dump());
}

inline WeightSeq seq_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of weights");
  std::vector<Nat> v;
  for (const auto& x : j) v.push_back(nat_from_json(x));
  return WeightSeq(std::move(v));
}

}  // namespace detail

// Weights, merged values and the total are decimal strings; step and pos are numbers.
inline nlohmann::json trace_to_json(const HuffmanTrace& trace) {
  nlohmann::json j;
  j["initial"] = detail::to_json_array(trace.initial);
  j["steps"] = nlohmann::json::array();
  for (const auto& st : trace.steps) {
    j["steps"].push_back({{"i", st.step}, {"input", detail::to_json_array(st.input)}, {"merged", st.merged.str()},
                          {"pos", st.insert_pos}});
  }
  j["total"] = trace.total.str();
  return j;
}

inline HuffmanTrace trace_from_json(const nlohmann::json& j) {
  try {
    HuffmanTrace trace{detail::seq_from_json(j.at("initial")), {}, detail::nat_from_json(j.at("total"))};
    for (const auto& s : j.at("steps")) {
      trace.steps.push_back(StepRecord{s.at("i").get<std::size_t>(), detail::seq_from_json(s.at("input")),
                                       detail::nat_from_json(s.at("merged")), s.at("pos").get<std::size_t>()});
    }
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed trace JSON: ") + e.what());
  }
}

inline nlohmann::json report_to_json(const OracleReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  if (r.absolute) {
    j["class"] = "absolute";
  } else {
    j["class"] = "k-ordered";
    j["k"] = r.k;
  }
  j["weight_bound"] = std::to_string(r.weight_bound);
  j["candidates_examined"] = std::to_string(r.candidates_examined);
  j["class_members"] = std::to_string(r.class_members);
  j["best_cost"] = r.best_cost.str();
  j["best_sequences"] = nlohmann::json::array();
  for (const auto& s : r.best_sequences) j["best_sequences"].push_back(detail::to_json_array(s));
  j["matches_closed_form"] = r.matches_closed_form;
  return j;
}

}  // namespace fibhuff
