#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fibhuff/format.hpp"
#include "fibhuff/huffman.hpp"
#include "fibhuff/theorems.hpp"

namespace fibhuff {

// The five worked examples: the closed-form sequence of size 10 for the
// absolutely ordered class and for k = 0, 1, 4, 7.
struct GoldenExample {
  std::string fixture;
  MinSeqSpec spec;
};

inline std::vector<GoldenExample> golden_examples() {
  return {
      {"example1.txt", MinSeqSpec::abs(10)},
      {"example2.txt", MinSeqSpec::ordered(10, 0)},
      {"example3.txt", MinSeqSpec::ordered(10, 1)},
      {"example4.txt", MinSeqSpec::ordered(10, 4)},
      {"example5.txt", MinSeqSpec::ordered(10, 7)},
  };
}

struct GoldenResult {
  std::string fixture;
  bool passed;
  std::string expected;
  std::string actual;
};

// Renders each example's trace in Table mode and compares it byte for byte
// with the fixture file. A missing fixture counts as a failure.
inline std::vector<GoldenResult> run_selftest(const std::filesystem::path& fixture_dir) {
  std::vector<GoldenResult> results;
  for (const auto& ex : golden_examples()) {
    std::ifstream in(fixture_dir / ex.fixture, std::ios::binary);
    std::ostringstream buf;
    if (in) buf << in.rdbuf();
    const std::string actual = render_table(run_huffman(min_sequence(ex.spec)));
    results.push_back({ex.fixture, in && buf.str() == actual, buf.str(), actual});
  }
  return results;
}

}  // namespace fibhuff
