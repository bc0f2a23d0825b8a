#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "classeq/error.hpp"
#include "classeq/group.hpp"

namespace classeq {

/// Parses the plain-text table format: the first value is n, followed by n
/// rows of n whitespace-separated 0-based indices (row i, column j = i*j).
/// Lines whose first non-blank character is '#' are comments. The identity
/// need not be element 0 in the file; ingestion relabels.
inline FiniteGroup parse_cayley(std::istream& in, std::string name = "") {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    long long v;
    while (ls >> v) tokens.push_back(v);
    if (!ls.eof()) throw FileParseError("non-numeric token in line: " + line);
  }
  if (tokens.empty()) throw FileParseError("empty table file");

  const long long n64 = tokens[0];
  if (n64 < 1 || n64 > kDefaultClosureCap) {
    throw FileParseError("group order " + std::to_string(n64) + " out of range");
  }
  const int n = static_cast<int>(n64);
  const std::size_t want = 1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (tokens.size() != want) {
    throw FileParseError("expected " + std::to_string(want - 1) +
                         " table entries, got " + std::to_string(tokens.size() - 1));
  }
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const long long v = tokens[1 + static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                 static_cast<std::size_t>(j)];
      if (v < 0 || v >= n) {
        throw FileParseError("table entry " + std::to_string(v) +
                             " out of range [0, " + std::to_string(n) + ")");
      }
      raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(v);
    }
  }
  return from_cayley_table(raw, std::move(name));
}

inline FiniteGroup parse_cayley_text(const std::string& text, std::string name = "") {
  std::istringstream in(text);
  return parse_cayley(in, std::move(name));
}

inline FiniteGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileParseError("cannot open file: " + path);
  return parse_cayley(in, path);
}

/// Canonical text form of a group table (parse round-trips to the same table).
inline std::string format_cayley(const FiniteGroup& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out += ' ';
      out += std::to_string(g.product(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace classeq
