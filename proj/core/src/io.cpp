// Copyright 2026 The qlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlab/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "qlab/error.hpp"

namespace qlab {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line l{number, {}};
    for (std::string t; ls >> t;) l.tokens.push_back(t);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

std::size_t to_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoul(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range: " + tok);
  }
}

void expect_header(const std::vector<Line>& lines, std::size_t at, const std::string& tag) {
  if (at >= lines.size())
    throw ParseError(lines.empty() ? 1 : lines.back().number, "missing '" + tag + " 1' header");
  const Line& l = lines[at];
  if (l.tokens.size() != 2 || l.tokens[0] != tag || l.tokens[1] != "1")
    throw ParseError(l.number, "expected '" + tag + " 1'");
}

FiniteLattice lattice_block(const std::vector<Line>& lines, std::size_t from, std::size_t to) {
  std::optional<std::size_t> n;
  std::optional<std::vector<std::string>> names;
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  std::vector<std::size_t> leq_lines;
  const std::size_t last = lines.empty() ? 1 : lines[to > 0 ? to - 1 : 0].number;
  for (std::size_t i = from; i < to; ++i) {
    const Line& l = lines[i];
    const std::string& key = l.tokens[0];
    if (key == "elements") {
      if (n) throw ParseError(l.number, "duplicate 'elements' line");
      if (l.tokens.size() != 2) throw ParseError(l.number, "'elements' takes one count");
      n = to_index(l.tokens[1], l.number);
      if (*n == 0) throw ParseError(l.number, "a lattice needs at least one element");
      if (*n > kMaxElements)
        throw ParseError(l.number, "at most " + std::to_string(kMaxElements) + " elements");
    } else if (key == "names") {
      if (names) throw ParseError(l.number, "duplicate 'names' line");
      names.emplace(l.tokens.begin() + 1, l.tokens.end());
    } else if (key == "leq") {
      if (l.tokens.size() != 3) throw ParseError(l.number, "'leq' takes two indices");
      leq.emplace_back(to_index(l.tokens[1], l.number), to_index(l.tokens[2], l.number));
      leq_lines.push_back(l.number);
    } else {
      throw ParseError(l.number, "unknown directive '" + key + "'");
    }
  }
  if (!n) throw ParseError(last, "missing 'elements' line");
  if (!names) throw ParseError(last, "missing 'names' line");
  if (names->size() != *n)
    throw ParseError(last, "expected " + std::to_string(*n) + " names, got " +
                               std::to_string(names->size()));
  for (std::size_t k = 0; k < leq.size(); ++k)
    if (leq[k].first >= *n || leq[k].second >= *n)
      throw ParseError(leq_lines[k], "element index out of range");
  return FiniteLattice::build(std::move(*names), leq);
}

}  // namespace

FiniteLattice parse_lat(const std::string& text) {
  auto lines = tokenize(text);
  expect_header(lines, 0, "LAT");
  return lattice_block(lines, 1, lines.size());
}

Quantale parse_qnt(const std::string& text) {
  auto lines = tokenize(text);
  expect_header(lines, 0, "QNT");
  std::size_t from = 1;
  if (from < lines.size() && lines[from].tokens[0] == "LAT") {
    expect_header(lines, from, "LAT");
    ++from;
  }
  std::size_t mult_at = from;
  while (mult_at < lines.size() && lines[mult_at].tokens[0] != "mult") ++mult_at;
  if (mult_at == lines.size())
    throw ParseError(lines.empty() ? 1 : lines.back().number, "missing 'mult' section");
  if (lines[mult_at].tokens.size() != 1)
    throw ParseError(lines[mult_at].number, "'mult' stands alone on its line");
  FiniteLattice L = lattice_block(lines, from, mult_at);
  const std::size_t n = L.size();
  if (lines.size() - mult_at - 1 != n)
    throw ParseError(lines[mult_at].number, "expected " + std::to_string(n) + " mult rows, got " +
                                                std::to_string(lines.size() - mult_at - 1));
  MultTable m(n, std::vector<Elem>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const Line& l = lines[mult_at + 1 + r];
    if (l.tokens.size() != n)
      throw ParseError(l.number, "mult row has " + std::to_string(l.tokens.size()) +
                                     " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = to_index(l.tokens[c], l.number);
      if (m[r][c] >= n) throw ParseError(l.number, "element index out of range");
    }
  }
  return Quantale::build(std::move(L), std::move(m));
}

namespace {

void lat_body(std::ostringstream& os, const FiniteLattice& L) {
  os << "elements " << L.size() << "\nnames";
  for (const auto& s : L.names()) os << ' ' << s;
  os << '\n';
  for (Elem i = 0; i < L.size(); ++i)
    for (Elem j : L.up(i)) os << "leq " << i << ' ' << j << '\n';
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void hasse(std::ostringstream& os, const FiniteLattice& L, const std::string& prefix,
           const std::vector<std::string>& xlabels = {}) {
  for (Elem i = 0; i < L.size(); ++i) {
    os << "  " << prefix << i << " [label=" << quote(L.name(i));
    if (!xlabels.empty()) os << ", xlabel=" << quote(xlabels[i]);
    os << "];\n";
  }
  for (auto [a, b] : cover_edges(L)) os << "  " << prefix << a << " -> " << prefix << b << ";\n";
}

}  // namespace

std::string emit_lat(const FiniteLattice& L) {
  std::ostringstream os;
  os << "LAT 1\n";
  lat_body(os, L);
  return os.str();
}

std::string emit_qnt(const Quantale& A) {
  std::ostringstream os;
  os << "QNT 1\n";
  lat_body(os, A.lattice());
  os << "mult\n";
  for (Elem i = 0; i < A.size(); ++i) {
    for (Elem j = 0; j < A.size(); ++j) os << (j ? " " : "") << A.mul(i, j);
    os << '\n';
  }
  return os.str();
}

std::string emit_dot(const FiniteLattice& L, const std::string& title) {
  std::ostringstream os;
  os << "digraph " << quote(title) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  hasse(os, L, "n");
  os << "}\n";
  return os.str();
}

std::string emit_dot(const Quantale& A, bool with_mult, const std::string& title) {
  std::ostringstream os;
  os << "digraph " << quote(title) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::vector<std::string> xl;
  if (with_mult)
    for (Elem i = 0; i < A.size(); ++i)
      xl.push_back(A.name(i) + "*" + A.name(i) + "=" + A.name(A.mul(i, i)));
  hasse(os, A.lattice(), "n", xl);
  os << "}\n";
  return os.str();
}

std::string emit_dot(const FiniteSpace& X, const std::string& title) {
  std::ostringstream os;
  os << "digraph " << quote(title) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  os << "  label="
     << quote(X.orientation() == Orientation::ClosedUp ? "closed sets are up-sets"
                                                       : "closed sets are down-sets")
     << ";\n";
  for (std::size_t i = 0; i < X.size(); ++i)
    os << "  p" << i << " [label=" << quote(X.labels()[i]) << "];\n";
  // Covers of the point order.
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j : X.up(i)) {
      if (i == j) continue;
      bool cover = true;
      for (std::size_t k : X.up(i))
        if (k != i && k != j && X.leq(k, j)) cover = false;
      if (cover) os << "  p" << i << " -> p" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string emit_dot(const Reticulation& R) {
  std::ostringstream os;
  os << "digraph \"reticulation\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  os << "  subgraph cluster_A {\n  label=\"A\";\n";
  hasse(os, R.source().lattice(), "a");
  os << "  }\n  subgraph cluster_L {\n  label=\"L(A)\";\n";
  hasse(os, R.lattice(), "l");
  os << "  }\n";
  for (Elem a = 0; a < R.source().size(); ++a)
    os << "  a" << a << " -> l" << R.lambda(a) << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace qlab
