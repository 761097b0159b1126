#pragma once

// Composition tables over the RCC11 base relations, with per-entry
// extensionality marks, plus the line-oriented table file format:
//
//   R,S -> T1|T2*|...
//
// one line per ordered pair, sorted by (row index, column index); a `*`
// suffix flags an entry that is not extensional in general RCC models.

#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rcc11/relation.hpp"

namespace rcc11 {

/// One table cell: its entries and the subset of them carrying a mark.
struct Cell {
  RelSet entries;
  RelSet marked;

  bool operator==(const Cell&) const = default;
};

/// Applies a base-relation map to both the entries and the marks.
template <typename F>
Cell map_cell(const Cell& c, F&& f) {
  return {map_set(c.entries, f), map_set(c.marked, f)};
}

class CompTable {
 public:
  CompTable() = default;

  const Cell& cell(BaseRel r, BaseRel s) const { return cells_[index_of(r)][index_of(s)]; }
  Cell& cell(BaseRel r, BaseRel s) { return cells_[index_of(r)][index_of(s)]; }
  RelSet entries(BaseRel r, BaseRel s) const { return cell(r, s).entries; }
  bool marked(BaseRel r, BaseRel s, BaseRel t) const { return cell(r, s).marked.contains(t); }

  void set(BaseRel r, BaseRel s, RelSet entries, RelSet marked = {}) {
    cell(r, s) = Cell{entries, marked};
  }

  /// Total number of (R,S,T) triads with T in cell(R,S).
  int entry_count() const {
    int n = 0;
    for (const auto& row : cells_)
      for (const auto& c : row) n += c.entries.size();
    return n;
  }

  bool operator==(const CompTable&) const = default;

 private:
  std::array<std::array<Cell, kNumBaseRels>, kNumBaseRels> cells_{};
};

/// Weak composition of relation sets: union of the cells over all member pairs.
inline RelSet compose(const CompTable& t, RelSet s1, RelSet s2) {
  RelSet out;
  for (BaseRel r : s1)
    for (BaseRel s : s2) out |= t.entries(r, s);
  return out;
}

inline RelSet compose(const CompTable& t, BaseRel r, BaseRel s) { return t.entries(r, s); }

// ---------------------------------------------------------------------------
// Text format

inline std::string format_cell(const Cell& c) {
  std::string out;
  for (BaseRel r : c.entries) {
    if (!out.empty()) out += '|';
    out += token(r);
    if (c.marked.contains(r)) out += '*';
  }
  return out;
}

inline void write_table(std::ostream& os, const CompTable& t) {
  for (BaseRel r : kAllBaseRels)
    for (BaseRel s : kAllBaseRels)
      os << token(r) << ',' << token(s) << " -> " << format_cell(t.cell(r, s)) << '\n';
}

inline std::string table_to_string(const CompTable& t) {
  std::ostringstream os;
  write_table(os, t);
  return os.str();
}

struct TableParseError : std::runtime_error {
  TableParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Reads the table format. All 121 pairs must be present exactly once; line
/// order is not enforced on input. Throws TableParseError.
inline CompTable read_table(std::istream& is) {
  CompTable t;
  std::array<std::array<bool, kNumBaseRels>, kNumBaseRels> seen{};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    auto arrow = text.find("->");
    auto comma = text.find(',');
    if (arrow == std::string_view::npos || comma == std::string_view::npos || comma > arrow)
      throw TableParseError(lineno, "expected 'R,S -> T|...'");
    auto r = parse_base_rel(detail::trim(text.substr(0, comma)));
    auto s = parse_base_rel(detail::trim(text.substr(comma + 1, arrow - comma - 1)));
    if (!r || !s) throw TableParseError(lineno, "unknown relation in cell key");
    if (seen[index_of(*r)][index_of(*s)]) throw TableParseError(lineno, "duplicate cell");
    seen[index_of(*r)][index_of(*s)] = true;

    Cell c;
    auto body = detail::trim(text.substr(arrow + 2));
    while (!body.empty()) {
      auto bar = body.find('|');
      auto tok = detail::trim(body.substr(0, bar));
      bool mark = !tok.empty() && tok.back() == '*';
      if (mark) tok.remove_suffix(1);
      auto e = parse_base_rel(tok);
      if (!e) throw TableParseError(lineno, "unknown relation '" + std::string(tok) + "'");
      c.entries.insert(*e);
      if (mark) c.marked.insert(*e);
      if (bar == std::string_view::npos) break;
      body.remove_prefix(bar + 1);
    }
    t.cell(*r, *s) = c;
  }
  for (BaseRel r : kAllBaseRels)
    for (BaseRel s : kAllBaseRels)
      if (!seen[index_of(r)][index_of(s)])
        throw TableParseError(lineno, "missing cell " + std::string(token(r)) + "," + std::string(token(s)));
  return t;
}

inline CompTable table_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_table(is);
}

/// One differing cell between two tables.
struct CellDiff {
  BaseRel row;
  BaseRel col;
  Cell expected;
  Cell actual;
};

inline std::vector<CellDiff> diff_tables(const CompTable& expected, const CompTable& actual) {
  std::vector<CellDiff> out;
  for (BaseRel r : kAllBaseRels)
    for (BaseRel s : kAllBaseRels)
      if (!(expected.cell(r, s) == actual.cell(r, s)))
        out.push_back({r, s, expected.cell(r, s), actual.cell(r, s)});
  return out;
}

}  // namespace rcc11
