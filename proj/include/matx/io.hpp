// Copyright 2026 The Authors.
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

#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matx/fiber.hpp"
#include "matx/matroid.hpp"

namespace matx {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

namespace io_detail {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

// Line-oriented tokenizer; '#' starts a comment. Blank lines produce a
// sentinel token with empty text so the basis-per-line layout is visible.
inline std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> toks;
    std::size_t col = 0;
    while (col < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[col]))) {
        ++col;
        continue;
      }
      std::size_t end = col;
      while (end < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[end])))
        ++end;
      toks.push_back(Token{std::string(line.substr(col, end - col)), line_no,
                           static_cast<int>(col) + 1});
      col = end;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

[[noreturn]] inline void syntax_error(const std::string& msg, int line,
                                      int column) {
  Error err(Errc::syntax_error, msg + " (line " + std::to_string(line) +
                                    ", column " + std::to_string(column) + ")");
  err.line = line;
  err.column = column;
  throw err;
}

inline int parse_int(const Token& tok) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(
      tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
    syntax_error("expected an integer, got '" + tok.text + "'", tok.line,
                 tok.column);
  return value;
}

}  // namespace io_detail

// Parses the matroid text format. Three bodies share an optional
// "matroid v1" header and a "kind" line:
//
//   kind bases            kind graph                kind matrix
//   n 4                   vertices 4                p 2
//   r 2                   edges 1-2 1-3 2-3         rows 2
//   1 2                                             cols 3
//   3 4                                             1 0 1
//                                                   0 1 1
//
// Elements, vertices, and columns are 1-based in files. A bases body uses
// "-" for the empty basis of a rank-0 matroid.
inline Matroid parse_matroid(std::string_view text) {
  using io_detail::parse_int;
  using io_detail::syntax_error;
  const auto lines = io_detail::tokenize(text);
  std::size_t at = 0;
  auto need_line = [&](const std::string& what) -> const std::vector<io_detail::Token>& {
    if (at >= lines.size())
      syntax_error("unexpected end of file, expected " + what,
                   lines.empty() ? 1 : lines.back().front().line + 1, 1);
    return lines[at];
  };
  if (at < lines.size() && lines[at].front().text == "matroid") {
    if (lines[at].size() != 2 || lines[at][1].text != "v1")
      syntax_error("unsupported format version", lines[at].front().line, 1);
    ++at;
  }
  const auto& kind_line = need_line("'kind'");
  if (kind_line.front().text != "kind" || kind_line.size() != 2)
    syntax_error("expected 'kind bases|graph|matrix'", kind_line.front().line,
                 kind_line.front().column);
  const std::string kind = kind_line[1].text;
  ++at;

  auto keyword_int = [&](const std::string& key) {
    const auto& line = need_line("'" + key + "'");
    if (line.front().text != key || line.size() != 2)
      syntax_error("expected '" + key + " <integer>'", line.front().line,
                   line.front().column);
    const int v = parse_int(line[1]);
    ++at;
    return v;
  };

  if (kind == "bases") {
    const int n = keyword_int("n");
    const int r = keyword_int("r");
    std::vector<ElemSet> family;
    for (; at < lines.size(); ++at) {
      const auto& line = lines[at];
      if (line.size() == 1 && line.front().text == "-") {
        if (r != 0)
          syntax_error("'-' denotes the empty basis of a rank-0 matroid",
                       line.front().line, line.front().column);
        family.push_back(0);
        continue;
      }
      ElemSet b = 0;
      for (const auto& tok : line) {
        const int e = parse_int(tok);
        if (e < 1 || e > n)
          syntax_error("element " + std::to_string(e) + " outside 1.." +
                           std::to_string(n),
                       tok.line, tok.column);
        b |= elem_bit(e - 1);
      }
      if (set_size(b) != static_cast<int>(line.size()))
        syntax_error("repeated element in basis", line.front().line,
                     line.front().column);
      if (set_size(b) != r)
        syntax_error("basis has " + std::to_string(set_size(b)) +
                         " elements, expected r=" + std::to_string(r),
                     line.front().line, line.front().column);
      family.push_back(b);
    }
    return validate_bases(n, family);
  }

  if (kind == "graph") {
    const int vertices = keyword_int("vertices");
    std::vector<std::pair<int, int>> edges;
    for (; at < lines.size(); ++at) {
      const auto& line = lines[at];
      if (line.front().text != "edges")
        syntax_error("expected an 'edges' line", line.front().line,
                     line.front().column);
      for (std::size_t i = 1; i < line.size(); ++i) {
        const auto& tok = line[i];
        const std::size_t dash = tok.text.find('-');
        if (dash == std::string::npos)
          syntax_error("expected 'a-b', got '" + tok.text + "'", tok.line,
                       tok.column);
        const io_detail::Token ta{tok.text.substr(0, dash), tok.line,
                                  tok.column};
        const io_detail::Token tb{tok.text.substr(dash + 1), tok.line,
                                  tok.column + static_cast<int>(dash) + 1};
        const int a = parse_int(ta);
        const int b = parse_int(tb);
        if (a < 1 || a > vertices || b < 1 || b > vertices)
          syntax_error("vertex outside 1.." + std::to_string(vertices),
                       tok.line, tok.column);
        edges.emplace_back(a - 1, b - 1);
      }
    }
    return graphic(vertices, edges);
  }

  if (kind == "matrix") {
    const int p = keyword_int("p");
    const int rows = keyword_int("rows");
    const int cols = keyword_int("cols");
    std::vector<std::vector<int>> matrix;
    for (; at < lines.size(); ++at) {
      const auto& line = lines[at];
      std::vector<int> row;
      for (const auto& tok : line) row.push_back(parse_int(tok));
      if (static_cast<int>(row.size()) != cols)
        syntax_error("row has " + std::to_string(row.size()) +
                         " entries, expected " + std::to_string(cols),
                     line.front().line, line.front().column);
      matrix.push_back(std::move(row));
    }
    if (static_cast<int>(matrix.size()) != rows)
      syntax_error("expected " + std::to_string(rows) + " matrix rows",
                   lines.empty() ? 1 : lines.back().front().line, 1);
    return linear_gf(matrix, p);
  }

  syntax_error("unknown kind '" + kind + "'", kind_line[1].line,
               kind_line[1].column);
}

// Canonical text form: the validated basis list. parse(emit(M)) == M.
inline std::string emit_matroid(const Matroid& m) {
  std::ostringstream out;
  out << "matroid v1\n";
  out << "kind bases\n";
  out << "n " << m.ground_size << "\n";
  out << "r " << m.rank << "\n";
  for (Basis b : m.bases) {
    if (b == 0) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for_each_element(b, [&](int e) {
      if (!first) out << ' ';
      out << (e + 1);
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

inline std::string content_hash(std::string_view text) {
  return hash_hex(fnv1a64(text.data(), text.size()));
}

// --- JSON encoding of domain values (elements 1-based, indices 0-based) ---

inline Json set_to_json(ElemSet s) {
  Json arr = Json::array();
  for_each_element(s, [&](int e) { arr.push_back(e + 1); });
  return arr;
}

inline Json state_to_json(const State& s) {
  Json arr = Json::array();
  for (Basis b : s) arr.push_back(set_to_json(b));
  return arr;
}

inline Json blocks_to_json(const std::vector<Basis>& blocks) {
  return state_to_json(blocks);
}

inline Json move_to_json(const Move& mv) {
  Json j;
  j["variant"] = variant_name(mv.variant);
  j["positions"] = Json::array({mv.i, mv.j});
  j["replacement"] = Json::array({set_to_json(mv.d1), set_to_json(mv.d2)});
  if (mv.variant != MoveVariant::W1) {
    j["exchange"] = Json::array({mv.e + 1, mv.f + 1});
  }
  return j;
}

inline Json path_to_json(const std::vector<Move>& path) {
  Json arr = Json::array();
  for (const Move& mv : path) arr.push_back(move_to_json(mv));
  return arr;
}

// Parsing for CLI flag values: "1,3" or "1 3" for sets; entries separated by
// '|' for states: "1 2|3 4".
inline ElemSet parse_set_arg(const std::string& text, int ground_size) {
  ElemSet out = 0;
  std::string tok;
  std::istringstream in(text);
  std::string normalized = text;
  for (char& ch : normalized)
    if (ch == ',') ch = ' ';
  std::istringstream in2(normalized);
  while (in2 >> tok) {
    int v = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      fail(Errc::invalid_argument, "bad element '" + tok + "' in set");
    if (v < 1 || v > ground_size)
      fail(Errc::invalid_argument,
           "element " + std::to_string(v) + " outside 1.." +
               std::to_string(ground_size));
    out |= elem_bit(v - 1);
  }
  return out;
}

inline State parse_state_arg(const std::string& text, int ground_size) {
  State out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t bar = text.find('|', pos);
    if (bar == std::string::npos) bar = text.size();
    out.push_back(parse_set_arg(text.substr(pos, bar - pos), ground_size));
    pos = bar + 1;
    if (bar == text.size()) break;
  }
  return out;
}

}  // namespace matx
