// Copyright 2026 The drinfeld-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRINFELD_MODULE_FILE_HPP
#define DRINFELD_MODULE_FILE_HPP

// Module description files and per-place height tables.
//
//   [field]   p = 3
//             e = 1          # optional, default 1
//             d = 1          # optional, [K : F_q(T)], default 1
//   [module]  rank = 2
//             g1 = "T^5 + 2*T"
//             g2 = "T"
//
// A section header may share its line with the first key. '#' starts a
// comment outside quotes. For d > 1 the coefficients may be omitted; heights
// then come from a table with rows  label, deg, n_nu, v(g1), ..., v(gr)
// where an empty valuation, '-' or 'inf' marks a zero coefficient.

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/expr.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

struct ModuleSpec {
  FqContext fq;
  int d = 1;
  int rank = 0;
  /// Present whenever the coefficients were given.
  std::optional<DrinfeldModule<RationalField>> module;
};

namespace detail {

struct KeyValue {
  std::string value;
  bool quoted = false;
  SourcePos key_pos;
  SourcePos value_pos;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] inline void file_error(const std::string& msg, SourcePos pos, std::size_t offset = 0) {
  throw ParseError("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + msg, offset,
                   pos.line, pos.column);
}

inline long long parse_int(const KeyValue& kv, const std::string& key) {
  long long v = 0;
  const std::string_view s = trim(kv.value);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) file_error("'" + key + "' must be an integer", kv.value_pos);
  return v;
}

}  // namespace detail

inline ModuleSpec parse_module_text(std::string_view text) {
  using detail::file_error;
  std::map<std::string, std::map<std::string, detail::KeyValue>> sections;
  std::string section;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::size_t i = 0;
    auto col = [&](std::size_t k) { return SourcePos{line_no, k + 1}; };
    auto skip_ws = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    };
    skip_ws();
    if (i < line.size() && line[i] == '[') {
      const std::size_t close = line.find(']', i);
      if (close == std::string_view::npos) file_error("unterminated section header", col(i));
      section = std::string(detail::trim(line.substr(i + 1, close - i - 1)));
      if (section != "field" && section != "module") file_error("unknown section [" + section + "]", col(i));
      i = close + 1;
      skip_ws();
    }
    if (i < line.size() && line[i] != '#') {
      const std::size_t key_start = i;
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
      const std::string key(line.substr(key_start, i - key_start));
      if (key.empty()) file_error("expected a key", col(key_start));
      if (section.empty()) file_error("key '" + key + "' outside any section", col(key_start));
      skip_ws();
      if (i >= line.size() || line[i] != '=') file_error("expected '=' after '" + key + "'", col(i));
      ++i;
      skip_ws();
      detail::KeyValue kv;
      kv.key_pos = col(key_start);
      if (i < line.size() && line[i] == '"') {
        const std::size_t close = line.find('"', i + 1);
        if (close == std::string_view::npos) file_error("unterminated string", col(i));
        kv.value = std::string(line.substr(i + 1, close - i - 1));
        kv.quoted = true;
        kv.value_pos = col(i + 1);
        i = close + 1;
        skip_ws();
        if (i < line.size() && line[i] != '#') file_error("unexpected text after value", col(i));
      } else {
        std::size_t stop = line.find('#', i);
        if (stop == std::string_view::npos) stop = line.size();
        kv.value = std::string(detail::trim(line.substr(i, stop - i)));
        kv.value_pos = col(i);
        if (kv.value.empty()) file_error("missing value for '" + key + "'", col(i));
      }
      auto& sec = sections[section];
      if (sec.count(key)) file_error("duplicate key '" + key + "'", kv.key_pos);
      sec.emplace(key, std::move(kv));
    }
    start = end + 1;
  }

  auto& field = sections["field"];
  auto& mod = sections["module"];
  for (auto& [key, kv] : field) {
    if (key != "p" && key != "e" && key != "d") file_error("unknown key '" + key + "' in [field]", kv.key_pos);
  }
  if (!field.count("p")) file_error("[field] needs p", {line_no, 1});
  if (!mod.count("rank")) file_error("[module] needs rank", {line_no, 1});

  ModuleSpec spec;
  const long long p = detail::parse_int(field["p"], "p");
  const long long e = field.count("e") ? detail::parse_int(field["e"], "e") : 1;
  try {
    spec.fq = fq_make(p, e);
  } catch (const DomainError& ex) {
    file_error(ex.what(), field["p"].value_pos);
  }
  if (field.count("d")) {
    const long long d = detail::parse_int(field["d"], "d");
    if (d < 1 || d > 1000) file_error("d must be between 1 and 1000", field["d"].value_pos);
    spec.d = static_cast<int>(d);
  }
  const long long rank = detail::parse_int(mod["rank"], "rank");
  if (rank < 1 || rank > 64) file_error("rank must be between 1 and 64", mod["rank"].value_pos);
  spec.rank = static_cast<int>(rank);

  std::vector<std::optional<RationalFunc>> g(static_cast<std::size_t>(rank));
  const RationalField K(spec.fq);
  for (auto& [key, kv] : mod) {
    if (key == "rank") continue;
    int idx = 0;
    if (key.size() < 2 || key[0] != 'g') file_error("unknown key '" + key + "' in [module]", kv.key_pos);
    auto [ptr, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), idx);
    if (ec != std::errc() || ptr != key.data() + key.size()) file_error("unknown key '" + key + "' in [module]", kv.key_pos);
    if (idx < 1 || idx > rank) file_error("coefficient '" + key + "' outside 1..rank", kv.key_pos);
    g[static_cast<std::size_t>(idx - 1)] = parse_rational(K, kv.value, kv.value_pos);
  }
  std::size_t given = 0;
  for (auto& x : g) given += x.has_value();
  if (given == 0 && spec.d > 1) return spec;
  std::vector<RationalFunc> coeffs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i]) file_error("[module] is missing g" + std::to_string(i + 1), mod["rank"].key_pos);
    coeffs.push_back(*g[i]);
  }
  if (K.is_zero(coeffs.back())) file_error("leading coefficient g" + std::to_string(rank) + " is zero", mod["rank"].key_pos);
  spec.module = make_module(K, spec.rank, std::move(coeffs));
  return spec;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ModuleSpec load_module_file(const std::string& path) { return parse_module_text(read_text_file(path)); }

/// Module file text that parses back to an equal description.
inline std::string format_module(const ModuleSpec& spec) {
  std::string s = "[field]\np = " + std::to_string(spec.fq.p()) + "\ne = " + std::to_string(spec.fq.e()) + "\n";
  if (spec.d != 1) s += "d = " + std::to_string(spec.d) + "\n";
  s += "[module]\nrank = " + std::to_string(spec.rank) + "\n";
  if (spec.module) {
    for (std::size_t i = 0; i < spec.module->coefficients().size(); ++i) {
      s += "g" + std::to_string(i + 1) + " = \"" + format_rational(spec.fq, spec.module->coefficients()[i]).text + "\"\n";
    }
  }
  return s;
}

/// Height table rows; a first row whose degree column is not an integer is
/// taken as a header and skipped.
inline std::vector<HeightDatum> parse_height_table(std::string_view text, int rank) {
  using detail::file_error;
  std::vector<HeightDatum> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool seen_data = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (detail::trim(line).empty()) continue;
    std::vector<std::pair<std::string, std::size_t>> cells;
    std::size_t a = 0;
    while (true) {
      const std::size_t comma = line.find(',', a);
      const std::string_view cell = line.substr(a, comma == std::string_view::npos ? std::string_view::npos : comma - a);
      std::size_t lead = 0;
      while (lead < cell.size() && std::isspace(static_cast<unsigned char>(cell[lead]))) ++lead;
      cells.emplace_back(std::string(detail::trim(cell)), a + lead + 1);
      if (comma == std::string_view::npos) break;
      a = comma + 1;
    }
    auto as_int = [&](std::size_t k, const char* what) {
      int v = 0;
      const std::string& c = cells[k].first;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc() || ptr != c.data() + c.size() || c.empty()) {
        file_error(std::string(what) + " must be an integer", {line_no, cells[k].second});
      }
      return v;
    };
    if (!seen_data && cells.size() >= 2) {
      int probe = 0;
      const std::string& c = cells[1].first;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), probe);
      if (ec != std::errc() || ptr != c.data() + c.size()) {
        seen_data = true;
        continue;  // header
      }
    }
    seen_data = true;
    if (cells.size() != static_cast<std::size_t>(rank) + 3) {
      file_error("expected " + std::to_string(rank + 3) + " columns, found " + std::to_string(cells.size()), {line_no, 1});
    }
    HeightDatum row;
    row.label = cells[0].first;
    if (row.label.empty()) file_error("empty place label", {line_no, cells[0].second});
    row.degree = as_int(1, "deg");
    row.local_degree = as_int(2, "n_nu");
    if (row.degree < 1) file_error("deg must be positive", {line_no, cells[1].second});
    if (row.local_degree < 1) file_error("n_nu must be positive", {line_no, cells[2].second});
    for (int i = 0; i < rank; ++i) {
      const std::size_t k = static_cast<std::size_t>(i) + 3;
      const std::string& c = cells[k].first;
      if (c.empty() || c == "-" || c == "inf") {
        row.valuations.emplace_back(std::nullopt);
      } else {
        row.valuations.emplace_back(as_int(k, "valuation"));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<HeightDatum> load_height_table(const std::string& path, int rank) {
  return parse_height_table(read_text_file(path), rank);
}

}  // namespace drinfeld

#endif  // DRINFELD_MODULE_FILE_HPP
