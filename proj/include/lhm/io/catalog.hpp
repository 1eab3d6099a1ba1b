#pragma once

/**
 * @file catalog.hpp
 * @brief Group catalog files (*.grp) and flag-hypermap files (*.flags).
 *
 * The grammar for both formats is described in docs/formats.md.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lhm/constructions.hpp"
#include "lhm/error.hpp"
#include "lhm/finite_group.hpp"
#include "lhm/hypermap.hpp"
#include "lhm/permutation.hpp"

namespace lhm::io {

struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  bool times_z2 = false;
};

struct CatalogEntry {
  std::string name;
  std::string source_path;
  GroupSpec spec;
  FiniteGroup group;
  std::string content_hash;
};

/// 64-bit FNV-1a as 16 hex digits; used to fingerprint inputs in manifests.
inline std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number = 0;
  std::size_t indent = 0;  // 0-based column of the first non-blank character
  std::string_view text;   // comment stripped, trimmed
  const char* start = nullptr;
};

inline std::vector<Line> content_lines(std::string_view data) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= data.size()) {
    std::size_t end = data.find('\n', start);
    if (end == std::string_view::npos) end = data.size();
    ++number;
    std::string_view raw = data.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t indent = 0;
    while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
    auto text = trim(raw);
    if (!text.empty()) out.push_back({number, indent, text, raw.data()});
    if (end == data.size()) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] inline void parse_fail(const std::string& source, const Line& line,
                                    std::size_t column, const std::string& msg) {
  // Line 0 stands for end of input.
  const std::string where =
      line.number == 0 ? source
                       : source + ":" + std::to_string(line.number) + ":" + std::to_string(column + 1);
  throw Error(ErrorKind::ParseError, where + ": " + msg);
}

// Splits "key: value"; returns nullopt if the line has no key.
inline std::optional<std::pair<std::string_view, std::string_view>> split_key(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto key = trim(s.substr(0, colon));
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
      })) {
    return std::nullopt;
  }
  return std::make_pair(key, trim(s.substr(colon + 1)));
}

inline std::size_t parse_positive(const std::string& source, const Line& line,
                                  std::string_view value) {
  if (value.empty() || value.size() > 9 ||
      !std::all_of(value.begin(), value.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    parse_fail(source, line, line.indent, "expected a positive integer, got \"" +
                                              std::string(value) + "\"");
  }
  std::size_t v = std::stoul(std::string(value));
  if (v == 0) parse_fail(source, line, line.indent, "expected a positive integer");
  return v;
}

inline Permutation parse_word(const std::string& source, const Line& line, std::string_view word,
                              std::size_t degree) {
  try {
    return parse_cycles(word, degree);
  } catch (const Error& e) {
    const auto column = line.start ? static_cast<std::size_t>(word.data() - line.start) : 0;
    parse_fail(source, line, column, e.what());
  }
}

}  // namespace detail

struct ParsedGroupFile {
  std::string name;
  GroupSpec spec;
};

inline ParsedGroupFile parse_group_text(std::string_view data, const std::string& source = "<input>") {
  using namespace detail;
  ParsedGroupFile out;
  std::optional<std::string> name;
  std::optional<std::size_t> degree;
  std::optional<bool> times_z2;
  bool in_gens = false;
  bool saw_gens = false;
  std::vector<std::pair<Line, std::string_view>> words;

  for (const auto& line : content_lines(data)) {
    auto kv = split_key(line.text);
    if (!kv) {
      if (!in_gens) parse_fail(source, line, line.indent, "expected 'key: value'");
      words.emplace_back(line, line.text);
      continue;
    }
    auto [key, value] = *kv;
    in_gens = false;
    if (key == "name") {
      if (name) parse_fail(source, line, line.indent, "duplicate 'name'");
      if (value.empty()) parse_fail(source, line, line.indent, "empty name");
      name = std::string(value);
    } else if (key == "degree") {
      if (degree) parse_fail(source, line, line.indent, "duplicate 'degree'");
      degree = parse_positive(source, line, value);
    } else if (key == "gens") {
      if (saw_gens) parse_fail(source, line, line.indent, "duplicate 'gens'");
      saw_gens = true;
      in_gens = true;
      if (!value.empty()) words.emplace_back(line, value);
    } else if (key == "times-z2") {
      if (times_z2) parse_fail(source, line, line.indent, "duplicate 'times-z2'");
      if (value == "true") {
        times_z2 = true;
      } else if (value == "false") {
        times_z2 = false;
      } else {
        parse_fail(source, line, line.indent, "times-z2 must be true or false");
      }
    } else {
      parse_fail(source, line, line.indent, "unknown key '" + std::string(key) + "'");
    }
  }
  Line eof{};
  if (!name) parse_fail(source, eof, 0, "missing 'name'");
  if (!degree) parse_fail(source, eof, 0, "missing 'degree'");
  if (words.empty()) parse_fail(source, eof, 0, "no generators after 'gens:'");

  out.name = *name;
  out.spec.degree = *degree;
  out.spec.times_z2 = times_z2.value_or(false);
  for (const auto& [line, word] : words) {
    out.spec.generators.push_back(parse_word(source, line, word, *degree));
  }
  return out;
}

inline FiniteGroup build_group(const GroupSpec& spec, std::size_t cap = default_group_order_cap()) {
  auto gens = spec.generators;
  if (spec.times_z2) gens = with_central_involution(std::move(gens));
  return FiniteGroup::closure(gens, cap);
}

inline std::vector<std::string> expand_catalog_paths(const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".grp") {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

/// Loads every file (directories contribute their *.grp files, sorted), in
/// argument order. Names must be unique across the catalog.
inline std::vector<CatalogEntry> load_catalog(const std::vector<std::string>& paths,
                                              std::size_t cap = default_group_order_cap()) {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (const auto& path : expand_catalog_paths(paths)) {
    const std::string data = read_file(path);
    auto parsed = parse_group_text(data, path);
    if (!names.insert(parsed.name).second) {
      throw Error(ErrorKind::DuplicateName, path + ": group name '" + parsed.name +
                                                "' already defined in this catalog");
    }
    CatalogEntry entry;
    entry.name = parsed.name;
    entry.source_path = path;
    entry.spec = parsed.spec;
    entry.group = build_group(parsed.spec, cap);
    entry.content_hash = fnv1a_hex(data);
    out.push_back(std::move(entry));
  }
  return out;
}

inline FlagHypermap parse_flag_text(std::string_view data, const std::string& source = "<input>") {
  using namespace detail;
  std::optional<std::size_t> flags;
  std::optional<std::pair<Line, std::string_view>> words[3];
  for (const auto& line : content_lines(data)) {
    auto kv = split_key(line.text);
    if (!kv) parse_fail(source, line, line.indent, "expected 'key: value'");
    auto [key, value] = *kv;
    if (key == "flags") {
      if (flags) parse_fail(source, line, line.indent, "duplicate 'flags'");
      flags = parse_positive(source, line, value);
    } else if (key == "r0" || key == "r1" || key == "r2") {
      auto& slot = words[key[1] - '0'];
      if (slot) parse_fail(source, line, line.indent, "duplicate '" + std::string(key) + "'");
      slot = std::make_pair(line, value);
    } else {
      parse_fail(source, line, line.indent, "unknown key '" + std::string(key) + "'");
    }
  }
  Line eof{};
  if (!flags) parse_fail(source, eof, 0, "missing 'flags'");
  for (int i = 0; i < 3; ++i) {
    if (!words[i]) parse_fail(source, eof, 0, "missing 'r" + std::to_string(i) + "'");
  }
  auto perm = [&](int i) { return parse_word(source, words[i]->first, words[i]->second, *flags); };
  return FlagHypermap(perm(0), perm(1), perm(2));
}

inline FlagHypermap load_flag_file(const std::string& path) {
  return parse_flag_text(read_file(path), path);
}

/// Flag-file text for a hypermap; parse_flag_text reads it back.
inline std::string format_flag_text(const FlagHypermap& h) {
  std::string out = "flags: " + std::to_string(h.flag_count()) + "\n";
  for (int i = 0; i < 3; ++i) out += "r" + std::to_string(i) + ": " + to_cycles(h.r(i)) + "\n";
  return out;
}

}  // namespace lhm::io
