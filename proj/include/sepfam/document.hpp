#pragma once

// External text forms.
//
// Family document (JSON):
//   {"n": 4, "bipartitions": [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]}
// Each bipartition is a list of one or two blocks that together cover the
// ground set. Labels may be any positive integers; they are mapped to 1..n in
// increasing order.
//
// Compact family form, one line: bipartitions separated by ';', blocks by
// '|', elements by ','. The block holding element 1 comes first:
//   1,2|3,4;1,3|2,4

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sepfam/core.hpp"
#include "sepfam/error.hpp"
#include "sepfam/oracle.hpp"

namespace sepfam {

struct ParsedFamily {
  Family family;
  // labels[i - 1] is the external label of element i.
  std::vector<std::int64_t> labels;

  bool relabeled() const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] != static_cast<std::int64_t>(i + 1)) return true;
    }
    return false;
  }
};

namespace detail {

using RawBipartition = std::vector<std::vector<std::int64_t>>;

inline ParsedFamily build_family(std::optional<unsigned> declared_n,
                                 const std::vector<RawBipartition>& raw) {
  std::vector<std::int64_t> labels;
  for (const auto& bp : raw) {
    if (bp.empty() || bp.size() > 2) {
      throw ParseError("a bipartition must have one or two blocks, got " +
                       std::to_string(bp.size()));
    }
    std::vector<std::int64_t> seen;
    for (const auto& block : bp) {
      if (block.empty()) throw ParseError("empty block");
      for (auto x : block) {
        if (x < 1) throw ParseError("labels must be positive integers, got " + std::to_string(x));
        seen.push_back(x);
      }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw ParseError("blocks of a bipartition overlap or repeat a label");
    }
    if (labels.empty()) {
      labels = seen;
    } else if (seen != labels) {
      throw ParseError("bipartitions do not all cover the same ground set");
    }
  }
  unsigned n = 0;
  if (labels.empty()) {
    if (!declared_n) throw ParseError("cannot infer n from an empty family");
    n = *declared_n;
    for (unsigned i = 1; i <= n; ++i) labels.push_back(i);
  } else {
    n = static_cast<unsigned>(labels.size());
    if (declared_n && *declared_n != n) {
      throw ParseError("document declares n = " + std::to_string(*declared_n) +
                       " but its blocks cover " + std::to_string(n) + " elements");
    }
  }
  if (n < 1 || n > kMaxGroundSize) {
    throw ParseError("n must lie in 1.." + std::to_string(kMaxGroundSize));
  }
  std::map<std::int64_t, unsigned> index;
  for (unsigned i = 0; i < n; ++i) index[labels[i]] = i + 1;

  std::vector<Bipartition> members;
  for (const auto& bp : raw) {
    std::vector<unsigned> block;
    for (auto x : bp.front()) block.push_back(index.at(x));
    members.push_back(Bipartition::from_block(n, block));
  }
  try {
    return ParsedFamily{Family(n, std::move(members)), std::move(labels)};
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

inline std::int64_t parse_label(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad label '" + std::string(s) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t at = s.find(sep, pos);
    out.push_back(s.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos));
    if (at == std::string_view::npos) break;
    pos = at + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline ParsedFamily parse_family_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("family document must be a JSON object");
  std::optional<unsigned> n;
  if (doc.contains("n")) {
    const auto& jn = doc.at("n");
    if (!jn.is_number_integer() || jn.get<std::int64_t>() < 1 ||
        jn.get<std::int64_t>() > kMaxGroundSize) {
      throw ParseError("\"n\" must be an integer in 1.." + std::to_string(kMaxGroundSize));
    }
    n = jn.get<unsigned>();
  }
  if (!doc.contains("bipartitions") || !doc.at("bipartitions").is_array()) {
    throw ParseError("family document needs a \"bipartitions\" array");
  }
  std::vector<detail::RawBipartition> raw;
  for (const auto& jb : doc.at("bipartitions")) {
    if (!jb.is_array()) throw ParseError("each bipartition must be a list of blocks");
    detail::RawBipartition bp;
    for (const auto& block : jb) {
      if (!block.is_array()) throw ParseError("each block must be a list of labels");
      std::vector<std::int64_t> b;
      for (const auto& x : block) {
        if (!x.is_number_integer()) throw ParseError("labels must be integers");
        b.push_back(x.get<std::int64_t>());
      }
      bp.push_back(std::move(b));
    }
    raw.push_back(std::move(bp));
  }
  return detail::build_family(n, raw);
}

inline ParsedFamily parse_family_compact(std::string_view text,
                                         std::optional<unsigned> n = std::nullopt) {
  text = detail::trim(text);
  std::vector<detail::RawBipartition> raw;
  if (!text.empty()) {
    for (auto part : detail::split(text, ';')) {
      detail::RawBipartition bp;
      for (auto block : detail::split(detail::trim(part), '|')) {
        std::vector<std::int64_t> b;
        if (!detail::trim(block).empty()) {
          for (auto label : detail::split(block, ',')) b.push_back(detail::parse_label(label));
        }
        bp.push_back(std::move(b));
      }
      raw.push_back(std::move(bp));
    }
  }
  return detail::build_family(n, raw);
}

// JSON when the text starts with '{', compact form otherwise.
inline ParsedFamily parse_family_text(std::string_view text,
                                      std::optional<unsigned> n = std::nullopt) {
  const auto body = detail::trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_family_json(doc);
  }
  return parse_family_compact(body, n);
}

inline nlohmann::json family_to_json(const Family& f) {
  nlohmann::json bps = nlohmann::json::array();
  for (const auto& p : f.members()) bps.push_back(p.blocks());
  return nlohmann::json{{"n", f.n()}, {"bipartitions", std::move(bps)}};
}

inline std::string family_to_compact(const Family& f) {
  std::string out;
  for (const auto& p : f.members()) {
    if (!out.empty()) out += ';';
    bool first_block = true;
    for (const auto& block : p.blocks()) {
      if (!first_block) out += '|';
      first_block = false;
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(block[i]);
      }
    }
  }
  return out;
}

// One line per check name, then one line per failing check, then the verdict.
inline std::vector<std::string> summarize(const ValidationReport& report) {
  std::vector<std::string> names;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // total, failed
  for (const auto& c : report.checks) {
    if (!tally.count(c.name)) names.push_back(c.name);
    auto& t = tally[c.name];
    ++t.first;
    if (!c.passed) ++t.second;
  }
  std::vector<std::string> lines;
  for (const auto& w : report.warnings) lines.push_back("warning: " + w);
  for (const auto& name : names) {
    const auto [total, failed] = tally[name];
    if (failed == 0) {
      lines.push_back("PASS " + name + " (" + std::to_string(total) + " checks)");
    } else {
      lines.push_back("FAIL " + name + " (" + std::to_string(failed) + " of " +
                      std::to_string(total) + " failed)");
    }
  }
  for (const auto* c : report.failures()) {
    lines.push_back("  failed " + c->name + " [" + c->params + "]: expected " + c->expected +
                    ", got " + c->actual);
  }
  lines.push_back(std::string("overall: ") + (report.passed() ? "PASS" : "FAIL"));
  return lines;
}

inline nlohmann::json report_to_json(const ValidationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"params", c.params},
                      {"passed", c.passed},
                      {"expected", c.expected},
                      {"actual", c.actual}});
  }
  return nlohmann::json{{"n_max", report.n_max},
                        {"k_max", report.k_max},
                        {"passed", report.passed()},
                        {"warnings", report.warnings},
                        {"summary", summarize(report)},
                        {"checks", std::move(checks)}};
}

}  // namespace sepfam
