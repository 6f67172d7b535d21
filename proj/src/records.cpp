// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "fidbound/records.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "json.hpp"

#include "fidbound/error.hpp"

namespace fidbound {

namespace {

double parse_real(std::string_view s) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("malformed number '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  if (ec != std::errc()) throw DomainError("cannot format number");
  std::string out(buf, ptr);
  if (out == "-0") out = "0";
  return out;
}

double round_to_12(double x) { return parse_real(format_real(x)); }

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += r.family;
    out += ',';
    if (r.hyper) out += format_real(*r.hyper);
    for (double v : {r.y, r.e_rel, r.f_max, r.param_star}) {
      out += ',';
      out += format_real(v);
    }
    out += ',';
    out += r.branch;
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<OutputRecord>& records) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["family"] = r.family;
    obj["hyper"] = r.hyper ? nlohmann::ordered_json(round_to_12(*r.hyper)) : nlohmann::ordered_json();
    obj["y"] = round_to_12(r.y);
    obj["e_rel"] = round_to_12(r.e_rel);
    obj["f_max"] = round_to_12(r.f_max);
    obj["param_star"] = round_to_12(r.param_star);
    obj["branch"] = r.branch;
    array.push_back(std::move(obj));
  }
  return array.dump(2) + "\n";
}

std::vector<OutputRecord> parse_csv(std::string_view text) {
  std::vector<OutputRecord> out;
  bool header = true;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw DomainError("unexpected CSV header '" + std::string(line) + "'");
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 7) throw DomainError("CSV row needs 7 fields: '" + std::string(line) + "'");
    OutputRecord r{std::string(f[0]),
                   f[1].empty() ? std::nullopt : std::optional<double>(parse_real(f[1])),
                   parse_real(f[2]),
                   parse_real(f[3]),
                   parse_real(f[4]),
                   parse_real(f[5]),
                   std::string(f[6])};
    out.push_back(std::move(r));
  }
  if (header) throw DomainError("empty CSV input");
  return out;
}

std::vector<OutputRecord> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw DomainError("JSON output must be an array");
  std::vector<OutputRecord> out;
  try {
    for (const auto& obj : doc) {
      if (!obj.is_object() || obj.size() != 7) throw DomainError("JSON record needs 7 fields");
      const auto& hyper = obj.at("hyper");
      out.push_back({obj.at("family").get<std::string>(),
                     hyper.is_null() ? std::nullopt : std::optional<double>(hyper.get<double>()),
                     obj.at("y").get<double>(), obj.at("e_rel").get<double>(),
                     obj.at("f_max").get<double>(), obj.at("param_star").get<double>(),
                     obj.at("branch").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed JSON record: ") + e.what());
  }
  return out;
}

}  // namespace fidbound
