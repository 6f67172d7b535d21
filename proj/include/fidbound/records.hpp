// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fidbound {

/// One row of a bound table.
struct OutputRecord {
  std::string family;
  std::optional<double> hyper;
  double y;
  double e_rel;
  double f_max;
  double param_star;
  std::string branch;

  bool operator==(const OutputRecord&) const = default;
};

inline constexpr std::string_view kCsvHeader = "family,hyper,y,e_rel,f_max,param_star,branch";

/// Shortest-form general notation with 12 significant digits; independent of
/// the global locale.
std::string format_real(double x);

/// x rounded to 12 significant digits, i.e. the value format_real encodes.
double round_to_12(double x);

std::string to_csv(const std::vector<OutputRecord>& records);
std::string to_json(const std::vector<OutputRecord>& records);

/// Inverse of to_csv; throws DomainError on malformed input.
std::vector<OutputRecord> parse_csv(std::string_view text);
/// Inverse of to_json; throws DomainError on malformed input.
std::vector<OutputRecord> parse_json(std::string_view text);

}  // namespace fidbound
