#pragma once

// Output records shared by the CLI and its tests: method routing, timing and
// the CSV / JSON / plain renderings.

#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gridsets/big_count.hpp"
#include "gridsets/excess_recurrence.hpp"
#include "gridsets/general_bound.hpp"
#include "gridsets/grid.hpp"
#include "gridsets/oracle.hpp"
#include "gridsets/transfer_matrix.hpp"

namespace gridsets {

enum class Method { Oracle, Profile, Transfer, Recurrence, Bound };

/// Invalid flag combination; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Profile: return "profile";
    case Method::Transfer: return "transfer";
    case Method::Recurrence: return "recurrence";
    case Method::Bound: return "bound";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  for (Method m : {Method::Oracle, Method::Profile, Method::Transfer, Method::Recurrence, Method::Bound})
    if (method_name(m) == s) return m;
  throw UsageError("unknown method '" + std::string(s) + "'");
}

inline constexpr std::string_view kRoutingHelp =
    "valid (family, method) combinations:\n"
    "  k    : oracle, profile, transfer\n"
    "  grid : oracle, profile, bound, recurrence (m = 3 or 4 only)";

inline void check_routing(Family family, Method method, int m) {
  const bool ok = [&] {
    switch (method) {
      case Method::Oracle:
      case Method::Profile: return true;
      case Method::Transfer: return family == Family::CompleteColumn;
      case Method::Bound: return family == Family::PathColumn;
      case Method::Recurrence: return family == Family::PathColumn && (m == 3 || m == 4);
    }
    return false;
  }();
  if (!ok)
    throw UsageError("method '" + std::string(method_name(method)) + "' is not available for family '" +
                     std::string(family_name(family)) + "' with m = " + std::to_string(m) + "\n" +
                     std::string(kRoutingHelp));
}

struct OutputRecord {
  int m = 0;
  int n = 0;
  Family family = Family::PathColumn;
  Method method = Method::Oracle;
  std::string value;  // exact base-10 rendering
  bool exact = true;
  double elapsed_ms = 0.0;

  bool operator==(const OutputRecord&) const = default;
};

struct CountRequest {
  Family family = Family::PathColumn;
  Method method = Method::Oracle;
  int m = 1;
  int n = 1;
  bool spanning = false;
  int budget = kDefaultBruteBudget;
};

namespace detail {

inline double round_to_microseconds(std::chrono::steady_clock::duration d) {
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(d).count();
  return static_cast<double>(us) / 1000.0;
}

}  // namespace detail

/// Route one (family, method, m, n) request and time it.
inline OutputRecord compute_record(const CountRequest& req) {
  if (req.m < 1 || req.n < 1) throw UsageError("--m and --n must be positive");
  if (req.m > kMaxRows) throw UsageError("--m must be at most 31");
  check_routing(req.family, req.method, req.m);

  const GridSpec spec{req.m, req.n, req.family};
  const auto start = std::chrono::steady_clock::now();
  BigCount value;
  bool exact = true;
  switch (req.method) {
    case Method::Oracle:
      value = req.spanning ? brute_count_spanning(spec, req.budget) : brute_count(spec, req.budget);
      break;
    case Method::Profile: value = profile_count(spec, req.spanning); break;
    case Method::Transfer: {
      const SpanningCounts counts(req.m, req.n);
      value = req.spanning ? counts.spanning(req.n) : counts.total(req.n);
      break;
    }
    case Method::Recurrence: {
      const ExcessRecurrence rec(req.m, req.n);
      value = req.spanning ? rec.grid_spanning(req.n) : rec.grid_total(req.n);
      break;
    }
    case Method::Bound: {
      const BoundResult bound = grid_upper_bound(req.m, req.n, req.spanning);
      value = bound.value;
      exact = bound.exact_scheme;
      break;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return OutputRecord{req.m, req.n, req.family, req.method, to_decimal(value), exact,
                      detail::round_to_microseconds(elapsed)};
}

inline constexpr std::string_view kCsvHeader = "m,n,family,method,value,exact,elapsed_ms";

/// Shortest decimal that parses back to the same double.
inline std::string format_ms(double ms) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, ms);
  return std::string(buf, res.ptr);
}

inline std::string to_csv_line(const OutputRecord& r) {
  std::ostringstream out;
  out << r.m << ',' << r.n << ',' << family_name(r.family) << ',' << method_name(r.method) << ',' << r.value << ','
      << (r.exact ? "true" : "false") << ',' << format_ms(r.elapsed_ms);
  return out.str();
}

inline std::string to_plain_line(const OutputRecord& r) {
  std::ostringstream out;
  out << "m=" << r.m << " n=" << r.n << " family=" << family_name(r.family) << " method=" << method_name(r.method)
      << " value=" << r.value << " exact=" << (r.exact ? "true" : "false") << " elapsed_ms=" << format_ms(r.elapsed_ms);
  return out.str();
}

inline nlohmann::json to_json(const OutputRecord& r) {
  return nlohmann::json{{"m", r.m},
                        {"n", r.n},
                        {"family", family_name(r.family)},
                        {"method", method_name(r.method)},
                        {"value", r.value},
                        {"exact", r.exact},
                        {"elapsed_ms", r.elapsed_ms}};
}

enum class Format { Csv, Json, Plain };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "plain") return Format::Plain;
  throw UsageError("unknown format '" + std::string(s) + "'");
}

inline void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
  switch (format) {
    case Format::Csv:
      out << kCsvHeader << '\n';
      for (const auto& r : records) out << to_csv_line(r) << '\n';
      break;
    case Format::Plain:
      for (const auto& r : records) out << to_plain_line(r) << '\n';
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

namespace detail {

inline int parse_int(std::string_view s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer field '" + std::string(s) + "'");
  return v;
}

inline double parse_double(std::string_view s) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad number field '" + std::string(s) + "'");
  return v;
}

inline bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("bad boolean field '" + std::string(s) + "'");
}

}  // namespace detail

inline std::vector<OutputRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("missing CSV header");
  std::vector<OutputRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 7) throw std::invalid_argument("CSV row must have 7 fields");
    out.push_back(OutputRecord{detail::parse_int(fields[0]), detail::parse_int(fields[1]), parse_family(fields[2]),
                               parse_method(fields[3]), fields[4], detail::parse_bool(fields[5]),
                               detail::parse_double(fields[6])});
  }
  return out;
}

inline std::vector<OutputRecord> parse_json(std::istream& in) {
  const nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<OutputRecord> out;
  for (const auto& j : doc)
    out.push_back(OutputRecord{j.at("m").get<int>(), j.at("n").get<int>(),
                               parse_family(j.at("family").get<std::string>()),
                               parse_method(j.at("method").get<std::string>()), j.at("value").get<std::string>(),
                               j.at("exact").get<bool>(), j.at("elapsed_ms").get<double>()});
  return out;
}

}  // namespace gridsets
