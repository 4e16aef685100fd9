#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sympair/pairs.hpp"

namespace sympair {

/// Invalid configuration; reported before any work starts.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Report could not be written. Distinct from a verification failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CheckKind { Restriction, Charpoly, BlockCharpoly, Weyl, Pfaffian, KronDet, Generation };

std::string_view to_string(CheckKind c);
CheckKind parse_check_kind(std::string_view name);
/// Checks that apply to the pair, in canonical order.
std::vector<CheckKind> applicable_checks(const PairDescriptor& p);

struct RunConfig {
  PairKind pair = PairKind::AI;
  std::size_t n = 1;
  std::size_t m = 0;
  std::size_t d = 1;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  unsigned max_degree = 6;
  unsigned max_word_length = 3;
  unsigned bound = kDefaultBound;
  std::vector<CheckKind> checks{CheckKind::Restriction};
  std::string output;               // empty or "-" means stdout
  bool allow_even_m = false;        // BDI generation with m even
  std::size_t generation_samples = 0;  // 0: enough for every degree
  unsigned threads = 1;

  PairDescriptor descriptor() const { return PairDescriptor::make(pair, n, m); }
};

/// Sets one key (flag name without dashes, '-' and '_' interchangeable).
/// Throws UsageError on unknown keys or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);
/// key=value lines; blank lines and '#' comments ignored.
void apply_config_text(RunConfig& config, std::string_view text);
/// Throws UsageError. Returns warnings that do not block the run.
std::vector<std::string> validate_config(const RunConfig& config);

enum class Outcome { Pass, Fail, Inconclusive };
std::string_view to_string(Outcome o);

struct ReportRecord {
  std::string check;
  std::size_t trial;
  std::string input;   // human-readable description of the checked inputs
  std::string digest;  // FNV-1a of `input`, 16 hex digits
  Outcome outcome;
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
  nlohmann::ordered_json detail;
  std::int64_t elapsed_us;
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
  std::size_t total = 0;
};

struct Report {
  RunConfig config;
  std::vector<ReportRecord> records;
  std::int64_t elapsed_us = 0;

  ReportSummary summary() const;
};

/// Executes the configured checks. Records are ordered by (check, trial,
/// item) whatever the thread count.
Report run(const RunConfig& config);

nlohmann::ordered_json config_to_json(const RunConfig& config);
nlohmann::ordered_json record_to_json(const ReportRecord& r);
nlohmann::ordered_json summary_to_json(const Report& r);

/// One JSON object per line: every record, then the summary record.
void write_report(const Report& r, std::ostream& out);
/// Path empty or "-" writes to stdout. Throws IoError.
void emit_report(const Report& r, const std::string& path);

/// 0 when nothing failed, 1 otherwise.
int exit_status(const Report& r);

std::string fnv1a_hex(std::string_view s);

}  // namespace sympair
