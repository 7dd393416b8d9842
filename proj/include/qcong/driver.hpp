#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcong/congruences.hpp"

namespace qcong {

/// Inclusive integer range A:B.
struct Range {
  long lo = 0;
  long hi = -1;
  bool empty() const { return hi < lo; }
};
/// Parses "A:B" (or a single "A"); throws InvalidArgument.
/// A preset name (S1 ... S10) or an inline TermSpec JSON object.
TermSpec series_term(const std::string& series);

Range parse_range(const std::string& s);

enum class TaskKind { theorem, conjecture, problem, identity, modform, supercong, numeric, scan };
std::string_view to_string(TaskKind k);

/// One batch request as given on the command line.
struct TaskSpec {
  TaskKind kind = TaskKind::theorem;
  std::string id;
  Range n_range;
  Range p_range;
  long r_max = 1;
  long order = 200;
  long limit = 100;
  int power = 1;
  std::string upper_rule = "(n-1)/2";
  std::string reading = "divisors";
  bool check_closed_form = false;
  std::optional<double> l_value_s;
  std::map<std::string, long> params;

  nlohmann::json to_json() const;
};

/// One independent check: the unit of parallelism.
struct Job {
  std::string statement_id;
  std::map<std::string, long> params;
  std::string note;

  /// Stable identity used for ordering and caching.
  std::string key() const;
};

using Checker = std::function<CongruenceReport(const Job&)>;

/// A value table (modform coefficients, scan residues).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Summary {
  long passed = 0;
  long failed = 0;
  long undefined = 0;
  long skipped = 0;
};

struct RunReport {
  TaskSpec task;
  std::vector<CongruenceReport> results;
  std::optional<Table> table;
  Summary summary;
  double wall_time_ms = 0;

  /// 0 iff nothing failed and nothing was undefined.
  int exit_code() const;
  nlohmann::json to_json(bool with_timing = true) const;
};

Summary summarize(const std::vector<CongruenceReport>& results);

/// Expands a task into its jobs, in deterministic order. Throws
/// InvalidArgument / OutOfDomain for unusable specs.
std::vector<Job> expand(const TaskSpec& task);
/// The module checker that owns a task kind.
Checker checker_for(const TaskSpec& task);

/// Runs every job on an OpenMP worker pool (threads <= 0: all available);
/// results come back in job order regardless of scheduling.
std::vector<CongruenceReport> run_jobs(const std::vector<Job>& jobs, const Checker& check, int threads);
/// Single-threaded reference for run_jobs.
std::vector<CongruenceReport> run_jobs_serial(const std::vector<Job>& jobs, const Checker& check);

/// Append-only JSON-lines cache of finished checks.
class ResultCache {
 public:
  /// Loads `path` if it exists. A malformed line discards the whole cache
  /// with a warning on `warn` (degraded mode: full recompute).
  ResultCache(std::string path, std::ostream& warn);
  bool has_pass(const Job& job) const;
  /// Appends records for every non-skipped result.
  void append(const std::vector<Job>& jobs, const std::vector<CongruenceReport>& results);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::string, std::string> status_;  // key -> status
};

struct RunOptions {
  int threads = 0;
  std::optional<std::string> cache_path;
  bool force = false;
  bool serial = false;
};

/// Expand, consult the cache, check, merge, tabulate.
RunReport run(const TaskSpec& task, const RunOptions& opts, std::ostream& warn);

enum class OutputFormat { json, csv, text };
OutputFormat format_from_string(const std::string& s);
void emit(const RunReport& report, OutputFormat format, std::ostream& out);

}  // namespace qcong
