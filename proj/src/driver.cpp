#include "qcong/driver.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "qcong/error.hpp"
#include "qcong/identities.hpp"
#include "qcong/modforms.hpp"
#include "qcong/primes.hpp"
#include "qcong/supercong.hpp"

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

CongruenceReport verdict(const Job& job, bool ok, std::string witness = {}) {
  CongruenceReport r;
  r.statement_id = job.statement_id;
  r.params = job.params;
  r.note = job.note;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  if (!ok) r.witness = witness.empty() ? "congruence does not hold" : std::move(witness);
  return r;
}

CongruenceReport undefined_report(const Job& job, const std::string& error) {
  CongruenceReport r;
  r.statement_id = job.statement_id;
  r.params = job.params;
  r.note = job.note;
  r.status = CheckStatus::undefined;
  r.error = error;
  return r;
}

// Runs one job, turning library errors into undefined reports so a worker
// never lets an exception escape.
CongruenceReport guarded(const Checker& check, const Job& job) {
  const auto start = Clock::now();
  CongruenceReport r;
  try {
    r = check(job);
  } catch (const Error& e) {
    r = undefined_report(job, std::string(to_string(e.kind())));
  } catch (const std::exception& e) {
    r = undefined_report(job, std::string("Exception: ") + e.what());
  }
  if (r.elapsed_ms == 0) r.elapsed_ms = ms_since(start);
  return r;
}

long param(const Job& job, const char* name) { return job.params.at(name); }

ObservationReading reading_from(const std::string& s) {
  if (s == "divisors") return ObservationReading::divisors;
  if (s == "all_below") return ObservationReading::all_below;
  throw Error(ErrorKind::InvalidArgument, "reading must be 'divisors' or 'all_below'");
}

bool is_product_identity(IdentityId id) {
  return id == IdentityId::hqA || id == IdentityId::hqB || id == IdentityId::hqB2 || id == IdentityId::q_kummer;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"3.1", "3.2", "3.2a", "3.3", "3.4", "3.5", "4.14", "obs"};
  return ids;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void require_range(const Range& r, const char* flag) {
  if (r.empty()) throw Error(ErrorKind::InvalidArgument, std::string(flag) + " is empty or missing");
}

std::string params_text(const std::map<std::string, long>& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string witness_hash(const std::optional<std::string>& w) {
  if (!w) return "";
  std::ostringstream os;
  os << std::hex << std::hash<std::string>{}(*w);
  return os.str();
}

}  // namespace

TermSpec series_term(const std::string& series) {
  if (!series.empty() && series.front() == '{') {
    try {
      return TermSpec::from_json(nlohmann::json::parse(series));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("bad TermSpec JSON: ") + e.what());
    }
  }
  return preset(series);
}

Range parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
    const long lo = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const long hi = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    if (hi < lo) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "bad range '" + s + "' (expected A:B with A <= B)");
  }
}

std::string_view to_string(TaskKind k) {
  switch (k) {
    case TaskKind::theorem: return "theorem";
    case TaskKind::conjecture: return "conjecture";
    case TaskKind::problem: return "problem";
    case TaskKind::identity: return "identity";
    case TaskKind::modform: return "modform";
    case TaskKind::supercong: return "supercong";
    case TaskKind::numeric: return "numeric";
    case TaskKind::scan: return "scan";
  }
  return "?";
}

nlohmann::json TaskSpec::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["id"] = id;
  if (!n_range.empty()) j["n_range"] = {n_range.lo, n_range.hi};
  if (!p_range.empty()) j["p_range"] = {p_range.lo, p_range.hi};
  switch (kind) {
    case TaskKind::conjecture: j["r_max"] = r_max; break;
    case TaskKind::identity:
      j["order"] = order;
      if (!params.empty()) j["params"] = params;
      break;
    case TaskKind::modform:
      j["limit"] = limit;
      j["check_closed_form"] = check_closed_form;
      if (l_value_s) j["l_value_s"] = *l_value_s;
      break;
    case TaskKind::scan:
      j["power"] = power;
      j["upper"] = upper_rule;
      break;
    case TaskKind::theorem:
      if (id == "obs") j["reading"] = reading;
      break;
    default: break;
  }
  return j;
}

std::string Job::key() const {
  std::string k = statement_id + "|" + params_text(params);
  if (!note.empty()) k += "|" + note;
  return k;
}

int RunReport::exit_code() const { return (summary.failed == 0 && summary.undefined == 0) ? 0 : 1; }

nlohmann::json RunReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["task"] = task.to_json();
  j["results"] = nlohmann::json::array();
  for (const auto& r : results) j["results"].push_back(r.to_json(with_timing));
  j["summary"] = {{"passed", summary.passed},
                  {"failed", summary.failed},
                  {"undefined", summary.undefined},
                  {"skipped", summary.skipped}};
  if (table) j["table"] = {{"columns", table->columns}, {"rows", table->rows}};
  if (with_timing) j["wall_time_ms"] = wall_time_ms;
  return j;
}

Summary summarize(const std::vector<CongruenceReport>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::pass: ++s.passed; break;
      case CheckStatus::fail: ++s.failed; break;
      case CheckStatus::undefined: ++s.undefined; break;
      case CheckStatus::skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::vector<Job> expand(const TaskSpec& task) {
  std::vector<Job> jobs;
  switch (task.kind) {
    case TaskKind::theorem:
    case TaskKind::problem:
    case TaskKind::conjecture: {
      const bool ok_id = task.kind == TaskKind::theorem      ? contains(theorem_ids(), task.id)
                         : task.kind == TaskKind::problem    ? task.id == "3.6"
                                                             : (task.id == "4.1" || task.id == "4.2");
      if (!ok_id) {
        throw Error(ErrorKind::InvalidArgument, "unknown " + std::string(to_string(task.kind)) + " id '" + task.id + "'");
      }
      require_range(task.n_range, "--n-range");
      if (task.n_range.hi > 100000) throw Error(ErrorKind::InvalidArgument, "--n-range upper end too large");
      if (task.kind == TaskKind::conjecture && task.r_max < 1) {
        throw Error(ErrorKind::InvalidArgument, "--r-max must be >= 1");
      }
      const std::string note = task.id == "obs" ? "reading=" + task.reading : "";
      if (task.id == "obs") reading_from(task.reading);
      for (long n = std::max(task.n_range.lo, 1L); n <= task.n_range.hi; ++n) {
        if (!applicable(task.id, n)) continue;
        if (task.kind == TaskKind::conjecture) {
          for (long r = 1; r <= task.r_max; ++r) jobs.push_back({task.id, {{"n", n}, {"r", r}}, note});
        } else {
          jobs.push_back({task.id, {{"n", n}}, note});
        }
      }
      break;
    }
    case TaskKind::identity: {
      const IdentityId id = identity_from_string(task.id);
      if (is_terminating(id)) {
        terminating_instance(id, task.params);  // validates the parameters
        jobs.push_back({task.id, task.params, ""});
      } else {
        if (task.order < 1 || task.order > 100000) throw Error(ErrorKind::InvalidArgument, "--order must be in 1..100000");
        auto params = task.params;
        params["order"] = task.order;
        if (id == IdentityId::q_clausen) {
          params.try_emplace("alpha", 0);
          params.try_emplace("zs", 1);
          params.try_emplace("ze", 2);
        } else if (!is_product_identity(id)) {
          throw Error(ErrorKind::InvalidArgument, "identity '" + task.id + "' has no batch check");
        }
        jobs.push_back({task.id, params, ""});
      }
      break;
    }
    case TaskKind::modform: {
      form_from_string(task.id);
      if (task.limit < 1 || task.limit > kEtaGuard) throw Error(ErrorKind::InvalidArgument, "--limit must be in 1..10^6");
      if (task.check_closed_form) {
        for (long p : odd_primes_up_to(task.limit)) jobs.push_back({"modform." + task.id, {{"p", p}}, ""});
      }
      break;
    }
    case TaskKind::supercong: {
      static const std::vector<std::string> ids = {"B2", "A2", "cong2", "gamma"};
      if (!contains(ids, task.id)) throw Error(ErrorKind::InvalidArgument, "unknown supercong id '" + task.id + "'");
      require_range(task.p_range, "--p-range");
      if (task.p_range.hi > 20000) throw Error(ErrorKind::InvalidArgument, "--p-range upper end too large");
      if (task.id == "gamma" && task.p_range.hi > 1999) {
        throw Error(ErrorKind::InvalidArgument, "Gamma_p evaluation is capped at p <= 1999");
      }
      for (long p : odd_primes_up_to(task.p_range.hi)) {
        if (p < task.p_range.lo) continue;
        if (task.id == "gamma") {
          jobs.push_back({"gamma.a1", {{"p", p}}, ""});
          jobs.push_back({"gamma.cong2", {{"p", p}}, ""});
        } else {
          jobs.push_back({task.id, {{"p", p}}, ""});
        }
      }
      break;
    }
    case TaskKind::numeric: {
      static const std::vector<std::string> ids = {"bauer", "H1", "H2", "Lchi4"};
      if (task.id == "all") {
        for (const auto& id : ids) jobs.push_back({"numeric." + id, {}, ""});
      } else if (contains(ids, task.id)) {
        jobs.push_back({"numeric." + task.id, {}, ""});
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown numeric id '" + task.id + "'");
      }
      break;
    }
    case TaskKind::scan: {
      series_term(task.id);  // validates the preset name or TermSpec JSON
      require_range(task.n_range, "--n-range");
      if (task.power < 1 || task.power > 4) throw Error(ErrorKind::InvalidArgument, "--power must be in 1..4");
      upper_rule_from_string(task.upper_rule);
      for (long n = std::max(task.n_range.lo, 3L) | 1L; n <= task.n_range.hi; n += 2) {
        jobs.push_back({"scan.residue", {{"n", n}, {"k", task.power}}, "series=" + task.id + " upper=" + task.upper_rule});
      }
      break;
    }
  }
  return jobs;
}

Checker checker_for(const TaskSpec& task) {
  switch (task.kind) {
    case TaskKind::theorem:
    case TaskKind::problem:
    case TaskKind::conjecture: {
      const ObservationReading reading = task.id == "obs" ? reading_from(task.reading) : ObservationReading::divisors;
      return [reading](const Job& job) {
        const auto r = job.params.find("r");
        CongruenceReport rep = check(job.statement_id, param(job, "n"), r == job.params.end() ? 1 : r->second, reading);
        rep.params = job.params;
        return rep;
      };
    }
    case TaskKind::identity:
      return [](const Job& job) {
        const IdentityId id = identity_from_string(job.statement_id);
        if (is_terminating(id)) return verdict(job, verify_terminating(id, job.params));
        const long order = param(job, "order");
        if (id == IdentityId::q_clausen) {
          const QPow z{static_cast<int>(param(job, "zs")), param(job, "ze")};
          return verdict(job, verify_q_clausen(param(job, "alpha"), z, order));
        }
        return verdict(job, verify_product_identity(id, order), "series differ below the requested order");
      };
    case TaskKind::modform: {
      const FormId form = form_from_string(task.id);
      auto table = std::make_shared<CoeffTable>(eta_coeffs(form, task.limit));
      return [form, table](const Job& job) {
        const long p = param(job, "p");
        const long eta = table->at(p), closed = closed_form_a(form, p);
        return verdict(job, eta == closed,
                       "eta coefficient " + std::to_string(eta) + ", closed form " + std::to_string(closed));
      };
    }
    case TaskKind::supercong:
      return [](const Job& job) {
        const long p = param(job, "p");
        if (job.statement_id == "B2") {
          const B2Result r = check_B2(p);
          return verdict(job, r.full && r.half,
                         std::string("truncation at p-1: ") + (r.full ? "ok" : "fails") +
                             ", at (p-1)/2: " + (r.half ? "ok" : "fails"));
        }
        BranchResult r;
        if (job.statement_id == "A2") {
          r = check_A2_style(p);
        } else if (job.statement_id == "cong2") {
          r = check_cong2(p);
        } else {
          const GammaResult g = check_gamma_congruences(p);
          const bool first = job.statement_id == "gamma.a1";
          CongruenceReport rep = verdict(job, first ? g.g1 : g.g2, "Gamma quotient differs mod p^2");
          if (!(first ? g.applicable1 : g.applicable2)) rep.note = "coefficient is 0 at this p";
          return rep;
        }
        return verdict(job, r.ok(),
                       std::string("sum congruence ") + (r.sum ? "ok" : "fails") +
                           (r.branch ? std::string(", branch congruence ") + (*r.branch ? "ok" : "fails") : ""));
      };
    case TaskKind::numeric:
      return [](const Job& job) {
        const NumericCheck c = numeric_check(job.statement_id.substr(std::string("numeric.").size()));
        CongruenceReport rep = verdict(job, c.pass(), "value " + format_double(c.value) + " misses " + format_double(c.target));
        rep.note = "value=" + format_double(c.value) + " target=" + format_double(c.target) +
                   " error_estimate=" + format_double(c.error_estimate) + " tolerance=" + format_double(c.tolerance);
        return rep;
      };
    case TaskKind::scan: {
      const UpperRule rule = upper_rule_from_string(task.upper_rule);
      const TermSpec term = series_term(task.id);
      return [rule, term](const Job& job) {
        CongruenceReport rep = verdict(job, true);
        rep.note = residue_report(term, rule, param(job, "n"), static_cast<int>(param(job, "k"))).to_string();
        return rep;
      };
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown task kind");
}

std::vector<CongruenceReport> run_jobs(const std::vector<Job>& jobs, const Checker& check, int threads) {
  std::vector<CongruenceReport> out(jobs.size());
  const int t = threads > 0 ? threads : omp_get_max_threads();
  const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = guarded(check, jobs[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<CongruenceReport> run_jobs_serial(const std::vector<Job>& jobs, const Checker& check) {
  std::vector<CongruenceReport> out;
  out.reserve(jobs.size());
  for (const auto& job : jobs) out.push_back(guarded(check, job));
  return out;
}

ResultCache::ResultCache(std::string path, std::ostream& warn) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      status_[j.at("key").get<std::string>()] = j.at("status").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      warn << "warning: cache " << path_ << " line " << lineno << " is corrupt; ignoring the cache\n";
      status_.clear();
      return;
    }
  }
}

bool ResultCache::has_pass(const Job& job) const {
  const auto it = status_.find(job.key());
  return it != status_.end() && it->second == "pass";
}

void ResultCache::append(const std::vector<Job>& jobs, const std::vector<CongruenceReport>& results) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache file " + path_);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& r = results[i];
    if (r.status == CheckStatus::skipped) continue;
    nlohmann::json j;
    j["key"] = jobs[i].key();
    j["statement_id"] = r.statement_id;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["witness_hash"] = witness_hash(r.witness);
    out << j.dump() << '\n';
    status_[jobs[i].key()] = std::string(to_string(r.status));
  }
  if (!out) throw std::runtime_error("error writing cache file " + path_);
}

RunReport run(const TaskSpec& task, const RunOptions& opts, std::ostream& warn) {
  const auto start = Clock::now();
  RunReport rep;
  rep.task = task;
  const std::vector<Job> all = expand(task);

  std::unique_ptr<ResultCache> cache;
  if (opts.cache_path) cache = std::make_unique<ResultCache>(*opts.cache_path, warn);

  std::vector<Job> todo;
  std::vector<std::size_t> todo_index;
  rep.results.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (cache && !opts.force && cache->has_pass(all[i])) {
      CongruenceReport r;
      r.statement_id = all[i].statement_id;
      r.params = all[i].params;
      r.status = CheckStatus::skipped;
      r.note = "cached pass";
      rep.results[i] = r;
    } else {
      todo.push_back(all[i]);
      todo_index.push_back(i);
    }
  }

  if (!todo.empty()) {
    const Checker check = checker_for(task);
    const auto done = opts.serial ? run_jobs_serial(todo, check) : run_jobs(todo, check, opts.threads);
    for (std::size_t i = 0; i < done.size(); ++i) rep.results[todo_index[i]] = done[i];
    if (cache) cache->append(todo, done);
  }

  if (task.kind == TaskKind::modform) {
    const CoeffTable t = eta_coeffs(form_from_string(task.id), task.limit);
    Table table{{"n", "a_n"}, {}};
    for (long n = 1; n <= task.limit; ++n) table.rows.push_back({std::to_string(n), std::to_string(t.at(n))});
    if (task.l_value_s) {
      const NumericValue v = l_value(form_from_string(task.id), *task.l_value_s, task.limit);
      CongruenceReport r;
      r.statement_id = "l_value." + task.id;
      r.status = CheckStatus::skipped;
      r.note = "s=" + format_double(*task.l_value_s) + " value=" + format_double(v.value) +
               " error_estimate=" + format_double(v.error) + " (advisory)";
      rep.results.push_back(r);
    }
    rep.table = std::move(table);
  } else if (task.kind == TaskKind::scan) {
    Table table{{"n", "residue"}, {}};
    for (const auto& r : rep.results) {
      if (r.status == CheckStatus::pass) table.rows.push_back({std::to_string(r.params.at("n")), r.note});
    }
    rep.table = std::move(table);
  }
  rep.summary = summarize(rep.results);
  rep.wall_time_ms = ms_since(start);
  return rep;
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw Error(ErrorKind::InvalidArgument, "format must be json, csv or text");
}

void emit(const RunReport& report, OutputFormat format, std::ostream& out) {
  const Summary& s = report.summary;
  switch (format) {
    case OutputFormat::json:
      out << report.to_json().dump(2) << '\n';
      return;
    case OutputFormat::csv:
      if (report.table) {
        for (std::size_t i = 0; i < report.table->columns.size(); ++i) out << (i ? "," : "") << report.table->columns[i];
        out << '\n';
        for (const auto& row : report.table->rows) {
          for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_quote(row[i]);
          out << '\n';
        }
        return;
      }
      out << "statement_id,params,status,witness,note\n";
      for (const auto& r : report.results) {
        out << csv_quote(r.statement_id) << ',' << csv_quote(params_text(r.params)) << ',' << to_string(r.status) << ','
            << csv_quote(r.witness.value_or(r.error)) << ',' << csv_quote(r.note) << '\n';
      }
      return;
    case OutputFormat::text:
      if (report.table) {
        for (std::size_t i = 0; i < report.table->columns.size(); ++i) out << (i ? " " : "") << report.table->columns[i];
        out << '\n';
        for (const auto& row : report.table->rows) {
          for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
          out << '\n';
        }
      }
      for (const auto& r : report.results) {
        out << r.statement_id;
        if (!r.params.empty()) out << ' ' << params_text(r.params);
        out << ": " << to_string(r.status);
        if (r.witness) out << "  witness: " << *r.witness;
        if (!r.error.empty()) out << "  error: " << r.error;
        if (!r.note.empty()) out << "  [" << r.note << "]";
        out << '\n';
      }
      out << "passed=" << s.passed << " failed=" << s.failed << " undefined=" << s.undefined
          << " skipped=" << s.skipped << '\n';
      return;
  }
}

}  // namespace qcong
