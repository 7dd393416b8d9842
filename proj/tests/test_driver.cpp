#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qcong/driver.hpp"
#include "qcong/error.hpp"

using namespace qcong;

namespace {

std::string temp_path(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("qcong_test_" + name);
  std::filesystem::remove(p);
  return p.string();
}

TaskSpec theorem_task(const std::string& id, long lo, long hi) {
  TaskSpec t;
  t.kind = TaskKind::theorem;
  t.id = id;
  t.n_range = {lo, hi};
  return t;
}

RunOptions threads(int k) {
  RunOptions o;
  o.threads = k;
  return o;
}

}  // namespace

TEST_CASE("parse_range") {
  CHECK(parse_range("3:25").lo == 3);
  CHECK(parse_range("3:25").hi == 25);
  CHECK(parse_range("7").hi == 7);
  CHECK_THROWS_AS(parse_range("5:3"), Error);
  CHECK_THROWS_AS(parse_range("a:3"), Error);
  CHECK_THROWS_AS(parse_range("3:4x"), Error);
}

TEST_CASE("expansion follows each statement's residue class") {
  CHECK(expand(theorem_task("3.1", 3, 25)).size() == 12);
  CHECK(expand(theorem_task("3.5", 1, 30)).size() == 8);  // 1, 5, ..., 29
  TaskSpec c;
  c.kind = TaskKind::conjecture;
  c.id = "4.1";
  c.n_range = {3, 20};
  c.r_max = 3;
  CHECK(expand(c).size() == 5 * 3);  // n = 3, 7, 11, 15, 19
  CHECK_THROWS_AS(expand(theorem_task("9.9", 3, 5)), Error);
  CHECK_THROWS_AS(expand(theorem_task("3.1", 0, -1)), Error);
  TaskSpec s;
  s.kind = TaskKind::supercong;
  s.id = "gamma";
  s.p_range = {3, 13};
  CHECK(expand(s).size() == 2 * 5);
}

TEST_CASE("documented examples through run()") {
  std::ostringstream warn;
  RunReport r = run(theorem_task("3.1", 3, 25), threads(2), warn);
  CHECK(r.summary.passed == 12);
  CHECK(r.exit_code() == 0);

  TaskSpec p;
  p.kind = TaskKind::problem;
  p.id = "3.6";
  p.n_range = {7, 199};
  r = run(p, threads(2), warn);
  CHECK(r.summary.passed == 25);
  CHECK(r.summary.failed + r.summary.undefined == 0);

  TaskSpec m;
  m.kind = TaskKind::modform;
  m.id = "f1";
  m.limit = 100;
  m.check_closed_form = true;
  r = run(m, threads(2), warn);
  CHECK(r.summary.passed == 24);  // odd primes below 100
  CHECK(r.exit_code() == 0);
  REQUIRE(r.table);
  CHECK(r.table->rows.size() == 100);
  CHECK(r.table->rows[4] == std::vector<std::string>{"5", "-6"});
}

TEST_CASE("emit") {
  RunReport empty;
  std::ostringstream os;
  emit(empty, OutputFormat::json, os);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["results"].empty());
  CHECK(j["summary"]["passed"] == 0);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["undefined"] == 0);
  CHECK(j.contains("wall_time_ms"));

  RunReport one;
  CongruenceReport bad;
  bad.statement_id = "3.2";
  bad.params = {{"n", 13}};
  bad.status = CheckStatus::fail;
  bad.witness = "1 + q";
  one.results = {bad};
  one.summary = summarize(one.results);
  std::ostringstream js;
  emit(one, OutputFormat::json, js);
  const auto r = nlohmann::json::parse(js.str())["results"][0];
  CHECK(r["status"] == "fail");
  CHECK(r["witness"] == "1 + q");
  CHECK(one.exit_code() == 1);

  TaskSpec m;
  m.kind = TaskKind::modform;
  m.id = "f2";
  m.limit = 5;
  std::ostringstream csv;
  emit(run(m, threads(1), csv), OutputFormat::csv, csv);
  CHECK(csv.str().rfind("n,a_n\n1,1\n2,-2\n3,-2\n", 0) == 0);
}

TEST_CASE("results do not depend on the number of threads") {
  std::ostringstream warn;
  TaskSpec c;
  c.kind = TaskKind::conjecture;
  c.id = "4.2";
  c.n_range = {3, 31};
  c.r_max = 2;
  const auto one = run(c, threads(1), warn).to_json(false).dump();
  const auto four = run(c, threads(4), warn).to_json(false).dump();
  RunOptions serial;
  serial.serial = true;
  const auto ref = run(c, serial, warn).to_json(false).dump();
  CHECK(one == four);
  CHECK(one == ref);
}

TEST_CASE("exit code contract with injected stub checkers") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Job> jobs;
    std::vector<int> outcome;  // 0 pass, 1 fail, 2 throws, 3 skipped
    const int count = static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) {
      jobs.push_back({"stub", {{"i", i}}, ""});
      const unsigned roll = rng() % 10;
      outcome.push_back(roll < 7 ? 0 : roll < 8 ? 1 : roll < 9 ? 2 : 3);
    }
    const Checker stub = [&outcome](const Job& job) {
      CongruenceReport r;
      r.statement_id = job.statement_id;
      r.params = job.params;
      switch (outcome[static_cast<std::size_t>(job.params.at("i"))]) {
        case 0: r.status = CheckStatus::pass; break;
        case 1:
          r.status = CheckStatus::fail;
          r.witness = "q";
          break;
        case 2: throw Error(ErrorKind::PoleAtCyclotomic, "stub pole");
        default: r.status = CheckStatus::skipped; break;
      }
      return r;
    };
    RunReport rep;
    rep.results = run_jobs(jobs, stub, 3);
    rep.summary = summarize(rep.results);
    const long bad = std::count_if(outcome.begin(), outcome.end(), [](int o) { return o == 1 || o == 2; });
    CHECK(rep.summary.passed + rep.summary.failed + rep.summary.undefined + rep.summary.skipped == count);
    CHECK(rep.summary.undefined == std::count(outcome.begin(), outcome.end(), 2));
    CHECK(rep.exit_code() == (bad == 0 ? 0 : 1));
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      CHECK(rep.results[i].params.at("i") == static_cast<long>(i));
      if (outcome[i] == 2) CHECK(rep.results[i].error == "PoleAtCyclotomic");
    }
  }
}

TEST_CASE("cache: reruns skip passes, --force ignores, corruption degrades") {
  const std::string path = temp_path("cache.jsonl");
  std::ostringstream warn;
  RunOptions opts = threads(2);
  opts.cache_path = path;
  TaskSpec t = theorem_task("3.3", 3, 41);

  const RunReport first = run(t, opts, warn);
  CHECK(first.summary.skipped == 0);
  CHECK(first.summary.passed == 20);

  const RunReport second = run(t, opts, warn);
  CHECK(second.summary.skipped == first.summary.passed);
  CHECK(second.summary.passed == 0);
  CHECK(second.exit_code() == 0);

  // a different reading is a different key
  TaskSpec obs = theorem_task("obs", 3, 11);
  obs.reading = "all_below";
  const RunReport obs_first = run(obs, opts, warn);
  CHECK(obs_first.summary.failed > 0);
  const RunReport obs_again = run(obs, opts, warn);
  CHECK(obs_again.summary.failed == obs_first.summary.failed);  // failures are never skipped

  opts.force = true;
  const RunReport forced = run(t, opts, warn);
  CHECK(forced.summary.skipped == 0);
  CHECK(forced.summary.passed == 20);
  opts.force = false;

  {
    std::ofstream out(path, std::ios::app);
    out << "{not json\n";
  }
  std::ostringstream corrupt_warn;
  const RunReport degraded = run(t, opts, corrupt_warn);
  CHECK(corrupt_warn.str().find("corrupt") != std::string::npos);
  CHECK(degraded.summary.skipped == 0);
  CHECK(degraded.summary.passed == 20);
  std::filesystem::remove(path);
}

TEST_CASE("cache write errors name the path") {
  RunOptions opts;
  opts.cache_path = "/nonexistent-dir/qcong.jsonl";
  std::ostringstream warn;
  try {
    run(theorem_task("3.1", 3, 5), opts, warn);
    FAIL("expected an I/O error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/qcong.jsonl") != std::string::npos);
  }
}

TEST_CASE("scan residue table") {
  TaskSpec s;
  s.kind = TaskKind::scan;
  s.id = "S5";
  s.n_range = {3, 19};
  std::ostringstream warn;
  const RunReport r = run(s, threads(2), warn);
  REQUIRE(r.table);
  CHECK(r.table->columns == std::vector<std::string>{"n", "residue"});
  CHECK(r.table->rows.size() == 9);
  CHECK(r.table->rows[0] == std::vector<std::string>{"3", "q"});
  CHECK(r.table->rows[1] == std::vector<std::string>{"5", "0"});
  CHECK(r.exit_code() == 0);
  s.id = "S99";
  CHECK_THROWS_AS(expand(s), Error);
  s.id = R"({"factors":[{"sign":1,"a_exp":1,"step":2,"mult":2},{"sign":1,"a_exp":2,"step":2,"mult":-2}],"sign_k":1,"quad_coef":0,"lin_coef":2,"affine":[]})";
  CHECK(expand(s).size() == 9);
}
