#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <set>

#include "hsze/errors.hpp"
#include "hsze/verify.hpp"

using namespace hsze;

namespace {

RunConfig cfg_for(Suite s, int jobs = 2, int bits = 256, int tol = 30) {
  return RunConfig::make(bits, tol, s, OutputFormat::text, 100000, 1000000,
                         SeriesRoute::row_accelerated, jobs);
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(RunConfig::make(64, 5, Suite::core, OutputFormat::text), ConfigError);
  CHECK_THROWS_AS(RunConfig::make(64, 10, Suite::core, OutputFormat::text), ConfigError);
  CHECK_THROWS_AS(RunConfig::make(160, 30, Suite::core, OutputFormat::text), ConfigError);
  CHECK_NOTHROW(RunConfig::make(164, 30, Suite::core, OutputFormat::text));
  CHECK_NOTHROW(RunConfig::make(256, 30, Suite::core, OutputFormat::text));
  CHECK_THROWS_AS(RunConfig::make(256, 30, Suite::core, OutputFormat::text, 2, 1000000),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::make(256, 30, Suite::core, OutputFormat::text, 100000, 1000000,
                                  SeriesRoute::closed_form),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::make(256, 30, Suite::core, OutputFormat::text, 100000, 1000000,
                                  SeriesRoute::row_accelerated, 0),
                  ConfigError);

  CHECK(suite_from_string("qzeta") == Suite::qzeta);
  CHECK_THROWS_AS(suite_from_string("bogus"), ConfigError);
  CHECK(format_from_string("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(format_from_string("xml"), ConfigError);
  CHECK(to_string(Suite::properties) == "properties");
  CHECK(to_string(SeriesRoute::naive_symmetric) == "naive");
}

TEST_CASE("suite listings are sorted and deduplicated") {
  std::vector<std::string> core = suite_ids(Suite::core);
  CHECK(core.size() == 13);
  CHECK(std::is_sorted(core.begin(), core.end()));
  std::vector<std::string> all = suite_ids(Suite::all);
  std::set<std::string> uniq(all.begin(), all.end());
  CHECK(uniq.size() == all.size());
  CHECK(uniq.count("1-11") == 1);
  CHECK(uniq.count("prop-limit-order-k1") == 1);
  for (const std::string& id : core) CHECK(uniq.count(id) == 1);
}

TEST_CASE("core suite passes and records satisfy the pass rule") {
  VerificationReport rep = run_suite(cfg_for(Suite::core));
  CHECK(rep.records.size() == 13);
  CHECK(rep.failed == 0);
  CHECK(rep.passed == static_cast<long>(rep.records.size()));
  mpfr_prec_t wp = 320;
  for (std::size_t j = 1; j < rep.records.size(); ++j)
    CHECK(rep.records[j - 1].identity_id < rep.records[j].identity_id);
  for (const auto& r : rep.records) {
    CHECK(!r.identity_id.empty());
    if (r.tolerance == "0") {
      CHECK(r.pass == (r.abs_diff == "0"));
      continue;
    }
    HPReal diff = HPReal::of_string(r.abs_diff, wp);
    HPReal tol = HPReal::of_string(r.tolerance, wp);
    // the recorded pass bit must be reproducible from the recorded numbers,
    // up to the max(1, |lhs|, |rhs|) scale which is >= 1
    if (r.pass) {
      HPReal loose = tol * HPReal::of(100, wp);
      CHECK(diff <= loose);
    } else {
      CHECK(diff > tol);
    }
  }
}

TEST_CASE("qzeta suite passes") {
  VerificationReport rep = run_suite(cfg_for(Suite::qzeta));
  CHECK(rep.failed == 0);
  CHECK(rep.records.size() == 13);
}

TEST_CASE("reports are deterministic and job-count independent") {
  RunConfig one = cfg_for(Suite::qzeta, 1);
  RunConfig four = cfg_for(Suite::qzeta, 4);
  VerificationReport a = run_suite(one);
  VerificationReport b = run_suite(four);
  // job count shows up in the config block, so records are compared through
  // the config-free csv form
  CHECK(render_csv(a, false) == render_csv(b, false));
  VerificationReport c = run_suite(one);
  CHECK(render_json(a, false) == render_json(c, false));
}

TEST_CASE("renderers carry the schema and summary") {
  VerificationReport rep = run_suite(cfg_for(Suite::theorem1, 4));
  CHECK(rep.failed == 0);

  std::string js = render_json(rep, true);
  auto parsed = nlohmann::json::parse(js);
  CHECK(parsed["schema"] == 1);
  CHECK(parsed["summary"]["passed"] == rep.passed);
  CHECK(parsed["summary"]["failed"] == 0);
  CHECK(parsed["records"].size() == rep.records.size());
  CHECK(parsed["records"][0].contains("wall_time"));
  auto canonical = nlohmann::json::parse(render_json(rep, false));
  CHECK(!canonical["records"][0].contains("wall_time"));
  CHECK(parsed["config"]["suite"] == "theorem1");

  std::string cs = render_csv(rep, false);
  CHECK(cs.rfind("identity_id,lhs_value,rhs_value,abs_diff,tolerance,pass,route,terms_used\n",
                 0) == 0);

  std::string tx = render_text(rep);
  CHECK(tx.find("summary: ") != std::string::npos);
  CHECK(tx.find("FAIL") == std::string::npos);
}
