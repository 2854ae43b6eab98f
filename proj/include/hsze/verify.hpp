#pragma once

#include <string>
#include <vector>

#include "hsze/closed_form.hpp"
#include "hsze/lattice_series.hpp"
#include "hsze/qzeta.hpp"

namespace hsze {

enum class Suite { core, theorem1, catalog, qzeta, properties, all };
enum class OutputFormat { text, json, csv };

Suite suite_from_string(const std::string& s);
OutputFormat format_from_string(const std::string& s);
std::string to_string(Suite s);
std::string to_string(OutputFormat f);
std::string to_string(SeriesRoute r);

// Knobs for one verification run. make() is the only sanctioned constructor
// path: it rejects tolerances the working precision cannot support
// (tolerance_exp >= 10 and precision_bits >= ceil(3.33 * tolerance_exp) + 64,
// i.e. the requested decimal target plus guard headroom must fit in the
// mantissa).
struct RunConfig {
  int precision_bits = 256;
  int tolerance_exp = 30;  // checks run against 10^-tolerance_exp
  Suite suite = Suite::core;
  OutputFormat output_format = OutputFormat::text;
  long max_m = 100000;
  long max_n = 1000000;
  SeriesRoute route = SeriesRoute::row_accelerated;
  int jobs = 1;

  static RunConfig make(int precision_bits, int tolerance_exp, Suite suite,
                        OutputFormat output_format, long max_m = 100000,
                        long max_n = 1000000,
                        SeriesRoute route = SeriesRoute::row_accelerated,
                        int jobs = 1);

  PrecisionConfig precision() const;
  TruncationPolicy policy(const Constants& C) const;
};

// One identity check. Numeric fields are decimal strings (never binary
// floats); wall_time is seconds and is excluded from canonical renderings.
// pass <=> abs_diff <= tolerance * max(1, |lhs|, |rhs|); exact symbolic
// checks carry tolerance "0" and abs_diff "0" or "1".
struct VerificationRecord {
  std::string identity_id;
  std::string lhs_value;
  std::string rhs_value;
  std::string abs_diff;
  std::string tolerance;
  bool pass = false;
  std::string route;
  long terms_used = 0;
  double wall_time = 0.0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<VerificationRecord> records;  // sorted by identity_id
  long passed = 0;
  long failed = 0;
};

// ids in the given suite, in report order
std::vector<std::string> suite_ids(Suite s);

VerificationReport run_suite(const RunConfig& cfg);

// include_wall_time = false is the canonical form: identical configs must
// produce identical bytes
std::string render_text(const VerificationReport& rep);
std::string render_json(const VerificationReport& rep, bool include_wall_time = true);
std::string render_csv(const VerificationReport& rep, bool include_wall_time = true);
std::string render_report(const VerificationReport& rep, OutputFormat f,
                          bool include_wall_time = true);

}  // namespace hsze
