#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hsze/theta.hpp"
#include "hsze/verify.hpp"

using namespace hsze;

namespace {

// entry grammar: "i" | "rho" | "p/q" | "re,im" with rational components
HPComplex parse_entry(const std::string& s, const Constants& C) {
  if (s == "i") return HPComplex::i_unit(C.wp());
  if (s == "-i") return -HPComplex::i_unit(C.wp());
  if (s == "rho") return C.rho;
  std::size_t comma = s.find(',');
  if (comma == std::string::npos)
    return HPComplex::of(rat_from_string(s), rat(0), C.wp());
  return HPComplex::of(rat_from_string(s.substr(0, comma)),
                       rat_from_string(s.substr(comma + 1)), C.wp());
}

// basis grammar: two entries split on ';', or on ',' when both halves are
// single entries ("1,i" means w1 = 1, w2 = i)
LatticeBasis parse_basis(const std::string& s, const Constants& C) {
  std::size_t semi = s.find(';');
  if (semi != std::string::npos)
    return LatticeBasis::make(parse_entry(s.substr(0, semi), C),
                              parse_entry(s.substr(semi + 1), C));
  std::size_t comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw ConfigError("basis '" + s + "' must have two entries (e.g. \"1,i\" or \"1;1,2\")");
  return LatticeBasis::make(parse_entry(s.substr(0, comma), C),
                            parse_entry(s.substr(comma + 1), C));
}

BasisTag tag_of(const std::string& s) {
  if (s == "1,i") return BasisTag::square;
  if (s == "1,rho") return BasisTag::hexagonal;
  return BasisTag::generic;
}

SeriesRoute parse_route(const std::string& s) {
  if (s == "accel") return SeriesRoute::row_accelerated;
  if (s == "naive") return SeriesRoute::naive_symmetric;
  throw ConfigError("unknown route '" + s + "'; expected accel|naive");
}

struct CommonOpts {
  int prec = 256;
  std::string format = "text";
  std::string route = "accel";
  long max_m = 100000;
  long max_n = 1000000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--prec", o.prec, "working precision in bits")
      ->envname("HSZE_PREC")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "output format: text|json|csv")->capture_default_str();
  cmd->add_option("--route", o.route, "summation route: accel|naive")->capture_default_str();
  cmd->add_option("--max-m", o.max_m, "row truncation cap")->capture_default_str();
  cmd->add_option("--max-n", o.max_n, "column truncation cap")->capture_default_str();
}

std::string value_str(const HPComplex& v) {
  if (v.im.is_zero()) return v.re.str();
  return v.str();
}

// one scalar result with its provenance, in the selected format
void print_scalar(const std::string& format, const HPComplex& value, const HPReal& est_error,
                  const std::string& route, const std::optional<std::string>& closed,
                  long terms = 0) {
  OutputFormat f = format_from_string(format);
  if (f == OutputFormat::text) {
    std::cout << "value = " << value_str(value) << "\n";
    std::cout << "est_error = " << est_error.str(8) << "\n";
    std::cout << "route = " << route << "\n";
    if (terms > 0) std::cout << "terms = " << terms << "\n";
    if (closed) std::cout << "closed_form = " << *closed << "\n";
    return;
  }
  if (f == OutputFormat::json) {
    nlohmann::json j;
    j["value"] = value_str(value);
    j["est_error"] = est_error.str(8);
    j["route"] = route;
    if (terms > 0) j["terms"] = terms;
    if (closed) j["closed_form"] = *closed;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "value,est_error,route,terms,closed_form\n";
  std::cout << value_str(value) << "," << est_error.str(8) << "," << route << "," << terms << ","
            << (closed ? *closed : "") << "\n";
}

struct EvalOpts {
  CommonOpts common;
  long k = 0, r = 1, deriv = 0, s = 0, t = -1;
  std::string z = "1/2", x = "0", y = "0", basis = "1,i", alpha, beta, tau = "i", q;
};

int run_eval(const std::string& kind, const EvalOpts& o) {
  Constants C = make_constants(PrecisionConfig::make(o.common.prec));
  mpfr_prec_t wp = C.wp();
  TruncationPolicy policy =
      TruncationPolicy::make(o.common.max_m, o.common.max_n, C.trunc_threshold(), C.cfg);
  SeriesRoute route = parse_route(o.common.route);

  if (kind == "g") {
    if (o.k < 1) throw ConfigError("eval g: --k must be >= 1");
    TwistParams t =
        TwistParams::make(rat_from_string(o.x), rat_from_string(o.y), rat_from_string(o.z));
    LatticeBasis basis = parse_basis(o.basis, C);
    SeriesResult res = sinh_eisenstein_G(o.k, o.r, t, basis, C, policy, route);
    std::optional<std::string> closed;
    if (tag_of(o.basis) == BasisTag::square && t.origin_xy()) {
      RingExpr g = theorem1_rhs_at(o.k, o.r, t.z) * RingExpr::symbol(RingSymbol::pi, -o.r);
      closed = g.to_string();
    }
    print_scalar(o.common.format, res.value, res.est_error, route_name(res.route), closed,
                 res.terms_used);
    return 0;
  }
  if (kind == "k_coeff") {
    if (o.k < 1) throw ConfigError("eval k_coeff: --k must be >= 1");
    TwistParams t =
        TwistParams::make(rat_from_string(o.x), rat_from_string(o.y), rat_from_string(o.z));
    LatticeBasis basis = parse_basis(o.basis, C);
    HPComplex v = K_coeff(o.k, o.r, t, basis, C);
    std::optional<std::string> closed;
    BasisTag tag = tag_of(o.basis);
    if (tag != BasisTag::generic) {
      ClosedKResult ck = K_closed(o.k, o.r, t, tag, C);
      if (ck.exact) closed = ck.exact->to_string();
    }
    print_scalar(o.common.format, v, C.trunc_threshold(), "contour", closed);
    return 0;
  }
  if (kind == "hurwitz") {
    if (o.k < 0) throw ConfigError("eval hurwitz: --k must be >= 0");
    LatticeBasis basis = parse_basis(o.basis, C);
    Rational x = rat_from_string(o.x), y = rat_from_string(o.y);
    HPComplex v = hurwitz_function(o.k, x, y, basis, C);
    std::optional<std::string> closed;
    BasisTag tag = tag_of(o.basis);
    if (tag != BasisTag::generic && x == 0 && y == 0)
      closed = hurwitz_symbolic(o.k, tag).to_string();
    print_scalar(o.common.format, v, C.trunc_threshold(), "contour", closed);
    return 0;
  }
  if (kind == "eisenstein") {
    if (o.k < 2) throw ConfigError("eval eisenstein: --k must be >= 2");
    LatticeBasis basis = parse_basis(o.basis, C);
    SeriesResult res = eisenstein_G(o.k, basis, C, policy);
    print_scalar(o.common.format, res.value, res.est_error, "iterated_rows", std::nullopt,
                 res.terms_used);
    return 0;
  }
  if (kind == "theta") {
    HPComplex z = parse_entry(o.z, C);
    HPComplex tau = parse_entry(o.tau, C);
    HPComplex v = theta(z, tau, o.deriv, C);
    print_scalar(o.common.format, v, C.trunc_threshold(), "series", std::nullopt);
    return 0;
  }
  if (kind == "phi") {
    if (o.alpha.empty() || o.beta.empty())
      throw ConfigError("eval phi: --alpha and --beta are required");
    HPComplex v = lerch_phi(rat_from_string(o.alpha), parse_entry(o.beta, C), C);
    print_scalar(o.common.format, v, C.trunc_threshold(), "closed_exponential", std::nullopt);
    return 0;
  }
  if (kind == "qzeta") {
    if (o.s < 1) throw ConfigError("eval qzeta: --s must be >= 1");
    long t = o.t >= 0 ? o.t : o.s - 1;
    HPReal q = o.q.empty() ? exp(-ldexp2(C.pi, 1)) : HPReal::of(rat_from_string(o.q), wp);
    HPComplex v = f_q(QParams::make(q, o.s, t), C);
    std::optional<std::string> closed;
    if (o.q.empty() && o.s == 2 * t && t >= 1 && t <= 3) {
      QClosedForm cf = f_q_closed(t, C);
      closed = "((1-q)/2)^" + std::to_string(2 * t) + " * (" + cf.ring.to_string() + ")";
    }
    print_scalar(o.common.format, v, C.trunc_threshold(), "q_series", closed);
    return 0;
  }
  throw ConfigError("unknown eval kind '" + kind +
                    "'; expected g|k_coeff|hurwitz|eisenstein|theta|phi|qzeta");
}

struct TableOpts {
  CommonOpts common;
  long max_k = 4, max_r = 3;
  std::string z = "1/2", basis = "1,i", output = "-";
};

int run_table(const std::string& kind, TableOpts& o) {
  if (o.common.format == "text") o.common.format = "csv";  // tables are machine-readable
  OutputFormat f = format_from_string(o.common.format);
  if (f == OutputFormat::text) throw ConfigError("table: format must be csv or json");
  Constants C = make_constants(PrecisionConfig::make(o.common.prec));
  TruncationPolicy policy =
      TruncationPolicy::make(o.common.max_m, o.common.max_n, C.trunc_threshold(), C.cfg);
  SeriesRoute route = parse_route(o.common.route);
  LatticeBasis basis = parse_basis(o.basis, C);
  Rational z = rat_from_string(o.z);
  if (o.max_k < 1 || o.max_r < 1) throw ConfigError("table: ranges must be >= 1");

  struct Row {
    long k, r;
    std::string re, im, est_error, route;
    long terms;
  };
  std::vector<Row> rows;
  for (long k = 1; k <= o.max_k; ++k) {
    for (long r = 1; r <= o.max_r; ++r) {
      Row row{k, r, "", "", "", "", 0};
      try {
        if (kind == "g") {
          TwistParams t = TwistParams::make(rat(0), rat(0), z);
          SeriesResult res = sinh_eisenstein_G(k, r, t, basis, C, policy, route);
          row.re = res.value.re.str();
          row.im = res.value.im.str();
          row.est_error = res.est_error.str(8);
          row.route = route_name(res.route);
          row.terms = res.terms_used;
        } else if (kind == "k_coeff") {
          TwistParams t = TwistParams::make(rat(0), rat(0), z);
          HPComplex v = K_coeff(k, r, t, basis, C);
          row.re = v.re.str();
          row.im = v.im.str();
          row.est_error = C.trunc_threshold().str(8);
          row.route = "contour";
        } else {
          throw ConfigError("unknown table kind '" + kind + "'; expected g|k_coeff");
        }
      } catch (const CasePreconditionViolated&) {
        row.route = "inadmissible";
      }
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream os;
  if (f == OutputFormat::csv) {
    os << "k,r,z,re,im,est_error,route,terms\n";
    for (const Row& row : rows)
      os << row.k << "," << row.r << "," << rat_to_string(z) << "," << row.re << "," << row.im
         << "," << row.est_error << "," << row.route << "," << row.terms << "\n";
  } else {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["config"] = {{"precision_bits", o.common.prec}, {"z", rat_to_string(z)},
                   {"basis", o.basis},                {"route", o.common.route},
                   {"max_k", o.max_k},                {"max_r", o.max_r}};
    j["rows"] = nlohmann::json::array();
    for (const Row& row : rows)
      j["rows"].push_back({{"k", row.k},
                           {"r", row.r},
                           {"re", row.re},
                           {"im", row.im},
                           {"est_error", row.est_error},
                           {"route", row.route},
                           {"terms", row.terms}});
    os << j.dump(2) << "\n";
  }

  if (o.output == "-") {
    std::cout << os.str();
    return 0;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << os.str()) || !file.flush())
    throw IOFailure("table: cannot write '" + o.output + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic-sine Eisenstein sums, generalized Hurwitz data, and q-zeta values"};
  app.require_subcommand(1);

  auto* vcmd = app.add_subcommand("verify", "run an identity verification suite");
  CommonOpts vcommon;
  std::string suite = "core";
  int tol = 30, jobs = 1;
  add_common(vcmd, vcommon);
  vcmd->add_option("--suite", suite, "core|theorem1|catalog|qzeta|properties|all")
      ->capture_default_str();
  vcmd->add_option("--tol", tol, "tolerance 10^-tol")->capture_default_str();
  vcmd->add_option("--jobs", jobs, "concurrent suite items")->capture_default_str();

  auto* ecmd = app.add_subcommand("eval", "evaluate one expression");
  EvalOpts eopts;
  std::string eval_kind;
  ecmd->add_option("kind", eval_kind, "g|k_coeff|hurwitz|eisenstein|theta|phi|qzeta")
      ->required();
  add_common(ecmd, eopts.common);
  ecmd->add_option("--k", eopts.k, "order");
  ecmd->add_option("--r", eopts.r, "hyperbolic weight")->capture_default_str();
  ecmd->add_option("--z", eopts.z, "twist z (rational; complex for theta)")
      ->capture_default_str();
  ecmd->add_option("--x", eopts.x, "twist x")->capture_default_str();
  ecmd->add_option("--y", eopts.y, "twist y")->capture_default_str();
  ecmd->add_option("--basis", eopts.basis, "period basis, e.g. \"1,i\" or \"1;1,2\"")
      ->capture_default_str();
  ecmd->add_option("--tau", eopts.tau, "theta modulus")->capture_default_str();
  ecmd->add_option("--deriv", eopts.deriv, "theta derivative order")->capture_default_str();
  ecmd->add_option("--alpha", eopts.alpha, "phi exponent parameter (rational)");
  ecmd->add_option("--beta", eopts.beta, "phi shift parameter (entry)");
  ecmd->add_option("--s", eopts.s, "qzeta exponent s");
  ecmd->add_option("--t", eopts.t, "qzeta exponent t (default s-1)");
  ecmd->add_option("--q", eopts.q, "qzeta deformation parameter (rational; default e^{-2 pi})");

  auto* tcmd = app.add_subcommand("table", "tabulate values over a (k, r) grid");
  TableOpts topts;
  std::string table_kind = "g";
  tcmd->add_option("kind", table_kind, "g|k_coeff")->capture_default_str();
  add_common(tcmd, topts.common);
  tcmd->add_option("--max-k", topts.max_k, "k range 1..max-k")->capture_default_str();
  tcmd->add_option("--max-r", topts.max_r, "r range 1..max-r")->capture_default_str();
  tcmd->add_option("--z", topts.z, "twist z")->capture_default_str();
  tcmd->add_option("--basis", topts.basis, "period basis")->capture_default_str();
  tcmd->add_option("--output,-o", topts.output, "output path ('-' for stdout)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (vcmd->parsed()) {
      RunConfig cfg = RunConfig::make(vcommon.prec, tol, suite_from_string(suite),
                                      format_from_string(vcommon.format), vcommon.max_m,
                                      vcommon.max_n, parse_route(vcommon.route), jobs);
      VerificationReport rep = run_suite(cfg);
      std::cout << render_report(rep, cfg.output_format, true);
      return rep.failed == 0 ? 0 : 1;
    }
    if (ecmd->parsed()) return run_eval(eval_kind, eopts);
    if (tcmd->parsed()) return run_table(table_kind, topts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
