#include "ezv/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "ezv/divisor_series.hpp"
#include "ezv/elliptic_gamma.hpp"
#include "ezv/elliptic_zeta.hpp"
#include "ezv/errors.hpp"
#include "ezv/identity_harness.hpp"
#include "ezv/numerics.hpp"
#include "output.hpp"

namespace ezv::cli {

namespace {

constexpr cplx kDefaultTau{0.2, 1.0};
constexpr cplx kDefaultSigma{0.1, 0.8};
constexpr cplx kDefaultZ{0.3, 0.2};
constexpr cplx kLimitTau{0.0, 40.0};
constexpr const char* kDefaultSigmas = "0.05,0.02,0.01";
constexpr const char* kDefaultCommutator = "e12 e23 e12^-1 e23^-1";

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Reads options into typed values and records the normalized form of each
// value it reads in the request's parameter list.
class Reader {
 public:
  Reader(const RawOptions& raw, CommandRequest& request) : raw_(raw), request_(request) {}

  int integer(const std::optional<std::string>& text, const char* name,
              std::optional<int> fallback = std::nullopt) {
    if (!text) {
      if (!fallback) throw UsageError(std::string("missing required option --") + name);
      record(name, std::to_string(*fallback));
      return *fallback;
    }
    const char* begin = text->c_str();
    char* end = nullptr;
    errno = 0;
    const long value = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0' || errno == ERANGE || value < -1000000000L ||
        value > 1000000000L) {
      throw UsageError(std::string("--") + name + ": not an integer: '" + *text + "'");
    }
    record(name, std::to_string(value));
    return static_cast<int>(value);
  }

  cplx complex(const std::optional<std::string>& text, const char* name,
               std::optional<cplx> fallback = std::nullopt) {
    if (!text && !fallback) {
      throw UsageError(std::string("missing required option --") + name);
    }
    cplx value;
    try {
      value = text ? parse_complex(*text) : *fallback;
    } catch (const UsageError& e) {
      throw UsageError(std::string("--") + name + ": " + e.what());
    }
    record(name, format_complex(value));
    return value;
  }

  std::string text(const std::optional<std::string>& text, const char* name,
                   const std::string& fallback) {
    std::string value = text.value_or(fallback);
    record(name, value);
    return value;
  }

  std::vector<cplx> sigma_list() {
    const std::string list = raw_.sigmas.value_or(kDefaultSigmas);
    std::vector<cplx> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
      // A plain number is the imaginary part; "a+bi" literals are also taken.
      if (item.find_first_of("ij") != std::string::npos) {
        out.push_back(parse_complex(item));
      } else {
        out.emplace_back(0.0, parse_complex(item).real());
      }
    }
    if (out.empty()) throw UsageError("--sigmas: empty list");
    record("sigmas", list);
    return out;
  }

  const RawOptions& raw() const { return raw_; }

 private:
  void record(const char* name, std::string value) {
    request_.parameters.emplace_back(name, std::move(value));
  }

  const RawOptions& raw_;
  CommandRequest& request_;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Envelope value_envelope(const ApproxValue& v, Clock::time_point start) {
  Envelope e;
  e.value = v.value;
  e.err_bound = v.err_bound;
  e.terms_used = v.terms_used;
  e.wall_time_ms = elapsed_ms(start);
  return e;
}

Envelope report_envelope(const ResidualReport& report, Clock::time_point start) {
  Envelope e;
  e.identity = report.identity_name;
  e.residual = report.residual;
  e.tolerance = report.tolerance;
  e.pass = report.pass;
  e.wall_time_ms = elapsed_ms(start);
  return e;
}

// Prepared commands: option parsing is finished, calling one does the work.
using Job = std::function<std::vector<Envelope>()>;
using TableJob = std::function<Table()>;

WedgePair read_pair(Reader& r) {
  const cplx tau = r.complex(r.raw().tau, "tau", kDefaultTau);
  const cplx sigma = r.complex(r.raw().sigma, "sigma", kDefaultSigma);
  return WedgePair(tau, sigma);
}

GammaArg read_gamma_arg(Reader& r) {
  const cplx z = r.complex(r.raw().z, "z", kDefaultZ);
  const cplx tau = r.complex(r.raw().tau, "tau", kDefaultTau);
  const cplx sigma = r.complex(r.raw().sigma, "sigma", kDefaultSigma);
  return {z, UpperHalfPoint(tau), UpperHalfPoint(sigma)};
}

Job prepare_eval(const std::string& target, Reader& r, const PrecisionPolicy& prec) {
  const RawOptions& o = r.raw();
  auto single = [](std::function<ApproxValue()> fn) -> Job {
    return [fn] {
      const auto start = Clock::now();
      const ApproxValue v = fn();
      return std::vector<Envelope>{value_envelope(v, start)};
    };
  };
  if (target == "zk") {
    const int k = r.integer(o.k, "k");
    const cplx tau = r.complex(o.tau, "tau", kDefaultTau);
    const cplx sigma = r.complex(o.sigma, "sigma", kDefaultSigma);
    return single([=] {
      if (tau.imag() > 0.0 && sigma.imag() > 0.0) return z_k(k, WedgePair(tau, sigma), prec);
      return z_k_extended(k, ExtendedPair(tau, sigma), prec);
    });
  }
  if (target == "zk_lattice") {
    const int k = r.integer(o.k, "k");
    const WedgePair pair = read_pair(r);
    return single([=] { return z_k_lattice(k, pair, prec); });
  }
  if (target == "dk") {
    const int k = r.integer(o.k, "k");
    cplx q;
    if (o.q) {
      q = r.complex(o.q, "q");
    } else {
      q = UpperHalfPoint(r.complex(o.tau, "tau", kDefaultTau)).nome();
    }
    const std::string strategy = r.text(o.strategy, "strategy", "lambert");
    if (strategy != "lambert" && strategy != "sigma") {
      throw UsageError("--strategy must be lambert or sigma");
    }
    const DkStrategy s =
        strategy == "lambert" ? DkStrategy::lambert : DkStrategy::sigma_coefficients;
    return single([=] { return d_k(k, NomePoint(q), prec, s); });
  }
  if (target == "theta0") {
    const cplx z = r.complex(o.z, "z", kDefaultZ);
    const UpperHalfPoint tau(r.complex(o.tau, "tau", kDefaultTau));
    return single([=] { return theta0(z, tau, prec); });
  }
  if (target == "ellgamma" || target == "loggamma_sum") {
    const GammaArg arg = read_gamma_arg(r);
    if (target == "ellgamma") return single([=] { return ell_gamma(arg, prec); });
    return single([=] { return log_ell_gamma_sum(arg, prec); });
  }
  if (target == "eisenstein" || target == "gk") {
    const int k = r.integer(o.k, "k");
    const UpperHalfPoint tau(r.complex(o.tau, "tau", kDefaultTau));
    if (target == "eisenstein") return single([=] { return eisenstein_lattice(k, tau, prec); });
    return single([=] { return gk_qexp(k, tau, prec); });
  }
  if (target == "zeta") {
    const int k = r.integer(o.k, "k");
    return single([=] { return zeta_int(k, prec); });
  }
  throw UsageError("eval: unknown target '" + target + "'");
}

std::vector<int> k_values(Reader& r, int lo, int hi) {
  if (r.raw().k) return {r.integer(r.raw().k, "k")};
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

Job single_report(std::function<ResidualReport()> fn) {
  return [fn] {
    const auto start = Clock::now();
    const ResidualReport report = fn();
    return std::vector<Envelope>{report_envelope(report, start)};
  };
}

Job prepare_verify(const std::string& target, Reader& r, const PrecisionPolicy& prec) {
  const RawOptions& o = r.raw();
  if (target == "three-term-add" || target == "three-term-mod") {
    const bool additive = target == "three-term-add";
    const bool explicit_k = o.k.has_value();
    const std::vector<int> ks = k_values(r, 1, 8);
    const WedgePair pair = read_pair(r);
    const AnomalyMode mode = o.no_anomaly ? AnomalyMode::omit : AnomalyMode::include;
    if (!additive) r.text(std::nullopt, "anomaly", o.no_anomaly ? "omit" : "include");
    return [=] {
      std::vector<Envelope> out;
      for (const int k : ks) {
        const auto start = Clock::now();
        const ResidualReport report = additive
                                          ? check_three_term_additive(k, pair, prec)
                                          : check_three_term_modular(k, pair, prec, mode);
        Envelope e = report_envelope(report, start);
        if (!explicit_k) e.row_parameters = {{"k", std::to_string(k)}};
        out.push_back(std::move(e));
      }
      return out;
    };
  }
  if (target == "func-eq" || target == "thm2-first") {
    const GammaArg arg = read_gamma_arg(r);
    if (target == "func-eq") {
      return single_report([=] { return check_functional_equation(arg, prec); });
    }
    return single_report([=] { return check_thm2_first(arg, prec); });
  }
  if (target == "prop1") {
    const int k = r.integer(o.k, "k", 4);
    const WedgePair pair = read_pair(r);
    return single_report([=] { return check_prop1_forward(k, pair, prec); });
  }
  if (target == "logEG") {
    const int k = r.integer(o.k, "k", 6);
    const WedgePair pair = read_pair(r);
    return single_report([=] { return check_log_eg(pair, k, prec); });
  }
  if (target == "thm2-Q") {
    const WedgePair pair = read_pair(r);
    const int samples = r.integer(o.samples, "samples", 16);
    return single_report([=] { return check_thm2_q(pair, samples, prec); });
  }
  if (target == "lipschitz") {
    const int k = r.integer(o.k, "k", 2);
    const cplx rho = r.complex(o.rho, "rho", cplx(0.0, 1.0));
    return single_report([=] { return check_lipschitz(k, rho, prec); });
  }
  if (target == "cocycle") {
    const int k = r.integer(o.k, "k", 4);
    const GeneratorWord first = parse_word(r.text(o.word, "word", "e13"));
    const GeneratorWord second = parse_word(r.text(o.word2, "word2", kDefaultCommutator));
    const cplx x1 = r.complex(o.x1, "x1", cplx(0.3, 1.1));
    const cplx x2 = r.complex(o.x2, "x2", cplx(-0.2, 0.7));
    const cplx x3 = r.complex(o.x3, "x3", cplx(1.0, 0.1));
    const HomogeneousTriple x(x1, x2, x3);
    return single_report([=] { return check_cocycle(k, first, second, x, prec); });
  }
  throw UsageError("verify: unknown target '" + target + "'");
}

Job prepare_limits(const std::string& target, Reader& r, const PrecisionPolicy& prec) {
  const RawOptions& o = r.raw();
  if (target != "zeta-limit" && target != "gamma-limit" && target != "scl-limit") {
    throw UsageError("limits: unknown target '" + target + "'");
  }
  const int k = target == "zeta-limit" ? r.integer(o.k, "k", 2) : 0;
  const cplx z = target == "scl-limit" ? r.complex(o.z, "z", cplx(2.0, 0.0)) : cplx{};
  std::string source = "zeta";
  if (target == "gamma-limit") {
    source = r.text(o.source, "source", "zeta");
    if (source != "zeta" && source != "d1") throw UsageError("--source must be zeta or d1");
  }
  const UpperHalfPoint tau(r.complex(o.tau, "tau", kLimitTau));
  const std::vector<cplx> sigmas = r.sigma_list();

  return [=] {
    std::vector<Envelope> out;
    cplx target_value;
    std::vector<cplx> values;
    std::vector<double> errors;
    const auto start = Clock::now();
    if (target == "zeta-limit") {
      target_value = zeta_int(k, prec).value;
      for (const LimitRow& row : limit_zeta_probe(k, sigmas, tau, prec)) {
        values.push_back(row.value);
        errors.push_back(row.error);
      }
    } else if (target == "gamma-limit") {
      target_value = euler_gamma_const();
      const auto src = source == "zeta" ? GammaLimitSource::elliptic_zeta
                                        : GammaLimitSource::divisor_d1;
      for (const LimitRow& row : limit_euler_gamma_probe(sigmas, tau, prec, src)) {
        values.push_back(row.value);
        errors.push_back(row.error);
      }
    } else {
      target_value = euler_gamma_fn(z - 1.0, prec).value;
      values = scl_limit_probe(z, sigmas, tau, prec);
      for (const cplx v : values) errors.push_back(std::abs(v - target_value));
    }
    const double per_row = elapsed_ms(start) / static_cast<double>(sigmas.size());
    for (std::size_t n = 0; n < sigmas.size(); ++n) {
      Envelope e;
      e.row_parameters = {{"sigma", format_complex(sigmas[n])},
                          {"limit", format_complex(target_value)}};
      e.value = values[n];
      e.residual = errors[n];
      e.wall_time_ms = per_row;
      out.push_back(std::move(e));
    }
    return out;
  };
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw UsageError("--grid must look like 3x3");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a_text = text.substr(0, x), b_text = text.substr(x + 1);
    const int a = std::stoi(a_text, &used_a);
    const int b = std::stoi(b_text, &used_b);
    if (used_a != a_text.size() || used_b != b_text.size() || a < 1 || b < 1 ||
        a > 1000 || b > 1000) {
      throw UsageError("");
    }
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("--grid must look like 3x3 with sizes in 1..1000");
  }
}

TableJob prepare_table(const std::string& target, Reader& r, const PrecisionPolicy& prec) {
  const RawOptions& o = r.raw();
  if (target == "divisors") {
    const int kmax = r.integer(o.kmax, "kmax", 4);
    const int nmax = r.integer(o.nmax, "nmax", 10);
    if (kmax < 1 || nmax < 1) throw DomainError("table divisors: kmax and nmax must be >= 1");
    return [=] {
      Table t{{"n", "k", "sigma_k_minus_1"}, {}};
      for (int n = 1; n <= nmax; ++n) {
        for (int k = 1; k <= kmax; ++k) {
          t.rows.push_back({std::to_string(n), std::to_string(k),
                            std::to_string(sigma_power(n, k - 1))});
        }
      }
      return t;
    };
  }
  if (target == "dk-coeffs") {
    const int k = r.integer(o.k, "k");
    const int nmax = r.integer(o.nmax, "nmax", 10);
    return [=] {
      Table t{{"n", "re", "im"}, {}};
      const std::vector<cplx> coeffs = dk_coefficients(k, nmax);
      for (std::size_t n = 0; n < coeffs.size(); ++n) {
        t.rows.push_back({std::to_string(n + 1), format_number(coeffs[n].real()),
                          format_number(coeffs[n].imag())});
      }
      return t;
    };
  }
  if (target == "zk-grid") {
    const int k = r.integer(o.k, "k");
    const auto [rows, cols] = parse_grid(r.text(o.grid, "grid", "3x3"));
    const cplx tau = r.complex(o.tau, "tau", kDefaultTau);
    const cplx sigma = r.complex(o.sigma, "sigma", kDefaultSigma);
    const cplx step = r.complex(o.step, "step", cplx(0.1, 0.0));
    return [=] {
      Table t{{"i", "j", "tau_re", "tau_im", "sigma_re", "sigma_im", "value_re", "value_im",
               "err_bound", "terms_used"},
              {}};
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
          const cplx ti = tau + static_cast<double>(i) * step;
          const cplx sj = sigma + static_cast<double>(j) * step;
          const ApproxValue v = z_k(k, WedgePair(ti, sj), prec);
          t.rows.push_back({std::to_string(i), std::to_string(j), format_number(ti.real()),
                            format_number(ti.imag()), format_number(sj.real()),
                            format_number(sj.imag()), format_number(v.value.real()),
                            format_number(v.value.imag()), format_number(v.err_bound),
                            std::to_string(v.terms_used)});
        }
      }
      return t;
    };
  }
  throw UsageError("table: unknown target '" + target + "'");
}

double parse_positive_real(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(value)) {
    throw UsageError(what + ": not a number: '" + text + "'");
  }
  return value;
}

PrecisionPolicy effective_precision(const RawOptions& o) {
  PrecisionPolicy p = default_precision();
  if (o.epsilon) p.epsilon = parse_positive_real(*o.epsilon, "--epsilon");
  if (o.max_terms) {
    const double v = parse_positive_real(*o.max_terms, "--max-terms");
    if (v < 0 || v != std::floor(v) || v > 1e15) {
      throw UsageError("--max-terms: expected a non-negative integer");
    }
    p.max_terms = static_cast<std::size_t>(v);
  }
  if (o.radius) {
    const double v = parse_positive_real(*o.radius, "--radius");
    if (v != std::floor(v) || std::abs(v) > 1e7) {
      throw UsageError("--radius: expected an integer");
    }
    p.lattice_radius = static_cast<int>(v);
  }
  return p;
}

ErrorInfo describe(const std::exception& e, ExitCode& code) {
  if (const auto* pole = dynamic_cast<const PoleError*>(&e)) {
    code = ExitCode::pole;
    return {"pole", e.what(), std::make_pair(pole->j(), pole->l()), std::nullopt};
  }
  if (const auto* trunc = dynamic_cast<const TruncationError*>(&e)) {
    code = ExitCode::truncation;
    return {"truncation", e.what(), std::nullopt, trunc->partial()};
  }
  if (dynamic_cast<const BranchError*>(&e)) {
    code = ExitCode::domain;
    return {"branch", e.what(), std::nullopt, std::nullopt};
  }
  if (dynamic_cast<const IoError*>(&e)) {
    code = ExitCode::io;
    return {"io", e.what(), std::nullopt, std::nullopt};
  }
  code = ExitCode::domain;
  return {"domain", e.what(), std::nullopt, std::nullopt};
}

void add_common_options(CLI::App* sub, RawOptions& o) {
  sub->add_option("--k", o.k, "Integer order k");
  sub->add_option("--tau", o.tau, "Complex tau as re,im or a+bi");
  sub->add_option("--sigma", o.sigma, "Complex sigma as re,im or a+bi");
  sub->add_option("--z", o.z, "Complex argument z");
  sub->add_option("--q", o.q, "Nome q with |q| < 1 (dk)");
  sub->add_option("--rho", o.rho, "Point rho in the upper half-plane (lipschitz)");
  sub->add_option("--epsilon", o.epsilon, "Target truncation error");
  sub->add_option("--max-terms", o.max_terms, "Cap on terms per series");
  sub->add_option("--radius", o.radius, "Lattice shell cutoff");
  sub->add_option("--sigmas", o.sigmas, "Imaginary parts of the sigma sequence");
  sub->add_option("--kmax", o.kmax, "Largest k (table divisors)");
  sub->add_option("--nmax", o.nmax, "Largest n (tables)");
  sub->add_option("--grid", o.grid, "Grid shape AxB (table zk-grid)");
  sub->add_option("--step", o.step, "Complex grid step (table zk-grid)");
  sub->add_option("--word", o.word, "Generator word, e.g. \"e12 e23^-1\"");
  sub->add_option("--word2", o.word2, "Second generator word (cocycle)");
  sub->add_option("--x1", o.x1, "Homogeneous coordinate x1 (cocycle)");
  sub->add_option("--x2", o.x2, "Homogeneous coordinate x2 (cocycle)");
  sub->add_option("--x3", o.x3, "Homogeneous coordinate x3 (cocycle)");
  sub->add_option("--samples", o.samples, "Sample count (thm2-Q)");
  sub->add_option("--strategy", o.strategy, "lambert or sigma (dk)");
  sub->add_option("--source", o.source, "zeta or d1 (gamma-limit)");
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Write output to this path");
  sub->add_flag("--no-anomaly", o.no_anomaly, "Drop the anomaly term (three-term-mod)");
}

void emit_envelopes(std::ostream& out, const CommandRequest& request,
                    const std::vector<Envelope>& envelopes) {
  if (request.format == OutputFormat::csv) {
    write_csv_row(out, envelope_csv_header());
    for (const Envelope& e : envelopes) write_csv_row(out, envelope_csv_row(request, e));
  } else {
    for (const Envelope& e : envelopes) out << dump_json(envelope_json(request, e)) << '\n';
  }
}

}  // namespace

cplx parse_complex(const std::string& raw) {
  std::string text;
  for (const char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  auto real_of = [&](const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (s.empty() || end == begin || *end != '\0' || !std::isfinite(v)) {
      throw UsageError("malformed complex literal '" + raw + "'");
    }
    return v;
  };
  if (text.empty()) throw UsageError("empty complex literal");
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    return {real_of(text.substr(0, comma)), real_of(text.substr(comma + 1))};
  }
  const char last = text.back();
  if (last != 'i' && last != 'j') return {real_of(text), 0.0};
  text.pop_back();
  // Split at the last sign that is not the leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t n = text.size(); n-- > 1;) {
    if ((text[n] == '+' || text[n] == '-') && text[n - 1] != 'e' && text[n - 1] != 'E') {
      split = n;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : text.substr(0, split);
  std::string im_text = split == std::string::npos ? text : text.substr(split);
  if (im_text.empty() || im_text == "+" || im_text == "-") im_text += "1";
  return {re_text.empty() ? 0.0 : real_of(re_text), real_of(im_text)};
}

PrecisionPolicy default_precision() {
  PrecisionPolicy p;
  if (const char* env = std::getenv("EZV_PRECISION"); env && *env) {
    p.epsilon = parse_positive_real(env, "EZV_PRECISION");
  }
  return p;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic zeta values, elliptic gamma function and identity checks", "ezv"};
  app.require_subcommand(1);
  RawOptions raw;
  std::string target;
  const std::map<std::string, std::string> help{
      {"eval", "Evaluate one quantity: zk zk_lattice dk theta0 ellgamma loggamma_sum "
               "eisenstein zeta gk"},
      {"verify", "Check an identity: three-term-add three-term-mod func-eq prop1 logEG "
                 "thm2-first thm2-Q lipschitz cocycle"},
      {"limits", "Limit tables along a sigma sequence: zeta-limit gamma-limit scl-limit"},
      {"table", "CSV tables: divisors dk-coeffs zk-grid"}};
  for (const auto& [name, description] : help) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("target", target, "Target name")->required();
    add_common_options(sub, raw);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitCode::usage);
  }

  CommandRequest request;
  request.subcommand = app.get_subcommands().front()->get_name();
  request.target = target;
  const bool is_table = request.subcommand == "table";
  const std::string format = raw.format.value_or(is_table ? "csv" : "json");
  request.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  request.out_path = raw.out;

  Job job;
  TableJob table_job;
  ExitCode code = ExitCode::ok;
  std::vector<Envelope> envelopes;
  try {
    request.precision = effective_precision(raw);
    Reader reader(raw, request);
    if (request.out_path) reader.text(raw.out, "out", "");
    // Everything that can be a usage error is resolved here, before any
    // computation starts.
    if (request.subcommand == "eval") {
      job = prepare_eval(target, reader, request.precision);
    } else if (request.subcommand == "verify") {
      job = prepare_verify(target, reader, request.precision);
    } else if (request.subcommand == "limits") {
      job = prepare_limits(target, reader, request.precision);
    } else {
      if (request.format == OutputFormat::json) {
        throw UsageError("table output is CSV only; pass --format csv or omit --format");
      }
      table_job = prepare_table(target, reader, request.precision);
    }
  } catch (const UsageError& e) {
    err << "ezv: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const std::exception& e) {
    // Domain errors raised while building arguments (e.g. Im tau <= 0).
    Envelope failed;
    failed.error = describe(e, code);
    envelopes.push_back(std::move(failed));
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (request.out_path) {
    file.open(*request.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      Envelope failed;
      failed.error = ErrorInfo{"io", "cannot open output file '" + *request.out_path + "'",
                               std::nullopt, std::nullopt};
      emit_envelopes(out, request, {failed});
      return static_cast<int>(ExitCode::io);
    }
    sink = &file;
  }

  if (envelopes.empty()) {
    try {
      if (table_job) {
        const Table table = table_job();
        write_csv_row(*sink, table.header);
        for (const auto& row : table.rows) write_csv_row(*sink, row);
      } else {
        envelopes = job();
      }
    } catch (const std::exception& e) {
      envelopes.clear();
      Envelope failed;
      failed.error = describe(e, code);
      envelopes.push_back(std::move(failed));
    }
  }

  // A failed table is reported as an envelope in the table's CSV format.
  if (!envelopes.empty()) emit_envelopes(*sink, request, envelopes);
  if (request.subcommand == "verify" && code == ExitCode::ok) {
    for (const Envelope& e : envelopes) {
      if (e.pass && !*e.pass) code = ExitCode::verify_failed;
    }
  }
  sink->flush();
  if (request.out_path && !file) {
    err << "ezv: write to '" << *request.out_path << "' failed\n";
    return static_cast<int>(ExitCode::io);
  }
  return static_cast<int>(code);
}

}  // namespace ezv::cli
