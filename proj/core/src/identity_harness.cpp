#include "ezv/identity_harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <tuple>

#include "ezv/errors.hpp"

namespace ezv {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

Params pair_params(int k, const WedgePair& pair) {
  return {{"k", std::to_string(k)},
          {"tau", format_complex(pair.tau())},
          {"sigma", format_complex(pair.sigma())}};
}

Params gamma_params(const GammaArg& arg) {
  return {{"z", format_complex(arg.z)},
          {"tau", format_complex(arg.tau.tau())},
          {"sigma", format_complex(arg.sigma.tau())}};
}

void require_wedge(const WedgePair& pair, const char* who) {
  if (!pair.in_wedge()) {
    throw DomainError(std::string(who) + ": requires tau, sigma and sigma/tau in H");
  }
}

cplx zk_ext(int k, cplx tau, cplx sigma, const PrecisionPolicy& prec) {
  return z_k_extended(k, ExtendedPair(tau, sigma), prec).value;
}

cplx gk_at(int k, cplx tau, const PrecisionPolicy& prec) {
  return gk_qexp(k, UpperHalfPoint(tau), prec).value;
}

// Generator value phi_e(y) of the positive letter e = e_ij; the exponent
// of `letter` is only used to name it in errors.
cplx generator_value(int k, const GeneratorLetter& letter, const std::array<cplx, 3>& y,
                     std::size_t index, const PrecisionPolicy& prec) {
  if (letter.j != 2) return {0.0, 0.0};
  const bool e12 = letter.i == 1;
  if (!e12 && letter.i != 3) return {0.0, 0.0};
  const cplx a = e12 ? y[0] - y[1] : y[1] - y[2];
  const cplx b = e12 ? y[0] : y[2];
  const cplx c = e12 ? y[2] : y[0];
  if (!HomogeneousTriple::admissible(a, b, c)) {
    throw DomainError("cocycle_eval: letter " + std::to_string(index) + " (e" +
                      std::to_string(letter.i) + std::to_string(letter.j) +
                      (letter.exponent < 0 ? "^-1" : "") +
                      ") leaves the domain of the homogeneous zeta value");
  }
  return z_k_homogeneous(k, HomogeneousTriple(a, b, c), prec).value;
}

}  // namespace

std::string format_complex(cplx z) {
  return format_real(z.real()) + "," + format_real(z.imag());
}

ResidualReport make_report(std::string name, Params parameters, double residual,
                           double tolerance) {
  ResidualReport report;
  report.identity_name = std::move(name);
  report.parameters = std::move(parameters);
  report.residual = residual;
  report.tolerance = tolerance;
  report.pass = residual <= tolerance;
  return report;
}

void sort_reports(std::vector<ResidualReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const ResidualReport& a, const ResidualReport& b) {
                     return std::tie(a.identity_name, a.parameters) <
                            std::tie(b.identity_name, b.parameters);
                   });
}

ResidualReport check_three_term_additive(int k, const WedgePair& pair,
                                         const PrecisionPolicy& prec) {
  if (k < 1 || k > 8) throw DomainError("check_three_term_additive: k must be in 1..8");
  if (!pair.in_H_pair()) {
    throw DomainError("check_three_term_additive: requires Im tau > 0 and Im sigma > 0");
  }
  const cplx tau = pair.tau();
  const cplx sigma = pair.sigma();
  const cplx lhs = z_k(k, pair, prec).value;
  const cplx a = z_k(k, WedgePair(tau, tau + sigma), prec).value;
  const cplx b = z_k(k, WedgePair(tau + sigma, sigma), prec).value;
  return make_report("three_term_additive", pair_params(k, pair), std::abs(lhs - a - b),
                     tolerance::additive);
}

ResidualReport check_three_term_modular(int k, const WedgePair& pair,
                                        const PrecisionPolicy& prec, AnomalyMode anomaly) {
  if (k < 1 || k > 8) throw DomainError("check_three_term_modular: k must be in 1..8");
  require_wedge(pair, "check_three_term_modular");
  const cplx tau = pair.tau();
  const cplx sigma = pair.sigma();
  cplx residual = z_k(k, pair, prec).value;
  residual -= std::pow(tau, -k) * zk_ext(k, -1.0 / tau, sigma / tau, prec);
  residual -= std::pow(-sigma, -k) * zk_ext(k, -tau / sigma, -1.0 / sigma, prec);
  if (k <= 3 && anomaly == AnomalyMode::include) {
    residual -= cplx(0.0, kPi) * anomaly_a(k, tau, sigma);
  }
  Params params = pair_params(k, pair);
  params.emplace_back("anomaly", anomaly == AnomalyMode::include ? "include" : "omit");
  return make_report("three_term_modular", std::move(params), std::abs(residual),
                     tolerance::modular);
}

ResidualReport check_prop1_forward(int k, const WedgePair& pair,
                                   const PrecisionPolicy& prec) {
  if (k < 4 || k % 2 != 0) {
    throw DomainError("check_prop1_forward: k must be even and >= 4");
  }
  require_wedge(pair, "check_prop1_forward");
  // Z(t, s) = G_k(s) - G_k(t), the same orientation as D_k(r) - D_k(q).
  auto z = [&](cplx t, cplx s) { return gk_at(k, s, prec) - gk_at(k, t, prec); };
  const cplx tau = pair.tau();
  const cplx sigma = pair.sigma();
  const cplx base = z(tau, sigma);
  const cplx additive = base - z(tau, tau + sigma) - z(tau + sigma, sigma);
  const cplx modular = base - std::pow(tau, -k) * z(-1.0 / tau, sigma / tau) -
                       std::pow(sigma, -k) * z(-tau / sigma, -1.0 / sigma);
  const double residual = std::max(std::abs(additive), std::abs(modular));
  return make_report("eisenstein_difference", pair_params(k, pair), residual,
                     tolerance::additive);
}

ResidualReport check_functional_equation(const GammaArg& arg, const PrecisionPolicy& prec) {
  const GammaArg shifted{arg.z + arg.sigma.tau(), arg.tau, arg.sigma};
  const cplx lhs = ell_gamma(shifted, prec).value;
  const cplx rhs = theta0(arg.z, arg.tau, prec).value * ell_gamma(arg, prec).value;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  const double residual = scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
  return make_report("functional_equation", gamma_params(arg), residual,
                     tolerance::functional_equation);
}

ResidualReport check_thm2_first(const GammaArg& arg, const PrecisionPolicy& prec) {
  return make_report("product_three_term", gamma_params(arg),
                     three_term_product_residual(arg, prec), tolerance::product_three_term);
}

ResidualReport check_thm2_q(const WedgePair& pair, int sample_count,
                            const PrecisionPolicy& prec) {
  const CubicFit fit = fit_Q_cubic(pair, sample_count, prec);
  Params params = pair_params(3, pair);
  params.front().first = "degree";
  params.emplace_back("samples", std::to_string(sample_count));
  return make_report("cubic_fit", std::move(params), fit.fit_residual,
                     tolerance::cubic_fit);
}

ResidualReport check_log_eg(const WedgePair& pair, int k_max, const PrecisionPolicy& prec) {
  const TaylorSlice slice = taylor_z_extraction(pair, k_max, prec);
  double worst = 0.0;
  for (int j = 1; j <= k_max; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const cplx expected = sign * z_k(j, pair, prec).value / static_cast<double>(j);
    worst = std::max(worst, std::abs(slice.coefficients[j - 1] - expected));
  }
  Params params = pair_params(k_max, pair);
  params.front().first = "k_max";
  params.emplace_back("radius", format_real(slice.radius));
  return make_report("taylor_link", std::move(params), worst, tolerance::taylor_link);
}

ResidualReport check_lipschitz(int k, cplx rho, const PrecisionPolicy& prec) {
  const LipschitzSides sides = lipschitz_both_sides(k, rho, prec);
  return make_report("lipschitz",
                     {{"k", std::to_string(k)}, {"rho", format_complex(rho)}},
                     std::abs(sides.left.value - sides.right.value), tolerance::lipschitz);
}

std::vector<LimitRow> limit_zeta_probe(int k, std::span<const cplx> sigmas,
                                       const UpperHalfPoint& tau_large,
                                       const PrecisionPolicy& prec) {
  if (k < 2 || k > 6) throw DomainError("limit_zeta_probe: k must be in 2..6");
  const cplx target = zeta_int(k, prec).value;
  std::vector<LimitRow> rows;
  rows.reserve(sigmas.size());
  for (const cplx s : sigmas) {
    if (s.imag() <= 0.0) throw DomainError("limit_zeta_probe: sigma must have Im > 0");
    const cplx z = z_k(k, WedgePair(tau_large.tau(), s), prec).value;
    const cplx value = std::pow(s, k) * z;
    rows.push_back({s, value, std::abs(value - target)});
  }
  return rows;
}

std::vector<LimitRow> limit_euler_gamma_probe(std::span<const cplx> sigmas,
                                              const UpperHalfPoint& tau_large,
                                              const PrecisionPolicy& prec,
                                              GammaLimitSource source) {
  const double gamma = euler_gamma_const();
  std::vector<LimitRow> rows;
  rows.reserve(sigmas.size());
  for (const cplx s : sigmas) {
    if (s.imag() <= 0.0) {
      throw DomainError("limit_euler_gamma_probe: sigma must have Im > 0");
    }
    const cplx series =
        source == GammaLimitSource::elliptic_zeta
            ? z_k(1, WedgePair(tau_large.tau(), s), prec).value
            : d_k(1, NomePoint::from_tau(UpperHalfPoint(s)), prec).value;
    const cplx value = s * series + std::log(cplx(0.0, -2.0 * kPi) * s);
    rows.push_back({s, value, std::abs(value - gamma)});
  }
  return rows;
}

cplx cocycle_eval(int k, const GeneratorWord& word, const HomogeneousTriple& x,
                  const PrecisionPolicy& prec) {
  if (k < 4) throw DomainError("cocycle_eval: k must be >= 4");
  validate_word(word);
  std::array<cplx, 3> y{x.x1(), x.x2(), x.x3()};
  cplx total{0.0, 0.0};
  for (std::size_t n = 0; n < word.size(); ++n) {
    const GeneratorLetter& letter = word[n];
    if (letter.exponent > 0) {
      total += generator_value(k, letter, y, n, prec);
    } else {
      const auto ey = IntegerMatrix3::elementary(letter.i, letter.j, 1).apply(y);
      total -= generator_value(k, letter, ey, n, prec);
    }
    y = IntegerMatrix3::elementary(letter.i, letter.j, -letter.exponent).apply(y);
  }
  return total;
}

ResidualReport check_cocycle(int k, const GeneratorWord& first, const GeneratorWord& second,
                             const HomogeneousTriple& x, const PrecisionPolicy& prec) {
  if (!(word_to_matrix(first) == word_to_matrix(second))) {
    throw DomainError("check_cocycle: the two words denote different matrices");
  }
  const cplx a = cocycle_eval(k, first, x, prec);
  const cplx b = cocycle_eval(k, second, x, prec);
  return make_report("cocycle",
                     {{"k", std::to_string(k)},
                      {"first", format_word(first)},
                      {"second", format_word(second)},
                      {"x1", format_complex(x.x1())},
                      {"x2", format_complex(x.x2())},
                      {"x3", format_complex(x.x3())}},
                     std::abs(a - b), tolerance::cocycle);
}

}  // namespace ezv
