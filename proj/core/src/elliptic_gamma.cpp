#include "ezv/elliptic_gamma.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "series_detail.hpp"

namespace ezv {

using detail::to_double;
using detail::to_ext;

namespace {

// Smallest n >= 1 with base^n * scale < target (base in [0, 1)).
std::size_t geometric_cutoff(double base, double scale, double target) {
  if (base == 0.0 || scale < target) return 1;
  const double n = std::ceil(std::log(target / scale) / std::log(base));
  return static_cast<std::size_t>(std::max(1.0, n));
}

// Gamma is 1-periodic in z; reducing Re z keeps e^(2 pi i z) accurate.
cplx reduce_unit(cplx z) { return {z.real() - std::floor(z.real()), z.imag()}; }

}  // namespace

ApproxValue ell_gamma(const GammaArg& arg, const PrecisionPolicy& prec) {
  prec.validate();
  const ext_cplx q = to_ext(arg.tau.nome());
  const ext_cplx r = to_ext(arg.sigma.nome());
  const ext_cplx w = detail::exp_two_pi_i(reduce_unit(arg.z));
  const ext_cplx qr_over_w = q * r / w;
  const double aq = static_cast<double>(std::abs(q));
  const double ar = static_cast<double>(std::abs(r));
  const double big = std::max(static_cast<double>(std::abs(w)),
                              static_cast<double>(std::abs(qr_over_w)));
  const double mass = 2.0 * big / ((1.0 - aq) * (1.0 - ar));

  // Omitted factors: j >= J or l >= L. Their log-moduli sum to at most
  // mass (|q|^J + |r|^L) / (1 - largest omitted factor).
  const double target = 0.25 * prec.epsilon;
  std::size_t jmax = geometric_cutoff(aq, mass, target);
  std::size_t lmax = geometric_cutoff(ar, mass, target);
  bool truncated = false;
  if (static_cast<double>(jmax) * static_cast<double>(lmax) >
      static_cast<double>(prec.max_terms)) {
    const auto side = static_cast<std::size_t>(
        std::max(1.0, std::floor(std::sqrt(static_cast<double>(prec.max_terms)))));
    jmax = std::min(jmax, side);
    lmax = std::min(lmax, side);
    truncated = true;
  }

  ext_cplx prod(1.0L);
  ext_cplx qj(1.0L);
  for (std::size_t j = 0; j < jmax; ++j) {
    ext_cplx x = qj;  // q^j r^l
    for (std::size_t l = 0; l < lmax; ++l) {
      const ext_cplx den = 1.0L - x * w;
      if (std::abs(den) < kPoleThreshold) {
        throw PoleError("ell_gamma: pole of the elliptic gamma function (factor j=" +
                            std::to_string(j) + ", l=" + std::to_string(l) + ")",
                        j, l);
      }
      prod *= (1.0L - x * qr_over_w) / den;
      x *= r;
    }
    qj *= q;
  }

  const double omitted_q = aq == 0.0 ? 0.0 : std::pow(aq, static_cast<double>(jmax));
  const double omitted_r = ar == 0.0 ? 0.0 : std::pow(ar, static_cast<double>(lmax));
  const double largest = big * std::max(omitted_q, omitted_r);
  const double log_tail = mass * (omitted_q + omitted_r) / (1.0 - std::min(largest, 0.5));

  ApproxValue out;
  out.value = to_double(prod);
  out.err_bound = std::abs(out.value) * std::expm1(log_tail);
  out.terms_used = jmax * lmax;
  if (truncated) {
    throw TruncationError("ell_gamma: factor count exceeds max_terms", out);
  }
  return out;
}

ApproxValue log_ell_gamma_sum(const GammaArg& arg, const PrecisionPolicy& prec) {
  prec.validate();
  const cplx tau = arg.tau.tau();
  const cplx sigma = arg.sigma.tau();
  const double strip_top = tau.imag() + sigma.imag();
  if (!(arg.z.imag() > 0.0) || !(arg.z.imag() < strip_top)) {
    throw DomainError(
        "log_ell_gamma_sum: requires 0 < Im z < Im(tau + sigma) (strip of "
        "convergence of the sine summation)");
  }
  const ext_cplx q = to_ext(arg.tau.nome());
  const ext_cplx r = to_ext(arg.sigma.nome());
  // sin(pi j (2z - tau - sigma)) / (sin(pi j tau) sin(pi j sigma))
  //   = 2i (w^j - v^j) / ((1 - q^j)(1 - r^j)),  w = e(z), v = e(tau + sigma - z).
  const ext_cplx w = detail::exp_two_pi_i(reduce_unit(arg.z));
  const ext_cplx v = detail::exp_two_pi_i(reduce_unit(tau + sigma - arg.z));
  const ext_real m = std::max(std::abs(w), std::abs(v));
  const ext_real denom_floor = (1.0L - std::abs(q)) * (1.0L - std::abs(r));

  ext_cplx sum{};
  ext_cplx wj(1.0L), vj(1.0L), qj(1.0L), rj(1.0L);
  ext_real mj = 1.0L;
  for (std::size_t j = 1;; ++j) {
    wj *= w;
    vj *= v;
    qj *= q;
    rj *= r;
    mj *= m;
    const auto jj = static_cast<ext_real>(j);
    sum += (wj - vj) / (jj * (1.0L - qj) * (1.0L - rj));
    const ext_real tail = 2.0L * mj * m / ((jj + 1.0L) * denom_floor * (1.0L - m));
    if (tail < prec.epsilon) {
      return {to_double(sum), static_cast<double>(tail), j};
    }
    if (j >= prec.max_terms) {
      detail::throw_truncation("log_ell_gamma_sum", sum, static_cast<double>(tail), j);
    }
  }
}

ApproxValue euler_gamma_fn(cplx z, const PrecisionPolicy& prec) {
  prec.validate();
  const double az = std::abs(z);
  const auto terms = static_cast<std::size_t>(std::max(1000.0, std::ceil(50.0 * az)));
  if (terms > prec.max_terms) {
    throw TruncationError("euler_gamma_fn: product length exceeds max_terms",
                          ApproxValue{});
  }
  const ext_cplx ze = to_ext(z);

  ext_cplx log_sum = -static_cast<ext_real>(euler_gamma_const()) * ze;
  for (std::size_t j = terms; j >= 1; --j) {
    const ext_cplx ratio = ze / static_cast<ext_real>(j);
    const ext_cplx factor = 1.0L + ratio;
    if (std::abs(factor) < kPoleThreshold) {
      throw PoleError("euler_gamma_fn: Gamma(z + 1) has a pole at z = -" +
                          std::to_string(j),
                      j, 0);
    }
    log_sum += ratio - std::log(factor);
  }

  // sum_{j > J} (z/j - ln(1 + z/j)) = sum_{m >= 2} (-z)^m / m * zeta_{J+1}(m).
  const auto start = static_cast<std::int64_t>(terms) + 1;
  double err = 0.0;
  ext_cplx power = -ze;
  for (int m = 2;; ++m) {
    power *= -ze;
    const ApproxValue zt = hurwitz_tail(m, 0.0, start);
    const ext_cplx term = power / static_cast<ext_real>(m) * static_cast<ext_real>(zt.value.real());
    log_sum += term;
    err += static_cast<double>(std::abs(power)) / m * zt.err_bound;
    if (static_cast<double>(std::abs(term)) < 1e-3 * prec.epsilon || m > 200) {
      const double ratio = az / static_cast<double>(start);
      err += static_cast<double>(std::abs(term)) * ratio / (1.0 - ratio);
      break;
    }
  }

  ApproxValue out;
  out.value = to_double(std::exp(log_sum));
  out.err_bound = std::abs(out.value) * std::expm1(err);
  out.terms_used = terms;
  return out;
}

ApproxValue log_euler_gamma_series(cplx z, int k_max, const PrecisionPolicy& prec) {
  prec.validate();
  const double az = std::abs(z);
  if (!(az < 1.0)) throw DomainError("log_euler_gamma_series: requires |z| < 1");
  if (k_max < 1) throw DomainError("log_euler_gamma_series: k_max must be >= 1");

  cplx sum = -euler_gamma_const() * z;
  double err = std::pow(az, k_max + 1) / (1.0 - az);
  cplx power = -z;
  for (int j = 2; j <= k_max; ++j) {
    power *= -z;  // (-z)^j
    const ApproxValue zeta = zeta_int(j, prec);
    sum += zeta.value.real() / j * power;
    err += std::abs(power) / j * zeta.err_bound;
  }
  return {sum, err, static_cast<std::size_t>(k_max)};
}

TaylorSlice taylor_z_extraction(const WedgePair& pair, int k_max,
                                const PrecisionPolicy& prec,
                                const TaylorOptions& options) {
  prec.validate();
  if (!pair.in_H_pair()) {
    throw DomainError("taylor_z_extraction: requires Im tau > 0 and Im sigma > 0");
  }
  if (k_max < 1 || k_max > 10) {
    throw DomainError("taylor_z_extraction: k_max must be in 1..10");
  }
  const double limit =
      std::min({1.0, pair.sigma().imag(), pair.tau().imag()});
  const double radius = options.radius > 0.0 ? options.radius : 0.5 * limit;
  if (!(radius < limit)) {
    throw DomainError(
        "taylor_z_extraction: radius must be < min(1, Im sigma, Im tau) so the "
        "circle stays clear of the poles and zeros of Gamma(z + sigma)");
  }
  const int samples = options.samples > 0 ? options.samples : std::max(4 * k_max, 64);
  if (samples < 4 * k_max) {
    throw DomainError("taylor_z_extraction: need at least 4 * k_max samples");
  }

  const UpperHalfPoint tau(pair.tau());
  const UpperHalfPoint sigma(pair.sigma());
  const ApproxValue base = log_ell_gamma_sum({pair.sigma(), tau, sigma}, prec);

  std::vector<cplx> values(static_cast<std::size_t>(samples));
  for (int n = 0; n < samples; ++n) {
    const double theta = 2.0 * kPi * n / samples;
    const cplx point = std::polar(radius, theta) + pair.sigma();
    values[static_cast<std::size_t>(n)] =
        log_ell_gamma_sum({point, tau, sigma}, prec).value - base.value;
  }

  TaylorSlice out;
  out.radius = radius;
  out.coefficients.reserve(static_cast<std::size_t>(k_max));
  for (int j = 1; j <= k_max; ++j) {
    cplx acc{};
    for (int n = 0; n < samples; ++n) {
      const double theta = 2.0 * kPi * n / samples;
      acc += values[static_cast<std::size_t>(n)] * std::polar(1.0, -j * theta);
    }
    out.coefficients.push_back(acc / (static_cast<double>(samples) * std::pow(radius, j)));
  }
  return out;
}

std::vector<cplx> scl_limit_probe(cplx z, std::span<const cplx> sigma_seq,
                                  const UpperHalfPoint& tau_large,
                                  const PrecisionPolicy& prec) {
  std::vector<cplx> out;
  out.reserve(sigma_seq.size());
  for (const cplx s : sigma_seq) {
    const UpperHalfPoint sigma(s);
    const ApproxValue theta = theta0(s, tau_large, prec);
    const ApproxValue num = ell_gamma({s * z, tau_large, sigma}, prec);
    const ApproxValue den = ell_gamma({s, tau_large, sigma}, prec);
    out.push_back(std::pow(theta.value, 1.0 - z) * (num.value / den.value));
  }
  return out;
}

double three_term_product_residual(const GammaArg& arg, const PrecisionPolicy& prec) {
  const cplx tau = arg.tau.tau();
  const cplx sigma = arg.sigma.tau();
  if (!WedgePair(tau, sigma).in_wedge()) {
    throw DomainError("three_term_product_residual: requires tau, sigma, sigma/tau in H");
  }
  const ApproxValue lhs = ell_gamma(arg, prec);
  const ApproxValue a = ell_gamma({arg.z + tau, arg.tau, UpperHalfPoint(sigma + tau)}, prec);
  const ApproxValue b = ell_gamma({arg.z, UpperHalfPoint(tau + sigma), arg.sigma}, prec);
  return std::abs(lhs.value - a.value * b.value) / std::abs(lhs.value);
}

namespace {

// exp(f(z)) for the modular combination; entire and zero-free in z.
cplx q_exponential(cplx z, const WedgePair& pair, const PrecisionPolicy& prec) {
  const cplx tau = pair.tau();
  const cplx sigma = pair.sigma();
  const ApproxValue g1 = ell_gamma(
      {z / tau, UpperHalfPoint(-1.0 / tau), UpperHalfPoint(sigma / tau)}, prec);
  const ApproxValue g2 = ell_gamma(
      {(z - tau) / sigma, UpperHalfPoint(-tau / sigma), UpperHalfPoint(-1.0 / sigma)},
      prec);
  const ApproxValue g3 = ell_gamma({z, UpperHalfPoint(tau), UpperHalfPoint(sigma)}, prec);
  return g1.value / (g2.value * g3.value);
}

// Continuous log of q_exponential from `center` to `target` along a segment.
cplx tracked_log(cplx center, cplx base_log, cplx base_value, cplx target,
                 const WedgePair& pair, const PrecisionPolicy& prec) {
  for (int steps = 8; steps <= 512; steps *= 2) {
    cplx log_value = base_log;
    cplx previous = base_value;
    bool smooth = true;
    for (int s = 1; s <= steps; ++s) {
      const cplx point = center + (target - center) * (static_cast<double>(s) / steps);
      const cplx current = q_exponential(point, pair, prec);
      const cplx step = std::log(current / previous);
      if (std::abs(step.imag()) > 0.5 * kPi) {
        smooth = false;
        break;
      }
      log_value += step;
      previous = current;
    }
    if (smooth) return log_value;
  }
  throw BranchError("fit_Q: could not track a continuous logarithm to the sample point");
}

}  // namespace

PolynomialFit fit_Q_polynomial(const WedgePair& pair, int sample_count,
                               const PrecisionPolicy& prec,
                               const QFitOptions& options) {
  prec.validate();
  if (!pair.in_wedge()) {
    throw DomainError("fit_Q: requires tau, sigma, sigma/tau in the upper half-plane");
  }
  if (sample_count < 8) throw DomainError("fit_Q: sample_count must be >= 8");
  if (options.degree < 0 || options.degree + 2 > sample_count) {
    throw DomainError("fit_Q: degree must be in 0..sample_count-2");
  }
  if (!(options.radius > 0.0)) throw DomainError("fit_Q: radius must be positive");

  const cplx center = options.center.value_or(0.5 * (pair.tau() + pair.sigma()));
  const double radius = options.radius;
  const int outer = (2 * sample_count + 2) / 3;
  const int inner = sample_count - outer;

  std::vector<cplx> points;
  points.reserve(static_cast<std::size_t>(sample_count));
  for (int n = 0; n < outer; ++n) {
    points.push_back(center + std::polar(radius, 2.0 * kPi * (n + 0.5) / outer));
  }
  for (int n = 0; n < inner; ++n) {
    points.push_back(center + std::polar(0.5 * radius, 2.0 * kPi * n / inner));
  }

  const cplx base_value = q_exponential(center, pair, prec);
  const cplx base_log = std::log(base_value);

  const int cols = options.degree + 1;
  Eigen::MatrixXcd design(sample_count, cols);
  Eigen::VectorXcd rhs(sample_count);
  for (int i = 0; i < sample_count; ++i) {
    const cplx u = (points[static_cast<std::size_t>(i)] - center) / radius;
    cplx p(1.0);
    for (int c = 0; c < cols; ++c) {
      design(i, c) = p;
      p *= u;
    }
    rhs(i) = tracked_log(center, base_log, base_value,
                         points[static_cast<std::size_t>(i)], pair, prec);
  }
  const Eigen::VectorXcd solution = design.colPivHouseholderQr().solve(rhs);
  const double residual = (design * solution - rhs).cwiseAbs().maxCoeff();

  // A misfit near a nonzero multiple of 2 pi signals a branch jump.
  const double jumps = residual / (2.0 * kPi);
  if (residual > 1e-7 && std::round(jumps) >= 1.0 &&
      std::abs(jumps - std::round(jumps)) < 0.1) {
    throw BranchError("fit_Q: residual matches a 2 pi i branch jump; retry with a smaller disk");
  }

  // sum_m s_m ((z - c)/R)^m, re-expanded in powers of z and divided by i pi.
  std::vector<cplx> coeffs(static_cast<std::size_t>(cols), cplx(0.0));
  const cplx i_pi(0.0, kPi);
  for (int m = 0; m < cols; ++m) {
    const cplx scaled = solution(m) / std::pow(radius, m);
    double binom = 1.0;
    for (int i = 0; i <= m; ++i) {
      // C(m, i) z^i (-c)^(m-i)
      coeffs[static_cast<std::size_t>(i)] += scaled * binom * ipow(-center, m - i);
      binom = binom * (m - i) / (i + 1);
    }
  }
  for (cplx& c : coeffs) c /= i_pi;
  return {std::move(coeffs), residual};
}

CubicFit fit_Q_cubic(const WedgePair& pair, int sample_count,
                     const PrecisionPolicy& prec, const QFitOptions& options) {
  QFitOptions cubic = options;
  cubic.degree = 3;
  const PolynomialFit fit = fit_Q_polynomial(pair, sample_count, prec, cubic);
  CubicFit out;
  std::copy(fit.coefficients.begin(), fit.coefficients.end(), out.coefficients.begin());
  out.fit_residual = fit.fit_residual;
  return out;
}

}  // namespace ezv
