#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ezv/divisor_series.hpp"
#include "ezv/elliptic_zeta.hpp"
#include "ezv/numerics.hpp"

namespace ezv {

/// Arguments (z, tau, sigma) of the elliptic gamma function.
struct GammaArg {
  cplx z;
  UpperHalfPoint tau;
  UpperHalfPoint sigma;
};

/// Denominator factors with modulus below this are treated as poles.
inline constexpr double kPoleThreshold = 1e-13;

/// Elliptic gamma function by its double product
///   prod_{j,l>=0} (1 - q^(j+1) r^(l+1) e^(-2 pi i z)) / (1 - q^j r^l e^(2 pi i z)).
/// err_bound is absolute, derived from the omitted log-tail. Throws
/// PoleError (carrying j, l) when a denominator factor is below
/// kPoleThreshold.
ApproxValue ell_gamma(const GammaArg& arg, const PrecisionPolicy& prec = {});

/// ln Gamma(z, tau, sigma) by the sine summation formula
///   -(i/2) sum_j sin(pi j (2z - tau - sigma)) / (j sin(pi j tau) sin(pi j sigma)),
/// valid on the strip 0 < Im z < Im(tau + sigma). The series is evaluated in
/// the equivalent form sum_j (w^j - (qr/w)^j) / (j (1 - q^j)(1 - r^j)),
/// w = e^(2 pi i z), which avoids overflow of the sines.
ApproxValue log_ell_gamma_sum(const GammaArg& arg,
                              const PrecisionPolicy& prec = {});

/// Euler Gamma(z + 1) by the Weierstrass product
/// e^(-gamma z) prod_j (1 + z/j)^(-1) e^(z/j), with the tail beyond the
/// truncation point summed through zeta tails. Throws PoleError for
/// z in {-1, -2, ...}.
ApproxValue euler_gamma_fn(cplx z, const PrecisionPolicy& prec = {});

/// -gamma z + sum_{j=2}^{k_max} zeta(j)/j (-z)^j for |z| < 1.
/// err_bound adds |z|^(k_max+1)/(1-|z|) to the zeta truncation errors.
ApproxValue log_euler_gamma_series(cplx z, int k_max,
                                   const PrecisionPolicy& prec = {});

/// Taylor coefficients c_1..c_kmax of ln(Gamma(z+sigma)/Gamma(sigma)) at
/// z = 0, extracted from samples on the circle |z| = radius.
struct TaylorSlice {
  std::vector<cplx> coefficients;  // coefficients[j-1] = c_j
  double radius = 0.0;
};

struct TaylorOptions {
  double radius = 0.0;  // 0 picks half of min(1, Im sigma, Im tau)
  int samples = 0;      // 0 picks max(4 k_max, 64)
};

TaylorSlice taylor_z_extraction(const WedgePair& pair, int k_max,
                                const PrecisionPolicy& prec = {},
                                const TaylorOptions& options = {});

/// theta0(sigma, tau)^(1-z) Gamma(sigma z, tau, sigma) / Gamma(sigma, tau, sigma)
/// for each sigma in the sequence (principal power).
std::vector<cplx> scl_limit_probe(cplx z, std::span<const cplx> sigma_seq,
                                  const UpperHalfPoint& tau_large,
                                  const PrecisionPolicy& prec = {});

/// |Gamma(z,tau,sigma) - Gamma(z+tau,tau,sigma+tau) Gamma(z,tau+sigma,sigma)|
/// / |Gamma(z,tau,sigma)|. Requires tau, sigma, sigma/tau in H.
double three_term_product_residual(const GammaArg& arg,
                                   const PrecisionPolicy& prec = {});

/// Least-squares polynomial fitted to
///   f(z) = ln Gamma(z/tau, -1/tau, sigma/tau)
///        - ln Gamma((z-tau)/sigma, -tau/sigma, -1/sigma) - ln Gamma(z, tau, sigma)
/// on a small disk, written as f = i pi Q(z).
struct CubicFit {
  std::array<cplx, 4> coefficients{};  // Q(z) = sum_m coefficients[m] z^m
  double fit_residual = 0.0;           // max |f - i pi Q| over the samples
};

struct QFitOptions {
  std::optional<cplx> center;  // defaults to (tau + sigma) / 2
  double radius = 0.1;         // disk radius around the center
  int degree = 3;              // degree of the fitted polynomial
};

/// General-degree fit backing fit_Q_cubic; coefficients in powers of z.
struct PolynomialFit {
  std::vector<cplx> coefficients;
  double fit_residual = 0.0;
};

PolynomialFit fit_Q_polynomial(const WedgePair& pair, int sample_count,
                               const PrecisionPolicy& prec = {},
                               const QFitOptions& options = {});

/// Degree-3 fit. Throws DomainError unless the pair is in the wedge and
/// sample_count >= 8, and BranchError if the log cannot be tracked.
CubicFit fit_Q_cubic(const WedgePair& pair, int sample_count,
                     const PrecisionPolicy& prec = {},
                     const QFitOptions& options = {});

}  // namespace ezv
