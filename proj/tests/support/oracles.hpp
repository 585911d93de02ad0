#pragma once

// Reference values and brute-force evaluators used as test oracles. Nothing
// here calls into the library: each routine is the literal textbook formula,
// summed in long double with a fixed, generous term count.

#include <cmath>
#include <complex>
#include <cstdint>

namespace oracle {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// Frozen reference values, computed once with mpmath at 40 digits.
namespace frozen {
constexpr double zeta3 = 1.2020569031595942854;
constexpr double euler_gamma = 0.57721566490153286061;
constexpr double z2_at_2i_i = -0.074000063855098293821;  // Z_2(2i, i), real

// Z_k at tau = 0.2 + 1.0i, sigma = 0.1 + 0.8i, k = 1..8.
inline const cplx zk_standard[8] = {
    {0.036082278494277091401, -0.037060721401662314748},
    {-0.18867784223586948892, -0.086791162759182289652},
    {-0.7284980806448526479, 0.73535431187101934688},
    {1.2660447776157059868, 0.63340064949006315452},
    {2.6150693518407733779, -2.4676673549316794757},
    {-2.6876435549880151796, -1.7596534867978088069},
    {-4.643797405835148337, 3.4820550110151984267},
    {3.1838651203954944387, 3.7171051435966824148},
};

constexpr cplx d3_at_0_1{0.0, 20.143656207886682517};  // D_3(0.1)
constexpr double g4_at_1_5i = 1.1033007734456361343;
constexpr double g6_at_1_5i = 0.97585485973801004928;
// Gamma(0.3 + 0.2i, 0.2 + 1.0i, 0.1 + 0.8i)
constexpr cplx ell_gamma_standard{0.86352921567977968974, 0.21584672816261914611};
// theta0(0.3 + 0.2i, 0.2 + 1.0i)
constexpr cplx theta0_standard{1.0837816084746545077, -0.26519214078474360588};
constexpr double euler_gamma_of_1_5 = 0.88622692545275801365;
constexpr cplx euler_gamma_of_1_3_0_4i{0.82034580137554321684, -0.045533396153791198464};
// (-2 pi i)^5 / 4! sum_j j^4 e^(2 pi i rho j) at rho = 0.3 + 0.7i
constexpr cplx lipschitz_k5{4.1584059027049873661, 2.2992797594972178038};
}  // namespace frozen

inline lcplx to_l(cplx z) { return {z.real(), z.imag()}; }
inline cplx to_d(lcplx z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline lcplx nome(cplx tau) {
  return std::exp(lcplx(0.0L, 2.0L * kPi) * to_l(tau));
}

inline long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Sum of d^p over divisors d of n, by trial division over every d <= n.
inline std::uint64_t sigma_brute(std::uint64_t n, int p) {
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint64_t pw = 1;
    for (int e = 0; e < p; ++e) pw *= d;
    total += pw;
  }
  return total;
}

/// Dirichlet partial sum to n_terms plus the integral tail bound midpoint.
inline double zeta_brute(int k, long n_terms = 200000) {
  long double s = 0.0L;
  for (long n = n_terms; n >= 1; --n) s += std::pow(static_cast<long double>(n), -k);
  // The tail lies between the integrals from N+1 and N.
  const long double lo = std::pow(static_cast<long double>(n_terms + 1), 1 - k) / (k - 1);
  const long double hi = std::pow(static_cast<long double>(n_terms), 1 - k) / (k - 1);
  return static_cast<double>(s + 0.5L * (lo + hi));
}

/// The defining q-series of Z_k summed to a fixed number of terms.
inline cplx zk_direct(int k, cplx tau, cplx sigma, int terms = 4000) {
  const lcplx q = nome(tau);
  const lcplx r = nome(sigma);
  const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
  lcplx sum{};
  lcplx qj = 1.0L, rj = 1.0L;
  for (int j = 1; j <= terms; ++j) {
    qj *= q;
    rj *= r;
    const long double w = std::pow(static_cast<long double>(j), k - 1);
    sum += w * (qj - sign * rj) / ((1.0L - qj) * (1.0L - rj));
    if (std::abs(qj) + std::abs(rj) < 1e-40L) break;
  }
  const lcplx pref = -std::pow(lcplx(0.0L, 2.0L * kPi), k) / factorial(k - 1);
  return to_d(pref * sum);
}

/// D_k(q) from sigma_{k-1}(n) computed by trial division.
inline cplx dk_sigma_brute(int k, cplx q, int terms = 400) {
  const lcplx ql = to_l(q);
  lcplx sum{};
  lcplx qn = 1.0L;
  for (int n = 1; n <= terms; ++n) {
    qn *= ql;
    sum += static_cast<long double>(sigma_brute(static_cast<std::uint64_t>(n), k - 1)) * qn;
    if (std::abs(qn) < 1e-40L) break;
  }
  const lcplx pref = std::pow(lcplx(0.0L, -2.0L * kPi), k) / factorial(k - 1);
  return to_d(pref * sum);
}

inline cplx theta0_brute(cplx z, cplx tau, int terms = 2000) {
  const lcplx q = nome(tau);
  const lcplx x = std::exp(lcplx(0.0L, 2.0L * kPi) * to_l(z));
  lcplx prod = 1.0L;
  lcplx qj = 1.0L;
  for (int j = 0; j < terms; ++j) {
    prod *= (1.0L - qj * q / x) * (1.0L - qj * x);
    qj *= q;
  }
  return to_d(prod);
}

inline cplx ell_gamma_brute(cplx z, cplx tau, cplx sigma, int terms = 300) {
  const lcplx q = nome(tau);
  const lcplx r = nome(sigma);
  const lcplx x = std::exp(lcplx(0.0L, 2.0L * kPi) * to_l(z));
  lcplx log_sum{};
  lcplx qj = 1.0L;
  for (int j = 0; j < terms; ++j) {
    lcplx rl = 1.0L;
    for (int l = 0; l < terms; ++l) {
      log_sum += std::log((1.0L - qj * q * rl * r / x) / (1.0L - qj * rl * x));
      rl *= r;
      if (std::abs(qj * rl) < 1e-30L) break;
    }
    qj *= q;
    if (std::abs(qj) < 1e-30L) break;
  }
  return to_d(std::exp(log_sum));
}

/// 1/2 sum over the full square |m|, |n| <= radius, (m, n) != (0, 0).
inline cplx eisenstein_brute(int k, cplx tau, int radius) {
  const lcplx t = to_l(tau);
  lcplx sum{};
  for (int m = -radius; m <= radius; ++m) {
    for (int n = -radius; n <= radius; ++n) {
      if (m == 0 && n == 0) continue;
      sum += std::pow(static_cast<long double>(m) * t + static_cast<long double>(n), -k);
    }
  }
  return to_d(0.5L * sum);
}

/// Euler Gamma on the real axis via the standard library, as a cross-check.
inline double tgamma_real(double x) { return std::tgamma(x); }

}  // namespace oracle
