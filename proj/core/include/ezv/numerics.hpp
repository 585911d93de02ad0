#pragma once

#include <cstdint>

#include "ezv/errors.hpp"
#include "ezv/numerics_types.hpp"

namespace ezv {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr ext_real kPiExt = 3.141592653589793238462643383279502884L;

/// Riemann zeta at an integer k >= 2.
///
/// Direct Dirichlet partial sum over n < N with an Euler-Maclaurin tail
/// for n >= N. err_bound is the magnitude of the first omitted
/// Euler-Maclaurin term. If max_terms is too small for the corrected tail
/// to be reliable, falls back to the bare partial sum over max_terms terms
/// with the integral bound N^(1-k)/(k-1).
ApproxValue zeta_int(int k, const PrecisionPolicy& prec = {});

/// Euler's constant, accurate to double precision.
double euler_gamma_const();

/// Upper bound for the tail sum_{j >= j0} j^(k-1) rho^j / (1 - rho^j0)^2.
///
/// Dominates the j >= j0 tail of any series whose j-th term is at most
/// j^(k-1) rho^j / ((1 - rho^j)(1 - rho^j)) in modulus, which covers the
/// elliptic zeta series, the Lambert series for D_k and the Lipschitz
/// exponential series. Callers multiply by their own prefactor. Monotone
/// decreasing in j0 and tends to 0.
double qseries_tail_bound(int k, double rho, std::size_t j0);

/// sum_{n >= n0} (n + shift)^(-k) by Euler-Maclaurin (k >= 2, n0 >= 1,
/// n0 + shift away from the negative real axis). err_bound is twice the
/// first omitted correction term.
ApproxValue hurwitz_tail(int k, cplx shift, std::int64_t n0);

/// z^n for integer n by repeated squaring.
template <typename T>
std::complex<T> ipow(std::complex<T> z, int n) {
  if (n < 0) return std::complex<T>(1) / ipow(z, -n);
  std::complex<T> result(1);
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

/// (k-1)! as a floating value.
ext_real factorial_ext(int n);

/// (-2 pi i)^k / (k-1)!, the normalisation of D_k and of the Lipschitz
/// formula.
ext_cplx lipschitz_prefactor(int k);

}  // namespace ezv
