#pragma once

#include <cstdint>
#include <vector>

#include "ezv/numerics.hpp"

namespace ezv {

/// A point tau of the upper half-plane. The constructor rejects Im tau <= 0.
class UpperHalfPoint {
 public:
  explicit UpperHalfPoint(cplx tau);

  cplx tau() const noexcept { return tau_; }
  /// q = exp(2 pi i tau), |q| < 1.
  cplx nome() const;

 private:
  cplx tau_;
};

/// A point q of the open unit disk, used when the series variable is a
/// product such as q^a r^b rather than exp(2 pi i tau).
class NomePoint {
 public:
  explicit NomePoint(cplx q);
  static NomePoint from_tau(const UpperHalfPoint& tau) {
    return NomePoint(tau.nome());
  }

  cplx q() const noexcept { return q_; }
  double modulus() const noexcept { return std::abs(q_); }

 private:
  cplx q_;
};

/// Exact sum of d^p over the divisors d of n. Throws DomainError for n <= 0
/// or p < 0 and std::overflow_error if the sum exceeds 64 bits.
std::uint64_t sigma_power(std::int64_t n, int p);

enum class DkStrategy {
  lambert,             // (-2 pi i)^k/(k-1)! sum_j j^(k-1) q^j / (1 - q^j)
  sigma_coefficients,  // (-2 pi i)^k/(k-1)! sum_n sigma_{k-1}(n) q^n
};

/// Divisor generating series D_k(q) for k >= 1.
ApproxValue d_k(int k, const NomePoint& q, const PrecisionPolicy& prec = {},
                DkStrategy strategy = DkStrategy::lambert);

/// The q-expansion coefficients (-2 pi i)^k/(k-1)! sigma_{k-1}(n),
/// n = 1..nmax. Entry i holds the coefficient of q^(i+1).
std::vector<cplx> dk_coefficients(int k, int nmax);

/// Modified theta function
/// theta0(z, tau) = prod_{j>=0} (1 - q^(j+1) e^(-2 pi i z)) (1 - q^j e^(2 pi i z)).
/// err_bound is relative to |value| (exp of the omitted log-tail, minus one).
ApproxValue theta0(cplx z, const UpperHalfPoint& tau,
                   const PrecisionPolicy& prec = {});

/// G_k(tau) = 1/2 sum'_{(m,n)} (m tau + n)^(-k) over square shells
/// max(|m|, |n|) <= prec.lattice_radius, for even k >= 4. Odd k is rejected:
/// the full sum vanishes identically under (m, n) -> (-m, -n).
/// err_bound = |last shell| * radius / (k - 3).
ApproxValue eisenstein_lattice(int k, const UpperHalfPoint& tau,
                               const PrecisionPolicy& prec = {});

/// G_k(tau) = zeta(k) + D_k(exp(2 pi i tau)) for even k >= 2.
ApproxValue gk_qexp(int k, const UpperHalfPoint& tau,
                    const PrecisionPolicy& prec = {});

}  // namespace ezv
