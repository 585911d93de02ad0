#pragma once

#include "ezv/divisor_series.hpp"
#include "ezv/numerics.hpp"

namespace ezv {

/// A pair (tau, sigma). The membership flags are computed from the values
/// on construction and cannot be set by the caller.
class WedgePair {
 public:
  WedgePair(cplx tau, cplx sigma);

  cplx tau() const noexcept { return tau_; }
  cplx sigma() const noexcept { return sigma_; }
  /// Im tau > 0 and Im sigma > 0.
  bool in_H_pair() const noexcept { return in_h_pair_; }
  /// in_H_pair and additionally Im(sigma / tau) > 0.
  bool in_wedge() const noexcept { return in_wedge_; }

  WedgePair swapped() const { return {sigma_, tau_}; }

 private:
  cplx tau_;
  cplx sigma_;
  bool in_h_pair_;
  bool in_wedge_;
};

/// The repository-wide standard test pair tau = 0.2 + 1.0i,
/// sigma = 0.1 + 0.8i; Im(sigma/tau) = 0.06/1.04 > 0.
WedgePair standard_pair();

/// A pair with Im tau != 0 and Im sigma != 0.
class ExtendedPair {
 public:
  ExtendedPair(cplx tau, cplx sigma);

  cplx tau() const noexcept { return tau_; }
  cplx sigma() const noexcept { return sigma_; }

 private:
  cplx tau_;
  cplx sigma_;
};

/// Homogeneous coordinates (x1, x2, x3) with x3 != 0 and
/// Im(x1/x3), Im(x2/x3) both nonzero.
class HomogeneousTriple {
 public:
  HomogeneousTriple(cplx x1, cplx x2, cplx x3);

  cplx x1() const noexcept { return x1_; }
  cplx x2() const noexcept { return x2_; }
  cplx x3() const noexcept { return x3_; }

  /// True when (x1, x2, x3) satisfies the invariants above.
  static bool admissible(cplx x1, cplx x2, cplx x3);

 private:
  cplx x1_;
  cplx x2_;
  cplx x3_;
};

/// Elliptic zeta value by its defining q-series
///   Z_k = -(2 pi i)^k/(k-1)! sum_j j^(k-1) (q^j - (-1)^k r^j) / ((1-q^j)(1-r^j)),
/// q = e^(2 pi i tau), r = e^(2 pi i sigma). Requires an H-pair.
ApproxValue z_k(int k, const WedgePair& pair, const PrecisionPolicy& prec = {});

/// Even k: D_k(r) - D_k(q).
ApproxValue z_k_even_split(int k, const WedgePair& pair,
                           const PrecisionPolicy& prec = {});

/// Odd k: D_k(q) + D_k(r) + 2 sum over coprime a, b >= 1 of D_k(q^a r^b).
/// Pairs with |q^a r^b| below a cutoff are dropped; the cutoff is chosen so
/// that the dropped part is bounded by epsilon / 2.
ApproxValue z_k_odd_split(int k, const WedgePair& pair,
                          const PrecisionPolicy& prec = {});

/// Sign of n: 1, 0 or -1.
constexpr int epsilon_sign(long long n) noexcept {
  return n > 0 ? 1 : (n < 0 ? -1 : 0);
}

/// (epsilon(a) + epsilon(b)) / 2, one of -1, -1/2, 0, 1/2, 1.
constexpr double epsilon_pair(long long a, long long b) noexcept {
  return 0.5 * (epsilon_sign(a) + epsilon_sign(b));
}

/// Odd k >= 5: sum over 0 < max(|a|,|b|,|c|) <= lattice_radius of
/// epsilon(a,b) / (a tau + b sigma + c)^k, accumulated cube shell by cube
/// shell. err_bound = |last shell| * radius / (k - 4).
ApproxValue z_k_lattice(int k, const WedgePair& pair,
                        const PrecisionPolicy& prec = {});

/// Z_k on Im tau != 0, Im sigma != 0 via Z_k(-tau, sigma) = Z_k(tau, -sigma)
/// = (-1)^k Z_k(tau, sigma).
ApproxValue z_k_extended(int k, const ExtendedPair& pair,
                         const PrecisionPolicy& prec = {});

/// Homogeneous form x3^(-k) Z_k(x1/x3, x2/x3) on the extended domain.
ApproxValue z_k_homogeneous(int k, const HomogeneousTriple& x,
                            const PrecisionPolicy& prec = {});

/// Correction coefficient a_k (k = 1, 2, 3) of the modular three-term
/// relation.
cplx anomaly_a(int k, cplx tau, cplx sigma);

struct LipschitzSides {
  ApproxValue left;   // sum_n (rho + n)^(-k)
  ApproxValue right;  // (-2 pi i)^k/(k-1)! sum_j j^(k-1) e^(2 pi i rho j)
};

/// Both sides of the Lipschitz formula for Im rho > 0, k >= 2.
/// The left side sums |n| <= lattice_radius directly and adds an
/// Euler-Maclaurin tail for |n| > lattice_radius.
LipschitzSides lipschitz_both_sides(int k, cplx rho,
                                    const PrecisionPolicy& prec = {});

}  // namespace ezv
