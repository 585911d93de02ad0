#pragma once

// Helpers shared by the q-series evaluators. Not installed.

#include <cmath>
#include <string>

#include "ezv/numerics.hpp"

namespace ezv::detail {

inline ext_cplx to_ext(cplx z) { return {z.real(), z.imag()}; }
inline cplx to_double(ext_cplx z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline ext_cplx exp_two_pi_i(cplx z) {
  const ext_cplx arg(-2.0L * kPiExt * z.imag(), 2.0L * kPiExt * z.real());
  return std::exp(arg);
}

/// Stopping rule for series whose j-th term is bounded by
/// scale * j^(k-1) rho^j / (1 - rho^j)^2. `done(j)` is true once the tail
/// from j + 1 on is below epsilon; `tail(j)` returns that bound.
class QSeriesTail {
 public:
  QSeriesTail(int k, double rho, double scale, double epsilon)
      : k_(k), rho_(rho), scale_(scale), epsilon_(epsilon) {}

  double tail(std::size_t j) const {
    if (rho_ == 0.0) return 0.0;
    return scale_ * qseries_tail_bound(k_, rho_, j + 1);
  }

  bool done(std::size_t j) const {
    if (rho_ == 0.0) return true;
    // Cheap necessary condition first; the full bound costs more for small j.
    const double next = static_cast<double>(j + 1);
    const double head =
        scale_ * std::exp((k_ - 1) * std::log(next) + next * std::log(rho_));
    if (head > epsilon_) return false;
    return tail(j) < epsilon_;
  }

 private:
  int k_;
  double rho_;
  double scale_;
  double epsilon_;
};

[[noreturn]] inline void throw_truncation(const std::string& op,
                                          ext_cplx partial, double tail,
                                          std::size_t terms) {
  ApproxValue p;
  p.value = to_double(partial);
  p.err_bound = tail;
  p.terms_used = terms;
  throw TruncationError(op + ": max_terms reached before the tail bound fell below epsilon",
                        p);
}

}  // namespace ezv::detail
