#pragma once

#include <complex>
#include <cstddef>

namespace ezv {

using cplx = std::complex<double>;

// Series are accumulated in extended precision; results are reported in
// double.
using ext_real = long double;
using ext_cplx = std::complex<long double>;

/// Truncation controls shared by every series, product and lattice sum.
struct PrecisionPolicy {
  double epsilon = 1e-12;           // target absolute truncation error
  std::size_t max_terms = 1000000;  // cap on terms (or factors) per series
  int lattice_radius = 100;         // shell cutoff for lattice sums

  /// Throws DomainError unless epsilon > 0, max_terms >= 1 and
  /// lattice_radius >= 1.
  void validate() const;
};

/// A truncated value. err_bound bounds the truncation error under the tail
/// estimate documented by the producing operation; rounding is not included.
struct ApproxValue {
  cplx value{};
  double err_bound = 0.0;
  std::size_t terms_used = 0;
};

}  // namespace ezv
