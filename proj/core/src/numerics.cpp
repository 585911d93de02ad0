#include "ezv/numerics.hpp"

#include <array>
#include <cmath>
#include <string>

namespace ezv {

void PrecisionPolicy::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("precision: epsilon must be a positive finite number");
  }
  if (max_terms < 1) throw DomainError("precision: max_terms must be >= 1");
  if (lattice_radius < 1) {
    throw DomainError("precision: lattice_radius must be >= 1");
  }
}

namespace {

// B_2, B_4, ..., B_14.
constexpr std::array<long double, 7> kBernoulliEven = {
    1.0L / 6.0L,   -1.0L / 30.0L,       1.0L / 42.0L, -1.0L / 30.0L,
    5.0L / 66.0L,  -691.0L / 2730.0L,   7.0L / 6.0L,
};

// Below this many terms the corrected tail is not trusted.
constexpr std::int64_t kZetaSplit = 32;

}  // namespace

ApproxValue hurwitz_tail(int k, cplx shift, std::int64_t n0) {
  if (k < 2) throw DomainError("hurwitz_tail: k must be >= 2");
  if (n0 < 1) throw DomainError("hurwitz_tail: n0 must be >= 1");
  const ext_cplx x = ext_cplx(static_cast<ext_real>(n0)) +
                     ext_cplx(shift.real(), shift.imag());
  if (std::abs(x) < 1.0L) {
    throw DomainError("hurwitz_tail: n0 + shift too close to the origin");
  }
  const ext_cplx inv = 1.0L / x;
  ext_cplx power = ipow(inv, k - 1);  // x^(1-k)
  ext_cplx sum = power / static_cast<ext_real>(k - 1);
  power *= inv;  // x^(-k)
  sum += power / 2.0L;

  // Rising factorial (k)_{2m-1}, divided by (2m)! as we go.
  ext_real coef = static_cast<ext_real>(k);  // (k)_1 / 2!
  coef /= 2.0L;
  ext_cplx xpow = power * inv;  // x^(-k-1)
  ext_cplx last{};
  for (std::size_t m = 1; m <= kBernoulliEven.size(); ++m) {
    const ext_cplx term = kBernoulliEven[m - 1] * coef * xpow;
    if (m == kBernoulliEven.size()) {
      last = term;
      break;
    }
    sum += term;
    // (k)_{2m+1}/(2m+2)! from (k)_{2m-1}/(2m)!
    const auto mm = static_cast<ext_real>(m);
    coef *= (k + 2.0L * mm - 1.0L) * (k + 2.0L * mm) /
            ((2.0L * mm + 1.0L) * (2.0L * mm + 2.0L));
    xpow *= inv * inv;
  }
  ApproxValue out;
  out.value = cplx(static_cast<double>(sum.real()),
                   static_cast<double>(sum.imag()));
  out.err_bound = 2.0 * static_cast<double>(std::abs(last));
  out.terms_used = kBernoulliEven.size() + 1;
  return out;
}

ApproxValue zeta_int(int k, const PrecisionPolicy& prec) {
  prec.validate();
  if (k < 2) {
    throw DomainError("zeta_int: zeta diverges at k = " + std::to_string(k) +
                      " (need k >= 2)");
  }
  const auto cap = static_cast<std::int64_t>(prec.max_terms);
  if (cap < kZetaSplit) {
    ext_real sum = 0.0L;
    for (std::int64_t n = 1; n <= cap; ++n) {
      sum += std::pow(static_cast<ext_real>(n), static_cast<ext_real>(-k));
    }
    ApproxValue out;
    out.value = static_cast<double>(sum);
    out.err_bound = std::pow(static_cast<double>(cap), 1.0 - k) / (k - 1);
    out.terms_used = static_cast<std::size_t>(cap);
    return out;
  }

  ext_real head = 0.0L;
  for (std::int64_t n = kZetaSplit - 1; n >= 1; --n) {
    head += std::pow(static_cast<ext_real>(n), static_cast<ext_real>(-k));
  }
  const ApproxValue tail = hurwitz_tail(k, 0.0, kZetaSplit);
  ApproxValue out;
  out.value = static_cast<double>(head + tail.value.real());
  out.err_bound = tail.err_bound;
  out.terms_used = static_cast<std::size_t>(kZetaSplit - 1) + tail.terms_used;
  return out;
}

double euler_gamma_const() {
  static const double gamma = [] {
    constexpr int n = 10000;
    ext_real harmonic = 0.0L;
    for (int j = n; j >= 1; --j) harmonic += 1.0L / j;
    const ext_real nn = n;
    const ext_real n2 = nn * nn;
    return static_cast<double>(harmonic - std::log(nn) - 1.0L / (2.0L * nn) +
                               1.0L / (12.0L * n2) -
                               1.0L / (120.0L * n2 * n2) +
                               1.0L / (252.0L * n2 * n2 * n2));
  }();
  return gamma;
}

double qseries_tail_bound(int k, double rho, std::size_t j0) {
  if (k < 1) throw DomainError("qseries_tail_bound: k must be >= 1");
  if (j0 < 1) throw DomainError("qseries_tail_bound: j0 must be >= 1");
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw DomainError("qseries_tail_bound: series does not converge (rho >= 1)");
  }
  if (rho == 0.0) return 0.0;

  const double log_rho = std::log(rho);
  auto term = [&](double j) {
    return std::exp((k - 1) * std::log(j) + j * log_rho);
  };
  auto ratio = [&](double j) {
    return std::pow((j + 1.0) / j, k - 1) * rho;
  };

  // From jstar on, consecutive terms shrink by at least (1 + rho) / 2.
  double jstar = 1.0;
  if (k > 1) {
    const double c = std::pow((1.0 + rho) / (2.0 * rho), 1.0 / (k - 1));
    jstar = std::max(1.0, std::ceil(1.0 / (c - 1.0)));
    while (ratio(jstar) > 0.5 * (1.0 + rho)) jstar += 1.0;
  }

  const auto start = static_cast<double>(j0);
  double sum = 0.0;
  double geometric_from = start;
  if (start < jstar) {
    for (double j = start; j < jstar; j += 1.0) sum += term(j);
    geometric_from = jstar;
  }
  sum += term(geometric_from) / (1.0 - ratio(geometric_from));

  const double denom = -std::expm1(start * log_rho);  // 1 - rho^j0
  return sum / (denom * denom);
}

ext_real factorial_ext(int n) {
  ext_real f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ext_cplx lipschitz_prefactor(int k) {
  const ext_cplx minus_two_pi_i(0.0L, -2.0L * kPiExt);
  return ipow(minus_two_pi_i, k) / factorial_ext(k - 1);
}

}  // namespace ezv
