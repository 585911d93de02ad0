#include "ezv/divisor_series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "series_detail.hpp"

namespace ezv {

using detail::to_double;
using detail::to_ext;

UpperHalfPoint::UpperHalfPoint(cplx tau) : tau_(tau) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real())) {
    throw DomainError("tau must lie in the upper half-plane (Im tau > 0)");
  }
}

cplx UpperHalfPoint::nome() const {
  return to_double(detail::exp_two_pi_i(tau_));
}

NomePoint::NomePoint(cplx q) : q_(q) {
  if (!(std::abs(q) < 1.0)) {
    throw DomainError("nome must satisfy |q| < 1");
  }
}

std::uint64_t sigma_power(std::int64_t n, int p) {
  if (n <= 0) throw DomainError("sigma_power: n must be >= 1");
  if (p < 0) throw DomainError("sigma_power: p must be >= 0");

  auto checked_pow = [p](std::uint64_t d) {
    std::uint64_t r = 1;
    for (int i = 0; i < p; ++i) {
      if (d != 0 && r > std::numeric_limits<std::uint64_t>::max() / d) {
        throw std::overflow_error("sigma_power: result exceeds 64 bits");
      }
      r *= d;
    }
    return r;
  };
  auto checked_add = [](std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
      throw std::overflow_error("sigma_power: result exceeds 64 bits");
    }
    return a + b;
  };

  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t sum = 0;
  for (std::uint64_t d = 1; d * d <= un; ++d) {
    if (un % d != 0) continue;
    sum = checked_add(sum, checked_pow(d));
    const std::uint64_t e = un / d;
    if (e != d) sum = checked_add(sum, checked_pow(e));
  }
  return sum;
}

namespace {

ext_real sigma_power_ext(std::int64_t n, int p) {
  ext_real sum = 0.0L;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += std::pow(static_cast<ext_real>(d), p);
    const std::int64_t e = n / d;
    if (e != d) sum += std::pow(static_cast<ext_real>(e), p);
  }
  return sum;
}

ApproxValue d_k_lambert(int k, cplx q, const PrecisionPolicy& prec) {
  const ext_cplx pref = lipschitz_prefactor(k);
  const double scale = static_cast<double>(std::abs(pref));
  const detail::QSeriesTail tail(k, std::abs(q), scale, prec.epsilon);
  const ext_cplx qe = to_ext(q);

  ext_cplx sum{};
  ext_cplx qj(1.0L);
  for (std::size_t j = 1;; ++j) {
    qj *= qe;
    sum += std::pow(static_cast<ext_real>(j), k - 1) * qj / (1.0L - qj);
    if (tail.done(j)) {
      return {to_double(pref * sum), tail.tail(j), j};
    }
    if (j >= prec.max_terms) {
      detail::throw_truncation("d_k", pref * sum, tail.tail(j), j);
    }
  }
}

ApproxValue d_k_sigma(int k, cplx q, const PrecisionPolicy& prec) {
  const ext_cplx pref = lipschitz_prefactor(k);
  // sigma_{k-1}(n) <= n^(k-1) d(n) <= 2 n^k, so the tail is dominated by
  // twice the (k+1)-tail bound.
  const double scale = 2.0 * static_cast<double>(std::abs(pref));
  const detail::QSeriesTail tail(k + 1, std::abs(q), scale, prec.epsilon);
  const ext_cplx qe = to_ext(q);

  ext_cplx sum{};
  ext_cplx qn(1.0L);
  for (std::size_t n = 1;; ++n) {
    qn *= qe;
    sum += sigma_power_ext(static_cast<std::int64_t>(n), k - 1) * qn;
    if (tail.done(n)) {
      return {to_double(pref * sum), tail.tail(n), n};
    }
    if (n >= prec.max_terms) {
      detail::throw_truncation("d_k", pref * sum, tail.tail(n), n);
    }
  }
}

}  // namespace

ApproxValue d_k(int k, const NomePoint& q, const PrecisionPolicy& prec,
                DkStrategy strategy) {
  prec.validate();
  if (k < 1) throw DomainError("d_k: k must be >= 1");
  if (q.q() == cplx(0.0)) return {};
  switch (strategy) {
    case DkStrategy::lambert:
      return d_k_lambert(k, q.q(), prec);
    case DkStrategy::sigma_coefficients:
      return d_k_sigma(k, q.q(), prec);
  }
  throw DomainError("d_k: unknown strategy");
}

std::vector<cplx> dk_coefficients(int k, int nmax) {
  if (k < 1) throw DomainError("dk_coefficients: k must be >= 1");
  if (nmax < 0) throw DomainError("dk_coefficients: nmax must be >= 0");
  const ext_cplx pref = lipschitz_prefactor(k);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(nmax));
  for (int n = 1; n <= nmax; ++n) {
    out.push_back(to_double(pref * sigma_power_ext(n, k - 1)));
  }
  return out;
}

ApproxValue theta0(cplx z, const UpperHalfPoint& tau,
                   const PrecisionPolicy& prec) {
  prec.validate();
  // Reduce Re z to [0, 1) so that z and z + 1 give bitwise-close inputs.
  const cplx reduced(z.real() - std::floor(z.real()), z.imag());
  const ext_cplx w = detail::exp_two_pi_i(reduced);
  const ext_cplx q = to_ext(tau.nome());
  const ext_real aq = std::abs(q);
  const ext_real aw = std::abs(w);

  ext_cplx prod(1.0L);
  ext_cplx qj(1.0L);  // q^j
  for (std::size_t j = 0;; ++j) {
    const ext_cplx qj1 = qj * q;
    prod *= (1.0L - qj1 / w) * (1.0L - qj * w);
    // Omitted factors j' > j: moduli q^(j'+1)/|w| and q^j' |w|.
    const ext_real next_a = std::abs(qj1) * aq / aw;
    const ext_real next_b = std::abs(qj1) * aw;
    const ext_real tail = (next_a + next_b) / (1.0L - aq);
    const ext_real largest = std::max(next_a, next_b);
    if (largest < 0.5L && tail < 0.5L * prec.epsilon) {
      const ext_real log_tail = tail / (1.0L - largest);
      ApproxValue out;
      out.value = to_double(prod);
      out.err_bound = static_cast<double>(std::abs(prod) * std::expm1(log_tail));
      out.terms_used = j + 1;
      return out;
    }
    if (j + 1 >= prec.max_terms) {
      detail::throw_truncation("theta0", prod,
                               static_cast<double>(std::abs(prod) * tail),
                               j + 1);
    }
    qj = qj1;
  }
}

ApproxValue eisenstein_lattice(int k, const UpperHalfPoint& tau,
                               const PrecisionPolicy& prec) {
  prec.validate();
  if (k < 4) throw DomainError("eisenstein_lattice: k must be >= 4");
  if (k % 2 != 0) {
    throw DomainError(
        "eisenstein_lattice: odd k rejected, the lattice sum vanishes "
        "identically under (m, n) -> (-m, -n)");
  }
  const ext_cplx t = to_ext(tau.tau());
  const int radius = prec.lattice_radius;

  // Half lattice (m > 0, or m = 0 and n > 0); the pair (-m, -n) contributes
  // the same term, which cancels the factor 1/2.
  auto term = [&](int m, int n) {
    return 1.0L / ipow(static_cast<ext_real>(m) * t + static_cast<ext_real>(n), k);
  };
  ext_cplx total{};
  ext_cplx shell{};
  std::size_t count = 0;
  for (int s = 1; s <= radius; ++s) {
    shell = term(0, s);
    ++count;
    for (int m = 1; m < s; ++m) {
      shell += term(m, -s) + term(m, s);
      count += 2;
    }
    for (int n = -s; n <= s; ++n) {
      shell += term(s, n);
      ++count;
    }
    total += shell;
  }
  ApproxValue out;
  out.value = to_double(total);
  out.err_bound =
      static_cast<double>(std::abs(shell)) * radius / static_cast<double>(k - 3);
  out.terms_used = count;
  return out;
}

ApproxValue gk_qexp(int k, const UpperHalfPoint& tau,
                    const PrecisionPolicy& prec) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("gk_qexp: k must be even and >= 2");
  }
  const ApproxValue zeta = zeta_int(k, prec);
  const ApproxValue dk = d_k(k, NomePoint::from_tau(tau), prec);
  return {zeta.value + dk.value, zeta.err_bound + dk.err_bound,
          zeta.terms_used + dk.terms_used};
}

}  // namespace ezv
