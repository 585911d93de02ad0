#include "ezv/elliptic_zeta.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "series_detail.hpp"

namespace ezv {

using detail::to_double;
using detail::to_ext;

WedgePair::WedgePair(cplx tau, cplx sigma)
    : tau_(tau),
      sigma_(sigma),
      in_h_pair_(tau.imag() > 0.0 && sigma.imag() > 0.0),
      in_wedge_(in_h_pair_ && (sigma / tau).imag() > 0.0) {}

WedgePair standard_pair() { return {cplx(0.2, 1.0), cplx(0.1, 0.8)}; }

ExtendedPair::ExtendedPair(cplx tau, cplx sigma) : tau_(tau), sigma_(sigma) {
  if (tau.imag() == 0.0 || sigma.imag() == 0.0) {
    throw DomainError("extended pair requires Im tau != 0 and Im sigma != 0");
  }
}

bool HomogeneousTriple::admissible(cplx x1, cplx x2, cplx x3) {
  if (x3 == cplx(0.0)) return false;
  return (x1 / x3).imag() != 0.0 && (x2 / x3).imag() != 0.0;
}

HomogeneousTriple::HomogeneousTriple(cplx x1, cplx x2, cplx x3)
    : x1_(x1), x2_(x2), x3_(x3) {
  if (!admissible(x1, x2, x3)) {
    throw DomainError(
        "homogeneous triple requires x3 != 0, Im(x1/x3) != 0 and "
        "Im(x2/x3) != 0");
  }
}

namespace {

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

void require_h_pair(const WedgePair& pair, const char* op) {
  if (!pair.in_H_pair()) {
    throw DomainError(std::string(op) +
                      ": requires Im tau > 0 and Im sigma > 0 (use "
                      "z_k_extended for the extended domain)");
  }
}

}  // namespace

ApproxValue z_k(int k, const WedgePair& pair, const PrecisionPolicy& prec) {
  prec.validate();
  if (k < 1) throw DomainError("z_k: k must be >= 1");
  require_h_pair(pair, "z_k");

  const ext_cplx q = detail::exp_two_pi_i(pair.tau());
  const ext_cplx r = detail::exp_two_pi_i(pair.sigma());
  const ext_cplx pref = -lipschitz_prefactor(k) * static_cast<ext_real>(parity_sign(k));
  const double rho = static_cast<double>(std::max(std::abs(q), std::abs(r)));
  const detail::QSeriesTail tail(k, rho, 2.0 * static_cast<double>(std::abs(pref)),
                                 prec.epsilon);
  const auto sign = static_cast<ext_real>(parity_sign(k));

  ext_cplx sum{};
  ext_cplx qj(1.0L);
  ext_cplx rj(1.0L);
  for (std::size_t j = 1;; ++j) {
    qj *= q;
    rj *= r;
    sum += std::pow(static_cast<ext_real>(j), k - 1) * (qj - sign * rj) /
           ((1.0L - qj) * (1.0L - rj));
    if (tail.done(j)) return {to_double(pref * sum), tail.tail(j), j};
    if (j >= prec.max_terms) {
      detail::throw_truncation("z_k", pref * sum, tail.tail(j), j);
    }
  }
}

ApproxValue z_k_even_split(int k, const WedgePair& pair,
                           const PrecisionPolicy& prec) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("z_k_even_split: k must be even and >= 2");
  }
  require_h_pair(pair, "z_k_even_split");
  const ApproxValue dr = d_k(k, NomePoint(UpperHalfPoint(pair.sigma()).nome()), prec);
  const ApproxValue dq = d_k(k, NomePoint(UpperHalfPoint(pair.tau()).nome()), prec);
  return {dr.value - dq.value, dr.err_bound + dq.err_bound,
          dr.terms_used + dq.terms_used};
}

ApproxValue z_k_odd_split(int k, const WedgePair& pair,
                          const PrecisionPolicy& prec) {
  prec.validate();
  if (k < 1 || k % 2 == 0) {
    throw DomainError("z_k_odd_split: k must be odd and >= 1");
  }
  require_h_pair(pair, "z_k_odd_split");

  const ext_cplx q = detail::exp_two_pi_i(pair.tau());
  const ext_cplx r = detail::exp_two_pi_i(pair.sigma());
  const double aq = static_cast<double>(std::abs(q));
  const double ar = static_cast<double>(std::abs(r));
  const double pref_abs = static_cast<double>(std::abs(lipschitz_prefactor(k)));

  // Coprime pairs (a, b) with |q|^a |r|^b >= cutoff are summed; the rest is
  // bounded. For |x| < c, |D_k(x)| <= pref (|x|/c) qseries_tail_bound(k, c, 1),
  // and the dropped |x| sum to at most
  // c [(a* - 1)/(1 - |r|) + 1/((1 - |q|)(1 - |r|))], a* the first a with
  // |q|^a |r| < c.
  double cutoff = 0.0;
  double dropped = 0.0;
  if (aq > 0.0 && ar > 0.0) {
    cutoff = 0.5;
    for (int iter = 0; iter < 400; ++iter) {
      double a_star = 1.0;
      if (aq * ar >= cutoff) {
        a_star = std::floor(std::log(cutoff / ar) / std::log(aq)) + 1.0;
        while (std::pow(aq, a_star) * ar >= cutoff) a_star += 1.0;
      }
      const double mass =
          (a_star - 1.0) / (1.0 - ar) + 1.0 / ((1.0 - aq) * (1.0 - ar));
      dropped = 2.0 * pref_abs * qseries_tail_bound(k, cutoff, 1) * mass;
      if (dropped < 0.5 * prec.epsilon) break;
      cutoff *= 0.5;
    }
  }

  std::vector<ext_cplx> nomes;
  if (cutoff > 0.0) {
    ext_cplx qa = q;
    for (long long a = 1; static_cast<double>(std::abs(qa)) * ar >= cutoff; ++a) {
      ext_cplx x = qa * r;
      for (long long b = 1; static_cast<double>(std::abs(x)) >= cutoff; ++b) {
        if (std::gcd(a, b) == 1) nomes.push_back(x);
        x *= r;
        if (nomes.size() > prec.max_terms) {
          throw TruncationError(
              "z_k_odd_split: coprime pair count exceeds max_terms",
              ApproxValue{});
        }
      }
      qa *= q;
    }
  }

  PrecisionPolicy inner = prec;
  inner.epsilon = prec.epsilon / (4.0 * static_cast<double>(nomes.size() + 2));

  const ApproxValue dq = d_k(k, NomePoint(to_double(q)), inner);
  const ApproxValue dr = d_k(k, NomePoint(to_double(r)), inner);
  cplx total = dq.value + dr.value;
  double err = dq.err_bound + dr.err_bound + dropped;
  std::size_t terms = dq.terms_used + dr.terms_used;
  for (const ext_cplx& x : nomes) {
    const ApproxValue d = d_k(k, NomePoint(to_double(x)), inner);
    total += 2.0 * d.value;
    err += 2.0 * d.err_bound;
    terms += d.terms_used;
  }
  return {total, err, terms};
}

ApproxValue z_k_lattice(int k, const WedgePair& pair,
                        const PrecisionPolicy& prec) {
  prec.validate();
  if (k % 2 == 0 || k < 5) {
    throw DomainError(
        "z_k_lattice: requires odd k >= 5; for k = 1, 3 the lattice series is "
        "not absolutely convergent (regularization not supported)");
  }
  require_h_pair(pair, "z_k_lattice");

  const ext_cplx t = to_ext(pair.tau());
  const ext_cplx s = to_ext(pair.sigma());
  const int radius = prec.lattice_radius;

  // (a, b, c) and (-a, -b, -c) contribute equally for odd k, and
  // epsilon(a, b) vanishes unless a, b share a sign. What remains is
  // a, b >= 0, (a, b) != (0, 0), with weight 2 epsilon(a, b) in {1, 2}.
  ext_cplx total{};
  ext_cplx shell{};
  std::size_t count = 0;
  auto column = [&](int a, int b, int c_from, int c_to, int c_step) {
    const ext_real weight = (a > 0 && b > 0) ? 2.0L : 1.0L;
    const ext_cplx base = static_cast<ext_real>(a) * t + static_cast<ext_real>(b) * s;
    ext_cplx acc{};
    for (int c = c_from; c <= c_to; c += c_step) {
      acc += 1.0L / ipow(base + static_cast<ext_real>(c), k);
      ++count;
    }
    shell += weight * acc;
  };
  for (int sh = 1; sh <= radius; ++sh) {
    shell = ext_cplx{};
    for (int a = 0; a <= sh; ++a) {
      for (int b = 0; b <= sh; ++b) {
        if (a == 0 && b == 0) continue;
        if (a == sh || b == sh) {
          column(a, b, -sh, sh, 1);
        } else {
          column(a, b, -sh, sh, 2 * sh);
        }
      }
    }
    total += shell;
  }
  ApproxValue out;
  out.value = to_double(total);
  out.err_bound =
      static_cast<double>(std::abs(shell)) * radius / static_cast<double>(k - 4);
  out.terms_used = count;
  return out;
}

ApproxValue z_k_extended(int k, const ExtendedPair& pair,
                         const PrecisionPolicy& prec) {
  cplx tau = pair.tau();
  cplx sigma = pair.sigma();
  int sign = 1;
  if (tau.imag() < 0.0) {
    tau = -tau;
    sign *= parity_sign(k);
  }
  if (sigma.imag() < 0.0) {
    sigma = -sigma;
    sign *= parity_sign(k);
  }
  ApproxValue v = z_k(k, WedgePair(tau, sigma), prec);
  v.value *= static_cast<double>(sign);
  return v;
}

ApproxValue z_k_homogeneous(int k, const HomogeneousTriple& x,
                            const PrecisionPolicy& prec) {
  const ExtendedPair pair(x.x1() / x.x3(), x.x2() / x.x3());
  ApproxValue v = z_k_extended(k, pair, prec);
  const cplx scale = ipow(x.x3(), -k);
  v.value *= scale;
  v.err_bound *= std::abs(scale);
  return v;
}

cplx anomaly_a(int k, cplx tau, cplx sigma) {
  if (tau == cplx(0.0) || sigma == cplx(0.0)) {
    throw DomainError("anomaly_a: tau and sigma must be nonzero");
  }
  switch (k) {
    case 1:
      return -0.5 + 1.0 / (2.0 * tau) - 1.0 / (2.0 * sigma) +
             sigma / (6.0 * tau) + tau / (6.0 * sigma) +
             1.0 / (6.0 * tau * sigma);
    case 2:
      return -1.0 / tau + 1.0 / sigma - 1.0 / (tau * sigma);
    case 3:
      return 1.0 / (tau * sigma);
    default:
      throw DomainError("anomaly_a: k must be 1, 2 or 3");
  }
}

LipschitzSides lipschitz_both_sides(int k, cplx rho,
                                    const PrecisionPolicy& prec) {
  prec.validate();
  if (k < 2) throw DomainError("lipschitz_both_sides: k must be >= 2");
  if (!(rho.imag() > 0.0)) {
    throw DomainError("lipschitz_both_sides: requires Im rho > 0");
  }
  LipschitzSides out;

  {
    const int radius = prec.lattice_radius;
    const ext_cplx re = to_ext(rho);
    ext_cplx sum{};
    for (int n = radius; n >= 1; --n) {
      const auto nn = static_cast<ext_real>(n);
      sum += 1.0L / ipow(re + nn, k) + 1.0L / ipow(re - nn, k);
    }
    sum += 1.0L / ipow(re, k);
    // (rho - n)^(-k) = (-1)^k (n - rho)^(-k)
    const ApproxValue upper = hurwitz_tail(k, rho, radius + 1);
    const ApproxValue lower = hurwitz_tail(k, -rho, radius + 1);
    const cplx tails = upper.value + static_cast<double>(parity_sign(k)) * lower.value;
    out.left.value = to_double(sum) + tails;
    out.left.err_bound = upper.err_bound + lower.err_bound;
    out.left.terms_used = 2 * static_cast<std::size_t>(radius) + 1 +
                          upper.terms_used + lower.terms_used;
  }

  {
    const ext_cplx pref = lipschitz_prefactor(k);
    const ext_cplx x = detail::exp_two_pi_i(rho);
    const detail::QSeriesTail tail(k, static_cast<double>(std::abs(x)),
                                   static_cast<double>(std::abs(pref)), prec.epsilon);
    ext_cplx sum{};
    ext_cplx xj(1.0L);
    for (std::size_t j = 1;; ++j) {
      xj *= x;
      sum += std::pow(static_cast<ext_real>(j), k - 1) * xj;
      if (tail.done(j)) {
        out.right = {to_double(pref * sum), tail.tail(j), j};
        break;
      }
      if (j >= prec.max_terms) {
        detail::throw_truncation("lipschitz_both_sides", pref * sum, tail.tail(j), j);
      }
    }
  }
  return out;
}

}  // namespace ezv
