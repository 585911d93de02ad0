#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ezv/elliptic_gamma.hpp"
#include "ezv/elliptic_zeta.hpp"
#include "ezv/sl3.hpp"

namespace ezv {

/// Outcome of one identity check. pass is true exactly when
/// residual <= tolerance.
struct ResidualReport {
  std::string identity_name;
  std::vector<std::pair<std::string, std::string>> parameters;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

ResidualReport make_report(std::string name,
                           std::vector<std::pair<std::string, std::string>> parameters,
                           double residual, double tolerance);

/// Orders reports by identity_name, then parameters.
void sort_reports(std::vector<ResidualReport>& reports);

/// "re,im" with 17 significant digits.
std::string format_complex(cplx z);

namespace tolerance {
inline constexpr double additive = 1e-9;
inline constexpr double modular = 1e-8;
inline constexpr double cubic_fit = 1e-7;
inline constexpr double functional_equation = 1e-10;
inline constexpr double product_three_term = 1e-10;
inline constexpr double taylor_link = 1e-8;
inline constexpr double lipschitz = 1e-10;
inline constexpr double cocycle = 1e-8;
}  // namespace tolerance

/// Z_k(tau,sigma) - Z_k(tau,tau+sigma) - Z_k(tau+sigma,sigma), k = 1..8.
ResidualReport check_three_term_additive(int k, const WedgePair& pair,
                                         const PrecisionPolicy& prec = {});

enum class AnomalyMode { include, omit };

/// Z_k(tau,sigma) - tau^-k Z_k(-1/tau, sigma/tau) - (-sigma)^-k Z_k(-tau/sigma, -1/sigma)
/// minus i pi a_k for k <= 3 (unless omitted). Requires a wedge pair.
ResidualReport check_three_term_modular(int k, const WedgePair& pair,
                                        const PrecisionPolicy& prec = {},
                                        AnomalyMode anomaly = AnomalyMode::include);

/// Builds Z(tau,sigma) = G_k(sigma) - G_k(tau) from the q-expansion and checks
/// both three-term relations (weights tau^-k and sigma^-k). Even k >= 4.
ResidualReport check_prop1_forward(int k, const WedgePair& pair,
                                   const PrecisionPolicy& prec = {});

/// Relative residual of Gamma(z+sigma) - theta0(z,tau) Gamma(z).
ResidualReport check_functional_equation(const GammaArg& arg,
                                         const PrecisionPolicy& prec = {});

/// Relative residual of the product three-term identity.
ResidualReport check_thm2_first(const GammaArg& arg, const PrecisionPolicy& prec = {});

/// Residual of the cubic fit of the modular combination of log Gamma.
ResidualReport check_thm2_q(const WedgePair& pair, int sample_count = 16,
                            const PrecisionPolicy& prec = {});

/// max_j |c_j - (-1)^j Z_j / j| over j = 1..k_max.
ResidualReport check_log_eg(const WedgePair& pair, int k_max = 6,
                            const PrecisionPolicy& prec = {});

/// |left - right| of the Lipschitz formula.
ResidualReport check_lipschitz(int k, cplx rho, const PrecisionPolicy& prec = {});

struct LimitRow {
  cplx sigma;
  cplx value;
  double error = 0.0;
};

/// Rows of sigma^k Z_k(tau_large, sigma) against zeta(k), k = 2..6.
std::vector<LimitRow> limit_zeta_probe(int k, std::span<const cplx> sigmas,
                                       const UpperHalfPoint& tau_large,
                                       const PrecisionPolicy& prec = {});

enum class GammaLimitSource {
  elliptic_zeta,  // sigma Z_1(tau, sigma) + ln(-2 pi i sigma)
  divisor_d1,     // sigma D_1(e^(2 pi i sigma)) + ln(-2 pi i sigma)
};

/// Rows of the Euler-constant limit; error is against euler_gamma_const().
std::vector<LimitRow> limit_euler_gamma_probe(
    std::span<const cplx> sigmas, const UpperHalfPoint& tau_large,
    const PrecisionPolicy& prec = {},
    GammaLimitSource source = GammaLimitSource::elliptic_zeta);

/// The 1-cocycle phi_word(x) for k >= 4, built from
///   phi_e12(x) = Zt_k(x1 - x2, x1, x3), phi_e32(x) = Zt_k(x2 - x3, x3, x1),
///   phi_eij = 0 otherwise,
/// with phi_gh(x) = phi_g(x) + phi_h(g^-1 x) and phi_{g^-1}(x) = -phi_g(g x).
/// Throws DomainError naming the letter whose evaluation point leaves the
/// domain of Zt_k.
cplx cocycle_eval(int k, const GeneratorWord& word, const HomogeneousTriple& x,
                  const PrecisionPolicy& prec = {});

/// |phi_first(x) - phi_second(x)| for two words that must denote the same
/// matrix (DomainError otherwise).
ResidualReport check_cocycle(int k, const GeneratorWord& first,
                             const GeneratorWord& second, const HomogeneousTriple& x,
                             const PrecisionPolicy& prec = {});

}  // namespace ezv
