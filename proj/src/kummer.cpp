// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "dunklkit/kummer.hpp"

#include <cmath>

#include "dunklkit/specfun.hpp"

namespace dunklkit::kummer {

using specfun::gamma_fn;
using specfun::kummer_1f1;

void KummerParams::validate() const {
    if (!(k > -0.5))
        throw DomainError("KummerParams: requires k > -1/2");
    if (!(p > 0.0))
        throw DomainError("KummerParams: requires p > 0");
}

double sonine_closed(double k, double p, double x) {
    if (!(k > -1.0) || !(p > 0.0) || !(x >= 0.0))
        throw DomainError("sonine_closed: requires k > -1, p > 0, x >= 0");
    if (x == 0.0)
        return k == 0.0 ? 0.5 / p : 0.0;
    return std::pow(x, k) * std::exp(-x * x / (4.0 * p)) /
           std::pow(2.0 * p, k + 1.0);
}

double sonine_quadrature(double k, double p, double x,
                         const quad::QuadratureConfig& cfg) {
    if (!(k >= 0.0) || !(p > 0.0) || !(x >= 0.0))
        throw DomainError("sonine_quadrature: requires k >= 0, p > 0, x >= 0");
    auto f = [k, p, x](double t) {
        if (t == 0.0)
            return 0.0;  // t^{k+1} vanishes, J_k bounded for k >= 0
        return specfun::bessel_j(k, x * t) * std::exp(-p * t * t) *
               std::pow(t, k + 1.0);
    };
    return quad::integrate_semi_infinite(
        f, quad::Envelope{1.0, 0.0, p, k + 1.0}, cfg);
}

double i_kp(const KummerParams& kp, double x) {
    kp.validate();
    return gamma_fn(kp.k + 0.5) * std::exp(x * x / (4.0 * kp.p)) /
           (2.0 * std::pow(kp.p, kp.k + 0.5));
}

double j_kp(const KummerParams& kp, double x) {
    kp.validate();
    if (x == 0.0)
        return 0.0;
    return gamma_fn(kp.k + 1.0) * x /
           (2.0 * (2.0 * kp.k + 1.0) * std::pow(kp.p, kp.k + 1.0)) *
           kummer_1f1(kp.k + 1.0, kp.k + 1.5, x * x / (4.0 * kp.p));
}

double psi_kp(const KummerParams& kp, double x) {
    return i_kp(kp, x) - j_kp(kp, x);
}

double phi_kp(const KummerParams& kp, double x) {
    return i_kp(kp, x) + j_kp(kp, x);
}

double laplace_dunkl_oracle(double k, double p, double rho, int sign, double x,
                            const quad::QuadratureConfig& cfg) {
    core::require_multiplicity(k);
    if (!(p > 0.0) || !(rho >= 0.0))
        throw DomainError("laplace_dunkl_oracle: requires p > 0, rho >= 0");
    if (sign != 1 && sign != -1)
        throw DomainError("laplace_dunkl_oracle: sign must be +1 or -1");
    const double sx = sign * x;
    auto f = [k, p, rho, sx](double t) {
        return core::dunkl_kernel(k, sx, t) * std::exp(-p * t * t) *
               std::pow(t, rho);
    };
    // |E_k(sx, t)| <= e^{|x| t}
    return quad::integrate_semi_infinite(
        f, quad::Envelope{1.0, std::fabs(x), p, rho}, cfg);
}

AdjudicationRecord adjudicate_theorem6(const std::vector<double>& k_list,
                                       const std::vector<double>& p_list,
                                       const std::vector<double>& x_grid,
                                       const quad::QuadratureConfig& cfg) {
    if (k_list.empty() || p_list.empty() || x_grid.empty())
        throw DomainError("adjudicate_theorem6: grids must be nonempty");
    AdjudicationRecord rec;
    rec.k_list = k_list;
    rec.p_list = p_list;
    rec.x_grid = x_grid;
    for (int uses_psi = 1; uses_psi >= 0; --uses_psi)
        for (int rho2k = 1; rho2k >= 0; --rho2k)
            for (int sign = -1; sign <= 1; sign += 2)
                rec.combos.push_back(
                    AdjudicationCombo{uses_psi == 1, rho2k == 1, sign, 0.0});

    for (auto& combo : rec.combos) {
        double worst = 0.0;
        for (double k : k_list)
            for (double p : p_list) {
                const KummerParams kp{k, p};
                for (double x : x_grid) {
                    const double rho = combo.rho_is_2k ? 2.0 * k : 2.0 * k + 1.0;
                    const double oracle =
                        laplace_dunkl_oracle(k, p, rho, combo.sign, x, cfg);
                    const double closed =
                        combo.uses_psi ? psi_kp(kp, x) : phi_kp(kp, x);
                    const double denom = std::max(std::fabs(oracle), 1e-30);
                    worst = std::max(worst, std::fabs(closed - oracle) / denom);
                }
            }
        combo.max_rel_err = worst;
    }

    int matches = 0;
    for (std::size_t i = 0; i < rec.combos.size(); ++i) {
        const auto& c = rec.combos[i];
        if (c.sign == -1 && c.max_rel_err <= rec.match_tol) {
            ++matches;
            rec.matched_combo = (int)i;
        }
        if (c.sign == 1 && !c.uses_psi && c.rho_is_2k &&
            c.max_rel_err <= rec.match_tol)
            rec.mirror_match = true;
    }
    rec.unique_match = matches == 1;

    if (rec.matched_combo >= 0) {
        bool all_pass = true;
        const auto& mc = rec.combos[rec.matched_combo];
        for (double k : k_list)
            for (double p : p_list) {
                MeasureSpec mu;
                mu.density = MeasureSpec::Density{
                    1.0, p, mc.rho_is_2k ? 2.0 * k : 2.0 * k + 1.0};
                const mono::CMReport cm =
                    mono::check_dunkl_cm(k, make_laplace_spec(mu), 3.0, 8, 41, cfg);
                all_pass = all_pass && cm.pass;
            }
        rec.cm_pass = all_pass;
    }
    return rec;
}

} // namespace dunklkit::kummer
