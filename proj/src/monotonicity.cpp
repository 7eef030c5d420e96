// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "dunklkit/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace dunklkit::mono {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> chebyshev_grid(double sigma, int count) {
    if (!(sigma > 0.0))
        throw DomainError("chebyshev_grid: requires sigma > 0");
    if (count < 3)
        throw DomainError("chebyshev_grid: requires at least 3 points");
    const double r = sigma * (1.0 - 1e-3);
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) {
        double x = r * std::cos(kPi * (2.0 * i + 1.0) / (2.0 * count));
        if (std::fabs(x) < 1e-14 * sigma)
            x = 0.0;
        g[count - 1 - i] = x;
    }
    if (std::none_of(g.begin(), g.end(), [](double x) { return x == 0.0; }))
        g.insert(std::upper_bound(g.begin(), g.end(), 0.0), 0.0);
    return g;
}

CMReport check_dunkl_cm(double k, const FunctionSpec& phi, double sigma,
                        int orders, int grid_size,
                        const quad::QuadratureConfig& cfg) {
    core::require_multiplicity(k);
    if (orders < 0)
        throw DomainError("check_dunkl_cm: orders must be >= 0");
    CMReport rep;
    rep.k = k;
    rep.sigma = sigma;
    rep.orders_checked = orders;
    rep.mode = phi.is_structured() ? CMMode::exact : CMMode::numeric;
    if (rep.mode == CMMode::exact && orders > 12)
        throw ModeError("check_dunkl_cm: exact mode capped at 12 orders");
    if (rep.mode == CMMode::numeric && orders > 4)
        throw ModeError("check_dunkl_cm: numeric mode capped at 4 orders");
    rep.grid = chebyshev_grid(sigma, grid_size);
    rep.per_order_min.resize(orders + 1);

    auto phi_value = [&](double x) {
        return core::eval_function_spec(phi, k, x, cfg);
    };

    for (int n = 0; n <= orders; ++n) {
        std::vector<double> vals(rep.grid.size());
        for (std::size_t i = 0; i < rep.grid.size(); ++i) {
            const double x = rep.grid[i];
            double signed_power;
            if (rep.mode == CMMode::exact)
                signed_power = core::dunkl_operator_power_exact(k, phi, n, x, cfg);
            else
                signed_power = core::dunkl_operator_power_numeric(k, phi_value, n, x);
            vals[i] = (n % 2 == 0 ? signed_power : -signed_power);
        }
        double mn = vals[0], scale = 0.0;
        for (double v : vals) {
            mn = std::min(mn, v);
            scale = std::max(scale, std::fabs(v));
        }
        rep.per_order_min[n] = mn;
        const double tol = rep.mode == CMMode::exact
                               ? 1e-10 * std::max(1.0, scale)
                               : 1e-6 * std::pow(10.0, n);
        if (!rep.first_violation && mn < -tol) {
            for (std::size_t i = 0; i < rep.grid.size(); ++i) {
                if (vals[i] < -tol) {
                    rep.first_violation = CMViolation{n, rep.grid[i], vals[i]};
                    break;
                }
            }
        }
    }
    rep.pass = !rep.first_violation.has_value();
    return rep;
}

namespace {

// Translation pairing of the radialized measure spec through its scaled
// oscillatory representation: for an atom of mass w at location t >= 0,
//   pair(x_j, x_l) = 2 w * int_0^inf [a(s x_j z) a(s x_l z) + b(s x_j z) b(s x_l z)]
//                        e^{-z^2/4} / (2 sqrt(pi)) dz,     s = sqrt(t).
// At k = 0 the bracket collapses to cos((x_j - x_l) s z) and the pairing is
// the classical shifted Gram entry e^{-t (x_j - x_l)^2}.
double radial_pair_component(double k, double s, double xj, double xl,
                             const quad::QuadratureConfig& cfg) {
    const double norm = 1.0 / (2.0 * std::sqrt(kPi));
    auto integrand = [&](double z) {
        const double uj = s * xj * z;
        const double ul = s * xl * z;
        return (core::osc_component_a(k, uj) * core::osc_component_a(k, ul) +
                core::osc_component_b(k, uj) * core::osc_component_b(k, ul)) *
               norm * std::exp(-z * z / 4.0);
    };
    const double amp =
        norm * (1.0 + s * std::fabs(xj)) * (1.0 + s * std::fabs(xl));
    return 2.0 * quad::integrate_semi_infinite(
                     integrand, quad::Envelope{amp, 0.0, 0.25, 2.0}, cfg);
}

double radial_gram_entry(double k, const MeasureSpec& mu, double xj, double xl,
                         const quad::QuadratureConfig& cfg) {
    double acc = 0.0;
    for (const auto& atom : mu.atoms) {
        if (atom.mass == 0.0)
            continue;
        acc += atom.mass *
               radial_pair_component(k, std::sqrt(atom.location), xj, xl, cfg);
    }
    if (mu.density && mu.density->scale > 0.0) {
        const auto d = *mu.density;
        auto outer = [&](double t) {
            return d.scale * std::exp(-d.p * t * t) * std::pow(t, d.rho) *
                   radial_pair_component(k, std::sqrt(t), xj, xl, cfg);
        };
        // |pair| <= 2 (1 + t |xj| |xl| <z^2>), hence the extra power of t
        const double amp = 2.0 * d.scale * (1.0 + std::fabs(xj)) *
                           (1.0 + std::fabs(xl));
        acc += quad::integrate_semi_infinite(
            outer, quad::Envelope{amp, 0.0, d.p, d.rho + 1.0}, cfg);
    }
    return acc;
}

} // namespace

GramReport check_dunkl_pd(double k, const FunctionSpec& phi,
                          const std::vector<double>& points,
                          const quad::QuadratureConfig& cfg) {
    core::require_multiplicity(k);
    if (points.empty() || points.size() > 12)
        throw DomainError("check_dunkl_pd: needs 1..12 points");
    std::set<double> distinct(points.begin(), points.end());
    if (distinct.size() != points.size())
        throw DomainError("check_dunkl_pd: points must be distinct");
    if (!phi.is_even())
        throw DomainError("check_dunkl_pd: requires an even real spec");

    const int n = (int)points.size();
    GramReport rep;
    rep.points = points;
    rep.gram.assign((std::size_t)n * n, {0.0, 0.0});

    if (const auto* rl = std::get_if<FunctionSpec::RadialLaplace>(&phi.body)) {
        for (int j = 0; j < n; ++j)
            for (int l = j; l < n; ++l) {
                const double v =
                    radial_gram_entry(k, rl->measure, points[j], points[l], cfg);
                rep.gram[j * n + l] = v;
                rep.gram[l * n + j] = v;
            }
        rep.hermitian_defect = 0.0;  // pairing is symmetric by construction
    } else {
        const transform::TransformConfig tcfg = transform::TransformConfig::make(k, cfg);
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                rep.gram[j * n + l] =
                    transform::dunkl_translate(tcfg, phi, -points[j], points[l]);
        double defect = 0.0;
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                defect = std::max(defect,
                                  std::abs(rep.gram[j * n + l] -
                                           std::conj(rep.gram[l * n + j])));
        rep.hermitian_defect = defect;
        for (int j = 0; j < n; ++j)
            for (int l = j; l < n; ++l) {
                const std::complex<double> h =
                    0.5 * (rep.gram[j * n + l] + std::conj(rep.gram[l * n + j]));
                rep.gram[j * n + l] = h;
                rep.gram[l * n + j] = std::conj(h);
            }
    }

    rep.min_eigenvalue = hermitian_eigen_min(rep.gram, n);
    double max_diag = 0.0;
    for (int j = 0; j < n; ++j)
        max_diag = std::max(max_diag, rep.gram[j * n + j].real());
    rep.psd = rep.hermitian_defect <= kHermTol &&
              rep.min_eigenvalue >= -kPsdTol * std::max(max_diag, 0.0);
    return rep;
}

SchoenbergReport check_schoenberg(double k, const MeasureSpec& mu, double sigma,
                                  int orders, const std::vector<double>& points,
                                  const quad::QuadratureConfig& cfg) {
    SchoenbergReport rep;
    rep.cm = check_dunkl_cm(k, make_laplace_spec(mu), sigma, orders, 41, cfg);
    rep.pd = check_dunkl_pd(k, make_radial_laplace_spec(mu), points, cfg);
    rep.pass = rep.cm.pass && rep.pd.psd;
    return rep;
}

CMReport check_vk_preserves_cm(
    double k, const std::function<double(int, double)>& psi_derivative,
    int max_order, double a, double b, int orders, int n_nodes) {
    core::require_multiplicity(k);
    if (orders > max_order)
        throw DomainError(
            "check_vk_preserves_cm: derivatives available only up to order " +
            std::to_string(max_order));
    if (!(a < b))
        throw DomainError("check_vk_preserves_cm: requires a < b");
    CMReport rep;
    rep.k = k;
    rep.sigma = 0.5 * (b - a);
    rep.orders_checked = orders;
    rep.mode = CMMode::exact;
    const double mid = 0.5 * (a + b);
    rep.grid = chebyshev_grid(rep.sigma, 41);
    for (double& x : rep.grid)
        x += mid;
    rep.per_order_min.resize(orders + 1);
    for (int n = 0; n <= orders; ++n) {
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        std::vector<double> vals(rep.grid.size());
        for (std::size_t i = 0; i < rep.grid.size(); ++i) {
            const double x = rep.grid[i];
            double v;
            if (k < core::kZeroMultiplicity)
                v = sign * psi_derivative(n, x);
            else
                v = sign * core::intertwine(
                               k, [&](double t) { return psi_derivative(n, t); },
                               x, n_nodes);
            vals[i] = v;
        }
        double mn = vals[0], scale = 0.0;
        for (double v : vals) {
            mn = std::min(mn, v);
            scale = std::max(scale, std::fabs(v));
        }
        rep.per_order_min[n] = mn;
        const double tol = 1e-10 * std::max(1.0, scale);
        if (!rep.first_violation && mn < -tol) {
            for (std::size_t i = 0; i < rep.grid.size(); ++i)
                if (vals[i] < -tol) {
                    rep.first_violation = CMViolation{n, rep.grid[i], vals[i]};
                    break;
                }
        }
    }
    rep.pass = !rep.first_violation.has_value();
    return rep;
}

ConvexityReport check_convexity_theorem(double k, const FunctionSpec& phi,
                                        double hi, int count,
                                        const quad::QuadratureConfig& cfg) {
    core::require_multiplicity(k);
    if (!(hi > 0.0) || count < 5)
        throw DomainError("check_convexity_theorem: needs hi > 0 and >= 5 points");
    if (!phi.is_even())
        throw DomainError("check_convexity_theorem: requires an even real spec");
    const transform::TransformConfig tcfg = transform::TransformConfig::make(k, cfg);
    ConvexityReport rep;
    rep.grid.resize(count);
    rep.phi_k_values.resize(count);
    for (int i = 0; i < count; ++i) {
        const double x = hi * i / (count - 1.0);
        rep.grid[i] = x;
        // D_k phi(x) |x|^{2k+1} = [D_k phi(x) |x|^{2k}] * |x|
        rep.phi_k_values[i] =
            transform::weighted_transform_even(tcfg, phi, x) * std::fabs(x);
    }
    double scale = 0.0;
    for (double v : rep.phi_k_values)
        scale = std::max(scale, std::fabs(v));
    bool convex = true;
    for (int i = 1; i + 1 < count; ++i) {
        const double d2 = rep.phi_k_values[i - 1] - 2.0 * rep.phi_k_values[i] +
                          rep.phi_k_values[i + 1];
        if (d2 < -1e-9 * std::max(1.0, scale)) {
            convex = false;
            break;
        }
    }
    rep.hypothesis_convex = convex;
    rep.hypothesis_decay =
        std::fabs(rep.phi_k_values[count - 1]) <= 1e-2 * std::max(scale, 1e-300) ||
        scale == 0.0;
    rep.applicable = rep.hypothesis_convex && rep.hypothesis_decay;
    if (!rep.applicable) {
        rep.verdict = ConvexityReport::Verdict::silent;
        return rep;
    }
    double wmin = 0.0, wscale = 0.0;
    for (int i = 0; i < count; ++i) {
        const double w = transform::inverse_intertwine(tcfg, phi, rep.grid[i]);
        wmin = std::min(wmin, w);
        wscale = std::max(wscale, std::fabs(w));
    }
    rep.conclusion_w_min = wmin;
    rep.conclusion_w_nonneg = wmin >= -1e-8 * std::max(1.0, wscale);
    FunctionSpec sqrt_comp = make_raw_spec(
        [&phi, k, cfg](double x) {
            return core::eval_function_spec(phi, k, std::sqrt(std::fabs(x)), cfg);
        },
        Parity::even);
    const CMReport cm = check_dunkl_cm(k, sqrt_comp, hi * hi, 2, 15, cfg);
    rep.conclusion_cm_pass = cm.pass;
    rep.verdict = rep.conclusion_w_nonneg && rep.conclusion_cm_pass
                      ? ConvexityReport::Verdict::pass
                      : ConvexityReport::Verdict::fail;
    return rep;
}

std::vector<double> hermitian_eigenvalues(
    const std::vector<std::complex<double>>& matrix, int n) {
    if (n < 1 || n > 16)
        throw DomainError("hermitian_eigenvalues: n must be in [1, 16]");
    if ((int)matrix.size() != n * n)
        throw DomainError("hermitian_eigenvalues: matrix size mismatch");
    std::vector<std::complex<double>> a = matrix;
    double scale = 0.0;
    for (const auto& z : a)
        scale = std::max(scale, std::abs(z));
    if (scale == 0.0)
        return std::vector<double>(n, 0.0);
    double defect = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            defect = std::max(defect, std::abs(a[p * n + q] - std::conj(a[q * n + p])));
    if (defect > kHermTol * std::max(1.0, scale))
        throw NotHermitianError("hermitian_eigenvalues: matrix is not Hermitian");
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            const std::complex<double> h =
                0.5 * (a[p * n + q] + std::conj(a[q * n + p]));
            a[p * n + q] = h;
            a[q * n + p] = std::conj(h);
        }

    // Cyclic complex Jacobi: strip the phase of a_pq, then rotate.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off += std::norm(a[p * n + q]);
        if (off <= 1e-30 * scale * scale)
            break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const std::complex<double> apq = a[p * n + q];
                const double mag = std::abs(apq);
                if (mag <= 1e-18 * scale)
                    continue;
                const std::complex<double> beta = apq / mag;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) /
                    (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Columns: A <- A U with U_pp = c, U_pq = s, U_qp = -s conj(beta),
                // U_qq = c conj(beta).
                for (int r = 0; r < n; ++r) {
                    const std::complex<double> vp = a[r * n + p];
                    const std::complex<double> vq = a[r * n + q];
                    a[r * n + p] = c * vp - s * std::conj(beta) * vq;
                    a[r * n + q] = s * vp + c * std::conj(beta) * vq;
                }
                // Rows: A <- U^H A.
                for (int r = 0; r < n; ++r) {
                    const std::complex<double> wp = a[p * n + r];
                    const std::complex<double> wq = a[q * n + r];
                    a[p * n + r] = c * wp - s * beta * wq;
                    a[q * n + r] = s * wp + c * beta * wq;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int p = 0; p < n; ++p)
        ev[p] = a[p * n + p].real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double hermitian_eigen_min(const std::vector<std::complex<double>>& matrix,
                           int n) {
    return hermitian_eigenvalues(matrix, n).front();
}

} // namespace dunklkit::mono
