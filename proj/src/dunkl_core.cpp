// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "dunklkit/dunkl_core.hpp"

#include <cmath>
#include <limits>

#include "dunklkit/specfun.hpp"

namespace dunklkit::core {

using specfun::normalized_bessel;
using specfun::normalized_bessel_i;

void require_multiplicity(double k) {
    if (!(k >= 0.0))
        throw DomainError("multiplicity parameter must satisfy k >= 0");
}

double dunkl_kernel(double k, double x, double y) {
    require_multiplicity(k);
    const double u = x * y;
    if (k < kZeroMultiplicity)
        return std::exp(u);
    const double v = normalized_bessel_i(k - 0.5, u) +
                     u / (2.0 * k + 1.0) * normalized_bessel_i(k + 0.5, u);
    if (!(v > 0.0))
        throw PositivityError("dunkl_kernel: nonpositive value computed");
    return v;
}

double osc_component_a(double k, double u) {
    if (k < kZeroMultiplicity)
        return std::cos(u);
    return normalized_bessel(k - 0.5, u);
}

double osc_component_b(double k, double u) {
    if (k < kZeroMultiplicity)
        return std::sin(u);
    return u / (2.0 * k + 1.0) * normalized_bessel(k + 0.5, u);
}

std::complex<double> dunkl_kernel_osc(double k, double x, double y) {
    require_multiplicity(k);
    const double u = x * y;
    return {osc_component_a(k, u), -osc_component_b(k, u)};
}

NumericDerivative dunkl_operator_numeric_info(
    double k, const std::function<double(double)>& f, double x, double step) {
    require_multiplicity(k);
    const double eps = std::numeric_limits<double>::epsilon();
    const double h =
        step > 0.0 ? step : std::cbrt(eps) * std::max(1.0, std::fabs(x));
    const double d5 = (8.0 * (f(x + h) - f(x - h)) -
                       (f(x + 2.0 * h) - f(x - 2.0 * h))) /
                      (12.0 * h);
    if (x == 0.0)
        return {(1.0 + 2.0 * k) * d5, h};
    return {d5 + k * (f(x) - f(-x)) / x, h};
}

double dunkl_operator_numeric(double k, const std::function<double(double)>& f,
                              double x, double step) {
    return dunkl_operator_numeric_info(k, f, x, step).value;
}

double dunkl_operator_power_numeric(double k,
                                    const std::function<double(double)>& f,
                                    int n, double x) {
    if (n < 0)
        throw DomainError("dunkl_operator_power_numeric: requires n >= 0");
    if (n > 4)
        throw ModeError("dunkl_operator_power_numeric: numeric mode capped at n <= 4");
    if (n == 0)
        return f(x);
    std::function<double(double)> g = f;
    for (int level = 1; level < n; ++level) {
        std::function<double(double)> prev = g;
        g = [k, prev](double t) { return dunkl_operator_numeric(k, prev, t); };
    }
    return dunkl_operator_numeric(k, g, x);
}

double dunkl_operator_power_exact(double k, const FunctionSpec& spec, int n,
                                  double x, const quad::QuadratureConfig& cfg) {
    require_multiplicity(k);
    if (n < 0)
        throw DomainError("dunkl_operator_power_exact: requires n >= 0");
    if (const auto* kd = std::get_if<FunctionSpec::KernelDecaying>(&spec.body)) {
        const double y = kd->y;
        return std::pow(-y, n) * dunkl_kernel(k, -x, y);
    }
    if (const auto* ld = std::get_if<FunctionSpec::LaplaceDunkl>(&spec.body)) {
        const MeasureSpec& mu = ld->measure;
        double acc = 0.0;
        for (const auto& atom : mu.atoms)
            acc += atom.mass * std::pow(atom.location, n) *
                   dunkl_kernel(k, -x, atom.location);
        if (mu.density && mu.density->scale > 0.0) {
            const auto d = *mu.density;
            // |E_k(-x, t)| <= e^{|x| t}
            const quad::Envelope env{d.scale, std::fabs(x), d.p, d.rho + n};
            acc += quad::integrate_semi_infinite(
                [&](double t) {
                    return d.scale * std::pow(t, n + d.rho) *
                           std::exp(-d.p * t * t) * dunkl_kernel(k, -x, t);
                },
                env, cfg);
        }
        return (n % 2 == 0 ? 1.0 : -1.0) * acc;
    }
    throw StructureError(
        "dunkl_operator_power_exact: spec must be kernel- or measure-structured");
}

double intertwine_constant(double k) {
    if (!(k > 0.0))
        throw DomainError("intertwine: requires k > 0 (use the k = 0 identity)");
    using specfun::log_gamma;
    return std::exp(log_gamma(k + 0.5) - log_gamma(0.5) - log_gamma(k));
}

double intertwine(double k, const std::function<double(double)>& f, double x,
                  int n_nodes) {
    const double c = intertwine_constant(k);
    const quad::QuadratureRule rule = quad::gauss_jacobi_rule(n_nodes, k - 1.0, k);
    // Weight (1-t)^{k-1}(1+t)^k lives in the rule; only f(x t) is sampled.
    return c * quad::apply_rule(
                   rule, [&](double t) { return f(x * t); }, -1.0, 1.0);
}

double eval_function_spec(const FunctionSpec& spec, double k, double x,
                          const quad::QuadratureConfig& cfg) {
    require_multiplicity(k);
    if (const auto* kd = std::get_if<FunctionSpec::KernelDecaying>(&spec.body))
        return dunkl_kernel(k, -x, kd->y);
    if (std::holds_alternative<FunctionSpec::LaplaceDunkl>(spec.body))
        return dunkl_operator_power_exact(k, spec, 0, x, cfg);
    if (const auto* rl = std::get_if<FunctionSpec::RadialLaplace>(&spec.body)) {
        FunctionSpec inner;
        inner.body = FunctionSpec::LaplaceDunkl{rl->measure};
        return dunkl_operator_power_exact(k, inner, 0, x * x, cfg);
    }
    if (const auto* g = std::get_if<FunctionSpec::Gaussian>(&spec.body))
        return std::exp(-g->p * x * x);
    if (const auto* nf = std::get_if<FunctionSpec::NamedClosedForm>(&spec.body)) {
        if (nf->id == "vk_gaussian") {
            const double p = nf->params.at(0);
            if (k < kZeroMultiplicity)
                return std::exp(-p * x * x);
            return intertwine(
                k, [p](double t) { return std::exp(-p * t * t); }, x, 96);
        }
        throw StructureError("eval_function_spec: unknown named form '" + nf->id + "'");
    }
    return std::get<FunctionSpec::Raw>(spec.body).f(x);
}

} // namespace dunklkit::core
