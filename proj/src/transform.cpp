// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "dunklkit/transform.hpp"

#include <cmath>

#include "dunklkit/specfun.hpp"

namespace dunklkit::transform {

using core::osc_component_a;
using core::osc_component_b;

TransformConfig TransformConfig::make(double k, quad::QuadratureConfig q) {
    core::require_multiplicity(k);
    TransformConfig cfg;
    cfg.k = k;
    cfg.c_k = 1.0 / (std::pow(2.0, k + 0.5) * specfun::gamma_fn(k + 0.5));
    cfg.weight_exponent = 2.0 * k;
    cfg.quad = q;
    return cfg;
}

namespace {

// Envelope of |f(y)| y^{2k} (1 + |xi| y): the integrand of a transform at
// frequency xi.  Gaussian envelopes absorb the polynomial factors into rho;
// power-law envelopes lose 2k+1 powers of decay.
quad::TailEnvelope integrand_envelope(const quad::TailEnvelope& base, double k,
                                      double xi) {
    if (std::holds_alternative<quad::Envelope>(base)) {
        quad::Envelope e = std::get<quad::Envelope>(base);
        e.amplitude *= 1.0 + std::fabs(xi);
        e.rho += 2.0 * k + 1.0;
        return e;
    }
    quad::PowerEnvelope pe = std::get<quad::PowerEnvelope>(base);
    pe.amplitude *= 1.0 + std::fabs(xi);
    pe.q -= 2.0 * k + 1.0;
    if (!(pe.q > 1.0))
        throw EnvelopeError(
            "transform: power-law envelope too weak against the weight");
    return pe;
}

const quad::TailEnvelope& require_envelope(const FunctionSpec& f) {
    if (!f.envelope)
        throw EnvelopeError(
            "transform: spec carries no decay envelope; declare one or use a "
            "Gaussian-type spec");
    return *f.envelope;
}

struct ParityParts {
    std::function<double(double)> even;
    std::function<double(double)> odd;
    bool has_even = true;
    bool has_odd = true;
};

ParityParts split_parity(const FunctionSpec& f, double k,
                         const quad::QuadratureConfig& qcfg) {
    ParityParts parts;
    auto value = [&f, k, qcfg](double y) {
        return core::eval_function_spec(f, k, y, qcfg);
    };
    switch (f.parity_hint == Parity::none && f.is_even() ? Parity::even
                                                         : f.parity_hint) {
        case Parity::even:
            parts.even = value;
            parts.has_odd = false;
            break;
        case Parity::odd:
            parts.odd = value;
            parts.has_even = false;
            break;
        case Parity::none:
            parts.even = [value](double y) {
                return 0.5 * (value(y) + value(-y));
            };
            parts.odd = [value](double y) {
                return 0.5 * (value(y) - value(-y));
            };
            break;
    }
    return parts;
}

// 2 * integral over [0, inf) of part(y) * component(xi y) * y^{2k} dy
double half_line_integral(const TransformConfig& cfg,
                          const std::function<double(double)>& part,
                          const std::function<double(double, double)>& comp,
                          double xi, const quad::TailEnvelope& env) {
    const double k = cfg.k;
    auto f = [&](double y) {
        const double w = y == 0.0 && cfg.weight_exponent == 0.0
                             ? 1.0
                             : std::pow(y, cfg.weight_exponent);
        return part(y) * comp(k, xi * y) * w;
    };
    return 2.0 * quad::integrate_semi_infinite(f, env, cfg.quad);
}

} // namespace

std::complex<double> dunkl_transform(const TransformConfig& cfg,
                                     const FunctionSpec& f, double xi) {
    const quad::TailEnvelope env = integrand_envelope(require_envelope(f), cfg.k, xi);
    const ParityParts parts = split_parity(f, cfg.k, cfg.quad);
    double re = 0.0, im = 0.0;
    if (parts.has_even)
        re = cfg.c_k * half_line_integral(
                           cfg, parts.even,
                           [](double k, double u) { return osc_component_a(k, u); },
                           xi, env);
    if (parts.has_odd)
        im = -cfg.c_k * half_line_integral(
                            cfg, parts.odd,
                            [](double k, double u) { return osc_component_b(k, u); },
                            xi, env);
    return {re, im};
}

std::complex<double> dunkl_inverse_transform(const TransformConfig& cfg,
                                             const FunctionSpec& g, double x) {
    const std::complex<double> fwd = dunkl_transform(cfg, g, x);
    // E_k(+ix, y) conjugates the kernel: flip the odd-part sign.
    return {fwd.real(), -fwd.imag()};
}

std::complex<double> dunkl_inverse_transform_fn(
    const TransformConfig& cfg,
    const std::function<std::complex<double>(double)>& g,
    const quad::TailEnvelope& env, double x) {
    const quad::TailEnvelope ienv = integrand_envelope(env, cfg.k, x);
    auto ge_re = [&](double y) { return 0.5 * (g(y) + g(-y)).real(); };
    auto go_re = [&](double y) { return 0.5 * (g(y) - g(-y)).real(); };
    auto ge_im = [&](double y) { return 0.5 * (g(y) + g(-y)).imag(); };
    auto go_im = [&](double y) { return 0.5 * (g(y) - g(-y)).imag(); };
    auto comp_a = [](double k, double u) { return osc_component_a(k, u); };
    auto comp_b = [](double k, double u) { return osc_component_b(k, u); };
    // c_k int g E(ix, y) h^2 dy with E(ix,y) = a(xy) + i b(xy)
    const double re = cfg.c_k * (half_line_integral(cfg, ge_re, comp_a, x, ienv) -
                                 half_line_integral(cfg, go_im, comp_b, x, ienv));
    const double im = cfg.c_k * (half_line_integral(cfg, ge_im, comp_a, x, ienv) +
                                 half_line_integral(cfg, go_re, comp_b, x, ienv));
    return {re, im};
}

double weighted_transform_even(const TransformConfig& cfg,
                               const FunctionSpec& f, double xi) {
    if (f.known_transform_weighted)
        return f.known_transform_weighted(cfg.k, xi);
    const std::complex<double> t = dunkl_transform(cfg, f, xi);
    return t.real() * std::pow(std::fabs(xi), cfg.weight_exponent);
}

namespace {

quad::TailEnvelope transform_side_envelope(const TransformConfig& cfg,
                                           const FunctionSpec& f,
                                           double amp_factor) {
    if (!f.transform_envelope)
        throw EnvelopeError(
            "translate/inverse intertwine: spec declares no transform decay");
    quad::TailEnvelope base = *f.transform_envelope;
    if (std::holds_alternative<quad::Envelope>(base)) {
        quad::Envelope e = std::get<quad::Envelope>(base);
        e.amplitude *= amp_factor;
        e.rho += cfg.weight_exponent + 2.0;
        return e;
    }
    quad::PowerEnvelope pe = std::get<quad::PowerEnvelope>(base);
    pe.amplitude *= amp_factor;
    pe.q -= cfg.weight_exponent + 2.0;
    if (!(pe.q > 1.0))
        throw EnvelopeError("translate: transform envelope too weak");
    return pe;
}

} // namespace

std::complex<double> dunkl_translate(const TransformConfig& cfg,
                                     const FunctionSpec& f, double y, double x) {
    const double k = cfg.k;
    // Pointwise weighted transform D_k f(xi) |xi|^{2k}, certified or
    // nested-numeric.  For a real f the transform splits into an even real
    // part U and an odd imaginary part -V; the kernel product contributes
    // P = a_x a_y - b_x b_y (even) and Q = a_x b_y + b_x a_y (odd), and only
    // P U + Q V survives the integral over R.  The result is real.
    std::function<std::complex<double>(double)> wt;
    if (f.known_transform_weighted) {
        wt = [&f, k](double xi) {
            return std::complex<double>(f.known_transform_weighted(k, xi), 0.0);
        };
    } else {
        require_envelope(f);
        wt = [&cfg, &f](double xi) {
            return dunkl_transform(cfg, f, xi) *
                   std::pow(std::fabs(xi), cfg.weight_exponent);
        };
    }
    const quad::TailEnvelope env = transform_side_envelope(
        cfg, f, (1.0 + std::fabs(x)) * (1.0 + std::fabs(y)));
    auto integrand = [&](double xi) {
        const double ax = osc_component_a(k, x * xi);
        const double bx = osc_component_b(k, x * xi);
        const double ay = osc_component_a(k, y * xi);
        const double by = osc_component_b(k, y * xi);
        const std::complex<double> w = wt(xi);
        return (ax * ay - bx * by) * w.real() +
               (ax * by + bx * ay) * (-w.imag());
    };
    const double value =
        2.0 * cfg.c_k * quad::integrate_semi_infinite(integrand, env, cfg.quad);
    return {value, 0.0};
}

double inverse_intertwine(const TransformConfig& cfg, const FunctionSpec& phi,
                          double x) {
    if (!phi.is_even())
        throw EnvelopeError("inverse_intertwine: requires an even spec");
    std::function<double(double)> wt;
    if (phi.known_transform_weighted) {
        const double k = cfg.k;
        wt = [&phi, k](double xi) { return phi.known_transform_weighted(k, xi); };
    } else {
        require_envelope(phi);
        wt = [&cfg, &phi](double xi) {
            return weighted_transform_even(cfg, phi, xi);
        };
    }
    const quad::TailEnvelope env =
        transform_side_envelope(cfg, phi, 1.0 + std::fabs(x));
    auto integrand = [&](double y) { return std::cos(x * y) * wt(y); };
    return 2.0 * cfg.c_k *
           quad::integrate_semi_infinite(integrand, env, cfg.quad);
}

} // namespace dunklkit::transform
