// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "dunklkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunklkit/specfun.hpp"

namespace dunklkit::quad {

namespace {
constexpr double kPi = std::numbers::pi;
}

double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

double QuadratureRule::weight_sum() const {
    return pairwise_sum(weights);
}

QuadratureRule gauss_legendre_rule(int n) {
    if (n < 2 || n > 512)
        throw DomainError("gauss_legendre_rule: order must be in [2, 512]");
    QuadratureRule rule;
    rule.family = RuleFamily::legendre;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15)
                break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

namespace {

// Orthonormal Jacobi recurrence  x p_j = b_{j+1} p_{j+1} + a_j p_j + b_j p_{j-1}.
struct JacobiRecurrence {
    std::vector<double> a;   // a_0 .. a_n
    std::vector<double> b;   // b_1 .. b_{n+1} stored at index 1..n+1
    double mu0;              // total weight mass 2^{a+b+1} B(a+1, b+1)
};

JacobiRecurrence jacobi_recurrence(int n, double al, double be) {
    JacobiRecurrence r;
    r.a.resize(n + 1);
    r.b.resize(n + 2, 0.0);
    using specfun::log_gamma;
    r.mu0 = std::exp((al + be + 1.0) * std::log(2.0) + log_gamma(al + 1.0) +
                     log_gamma(be + 1.0) - log_gamma(al + be + 2.0));
    const double d = be * be - al * al;
    r.a[0] = (be - al) / (al + be + 2.0);
    for (int j = 1; j <= n; ++j) {
        const double s = 2.0 * j + al + be;
        r.a[j] = d / (s * (s + 2.0));
        double bj2;
        if (j == 1)
            bj2 = 4.0 * (1.0 + al) * (1.0 + be) /
                  ((al + be + 2.0) * (al + be + 2.0) * (al + be + 3.0));
        else
            bj2 = 4.0 * j * (j + al) * (j + be) * (j + al + be) /
                  (s * s * (s + 1.0) * (s - 1.0));
        r.b[j] = std::sqrt(bj2);
    }
    {
        const int j = n + 1;
        const double s = 2.0 * j + al + be;
        const double bj2 = 4.0 * j * (j + al) * (j + be) * (j + al + be) /
                           (s * s * (s + 1.0) * (s - 1.0));
        r.b[j] = std::sqrt(bj2);
    }
    return r;
}

// Orthonormal polynomial values p_0..p_n and derivative of p_n at x.
void eval_orthonormal(const JacobiRecurrence& r, int n, double x,
                      std::vector<double>& p, double& pn_prime) {
    p.resize(n + 1);
    p[0] = 1.0 / std::sqrt(r.mu0);
    double d0 = 0.0;                       // derivative of p_0
    if (n == 0) {
        pn_prime = 0.0;
        return;
    }
    p[1] = (x - r.a[0]) * p[0] / r.b[1];
    double d1 = p[0] / r.b[1];
    for (int j = 1; j < n; ++j) {
        p[j + 1] = ((x - r.a[j]) * p[j] - r.b[j] * p[j - 1]) / r.b[j + 1];
        const double dj1 = (p[j] + (x - r.a[j]) * d1 - r.b[j] * d0) / r.b[j + 1];
        d0 = d1;
        d1 = dj1;
    }
    pn_prime = d1;
}

} // namespace

QuadratureRule gauss_jacobi_rule(int n, double alpha, double beta) {
    if (n < 2 || n > 256)
        throw DomainError("gauss_jacobi_rule: order must be in [2, 256]");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw DomainError("gauss_jacobi_rule: requires alpha, beta > -1");
    const JacobiRecurrence rec = jacobi_recurrence(n, alpha, beta);
    QuadratureRule rule;
    rule.family = RuleFamily::jacobi;
    rule.alpha = alpha;
    rule.beta = beta;

    std::vector<double> p;
    double dp = 0.0;
    auto pn = [&](double x) {
        eval_orthonormal(rec, n, x, p, dp);
        return p[n];
    };

    // Bracket the n interior roots on a dense cosine grid, then polish.
    const int samples = std::max(64, 12 * n);
    std::vector<double> lo, hi;
    double xprev = std::cos(kPi * (1.0 - 0.5 / samples));
    double fprev = pn(xprev);
    for (int i = samples - 1; i >= 1; --i) {
        const double x = std::cos(kPi * (i - 0.5) / samples);
        const double f = pn(x);
        if ((fprev < 0.0 && f > 0.0) || (fprev > 0.0 && f < 0.0) || f == 0.0) {
            lo.push_back(xprev);
            hi.push_back(x);
        }
        xprev = x;
        fprev = f;
    }
    if ((int)lo.size() != n)
        throw ConvergenceError("gauss_jacobi_rule: failed to isolate all roots",
                               (long)lo.size());

    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double a = lo[i], b = hi[i];
        double fa = pn(a);
        double x = 0.5 * (a + b);
        bool converged = false;
        for (int iter = 0; iter < 200; ++iter) {
            const double f = pn(x);
            const double der = dp;
            if (f == 0.0) {   // exact root: keep x as is
                converged = true;
                break;
            }
            if ((f > 0.0) == (fa > 0.0)) {
                a = x;
                fa = f;
            } else {
                b = x;
            }
            double xn = der != 0.0 ? x - f / der : 0.5 * (a + b);
            if (!(xn > a) || !(xn < b))
                xn = 0.5 * (a + b);   // bisection safeguard
            if (std::fabs(xn - x) <= 1e-15 || std::fabs(b - a) <= 1e-15) {
                x = xn;
                converged = true;
                break;
            }
            x = xn;
        }
        if (!converged)
            throw ConvergenceError("gauss_jacobi_rule: Newton stalled at node", i);
        eval_orthonormal(rec, n, x, p, dp);
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            s += p[j] * p[j];
        rule.nodes[i] = x;
        rule.weights[i] = 1.0 / s;   // Christoffel function: positive
    }
    return rule;
}

double apply_rule(const QuadratureRule& rule,
                  const std::function<double(double)>& f, double a, double b) {
    // Jacobi rules carry their weight on [-1, 1] and are only valid there.
    if (rule.family == RuleFamily::jacobi && (a != -1.0 || b != 1.0))
        throw DomainError("apply_rule: Jacobi rules apply on [-1, 1] only");
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> terms(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        terms[i] = rule.weights[i] * f(mid + half * rule.nodes[i]);
    double s = pairwise_sum(terms);
    if (rule.family == RuleFamily::legendre)
        s *= half;
    return s;
}

namespace {

struct SimpsonOutcome {
    double value = 0.0;
    double err = 0.0;
    bool capped = false;
};

SimpsonOutcome adaptive_simpson(const std::function<double(double)>& f, double a,
                                double fa, double b, double fb, double fm,
                                double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double h = b - a;
    const double s1 = h / 6.0 * (fa + 4.0 * fm + fb);
    const double sl = h / 12.0 * (fa + 4.0 * flm + fm);
    const double sr = h / 12.0 * (fm + 4.0 * frm + fb);
    const double s2 = sl + sr;
    const double est = (s2 - s1) / 15.0;
    if (std::fabs(est) <= tol || h <= 1e-14 * std::max(std::fabs(a), std::fabs(b))) {
        return {s2 + est, std::fabs(est), false};
    }
    if (depth <= 0)
        return {s2 + est, std::fabs(est), true};
    const SimpsonOutcome left =
        adaptive_simpson(f, a, fa, m, fm, flm, 0.5 * tol, depth - 1);
    const SimpsonOutcome right =
        adaptive_simpson(f, m, fm, b, fb, frm, 0.5 * tol, depth - 1);
    return {left.value + right.value, left.err + right.err,
            left.capped || right.capped};
}

} // namespace

double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, const QuadratureConfig& cfg) {
    if (a == b)
        return 0.0;
    if (cfg.abs_tol <= 0.0 || cfg.rel_tol <= 0.0)
        throw DomainError("integrate_finite: tolerances must be positive");
    const int order = std::max(2, std::min(256, cfg.legendre_order));
    const double coarse = apply_rule(gauss_legendre_rule(order), f, a, b);
    const double fine = apply_rule(gauss_legendre_rule(2 * order), f, a, b);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(fine));
    if (std::fabs(fine - coarse) <= 0.25 * tol)
        return fine;
    // Two-level Simpson refinement for integrands the fast path cannot certify.
    const double m = 0.5 * (a + b);
    const SimpsonOutcome out = adaptive_simpson(f, a, f(a), b, f(b), f(m), tol,
                                                cfg.max_subdivisions);
    if (out.capped && out.err > tol)
        throw SubdivisionCapError("integrate_finite: subdivision cap reached",
                                  out.value, out.err);
    return out.value;
}

double truncation_radius_for(const TailEnvelope& env, double tail_tol) {
    if (tail_tol <= 0.0)
        throw DomainError("truncation_radius_for: tolerance must be positive");
    if (std::holds_alternative<PowerEnvelope>(env)) {
        const auto& pe = std::get<PowerEnvelope>(env);
        if (!(pe.q > 1.0) || !(pe.amplitude >= 0.0))
            throw EnvelopeError("power envelope requires q > 1");
        if (pe.amplitude == 0.0)
            return 1.0;
        // tail of A (1+t)^-q beyond T is A (1+T)^{1-q} / (q-1)
        const double t = std::pow(pe.amplitude / ((pe.q - 1.0) * tail_tol),
                                  1.0 / (pe.q - 1.0));
        return std::max(1.0, t);
    }
    const auto& e = std::get<Envelope>(env);
    if (!(e.p > 0.0))
        throw EnvelopeError("gaussian envelope requires p > 0");
    if (!(e.amplitude >= 0.0) || !(e.sigma >= 0.0) || !(e.rho >= 0.0))
        throw EnvelopeError("envelope parameters out of range");
    if (e.amplitude == 0.0)
        return 1.0;
    const double s2p = e.sigma / (2.0 * e.p);
    double t = s2p + std::sqrt(std::max(
                         0.0, s2p * s2p + std::log(10.0 * e.amplitude / tail_tol) / e.p));
    for (int pass = 0; pass < 2; ++pass) {
        const double c = 10.0 * e.amplitude * std::pow(std::max(t, 1.0), e.rho) *
                         (1.0 + 1.0 / std::max(2.0 * e.p * t - e.sigma, 1.0));
        t = s2p + std::sqrt(std::max(0.0, s2p * s2p + std::log(c / tail_tol) / e.p));
    }
    return std::max({t, s2p + 3.0 / std::sqrt(e.p), 2.0 / std::sqrt(e.p)});
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               const TailEnvelope& env,
                               const QuadratureConfig& cfg) {
    double t = cfg.truncation_radius;
    if (t <= 0.0)
        t = truncation_radius_for(env, cfg.abs_tol / 10.0);
    return integrate_finite(f, 0.0, t, cfg);
}

} // namespace dunklkit::quad
