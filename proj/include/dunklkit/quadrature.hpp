// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "dunklkit/errors.hpp"

namespace dunklkit::quad {

enum class RuleFamily { legendre, jacobi, adaptive_simpson, semi_infinite };

//! A fixed rule on the reference interval [-1, 1].  Nodes strictly increase;
//! weights are strictly positive and sum to the weighted measure of the
//! interval (2 for Legendre, 2^{a+b+1} B(a+1, b+1) for Jacobi(a, b)).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    RuleFamily family = RuleFamily::legendre;
    double alpha = 0.0;
    double beta = 0.0;

    double weight_sum() const;
};

struct QuadratureConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    int legendre_order = 80;
    double truncation_radius = 0.0;  // 0 = choose from the envelope
    int max_subdivisions = 60;
};

//! Gauss-Legendre rule, 2 <= n <= 512.
QuadratureRule gauss_legendre_rule(int n);

//! Gauss-Jacobi rule for weight (1-x)^alpha (1+x)^beta, alpha, beta > -1,
//! 2 <= n <= 256.  Nodes are Newton-polished roots of the degree-n Jacobi
//! polynomial; weights come from the Christoffel function, hence positive.
QuadratureRule gauss_jacobi_rule(int n, double alpha, double beta);

//! Sum of w_i f(m(x_i)) with the rule mapped affinely onto [a, b].
//! For Jacobi rules the weight function stays absorbed in the weights;
//! pass only the smooth factor of the integrand.
double apply_rule(const QuadratureRule& rule,
                  const std::function<double(double)>& f, double a, double b);

//! Adaptive integral of f over [a, b] to max(abs_tol, rel_tol |I|).
//! Fast path: nested Gauss-Legendre pair (order n and 2n); fallback:
//! adaptive Simpson with a two-level error estimator.  Throws
//! SubdivisionCapError past max_subdivisions.
double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, const QuadratureConfig& cfg);

//! Declared bound |f(t)| <= amplitude e^{sigma t - p t^2} t^rho on [0, inf).
struct Envelope {
    double amplitude = 1.0;
    double sigma = 0.0;
    double p = 0.0;   // must be > 0
    double rho = 0.0;
};

//! Declared bound |f(t)| <= amplitude (1 + t)^{-q}, q > 1.
struct PowerEnvelope {
    double amplitude = 1.0;
    double q = 2.0;
};

using TailEnvelope = std::variant<Envelope, PowerEnvelope>;

//! Truncation point T such that the envelope tail beyond T is < tail_tol.
double truncation_radius_for(const TailEnvelope& env, double tail_tol);

//! Integral of f over [0, inf): truncate where the envelope tail drops below
//! abs_tol/10, then integrate_finite on [0, T].
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const TailEnvelope& env,
                               const QuadratureConfig& cfg);

//! Fixed-order pairwise summation; deterministic for a fixed input order.
double pairwise_sum(std::span<const double> v);

} // namespace dunklkit::quad
