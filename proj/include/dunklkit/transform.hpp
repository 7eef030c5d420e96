// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <complex>

#include "dunklkit/dunkl_core.hpp"

namespace dunklkit::transform {

//! Configuration of the transform pair.  The normalization
//! c_k = 1 / (2^{k+1/2} Gamma(k+1/2)) makes e^{-x^2/2} a fixed point of the
//! forward transform and reduces to 1/sqrt(2 pi) at k = 0.
struct TransformConfig {
    double k = 0.0;
    double c_k = 0.0;
    double weight_exponent = 0.0;  // 2k; the measure is |y|^{2k} dy
    quad::QuadratureConfig quad;

    static TransformConfig make(double k, quad::QuadratureConfig q = {});
};

//! Forward transform D_k f(xi) = c_k * integral over R of
//! f(y) E_k(-i xi, y) |y|^{2k} dy, evaluated on [0, inf) split by parity:
//! the even part of f pairs with the real kernel component, the odd part
//! with the imaginary one.  Requires a declared decay envelope (structured
//! Gaussian specs carry their own).
std::complex<double> dunkl_transform(const TransformConfig& cfg,
                                     const FunctionSpec& f, double xi);

//! Inverse transform c_k * integral of g(y) E_k(+i x, y) |y|^{2k} dy.
std::complex<double> dunkl_inverse_transform(const TransformConfig& cfg,
                                             const FunctionSpec& g, double x);

//! Inverse transform of a complex-valued sampled integrand with declared
//! decay (used for round trips through a numerically computed transform).
std::complex<double> dunkl_inverse_transform_fn(
    const TransformConfig& cfg,
    const std::function<std::complex<double>(double)>& g,
    const quad::TailEnvelope& env, double x);

//! Dunkl translation by inversion of the transform-side relation:
//! tau_y f(x) = c_k * integral of E_k(ix, xi) E_k(iy, xi) D_k f(xi)
//! |xi|^{2k} d xi.  At k = 0 this is the shift f(x + y).  Real-valued for
//! real f; the imaginary component vanishes by parity and is returned as 0.
//! A certified weighted transform on the spec is used when present;
//! otherwise D_k f is computed pointwise by quadrature (nested).
std::complex<double> dunkl_translate(const TransformConfig& cfg,
                                     const FunctionSpec& f, double y, double x);

//! Inverse intertwining operator on even specs with computable transforms:
//! W_k phi(x) = c_k * integral of e^{i x y} D_k phi(y) |y|^{2k} dy
//!            = 2 c_k * integral over [0, inf) of cos(x y) [D_k phi(y) y^{2k}] dy.
//! The c_k prefactor is pinned by the identity W_k(V_k f) = f, which the
//! test suite checks through the certified vk_gaussian specs.
double inverse_intertwine(const TransformConfig& cfg, const FunctionSpec& phi,
                          double x);

//! D_k f(xi) |xi|^{2k}: certified closed form when the spec carries one,
//! else the real part of the quadrature transform times the weight.
double weighted_transform_even(const TransformConfig& cfg,
                               const FunctionSpec& f, double xi);

} // namespace dunklkit::transform
