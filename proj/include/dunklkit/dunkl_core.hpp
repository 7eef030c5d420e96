// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <complex>
#include <functional>

#include "dunklkit/function_spec.hpp"

namespace dunklkit::core {

//! Multiplicities below this are indistinguishable from 0 in double
//! precision; they take the k = 0 shortcuts (V = id, exponential kernel).
constexpr double kZeroMultiplicity = 1e-14;

void require_multiplicity(double k);  // throws DomainError unless k >= 0

//! Dunkl kernel E_k(x, y) for real arguments, via the two-component
//! normalized-Bessel decomposition in the product u = x y.  Symmetric in
//! (x, y), strictly positive; a nonpositive computed value throws
//! PositivityError.  k = 0 reduces to e^{x y}.
double dunkl_kernel(double k, double x, double y);

//! E_k(-ix, y) = j_{k-1/2}(xy) - i (xy/(2k+1)) j_{k+1/2}(xy); modulus <= 1.
std::complex<double> dunkl_kernel_osc(double k, double x, double y);

//! Components of the oscillatory kernel in the product u = x y:
//! E_k(-ix, y) = a(u) - i b(u) with a even and b odd.
double osc_component_a(double k, double u);
double osc_component_b(double k, double u);

//! T_k f(x) = f'(x) + k (f(x) - f(-x))/x with a Richardson-extrapolated
//! five-point derivative; at x = 0 the removable singularity gives
//! (1 + 2k) f'(0).  step <= 0 selects cbrt(eps) max(1, |x|).
struct NumericDerivative {
    double value;
    double step;
};
NumericDerivative dunkl_operator_numeric_info(
    double k, const std::function<double(double)>& f, double x,
    double step = 0.0);
double dunkl_operator_numeric(double k, const std::function<double(double)>& f,
                              double x, double step = 0.0);

//! Iterated numeric operator T_k^n, n <= 4 (noise grows a decade per order).
double dunkl_operator_power_numeric(double k,
                                    const std::function<double(double)>& f,
                                    int n, double x);

//! Exact T_k^n via the eigenrelation; requires a structured spec
//! (KernelDecaying or LaplaceDunkl), otherwise StructureError.
double dunkl_operator_power_exact(double k, const FunctionSpec& spec, int n,
                                  double x, const quad::QuadratureConfig& cfg);

//! Intertwining operator for k > 0:
//!   V_k f(x) = Gamma(k+1/2)/(Gamma(1/2) Gamma(k))
//!              * integral over [-1,1] of f(x t) (1-t)^{k-1} (1+t)^k dt,
//! evaluated by a Gauss-Jacobi(k-1, k) rule on the smooth factor.  Callers
//! must use the identity shortcut at k = 0 (the constant has a pole there).
double intertwine(double k, const std::function<double(double)>& f, double x,
                  int n_nodes);

//! Beta-normalizing constant of the V_k integral, k > 0.
double intertwine_constant(double k);

//! Pointwise evaluation of a FunctionSpec at the given multiplicity.
double eval_function_spec(const FunctionSpec& spec, double k, double x,
                          const quad::QuadratureConfig& cfg);

} // namespace dunklkit::core
