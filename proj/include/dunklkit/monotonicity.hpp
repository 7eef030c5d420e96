// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dunklkit/transform.hpp"

namespace dunklkit::mono {

//! Gram PSD margin: min eigenvalue >= -kPsdTol * max diagonal entry.
constexpr double kPsdTol = 1e-8;
//! Allowed Hermitian defect before symmetrization.
constexpr double kHermTol = 1e-8;

struct CMViolation {
    int order;
    double x;
    double value;
};

enum class CMMode { exact, numeric };

struct CMReport {
    double k = 0.0;
    double sigma = 0.0;
    int orders_checked = 0;
    std::vector<double> grid;
    std::vector<double> per_order_min;  // index n = 0 .. orders_checked
    bool pass = false;
    std::optional<CMViolation> first_violation;
    CMMode mode = CMMode::exact;
};

struct GramReport {
    std::vector<double> points;
    std::vector<std::complex<double>> gram;  // row-major n x n, symmetrized
    double min_eigenvalue = 0.0;
    double hermitian_defect = 0.0;
    bool psd = false;
};

//! Chebyshev-spaced points on the open interval (-sigma + d, sigma - d),
//! d = 1e-3 sigma, always including 0.
std::vector<double> chebyshev_grid(double sigma, int count);

//! Sign-alternating operator-power test: verdict pass iff
//! min over the grid of (-1)^n T_k^n phi >= -tol(n) for n = 0..orders.
//! Structured specs use the exact eigenrelation path (orders <= 12) with
//! tol(n) = 1e-10 max(1, order scale); unstructured specs use iterated
//! numeric differentiation (orders <= 4) with tol(n) = 1e-6 * 10^n.
CMReport check_dunkl_cm(double k, const FunctionSpec& phi, double sigma,
                        int orders, int grid_size,
                        const quad::QuadratureConfig& cfg);

//! Gram matrix of translation pairings of an even real spec at the given
//! distinct points.  The pairing couples each point pair through the
//! conjugate kernel product, so at k = 0 entry (j, l) is phi(x_l - x_j).
//! Radialized measure specs go through their scaled oscillatory
//! representation; Gaussian-type specs go through dunkl_translate.
GramReport check_dunkl_pd(double k, const FunctionSpec& phi,
                          const std::vector<double>& points,
                          const quad::QuadratureConfig& cfg);

struct SchoenbergReport {
    CMReport cm;
    GramReport pd;
    bool pass = false;
};

//! Joint harness: builds phi(x) = integral of E_k(-x, y) dmu(y), checks CM of
//! phi and PD of x -> phi(x^2); both must pass together.
SchoenbergReport check_schoenberg(double k, const MeasureSpec& mu, double sigma,
                                  int orders, const std::vector<double>& points,
                                  const quad::QuadratureConfig& cfg);

//! Intertwined classical complete monotonicity: given psi with analytic
//! derivatives (derivative(n, x), n <= max_order), checks the signs of
//! (-1)^n T_k^n (V_k psi) = V_k((-1)^n psi^(n)) on (a, b) by the exact
//! commutation route.
CMReport check_vk_preserves_cm(
    double k, const std::function<double(int, double)>& psi_derivative,
    int max_order, double a, double b, int orders, int n_nodes);

struct ConvexityReport {
    std::vector<double> grid;          // [0, hi]
    std::vector<double> phi_k_values;  // D_k phi(x) |x|^{2k+1}
    bool hypothesis_convex = false;
    bool hypothesis_decay = false;
    bool applicable = false;
    double conclusion_w_min = 0.0;
    bool conclusion_w_nonneg = false;
    bool conclusion_cm_pass = false;
    enum class Verdict { silent, pass, fail } verdict = Verdict::silent;
};

//! Hypothesis-gated convexity check: tests midpoint convexity and decay of
//! phi_k(x) = D_k phi(x) |x|^{2k+1} on [0, hi]; when the hypotheses hold,
//! asserts W_k phi >= -tol on the symmetric grid and a low-order numeric CM
//! pass of x -> phi(sqrt|x|).  Failing hypotheses yield verdict "silent".
ConvexityReport check_convexity_theorem(double k, const FunctionSpec& phi,
                                        double hi, int count,
                                        const quad::QuadratureConfig& cfg);

//! Eigenvalues of an n x n complex Hermitian matrix (row-major), n <= 16,
//! by cyclic Jacobi rotations; ascending order.
std::vector<double> hermitian_eigenvalues(
    const std::vector<std::complex<double>>& matrix, int n);

//! Minimum eigenvalue; absolute accuracy ~1e-12 * ||matrix||.
double hermitian_eigen_min(const std::vector<std::complex<double>>& matrix,
                           int n);

} // namespace dunklkit::mono
