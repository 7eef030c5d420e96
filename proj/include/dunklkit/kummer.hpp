// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <vector>

#include "dunklkit/monotonicity.hpp"

namespace dunklkit::kummer {

struct KummerParams {
    double k = 0.0;  // > -1/2 for the closed-form family
    double p = 1.0;  // > 0
    void validate() const;
};

//! Gaussian-weighted Bessel integral, closed form:
//!   integral over [0, inf) of J_k(x t) e^{-p t^2} t^{k+1} dt
//!     = x^k e^{-x^2 / 4p} / (2p)^{k+1},     k > -1, p > 0, x >= 0.
double sonine_closed(double k, double p, double x);

//! The same integral by semi-infinite quadrature (k >= 0).
double sonine_quadrature(double k, double p, double x,
                         const quad::QuadratureConfig& cfg);

//! I: Gamma(k+1/2) e^{x^2/4p} / (2 p^{k+1/2}).
double i_kp(const KummerParams& kp, double x);

//! J: Gamma(k+1) x / (2 (2k+1) p^{k+1}) * 1F1(k+1; k+3/2; x^2/4p).  Odd in x.
double j_kp(const KummerParams& kp, double x);

//! psi = I - J: the sign-alternating candidate; matches the decaying-kernel
//! moment integral with density exponent 2k.  Strictly positive.
double psi_kp(const KummerParams& kp, double x);

//! phi = I + J: the mirror form without sign alternation; equals psi(-x).
double phi_kp(const KummerParams& kp, double x);

//! Ground-truth moment integral:
//!   integral over [0, inf) of E_k(sign * x, t) e^{-p t^2} t^rho dt.
double laplace_dunkl_oracle(double k, double p, double rho, int sign, double x,
                            const quad::QuadratureConfig& cfg);

struct AdjudicationCombo {
    bool uses_psi = true;    // else phi
    bool rho_is_2k = true;   // else 2k + 1
    int sign = -1;           // kernel argument orientation
    double max_rel_err = 0.0;
};

//! Comparison of both closed forms against the oracle over every
//! (density exponent, orientation) combination.  `matched_combo` indexes the
//! unique decaying-orientation (sign = -1) match; the +1-orientation mirror
//! of the other closed form is reported separately.
struct AdjudicationRecord {
    std::vector<double> k_list, p_list, x_grid;
    std::vector<AdjudicationCombo> combos;  // all 8
    double match_tol = 1e-7;
    int matched_combo = -1;
    bool unique_match = false;   // exactly one sign = -1 combo within tol
    bool mirror_match = false;   // (phi, 2k, +1) also within tol
    bool cm_pass = false;        // exact-mode CM of the matched form, N = 8
};

AdjudicationRecord adjudicate_theorem6(const std::vector<double>& k_list,
                                       const std::vector<double>& p_list,
                                       const std::vector<double>& x_grid,
                                       const quad::QuadratureConfig& cfg);

} // namespace dunklkit::kummer
