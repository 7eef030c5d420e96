// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include "dunklkit/errors.hpp"

namespace dunklkit::specfun {

//! Gamma function. Supported for x not a nonpositive integer; >= 12
//! significant digits on [0.1, 30], negative non-integer x via reflection.
double gamma_fn(double x);

//! log Gamma(x) for x > 0.
double log_gamma(double x);

//! Bessel function of the first kind J_nu(z).
//! Ascending series for z <= 20 (any nu > -1, plus nu == -1 by reflection);
//! Hankel asymptotic expansion for 20 < z <= 700, where nu <= 6 is required.
double bessel_j(double nu, double z);

//! Normalized Bessel function j_a(z) = Gamma(a+1) (2/z)^a J_a(z), with the
//! removable singularity j_a(0) = 1.  Even in z.  Requires a >= -1/2.
double normalized_bessel(double alpha, double z);

//! j_a(iz) as a real value, evaluated by its own all-positive series.
//! Always >= 1 for real z.  Requires a >= -1/2.
double normalized_bessel_i(double alpha, double z);

//! Kummer confluent hypergeometric 1F1(a; b; z).  b must not be a
//! nonpositive integer.  Negative z goes through the Kummer transformation
//! 1F1(a;b;z) = e^z 1F1(b-a;b;-z) to avoid cancellation.  |z| <= 50 guaranteed.
double kummer_1f1(double a, double b, double z);

double erf_fn(double x);
double erfc_fn(double x);       // erf_fn + erfc_fn == 1 by construction

//! Lower incomplete gamma gamma(a, z), a > 0, z >= 0.
double lower_incomplete_gamma(double a, double z);

} // namespace dunklkit::specfun
