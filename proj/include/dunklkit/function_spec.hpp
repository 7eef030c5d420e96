// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dunklkit/quadrature.hpp"

namespace dunklkit {

//! Nonnegative measure on [0, inf): discrete atoms plus an optional density
//! scale * e^{-p t^2} t^rho.  Every such measure has finite exponential
//! moments of all orders.
struct MeasureSpec {
    struct Atom {
        double location = 0.0;  // >= 0
        double mass = 0.0;      // >= 0
    };
    struct Density {
        double scale = 1.0;  // >= 0
        double p = 1.0;      // > 0
        double rho = 0.0;    // >= 0
    };
    std::vector<Atom> atoms;
    std::optional<Density> density;

    void validate() const;
    bool is_zero() const;
};

enum class Parity { even, odd, none };

//! Symbolic description of a test function, structured enough that exact
//! operator iteration is possible where the form permits it.
//!
//! Variants (k is the runtime multiplicity parameter, supplied at evaluation):
//!   KernelDecaying(y)   x -> E_k(-x, y), y >= 0
//!   LaplaceDunkl(mu)    x -> integral of E_k(-x, t) dmu(t)
//!   RadialLaplace(mu)   x -> integral of E_k(-x^2, t) dmu(t)   (even)
//!   Gaussian(p)         x -> e^{-p x^2}, p > 0
//!   NamedClosedForm     named parametric form ("vk_gaussian": the
//!                       intertwined Gaussian, Jacobi-quadrature evaluated)
//!   Raw                 arbitrary callable
struct FunctionSpec {
    struct KernelDecaying {
        double y = 0.0;
    };
    struct LaplaceDunkl {
        MeasureSpec measure;
    };
    struct RadialLaplace {
        MeasureSpec measure;
    };
    struct Gaussian {
        double p = 1.0;
    };
    struct NamedClosedForm {
        std::string id;
        std::vector<double> params;
    };
    struct Raw {
        std::function<double(double)> f;
    };

    std::variant<KernelDecaying, LaplaceDunkl, RadialLaplace, Gaussian,
                 NamedClosedForm, Raw>
        body = Gaussian{};
    Parity parity_hint = Parity::none;

    //! Declared decay of the function itself (needed by transform-side ops
    //! for Raw specs; structured variants derive their own).
    std::optional<quad::TailEnvelope> envelope;

    //! Closed form of the weighted transform D_k f(xi) |xi|^{2k} when one is
    //! certified, plus the declared decay of D_k f.  The weighted product is
    //! what downstream integrands consume; it stays smooth even when D_k f
    //! carries an integrable |xi|^{-2k} blow-up at the origin.  Consumed by
    //! translation and the inverse intertwiner, never by the forward
    //! transform itself.
    std::function<double(double /*k*/, double /*xi*/)> known_transform_weighted;
    std::optional<quad::TailEnvelope> transform_envelope;

    bool is_even() const;
    bool is_structured() const;  // exact operator powers available
};

//! Convenience constructors carrying the right hints and envelopes.
FunctionSpec make_gaussian_spec(double p);
FunctionSpec make_kernel_spec(double y);
FunctionSpec make_laplace_spec(MeasureSpec mu);
FunctionSpec make_radial_laplace_spec(MeasureSpec mu);
FunctionSpec make_vk_gaussian_spec(double p);
FunctionSpec make_raw_spec(std::function<double(double)> f, Parity parity,
                           std::optional<quad::TailEnvelope> envelope = {});

//! Function values tabulated on a strictly increasing grid.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<double> values_re;
    std::vector<double> values_im;
    double band_limit_hint = 0.0;
    Parity parity = Parity::none;

    void validate() const;  // checks monotone grid, symmetry when even/odd
};

} // namespace dunklkit
