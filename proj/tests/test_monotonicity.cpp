// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dunklkit/monotonicity.hpp"
#include "dunklkit/specfun.hpp"

using namespace dunklkit;
using namespace dunklkit::mono;

namespace {
const quad::QuadratureConfig qcfg;
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("chebyshev grid: open interval, contains zero") {
    const auto g = chebyshev_grid(5.0, 41);
    CHECK(g.front() > -5.0);
    CHECK(g.back() < 5.0);
    bool has_zero = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0.0)
            has_zero = true;
        if (i)
            CHECK(g[i] > g[i - 1]);
    }
    CHECK(has_zero);
}

TEST_CASE("cm: decaying kernel passes to high order") {
    const CMReport rep =
        check_dunkl_cm(1.0, make_kernel_spec(2.0), 5.0, 10, 41, qcfg);
    CHECK(rep.pass);
    CHECK(rep.mode == CMMode::exact);
    CHECK(rep.per_order_min.size() == 11);
    for (double m : rep.per_order_min)
        CHECK(m > 0.0);
}

TEST_CASE("cm: the identity function fails with a certificate") {
    FunctionSpec linear = make_raw_spec([](double x) { return x; }, Parity::odd);
    const CMReport rep = check_dunkl_cm(1.0, linear, 3.0, 2, 41, qcfg);
    CHECK_FALSE(rep.pass);
    CHECK(rep.mode == CMMode::numeric);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->order == 0);
    CHECK(rep.first_violation->x < 0.0);
    CHECK(rep.first_violation->value < 0.0);
}

TEST_CASE("cm: gaussian density measure at k = 0 is the scaled erfc form") {
    MeasureSpec mu;
    mu.density = MeasureSpec::Density{1.0, 0.25, 0.0};
    const FunctionSpec phi = make_laplace_spec(mu);
    // phi(x) = int_0^inf e^{-x t} e^{-t^2/4} dt = sqrt(pi) e^{x^2} erfc(x)
    for (double x : {-1.0, 0.0, 0.5, 2.0}) {
        const double expected =
            kSqrtPi * std::exp(x * x) * specfun::erfc_fn(x);
        CHECK(core::eval_function_spec(phi, 0.0, x, qcfg) ==
              doctest::Approx(expected).epsilon(1e-10));
    }
    const CMReport rep = check_dunkl_cm(0.0, phi, 3.0, 8, 41, qcfg);
    CHECK(rep.pass);
}

TEST_CASE("cm: numeric mode flags the gaussian at order one") {
    const CMReport rep =
        check_dunkl_cm(0.5, make_gaussian_spec(1.0), 2.0, 2, 21, qcfg);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->order == 1);
    CHECK(rep.first_violation->x < 0.0);
}

TEST_CASE("cm: verdicts are invariant under positive scaling") {
    MeasureSpec mu;
    mu.atoms = {{0.5, 1.0}, {2.0, 0.25}};
    for (double c : {0.5, 2.0, 10.0}) {
        MeasureSpec scaled = mu;
        for (auto& a : scaled.atoms)
            a.mass *= c;
        CHECK(check_dunkl_cm(0.7, make_laplace_spec(scaled), 4.0, 9, 41, qcfg).pass ==
              check_dunkl_cm(0.7, make_laplace_spec(mu), 4.0, 9, 41, qcfg).pass);
    }
    FunctionSpec linear = make_raw_spec([](double x) { return x; }, Parity::odd);
    for (double c : {0.5, 2.0, 10.0}) {
        FunctionSpec scaled =
            make_raw_spec([c](double x) { return c * x; }, Parity::odd);
        CHECK(check_dunkl_cm(1.0, scaled, 3.0, 1, 21, qcfg).pass ==
              check_dunkl_cm(1.0, linear, 3.0, 1, 21, qcfg).pass);
    }
}

TEST_CASE("cm: cone property via per-order minima additivity") {
    MeasureSpec mu1, mu2, both;
    mu1.atoms = {{1.0, 1.0}};
    mu2.atoms = {{2.5, 0.5}};
    both.atoms = {{1.0, 1.0}, {2.5, 0.5}};
    const CMReport r1 = check_dunkl_cm(1.0, make_laplace_spec(mu1), 3.0, 8, 41, qcfg);
    const CMReport r2 = check_dunkl_cm(1.0, make_laplace_spec(mu2), 3.0, 8, 41, qcfg);
    const CMReport rb = check_dunkl_cm(1.0, make_laplace_spec(both), 3.0, 8, 41, qcfg);
    CHECK(r1.pass);
    CHECK(r2.pass);
    CHECK(rb.pass);
    for (int n = 0; n <= 8; ++n)
        CHECK(rb.per_order_min[n] >=
              r1.per_order_min[n] + r2.per_order_min[n] - 1e-12);
}

TEST_CASE("cm: verdicts and minima are stable under grid refinement") {
    MeasureSpec mu;
    mu.atoms = {{0.7, 1.0}, {2.1, 0.4}};
    const FunctionSpec phi = make_laplace_spec(mu);
    const CMReport coarse = check_dunkl_cm(0.8, phi, 3.0, 6, 41, qcfg);
    const CMReport fine = check_dunkl_cm(0.8, phi, 3.0, 6, 81, qcfg);
    CHECK(coarse.pass == fine.pass);
    for (int n = 0; n <= 6; ++n) {
        const double scale = std::max(1.0, std::fabs(coarse.per_order_min[n]));
        CHECK(std::fabs(coarse.per_order_min[n] - fine.per_order_min[n]) <=
              0.05 * scale);
    }
}

TEST_CASE("cm: order caps per mode") {
    FunctionSpec raw = make_raw_spec([](double x) { return std::exp(-x); },
                                     Parity::none);
    CHECK_THROWS_AS(check_dunkl_cm(1.0, raw, 2.0, 5, 21, qcfg), ModeError);
    CHECK_THROWS_AS(check_dunkl_cm(1.0, make_kernel_spec(1.0), 2.0, 13, 21, qcfg),
                    ModeError);
}

TEST_CASE("hermitian eigen: fixed matrices") {
    using cplx = std::complex<double>;
    std::vector<cplx> eye = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(hermitian_eigen_min(eye, 3) == doctest::Approx(1.0).epsilon(1e-13));
    std::vector<cplx> diag = {2, 0, 0, 0, -1, 0, 0, 0, 5};
    CHECK(hermitian_eigen_min(diag, 3) == doctest::Approx(-1.0).epsilon(1e-13));
    std::vector<cplx> pair = {2, 1, 1, 2};
    const auto ev = hermitian_eigenvalues(pair, 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-12));
    // complex Hermitian: [[2, i], [-i, 2]] has eigenvalues 1 and 3
    std::vector<cplx> cm = {cplx(2, 0), cplx(0, 1), cplx(0, -1), cplx(2, 0)};
    const auto cev = hermitian_eigenvalues(cm, 2);
    CHECK(cev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cev[1] == doctest::Approx(3.0).epsilon(1e-12));
    std::vector<cplx> bad = {cplx(1, 0), cplx(1, 0), cplx(0.5, 0.4), cplx(1, 0)};
    CHECK_THROWS_AS(hermitian_eigen_min(bad, 2), NotHermitianError);
}

TEST_CASE("hermitian eigen: shift and trace invariants") {
    using cplx = std::complex<double>;
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + (int)(rng() % 5);
        std::vector<cplx> a((std::size_t)n * n);
        for (int i = 0; i < n; ++i) {
            a[i * n + i] = u(rng);
            for (int j = i + 1; j < n; ++j) {
                const cplx z(u(rng), u(rng));
                a[i * n + j] = z;
                a[j * n + i] = std::conj(z);
            }
        }
        const auto ev = hermitian_eigenvalues(a, n);
        double trace = 0.0, sum = 0.0;
        for (int i = 0; i < n; ++i)
            trace += a[i * n + i].real();
        for (double e : ev)
            sum += e;
        CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
        std::vector<cplx> shifted = a;
        for (int i = 0; i < n; ++i)
            shifted[i * n + i] += 2.5;
        CHECK(hermitian_eigen_min(shifted, n) ==
              doctest::Approx(ev.front() + 2.5).epsilon(1e-10));
    }
}

TEST_CASE("pd: single point and classical gaussian gram") {
    const GramReport single =
        check_dunkl_pd(0.7, make_gaussian_spec(0.5), {0.0}, qcfg);
    CHECK(single.psd);
    CHECK(single.gram[0].real() == doctest::Approx(1.0).epsilon(1e-9));

    const GramReport rep =
        check_dunkl_pd(0.0, make_gaussian_spec(0.5), {-1.0, 0.0, 1.0}, qcfg);
    CHECK(rep.psd);
    // at k = 0 the pairing entries are the classical shifts phi(x_l - x_j)
    const std::vector<double> pts = {-1.0, 0.0, 1.0};
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            const double d = pts[l] - pts[j];
            CHECK(rep.gram[j * 3 + l].real() ==
                  doctest::Approx(std::exp(-d * d / 2.0)).epsilon(1e-8));
        }
    CHECK(rep.hermitian_defect <= 1e-8);
}

TEST_CASE("pd: duplicate points, odd specs, and oversized point sets are rejected") {
    CHECK_THROWS_AS(
        check_dunkl_pd(0.0, make_gaussian_spec(1.0), {1.0, 1.0}, qcfg),
        DomainError);
    FunctionSpec odd = make_raw_spec([](double x) { return x; }, Parity::odd);
    CHECK_THROWS_AS(check_dunkl_pd(0.0, odd, {0.0, 1.0}, qcfg), DomainError);
    std::vector<double> too_many(13);
    for (int i = 0; i < 13; ++i)
        too_many[i] = 0.25 * i;
    CHECK_THROWS_AS(
        check_dunkl_pd(0.0, make_gaussian_spec(1.0), too_many, qcfg),
        DomainError);
    CHECK_THROWS_AS(check_dunkl_pd(0.0, make_gaussian_spec(1.0), {}, qcfg),
                    DomainError);
}

TEST_CASE("pd: scaled kernel spec on the named point set") {
    MeasureSpec atom;
    atom.atoms = {{1.0, 1.0}};  // phi_t with t = 1: E_k(-t^2, x^2)
    const GramReport rep = check_dunkl_pd(
        1.0, make_radial_laplace_spec(atom), {-1.3, 0.2, 0.9, 2.0}, qcfg);
    CHECK(rep.psd);
    double max_diag = 0.0;
    for (int j = 0; j < 4; ++j)
        max_diag = std::max(max_diag, rep.gram[j * 4 + j].real());
    CHECK(rep.min_eigenvalue >= -1e-8 * max_diag);
}

TEST_CASE("pd: radial pairing reduces to classical shifts at k = 0") {
    MeasureSpec atoms;
    atoms.atoms = {{0.8, 1.0}, {2.2, 0.5}};
    const std::vector<double> pts = {-0.9, 0.4, 1.7};
    const GramReport rep =
        check_dunkl_pd(0.0, make_radial_laplace_spec(atoms), pts, qcfg);
    CHECK(rep.psd);
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            const double d2 = (pts[j] - pts[l]) * (pts[j] - pts[l]);
            const double expected =
                1.0 * std::exp(-0.8 * d2) + 0.5 * std::exp(-2.2 * d2);
            CHECK(rep.gram[j * 3 + l].real() ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
}

TEST_CASE("pd: k = 0 pipeline agrees with the direct bochner gram") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ps(0.3, 2.0), cs(0.2, 1.5),
        xs(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double p1 = ps(rng), p2 = ps(rng), c1 = cs(rng), c2 = cs(rng);
        auto mix = [=](double x) {
            return c1 * std::exp(-p1 * x * x) + c2 * std::exp(-p2 * x * x);
        };
        FunctionSpec spec = make_raw_spec(mix, Parity::even,
                                          quad::Envelope{c1 + c2, 0.0,
                                                         std::min(p1, p2), 0.0});
        spec.known_transform_weighted = [=](double k, double xi) {
            return (c1 * std::exp(-xi * xi / (4.0 * p1)) /
                        std::pow(2.0 * p1, k + 0.5) +
                    c2 * std::exp(-xi * xi / (4.0 * p2)) /
                        std::pow(2.0 * p2, k + 0.5)) *
                   std::pow(std::fabs(xi), 2.0 * k);
        };
        spec.transform_envelope =
            quad::Envelope{2.0, 0.0, 1.0 / (4.0 * std::max(p1, p2)), 0.0};
        std::vector<double> pts;
        while (pts.size() < 4) {
            const double cand = xs(rng);
            bool dup = false;
            for (double q : pts)
                dup = dup || std::fabs(q - cand) < 1e-3;
            if (!dup)
                pts.push_back(cand);
        }
        const GramReport rep = check_dunkl_pd(0.0, spec, pts, qcfg);
        CHECK(rep.psd);
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l)
                CHECK(rep.gram[j * 4 + l].real() ==
                      doctest::Approx(mix(pts[l] - pts[j])).epsilon(1e-7));
    }
}

TEST_CASE("pd: density measure gives a strictly positive minimum eigenvalue") {
    MeasureSpec mu;
    mu.density = MeasureSpec::Density{1.0, 1.0, 0.0};
    const GramReport rep = check_dunkl_pd(
        0.8, make_radial_laplace_spec(mu), {-0.9, 0.2, 1.1}, qcfg);
    CHECK(rep.psd);
    CHECK(rep.min_eigenvalue > 0.0);
}

TEST_CASE("schoenberg: single atom, zero measure, random atoms") {
    MeasureSpec atom;
    atom.atoms = {{1.0, 1.0}};
    const SchoenbergReport rep =
        check_schoenberg(1.0, atom, 3.0, 8, {-1.0, 0.3, 1.4}, qcfg);
    CHECK(rep.cm.pass);
    CHECK(rep.pd.psd);
    CHECK(rep.pass);

    MeasureSpec zero;
    const SchoenbergReport zrep =
        check_schoenberg(0.5, zero, 2.0, 5, {0.0, 1.0}, qcfg);
    CHECK(zrep.pass);
    CHECK(zrep.pd.min_eigenvalue == doctest::Approx(0.0));

    std::mt19937 rng(61);
    std::uniform_real_distribution<double> locs(0.0, 3.0), ms(0.1, 1.5),
        xs(-2.0, 2.0);
    for (int seed = 0; seed < 6; ++seed) {
        MeasureSpec mu;
        const int na = 1 + (int)(rng() % 3);
        for (int i = 0; i < na; ++i)
            mu.atoms.push_back({locs(rng), ms(rng)});
        const double k = seed % 2 == 0 ? 0.5 : 2.0;
        const SchoenbergReport r =
            check_schoenberg(k, mu, 3.0, 8, {xs(rng), 2.3, -0.4}, qcfg);
        CHECK(r.pass);
    }
}

TEST_CASE("vk preserves classical complete monotonicity") {
    // psi = e^{-x}: V_1 psi equals the decaying kernel at unit rate
    auto psi_exp = [](int n, double x) {
        const double s = n % 2 == 0 ? 1.0 : -1.0;
        return s * std::exp(-x);
    };
    const CMReport rep = check_vk_preserves_cm(1.0, psi_exp, 10, -2.0, 2.0, 6, 64);
    CHECK(rep.pass);
    for (double x : {-1.0, 0.5})
        CHECK(core::intertwine(1.0, [](double t) { return std::exp(-t); }, x, 64) ==
              doctest::Approx(core::dunkl_kernel(1.0, -x, 1.0)).epsilon(1e-11));

    auto psi_const = [](int n, double) { return n == 0 ? 1.0 : 0.0; };
    CHECK(check_vk_preserves_cm(1.0, psi_const, 10, -2.0, 2.0, 6, 48).pass);

    auto psi_exp3 = [](int n, double x) {
        double v = std::exp(-3.0 * x);
        for (int i = 0; i < n; ++i)
            v *= -3.0;
        return v;
    };
    CHECK(check_vk_preserves_cm(0.5, psi_exp3, 8, -1.5, 1.5, 4, 64).pass);
    CHECK_THROWS_AS(check_vk_preserves_cm(0.5, psi_exp3, 2, -1.0, 1.0, 4, 48),
                    DomainError);
}

TEST_CASE("convexity check: gaussian hypothesis fails near zero") {
    const ConvexityReport rep =
        check_convexity_theorem(0.0, make_gaussian_spec(0.5), 4.0, 41, qcfg);
    CHECK_FALSE(rep.hypothesis_convex);
    CHECK(rep.verdict == ConvexityReport::Verdict::silent);
}

TEST_CASE("convexity check: constructed transform-side instance") {
    // phi built from its k = 0 transform (1+|y|)^{-4}; its weighted profile
    // y (1+y)^{-4} dips concave near zero, so the gate stays silent, but the
    // inverse intertwiner is nonnegative on the grid.
    FunctionSpec phi;
    const quad::QuadratureConfig cfg;
    const transform::TransformConfig tcfg = transform::TransformConfig::make(0.0, cfg);
    phi = make_raw_spec(
        [tcfg](double x) {
            return 2.0 * tcfg.c_k *
                   quad::integrate_semi_infinite(
                       [x](double y) {
                           return std::cos(x * y) * std::pow(1.0 + y, -4.0);
                       },
                       quad::PowerEnvelope{1.0, 4.0}, tcfg.quad);
        },
        Parity::even, quad::PowerEnvelope{1.0, 1.5});
    phi.known_transform_weighted = [](double, double xi) {
        return std::pow(1.0 + std::fabs(xi), -4.0);
    };
    phi.transform_envelope = quad::PowerEnvelope{1.0, 4.0};

    const ConvexityReport rep = check_convexity_theorem(0.0, phi, 3.0, 31, qcfg);
    CHECK_FALSE(rep.hypothesis_convex);
    CHECK(rep.verdict == ConvexityReport::Verdict::silent);
    for (double x : {0.0, 0.7, 1.9, 3.0})
        CHECK(transform::inverse_intertwine(tcfg, phi, x) >= -1e-9);
}

TEST_CASE("convexity check: zero function exercises the conclusion path") {
    FunctionSpec zero = make_raw_spec([](double) { return 0.0; }, Parity::even,
                                      quad::Envelope{0.0, 0.0, 1.0, 0.0});
    zero.known_transform_weighted = [](double, double) { return 0.0; };
    zero.transform_envelope = quad::Envelope{0.0, 0.0, 1.0, 0.0};
    const ConvexityReport rep = check_convexity_theorem(0.5, zero, 2.0, 21, qcfg);
    CHECK(rep.applicable);
    CHECK(rep.verdict == ConvexityReport::Verdict::pass);
}
