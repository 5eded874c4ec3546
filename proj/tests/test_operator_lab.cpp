#include <doctest.h>

#include <numbers>

#include "pdlab/errors.hpp"
#include "pdlab/operator_lab.hpp"
#include "test_helpers.hpp"

using namespace pdlab;
using namespace pdlab::testing;

namespace {
constexpr double kPi = std::numbers::pi;

FourierField cosine_2cos(const TorusGrid& g) {
    FourierField f(g, true);
    f.set_mode_pair(1, cplx{1.0, 0.0});  // 2 cos(2 pi x / L)
    return f;
}
} // namespace

TEST_CASE("resolvent kernels: closed values and domain errors") {
    CHECK(resolvent_kernel_line(0.3, 0.3, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    const double at_zero = (1.0 + std::exp(-1.0)) / (2.0 * (1.0 - std::exp(-1.0)));
    CHECK(resolvent_kernel_circle(0.4, 0.4, 1.0, 1.0) ==
          doctest::Approx(at_zero).epsilon(1e-14));
    CHECK(at_zero == doctest::Approx(1.08198).epsilon(1e-5));
    CHECK_THROWS_AS(resolvent_kernel_line(0, 0, -1.0), DomainError);
    CHECK_THROWS_AS(resolvent_kernel_circle(0, 0, 0.0, 1.0), DomainError);
}

TEST_CASE("line resolvent-squared identity at random points") {
    GaussianRng rng(17);
    for (int i = 0; i < 100; ++i) {
        const double x = 3.0 * rng.normal(), y = 3.0 * rng.normal();
        const double kappa = 0.3 + std::abs(rng.normal());
        const double lhs = kappa * std::pow(resolvent_kernel_line(x, y, kappa), 2);
        // R0(.; -4 kappa^2) is the kernel at decay constant 2 kappa
        const double rhs = resolvent_kernel_line(x, y, 2.0 * kappa);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("circle resolvent-squared identity (unit period) at random points") {
    GaussianRng rng(18);
    const double L = 1.0;
    for (int i = 0; i < 100; ++i) {
        const double x = rng.uniform01(), y = rng.uniform01();
        const double kappa = 0.5 + 2.0 * rng.uniform01();
        const double e = std::exp(-kappa);
        const double a = (1.0 - e * e) / (kappa * (1.0 - e) * (1.0 - e));
        const double b = e / (2.0 * kappa * kappa * (1.0 - e) * (1.0 - e));
        const double lhs = std::pow(resolvent_kernel_circle(x, y, kappa, L), 2);
        const double rhs = a * resolvent_kernel_circle(x, y, 2.0 * kappa, L) + b;
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("circle kernel agrees with the summed method of images") {
    const double L = 2.7, kappa = 1.3;
    GaussianRng rng(19);
    for (int i = 0; i < 20; ++i) {
        const double x = L * rng.uniform01(), y = L * rng.uniform01();
        double images = 0.0;
        for (int ell = -40; ell <= 40; ++ell)
            images += std::exp(-kappa * std::abs(x - y - ell * L)) / (2.0 * kappa);
        CHECK(resolvent_kernel_circle(x, y, kappa, L) ==
              doctest::Approx(images).epsilon(1e-12));
    }
}

TEST_CASE("build_sandwich: zero field, cosine structure, hermiticity") {
    const TorusGrid g = make_grid(1.0, 16);
    const SandwichMatrix zero = build_sandwich(FourierField(g, true), 1.0);
    CHECK(frobenius_norm(zero.entries) == 0.0);

    const FourierField q = cosine_2cos(g);
    const SandwichMatrix s = build_sandwich(q, 1.0);
    const int nm = g.mode_cutoff;
    for (int m = -nm; m <= nm; ++m)
        for (int n = -nm; n <= nm; ++n) {
            const cplx got = s.entries.at(static_cast<std::size_t>(m + nm),
                                          static_cast<std::size_t>(n + nm));
            if (std::abs(m - n) == 1) {
                const double expect = 1.0 / (std::sqrt(g.xi(m) * g.xi(m) + 1.0) *
                                             std::sqrt(g.xi(n) * g.xi(n) + 1.0));
                CHECK(std::abs(got - cplx{expect, 0.0}) < 1e-15);
            } else {
                CHECK(std::abs(got) == 0.0);
            }
        }
    CHECK(max_hermitian_defect(s.entries) <= 1e-13);

    const FourierField r = profile_random_bandlimited(g, 33, 8, 1.0, false);
    CHECK(max_hermitian_defect(build_sandwich(r, 2.0).entries) <= 1e-13);
    CHECK_THROWS_AS(build_sandwich(q, 0.0), DomainError);
}

TEST_CASE("hs closed form: spec values and the kernel-side route") {
    const TorusGrid g = make_grid(1.0, 64);
    const FourierField q = cosine_2cos(g);
    const double e1 = std::exp(-1.0), e2 = std::exp(-2.0);
    const double expected =
        (1.0 - e2) / std::pow(1.0 - e1, 2) * 2.0 / (4.0 * kPi * kPi + 4.0);
    CHECK(hs_closed_form_circle(q, 1.0) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(expected == doctest::Approx(0.09954).epsilon(1e-4));

    FourierField one(g, true);
    one.set_coeff(0, cplx{1.0, 0.0});
    const double first_term = 2.0 * e1 / (std::pow(1.0 - e1, 2) * 4.0);
    CHECK(first_term == doctest::Approx(0.46034).epsilon(1e-4));
    const double sum_term = (1.0 - e2) / std::pow(1.0 - e1, 2) / 4.0;
    CHECK(hs_closed_form_circle(one, 1.0) ==
          doctest::Approx(first_term + sum_term).epsilon(1e-13));

    CHECK(hs_closed_form_circle(FourierField(g, true), 1.0) == 0.0);
    // kernel-side double sum agrees with the closed form to near round-off
    for (double kappa : {1.0, 3.0}) {
        CHECK(sandwich_hs_norm_sq(q, kappa) ==
              doctest::Approx(hs_closed_form_circle(q, kappa)).epsilon(1e-12));
    }
}

TEST_CASE("truncated-matrix Frobenius carries only the corner defect") {
    const TorusGrid g = make_grid(1.0, 64);
    const FourierField q = profile_random_bandlimited(g, 44, 32, 1.0, false);
    for (double kappa : {1.0, 8.0}) {
        const double closed = hs_closed_form_circle(q, kappa);
        const double fro = frobenius_norm(build_sandwich(q, kappa).entries);
        const double defect = closed - fro * fro;
        CHECK(defect > 0.0);  // compression only discards mass
        // O(N^-3) corner mass relative to a total that shrinks with kappa
        CHECK(defect / closed < 1e-4);
    }
}

TEST_CASE("line hs closed form by quadrature vs the large torus") {
    // Gaussian q(x) = a exp(-x^2/(2w^2)); under the line convention
    // qhat_line(xi) = a w exp(-xi^2 w^2/2).  As L grows, the circle closed
    // form converges to the line quadrature with no extra normalization.
    const double a = 0.7, w = 1.0, kappa = 1.5;
    const TorusGrid g = make_grid(40.0, 200);
    const FourierField q = profile_gaussian(g, a, w, 20.0);
    auto qhat_sq = [&](double xi) {
        const double v = a * w * std::exp(-0.5 * xi * xi * w * w);
        return v * v;
    };
    const double line = hs_closed_form_line(qhat_sq, kappa, 60.0, 20000);
    CHECK(hs_closed_form_circle(q, kappa) == doctest::Approx(line).epsilon(1e-4));
}

TEST_CASE("trace_power: zero matrix, coth sum, Hoelder bound") {
    const TorusGrid g = make_grid(1.0, 256);
    const ComplexMatrix zero(11);
    for (int ell : {1, 2, 3}) CHECK(std::abs(trace_power(zero, ell)) == 0.0);
    CHECK_THROWS_AS(trace_power(zero, 0), DomainError);

    FourierField one(g, true);
    one.set_coeff(0, cplx{1.0, 0.0});
    const SandwichMatrix s = build_sandwich(one, 1.0);
    double retained = 0.0;
    for (int n = -g.mode_cutoff; n <= g.mode_cutoff; ++n)
        retained += 1.0 / (g.xi(n) * g.xi(n) + 1.0);
    const cplx tr1 = trace_power(s.entries, 1);
    CHECK(std::abs(tr1 - cplx{retained, 0.0}) < 1e-13);
    const double coth_half = std::cosh(0.5) / std::sinh(0.5) / 2.0;
    CHECK(coth_half == doctest::Approx(1.08198).epsilon(1e-5));
    CHECK(tr1.real() == doctest::Approx(coth_half).epsilon(3e-4));

    const ComplexMatrix h = random_hermitian(20, 3);
    const double fro = frobenius_norm(h);
    for (int ell : {2, 3, 4, 5})
        CHECK(std::abs(trace_power(h, ell)) <= std::pow(fro, ell) * (1.0 + 1e-12));
}

TEST_CASE("trace linear term: diagonal constancy on the circle") {
    const TorusGrid g = make_grid(1.0, 256);
    const FourierField q = profile_random_bandlimited(g, 21, 64, 1.0, false);
    FourierField shifted = q;
    shifted.set_coeff(0, cplx{0.37, 0.0});
    const double kappa = 1.7;
    const cplx tr = trace(build_sandwich(shifted, kappa).entries);
    const double coth = 1.0 / std::tanh(kappa / 2.0);
    CHECK(tr.real() == doctest::Approx(0.37 * coth / (2.0 * kappa)).epsilon(3e-4));
    CHECK(std::abs(tr.imag()) < 1e-14);
}

TEST_CASE("akns half block: reflection intertwining, entrywise") {
    const TorusGrid g = make_grid(1.0, 12);
    const FourierField q = profile_random_bandlimited(g, 55, 6, 1.0, true);
    const double kappa = 1.3;
    const ComplexMatrix c = akns_half_block(q, kappa);
    const int nm = g.mode_cutoff;
    // U C U with (U f)(x) = f(-x), i.e. index negation, must equal the
    // swapped-multiplier block built from q(-x).
    const FourierField qr = reflect(q);
    for (int m = -nm; m <= nm; ++m)
        for (int n = -nm; n <= nm; ++n) {
            const cplx ucu = c.at(static_cast<std::size_t>(-m + nm),
                                  static_cast<std::size_t>(-n + nm));
            cplx swapped{};
            if (std::abs(m - n) <= nm)
                swapped = qr.coeff(m - n) /
                          (std::sqrt(cplx{kappa, g.xi(m)}) * std::sqrt(cplx{kappa, -g.xi(n)}));
            CHECK(std::abs(ucu - swapped) < 1e-14);
        }
}

TEST_CASE("akns half-block norm vs the log-weighted integral, kappa sweep") {
    const TorusGrid g = make_grid(1.0, 48);
    const FourierField q = profile_random_bandlimited(g, 66, 24, 1.0, true);
    double lo = 1e300, hi = 0.0;
    for (double kappa : {1.0, 2.0, 4.0, 8.0}) {
        const ComplexMatrix c = akns_half_block(q, kappa);
        const double fro2 = std::pow(frobenius_norm(c), 2);
        double integral = 0.0;  // discretized smallness functional
        for (int n = -g.mode_cutoff; n <= g.mode_cutoff; ++n) {
            const double xi = g.xi(n);
            integral += std::log(4.0 + xi * xi / (kappa * kappa)) * std::norm(q.coeff(n)) /
                        std::sqrt(4.0 * kappa * kappa + xi * xi);
        }
        const double ratio = fro2 / integral;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(lo > 0.05);
    CHECK(hi < 20.0);
    CHECK(hi / lo < 3.0);  // kappa-independent interval, observed ~1.2
}

TEST_CASE("akns_trace: constants, brute-force mode sum, line quadrature") {
    const TorusGrid g = make_grid(1.0, 64);
    CHECK(akns_trace(FourierField(g, false), 2.0) == 0.0);

    FourierField c(g, true);
    c.set_coeff(0, cplx{0.1, 0.0});
    const double expect = 0.01 / std::tanh(1.0) / 4.0;
    CHECK(expect == doctest::Approx(3.2826e-3).epsilon(1e-4));
    CHECK(akns_trace(c, 2.0) == doctest::Approx(expect).epsilon(1e-4));

    const FourierField q = profile_random_bandlimited(g, 77, 16, 1.0, true);
    const double kappa = 2.0;
    // brute-force double mode sum
    cplx brute{};
    for (int m = -g.mode_cutoff; m <= g.mode_cutoff; ++m)
        for (int k = -g.mode_cutoff; k <= g.mode_cutoff; ++k) {
            if (std::abs(m - k) > g.mode_cutoff) continue;
            brute += q.coeff(m - k) * std::conj(q.coeff(m - k)) /
                     (cplx{kappa, -g.xi(m)} * cplx{kappa, g.xi(k)});
        }
    CHECK(akns_trace(q, kappa) == doctest::Approx(brute.real()).epsilon(1e-12));

    // line check: sampled Gaussian; the full torus operator trace (banded
    // double sum over a large mode window, summed in-test) converges to the
    // line quadrature.  The compressed-matrix trace lags by the slowly
    // decaying 1/xi_max tail of the free index, checked separately.
    const double a = 0.5, w = 1.0;
    const TorusGrid big = make_grid(40.0, 256);
    const FourierField gq = profile_gaussian(big, a, w, 20.0);
    auto qhat_sq = [&](double xi) {
        const double v = a * w * std::exp(-0.5 * xi * xi * w * w);
        return v * v;
    };
    for (double kap : {1.0, 2.0}) {
        const double line = akns_trace_line(qhat_sq, kap, 60.0, 20000);
        double full = 0.0;
        const long long window = 400000;
        for (int d = -big.mode_cutoff; d <= big.mode_cutoff; ++d) {
            const double mass = std::norm(gq.coeff(d));
            if (mass < 1e-40) continue;
            double s = 0.0;
            for (long long k = -window; k <= window; ++k) {
                const double xk = 2.0 * kPi * static_cast<double>(k) / big.period;
                const double xkd = 2.0 * kPi * static_cast<double>(k + d) / big.period;
                s += (kap * kap + xkd * xk) / ((kap * kap + xkd * xkd) * (kap * kap + xk * xk));
            }
            // remaining 1/xi^2-type tails of the k sum, both sides
            s += 2.0 * std::pow(big.period / (2.0 * kPi), 2) / static_cast<double>(window);
            full += mass * s;
        }
        CHECK(full == doctest::Approx(line).epsilon(1e-4));
        CHECK(akns_trace(gq, kap) == doctest::Approx(line).epsilon(3e-2));
    }
}

TEST_CASE("build_akns_block equals half-block product and handles zero") {
    const TorusGrid g = make_grid(1.0, 10);
    CHECK(frobenius_norm(build_akns_block(FourierField(g, false), 1.0).entries) == 0.0);
    CHECK_THROWS_AS(build_akns_block(FourierField(g, false), -2.0), DomainError);

    const FourierField q = profile_random_bandlimited(g, 88, 5, 1.0, true);
    const SandwichMatrix b = build_akns_block(q, 1.5);
    // tr(B) must equal akns_trace up to round-off
    CHECK(trace(b.entries).real() == doctest::Approx(akns_trace(q, 1.5)).epsilon(1e-12));
}

TEST_CASE("perturbed_sandwich: reductions, sign, domain error") {
    const TorusGrid g = make_grid(1.0, 12);
    const FourierField dq = profile_random_bandlimited(g, 30, 6, 0.5, false);
    const double kappa = 1.0;

    const ComplexMatrix reduced = perturbed_sandwich(FourierField(g, true), dq, kappa);
    const SandwichMatrix direct = build_sandwich(dq, kappa);
    for (std::size_t i = 0; i < reduced.size() * reduced.size(); ++i)
        CHECK(std::abs(reduced.data()[i] - direct.entries.data()[i]) < 1e-12);

    const FourierField qref = profile_random_bandlimited(g, 31, 6, 0.5, false);
    const ComplexMatrix zero = perturbed_sandwich(qref, FourierField(g, true), kappa);
    CHECK(frobenius_norm(zero) < 1e-14);

    // delta q <= 0 pointwise pushes every eigenvalue to <= 0
    FourierField neg(g, true);
    neg.set_coeff(0, cplx{-0.8, 0.0});
    neg.set_mode_pair(1, cplx{0.2, 0.0});  // -0.8 + 0.4 cos <= -0.4 < 0
    const ComplexMatrix s = perturbed_sandwich(qref, neg, kappa);
    const HermitianEigen eig = hermitian_eigen(s);
    for (double lam : eig.values) CHECK(lam <= 1e-11);

    FourierField deep(g, true);
    deep.set_coeff(0, cplx{-50.0, 0.0});  // -d^2 - 50 + 1 is not positive definite
    CHECK_THROWS_AS(perturbed_sandwich(deep, dq, kappa), DomainError);
}
