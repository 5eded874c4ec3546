#include <doctest.h>

#include <numbers>

#include "pdlab/errors.hpp"
#include "pdlab/flows.hpp"
#include "test_helpers.hpp"

using namespace pdlab;
using namespace pdlab::testing;

namespace {
constexpr double kPi = std::numbers::pi;

FlowSpec base_spec(FlowFlavor flavor, const TorusGrid& grid, double dt, double T,
                   Scheme scheme = Scheme::etdrk4) {
    FlowSpec s;
    s.flavor = flavor;
    s.dt = dt;
    s.T = T;
    s.scheme = scheme;
    s.grid = grid;
    s.snapshot_count = 2;
    return s;
}
} // namespace

TEST_CASE("classical invariants: cosine and soliton values") {
    const TorusGrid g = make_grid(1.0, 16);
    FourierField cosine(g, true);
    cosine.set_mode_pair(1, cplx{1.0, 0.0});  // 2 cos(2 pi x)
    const ClassicalInvariants inv = classical_invariants(cosine);
    CHECK(std::abs(inv.mass) < 1e-15);
    CHECK(inv.l2 == doctest::Approx(2.0).epsilon(1e-13));
    REQUIRE(inv.energy.has_value());
    CHECK(*inv.energy == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-12));

    const TorusGrid big = make_grid(40.0, 128);
    const FourierField sol = profile_soliton(big, 1.0, 20.0);
    const ClassicalInvariants sinv = classical_invariants(sol);
    CHECK(sinv.mass.real() == doctest::Approx(-4.0).epsilon(1e-10));
    CHECK(sinv.l2 == doctest::Approx(16.0 / 3.0).epsilon(1e-10));

    // complex fields: no energy reported
    const FourierField qc = profile_random_bandlimited(g, 3, 8, 1.0, true);
    CHECK_FALSE(classical_invariants(qc).energy.has_value());
    const ClassicalInvariants zero = classical_invariants(FourierField(g, true));
    CHECK(std::abs(zero.mass) == 0.0);
    CHECK(zero.l2 == 0.0);
    CHECK(*zero.energy == 0.0);
}

TEST_CASE("zero data stays zero; snapshots are structured") {
    const TorusGrid g = make_grid(1.0, 16);
    FlowSpec spec = base_spec(FlowFlavor::kdv, g, 1e-3, 0.01);
    spec.snapshot_count = 5;
    const Trajectory traj = evolve(FourierField(g, true), spec);
    REQUIRE(traj.times.size() == 5);
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == doctest::Approx(0.01));
    for (std::size_t i = 1; i < traj.times.size(); ++i)
        CHECK(traj.times[i] > traj.times[i - 1]);
    for (const FourierField& f : traj.snapshots)
        for (const cplx& c : f.coeffs()) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("KdV soliton travels at speed 4") {
    const TorusGrid g = make_grid(40.0, 128);
    const FourierField q0 = profile_soliton(g, 1.0, 10.0);
    FlowSpec spec = base_spec(FlowFlavor::kdv, g, 1e-4, 0.25);
    const Trajectory traj = evolve(q0, spec);
    const std::vector<cplx> samples = grid_samples(traj.snapshots.back());
    std::size_t argmin = 0;
    for (std::size_t j = 1; j < samples.size(); ++j)
        if (samples[j].real() < samples[argmin].real()) argmin = j;
    const double x_min = g.sample_point(static_cast<int>(argmin));
    CHECK(std::abs(x_min - 11.0) <= g.period / g.sample_count + 1e-12);
}

TEST_CASE("NLS plane wave phase: omega = -(xi^2 +- 2 a^2)") {
    const TorusGrid g = make_grid(1.0, 8);
    const double a = 0.1, xi = 2.0 * kPi;
    FourierField q0(g, false);
    q0.set_coeff(1, cplx{a, 0.0});
    for (FlowFlavor flavor : {FlowFlavor::nls_plus, FlowFlavor::nls_minus}) {
        FlowSpec spec = base_spec(flavor, g, 1e-4, 1.0);
        const Trajectory traj = evolve(q0, spec);
        const cplx got = traj.snapshots.back().coeff(1);
        const double sign = (flavor == FlowFlavor::nls_plus) ? 1.0 : -1.0;
        const double omega = -(xi * xi + sign * 2.0 * a * a);
        const cplx expect = a * std::exp(cplx{0.0, -omega * 1.0});
        CHECK(std::abs(got - expect) <= 1e-8 * a);
        // no other mode is excited beyond round-off
        for (int n = -8; n <= 8; ++n)
            if (n != 1) CHECK(std::abs(traj.snapshots.back().coeff(n)) < 1e-12);
    }
}

TEST_CASE("KdV time reversibility through reflection") {
    const TorusGrid g = make_grid(1.0, 64);
    const FourierField q0 = profile_random_bandlimited(g, 101, 4, 0.2, false);
    FlowSpec fwd = base_spec(FlowFlavor::kdv, g, 1e-5, 0.02);
    const FourierField qT = evolve(q0, fwd).snapshots.back();
    const FourierField back = evolve(reflect(qT), fwd).snapshots.back();
    const FourierField expect = reflect(q0);
    CHECK(max_coeff_distance(back, expect) <= 1e-6);
}

TEST_CASE("NLS gauge invariance") {
    const TorusGrid g = make_grid(1.0, 32);
    const FourierField q0 = profile_random_bandlimited(g, 102, 8, 0.4, true);
    const cplx phase = std::exp(cplx{0.0, 0.8391});
    FourierField rotated = q0;
    for (cplx& c : rotated.coeffs()) c *= phase;
    FlowSpec spec = base_spec(FlowFlavor::nls_plus, g, 1e-4, 0.02);
    const FourierField a = evolve(rotated, spec).snapshots.back();
    FourierField b = evolve(q0, spec).snapshots.back();
    for (cplx& c : b.coeffs()) c *= phase;
    CHECK(max_coeff_distance(a, b) <= 1e-10);
}

TEST_CASE("the two schemes agree to high order") {
    const TorusGrid g = make_grid(1.0, 32);
    for (FlowFlavor flavor : {FlowFlavor::kdv, FlowFlavor::nls_minus,
                              FlowFlavor::hirota_plus, FlowFlavor::mkdv_real_minus}) {
        const bool real = flavor_is_real(flavor);
        const FourierField q0 = profile_random_bandlimited(g, 103, 4, 0.3, !real);
        const FourierField a =
            evolve(q0, base_spec(flavor, g, 1e-5, 0.005, Scheme::etdrk4)).snapshots.back();
        const FourierField b =
            evolve(q0, base_spec(flavor, g, 1e-5, 0.005, Scheme::integrating_factor_rk4))
                .snapshots.back();
        // two genuinely different schemes: agreement at their shared accuracy
        CHECK(max_coeff_distance(a, b) <= 1e-6);
    }
}

TEST_CASE("configuration and blow-up errors") {
    const TorusGrid g = make_grid(1.0, 16);
    const TorusGrid other = make_grid(1.0, 24);
    const FourierField q0 = profile_random_bandlimited(g, 104, 8, 0.5, false);

    FlowSpec wrong_grid = base_spec(FlowFlavor::kdv, other, 1e-4, 0.01);
    CHECK_THROWS_AS(evolve(q0, wrong_grid), ConfigError);

    FlowSpec bad_dt = base_spec(FlowFlavor::kdv, g, 0.0, 0.01);
    CHECK_THROWS_AS(evolve(q0, bad_dt), ConfigError);

    const FourierField qc = profile_random_bandlimited(g, 105, 8, 0.5, true);
    FlowSpec real_flavor = base_spec(FlowFlavor::mkdv_real_plus, g, 1e-4, 0.01);
    CHECK_THROWS_AS(evolve(qc, real_flavor), ConfigError);

    // gigantic data with a huge step blows up in finitely many steps
    const FourierField huge = profile_random_bandlimited(g, 106, 8, 2000.0, false);
    FlowSpec unstable = base_spec(FlowFlavor::kdv, g, 0.5, 50.0);
    try {
        evolve(huge, unstable);
        FAIL("expected BlowupError");
    } catch (const BlowupError& e) {
        CHECK(e.last_good_time >= 0.0);
        CHECK(e.last_good_time < 50.0);
    }
}

TEST_CASE("first snapshot equals the initial data exactly") {
    const TorusGrid g = make_grid(1.0, 16);
    const FourierField q0 = profile_random_bandlimited(g, 107, 8, 0.7, false);
    const Trajectory traj = evolve(q0, base_spec(FlowFlavor::kdv, g, 1e-4, 0.001));
    CHECK(max_coeff_distance(traj.snapshots.front(), q0) == 0.0);
}
