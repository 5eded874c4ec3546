#include "pdlab/fallacy.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

double profile(double x) { return -std::tanh(x); }

struct Grid1d {
    double h;
    std::vector<double> x;
};

Grid1d dirichlet_grid(const FallacyOptions& opt) {
    if (opt.points < 2) throw ConfigError("fallacy: need at least 2 grid points");
    if (!(opt.x_max > opt.x_min)) throw ConfigError("fallacy: empty interval");
    if (!(opt.kappa > 0.0)) throw DomainError("fallacy: kappa must be positive");
    Grid1d g;
    g.h = (opt.x_max - opt.x_min) / (opt.points + 1);
    g.x.resize(opt.points);
    for (int i = 0; i < opt.points; ++i) g.x[i] = opt.x_min + (i + 1) * g.h;
    return g;
}

// log det of the symmetric tridiagonal matrix diag(a) with constant
// off-diagonal b, via LDL^T; requires positive definiteness.
double tridiag_logdet(const std::vector<double>& a, double b) {
    double logdet = 0.0;
    double d = a[0];
    for (std::size_t i = 0;;) {
        if (!(d > 0.0))
            throw DomainError("fallacy: shifted operator not positive definite");
        logdet += std::log(d);
        if (++i == a.size()) break;
        d = a[i] - b * b / d;
    }
    return logdet;
}

std::vector<double> shifted_diagonal(const Grid1d& g, const FallacyOptions& opt, double t) {
    std::vector<double> a(g.x.size());
    const double inv_h2 = 1.0 / (g.h * g.h);
    for (std::size_t i = 0; i < g.x.size(); ++i)
        a[i] = 2.0 * inv_h2 + profile(g.x[i] + t) + opt.kappa * opt.kappa;
    return a;
}

} // namespace

std::vector<FallacyPoint> fallacy_logdet_curve(std::span<const double> times,
                                               const FallacyOptions& opt) {
    const Grid1d g = dirichlet_grid(opt);
    const double off = -1.0 / (g.h * g.h);
    const double base = tridiag_logdet(shifted_diagonal(g, opt, 0.0), off);
    std::vector<FallacyPoint> out;
    out.reserve(times.size());
    for (double t : times)
        out.push_back({t, tridiag_logdet(shifted_diagonal(g, opt, t), off) - base});
    return out;
}

double fallacy_logdet_dense(double t, const FallacyOptions& opt) {
    const Grid1d g = dirichlet_grid(opt);
    const int n = opt.points;
    const double inv_h2 = 1.0 / (g.h * g.h);

    std::vector<double> h0(static_cast<std::size_t>(n) * n, 0.0);
    const std::vector<double> diag0 = shifted_diagonal(g, opt, 0.0);
    for (int i = 0; i < n; ++i) {
        h0[static_cast<std::size_t>(i) * n + i] = diag0[static_cast<std::size_t>(i)];
        if (i + 1 < n) {
            h0[static_cast<std::size_t>(i) * n + i + 1] = -inv_h2;
            h0[static_cast<std::size_t>(i + 1) * n + i] = -inv_h2;
        }
    }
    std::vector<double> lam(static_cast<std::size_t>(n));
    if (LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'V', 'U', n, h0.data(), n, lam.data()) != 0)
        throw std::runtime_error("fallacy: dsyev failed on H0");
    if (lam[0] <= 0.0) throw DomainError("fallacy: H0 not positive definite");

    // S = H0^{-1/2} diag(dq) H0^{-1/2} with H0^{-1/2} = V lam^{-1/2} V^T.
    std::vector<double> inv_sqrt(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += h0[static_cast<std::size_t>(i) * n + k] *
                       h0[static_cast<std::size_t>(j) * n + k] / std::sqrt(lam[static_cast<std::size_t>(k)]);
            inv_sqrt[static_cast<std::size_t>(i) * n + j] = acc;
        }
    std::vector<double> s(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) {
                const double dq = profile(g.x[static_cast<std::size_t>(k)] + t) -
                                  profile(g.x[static_cast<std::size_t>(k)]);
                acc += inv_sqrt[static_cast<std::size_t>(i) * n + k] * dq *
                       inv_sqrt[static_cast<std::size_t>(k) * n + j];
            }
            s[static_cast<std::size_t>(i) * n + j] = acc;
        }
    std::vector<double> mu(static_cast<std::size_t>(n));
    if (LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', n, s.data(), n, mu.data()) != 0)
        throw std::runtime_error("fallacy: dsyev failed on the sandwich");
    double logdet = 0.0;
    for (double m : mu) {
        if (m <= -1.0) throw DomainError("fallacy: sandwich eigenvalue at or below -1");
        logdet += std::log1p(m);
    }
    return logdet;
}

} // namespace pdlab
