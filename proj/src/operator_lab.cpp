#include "pdlab/operator_lab.hpp"

#include <cmath>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

double circle_distance(double u, double period) {
    double d = std::fmod(std::abs(u), period);
    return std::min(d, period - d);
}

void require_positive_kappa(double kappa, const char* who) {
    if (!(kappa > 0.0)) throw DomainError(std::string(who) + ": kappa must be positive");
}

} // namespace

double resolvent_kernel_line(double x, double y, double kappa) {
    require_positive_kappa(kappa, "resolvent_kernel_line");
    return std::exp(-kappa * std::abs(x - y)) / (2.0 * kappa);
}

double resolvent_kernel_circle(double x, double y, double kappa, double period) {
    require_positive_kappa(kappa, "resolvent_kernel_circle");
    if (!(period > 0.0)) throw DomainError("resolvent_kernel_circle: period must be positive");
    const double d = circle_distance(x - y, period);
    const double e = std::exp(-kappa * period);
    return (std::exp(-kappa * d) + std::exp(-kappa * (period - d))) /
           (2.0 * kappa * (1.0 - e));
}

ComplexMatrix multiplication_matrix(const FourierField& q) {
    const int nmax = q.cutoff();
    const std::size_t dim = static_cast<std::size_t>(q.grid().modes());
    ComplexMatrix t(dim);
    for (int m = -nmax; m <= nmax; ++m) {
        for (int n = -nmax; n <= nmax; ++n) {
            const int d = m - n;
            if (std::abs(d) <= nmax)
                t.at(static_cast<std::size_t>(m + nmax), static_cast<std::size_t>(n + nmax)) =
                    q.coeff(d);
        }
    }
    return t;
}

SandwichMatrix build_sandwich(const FourierField& q, double kappa) {
    require_positive_kappa(kappa, "build_sandwich");
    const int nmax = q.cutoff();
    const std::size_t dim = static_cast<std::size_t>(q.grid().modes());
    std::vector<double> half(dim);
    for (int n = -nmax; n <= nmax; ++n) {
        const double xi = q.xi(n);
        half[static_cast<std::size_t>(n + nmax)] = 1.0 / std::sqrt(xi * xi + kappa * kappa);
    }
    SandwichMatrix s{kappa, SandwichFlavor::kdv, q.grid(), ComplexMatrix(dim)};
    for (int m = -nmax; m <= nmax; ++m) {
        for (int n = -nmax; n <= nmax; ++n) {
            const int d = m - n;
            if (std::abs(d) > nmax) continue;
            s.entries.at(static_cast<std::size_t>(m + nmax), static_cast<std::size_t>(n + nmax)) =
                half[static_cast<std::size_t>(m + nmax)] * q.coeff(d) *
                half[static_cast<std::size_t>(n + nmax)];
        }
    }
    return s;
}

double hs_closed_form_circle(const FourierField& q, double kappa) {
    require_positive_kappa(kappa, "hs_closed_form_circle");
    const double period = q.grid().period;
    const double e = std::exp(-kappa * period);
    const double denom = (1.0 - e) * (1.0 - e);
    const double a = (1.0 - e * e) / (kappa * denom);
    const double b = e / (2.0 * kappa * kappa * denom);
    double mode_sum = 0.0;
    for (int n = -q.cutoff(); n <= q.cutoff(); ++n) {
        const double xi = q.xi(n);
        mode_sum += std::norm(q.coeff(n)) / (xi * xi + 4.0 * kappa * kappa);
    }
    const double q0 = std::norm(q.coeff(0));
    return a * period * mode_sum + b * period * period * q0;
}

std::vector<double> resolvent_pair_sums(const TorusGrid& grid, double kappa) {
    require_positive_kappa(kappa, "resolvent_pair_sums");
    const double dxi = 2.0 * std::numbers::pi / grid.period;
    const double dxi4 = dxi * dxi * dxi * dxi;
    auto d_of = [&](long long m) {
        const double xi = dxi * static_cast<double>(m);
        return xi * xi + kappa * kappa;
    };
    std::vector<double> w(static_cast<std::size_t>(grid.mode_cutoff) + 1, 0.0);
    for (int delta = 0; delta <= grid.mode_cutoff; ++delta) {
        double acc = 0.0;
        long long m = 0;
        for (;;) {
            acc += 1.0 / (d_of(m) * d_of(m - delta));
            if (m > 0) acc += 1.0 / (d_of(-m) * d_of(-m - delta));
            ++m;
            if (m > delta + 2) {
                // both tails: sum_{j>=m} 1/(dxi^4 j^2 (j-delta)^2) < 2/(3 dxi^4 gap^3) each side
                const double gap = static_cast<double>(m - delta - 1);
                const double tail = 4.0 / (3.0 * dxi4 * gap * gap * gap);
                if (tail <= 1e-14 * acc || m > 2000000) {
                    acc += 0.5 * tail;  // midpoint of [0, tail] halves the bias
                    break;
                }
            }
        }
        w[static_cast<std::size_t>(delta)] = acc;
    }
    return w;
}

double sandwich_hs_norm_sq(const FourierField& q, double kappa) {
    const std::vector<double> w = resolvent_pair_sums(q.grid(), kappa);
    double total = 0.0;
    for (int delta = -q.cutoff(); delta <= q.cutoff(); ++delta)
        total += std::norm(q.coeff(delta)) * w[static_cast<std::size_t>(std::abs(delta))];
    return total;
}

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals < 2) intervals = 2;
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) acc += f(a + i * h) * ((i % 2 != 0) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

double hs_closed_form_line(const std::function<double(double)>& qhat_sq, double kappa,
                           double xi_max, int intervals) {
    require_positive_kappa(kappa, "hs_closed_form_line");
    auto integrand = [&](double xi) {
        return qhat_sq(xi) / (xi * xi + 4.0 * kappa * kappa);
    };
    return simpson(integrand, -xi_max, xi_max, intervals) / kappa;
}

cplx trace_power(const ComplexMatrix& m, int ell) {
    if (ell < 1) throw DomainError("trace_power: ell must be >= 1");
    if (ell == 1) return trace(m);
    ComplexMatrix p = m;
    for (int i = 2; i < ell; ++i) p = matmul(p, m);
    return trace_of_product(p, m);
}

ComplexMatrix akns_half_block(const FourierField& q, double kappa) {
    require_positive_kappa(kappa, "akns_half_block");
    const int nmax = q.cutoff();
    const std::size_t dim = static_cast<std::size_t>(q.grid().modes());
    std::vector<cplx> left(dim), right(dim);
    for (int n = -nmax; n <= nmax; ++n) {
        const double xi = q.xi(n);
        left[static_cast<std::size_t>(n + nmax)] = 1.0 / std::sqrt(cplx{kappa, -xi});
        right[static_cast<std::size_t>(n + nmax)] = 1.0 / std::sqrt(cplx{kappa, xi});
    }
    ComplexMatrix c(dim);
    for (int m = -nmax; m <= nmax; ++m) {
        for (int n = -nmax; n <= nmax; ++n) {
            const int d = m - n;
            if (std::abs(d) > nmax) continue;
            c.at(static_cast<std::size_t>(m + nmax), static_cast<std::size_t>(n + nmax)) =
                left[static_cast<std::size_t>(m + nmax)] * q.coeff(d) *
                right[static_cast<std::size_t>(n + nmax)];
        }
    }
    return c;
}

FourierField conjugate(const FourierField& q) {
    FourierField out(q.grid(), q.real_valued());
    for (int n = -q.cutoff(); n <= q.cutoff(); ++n)
        out.set_coeff(n, std::conj(q.coeff(-n)));
    return out;
}

SandwichMatrix build_akns_block(const FourierField& q, double kappa) {
    require_positive_kappa(kappa, "build_akns_block");
    const ComplexMatrix c = akns_half_block(q, kappa);
    // Other half: (kappa + d)^{-1/2} qbar (kappa - d)^{-1/2}.
    const FourierField qbar = conjugate(q);
    const int nmax = q.cutoff();
    const std::size_t dim = static_cast<std::size_t>(q.grid().modes());
    std::vector<cplx> left(dim), right(dim);
    for (int n = -nmax; n <= nmax; ++n) {
        const double xi = q.xi(n);
        left[static_cast<std::size_t>(n + nmax)] = 1.0 / std::sqrt(cplx{kappa, xi});
        right[static_cast<std::size_t>(n + nmax)] = 1.0 / std::sqrt(cplx{kappa, -xi});
    }
    ComplexMatrix d(dim);
    for (int m = -nmax; m <= nmax; ++m) {
        for (int n = -nmax; n <= nmax; ++n) {
            const int delta = m - n;
            if (std::abs(delta) > nmax) continue;
            d.at(static_cast<std::size_t>(m + nmax), static_cast<std::size_t>(n + nmax)) =
                left[static_cast<std::size_t>(m + nmax)] * qbar.coeff(delta) *
                right[static_cast<std::size_t>(n + nmax)];
        }
    }
    return SandwichMatrix{kappa, SandwichFlavor::akns, q.grid(), matmul(c, d)};
}

double akns_trace(const FourierField& q, double kappa) {
    require_positive_kappa(kappa, "akns_trace");
    const int nmax = q.cutoff();
    // tr{G- T_q G+ T_qbar} with diagonal resolvents folded into the band sum.
    const FourierField qbar = conjugate(q);
    cplx acc{};
    for (int m = -nmax; m <= nmax; ++m) {
        const cplx gm = 1.0 / cplx{kappa, -q.xi(m)};
        for (int n = std::max(-nmax, m - nmax); n <= std::min(nmax, m + nmax); ++n) {
            const cplx gn = 1.0 / cplx{kappa, q.xi(n)};
            acc += gm * q.coeff(m - n) * gn * qbar.coeff(n - m);
        }
    }
    return acc.real();
}

double akns_trace_line(const std::function<double(double)>& qhat_sq, double kappa,
                       double xi_max, int intervals) {
    require_positive_kappa(kappa, "akns_trace_line");
    auto integrand = [&](double xi) {
        return 2.0 * kappa * qhat_sq(xi) / (4.0 * kappa * kappa + xi * xi);
    };
    return simpson(integrand, -xi_max, xi_max, intervals);
}

ComplexMatrix perturbed_sandwich(const FourierField& q_ref, const FourierField& delta_q,
                                 double kappa) {
    require_positive_kappa(kappa, "perturbed_sandwich");
    if (!q_ref.same_grid(delta_q)) throw ConfigError("perturbed_sandwich: grid mismatch");
    const int nmax = q_ref.cutoff();
    ComplexMatrix h = multiplication_matrix(q_ref);
    for (int n = -nmax; n <= nmax; ++n) {
        const double xi = q_ref.xi(n);
        h.at(static_cast<std::size_t>(n + nmax), static_cast<std::size_t>(n + nmax)) +=
            xi * xi + kappa * kappa;
    }
    const HermitianEigen eig = hermitian_eigen(h);
    if (eig.values.front() <= 1e-12)
        throw DomainError("perturbed_sandwich: shifted operator not positive definite; "
                          "minimal eigenvalue " + std::to_string(eig.values.front()));
    const ComplexMatrix inv_sqrt =
        hermitian_function(eig, [](double lam) { return 1.0 / std::sqrt(lam); });
    ComplexMatrix s = matmul(inv_sqrt, matmul(multiplication_matrix(delta_q), inv_sqrt));
    // symmetrize away the eigensolver round-off
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i; j < s.size(); ++j) {
            const cplx v = 0.5 * (s.at(i, j) + std::conj(s.at(j, i)));
            s.at(i, j) = v;
            s.at(j, i) = std::conj(v);
        }
    return s;
}

} // namespace pdlab
