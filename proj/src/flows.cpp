#include "pdlab/flows.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "fft_backend.hpp"
#include "pdlab/errors.hpp"
#include "pdlab/kernels.hpp"

namespace pdlab {

bool flavor_is_real(FlowFlavor flavor) {
    return flavor == FlowFlavor::kdv || flavor == FlowFlavor::mkdv_real_plus ||
           flavor == FlowFlavor::mkdv_real_minus;
}

std::string flavor_name(FlowFlavor flavor) {
    switch (flavor) {
        case FlowFlavor::kdv: return "kdv";
        case FlowFlavor::nls_plus: return "nls_plus";
        case FlowFlavor::nls_minus: return "nls_minus";
        case FlowFlavor::mkdv_real_plus: return "mkdv_real_plus";
        case FlowFlavor::mkdv_real_minus: return "mkdv_real_minus";
        case FlowFlavor::hirota_plus: return "hirota_plus";
        case FlowFlavor::hirota_minus: return "hirota_minus";
    }
    return "unknown";
}

ClassicalInvariants classical_invariants(const FourierField& q) {
    const double period = q.grid().period;
    ClassicalInvariants inv;
    inv.mass = period * q.coeff(0);
    double sum_sq = 0.0, sum_grad = 0.0;
    for (int n = -q.cutoff(); n <= q.cutoff(); ++n) {
        const double mass = std::norm(q.coeff(n));
        sum_sq += mass;
        sum_grad += q.xi(n) * q.xi(n) * mass;
    }
    inv.l2 = period * sum_sq;
    if (q.real_valued()) {
        const FourierField q2 = multiply(q, q);
        double cubic = 0.0;
        for (int n = -q.cutoff(); n <= q.cutoff(); ++n)
            cubic += (q2.coeff(n) * q.coeff(-n)).real();
        inv.energy = 0.5 * period * sum_grad + period * cubic;
    }
    return inv;
}

namespace {

using kernels::Table;

struct StepCoeffs {
    std::vector<cplx> e, e2, q, f1, f2, f3;
};

class Stepper {
public:
    Stepper(const FlowSpec& spec)
        : spec_(spec),
          dim_(static_cast<std::size_t>(spec.grid.modes())),
          m_(static_cast<std::size_t>(spec.grid.sample_count)),
          table_(kernels::active()) {
        symbol_.resize(dim_);
        for (int n = -spec.grid.mode_cutoff; n <= spec.grid.mode_cutoff; ++n) {
            const double xi = spec.grid.xi(n);
            const bool nls = spec.flavor == FlowFlavor::nls_plus ||
                             spec.flavor == FlowFlavor::nls_minus;
            symbol_[idx(n)] = nls ? cplx{0.0, xi * xi} : cplx{0.0, xi * xi * xi};
        }
        pad_.assign(m_, cplx{});
        phys_.resize(m_);
        phys_d_.resize(m_);
        work_m_.resize(m_);
        spec_m_.resize(m_);
        for (auto* v : {&nu_, &na_, &nb_, &nc_, &sa_, &sb_, &sc_, &tmp_})
            v->resize(dim_);
    }

    const StepCoeffs& coeffs(double h) {
        auto it = coeff_cache_.find(h);
        if (it != coeff_cache_.end()) return it->second;
        return coeff_cache_.emplace(h, make_coeffs(h)).first->second;
    }

    void step_etdrk4(std::vector<cplx>& u, double h) {
        const StepCoeffs& c = coeffs(h);
        nonlinearity(u, nu_);
        // a = E2 u + Q Nu ; b = E2 u + Q Na ; c = E2 a + Q (2 Nb - Nu)
        table_.vmul(dim_, c.e2.data(), u.data(), sa_.data());
        table_.vmul_add(dim_, c.q.data(), nu_.data(), sa_.data());
        nonlinearity(sa_, na_);
        table_.vmul(dim_, c.e2.data(), u.data(), sb_.data());
        table_.vmul_add(dim_, c.q.data(), na_.data(), sb_.data());
        nonlinearity(sb_, nb_);
        for (std::size_t i = 0; i < dim_; ++i) tmp_[i] = 2.0 * nb_[i] - nu_[i];
        table_.vmul(dim_, c.e2.data(), sa_.data(), sc_.data());
        table_.vmul_add(dim_, c.q.data(), tmp_.data(), sc_.data());
        nonlinearity(sc_, nc_);
        // u = E u + f1 Nu + 2 f2 (Na + Nb) + f3 Nc
        table_.vmul(dim_, c.e.data(), u.data(), tmp_.data());
        u.swap(tmp_);
        table_.vmul_add(dim_, c.f1.data(), nu_.data(), u.data());
        for (std::size_t i = 0; i < dim_; ++i) tmp_[i] = 2.0 * (na_[i] + nb_[i]);
        table_.vmul_add(dim_, c.f2.data(), tmp_.data(), u.data());
        table_.vmul_add(dim_, c.f3.data(), nc_.data(), u.data());
    }

    void step_ifrk4(std::vector<cplx>& u, double h) {
        const StepCoeffs& c = coeffs(h);
        nonlinearity(u, nu_);  // k1
        for (std::size_t i = 0; i < dim_; ++i) tmp_[i] = u[i] + 0.5 * h * nu_[i];
        table_.vmul(dim_, c.e2.data(), tmp_.data(), sa_.data());
        nonlinearity(sa_, na_);  // k2
        table_.vmul(dim_, c.e2.data(), u.data(), sb_.data());
        for (std::size_t i = 0; i < dim_; ++i) sb_[i] += 0.5 * h * na_[i];
        nonlinearity(sb_, nb_);  // k3
        table_.vmul(dim_, c.e.data(), u.data(), sc_.data());
        table_.vmul(dim_, c.e2.data(), nb_.data(), tmp_.data());
        for (std::size_t i = 0; i < dim_; ++i) sc_[i] += h * tmp_[i];
        nonlinearity(sc_, nc_);  // k4
        // u = E u + h/6 (E k1 + 2 E2 (k2 + k3) + k4)
        table_.vmul(dim_, c.e.data(), u.data(), sa_.data());
        table_.vmul(dim_, c.e.data(), nu_.data(), tmp_.data());
        for (std::size_t i = 0; i < dim_; ++i) sb_[i] = 2.0 * (na_[i] + nb_[i]);
        table_.vmul_add(dim_, c.e2.data(), sb_.data(), tmp_.data());
        for (std::size_t i = 0; i < dim_; ++i)
            u[i] = sa_[i] + h / 6.0 * (tmp_[i] + nc_[i]);
    }

private:
    std::size_t idx(int n) const {
        return static_cast<std::size_t>(n + spec_.grid.mode_cutoff);
    }

    StepCoeffs make_coeffs(double h) const {
        StepCoeffs c;
        for (auto* v : {&c.e, &c.e2, &c.q, &c.f1, &c.f2, &c.f3}) v->resize(dim_);
        constexpr int contour_points = 64;
        for (std::size_t i = 0; i < dim_; ++i) {
            const cplx z = h * symbol_[i];
            c.e[i] = std::exp(z);
            c.e2[i] = std::exp(0.5 * z);
            // phi-functions averaged over a unit circle around z; they are
            // entire, so the 64-point trapezoid mean is exact to round-off.
            cplx q{}, f1{}, f2{}, f3{};
            for (int j = 0; j < contour_points; ++j) {
                const double theta =
                    2.0 * std::numbers::pi * (j + 0.5) / contour_points;
                const cplx zr = z + cplx{std::cos(theta), std::sin(theta)};
                const cplx ez = std::exp(zr);
                const cplx zr2 = zr * zr, zr3 = zr * zr * zr;
                q += (std::exp(0.5 * zr) - 1.0) / zr;
                f1 += (-4.0 - zr + ez * (4.0 - 3.0 * zr + zr2)) / zr3;
                f2 += (2.0 + zr + ez * (-2.0 + zr)) / zr3;
                f3 += (-4.0 - 3.0 * zr - zr2 + ez * (4.0 - zr)) / zr3;
            }
            const double w = h / contour_points;
            c.q[i] = q * w;
            c.f1[i] = f1 * w;
            c.f2[i] = f2 * w;
            c.f3[i] = f3 * w;
        }
        return c;
    }

    // out = Fourier coefficients of the flavor's nonlinearity at state u.
    void nonlinearity(const std::vector<cplx>& u, std::vector<cplx>& out) {
        to_phys(u, phys_);
        const double inv_m = 1.0 / static_cast<double>(m_);
        switch (spec_.flavor) {
            case FlowFlavor::kdv:
                table_.vmul(m_, phys_.data(), phys_.data(), work_m_.data());
                from_phys(out);
                scale_by_ixi(out, 3.0 * inv_m);
                return;
            case FlowFlavor::mkdv_real_plus:
            case FlowFlavor::mkdv_real_minus: {
                table_.vmul(m_, phys_.data(), phys_.data(), spec_m_.data());
                table_.vmul(m_, spec_m_.data(), phys_.data(), work_m_.data());
                from_phys(out);
                const double sgn = spec_.flavor == FlowFlavor::mkdv_real_plus ? 2.0 : -2.0;
                scale_by_ixi(out, sgn * inv_m);
                return;
            }
            case FlowFlavor::nls_plus:
            case FlowFlavor::nls_minus: {
                for (std::size_t j = 0; j < m_; ++j)
                    work_m_[j] = std::norm(phys_[j]) * phys_[j];
                from_phys(out);
                const cplx factor =
                    (spec_.flavor == FlowFlavor::nls_plus ? cplx{0.0, 2.0}
                                                          : cplx{0.0, -2.0}) *
                    inv_m;
                for (std::size_t i = 0; i < dim_; ++i) out[i] *= factor;
                return;
            }
            case FlowFlavor::hirota_plus:
            case FlowFlavor::hirota_minus: {
                // q' on the grid
                for (std::size_t i = 0; i < dim_; ++i) {
                    const int n = static_cast<int>(i) - spec_.grid.mode_cutoff;
                    tmp_[i] = cplx{0.0, spec_.grid.xi(n)} * u[i];
                }
                to_phys(tmp_, phys_d_);
                for (std::size_t j = 0; j < m_; ++j)
                    work_m_[j] = std::norm(phys_[j]) * phys_d_[j];
                from_phys(out);
                const double sgn =
                    spec_.flavor == FlowFlavor::hirota_plus ? 6.0 : -6.0;
                for (std::size_t i = 0; i < dim_; ++i) out[i] *= sgn * inv_m;
                return;
            }
        }
    }

    void to_phys(const std::vector<cplx>& u, std::vector<cplx>& phys) {
        std::fill(pad_.begin(), pad_.end(), cplx{});
        const int m = static_cast<int>(m_);
        for (int n = -spec_.grid.mode_cutoff; n <= spec_.grid.mode_cutoff; ++n)
            pad_[static_cast<std::size_t>(((n % m) + m) % m)] = u[idx(n)];
        fft::backward(m_, pad_.data(), phys.data());
    }

    // forward FFT of work_m_, truncated to the retained band; the 1/M
    // normalization is folded into the caller's multiplier.
    void from_phys(std::vector<cplx>& out) {
        fft::forward(m_, work_m_.data(), spec_m_.data());
        const int m = static_cast<int>(m_);
        for (int n = -spec_.grid.mode_cutoff; n <= spec_.grid.mode_cutoff; ++n)
            out[idx(n)] = spec_m_[static_cast<std::size_t>(((n % m) + m) % m)];
    }

    void scale_by_ixi(std::vector<cplx>& v, double factor) {
        for (int n = -spec_.grid.mode_cutoff; n <= spec_.grid.mode_cutoff; ++n)
            v[idx(n)] *= cplx{0.0, factor * spec_.grid.xi(n)};
    }

    FlowSpec spec_;
    std::size_t dim_, m_;
    const Table& table_;
    std::vector<cplx> symbol_;
    std::map<double, StepCoeffs> coeff_cache_;
    std::vector<cplx> pad_, phys_, phys_d_, work_m_, spec_m_;
    std::vector<cplx> nu_, na_, nb_, nc_, sa_, sb_, sc_, tmp_;
};

} // namespace

Trajectory evolve(const FourierField& q0, const FlowSpec& spec) {
    if (!(q0.grid() == spec.grid)) throw ConfigError("evolve: q0 grid does not match spec");
    if (!(spec.dt > 0.0)) throw ConfigError("evolve: dt must be positive");
    if (spec.T < 0.0) throw ConfigError("evolve: T must be nonnegative");
    if (flavor_is_real(spec.flavor) && !q0.real_valued())
        throw ConfigError("evolve: " + flavor_name(spec.flavor) + " requires real data");

    const int nmax = spec.grid.mode_cutoff;
    std::vector<cplx> u(q0.coeffs().begin(), q0.coeffs().end());

    const long long nsteps = static_cast<long long>(std::ceil(spec.T / spec.dt - 1e-9));
    const double remainder = spec.T - static_cast<double>(nsteps > 0 ? nsteps - 1 : 0) * spec.dt;
    const int snaps = std::max(spec.T > 0.0 ? 2 : 1, spec.snapshot_count);

    std::vector<long long> snap_steps;
    for (int s = 0; s < snaps; ++s) {
        const long long target =
            (snaps == 1) ? 0
                         : static_cast<long long>(std::llround(
                               static_cast<double>(s) * static_cast<double>(nsteps) /
                               (snaps - 1)));
        if (snap_steps.empty() || target > snap_steps.back()) snap_steps.push_back(target);
    }

    Trajectory traj;
    Stepper stepper(spec);
    const bool real_flavor = flavor_is_real(spec.flavor);

    auto record = [&](double t) {
        FourierField f(spec.grid, real_flavor);
        std::copy(u.begin(), u.end(), f.coeffs().begin());
        traj.times.push_back(t);
        traj.diagnostics.push_back(classical_invariants(f));
        traj.snapshots.push_back(std::move(f));
    };

    auto check_state = [&](double t_before) {
        double max_abs = 0.0;
        for (const cplx& c : u) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw BlowupError("evolve: non-finite coefficient; last good t = " +
                                      std::to_string(t_before),
                                  t_before);
            max_abs = std::max(max_abs, std::abs(c));
        }
        if (max_abs > 1e50)
            throw BlowupError("evolve: coefficient overflow; last good t = " +
                                  std::to_string(t_before),
                              t_before);
        if (real_flavor) {
            double defect = 0.0;
            for (int n = 1; n <= nmax; ++n)
                defect = std::max(defect,
                                  std::abs(u[static_cast<std::size_t>(n + nmax)] -
                                           std::conj(u[static_cast<std::size_t>(nmax - n)])));
            defect = std::max(defect, std::abs(u[static_cast<std::size_t>(nmax)].imag()));
            if (defect > 1e-8 * std::max(1.0, max_abs))
                throw InternalError("evolve: real flavor drifted off the real line");
            // re-project round-off
            u[static_cast<std::size_t>(nmax)].imag(0.0);
            for (int n = 1; n <= nmax; ++n) {
                const cplx avg = 0.5 * (u[static_cast<std::size_t>(n + nmax)] +
                                        std::conj(u[static_cast<std::size_t>(nmax - n)]));
                u[static_cast<std::size_t>(n + nmax)] = avg;
                u[static_cast<std::size_t>(nmax - n)] = std::conj(avg);
            }
        }
    };

    record(0.0);
    std::size_t next_snap = 1;
    double t = 0.0;
    for (long long step = 0; step < nsteps; ++step) {
        const double h = (step == nsteps - 1) ? remainder : spec.dt;
        const double t_before = t;
        if (spec.scheme == Scheme::etdrk4)
            stepper.step_etdrk4(u, h);
        else
            stepper.step_ifrk4(u, h);
        t = (step == nsteps - 1) ? spec.T : t + h;
        check_state(t_before);
        if (next_snap < snap_steps.size() && step + 1 == snap_steps[next_snap]) {
            record(t);
            ++next_snap;
        }
    }
    if (traj.times.size() < 2 && spec.T > 0.0) record(spec.T);
    return traj;
}

} // namespace pdlab
