#include "pdlab/fourier_field.hpp"

#include <algorithm>
#include <cmath>

#include "fft_backend.hpp"
#include "pdlab/kernels.hpp"

namespace pdlab {

int next_fft_size(int n) {
    if (n < 1) n = 1;
    for (int m = n;; ++m) {
        int r = m;
        while (r % 2 == 0) r /= 2;
        while (r % 3 == 0) r /= 3;
        while (r % 5 == 0) r /= 5;
        if (r == 1) return m;
    }
}

namespace {

bool all_finite(std::span<const cplx> v) {
    return std::all_of(v.begin(), v.end(), [](cplx c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

// Mirror the n >= 0 coefficients so Hermitian symmetry holds exactly.
void enforce_real_symmetry(FourierField& f) {
    f.set_coeff(0, cplx{f.coeff(0).real(), 0.0});
    for (int n = 1; n <= f.cutoff(); ++n) f.set_coeff(-n, std::conj(f.coeff(n)));
}

FourierField spectrum_to_field(const TorusGrid& grid, std::span<const cplx> spectrum,
                               bool real_valued) {
    FourierField out(grid, real_valued);
    const int m = grid.sample_count;
    const double inv_m = 1.0 / m;
    for (int n = -grid.mode_cutoff; n <= grid.mode_cutoff; ++n) {
        const int k = ((n % m) + m) % m;
        out.set_coeff(n, spectrum[static_cast<std::size_t>(k)] * inv_m);
    }
    if (real_valued) enforce_real_symmetry(out);
    return out;
}

} // namespace

FourierField FourierField::from_coeffs(TorusGrid grid, std::vector<cplx> coeffs,
                                       bool real_valued) {
    if (static_cast<int>(coeffs.size()) != grid.modes())
        throw ConfigError("FourierField: coefficient count does not match grid");
    FourierField f(grid, real_valued);
    f.coeffs_ = std::move(coeffs);
    if (!all_finite(f.coeffs_)) throw ConfigError("FourierField: non-finite coefficient");
    if (real_valued) {
        if (std::abs(f.coeff(0).imag()) > 1e-12)
            throw ConfigError("FourierField: real field with complex mean");
        for (int n = 1; n <= f.cutoff(); ++n) {
            if (std::abs(f.coeff(-n) - std::conj(f.coeff(n))) >
                1e-12 * (1.0 + std::abs(f.coeff(n))))
                throw ConfigError("FourierField: real field lacks Hermitian symmetry");
        }
        enforce_real_symmetry(f);
    }
    return f;
}

void FourierField::set_mode_pair(int n, cplx v) {
    if (!real_) throw ConfigError("set_mode_pair: field is not real_valued");
    if (n == 0) {
        set_coeff(0, cplx{v.real(), 0.0});
        return;
    }
    set_coeff(n, v);
    set_coeff(-n, std::conj(v));
}

FourierField analyze(const TorusGrid& grid, std::span<const cplx> samples) {
    if (static_cast<int>(samples.size()) != grid.sample_count)
        throw ConfigError("analyze: sample count does not match grid");
    std::vector<cplx> spectrum(samples.size());
    fft::forward(samples.size(), samples.data(), spectrum.data());
    return spectrum_to_field(grid, spectrum, false);
}

FourierField analyze(const TorusGrid& grid, std::span<const double> samples) {
    if (static_cast<int>(samples.size()) != grid.sample_count)
        throw ConfigError("analyze: sample count does not match grid");
    std::vector<cplx> buf(samples.begin(), samples.end());
    std::vector<cplx> spectrum(buf.size());
    fft::forward(buf.size(), buf.data(), spectrum.data());
    return spectrum_to_field(grid, spectrum, true);
}

std::vector<cplx> synthesize(const FourierField& field, std::span<const double> points) {
    std::vector<cplx> out(points.size());
    const int nmax = field.cutoff();
    for (std::size_t p = 0; p < points.size(); ++p) {
        const double x = points[p];
        if (field.real_valued()) {
            double acc = field.coeff(0).real();
            for (int n = 1; n <= nmax; ++n) {
                const double phase = field.xi(n) * x;
                const cplx c = field.coeff(n);
                acc += 2.0 * (c.real() * std::cos(phase) - c.imag() * std::sin(phase));
            }
            out[p] = cplx{acc, 0.0};
        } else {
            cplx acc = field.coeff(0);
            for (int n = 1; n <= nmax; ++n) {
                const double phase = field.xi(n) * x;
                const cplx e{std::cos(phase), std::sin(phase)};
                acc += field.coeff(n) * e + field.coeff(-n) * std::conj(e);
            }
            out[p] = acc;
        }
    }
    return out;
}

std::vector<cplx> grid_samples(const FourierField& field) {
    const int m = field.grid().sample_count;
    std::vector<cplx> spectrum(static_cast<std::size_t>(m), cplx{});
    for (int n = -field.cutoff(); n <= field.cutoff(); ++n) {
        const int k = ((n % m) + m) % m;
        spectrum[static_cast<std::size_t>(k)] = field.coeff(n);
    }
    std::vector<cplx> out(static_cast<std::size_t>(m));
    fft::backward(spectrum.size(), spectrum.data(), out.data());
    return out;
}

FourierField derivative(const FourierField& field, int order) {
    if (order < 0) throw DomainError("derivative: negative order");
    FourierField out = field;
    if (order == 0) return out;
    // i^order is exact; xi^order keeps xi(-n)^k = (-1)^k xi(n)^k exactly,
    // so Hermitian symmetry survives bit-for-bit.
    static constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx rot = i_pow[order % 4];
    for (int n = -field.cutoff(); n <= field.cutoff(); ++n) {
        const double w = std::pow(field.xi(n), order);
        out.set_coeff(n, field.coeff(n) * rot * w);
    }
    return out;
}

FourierField multiply(const FourierField& f, const FourierField& g) {
    if (!f.same_grid(g)) throw ConfigError("multiply: grid mismatch");
    const std::vector<cplx> fs = grid_samples(f);
    const std::vector<cplx> gs = grid_samples(g);
    std::vector<cplx> prod(fs.size());
    kernels::active().vmul(fs.size(), fs.data(), gs.data(), prod.data());
    std::vector<cplx> spectrum(prod.size());
    fft::forward(prod.size(), prod.data(), spectrum.data());
    return spectrum_to_field(f.grid(), spectrum, f.real_valued() && g.real_valued());
}

double sobolev_norm(const FourierField& field, double s) {
    const auto coeffs = field.coeffs();
    std::vector<double> w(coeffs.size());
    for (int n = -field.cutoff(); n <= field.cutoff(); ++n) {
        const double xi = field.xi(n);
        w[static_cast<std::size_t>(n + field.cutoff())] = std::pow(1.0 + xi * xi, s);
    }
    return std::sqrt(kernels::active().weighted_norm2(coeffs.size(), w.data(), coeffs.data()));
}

FourierField translate(const FourierField& field, double a) {
    FourierField out = field;
    for (int n = -field.cutoff(); n <= field.cutoff(); ++n) {
        const double phase = -field.xi(n) * a;
        out.set_coeff(n, field.coeff(n) * cplx{std::cos(phase), std::sin(phase)});
    }
    if (field.real_valued()) {
        FourierField fixed = out;
        fixed.set_coeff(0, cplx{out.coeff(0).real(), 0.0});
        for (int n = 1; n <= field.cutoff(); ++n) fixed.set_coeff(-n, std::conj(out.coeff(n)));
        return fixed;
    }
    return out;
}

FourierField scaled(const FourierField& field, double factor) {
    FourierField out = field;
    for (cplx& c : out.coeffs()) c *= factor;
    return out;
}

FourierField reflect(const FourierField& field) {
    FourierField out = field;
    for (int n = -field.cutoff(); n <= field.cutoff(); ++n)
        out.set_coeff(n, field.coeff(-n));
    return out;
}

cplx mean_value(const FourierField& field) { return field.coeff(0); }

} // namespace pdlab
