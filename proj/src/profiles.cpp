#include "pdlab/profiles.hpp"

#include <cmath>
#include <functional>

#include "pdlab/errors.hpp"

namespace pdlab {

FourierField profile_zero(const TorusGrid& grid, bool complex_field) {
    return FourierField(grid, !complex_field);
}

FourierField profile_cosine(const TorusGrid& grid, double amplitude, int mode) {
    if (mode < 1 || mode > grid.mode_cutoff)
        throw ConfigError("profile_cosine: mode outside retained band");
    FourierField f(grid, true);
    f.set_mode_pair(mode, cplx{0.5 * amplitude, 0.0});
    return f;
}

namespace {

FourierField from_samples(const TorusGrid& grid, const std::function<double(double)>& fn) {
    std::vector<double> samples(static_cast<std::size_t>(grid.sample_count));
    for (int j = 0; j < grid.sample_count; ++j)
        samples[static_cast<std::size_t>(j)] = fn(grid.sample_point(j));
    return analyze(grid, std::span<const double>(samples));
}

} // namespace

FourierField profile_gaussian(const TorusGrid& grid, double amplitude, double width,
                              double center) {
    if (!(width > 0.0)) throw ConfigError("profile_gaussian: width must be positive");
    const double L = grid.period;
    return from_samples(grid, [&](double x) {
        double acc = 0.0;
        for (int img = -3; img <= 3; ++img) {
            const double u = x - center - img * L;
            acc += std::exp(-0.5 * u * u / (width * width));
        }
        return amplitude * acc;
    });
}

FourierField profile_soliton(const TorusGrid& grid, double kappa_sol, double center) {
    if (!(kappa_sol > 0.0)) throw ConfigError("profile_soliton: kappa_sol must be positive");
    return from_samples(grid, [&](double x) {
        const double s = 1.0 / std::cosh(kappa_sol * (x - center));
        return -2.0 * kappa_sol * kappa_sol * s * s;
    });
}

FourierField profile_random_bandlimited(const TorusGrid& grid, std::uint64_t seed,
                                        int cutoff, double amplitude, bool complex_field) {
    if (cutoff < 1 || cutoff > grid.mode_cutoff)
        throw ConfigError("profile_random_bandlimited: cutoff outside retained band");
    GaussianRng rng(seed);
    FourierField f(grid, !complex_field);
    if (complex_field) {
        const double scale = amplitude / std::sqrt(2.0 * (2.0 * cutoff + 1.0));
        for (int n = -cutoff; n <= cutoff; ++n)
            f.set_coeff(n, scale * cplx{rng.normal(), rng.normal()});
    } else {
        const double scale = amplitude / std::sqrt(4.0 * cutoff);
        for (int n = 1; n <= cutoff; ++n)
            f.set_mode_pair(n, scale * cplx{rng.normal(), rng.normal()});
    }
    return f;
}

} // namespace pdlab
