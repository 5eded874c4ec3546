#ifndef PDLAB_GRID_HPP
#define PDLAB_GRID_HPP

#include <numbers>
#include <vector>

#include "pdlab/errors.hpp"

namespace pdlab {

/// Uniform grid on a period-L torus.  Fields keep Fourier modes |n| <= N
/// with frequencies xi_n = 2*pi*n/L; physical work happens on M equispaced
/// samples.  M >= 4N+1 keeps cubic products of retained modes alias-free.
struct TorusGrid {
    double period = 1.0;
    int mode_cutoff = 1;
    int sample_count = 5;

    TorusGrid() = default;
    TorusGrid(double L, int n_max, int m_samples)
        : period(L), mode_cutoff(n_max), sample_count(m_samples) {
        if (!(period > 0.0)) throw ConfigError("TorusGrid: period must be positive");
        if (mode_cutoff < 1) throw ConfigError("TorusGrid: mode_cutoff must be >= 1");
        if (sample_count < 4 * mode_cutoff + 1)
            throw ConfigError("TorusGrid: sample_count must be >= 4*mode_cutoff + 1");
    }

    int modes() const { return 2 * mode_cutoff + 1; }
    double xi(int n) const { return 2.0 * std::numbers::pi * n / period; }
    double max_frequency() const { return xi(mode_cutoff); }
    double sample_point(int j) const { return period * j / sample_count; }

    std::vector<double> sample_points() const {
        std::vector<double> x(sample_count);
        for (int j = 0; j < sample_count; ++j) x[j] = sample_point(j);
        return x;
    }

    bool operator==(const TorusGrid&) const = default;
};

/// Smallest 5-smooth integer >= n (a fast FFT length).
int next_fft_size(int n);

/// Grid with the default dealiased sample count for the given cutoff.
inline TorusGrid make_grid(double period, int mode_cutoff) {
    return {period, mode_cutoff, next_fft_size(4 * mode_cutoff + 1)};
}

} // namespace pdlab

#endif
