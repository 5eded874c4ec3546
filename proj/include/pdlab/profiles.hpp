#ifndef PDLAB_PROFILES_HPP
#define PDLAB_PROFILES_HPP

#include <cstdint>
#include <random>

#include "pdlab/fourier_field.hpp"

namespace pdlab {

/// Deterministic normal deviates (hand-rolled Box-Muller over mt19937_64,
/// so byte-identical output does not depend on the standard library).
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}
    double uniform01() {
        return ((eng_() >> 11) + 0.5) * 0x1.0p-53;
    }
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

FourierField profile_zero(const TorusGrid& grid, bool complex_field = false);

/// amplitude * cos(2 pi k x / L)
FourierField profile_cosine(const TorusGrid& grid, double amplitude, int mode);

/// amplitude * exp(-(x-center)^2 / (2 width^2)), periodized by images.
FourierField profile_gaussian(const TorusGrid& grid, double amplitude, double width,
                              double center);

/// -2 kappa_sol^2 sech^2(kappa_sol (x - center)): the traveling wave of the
/// KdV sign convention used here, speed 4 kappa_sol^2.
FourierField profile_soliton(const TorusGrid& grid, double kappa_sol, double center);

/// Independent Gaussian coefficients on modes 1 <= |n| <= cutoff (zero
/// mean), scaled so E||q||_{L^2([0,1])}^2 = amplitude^2; Hermitian pairs for
/// the real variant, independent modes (including 0) for the complex one.
FourierField profile_random_bandlimited(const TorusGrid& grid, std::uint64_t seed,
                                        int cutoff, double amplitude,
                                        bool complex_field = false);

} // namespace pdlab

#endif
