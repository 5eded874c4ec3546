#include "pdlab/norms.hpp"

#include <cmath>
#include <limits>

#include "pdlab/errors.hpp"
#include "pdlab/operator_lab.hpp"

namespace pdlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct LrAccumulator {
    double r;
    double sum = 0.0;  // sum of term^r, or running max when r = inf
    explicit LrAccumulator(double r_) : r(r_) {}
    void add(double term) {
        if (term <= 0.0) return;
        if (std::isinf(r))
            sum = std::max(sum, term);
        else
            sum += std::pow(term, r);
    }
    double finish() const { return std::isinf(r) ? sum : std::pow(sum, 1.0 / r); }
};

double bin_weight(WeightKind kind, double xi, double kappa) {
    const double k2 = kappa * kappa;
    const double x2 = xi * xi;
    // The *_diff kinds are the differences of resolvent multipliers
    //   low:  4 (k/2)^2/(x^2+k^2) - k^2/(x^2+4k^2)
    //   band: k^2/(x^2+4k^2) - (k/2)^2/(x^2+k^2)
    // written in the algebraically identical single-fraction form; the
    // literal subtraction cancels catastrophically once kappa >> xi.
    switch (kind) {
        case WeightKind::resolvent: return k2 / (x2 + 4.0 * k2);
        case WeightKind::low_pass_diff:
            return 3.0 * (k2 / (x2 + k2)) * (k2 / (x2 + 4.0 * k2));
        case WeightKind::band_pass_diff:
            return 0.75 * (k2 / (x2 + k2)) * (x2 / (x2 + 4.0 * k2));
    }
    return 0.0;
}

void validate_r(double r) {
    if (!(r >= 1.0)) throw DomainError("norms: summability r must be >= 1");
}

} // namespace

double besov_norm(const FourierField& f, double s, double r) {
    validate_r(r);
    double low = 0.0;
    // bins[k] holds the mass of 2^k < |xi| <= 2^{k+1}
    std::vector<double> bins;
    for (int n = -f.cutoff(); n <= f.cutoff(); ++n) {
        const double mass = std::norm(f.coeff(n));
        if (mass == 0.0) continue;
        const double axi = std::abs(f.xi(n));
        if (axi <= 1.0) {
            low += mass;
            continue;
        }
        std::size_t k = 0;
        double top = 2.0;
        while (axi > top) {
            top *= 2.0;
            ++k;
        }
        if (bins.size() <= k) bins.resize(k + 1, 0.0);
        bins[k] += mass;
    }
    LrAccumulator acc(r);
    acc.add(std::sqrt(low));
    double n_dyadic = 1.0;
    for (double mass : bins) {
        acc.add(std::pow(n_dyadic, s) * std::sqrt(mass));
        n_dyadic *= 2.0;
    }
    return acc.finish();
}

double weighted_form(const FourierField& f, WeightKind kind, double kappa) {
    if (!(kappa > 0.0)) throw DomainError("weighted_form: kappa must be positive");
    double acc = 0.0;
    for (int n = -f.cutoff(); n <= f.cutoff(); ++n)
        acc += bin_weight(kind, f.xi(n), kappa) * std::norm(f.coeff(n));
    return f.grid().period * acc;
}

double surrogate_norm(const FourierField& f, double s, double r, double kappa0,
                      SurrogateFamily family) {
    validate_r(r);
    if (!(kappa0 >= 1.0)) throw DomainError("surrogate_norm: kappa0 must be >= 1");
    double eff_s = s;
    WeightKind kind{};
    double prefactor = 1.0;
    switch (family) {
        case SurrogateFamily::besov1:
            if (!(s > -1.0 && s < 0.0))
                throw DomainError("surrogate_norm: besov1 requires -1 < s < 0");
            kind = WeightKind::resolvent;
            break;
        case SurrogateFamily::besov2:
            if (s != -1.0) throw DomainError("surrogate_norm: besov2 fixes s = -1");
            kind = WeightKind::low_pass_diff;
            eff_s = -1.0;
            break;
        case SurrogateFamily::besov3:
            if (!(s > -1.0 && s < 1.0))
                throw DomainError("surrogate_norm: besov3 requires -1 < s < 1");
            kind = WeightKind::band_pass_diff;
            break;
        case SurrogateFamily::z:
            if (!(s > -1.0 && s < 0.0))
                throw DomainError("surrogate_norm: z family requires -1 < s < 0");
            kind = WeightKind::resolvent;
            prefactor = 2.0;
            break;
    }

    const double L = f.grid().period;
    double p_total = 0.0;       // L * sum |qhat|^2
    double p_grad = 0.0;        // L * sum xi^2 |qhat|^2
    for (int n = -f.cutoff(); n <= f.cutoff(); ++n) {
        const double mass = std::norm(f.coeff(n));
        p_total += mass;
        p_grad += f.xi(n) * f.xi(n) * mass;
    }
    p_total *= L;
    p_grad *= L;
    if (p_total == 0.0) return 0.0;

    const double switch_kappa = 1e9 * (f.grid().max_frequency() + 1.0);
    LrAccumulator acc(r);
    double n_dyadic = 1.0;
    while (kappa0 * n_dyadic < switch_kappa) {
        const double form = prefactor * weighted_form(f, kind, kappa0 * n_dyadic);
        acc.add(std::pow(n_dyadic, eff_s) * std::sqrt(form));
        n_dyadic *= 2.0;
    }
    // Beyond switch_kappa each multiplier equals its large-kappa limit to
    // machine precision: 1/4 (resolvent), 3/4 (low-pass), (3/16) xi^2/kappa^2
    // (band-pass).  The remaining rungs form an exact geometric series.
    double c_term, ratio_exp;
    if (kind == WeightKind::band_pass_diff) {
        c_term = std::sqrt(prefactor * 0.1875 * p_grad) / (kappa0 * n_dyadic) *
                 std::pow(n_dyadic, eff_s);
        ratio_exp = eff_s - 1.0;
    } else {
        const double limit = (kind == WeightKind::resolvent) ? 0.25 : 0.75;
        c_term = std::sqrt(prefactor * limit * p_total) * std::pow(n_dyadic, eff_s);
        ratio_exp = eff_s;
    }
    if (std::isinf(r)) {
        acc.add(c_term);  // later rungs only shrink
    } else {
        const double q = std::pow(2.0, r * ratio_exp);
        acc.sum += std::pow(c_term, r) / (1.0 - q);
    }
    return acc.finish();
}

double xy_norm(const FourierField& f, double kappa0, XYKind which) {
    if (!(kappa0 > 0.0)) throw DomainError("xy_norm: kappa0 must be positive");
    const double L = f.grid().period;
    double low = 0.0;
    std::vector<double> bins;  // bins[k]: kappa0 2^k < |xi| <= kappa0 2^{k+1}
    for (int n = -f.cutoff(); n <= f.cutoff(); ++n) {
        const double mass = L * std::norm(f.coeff(n));
        if (mass == 0.0) continue;
        const double axi = std::abs(f.xi(n));
        if (axi <= kappa0) {
            low += mass;
            continue;
        }
        std::size_t k = 0;
        double top = 2.0 * kappa0;
        while (axi > top) {
            top *= 2.0;
            ++k;
        }
        if (bins.size() <= k) bins.resize(k + 1, 0.0);
        bins[k] += mass;
    }
    if (which == XYKind::y) {
        double best = std::sqrt(low / kappa0);
        double n_dyadic = 1.0;
        for (double mass : bins) {
            const double lg = std::log(2.0 * n_dyadic);
            best = std::max(best, lg * lg * std::sqrt(mass / (kappa0 * n_dyadic)));
            n_dyadic *= 2.0;
        }
        return best;
    }
    double total = low / kappa0;
    double n_dyadic = 1.0;
    for (double mass : bins) {
        const double lg = std::log(2.0 * n_dyadic);
        total += lg * lg * lg * mass / (kappa0 * n_dyadic);
        n_dyadic *= 2.0;
    }
    return std::sqrt(total);
}

double xy_surrogate(const FourierField& f, double kappa0, XYKind which) {
    if (!(kappa0 > 0.0)) throw DomainError("xy_surrogate: kappa0 must be positive");
    // |trace(M)| <= b2 / (kappa0 M)^2 with b2 = (2N+1) * sum |qhat|^2:
    // used both to certify truncation and to bound the unseen rungs.
    double sum_sq = 0.0;
    for (int n = -f.cutoff(); n <= f.cutoff(); ++n) sum_sq += std::norm(f.coeff(n));
    if (sum_sq == 0.0) return 0.0;
    const double b2 = (2.0 * f.cutoff() + 1.0) * sum_sq;

    double acc = 0.0;   // X: running sum; Y: running max
    double m_dyadic = 1.0;
    for (int rung = 0; rung < 200; ++rung) {
        const double kappa = kappa0 * m_dyadic;
        double tr = akns_trace(f, kappa);
        if (tr < 0.0) {
            const double scale = sum_sq / kappa;
            if (tr < -1e-12 * (1.0 + scale))
                throw InternalError("xy_surrogate: negative real-part trace");
            tr = 0.0;
        }
        const double lg = std::log(2.0 * m_dyadic);
        if (which == XYKind::y)
            acc = std::max(acc, lg * lg * lg * lg * tr);
        else
            acc += lg * lg * lg * tr;
        m_dyadic *= 2.0;
        if (m_dyadic < 16.0) continue;  // log^p(2M)/M^2 decays only from here on
        const double lg_next = std::log(2.0 * m_dyadic);
        const double next_bound = std::pow(lg_next, which == XYKind::y ? 4.0 : 3.0) * b2 /
                                  (kappa0 * m_dyadic * kappa0 * m_dyadic);
        if (which == XYKind::y) {
            if (next_bound <= acc || next_bound < 1e-300) break;
        } else {
            // successive bounds at least halve, so the tail is < 2 * next_bound
            if (2.0 * next_bound <= 1e-15 * acc || next_bound < 1e-300) break;
        }
    }
    return std::sqrt(acc);
}

} // namespace pdlab
