#pragma once

// Deformed Riemann integration of midpoint-sampled functions on [a,b]:
// the alpha-integral eps_alpha^{-1}( h * sum_k eps_alpha(f_k) ), the L^p
// pairing and norm it induces, and the directed L^{+-inf} limits computed
// on the sample set.

#include <utility>
#include <vector>

#include "limit.hpp"

namespace nearlin {

// Midpoint samples f(a + (k + 1/2) h), h = (b - a)/n, on a uniform grid.
struct SampledFunction {
    double a;
    double b;
    std::vector<Cplx> samples;

    SampledFunction(double a_, double b_, std::vector<Cplx> values)
        : a(a_), b(b_), samples(std::move(values)) {
        if (!(a < b)) throw std::invalid_argument("interval needs a < b");
        if (samples.size() < 2) throw std::invalid_argument("need at least 2 samples");
    }

    template <typename F>
    static SampledFunction sample(double a, double b, std::size_t n, F&& f) {
        if (!(a < b)) throw std::invalid_argument("interval needs a < b");
        if (n < 2) throw std::invalid_argument("need at least 2 samples");
        double h = (b - a) / static_cast<double>(n);
        std::vector<Cplx> values(n);
        for (std::size_t k = 0; k < n; ++k)
            values[k] = f(a + (static_cast<double>(k) + 0.5) * h);
        return SampledFunction(a, b, std::move(values));
    }

    double step() const { return (b - a) / static_cast<double>(samples.size()); }
    double node(std::size_t k) const { return a + (static_cast<double>(k) + 0.5) * step(); }
};

inline void check_same_grid(const SampledFunction& f, const SampledFunction& g) {
    double scale = 1.0 + std::abs(f.a) + std::abs(f.b);
    if (f.samples.size() != g.samples.size() || std::abs(f.a - g.a) > 1e-12 * scale ||
        std::abs(f.b - g.b) > 1e-12 * scale)
        throw std::invalid_argument("functions must share the sampling grid");
}

// eps_alpha^{-1}( h * sum_k eps_alpha(f_k) ): the deformed Riemann sum.
inline Cplx alpha_integral(const AutoParam& p, const SampledFunction& f) {
    LogPolar s = eps_transformed_sum(p, f.samples);
    if (s.is_zero()) return {0.0, 0.0};
    s.lnr += std::log(f.step());
    return from_log_polar(eps_apply_log(eps_invert(p), s));
}

// <f,g>_{L^p} = integral^p of eps_{1/2}(f conj(g)): the sample products are
// pulled through the square-root automorphism and p-integrated.
inline Cplx Lp_pairing(const SampledFunction& f, const SampledFunction& g, double p) {
    check_same_grid(f, g);
    AutoParam half(0.5);
    std::vector<Cplx> values(f.samples.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] = eps_apply(half, f.samples[k] * std::conj(g.samples[k]));
    return alpha_integral(AutoParam(p), SampledFunction(f.a, f.b, std::move(values)));
}

// ( h * sum |f_k|^p )^{1/p}; a norm only for p > 0.
inline double Lp_norm(const SampledFunction& f, double p) {
    if (!(p > 0.0)) throw std::domain_error("Lp_norm needs p > 0");
    double rmax = 0.0;
    for (const Cplx& z : f.samples) rmax = std::max(rmax, std::abs(z));
    if (rmax == 0.0) return 0.0;
    double acc = 0.0;
    for (const Cplx& z : f.samples) acc += std::pow(std::abs(z) / rmax, p);
    return rmax * std::pow(f.step() * acc, 1.0 / p);
}

// Directed limit pairings on the sample set; the measure factor h^{1/p}
// tends to 1, so no step weighting survives.
inline Cplx Linf_pairing(const SampledFunction& f, const SampledFunction& g, const Direction& dir,
                         double tol = kDefaultTol) {
    check_same_grid(f, g);
    AutoParam half(0.5);
    std::vector<Cplx> values(f.samples.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] = eps_apply(half, f.samples[k] * std::conj(g.samples[k]));
    return inf_sum(values, dir, tol);
}

inline Cplx Lneginf_pairing(const SampledFunction& f, const SampledFunction& g,
                            const Direction& dir, double tol = kDefaultTol) {
    check_same_grid(f, g);
    AutoParam half(0.5);
    std::vector<Cplx> values(f.samples.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] = eps_apply(half, f.samples[k] * std::conj(g.samples[k]));
    return neg_inf_sum(values, dir, tol);
}

inline double Linf_norm(const SampledFunction& f) {
    double m = 0.0;
    for (const Cplx& z : f.samples) m = std::max(m, std::abs(z));
    return m;
}

inline double Lneginf_seminorm(const SampledFunction& f) {
    double m = std::numeric_limits<double>::infinity();
    for (const Cplx& z : f.samples) m = std::min(m, std::abs(z));
    return m;
}

}  // namespace nearlin
