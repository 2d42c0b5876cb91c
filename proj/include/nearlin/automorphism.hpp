#pragma once

// Continuous multiplicative automorphisms eps_alpha of R and C and the
// deformed additions they induce.  eps_alpha acts on z = r*s (r = |z| > 0,
// |s| = 1) as r^alpha * s, keeping the phase; the conjugating variant sends
// s to conj(s).  r^alpha always uses the real logarithm of the modulus, so
// the map is single valued and sign preserving on the reals.

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace nearlin {

using Cplx = std::complex<double>;

// Moduli below this are collapsed to exact zero before any logarithm.
inline constexpr double kZeroModulus = 1e-300;

// Minimum |Re(alpha)| accepted for an automorphism parameter; the inverse
// parameter (1 -+ i Im(alpha)) / Re(alpha) must exist.
inline constexpr double kMinAlphaRe = 1e-12;

// Default relative tolerance for modulus grouping and the other
// classification thresholds of the limit operations.
inline constexpr double kDefaultTol = 1e-9;

struct AutoParam {
    Cplx alpha;
    bool conjugating = false;

    AutoParam(Cplx a, bool conj = false) : alpha(a), conjugating(conj) {
        if (!(std::abs(a.real()) >= kMinAlphaRe))
            throw std::domain_error("automorphism parameter needs |Re(alpha)| >= 1e-12");
    }
    AutoParam(double a, bool conj = false) : AutoParam(Cplx(a, 0.0), conj) {}
};

// r^alpha for r > 0; real exponents stay on the pow fast path so real
// arithmetic does not pick up spurious imaginary parts.
inline Cplx modulus_pow(double r, Cplx alpha) {
    if (alpha.imag() == 0.0) return {std::pow(r, alpha.real()), 0.0};
    return std::exp(alpha * std::log(r));
}

inline Cplx eps_apply(const AutoParam& p, Cplx z) {
    double r = std::abs(z);
    if (r < kZeroModulus) return {0.0, 0.0};
    Cplx s = z / r;
    if (p.conjugating) s = std::conj(s);
    return modulus_pow(r, p.alpha) * s;
}

// eps_alpha^{-1} = eps_{(1 - i Im(alpha))/Re(alpha)}; the conjugating variant
// inverts to the conjugating eps_{(1 + i Im(alpha))/Re(alpha)}.
inline AutoParam eps_invert(const AutoParam& p) {
    double re = p.alpha.real();
    double im = p.alpha.imag();
    double flip = p.conjugating ? 1.0 : -1.0;
    return AutoParam(Cplx(1.0 / re, flip * im / re), p.conjugating);
}

// Log-polar value exp(lnr) * s with |s| = 1; lnr = -infinity encodes zero.
// Deformed sums work in this form so large exponents never overflow.
struct LogPolar {
    double lnr = -std::numeric_limits<double>::infinity();
    Cplx s = {0.0, 0.0};

    bool is_zero() const { return !(lnr > -std::numeric_limits<double>::infinity()); }
};

inline LogPolar to_log_polar(Cplx z) {
    double r = std::abs(z);
    if (r < kZeroModulus) return {};
    return {std::log(r), z / r};
}

inline Cplx from_log_polar(const LogPolar& v) {
    if (v.is_zero()) return {0.0, 0.0};
    return std::exp(v.lnr) * v.s;
}

// eps_alpha in log-polar coordinates: lnr scales by Re(alpha) and the phase
// rotates by Im(alpha) * lnr.
inline LogPolar eps_apply_log(const AutoParam& p, const LogPolar& v) {
    if (v.is_zero()) return {};
    Cplx s = p.conjugating ? std::conj(v.s) : v.s;
    double im = p.alpha.imag();
    if (im != 0.0) s *= std::polar(1.0, im * v.lnr);
    return {p.alpha.real() * v.lnr, s};
}

// Relative threshold below which a fully cancelled sum is declared zero.
inline constexpr double kCancelTol = 1e-15;

// Plain sum of log-polar values with the dominant modulus factored out, so
// intermediate terms never overflow.  Full cancellation gives exact zero.
inline LogPolar log_polar_sum(std::span<const LogPolar> items) {
    double ref = -std::numeric_limits<double>::infinity();
    for (const LogPolar& v : items)
        if (v.lnr > ref) ref = v.lnr;
    if (!(ref > -std::numeric_limits<double>::infinity())) return {};
    Cplx t{0.0, 0.0};
    double mass = 0.0;
    for (const LogPolar& v : items) {
        if (v.is_zero()) continue;
        double w = std::exp(v.lnr - ref);
        t += w * v.s;
        mass += w;
    }
    double at = std::abs(t);
    if (!(at > mass * kCancelTol)) return {};
    return {ref + std::log(at), t / at};
}

// sum_k eps_alpha(values[k]), returned still on the eps_alpha side.
inline LogPolar eps_transformed_sum(const AutoParam& p, std::span<const Cplx> values) {
    std::vector<LogPolar> items;
    items.reserve(values.size());
    for (Cplx z : values) items.push_back(eps_apply_log(p, to_log_polar(z)));
    return log_polar_sum(items);
}

// n-ary deformed sum eps_alpha^{-1}(sum_k eps_alpha(a_k)).  Not associative
// with mixed parameters; permutation invariant for a fixed one.
inline Cplx alpha_sum(const AutoParam& p, std::span<const Cplx> values) {
    if (values.empty()) throw std::invalid_argument("alpha_sum needs at least one value");
    if (values.size() == 1) return values[0];
    if (!p.conjugating && p.alpha == Cplx(1.0, 0.0)) {
        Cplx acc{0.0, 0.0};
        for (Cplx z : values) acc += z;
        return acc;
    }
    return from_log_polar(eps_apply_log(eps_invert(p), eps_transformed_sum(p, values)));
}

inline Cplx deformed_add(const AutoParam& p, Cplx a, Cplx b) {
    const Cplx pair[2] = {a, b};
    return alpha_sum(p, pair);
}

// a -_alpha b = a +_alpha (-b); eps commutes with negation, so this is the
// group inverse of deformed_add.
inline Cplx deformed_sub(const AutoParam& p, Cplx a, Cplx b) {
    const Cplx pair[2] = {a, -b};
    return alpha_sum(p, pair);
}

}  // namespace nearlin
