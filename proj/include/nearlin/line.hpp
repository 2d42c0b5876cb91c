#pragma once

// The deformed scalar line (F, +_p, *): ordinary multiplication together
// with the p-deformed addition, plus the auxiliary structure transported
// from C through psi = eps_{1/p}: embedded integers, conjugation, modulus,
// real and imaginary parts, the positive-cone order and square roots.
// sigma = psi^{-1} = eps_p moves a line value back to ordinary coordinates.

#include <span>

#include "automorphism.hpp"

namespace nearlin {

struct DeformedLine {
    double p;

    explicit DeformedLine(double p_) : p(p_) {
        if (!(std::abs(p_) >= kMinAlphaRe))
            throw std::domain_error("line exponent p must be nonzero");
    }

    AutoParam sigma() const { return AutoParam(p); }
    AutoParam psi() const { return AutoParam(1.0 / p); }
};

inline Cplx line_add(const DeformedLine& L, Cplx a, Cplx b) {
    return deformed_add(L.sigma(), a, b);
}

inline Cplx line_sub(const DeformedLine& L, Cplx a, Cplx b) {
    return deformed_sub(L.sigma(), a, b);
}

inline Cplx line_sum(const DeformedLine& L, std::span<const Cplx> xs) {
    return alpha_sum(L.sigma(), xs);
}

inline Cplx line_neg(Cplx a) { return -a; }

// The multiplicative embedding of the integers: m |-> psi(m) = sgn(m)|m|^{1/p}.
inline Cplx line_embed_int(const DeformedLine& L, long long m) {
    return eps_apply(L.psi(), Cplx(static_cast<double>(m), 0.0));
}

// The transported imaginary unit psi(i); numerically equal to i itself.
inline Cplx line_i(const DeformedLine& L) {
    return eps_apply(L.psi(), Cplx(0.0, 1.0));
}

inline Cplx line_conj(const DeformedLine& L, Cplx a) {
    return eps_apply(L.psi(), std::conj(eps_apply(L.sigma(), a)));
}

inline Cplx line_mod(const DeformedLine& L, Cplx a) {
    return eps_apply(L.psi(), Cplx(std::abs(eps_apply(L.sigma(), a)), 0.0));
}

inline Cplx line_re(const DeformedLine& L, Cplx a) {
    return eps_apply(L.psi(), Cplx(eps_apply(L.sigma(), a).real(), 0.0));
}

inline Cplx line_im(const DeformedLine& L, Cplx a) {
    return eps_apply(L.psi(), Cplx(eps_apply(L.sigma(), a).imag(), 0.0));
}

// Absolute tolerance on the subtraction witness in transported comparisons.
inline constexpr double kLineWitnessTol = 1e-12;

// a is below b in the line order iff b -_p a lands in the embedded positive
// reals.  The witness is checked with absolute tolerance, which eps_{1/p}
// inflates for tiny differences; callers compare well separated data.
inline bool line_leq(const DeformedLine& L, Cplx a, Cplx b) {
    if (a == b) return true;
    Cplx w = line_sub(L, b, a);
    return std::abs(w.imag()) <= kLineWitnessTol && w.real() >= -kLineWitnessTol;
}

// Square root of a positive-cone value.  psi intertwines the ordinary square
// root with itself, so on the nose this is sqrt on the real part.
inline Cplx line_sqrt_pos(const DeformedLine&, Cplx a) {
    double scale = std::max(1.0, std::abs(a));
    if (std::abs(a.imag()) > kLineWitnessTol * scale || a.real() < -kLineWitnessTol * scale)
        throw std::domain_error("line square root needs a positive-cone value");
    double x = a.real() < 0.0 ? 0.0 : a.real();
    return {std::sqrt(x), 0.0};
}

}  // namespace nearlin
