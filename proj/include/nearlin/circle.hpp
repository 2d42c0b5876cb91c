#pragma once

// Unit-circle point clouds in 2-dimensional deformed geometries.  The
// induced norm scales linearly along scalar_mul rays, so each ray meets the
// circle exactly once and radial bisection finds the crossing; every point
// is re-checked against the norm before it is emitted.

#include <array>
#include <numbers>

#include "pairing.hpp"

namespace nearlin {

inline std::vector<std::array<double, 2>> trace_unit_circle(const PairingSpec& spec,
                                                            std::array<double, 2> center,
                                                            std::size_t samples,
                                                            double residual_tol = 1e-6) {
    if (spec.dim() != 2) throw std::invalid_argument("circle tracing needs a 2-dimensional space");
    if (samples == 0) throw std::invalid_argument("need at least one sample point");
    const Vec c{Cplx(center[0], 0.0), Cplx(center[1], 0.0)};
    std::vector<std::array<double, 2>> points;
    points.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
        const Vec d{Cplx(std::cos(phi), 0.0), Cplx(std::sin(phi), 0.0)};
        auto norm_at = [&](double t) {
            return general_induced_norm(spec, general_scalar_mul(spec, Cplx(t, 0.0), d));
        };
        double lo = 0.0, hi = 1.0;
        int guard = 0;
        while (norm_at(hi) < 1.0 && ++guard < 128) {
            lo = hi;
            hi *= 2.0;
        }
        for (int it = 0; it < 64; ++it) {
            double mid = 0.5 * (lo + hi);
            (norm_at(mid) < 1.0 ? lo : hi) = mid;
        }
        double t = 0.5 * (lo + hi);
        Vec x = general_vec_add(spec, c, general_scalar_mul(spec, Cplx(t, 0.0), d));
        double residual = std::abs(general_induced_norm(spec, general_vec_sub(spec, x, c)) - 1.0);
        if (!(residual <= residual_tol))
            throw std::runtime_error("circle point failed its norm re-check");
        points.push_back({x[0].real(), x[1].real()});
    }
    return points;
}

}  // namespace nearlin
