#pragma once

// Closed forms for the deformed sums in the limits alpha -> +inf, -inf and
// alpha -> 0 along a fixed direction Theta of the parameter plane, the
// modulus-level phase grouping they are built on, and the limiting inverse
// automorphism eps_{-i tan Theta}.  These sums are not associative, so the
// n-ary forms are the primitives and the binary ones are specializations.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <variant>
#include <vector>

#include "automorphism.hpp"

namespace nearlin {

// Direction of approach in the parameter plane.  cos(theta) must be bounded
// away from zero: the vertical axis has no one-sided limit.
struct Direction {
    double theta;

    explicit Direction(double t) : theta(t) {
        constexpr double half_pi = std::numbers::pi / 2.0;
        if (!(t > -half_pi && t < 3.0 * half_pi))
            throw std::domain_error("direction must lie in (-pi/2, 3pi/2)");
        if (std::abs(std::cos(t)) < 1e-9)
            throw std::domain_error("direction too close to the imaginary axis");
    }

    double tan_theta() const { return std::tan(theta); }
    double cos_theta() const { return std::cos(theta); }
};

struct PosInfParam {
    Direction dir;
};
struct NegInfParam {
    Direction dir;
};
struct ZeroParam {
    Direction dir;
};

// A deformation parameter: a finite automorphism exponent or one of the
// three directed limits.
using LimitParam = std::variant<AutoParam, PosInfParam, NegInfParam, ZeroParam>;

// Divergent limits are ordinary values of the algebra, not errors.  r is the
// phase-sum modulus that triggered the divergent regime.
struct DivergenceSignal {
    double r;
    double theta;
};

using LimitValue = std::variant<Cplx, DivergenceSignal>;

inline bool is_divergent(const LimitValue& v) {
    return std::holds_alternative<DivergenceSignal>(v);
}

inline Cplx limit_value(const LimitValue& v) { return std::get<Cplx>(v); }

// One modulus level: the indices whose moduli agree within tolerance, the
// sum of their unit phases, and its polar pieces r and s.
struct PhaseGroup {
    double level_modulus = 0.0;
    std::vector<std::size_t> indices;
    Cplx phase_sum{0.0, 0.0};
    double r = 0.0;
    Cplx s{0.0, 0.0};
};

// Nonzero values grouped by modulus level, ascending.  Moduli within rel
// tolerance of a group's level fall into that group; zeros are dropped.
inline std::vector<PhaseGroup> group_by_modulus(std::span<const Cplx> values,
                                                double tol = kDefaultTol) {
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t k = 0; k < values.size(); ++k) {
        double r = std::abs(values[k]);
        if (r >= kZeroModulus) order.emplace_back(r, k);
    }
    std::sort(order.begin(), order.end());
    std::vector<PhaseGroup> groups;
    for (auto [r, k] : order) {
        if (groups.empty() ||
            r - groups.back().level_modulus > tol * std::max(r, groups.back().level_modulus)) {
            groups.emplace_back();
            groups.back().level_modulus = r;
        }
        PhaseGroup& g = groups.back();
        g.indices.push_back(k);
        g.phase_sum += values[k] / r;
    }
    for (PhaseGroup& g : groups) {
        g.r = std::abs(g.phase_sum);
        if (g.r > 0.0) g.s = g.phase_sum / g.r;
    }
    return groups;
}

// The modulus-one twist r^{-i tan theta} = exp(-i tan(theta) ln r).
inline Cplx phase_twist(double r, const Direction& dir) {
    return std::polar(1.0, -dir.tan_theta() * std::log(r));
}

// Sum at +inf along dir: the highest modulus level whose phase sum survives
// contributes |a_M| r_M^{-i tan theta} s_M; full cancellation gives zero.
inline Cplx inf_sum(std::span<const Cplx> values, const Direction& dir,
                    double tol = kDefaultTol) {
    auto groups = group_by_modulus(values, tol);
    for (auto it = groups.rbegin(); it != groups.rend(); ++it)
        if (it->r > tol) return it->level_modulus * phase_twist(it->r, dir) * it->s;
    return {0.0, 0.0};
}

// Sum at -inf along dir: same form on the lowest surviving modulus level.
inline Cplx neg_inf_sum(std::span<const Cplx> values, const Direction& dir,
                        double tol = kDefaultTol) {
    auto groups = group_by_modulus(values, tol);
    for (auto& g : groups)
        if (g.r > tol) return g.level_modulus * phase_twist(g.r, dir) * g.s;
    return {0.0, 0.0};
}

enum class InfEnd { Pos, Neg };

inline Cplx binary_limit_add(InfEnd end, const Direction& dir, Cplx a, Cplx b,
                             double tol = kDefaultTol) {
    const Cplx pair[2] = {a, b};
    return end == InfEnd::Pos ? inf_sum(pair, dir, tol) : neg_inf_sum(pair, dir, tol);
}

// Sum at alpha -> 0 along dir.  With P the sum of unit phases over nonzero
// entries and rho = |P|: for rho = 1 the limit is the weighted product
// prod |a_k|^{cos(theta - theta_k)(1 + i tan Theta)} times P/rho; otherwise
// the modulus runs to 0 or infinity depending on the sides of rho = 1 and
// cos Theta = 0, and the infinite case is reported as divergence.
inline LimitValue zero_sum(std::span<const Cplx> values, const Direction& dir,
                           double tol = kDefaultTol) {
    Cplx phase_sum{0.0, 0.0};
    std::vector<std::pair<double, Cplx>> items;  // (ln|a_k|, unit phase)
    for (Cplx z : values) {
        double r = std::abs(z);
        if (r < kZeroModulus) continue;
        Cplx s = z / r;
        items.emplace_back(std::log(r), s);
        phase_sum += s;
    }
    if (items.empty()) return Cplx{0.0, 0.0};
    double rho = std::abs(phase_sum);
    if (std::abs(rho - 1.0) <= tol) {
        Cplx unit = phase_sum / rho;
        double lsum = 0.0;
        for (auto& [lnr, s] : items) lsum += lnr * (unit * std::conj(s)).real();
        return std::exp(lsum * Cplx(1.0, dir.tan_theta())) * unit;
    }
    bool toward_zero = (rho < 1.0) == (dir.cos_theta() > 0.0);
    if (toward_zero) return Cplx{0.0, 0.0};
    return DivergenceSignal{rho, dir.theta};
}

// Pointwise limit of eps_alpha^{-1} as |alpha| -> infinity along dir:
// eps_{-i tan theta}, which collapses the modulus onto the phase twist.
inline Cplx eps_inv_limit(const Direction& dir, Cplx a) {
    double r = std::abs(a);
    if (r < kZeroModulus) return {0.0, 0.0};
    return phase_twist(r, dir) * (a / r);
}

}  // namespace nearlin
