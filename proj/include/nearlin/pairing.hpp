#pragma once

// The general block construction of inner products on deformed coordinate
// spaces.  A PairingSpec fixes an aggregation exponent lambda for the target
// line, a transport exponent phi, a scalar-action exponent rho_b per
// coordinate, and a partition of the coordinates into blocks.  Inside each
// block the coordinates are compared with the ordinary Hermitian dot after
// the sigma_b = phi/rho_b twist, the block value is pulled back through
// eps_{1/phi}, and the block values are aggregated with +_lambda.

#include <cstddef>
#include <numeric>
#include <vector>

#include "line.hpp"

namespace nearlin {

using Vec = std::vector<Cplx>;

struct PairingSpec {
    double lambda_exp;
    double phi_exp;
    std::vector<double> rho_exps;
    std::vector<std::vector<std::size_t>> blocks;

    PairingSpec(double lambda, double phi, std::vector<double> rho,
                std::vector<std::vector<std::size_t>> blks)
        : lambda_exp(lambda), phi_exp(phi), rho_exps(std::move(rho)), blocks(std::move(blks)) {
        if (!(std::abs(lambda_exp) >= kMinAlphaRe) || !(std::abs(phi_exp) >= kMinAlphaRe))
            throw std::domain_error("pairing exponents lambda and phi must be nonzero");
        if (rho_exps.empty()) throw std::invalid_argument("pairing needs at least one coordinate");
        for (double r : rho_exps)
            if (!(std::abs(r) >= kMinAlphaRe))
                throw std::domain_error("coordinate exponents rho_b must be nonzero");
        std::vector<bool> seen(rho_exps.size(), false);
        for (const auto& blk : blocks)
            for (std::size_t b : blk) {
                if (b >= rho_exps.size() || seen[b])
                    throw std::invalid_argument("blocks must partition the coordinates");
                seen[b] = true;
            }
        for (bool s : seen)
            if (!s) throw std::invalid_argument("blocks must partition the coordinates");
    }

    std::size_t dim() const { return rho_exps.size(); }
    double sigma_exp(std::size_t b) const { return phi_exp / rho_exps[b]; }
    DeformedLine line() const { return DeformedLine(lambda_exp); }

    // The flat lp instance: lambda = phi = p, rho_b = 2, singleton blocks.
    static PairingSpec lp(std::size_t dim, double p) {
        std::vector<std::vector<std::size_t>> blks(dim);
        for (std::size_t b = 0; b < dim; ++b) blks[b] = {b};
        return PairingSpec(p, p, std::vector<double>(dim, 2.0), std::move(blks));
    }

    // Two real coordinates with mixed exponents: lambda = 5, phi = 1,
    // rho = (1, 3).  Self-pairing eps_{1/5}(|u_1|^10 + |u_2|^{10/3}).
    static PairingSpec mixed_two() {
        return PairingSpec(5.0, 1.0, {1.0, 3.0}, {{0}, {1}});
    }
};

inline void check_dim(const PairingSpec& spec, const Vec& u) {
    if (u.size() != spec.dim()) throw std::invalid_argument("vector length does not match space");
}

inline Vec general_vec_add(const PairingSpec& spec, const Vec& u, const Vec& v) {
    check_dim(spec, u);
    check_dim(spec, v);
    Vec out(spec.dim());
    for (std::size_t b = 0; b < spec.dim(); ++b)
        out[b] = deformed_add(AutoParam(spec.sigma_exp(b)), u[b], v[b]);
    return out;
}

inline Vec general_vec_sub(const PairingSpec& spec, const Vec& u, const Vec& v) {
    check_dim(spec, u);
    check_dim(spec, v);
    Vec out(spec.dim());
    for (std::size_t b = 0; b < spec.dim(); ++b)
        out[b] = deformed_sub(AutoParam(spec.sigma_exp(b)), u[b], v[b]);
    return out;
}

inline Vec general_scalar_mul(const PairingSpec& spec, Cplx alpha, const Vec& u) {
    check_dim(spec, u);
    Vec out(spec.dim());
    for (std::size_t b = 0; b < spec.dim(); ++b)
        out[b] = eps_apply(AutoParam(spec.rho_exps[b]), alpha) * u[b];
    return out;
}

// ^lambda sum over blocks of eps_{1/phi}( sum_b eps_{sigma_b}(u_b) * conj(eps_{sigma_b}(v_b)) ).
inline Cplx general_pairing(const PairingSpec& spec, const Vec& u, const Vec& v) {
    check_dim(spec, u);
    check_dim(spec, v);
    AutoParam inv_phi(1.0 / spec.phi_exp);
    std::vector<Cplx> block_values;
    block_values.reserve(spec.blocks.size());
    for (const auto& blk : spec.blocks) {
        Cplx s{0.0, 0.0};
        for (std::size_t b : blk) {
            AutoParam sb(spec.sigma_exp(b));
            s += eps_apply(sb, u[b]) * std::conj(eps_apply(sb, v[b]));
        }
        block_values.push_back(eps_apply(inv_phi, s));
    }
    return alpha_sum(AutoParam(spec.lambda_exp), block_values);
}

inline double general_induced_norm(const PairingSpec& spec, const Vec& u) {
    return line_sqrt_pos(spec.line(), general_pairing(spec, u, u)).real();
}

}  // namespace nearlin
