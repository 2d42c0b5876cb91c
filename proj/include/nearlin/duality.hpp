#pragma once

// Coordinate-level duality for finite-dimensional deformed spaces: the dual
// basis of Kronecker functionals, evaluation, annihilators of coordinate
// subspaces with the dimension formula, the double-dual evaluation, and the
// functional v -> <v,u> attached to a vector by the pairing.

#include <functional>
#include <set>
#include <vector>

#include "lp_space.hpp"

namespace nearlin {

// F^{sigma,rho} with its canonical basis e_j; the exponents fix the
// coordinate additions and the scalar action but evaluation of functionals
// happens in (F,+,*) itself.
struct FiniteNVS {
    std::vector<double> sigma_exps;
    std::vector<double> rho_exps;

    FiniteNVS(std::vector<double> sigma, std::vector<double> rho)
        : sigma_exps(std::move(sigma)), rho_exps(std::move(rho)) {
        if (sigma_exps.empty() || sigma_exps.size() != rho_exps.size())
            throw std::invalid_argument("need matching nonempty exponent lists");
        for (double e : sigma_exps)
            if (!(std::abs(e) >= kMinAlphaRe)) throw std::domain_error("sigma exponents must be nonzero");
        for (double e : rho_exps)
            if (!(std::abs(e) >= kMinAlphaRe)) throw std::domain_error("rho exponents must be nonzero");
    }

    std::size_t dim() const { return sigma_exps.size(); }

    Vec basis_vector(std::size_t j) const {
        if (j >= dim()) throw std::invalid_argument("basis index out of range");
        Vec e(dim(), Cplx{0.0, 0.0});
        e[j] = Cplx{1.0, 0.0};
        return e;
    }
};

// A functional represented by its values on the canonical basis.
struct DualFunctional {
    std::vector<Cplx> coeffs;
};

inline Cplx evaluate(const DualFunctional& f, const Vec& coords) {
    if (f.coeffs.size() != coords.size())
        throw std::invalid_argument("functional and vector lengths do not match");
    Cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < coords.size(); ++j) acc += f.coeffs[j] * coords[j];
    return acc;
}

// e_j^* with e_j^*(e_i) = delta_{ji}, exactly.
inline std::vector<DualFunctional> dual_basis(const FiniteNVS& space) {
    std::vector<DualFunctional> out(space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j) {
        out[j].coeffs.assign(space.dim(), Cplx{0.0, 0.0});
        out[j].coeffs[j] = Cplx{1.0, 0.0};
    }
    return out;
}

// Basis of the annihilator of span{e_j | j in J}: the complementary dual
// functionals.  Its size realizes dim(W) + dim(annihilator) = dim(V).
inline std::vector<DualFunctional> annihilator_basis(const FiniteNVS& space,
                                                     const std::set<std::size_t>& subspace_indices) {
    for (std::size_t j : subspace_indices)
        if (j >= space.dim()) throw std::invalid_argument("subspace index out of range");
    auto duals = dual_basis(space);
    std::vector<DualFunctional> out;
    out.reserve(space.dim() - subspace_indices.size());
    for (std::size_t k = 0; k < space.dim(); ++k)
        if (!subspace_indices.count(k)) out.push_back(std::move(duals[k]));
    return out;
}

// eta(v)(f) := f(v); on coordinates the double dual evaluates right back.
inline Cplx double_dual_eval(const FiniteNVS& space, const Vec& v_coords, const DualFunctional& f) {
    if (v_coords.size() != space.dim())
        throw std::invalid_argument("vector length does not match space");
    return evaluate(f, v_coords);
}

// f_u(v) := <v, u> for the lp pairing; at p = 2 this is the Riesz-style
// functional of eps_{1/2}(Hermitian dot).
inline std::function<Cplx(const Vec&)> ip_dual_functional(const LpSpace& space, Vec u) {
    check_dim(space, u);
    return [space, u = std::move(u)](const Vec& v) { return lp_pairing(space, v, u); };
}

// True when f_u vanishes on every element of C within tol: membership test
// for the orthogonal complement of C.
inline bool in_orthogonal_complement(const LpSpace& space, const Vec& u, const std::vector<Vec>& C,
                                     double tol = kDefaultTol) {
    for (const Vec& c : C)
        if (std::abs(lp_pairing(space, c, u)) > tol) return false;
    return true;
}

}  // namespace nearlin
