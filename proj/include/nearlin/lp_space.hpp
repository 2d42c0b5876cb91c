#pragma once

// Deformed coordinate spaces W_{l^p}: componentwise +_{p/2} addition, the
// eps_2 scalar action, the l^p pairing and norms, the directed l^{+-inf}
// pairings, mixed (p,q) matrix norms, angles, Gram-Schmidt, and the suite of
// inner-product identities evaluated with the line operations.

#include <algorithm>
#include <map>
#include <string>

#include "limit.hpp"
#include "pairing.hpp"

namespace nearlin {

struct LpSpace {
    std::size_t dim;
    double p;

    LpSpace(std::size_t d, double p_) : dim(d), p(p_) {
        if (d == 0) throw std::invalid_argument("space dimension must be positive");
        if (!(std::abs(p_) >= 2.0 * kMinAlphaRe))
            throw std::domain_error("space exponent p must be nonzero");
    }

    DeformedLine line() const { return DeformedLine(p); }
    AutoParam half_exp() const { return AutoParam(p / 2.0); }
};

inline void check_dim(const LpSpace& S, const Vec& u) {
    if (u.size() != S.dim) throw std::invalid_argument("vector length does not match space");
}

inline Vec vec_add(const LpSpace& S, const Vec& u, const Vec& v) {
    check_dim(S, u);
    check_dim(S, v);
    AutoParam h = S.half_exp();
    Vec out(S.dim);
    for (std::size_t i = 0; i < S.dim; ++i) out[i] = deformed_add(h, u[i], v[i]);
    return out;
}

inline Vec vec_sub(const LpSpace& S, const Vec& u, const Vec& v) {
    check_dim(S, u);
    check_dim(S, v);
    AutoParam h = S.half_exp();
    Vec out(S.dim);
    for (std::size_t i = 0; i < S.dim; ++i) out[i] = deformed_sub(h, u[i], v[i]);
    return out;
}

inline Vec scalar_mul(const LpSpace& S, Cplx alpha, const Vec& u) {
    check_dim(S, u);
    Cplx factor = eps_apply(AutoParam(2.0), alpha);
    Vec out(S.dim);
    for (std::size_t i = 0; i < S.dim; ++i) out[i] = factor * u[i];
    return out;
}

inline Vec negate(const LpSpace& S, const Vec& u) {
    check_dim(S, u);
    Vec out(S.dim);
    for (std::size_t i = 0; i < S.dim; ++i) out[i] = -u[i];
    return out;
}

// <u,v> = eps_p^{-1}( sum_i eps_{p/2}(u_i conj(v_i)) ), valued in the line
// (F, +_p, *).  Self-pairings come out exactly real and nonnegative.
inline Cplx lp_pairing(const LpSpace& S, const Vec& u, const Vec& v) {
    check_dim(S, u);
    check_dim(S, v);
    std::vector<Cplx> prods(S.dim);
    for (std::size_t i = 0; i < S.dim; ++i) prods[i] = u[i] * std::conj(v[i]);
    LogPolar s = eps_transformed_sum(S.half_exp(), prods);
    return from_log_polar(eps_apply_log(AutoParam(1.0 / S.p), s));
}

namespace detail {

// (sum r_k^p)^{1/p} for nonnegative r_k with the largest factored out.
inline double stable_pnorm(std::span<const double> r, double p) {
    double rmax = 0.0;
    for (double x : r) rmax = std::max(rmax, x);
    if (rmax == 0.0) return 0.0;
    double acc = 0.0;
    for (double x : r) acc += std::pow(x / rmax, p);
    return rmax * std::pow(acc, 1.0 / p);
}

}  // namespace detail

// The displayed formula (sum |u_i|^p)^{1/p}; a norm only for p > 0.
inline double lp_norm(const LpSpace& S, const Vec& u) {
    if (!(S.p > 0.0))
        throw std::domain_error("lp_norm needs p > 0 (the pairing stays defined)");
    check_dim(S, u);
    std::vector<double> r(S.dim);
    for (std::size_t i = 0; i < S.dim; ++i) r[i] = std::abs(u[i]);
    return detail::stable_pnorm(r, S.p);
}

// <u,u>^{1/2} with the square root taken in the line; equals lp_norm^{1/2}.
inline double induced_norm(const LpSpace& S, const Vec& u) {
    return line_sqrt_pos(S.line(), lp_pairing(S, u, u)).real();
}

inline Cplx linf_pairing(const LpSpace& S, const Vec& u, const Vec& v, const Direction& dir,
                         double tol = kDefaultTol) {
    check_dim(S, u);
    check_dim(S, v);
    AutoParam half(0.5);
    std::vector<Cplx> terms(S.dim);
    for (std::size_t i = 0; i < S.dim; ++i) terms[i] = eps_apply(half, u[i] * std::conj(v[i]));
    return inf_sum(terms, dir, tol);
}

inline Cplx lneginf_pairing(const LpSpace& S, const Vec& u, const Vec& v, const Direction& dir,
                            double tol = kDefaultTol) {
    check_dim(S, u);
    check_dim(S, v);
    AutoParam half(0.5);
    std::vector<Cplx> terms(S.dim);
    for (std::size_t i = 0; i < S.dim; ++i) terms[i] = eps_apply(half, u[i] * std::conj(v[i]));
    return neg_inf_sum(terms, dir, tol);
}

inline double linf_norm(const LpSpace& S, const Vec& u) {
    check_dim(S, u);
    double m = 0.0;
    for (const Cplx& z : u) m = std::max(m, std::abs(z));
    return m;
}

// inf of the moduli: vanishes on any vector with a zero coordinate, so this
// is only a seminorm-like gauge.
inline double lneginf_seminorm(const LpSpace& S, const Vec& u) {
    check_dim(S, u);
    double m = std::numeric_limits<double>::infinity();
    for (const Cplx& z : u) m = std::min(m, std::abs(z));
    return m;
}

using Mat = std::vector<std::vector<Cplx>>;

inline void check_matrix(const Mat& A) {
    if (A.empty() || A[0].empty()) throw std::invalid_argument("matrix must be nonempty");
    for (const auto& row : A)
        if (row.size() != A[0].size()) throw std::invalid_argument("matrix rows must have equal length");
}

inline void check_same_shape(const Mat& A, const Mat& B) {
    check_matrix(A);
    check_matrix(B);
    if (A.size() != B.size() || A[0].size() != B[0].size())
        throw std::invalid_argument("matrix shapes do not match");
}

// <A,B> = eps_{1/q}( sum_j eps_{q/2p}( sum_i eps_{p/2}(a_ij conj(b_ij)) ) ):
// p-aggregation down each column, then q-aggregation across columns.
inline Cplx lpq_pairing(const Mat& A, const Mat& B, double p, double q) {
    check_same_shape(A, B);
    if (!(std::abs(p) >= kMinAlphaRe) || !(std::abs(q) >= kMinAlphaRe))
        throw std::domain_error("lpq exponents must be nonzero");
    AutoParam half_p(p / 2.0), mid(q / (2.0 * p)), inv_q(1.0 / q);
    const std::size_t m = A.size(), n = A[0].size();
    std::vector<LogPolar> cols;
    cols.reserve(n);
    std::vector<Cplx> prods(m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) prods[i] = A[i][j] * std::conj(B[i][j]);
        cols.push_back(eps_apply_log(mid, eps_transformed_sum(half_p, prods)));
    }
    return from_log_polar(eps_apply_log(inv_q, log_polar_sum(cols)));
}

// ( sum_j ( sum_i |a_ij|^p )^{q/p} )^{1/q}.
inline double lpq_norm(const Mat& A, double p, double q) {
    check_matrix(A);
    if (!(p > 0.0) || !(q > 0.0)) throw std::domain_error("lpq_norm needs p, q > 0");
    const std::size_t m = A.size(), n = A[0].size();
    std::vector<double> colnorm(n);
    std::vector<double> r(m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) r[i] = std::abs(A[i][j]);
        colnorm[j] = detail::stable_pnorm(r, p);
    }
    return detail::stable_pnorm(colnorm, q);
}

// Mixed norm with either exponent allowed to be +infinity: the infinite
// stage takes the max of the corresponding aggregation.
inline double lpq_limit_norm(const Mat& A, double p, double q) {
    check_matrix(A);
    bool pinf = std::isinf(p), qinf = std::isinf(q);
    if (!pinf && !(p > 0.0)) throw std::domain_error("lpq norms need p > 0");
    if (!qinf && !(q > 0.0)) throw std::domain_error("lpq norms need q > 0");
    const std::size_t m = A.size(), n = A[0].size();
    std::vector<double> col(n, 0.0);
    std::vector<double> r(m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) r[i] = std::abs(A[i][j]);
        col[j] = pinf ? *std::max_element(r.begin(), r.end()) : detail::stable_pnorm(r, p);
    }
    if (qinf) return *std::max_element(col.begin(), col.end());
    return detail::stable_pnorm(col, q);
}

// arccos( Re<u,v> * ||u||^{-1} * ||v||^{-1} ) with the real part and the
// inverses taken in the line.
inline double angle(const LpSpace& S, const Vec& u, const Vec& v) {
    double nu = induced_norm(S, u);
    double nv = induced_norm(S, v);
    if (!(nu > 0.0) || !(nv > 0.0)) throw std::domain_error("angle needs nonzero vectors");
    double c = line_re(S.line(), lp_pairing(S, u, v)).real() / (nu * nv);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

// Relative residual below which a Gram-Schmidt step declares linear
// dependence.
inline constexpr double kRankTol = 1e-10;

namespace detail {

// Euclidean magnitude of the sigma-coordinate image eps_{p/2}(u_i).  Vector
// operations are classical in these coordinates, so cancellation shows up at
// its true float scale here; the line representation compresses small
// magnitudes (x -> x^(2/p) coordinatewise) and would hide it.
inline double sigma_scale(const LpSpace& S, const Vec& u) {
    const AutoParam sig = S.half_exp();
    double acc = 0.0;
    for (const Cplx& z : u) {
        const double m = std::abs(eps_apply(sig, z));
        acc += m * m;
    }
    return std::sqrt(acc);
}

}  // namespace detail

// v' = v -_V ^V-sum of <v,u_i> . u_i, then normalize by the real scalar
// induced_norm(v')^{-1}; the eps_2 action makes <u,u> = 1 on the output.
// Dependence is decided on the sigma-coordinate residual relative to the
// input vector, where a cancelled projection is float noise at any exponent.
inline std::vector<Vec> gram_schmidt(const LpSpace& S, const std::vector<Vec>& vectors) {
    std::vector<Vec> basis;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        const Vec& v = vectors[k];
        check_dim(S, v);
        Vec residual = v;
        bool have_proj = false;
        Vec proj;
        for (const Vec& u : basis) {
            Vec t = scalar_mul(S, lp_pairing(S, v, u), u);
            proj = have_proj ? vec_add(S, proj, t) : std::move(t);
            have_proj = true;
        }
        if (have_proj) residual = vec_sub(S, v, proj);
        if (detail::sigma_scale(S, residual) < kRankTol * std::max(1.0, detail::sigma_scale(S, v)))
            throw std::domain_error("gram_schmidt: vector " + std::to_string(k) +
                                    " is linearly dependent on its predecessors");
        basis.push_back(scalar_mul(S, Cplx(1.0 / induced_norm(S, residual), 0.0), residual));
    }
    return basis;
}

namespace detail {

inline double eq_residual(Cplx lhs, Cplx rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Order violations measured in sigma coordinates, where the positive cone is
// the ordinary one; eps_{1/p} would blow up roundoff-sized witnesses.
inline double leq_residual(const DeformedLine& L, Cplx lhs, Cplx rhs) {
    Cplx sl = eps_apply(L.sigma(), lhs);
    Cplx sr = eps_apply(L.sigma(), rhs);
    double scale = std::max({1.0, std::abs(sl), std::abs(sr)});
    return std::max(0.0, (sl.real() - sr.real()) / scale);
}

}  // namespace detail

// Residuals for the inner-product identities, all evaluated with the line
// operations of (F, +_p, *): Cauchy-Schwarz, the triangle inequality, the
// parallelogram law, both polarization identities, Pythagoras on an
// orthogonalized set, Bessel against an orthonormal prefix, and first-slot
// homogeneity with the supplied scalar.
inline std::map<std::string, double> check_identities(const LpSpace& S, const Vec& u, const Vec& v,
                                                      const Vec& w, Cplx alpha) {
    const DeformedLine L = S.line();
    std::map<std::string, double> report;

    const Cplx puv = lp_pairing(S, u, v);
    const Cplx puu = lp_pairing(S, u, u);
    const Cplx pvv = lp_pairing(S, v, v);
    const double nu = induced_norm(S, u);
    const double nv = induced_norm(S, v);

    const Cplx mod_uv = line_mod(L, puv);
    report["cauchy_schwarz"] = detail::leq_residual(L, mod_uv * mod_uv, puu * pvv);

    const double nsum = induced_norm(S, vec_add(S, u, v));
    report["triangle"] = detail::leq_residual(L, Cplx(nsum, 0.0), line_add(L, Cplx(nu, 0.0), Cplx(nv, 0.0)));

    const double nplus = induced_norm(S, vec_add(S, u, v));
    const double nminus = induced_norm(S, vec_sub(S, u, v));
    const Cplx two = line_embed_int(L, 2);
    const Cplx lhs_par = line_add(L, Cplx(nplus * nplus, 0.0), Cplx(nminus * nminus, 0.0));
    const Cplx rhs_par = two * line_add(L, Cplx(nu * nu, 0.0), Cplx(nv * nv, 0.0));
    report["parallelogram"] = detail::eq_residual(lhs_par, rhs_par);

    const Cplx four = line_embed_int(L, 4);
    const Cplx lhs_pre = line_sub(L, Cplx(nplus * nplus, 0.0), Cplx(nminus * nminus, 0.0));
    report["polarization_re"] = detail::eq_residual(lhs_pre / four, line_re(L, puv));

    Cplx ik{1.0, 0.0};
    std::vector<Cplx> pol_terms(4);
    for (int k = 0; k < 4; ++k) {
        Vec shifted = vec_add(S, u, scalar_mul(S, ik, v));
        double nk = induced_norm(S, shifted);
        pol_terms[k] = ik * Cplx(nk * nk, 0.0);
        ik *= Cplx(0.0, 1.0);
    }
    report["polarization_complex"] = detail::eq_residual(line_sum(L, pol_terms) / four, puv);

    std::vector<Vec> ortho;
    try {
        ortho = gram_schmidt(S, {u, v, w});
    } catch (const std::domain_error&) {
        ortho = gram_schmidt(S, {u});
    }
    Vec x = ortho[0];
    std::vector<Cplx> sq;
    sq.reserve(ortho.size());
    for (std::size_t i = 1; i < ortho.size(); ++i) x = vec_add(S, x, ortho[i]);
    for (const Vec& q : ortho) {
        double nq = induced_norm(S, q);
        sq.push_back(Cplx(nq * nq, 0.0));
    }
    double nx = induced_norm(S, x);
    report["pythagoras"] = detail::eq_residual(line_sum(L, sq), Cplx(nx * nx, 0.0));

    std::vector<Vec> prefix;
    try {
        prefix = gram_schmidt(S, {u, v});
    } catch (const std::domain_error&) {
        prefix = gram_schmidt(S, {u});
    }
    std::vector<Cplx> coeffs;
    coeffs.reserve(prefix.size());
    for (const Vec& q : prefix) {
        Cplx c = line_mod(L, lp_pairing(S, w, q));
        coeffs.push_back(c * c);
    }
    double nw = induced_norm(S, w);
    report["bessel"] = detail::leq_residual(L, line_sum(L, coeffs), Cplx(nw * nw, 0.0));

    report["homogeneity"] = detail::eq_residual(lp_pairing(S, scalar_mul(S, alpha, u), v), alpha * puv);

    return report;
}

}  // namespace nearlin
