#pragma once

// Weighted generalized means of complex families.  Each weight omega is
// decomposed into unit-modulus phases summing to omega; the mean of type
// alpha is the deformed sum of the expanded family, with the directed limit
// sums taking over at alpha -> +inf, -inf, 0.  The result does not depend on
// the decomposition chosen.

#include <cstddef>
#include <vector>

#include "limit.hpp"

namespace nearlin {

// Limit-parameter means require |sum omega_k e^{i arg r_k}| = 1.
struct normalization_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct WeightedEntry {
    Cplx value;
    Cplx weight;
};

using WeightedFamily = std::vector<WeightedEntry>;

// Phases theta_j with sum_j e^{i theta_j} = omega: arg(omega) +- arccos(|omega|/2)
// when |omega| <= 2, otherwise equal chunks of modulus <= 2 decomposed pairwise.
inline std::vector<double> decompose_weight(Cplx omega) {
    double m = std::abs(omega);
    if (m <= 2.0) {
        double phi = std::arg(omega);  // arg(0) taken as 0
        double beta = std::acos(m / 2.0);
        return {phi + beta, phi - beta};
    }
    auto parts = static_cast<std::size_t>(std::ceil(m / 2.0));
    Cplx chunk = omega / static_cast<double>(parts);
    std::vector<double> out;
    out.reserve(2 * parts);
    std::vector<double> sub = decompose_weight(chunk);
    for (std::size_t j = 0; j < parts; ++j) out.insert(out.end(), sub.begin(), sub.end());
    return out;
}

// Forced alternative decomposition: omega split into `parts` equal chunks
// first.  Used to exercise the decomposition-independence of the mean.
inline std::vector<double> decompose_weight_split(Cplx omega, std::size_t parts) {
    if (parts == 0) throw std::invalid_argument("need at least one part");
    Cplx chunk = omega / static_cast<double>(parts);
    std::vector<double> out;
    std::vector<double> sub = decompose_weight(chunk);
    for (std::size_t j = 0; j < parts; ++j) out.insert(out.end(), sub.begin(), sub.end());
    return out;
}

// Expanded family a_{k,j} = r_k e^{i theta_{k,j}} over all decomposition
// phases of every weight.
inline std::vector<Cplx> expand(const WeightedFamily& family) {
    std::vector<Cplx> terms;
    terms.reserve(2 * family.size());
    for (const WeightedEntry& e : family)
        for (double th : decompose_weight(e.weight)) terms.push_back(e.value * std::polar(1.0, th));
    return terms;
}

inline std::vector<Cplx> expand_split(const WeightedFamily& family, std::size_t parts) {
    std::vector<Cplx> terms;
    terms.reserve(2 * parts * family.size());
    for (const WeightedEntry& e : family)
        for (double th : decompose_weight_split(e.weight, parts))
            terms.push_back(e.value * std::polar(1.0, th));
    return terms;
}

// Deformed sum of an already-expanded family under any parameter.
inline LimitValue mean_of_terms(std::span<const Cplx> terms, const LimitParam& param,
                                double tol = kDefaultTol) {
    if (const auto* fin = std::get_if<AutoParam>(&param)) return alpha_sum(*fin, terms);
    if (const auto* pos = std::get_if<PosInfParam>(&param)) return inf_sum(terms, pos->dir, tol);
    if (const auto* neg = std::get_if<NegInfParam>(&param)) return neg_inf_sum(terms, neg->dir, tol);
    return zero_sum(terms, std::get<ZeroParam>(param).dir, tol);
}

inline void check_limit_normalization(const WeightedFamily& family, double tol) {
    Cplx nsum{0.0, 0.0};
    for (const WeightedEntry& e : family) {
        double r = std::abs(e.value);
        Cplx phase = r < kZeroModulus ? Cplx{1.0, 0.0} : e.value / r;
        nsum += e.weight * phase;
    }
    if (std::abs(std::abs(nsum) - 1.0) > tol)
        throw normalization_error("limit-parameter mean needs |sum omega_k e^{i arg r_k}| = 1");
}

// Weighted generalized mean of type `param`.  Finite parameters accept any
// weights; limit parameters require the phase-weight normalization.
inline LimitValue mean(const WeightedFamily& family, const LimitParam& param,
                       double tol = kDefaultTol) {
    if (family.empty()) throw std::invalid_argument("mean needs a nonempty family");
    if (!std::holds_alternative<AutoParam>(param)) check_limit_normalization(family, tol);
    std::vector<Cplx> terms = expand(family);
    return mean_of_terms(terms, param, tol);
}

struct KolmogorovReport {
    double m2;  // permutation invariance
    double m3;  // mean of a constant family is the constant
    double m4;  // replacing a sub-family by its mean preserves the mean
};

// Residuals of the Kolmogorov mean axioms on the given family.  The subset
// names the entries replaced in the M4 computation: they are exchanged for
// |S| copies of the renormalized sub-mean at the common weight (1/|S|) sum w_i.
inline KolmogorovReport kolmogorov_check(const WeightedFamily& family, const LimitParam& param,
                                         const std::vector<std::size_t>& subset,
                                         double tol = kDefaultTol) {
    if (subset.empty() || subset.size() > family.size())
        throw std::invalid_argument("M4 subset must be nonempty and within the family");
    std::vector<bool> in_subset(family.size(), false);
    for (std::size_t i : subset) {
        if (i >= family.size() || in_subset[i])
            throw std::invalid_argument("M4 subset indices must be unique and in range");
        in_subset[i] = true;
    }

    auto value_of = [](const LimitValue& v) -> Cplx {
        if (is_divergent(v))
            throw std::domain_error("kolmogorov_check needs convergent means");
        return limit_value(v);
    };

    Cplx base = value_of(mean(family, param, tol));
    double scale = std::max(1.0, std::abs(base));

    WeightedFamily reversed(family.rbegin(), family.rend());
    double m2 = std::abs(value_of(mean(reversed, param, tol)) - base) / scale;

    WeightedFamily constant = family;
    for (WeightedEntry& e : constant) e.value = family[0].value;
    double m3 = std::abs(value_of(mean(constant, param, tol)) - family[0].value) /
                std::max(1.0, std::abs(family[0].value));

    Cplx total_w{0.0, 0.0};
    for (std::size_t i : subset) total_w += family[i].weight;
    if (std::abs(total_w) < kZeroModulus)
        throw std::invalid_argument("M4 subset weights sum to zero");
    WeightedFamily sub;
    sub.reserve(subset.size());
    for (std::size_t i : subset) sub.push_back({family[i].value, family[i].weight / total_w});
    Cplx sub_mean = value_of(mean(sub, param, tol));
    Cplx wbar = total_w / static_cast<double>(subset.size());
    WeightedFamily replaced;
    replaced.reserve(family.size());
    for (std::size_t k = 0; k < family.size(); ++k)
        if (!in_subset[k]) replaced.push_back(family[k]);
    for (std::size_t j = 0; j < subset.size(); ++j) replaced.push_back({sub_mean, wbar});
    double m4 = std::abs(value_of(mean(replaced, param, tol)) - base) / scale;

    return {m2, m3, m4};
}

}  // namespace nearlin
