#pragma once

#include <complex>
#include <numbers>
#include <random>

#include <nearlin/nearlin.hpp>

namespace testutil {

using nearlin::Cplx;

// One deterministic stream for the whole test binary.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline Cplx random_cplx(double mod_lo, double mod_hi) {
    return std::polar(uniform(mod_lo, mod_hi), uniform(-std::numbers::pi, std::numbers::pi));
}

inline nearlin::Vec random_vec(std::size_t dim, double mod_lo, double mod_hi) {
    nearlin::Vec v(dim);
    for (auto& z : v) z = random_cplx(mod_lo, mod_hi);
    return v;
}

inline double rel_err(Cplx got, Cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testutil
