#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include <nearlin/io.hpp>
#include <nearlin/nearlin.hpp>

#include "testutil.hpp"

using namespace nearlin;
using testutil::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;

// Naive reference: eps_{1/alpha}( h * sum_k eps_alpha(f_k) ) in plain polar
// arithmetic, no log-domain stabilization. Real alpha only.
Cplx naive_alpha_integral(double alpha, const SampledFunction& f) {
    Cplx acc(0.0, 0.0);
    for (const Cplx& z : f.samples) {
        double r = std::abs(z);
        if (r == 0.0) continue;
        acc += std::pow(r, alpha) * (z / r);
    }
    acc *= f.step();
    double r = std::abs(acc);
    if (r == 0.0) return {0.0, 0.0};
    return std::pow(r, 1.0 / alpha) * (acc / r);
}

}  // namespace

TEST_CASE("sampling grid construction and validation") {
    SampledFunction f = SampledFunction::sample(0.0, 1.0, 4, [](double x) { return Cplx(x, 0.0); });
    CHECK(f.samples.size() == 4);
    CHECK(f.step() == 0.25);
    CHECK(f.node(0) == 0.125);
    CHECK(f.node(3) == 0.875);
    CHECK(f.samples[2] == Cplx(0.625, 0.0));

    CHECK_THROWS_AS(SampledFunction(1.0, 1.0, {Cplx(0, 0), Cplx(0, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(SampledFunction(2.0, 1.0, {Cplx(0, 0), Cplx(0, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(SampledFunction(0.0, 1.0, {Cplx(1, 0)}), std::invalid_argument);

    SampledFunction g = SampledFunction::sample(0.0, 1.0, 4, [](double) { return Cplx(1, 0); });
    CHECK_NOTHROW(check_same_grid(f, g));
    SampledFunction shifted(0.5, 1.5, g.samples);
    CHECK_THROWS_AS(check_same_grid(f, shifted), std::invalid_argument);
    SampledFunction coarser = SampledFunction::sample(0.0, 1.0, 8, [](double) { return Cplx(1, 0); });
    CHECK_THROWS_AS(check_same_grid(f, coarser), std::invalid_argument);
}

TEST_CASE("deformed integral of constants and monomials") {
    Cplx c(3.0, -2.0);
    SampledFunction constant = SampledFunction::sample(0.0, 1.0, 64, [&](double) { return c; });
    CHECK(rel_err(alpha_integral(AutoParam(1.0), constant), c) < 1e-14);

    // eps_3(1) = 1 so the transformed Riemann sum is exactly b - a = 2
    SampledFunction ones = SampledFunction::sample(0.0, 2.0, 256, [](double) { return Cplx(1, 0); });
    CHECK(rel_err(alpha_integral(AutoParam(3.0), ones), Cplx(std::cbrt(2.0), 0.0)) < 1e-13);

    // midpoint rule on x^2 carries an O(h^2) defect before the square root
    SampledFunction ramp =
        SampledFunction::sample(0.0, 1.0, 256, [](double x) { return Cplx(x, 0.0); });
    CHECK(rel_err(alpha_integral(AutoParam(2.0), ramp), Cplx(std::sqrt(1.0 / 3.0), 0.0)) < 2e-6);

    SampledFunction zero = SampledFunction::sample(-1.0, 1.0, 16, [](double) { return Cplx(0, 0); });
    CHECK(alpha_integral(AutoParam(5.0), zero) == Cplx(0.0, 0.0));
}

TEST_CASE("deformed integral matches the unstabilized formula") {
    for (double alpha : {1.0, 2.0, 0.5, 3.0, -1.5}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = static_cast<std::size_t>(testutil::uniform_int(8, 40));
            std::vector<Cplx> values(n);
            for (Cplx& z : values) z = testutil::random_cplx(0.4, 2.5);
            SampledFunction f(-0.5, 1.7, values);
            CHECK(rel_err(alpha_integral(AutoParam(alpha), f), naive_alpha_integral(alpha, f)) <
                  1e-12);
        }
    }
}

TEST_CASE("refinement tightens the deformed integral") {
    auto smooth = [](double x) { return std::polar(2.0 + std::sin(x), 0.3 * x); };
    Cplx fine = alpha_integral(
        AutoParam(2.0), SampledFunction::sample(0.0, 3.0, 1 << 14, smooth));
    double prev = 1e9;
    for (std::size_t n : {64, 128, 256}) {
        Cplx got = alpha_integral(AutoParam(2.0), SampledFunction::sample(0.0, 3.0, n, smooth));
        double gap = std::abs(got - fine);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("Lp pairing and norms on sampled functions") {
    SampledFunction unit = SampledFunction::sample(0.0, 1.0, 32, [](double) { return Cplx(1, 0); });
    CHECK(rel_err(Lp_pairing(unit, unit, 2.0), Cplx(1.0, 0.0)) < 1e-14);

    SampledFunction ramp =
        SampledFunction::sample(0.0, 1.0, 128, [](double x) { return Cplx(x, 0.0); });
    // midpoint sums are exact on linear integrands
    CHECK(rel_err(Lp_norm(ramp, 1.0), 0.5) < 1e-13);

    SampledFunction ones = SampledFunction::sample(0.0, 2.0, 256, [](double) { return Cplx(1, 0); });
    CHECK(rel_err(Lp_norm(ones, 3.0), std::cbrt(2.0)) < 1e-13);

    CHECK_THROWS_AS(Lp_norm(ones, 0.0), std::domain_error);
    CHECK_THROWS_AS(Lp_norm(ones, -2.0), std::domain_error);

    SampledFunction zero = SampledFunction::sample(0.0, 1.0, 8, [](double) { return Cplx(0, 0); });
    CHECK(Lp_norm(zero, 3.0) == 0.0);
    CHECK(Lp_pairing(zero, zero, 3.0) == Cplx(0.0, 0.0));

    // huge and tiny moduli go through the log-domain accumulator unharmed
    SampledFunction big = SampledFunction::sample(0.0, 1.0, 16, [](double) { return Cplx(1e200, 0); });
    CHECK(rel_err(Lp_norm(big, 4.0), 1e200) < 1e-12);
    SampledFunction tiny =
        SampledFunction::sample(0.0, 1.0, 16, [](double) { return Cplx(1e-200, 0); });
    CHECK(rel_err(Lp_norm(tiny, 4.0), 1e-200) < 1e-12);
}

TEST_CASE("Lp pairing properties on random step functions") {
    for (double p : {1.0, 2.0, 3.0, 7.0}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t n = static_cast<std::size_t>(testutil::uniform_int(4, 24));
            std::vector<Cplx> fv(n), gv(n);
            for (Cplx& z : fv) z = testutil::random_cplx(0.3, 2.0);
            for (Cplx& z : gv) z = testutil::random_cplx(0.3, 2.0);
            SampledFunction f(0.0, 2.5, fv), g(0.0, 2.5, gv);

            // self pairing sits on the nonnegative real axis and equals the norm
            Cplx self = Lp_pairing(f, f, p);
            CHECK(self.imag() == 0.0);
            CHECK(rel_err(self.real(), Lp_norm(f, p)) < 1e-12);

            Cplx fg = Lp_pairing(f, g, p);
            Cplx gf = Lp_pairing(g, f, p);
            CHECK(rel_err(gf, std::conj(fg)) < 1e-11);
        }
    }

    // at p = 2 the pairing is the half-power image of the classical integral
    std::vector<Cplx> fv = {{1.0, 2.0}, {-0.5, 1.0}, {2.0, 0.25}};
    std::vector<Cplx> gv = {{0.5, -1.0}, {3.0, 0.0}, {-1.0, -1.0}};
    SampledFunction f(0.0, 3.0, fv), g(0.0, 3.0, gv);
    Cplx classical(0.0, 0.0);
    for (std::size_t k = 0; k < fv.size(); ++k) classical += fv[k] * std::conj(gv[k]);
    classical *= f.step();
    CHECK(rel_err(Lp_pairing(f, g, 2.0), eps_apply(AutoParam(0.5), classical)) < 1e-12);
}

TEST_CASE("Lp norms approach the sup norm on a fixed grid") {
    auto bump = [](double x) { return Cplx(1.0 + 0.5 * std::sin(3.0 * x), 0.0); };
    SampledFunction f = SampledFunction::sample(0.0, 1.0, 64, bump);
    double sup = Linf_norm(f);
    double prev = 1e9;
    for (double p : {8.0, 32.0, 128.0}) {
        double gap = std::abs(Lp_norm(f, p) - sup);
        CHECK(gap < prev);
        prev = gap;
    }
    // the h^{1/p} measure factor still shaves a percent or two at p = 128
    CHECK(prev < 5e-2);
}

TEST_CASE("directed limit pairings on samples") {
    SampledFunction three = SampledFunction::sample(0.0, 1.0, 10, [](double) { return Cplx(3, 0); });
    CHECK(rel_err(Linf_pairing(three, three, Direction(0.0)), Cplx(3.0, 0.0)) < 1e-14);

    SampledFunction sine =
        SampledFunction::sample(0.0, 2.0 * kPi, 1000, [](double x) { return Cplx(std::sin(x), 0.0); });
    CHECK(std::abs(Linf_norm(sine) - 1.0) < 1e-5);

    std::vector<Cplx> with_zero = {{2.0, 0.0}, {0.0, 0.0}, {-1.0, 0.5}};
    SampledFunction z(0.0, 3.0, with_zero);
    CHECK(Lneginf_seminorm(z) == 0.0);

    std::vector<Cplx> two_three = {{2.0, 0.0}, {0.0, 3.0}};
    SampledFunction h(0.0, 1.0, two_three);
    CHECK(rel_err(Linf_pairing(h, h, Direction(0.0)), Cplx(3.0, 0.0)) < 1e-14);
    CHECK(rel_err(Lneginf_pairing(h, h, Direction(0.0)), Cplx(2.0, 0.0)) < 1e-14);
    CHECK(Linf_norm(h) == 3.0);
    CHECK(Lneginf_seminorm(h) == 2.0);

    // self products are real positive, so any direction returns the same modulus
    CHECK(rel_err(Linf_pairing(h, h, Direction(kPi / 4.0)), Cplx(3.0, 0.0)) < 1e-12);

    SampledFunction wrong_grid(0.0, 2.0, two_three);
    CHECK_THROWS_AS(Linf_pairing(h, wrong_grid, Direction(0.0)), std::invalid_argument);
}

TEST_CASE("sampled functions round trip through CSV") {
    SampledFunction f = SampledFunction::sample(
        -1.0, 3.0, 9, [](double x) { return std::polar(1.0 + x * x, 0.7 * x); });
    std::string text = io::function_csv(f);
    std::istringstream in(text);
    SampledFunction back = io::parse_function_csv(in);
    REQUIRE(back.samples.size() == f.samples.size());
    CHECK(std::abs(back.a - f.a) < 1e-12);
    CHECK(std::abs(back.b - f.b) < 1e-12);
    for (std::size_t k = 0; k < f.samples.size(); ++k)
        CHECK(std::abs(back.samples[k] - f.samples[k]) < 1e-15);

    std::istringstream headerless("0.5,1,0\n1.5,2,0\n2.5,3,0\n");
    SampledFunction g = io::parse_function_csv(headerless);
    CHECK(g.samples.size() == 3);
    CHECK(std::abs(g.a - 0.0) < 1e-12);
    CHECK(std::abs(g.b - 3.0) < 1e-12);
    CHECK(g.samples[2] == Cplx(3.0, 0.0));

    std::istringstream lonely("x,re,im\n0.5,1,0\n");
    CHECK_THROWS_AS(io::parse_function_csv(lonely), std::invalid_argument);
    std::istringstream ragged("0.5,1,0\n1.5,2,0\n3.5,3,0\n");
    CHECK_THROWS_AS(io::parse_function_csv(ragged), std::invalid_argument);
    std::istringstream backwards("2.5,1,0\n1.5,2,0\n");
    CHECK_THROWS_AS(io::parse_function_csv(backwards), std::invalid_argument);
    std::istringstream shortrow("0.5,1\n1.5,2\n");
    CHECK_THROWS_AS(io::parse_function_csv(shortrow), std::invalid_argument);
    std::istringstream garbage("0.5,one,0\n1.5,2,0\n");
    CHECK_THROWS_AS(io::parse_function_csv(garbage), std::invalid_argument);
}
