#include <catch2/catch_amalgamated.hpp>

#include <nearlin/line.hpp>

#include "testutil.hpp"

using namespace nearlin;
using testutil::random_cplx;
using testutil::rel_err;
using testutil::uniform;

TEST_CASE("embedded constants") {
    DeformedLine L(3.0);
    CHECK(rel_err(line_embed_int(L, 2), Cplx(std::cbrt(2.0), 0.0)) < 1e-13);
    CHECK(rel_err(line_embed_int(L, 4), Cplx(std::cbrt(4.0), 0.0)) < 1e-13);
    CHECK(rel_err(line_embed_int(L, -5), Cplx(-std::cbrt(5.0), 0.0)) < 1e-13);
    CHECK(line_embed_int(L, 0) == Cplx{0.0, 0.0});
    CHECK(line_embed_int(L, 1) == Cplx{1.0, 0.0});

    // the transported imaginary unit is i itself
    Cplx iu = line_i(L);
    CHECK(iu.real() == 0.0);
    CHECK(iu.imag() == 1.0);

    CHECK_THROWS_AS(DeformedLine(0.0), std::domain_error);
}

TEST_CASE("embedded integer m acts as an m-fold sum") {
    for (double p : {1.0, 3.0, -2.0}) {
        DeformedLine L(p);
        for (int t = 0; t < 30; ++t) {
            Cplx a = random_cplx(0.2, 3.0);
            std::vector<Cplx> three = {a, a, a};
            CHECK(rel_err(line_embed_int(L, 3) * a, line_sum(L, three)) < 1e-9);
        }
    }
}

TEST_CASE("transported conjugation") {
    DeformedLine L(3.0);
    for (int t = 0; t < 50; ++t) {
        Cplx a = random_cplx(0.2, 4.0), b = random_cplx(0.2, 4.0);
        // numerically the ordinary conjugation
        CHECK(rel_err(line_conj(L, a), std::conj(a)) < 1e-12);
        // involution and distribution over the deformed sum
        CHECK(rel_err(line_conj(L, line_conj(L, a)), a) < 1e-12);
        CHECK(rel_err(line_conj(L, line_add(L, a, b)),
                      line_add(L, line_conj(L, a), line_conj(L, b))) < 1e-9);
        // a * conj(a) = |a|^2 with the modulus taken in the line
        Cplx m = line_mod(L, a);
        CHECK(rel_err(a * line_conj(L, a), m * m) < 1e-9);
    }
}

TEST_CASE("transported modulus") {
    DeformedLine L(5.0);
    for (int t = 0; t < 50; ++t) {
        Cplx a = random_cplx(0.3, 3.0), b = random_cplx(0.3, 3.0);
        CHECK(rel_err(line_mod(L, a), Cplx(std::abs(a), 0.0)) < 1e-12);
        // multiplicative
        CHECK(rel_err(line_mod(L, a * b), line_mod(L, a) * line_mod(L, b)) < 1e-12);
        // line triangle inequality
        CHECK(line_leq(L, line_mod(L, line_add(L, a, b)),
                       line_add(L, line_mod(L, a), line_mod(L, b))));
    }
}

TEST_CASE("transported real and imaginary parts") {
    DeformedLine L(3.0);
    // psi(3+4i) has line-real part psi(3), not Re(psi(3+4i))
    Cplx a = eps_apply(L.psi(), {3.0, 4.0});
    CHECK(rel_err(line_re(L, a), eps_apply(L.psi(), {3.0, 0.0})) < 1e-12);
    CHECK(rel_err(line_im(L, a), eps_apply(L.psi(), {4.0, 0.0})) < 1e-12);

    Cplx two = line_embed_int(L, 2);
    for (int t = 0; t < 50; ++t) {
        Cplx z = random_cplx(0.2, 4.0);
        // Re(z) = 2^{-1} * (z + conj z) in the line
        CHECK(rel_err(line_re(L, z), line_add(L, z, line_conj(L, z)) / two) < 1e-9);
        // z = Re(z) + i * Im(z) in the line
        Cplx recon = line_add(L, line_re(L, z), line_i(L) * line_im(L, z));
        CHECK(rel_err(recon, z) < 1e-9);
        // |Re z| below |z| in the line order
        CHECK(line_leq(L, line_mod(L, line_re(L, z)), line_mod(L, z)));
    }
}

TEST_CASE("imaginary unit relations") {
    DeformedLine L(7.0);
    Cplx iu = line_i(L);
    CHECK(rel_err(iu * iu, line_embed_int(L, -1)) < 1e-15);
    CHECK(rel_err(Cplx(1.0, 0.0) / iu, line_neg(iu)) < 1e-15);
}

TEST_CASE("line order") {
    DeformedLine L(3.0);
    Cplx one = line_embed_int(L, 1), two = line_embed_int(L, 2);
    CHECK(line_leq(L, one, two));
    CHECK_FALSE(line_leq(L, two, one));
    CHECK(line_leq(L, one, one));
    // complex values are incomparable
    CHECK_FALSE(line_leq(L, Cplx(0.0, 1.0), one));
    CHECK_FALSE(line_leq(L, one, Cplx(0.0, 1.0)));

    // for p < 0 the sigma coordinate still orders embedded positives
    DeformedLine Ln(-2.0);
    CHECK(line_leq(Ln, line_embed_int(Ln, 1), line_embed_int(Ln, 2)));
    // even though the numeric magnitudes reverse
    CHECK(std::abs(line_embed_int(Ln, 2)) < std::abs(line_embed_int(Ln, 1)));
}

TEST_CASE("line square root") {
    DeformedLine L(3.0);
    CHECK(rel_err(line_sqrt_pos(L, {9.0, 0.0}), Cplx(3.0, 0.0)) < 1e-15);
    CHECK(line_sqrt_pos(L, {0.0, 0.0}) == Cplx{0.0, 0.0});
    CHECK_THROWS_AS(line_sqrt_pos(L, Cplx(-1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(line_sqrt_pos(L, Cplx(1.0, 0.5)), std::domain_error);
}

TEST_CASE("field axioms hold on samples") {
    for (double p : {2.0, 3.0, -1.5}) {
        DeformedLine L(p);
        for (int t = 0; t < 40; ++t) {
            Cplx a = random_cplx(0.2, 3.0), b = random_cplx(0.2, 3.0), c = random_cplx(0.2, 3.0);
            CHECK(rel_err(line_add(L, a, b), line_add(L, b, a)) < 1e-12);
            CHECK(rel_err(line_add(L, line_add(L, a, b), c), line_add(L, a, line_add(L, b, c))) < 1e-9);
            // multiplication distributes over the deformed addition
            CHECK(rel_err(a * line_add(L, b, c), line_add(L, a * b, a * c)) < 1e-9);
            // additive inverse
            Cplx z = line_add(L, a, line_neg(a));
            CHECK(std::abs(z) == 0.0);
        }
    }
}
