#include <doctest.h>

#include <cmath>

#include "treehardy/hardy.hpp"
#include "treehardy/random.hpp"

using namespace treehardy;

namespace {

// Taylor coefficients of the classical Blaschke factor (z - a)/(1 - a z)
// for real a, via polynomial convolution of (z - a) with the geometric
// series of 1/(1 - a z).
std::vector<double> classical_blaschke(double a, int terms) {
    std::vector<double> geo(terms);
    double p = 1.0;
    for (int n = 0; n < terms; ++n, p *= a) geo[n] = p;
    std::vector<double> out(terms, 0.0);
    for (int n = 0; n < terms; ++n) {
        out[n] = -a * geo[n];
        if (n >= 1) out[n] += geo[n - 1];
    }
    return out;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    RandomSource rng(61);
    const HardySeries f = rng.hs_series(3);
    CHECK(series_dist(series_mul(HardySeries::one(), f), f) == 0.0);

    const HardySeries shift = HardySeries::monomial(1, KElement::one());
    const HardySeries shift2 = series_mul(shift, shift);
    CHECK(shift2.degree() == 2);
    CHECK(shift2.coeff(2) == KElement::one());
    CHECK(shift2.coeff(0).is_zero());

    // a gammabar f = gammabar a^(1) f.
    const KElement a = rng.kelement();
    const KElement fk = rng.k2element();
    const HardySeries prod = series_mul(HardySeries::constant(a),
                                        HardySeries::monomial(1, fk));
    CHECK(prod.degree() == 1);
    CHECK(k_dist(prod.coeff(1), k_shift(a, 1) * fk) == 0.0);

    // Associativity.
    const HardySeries g = rng.hs_series(2);
    const HardySeries h = rng.hs_series(2);
    CHECK(series_dist(series_mul(series_mul(f, g), h),
                      series_mul(f, series_mul(g, h))) < 1e-13);
}

TEST_CASE("inner products on square-summable series") {
    RandomSource rng(67);
    const KElement e = rng.k2element();
    for (int k = 0; k <= 3; ++k)
        for (int j = 0; j <= 3; ++j) {
            const Complex ip = h2_inner(HardySeries::monomial(k, e),
                                        HardySeries::monomial(j, e));
            if (k == j)
                CHECK(ip.real() > 0.0);
            else
                CHECK(std::abs(ip) == 0.0);
        }
    const HardySeries f = rng.hs_series(3);
    CHECK(h2_inner(f, f).real() >= 0.0);
    CHECK(std::abs(h2_inner(f, f).imag()) < 1e-15);
    CHECK_THROWS_AS(h2_inner(HardySeries::constant(KElement::constant(1.0)),
                             HardySeries::one()),
                    DomainKError);
}

TEST_CASE("point evaluation") {
    RandomSource rng(71);
    const KElement s0 = rng.kelement();
    const KElement c = rng.kelement();
    CHECK(k_dist(point_eval(HardySeries::constant(s0), c), s0) == 0.0);
    CHECK(k_dist(point_eval(HardySeries::monomial(1, KElement::one()), c), c) ==
          0.0);

    const HardySeries f = rng.hs_series(4);
    CHECK(k_dist(point_eval(f, KElement::zero()), f.coeff(0)) == 0.0);
    for (int k = 0; k <= 4; ++k) {
        const KElement ek = KElement::indicator(k);
        CHECK(k_dist(point_eval(f, ek) - f.coeff(0), ek * f.coeff(1)) < 1e-15);
    }
}

TEST_CASE("point evaluation algebra") {
    RandomSource rng(73);
    for (int rep = 0; rep < 50; ++rep) {
        const HardySeries f = rng.hs_series(rng.uniform_int(0, 3));
        const HardySeries g = rng.hs_series(rng.uniform_int(0, 3));
        const KElement p = rng.kelement();
        const KElement q = rng.kelement();
        const KElement c = rng.kelement();

        CHECK(k_dist(point_eval(f * p + g * q, c),
                     point_eval(f, c) * p + point_eval(g, c) * q) < 1e-12);
        CHECK(k_dist(point_eval(series_mul(f, g), c),
                     point_eval(series_mul(HardySeries::constant(point_eval(f, c)), g),
                                c)) < 1e-12);
        const int n = rng.uniform_int(0, 3);
        CHECK(k_dist(point_eval(series_mul(HardySeries::monomial(n, KElement::one()),
                                           f),
                                c),
                     k_bracket(c, n) * point_eval(f, k_shift(c, n))) < 1e-12);
        const KElement k = rng.invertible_kelement();
        CHECK(k_dist(point_eval(series_mul(HardySeries::constant(k), f), c),
                     point_eval(f, k_shift(k, 1) * k_invert(k) * c) * k) < 1e-12);
    }
}

TEST_CASE("reproducing kernel") {
    CHECK(kernel(KElement::zero()).series.degree() == 0);
    CHECK(kernel(KElement::zero()).series.coeff(0) == KElement::one());

    const KernelResult half = kernel(KElement::constant(0.5), 1e-12);
    CHECK(half.order == 40);
    for (int n = 0; n <= half.series.degree(); ++n)
        CHECK(k_dist(half.series.coeff(n), KElement::constant(std::pow(0.5, n))) <
              1e-15);

    CHECK_THROWS_AS(kernel(KElement::constant(1.0)), DivergenceError);

    RandomSource rng(79);
    for (int rep = 0; rep < 50; ++rep) {
        const HardySeries f = rng.hs_series(rng.uniform_int(0, 3));
        const KElement c = rng.kelement();
        const KElement k = rng.k2element();
        const Complex lhs = k2_inner(point_eval(f, c), k);
        const Complex rhs = h2_inner(
            f, series_mul(kernel(c, 1e-12).series, HardySeries::constant(k)));
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("division at a point") {
    RandomSource rng(83);
    const KElement fk = rng.k2element();
    const KElement c = rng.kelement();

    CHECK(series_dist(bezout_div(HardySeries::monomial(1, fk), c),
                      HardySeries::constant(fk)) == 0.0);
    CHECK(bezout_div(HardySeries::constant(fk), c).degree() == -1);

    // Degree 2: G = c^(1) f + gammabar f.
    const HardySeries g2 = bezout_div(HardySeries::monomial(2, fk), c);
    CHECK(k_dist(g2.coeff(0), k_shift(c, 1) * fk) == 0.0);
    CHECK(k_dist(g2.coeff(1), fk) == 0.0);

    const HardySeries shift_minus_c{{-c, KElement::one()}};
    for (int rep = 0; rep < 50; ++rep) {
        const HardySeries f = rng.hs_series(rng.uniform_int(1, 4));
        const KElement point = rng.kelement();
        const HardySeries g = bezout_div(f, point);
        const HardySeries lhs = f - HardySeries::constant(point_eval(f, point));
        const HardySeries rhs =
            series_mul(HardySeries{{-point, KElement::one()}}, g);
        CHECK(series_dist(lhs, rhs) < 1e-13);
        CHECK(k_norm_inf(point_eval(lhs, point)) < 1e-12);
    }
}

TEST_CASE("blaschke factor at zero and at constants") {
    const BlaschkeResult at_zero = blaschke(KElement::zero());
    CHECK(series_dist(at_zero.b, HardySeries::monomial(1, KElement::one())) == 0.0);
    CHECK(at_zero.l == KElement::one());
    CHECK(at_zero.kaa == KElement::one());

    const BlaschkeResult half = blaschke(KElement::constant(0.5), 1e-12);
    CHECK(half.l == KElement::one());
    const auto classical = classical_blaschke(0.5, half.b.degree() + 1);
    for (int n = 0; n <= half.b.degree(); ++n)
        CHECK(k_dist(half.b.coeff(n), KElement::constant(classical[n])) < 1e-15);
    CHECK(k_dist(half.b.coeff(0), KElement::constant(-0.5)) == 0.0);
    CHECK(k_dist(half.b.coeff(1), KElement::constant(0.75)) < 1e-15);
    CHECK(k_dist(half.b.coeff(2), KElement::constant(0.375)) < 1e-15);
    CHECK(k_dist(half.b.coeff(3), KElement::constant(0.1875)) < 1e-15);

    CHECK_THROWS_AS(blaschke(KElement::constant(1.0)), DivergenceError);
}

TEST_CASE("blaschke factor at a finite-prefix point") {
    const KElement a{{Complex{0.5}}, Complex{}};
    const BlaschkeResult r = blaschke(a, 1e-12);
    CHECK(k_dist(r.kaa, KElement{{Complex{1.25}}, Complex{1.0}}) < 1e-15);
    CHECK(k_dist(r.l, KElement{{Complex{0.8}}, Complex{1.0}}) < 1e-15);
    CHECK(k_dist(r.b.coeff(0),
                 KElement{{Complex{-0.5 * std::sqrt(0.8)}}, Complex{}}) < 1e-15);
    CHECK(k_dist(r.b.coeff(1), k_sqrt(r.l)) < 1e-15);
    CHECK(r.b.degree() <= 2);
    CHECK(k_norm_inf(r.b.coeff(2)) < 1e-15);
}

TEST_CASE("blaschke invariants") {
    RandomSource rng(89);
    for (int rep = 0; rep < 5; ++rep) {
        const KElement a = rng.kelement();
        const BlaschkeResult r = blaschke(a, 1e-12);
        CHECK(k_dist(r.kaa, KElement::one() + k_conj(a) * a * k_shift(r.kaa, 1)) <
              1e-12);
        CHECK(k_norm_inf(point_eval(r.b, a)) < 1e-10);

        for (int m = 0; m <= 3; ++m) {
            const KElement p = rng.k2element();
            const KElement q = rng.k2element();
            const Complex lhs = h2_inner(series_mul(r.b, HardySeries::monomial(m, p)),
                                         series_mul(r.b, HardySeries::constant(q)));
            const Complex rhs = m == 0 ? k2_inner(p, q) : Complex{};
            CHECK(std::abs(lhs - rhs) < 1e-8);
        }
    }
}

TEST_CASE("multiplicative norm bound for square-summable factors") {
    RandomSource rng(97);
    for (int rep = 0; rep < 20; ++rep) {
        const HardySeries s = rng.hs_series(rng.uniform_int(0, 3));
        const HardySeries f = rng.hs_series(rng.uniform_int(0, 3));
        CHECK(h2_norm(series_mul(s, f)) <= h2_norm(s) * h2_norm(f) + 1e-10);
    }
}
