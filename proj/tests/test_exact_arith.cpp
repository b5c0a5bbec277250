#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "indexp/cyclotomic.hpp"
#include "indexp/cycpoly.hpp"
#include "indexp/errors.hpp"
#include "indexp/factor.hpp"
#include "indexp/numtheory.hpp"
#include "indexp/polynomial.hpp"
#include "indexp/roots.hpp"

#include <random>

using namespace indexp;

namespace {

CycNumber zeta(int m, long k = 1) { return CycNumber::zeta(m, k); }
CycNumber rat(long n, long d = 1) { return CycNumber::rational(Rational(n, d)); }

CycNumber random_cyc(std::mt19937_64& rng, int m, int max_abs = 4) {
    int phi = euler_phi(normalize_conductor(m));
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<std::pair<long, Rational>> terms;
    for (int i = 0; i < phi; ++i) terms.emplace_back(i, Rational(num(rng), den(rng)));
    return CycNumber::from_exponents(normalize_conductor(m), terms);
}

} // namespace

TEST_CASE("conductor normalization and basic invariants") {
    CHECK(normalize_conductor(6) == 3);
    CHECK(normalize_conductor(2) == 1);
    CHECK(normalize_conductor(12) == 12);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(CycNumber().conductor() == 1);
    CHECK(CycNumber::rational(Rational(7, 3)).coeffs().size() == 1);
    for (int m : {1, 3, 4, 5, 8, 9, 12, 15})
        CHECK(static_cast<int>(zeta(m).coeffs().size()) == euler_phi(m));
}

TEST_CASE("cyc_normalize reduces and descends") {
    // zeta_4^2 = -1, landing at conductor 1.
    std::vector<Rational> raw4(4, Rational(0));
    raw4[2] = 1;
    CycNumber z = cyc_normalize(raw4, 4);
    CHECK(z.conductor() == 1);
    CHECK(z == rat(-1));

    // 1 + zeta_3 + zeta_3^2 = 0.
    std::vector<Rational> raw3{Rational(1), Rational(1), Rational(1)};
    CHECK(cyc_normalize(raw3, 3).is_zero());

    // zeta_6 lives at conductor 3 as 1 + zeta_3; check it satisfies Phi_6.
    std::vector<Rational> raw6(6, Rational(0));
    raw6[1] = 1;
    CycNumber z6 = cyc_normalize(raw6, 6);
    CHECK(z6.conductor() == 3);
    CHECK(z6 == cyc_add(rat(1), zeta(3)));
    CycNumber phi6_at = cyc_add(cyc_sub(cyc_mul(z6, z6), z6), rat(1)); // X^2 - X + 1
    CHECK(phi6_at.is_zero());
}

TEST_CASE("cyc_arith examples") {
    CHECK(cyc_mul(zeta(8), zeta(8)) == zeta(4));
    CycNumber sqrt2 = cyc_add(zeta(8), zeta(8, 7));
    CHECK(cyc_mul(sqrt2, sqrt2) == rat(2));

    CycNumber inv = cyc_div(rat(1), cyc_add(rat(1), zeta(3)));
    CHECK(cyc_mul(inv, cyc_add(rat(1), zeta(3))) == rat(1));
    CHECK(inv == cyc_neg(zeta(3))); // 1/(1+zeta_3) = 1 + zeta_3^2 = -zeta_3
    CHECK_THROWS_AS(cyc_div(rat(1), CycNumber()), InputError);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20240817);
    for (int m : {3, 4, 8, 12}) {
        for (int trial = 0; trial < 12; ++trial) {
            CycNumber a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
            CHECK(cyc_add(a, b) == cyc_add(b, a));
            CHECK(cyc_mul(a, b) == cyc_mul(b, a));
            CHECK(cyc_mul(a, cyc_mul(b, c)) == cyc_mul(cyc_mul(a, b), c));
            CHECK(cyc_mul(a, cyc_add(b, c)) == cyc_add(cyc_mul(a, b), cyc_mul(a, c)));
            if (!b.is_zero()) CHECK(cyc_mul(cyc_div(a, b), b) == a);
        }
    }
}

TEST_CASE("galois action") {
    CHECK(cyc_galois(zeta(5), 2) == zeta(5, 2));
    CHECK(cyc_galois(cyc_add(rat(1), zeta(3)), 2) == cyc_neg(zeta(3)));
    CHECK(cyc_galois(rat(22, 7), 5) == rat(22, 7));
    CHECK_THROWS_AS(cyc_galois(zeta(4), 2), InputError);

    std::mt19937_64 rng(7);
    for (int m : {5, 8, 12}) {
        auto units = units_mod(m);
        for (int trial = 0; trial < 8; ++trial) {
            CycNumber a = random_cyc(rng, m), b = random_cyc(rng, m);
            for (int t : units) {
                CHECK(cyc_galois(cyc_mul(a, b), t) == cyc_mul(cyc_galois(a, t), cyc_galois(b, t)));
                CHECK(cyc_galois(cyc_add(a, b), t) == cyc_add(cyc_galois(a, t), cyc_galois(b, t)));
                for (int s : units)
                    CHECK(cyc_galois(cyc_galois(a, s), t) == cyc_galois(a, (long)t * s % m));
            }
        }
    }
}

TEST_CASE("membership") {
    CHECK_FALSE(cyc_membership(zeta(3), FieldSpec(1)));
    CHECK(cyc_membership(cyc_add(zeta(3), zeta(3, 2)), FieldSpec(1)));
    CHECK(cyc_membership(cyc_add(zeta(8), zeta(8, 7)), FieldSpec(8)));
    CHECK(cyc_membership(zeta(3), FieldSpec(12)));
    CHECK_FALSE(cyc_membership(zeta(8), FieldSpec(12)));
    CHECK(cyc_membership(zeta(4), FieldSpec(12)));
}

TEST_CASE("descent") {
    // zeta_12^4 = zeta_3 embeds at 12 and descends back to 3.
    CycNumber z = cyc_embed(zeta(3), 12);
    CHECK(z.conductor() == 12);
    CHECK(cyc_descend_min(z).conductor() == 3);
    CHECK(cyc_descend_min(z) == zeta(3));
    CHECK(cyc_descend_min(cyc_embed(rat(5, 2), 8)) == rat(5, 2));
    CHECK_FALSE(cyc_descend_to(zeta(12), 4).has_value());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == RatPoly::from_integers({-1, 1}));
    CHECK(cyclotomic_poly(4) == RatPoly::from_integers({1, 0, 1}));
    // Phi_12 via division of X^12 - 1 by the product of the others.
    RatPoly x12(std::vector<Rational>{Rational(-1), Rational(0), Rational(0), Rational(0),
                                      Rational(0), Rational(0), Rational(0), Rational(0),
                                      Rational(0), Rational(0), Rational(0), Rational(0),
                                      Rational(1)});
    RatPoly prod = RatPoly::constant(Rational(1));
    for (int d : {1, 2, 3, 4, 6}) prod = prod * cyclotomic_poly(d);
    CHECK(cyclotomic_poly(12) == x12.divmod(prod).first);
    CHECK(cyclotomic_poly(12) == RatPoly::from_integers({1, 0, -1, 0, 1}));

    for (int n = 1; n <= 60; ++n) {
        RatPoly p = RatPoly::constant(Rational(1));
        for (int d : divisors(n)) p = p * cyclotomic_poly(d);
        std::vector<Rational> xn(n + 1, Rational(0));
        xn[0] = -1;
        xn[n] = 1;
        CHECK(p == RatPoly(std::move(xn)));
    }
}

TEST_CASE("factor_over_Q") {
    RatPoly x2m2 = RatPoly::from_integers({-2, 0, 1});
    auto f1 = factor_over_Q(x2m2);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == x2m2);

    auto f2 = factor_over_Q(RatPoly::from_integers({-1, 0, 0, 0, 1})); // X^4 - 1
    REQUIRE(f2.size() == 3);
    CHECK(f2[0] == RatPoly::from_integers({-1, 1}));
    CHECK(f2[1] == RatPoly::from_integers({1, 1}));
    CHECK(f2[2] == RatPoly::from_integers({1, 0, 1}));

    auto f3 = factor_over_Q(RatPoly::from_integers({1, 1, 1, 1, 1, 1, 1})); // Phi_7
    REQUIRE(f3.size() == 1);
    CHECK(f3[0] == cyclotomic_poly(7));

    // Multiplicities and non-monic content.
    RatPoly g = RatPoly::from_integers({1, 1}) * RatPoly::from_integers({1, 1}) *
                RatPoly::from_integers({-3, 2}).scaled(Rational(5, 3));
    auto f4 = factor_over_Q(g);
    REQUIRE(f4.size() == 3);
    CHECK(f4[0] == RatPoly::from_integers({-3, 2}));
    CHECK(f4[1] == RatPoly::from_integers({1, 1}));
    CHECK(f4[2] == RatPoly::from_integers({1, 1}));

    // A product of two larger cyclotomics, squarefree.
    auto f5 = factor_over_Q(cyclotomic_poly(15) * cyclotomic_poly(16));
    REQUIRE(f5.size() == 2);
    CHECK(f5[0] == cyclotomic_poly(15));
    CHECK(f5[1] == cyclotomic_poly(16));
}

TEST_CASE("factor_phi_p_over_F") {
    auto f1 = factor_phi_p_over_F(7, FieldSpec(1));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].degree() == 6);

    auto f2 = factor_phi_p_over_F(5, FieldSpec(5));
    REQUIRE(f2.size() == 4);
    for (const auto& f : f2) CHECK(f.degree() == 1);

    auto f3 = factor_phi_p_over_F(3, FieldSpec(4));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].degree() == 2);

    // Product identity and equal degrees over a grid.
    for (int p : {3, 5, 7}) {
        for (int mf : {1, 3, 4, 5, 8, 9, 12, 15}) {
            FieldSpec F(mf);
            auto fs = factor_phi_p_over_F(p, F);
            CycPoly prod = CycPoly::from_ratpoly(RatPoly::constant(Rational(1)), F.conductor());
            for (const auto& f : fs) {
                CHECK(f.degree() == fs[0].degree());
                prod = prod * f;
            }
            CHECK(prod == CycPoly::from_ratpoly(cyclotomic_poly(p), F.conductor()));
        }
    }
}

TEST_CASE("zeta_p_in_F") {
    CHECK(zeta_p_in_F(2, FieldSpec(1)));
    CHECK(zeta_p_in_F(3, FieldSpec(12)));
    CHECK_FALSE(zeta_p_in_F(3, FieldSpec(4)));
    CHECK(zeta_p_in_F(3, FieldSpec(6))); // Q(zeta_6) = Q(zeta_3)
    CHECK_FALSE(zeta_p_in_F(5, FieldSpec(12)));
}

TEST_CASE("pth_root_in_F spec examples") {
    auto r1 = pth_root_in_F(rat(4), 2, FieldSpec(1));
    REQUIRE(r1.has_value());
    CHECK(*r1 == rat(2));

    CHECK_FALSE(pth_root_in_F(rat(2), 2, FieldSpec(1)).has_value());

    auto r2 = pth_root_in_F(rat(2), 2, FieldSpec(8));
    REQUIRE(r2.has_value());
    CHECK(cyc_mul(*r2, *r2) == rat(2));
    CHECK(*r2 == cyc_add(zeta(8), zeta(8, 7))); // zeta_8 + zeta_8^-1

    auto r3 = pth_root_in_F(rat(-1), 2, FieldSpec(4));
    REQUIRE(r3.has_value());
    CHECK(*r3 == zeta(4));

    CHECK_THROWS_AS(pth_root_in_F(CycNumber(), 2, FieldSpec(1)), InputError);

    // mu_test-style trivialities.
    auto r4 = pth_root_in_F(rat(1), 3, FieldSpec(1));
    REQUIRE(r4.has_value());
    CHECK(*r4 == rat(1));
    CHECK_FALSE(pth_root_in_F(rat(-1), 2, FieldSpec(1)).has_value());

    // lambda = zeta_3 over Q: not even in the field.
    CHECK_FALSE(pth_root_in_F(zeta(3), 2, FieldSpec(1)).has_value());
    // Cube root of zeta_3 in Q(zeta_9): zeta_9.
    auto r5 = pth_root_in_F(zeta(3), 3, FieldSpec(9));
    REQUIRE(r5.has_value());
    CHECK(cyc_pow(*r5, 3) == zeta(3));
    // All three cube roots of 1 lie in Q(zeta_3).
    CHECK(all_pth_roots_in_F(rat(1), 3, FieldSpec(3)).size() == 3);
}

TEST_CASE("pth_root against brute-force candidates") {
    // When a root mu is known, every root is mu*zeta_p^j; the set of roots in
    // F found by the decision procedure must match membership of candidates.
    std::mt19937_64 rng(99);
    for (int p : {2, 3}) {
        for (int mf : {1, 3, 4, 8, 12}) {
            FieldSpec F(mf);
            for (int trial = 0; trial < 6; ++trial) {
                CycNumber mu = random_cyc(rng, mf, 3);
                if (mu.is_zero()) continue;
                CycNumber lam = cyc_pow(mu, p);
                auto roots = all_pth_roots_in_F(lam, p, F);
                std::size_t expected = 0;
                for (int j = 0; j < p; ++j) {
                    CycNumber cand = cyc_mul(mu, CycNumber::zeta(p, j));
                    if (cyc_membership(cand, F)) ++expected;
                }
                CHECK(roots.size() == expected);
                for (const auto& r : roots) CHECK(cyc_pow(r, p) == lam);
            }
        }
    }
}

TEST_CASE("squarefree decomposition") {
    RatPoly f = RatPoly::from_integers({1, 1}) * RatPoly::from_integers({1, 1}) *
                RatPoly::from_integers({-1, 1}) * RatPoly::from_integers({2, 0, 1});
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 1);
    CHECK(parts[1].second == 2);
    CHECK(parts[1].first == RatPoly::from_integers({1, 1}).monic());
}
