#include "indexp/roots.hpp"

#include "indexp/errors.hpp"
#include "indexp/factor.hpp"
#include "indexp/numtheory.hpp"

#include <algorithm>
#include <set>

namespace indexp {

std::vector<int> phi_p_orbit_subgroup(int p, const FieldSpec& F) {
    check_input(is_prime(p), "p must be prime");
    // Image of Gal(F(zeta_p)/F) in (Z/p)^*: units == 1 mod gcd(p, m_F).
    int g = static_cast<int>(gcd_long(p, F.conductor()));
    std::vector<int> s;
    for (int u = 1; u < p; ++u)
        if (u % g == 1 % g) s.push_back(u);
    if (p == 2) s = {1};
    return s;
}

std::vector<CycPoly> factor_phi_p_over_F(int p, const FieldSpec& F) {
    check_input(is_prime(p), "factor_phi_p_over_F: p must be prime");
    std::vector<int> S = phi_p_orbit_subgroup(p, F);
    int L = static_cast<int>(lcm_long(normalize_conductor(p), F.conductor()));
    // Orbits of S acting on 1..p-1 by multiplication.
    std::vector<bool> seen(p, false);
    std::vector<std::vector<int>> orbits;
    for (int r = 1; r < p; ++r) {
        if (seen[r]) continue;
        std::vector<int> orb;
        for (int s : S) {
            int e = static_cast<int>(static_cast<long>(r) * s % p);
            if (!seen[e]) {
                seen[e] = true;
                orb.push_back(e);
            }
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    std::vector<CycPoly> factors;
    CycPoly product = CycPoly::from_ratpoly(RatPoly::constant(Rational(1)), F.conductor());
    for (const auto& orb : orbits) {
        CycPoly f = CycPoly::from_ratpoly(RatPoly::constant(Rational(1)), L);
        for (int r : orb) {
            CycPoly lin(L, {cyc_neg(CycNumber::zeta(p, r)), CycNumber::rational(Rational(1))});
            f = f * lin;
        }
        check_internal(f.degree() == static_cast<int>(S.size()), "phi_p factor degree mismatch");
        // Coefficients must lie in F; store them at conductor m_F.
        std::vector<CycNumber> coeffs;
        coeffs.reserve(f.degree() + 1);
        for (const auto& z : f.coeffs()) {
            check_internal(cyc_membership(z, F), "phi_p factor coefficient outside F");
            auto down = cyc_descend_to(z, F.conductor());
            check_internal(down.has_value(), "phi_p factor coefficient rewrite failed");
            coeffs.push_back(*down);
        }
        CycPoly f_F(F.conductor(), std::move(coeffs));
        product = product * f_F;
        factors.push_back(std::move(f_F));
    }
    CycPoly phi_p = CycPoly::from_ratpoly(cyclotomic_poly(p), F.conductor());
    check_internal(product == phi_p, "phi_p factor product mismatch");
    return factors;
}

namespace {

// Fast probabilistic-negative filter: map lambda into F_q at a root of
// Phi_{m_F} mod q for primes q == 1 (mod lcm(m_F, p)) and test the p-th
// power residue. Failure certifies there is no root; success says nothing.
bool filter_rejects(const CycNumber& lambda_F, int p, const FieldSpec& F) {
    const int kFilterPrimes = 5;
    long step = lcm_long(F.conductor(), p);
    long q = 1;
    int used = 0;
    int guard = 0;
    while (used < kFilterPrimes && ++guard < 2000) {
        q += step;
        if (!is_prime(q)) continue;
        // Root of Phi_{m_F} mod q: any primitive m_F-th root of unity.
        long gen = primitive_root(q);
        long w = pow_mod(gen, (q - 1) / F.conductor(), q);
        // Evaluate lambda at w.
        long val = 0;
        bool bad = false;
        long wpow = 1;
        for (const auto& c : lambda_F.coeffs()) {
            if (c != 0) {
                if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), static_cast<unsigned long>(q))) {
                    bad = true;
                    break;
                }
                long num = static_cast<long>(mpz_fdiv_ui(c.get_num().get_mpz_t(), q));
                long den = static_cast<long>(mpz_fdiv_ui(c.get_den().get_mpz_t(), q));
                val = (val + num * inv_mod(den, q) % q * wpow) % q;
            }
            wpow = wpow * w % q;
        }
        if (bad) continue;
        if (val == 0) continue; // lambda vanishes at this reduction; inconclusive
        ++used;
        if (pow_mod(val, (q - 1) / p, q) != 1) return true;
    }
    return false;
}

} // namespace

std::vector<CycNumber> all_pth_roots_in_F(const CycNumber& lambda, int p, const FieldSpec& F) {
    check_input(!lambda.is_zero(), "pth_root_in_F: lambda must be nonzero");
    check_input(is_prime(p), "pth_root_in_F: p must be prime");
    std::vector<CycNumber> roots;
    if (!cyc_membership(lambda, F)) return roots; // mu in F forces lambda in F

    // Rewrite lambda at conductor m_F.
    int m = F.conductor();
    CycNumber lam = lambda;
    if (lam.conductor() != m) {
        int M = static_cast<int>(lcm_long(lam.conductor(), m));
        auto down = cyc_descend_to(cyc_embed(lam, M), m);
        check_internal(down.has_value(), "pth_root_in_F: rewrite to F failed");
        lam = *down;
    }

    // Square roots of rationals over Q: sign plus perfect squares.
    if (p == 2 && m == 1) {
        Rational q = lam.rational_value();
        if (q < 0) return roots;
        Integer num = q.get_num(), den = q.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            Integer rn, rd;
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            Rational root(rn, rd);
            root.canonicalize();
            roots.push_back(CycNumber::rational(root));
            roots.push_back(CycNumber::rational(-root));
            std::sort(roots.begin(), roots.end(),
                      [](const CycNumber& a, const CycNumber& b) { return cyc_cmp(a, b) > 0; });
        }
        return roots;
    }

    if (filter_rejects(lam, p, F)) return roots;

    // Exact decision via the norm to Q (Trager): find a shift k making
    // N(X) = prod over Gal(F/Q) of sigma(f(X - k zeta)) squarefree, factor N
    // over Q, and pull linear factors back through gcds over F.
    std::vector<CycNumber> fc(p + 1);
    fc[0] = cyc_neg(lam);
    fc[p] = CycNumber::rational(Rational(1));
    CycPoly f(m, std::move(fc));
    const ConductorData& cd = conductor_data(m);
    CycNumber alpha = m == 1 ? CycNumber::rational(Rational(1)) : CycNumber::zeta(m);
    RatPoly N;
    long shift = -1;
    long shift_bound = static_cast<long>(p) * cd.phi * p * cd.phi + 2;
    for (long k = 0; k <= shift_bound && shift < 0; ++k) {
        CycPoly shifted = f;
        if (k > 0) {
            CycPoly xminus(m, {cyc_neg(cyc_mul(CycNumber::integer(k), alpha)),
                               CycNumber::rational(Rational(1))});
            shifted = f.compose(xminus);
        }
        CycPoly norm = CycPoly::from_ratpoly(RatPoly::constant(Rational(1)), m);
        for (int t : cd.units) norm = norm * shifted.galois(m == 1 ? 1 : t);
        check_internal(norm.is_rational(), "pth_root_in_F: norm not rational");
        RatPoly Nk = norm.to_ratpoly();
        if (poly_gcd(Nk, Nk.derivative()).degree() == 0) {
            N = Nk;
            shift = k;
        }
    }
    check_internal(shift >= 0, "pth_root_in_F: no squarefree shift found");

    std::vector<RatPoly> nfactors = factor_over_Q(N);
    for (const auto& d : nfactors) {
        if (d.degree() > cd.phi) continue; // cannot be the minimal polynomial of mu in F
        CycPoly dF = CycPoly::from_ratpoly(d.monic(), m);
        if (shift > 0) {
            CycPoly xplus(m, {cyc_mul(CycNumber::integer(shift), alpha),
                              CycNumber::rational(Rational(1))});
            dF = dF.compose(xplus);
        }
        CycPoly g = cycpoly_gcd(f, dF);
        if (g.degree() == 1) {
            CycNumber root = cyc_neg(g[0]);
            check_internal(cyc_eq(cyc_pow(root, p), lam), "pth_root_in_F: root check failed");
            check_internal(cyc_membership(root, F), "pth_root_in_F: root outside F");
            roots.push_back(root);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const CycNumber& a, const CycNumber& b) { return cyc_cmp(a, b) > 0; });
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const CycNumber& a, const CycNumber& b) { return cyc_eq(a, b); }),
                roots.end());
    return roots;
}

std::optional<CycNumber> pth_root_in_F(const CycNumber& lambda, int p, const FieldSpec& F) {
    std::vector<CycNumber> roots = all_pth_roots_in_F(lambda, p, F);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

} // namespace indexp
