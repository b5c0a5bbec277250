#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "indexp/errors.hpp"
#include "indexp/idempotents.hpp"
#include "indexp/numtheory.hpp"
#include "indexp/roots.hpp"

#include <algorithm>

using namespace indexp;

namespace {

GroupPtr make_s3() { return FiniteGroup::from_perm_generators(3, {{1, 2, 0}, {1, 0, 2}}); }
GroupPtr make_c2() { return FiniteGroup::from_perm_generators(2, {{1, 0}}); }
GroupPtr make_c3() { return FiniteGroup::from_perm_generators(3, {{1, 2, 0}}); }
GroupPtr make_c4() { return FiniteGroup::from_perm_generators(4, {{1, 2, 3, 0}}); }
GroupPtr make_d4() { return FiniteGroup::from_perm_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}); }
GroupPtr make_q8() {
    return FiniteGroup::from_perm_generators(
        8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
}
GroupPtr make_c3c3() {
    return FiniteGroup::from_perm_generators(6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}});
}

CycNumber rat(long n, long d = 1) { return CycNumber::rational(Rational(n, d)); }

int find_trivial(const CharacterTable& t) {
    for (int i = 0; i < t.count(); ++i) {
        bool ok = true;
        for (const auto& v : t.irreducibles[i].values)
            if (!cyc_eq(v, rat(1))) ok = false;
        if (ok) return i;
    }
    return -1;
}

// Character of H = <gen> (cyclic) with a prescribed value on gen.
int find_char_with_value(const CharacterTable& t, int cls, const CycNumber& v) {
    for (int i = 0; i < t.count(); ++i)
        if (cyc_eq(t.irreducibles[i].values[cls], v)) return i;
    return -1;
}

} // namespace

TEST_CASE("pci_from_character") {
    // Trivial character: the averaging idempotent.
    GroupPtr s3 = make_s3();
    CharacterTable st = character_table(s3);
    GroupAlgebraElement avg = pci_from_character(st.irreducibles[find_trivial(st)]);
    for (int g = 0; g < 6; ++g) CHECK(cyc_eq(avg.coeff(g), rat(1, 6)));

    // sign of C2: (1 - s)/2.
    GroupPtr c2 = make_c2();
    CharacterTable ct = character_table(c2);
    int sign = 1 - find_trivial(ct);
    GroupAlgebraElement es = pci_from_character(ct.irreducibles[sign]);
    CHECK(cyc_eq(es.coeff(0), rat(1, 2)));
    CHECK(cyc_eq(es.coeff(1), rat(-1, 2)));

    // A nontrivial character of C3: (1 + zeta^2 g + zeta g^2)/3 for chi(g) = zeta.
    GroupPtr c3 = make_c3();
    CharacterTable t3 = character_table(c3);
    int cls_g = c3->class_of(1);
    int idx = find_char_with_value(t3, cls_g, CycNumber::zeta(3));
    REQUIRE(idx >= 0);
    GroupAlgebraElement e3 = pci_from_character(t3.irreducibles[idx]);
    CHECK(cyc_eq(e3.coeff(0), rat(1, 3)));
    CHECK(cyc_eq(e3.coeff(1), cyc_mul(rat(1, 3), CycNumber::zeta(3, 2))));
    CHECK(cyc_eq(e3.coeff(2), cyc_mul(rat(1, 3), CycNumber::zeta(3))));
    CHECK(algebra_eq(algebra_mul(e3, e3), e3));

    // Full pci set: orthogonal resolution of the identity.
    std::vector<GroupAlgebraElement> all;
    for (const auto& chi : st.irreducibles) all.push_back(pci_from_character(chi));
    IdempotentReport report = idempotent_checks(all, s3);
    CHECK(report.all_pass());

    // e, 1-e is an orthogonal pair summing to 1.
    GroupAlgebraElement complement = algebra_sub(algebra_identity(s3), all[0]);
    CHECK(idempotent_checks({all[0], complement}, s3).all_pass());

    // Perturbing one coefficient breaks e^2 = e.
    GroupAlgebraElement bad = all[0];
    bad.add(1, rat(1));
    IdempotentReport bad_report = idempotent_checks({bad}, s3);
    CHECK_FALSE(bad_report.all_pass());
    CHECK_FALSE(bad_report.checks[0].pass); // the idempotency check
}

TEST_CASE("central character values") {
    GroupPtr s3 = make_s3();
    CharacterTable st = character_table(s3);
    for (const auto& chi : st.irreducibles)
        CHECK(cyc_eq(central_character_value(chi, algebra_identity(s3)), rat(1)));

    // Augmentation: omega(sum of all g) is |K|/chi(1) for trivial chi, else 0.
    GroupAlgebraElement all(s3);
    for (int g = 0; g < 6; ++g) all.set(g, rat(1));
    for (int i = 0; i < st.count(); ++i) {
        CycNumber v = central_character_value(st.irreducibles[i], all);
        if (i == find_trivial(st))
            CHECK(cyc_eq(v, rat(6)));
        else
            CHECK(cyc_eq(v, rat(0)));
    }

    // K = <r> in D4, z = 2 + 2 r^2, chi(r) = -1: omega = 4.
    GroupPtr d4 = make_d4();
    Subgroup h = subgroup(d4, {1});
    CharacterTable ht = character_table(h.sub);
    int r_cls = h.sub->class_of(h.from_parent(1));
    int idx = find_char_with_value(ht, r_cls, rat(-1));
    REQUIRE(idx >= 0);
    GroupAlgebraElement z(h.sub);
    z.set(0, rat(2));
    z.set(h.from_parent(d4->mul(1, 1)), rat(2));
    CHECK(cyc_eq(central_character_value(ht.irreducibles[idx], z), rat(4)));

    // Non-central input is rejected.
    GroupAlgebraElement nc(s3);
    nc.set(2, rat(1));
    CHECK_THROWS_AS(central_character_value(st.irreducibles[0], nc), InputError);

    // z e_chi = omega(z) e_chi, exactly.
    GroupAlgebraElement e = pci_from_character(st.irreducibles[2]);
    GroupAlgebraElement zc = class_sum(s3, 1);
    CycNumber omega = central_character_value(st.irreducibles[2], zc);
    CHECK(algebra_eq(algebra_mul(zc, e), e.scaled(omega)));
}

TEST_CASE("lambda_of") {
    // C4 over C2 with the sign character: lambda = -1.
    GroupPtr c4 = make_c4();
    IndexPContext ctx4 = index_p_context(c4, subgroup(c4, {2}));
    CharacterTable ht4 = character_table(ctx4.H.sub);
    int sign = 1 - find_trivial(ht4);
    CHECK(cyc_eq(lambda_of(ctx4, ht4.irreducibles[sign]), rat(-1)));

    // D4 over <r> with chi(r) = -1: lambda = 4.
    GroupPtr d4 = make_d4();
    IndexPContext ctxd = index_p_context(d4, subgroup(d4, {1}));
    CharacterTable htd = character_table(ctxd.H.sub);
    int r_cls = ctxd.H.sub->class_of(ctxd.H.from_parent(1));
    int idx = find_char_with_value(htd, r_cls, rat(-1));
    CHECK(cyc_eq(lambda_of(ctxd, htd.irreducibles[idx]), rat(4)));

    // C3 x C3 over the first factor: lambda = 1 for every character.
    GroupPtr c33 = make_c3c3();
    IndexPContext ctx9 = index_p_context(c33, subgroup(c33, {1}));
    CharacterTable ht9 = character_table(ctx9.H.sub);
    for (const auto& chi : ht9.irreducibles) CHECK(cyc_eq(lambda_of(ctx9, chi), rat(1)));

    // Not x-stable: error.
    GroupPtr s3 = make_s3();
    IndexPContext ctxs = index_p_context(s3, subgroup(s3, {1}));
    CharacterTable hts = character_table(ctxs.H.sub);
    int nontriv = find_trivial(hts) == 0 ? 1 : 0;
    CHECK_THROWS_AS(lambda_of(ctxs, hts.irreducibles[nontriv]), InputError);
}

TEST_CASE("mu_test") {
    LambdaMu a = mu_test(rat(4), 2, FieldSpec(1));
    REQUIRE(a.mu.has_value());
    CHECK(cyc_eq(*a.mu, rat(2)));

    LambdaMu b = mu_test(rat(-1), 2, FieldSpec(1));
    CHECK_FALSE(b.mu.has_value());

    LambdaMu c = mu_test(rat(1), 3, FieldSpec(1));
    REQUIRE(c.mu.has_value());
    CHECK(cyc_eq(*c.mu, rat(1)));

    CHECK_THROWS_AS(mu_test(CycNumber(), 2, FieldSpec(1)), InputError);
}

TEST_CASE("extension idempotents") {
    // C2 over the trivial subgroup: the regular decomposition (1 +- x)/2.
    GroupPtr c2 = make_c2();
    IndexPContext ctx = index_p_context(c2, subgroup(c2, {}));
    GroupAlgebraElement one = algebra_identity(ctx.H.sub);
    auto es = extension_idempotents(ctx, one, rat(1));
    REQUIRE(es.size() == 2);
    CHECK(cyc_eq(es[0].coeff(0), rat(1, 2)));
    CHECK(cyc_eq(es[0].coeff(1), rat(1, 2)));
    CHECK(cyc_eq(es[1].coeff(0), rat(1, 2)));
    CHECK(cyc_eq(es[1].coeff(1), rat(-1, 2)));

    // D4 over <r>, eta(r) = -1, mu = 2: the two linear characters of D4
    // nontrivial on r, matched against the classical idempotents.
    GroupPtr d4 = make_d4();
    IndexPContext ctxd = index_p_context(d4, subgroup(d4, {1}));
    CharacterTable htd = character_table(ctxd.H.sub);
    int r_cls = ctxd.H.sub->class_of(ctxd.H.from_parent(1));
    int idx = find_char_with_value(htd, r_cls, rat(-1));
    const ClassFunction& eta = htd.irreducibles[idx];
    auto lm = mu_test(lambda_of(ctxd, eta), 2, FieldSpec(1));
    REQUIRE(lm.mu.has_value());
    CHECK(cyc_eq(*lm.mu, rat(2)));
    auto esd = extension_idempotents(ctxd, pci_from_character(eta), *lm.mu);
    CharacterTable gtd = character_table(d4);
    std::vector<GroupAlgebraElement> expected;
    for (const auto& chi : gtd.irreducibles) {
        if (chi.degree_int() != 1) continue;
        if (!cyc_eq(chi.values[d4->class_of(1)], rat(-1))) continue;
        expected.push_back(pci_from_character(chi));
    }
    REQUIRE(expected.size() == 2);
    for (const auto& e : esd) {
        bool matched = false;
        for (const auto& x : expected)
            if (algebra_eq(e, x)) matched = true;
        CHECK(matched);
    }

    // C3 x C3: three idempotents matching the classical ones of the three
    // extensions of a nontrivial character of the first factor.
    GroupPtr c33 = make_c3c3();
    IndexPContext ctx9 = index_p_context(c33, subgroup(c33, {1}));
    CharacterTable ht9 = character_table(ctx9.H.sub);
    int a_cls = ctx9.H.sub->class_of(ctx9.H.from_parent(1));
    int nidx = find_char_with_value(ht9, a_cls, CycNumber::zeta(3));
    REQUIRE(nidx >= 0);
    const ClassFunction& eta9 = ht9.irreducibles[nidx];
    auto lm9 = mu_test(lambda_of(ctx9, eta9), 3, FieldSpec(1));
    REQUIRE(lm9.mu.has_value());
    CHECK(cyc_eq(*lm9.mu, rat(1)));
    auto es9 = extension_idempotents(ctx9, pci_from_character(eta9), *lm9.mu);
    CharacterTable gt9 = character_table(c33);
    long matched = 0;
    for (const auto& chi : gt9.irreducibles) {
        GroupAlgebraElement classical = pci_from_character(chi);
        for (const auto& e : es9)
            if (algebra_eq(e, classical)) ++matched;
    }
    CHECK(matched == 3);

    // Wrong mu: verification fails loudly.
    CHECK_THROWS_AS(extension_idempotents(ctxd, pci_from_character(eta), rat(3)),
                    InternalError);
}

TEST_CASE("fused idempotents") {
    // S3: e(omega) + e(omega^2) equals the classical idempotent of the
    // 2-dimensional irreducible.
    GroupPtr s3 = make_s3();
    IndexPContext ctx = index_p_context(s3, subgroup(s3, {1}));
    CharacterTable ht = character_table(ctx.H.sub);
    int triv = find_trivial(ht);
    int nontriv = triv == 0 ? 1 : 0;
    GroupAlgebraElement fused = fused_idempotent(ctx, ht.irreducibles[nontriv]);
    CharacterTable gt = character_table(s3);
    for (const auto& chi : gt.irreducibles)
        if (chi.degree_int() == 2) CHECK(algebra_eq(fused, pci_from_character(chi)));

    // Q8 with H = <i>: a faithful character fuses into the 2-dim irreducible.
    GroupPtr q8 = make_q8();
    IndexPContext qctx = index_p_context(q8, subgroup(q8, {1}));
    CharacterTable qht = character_table(qctx.H.sub);
    int i_cls = qctx.H.sub->class_of(qctx.H.from_parent(1));
    int fidx = find_char_with_value(qht, i_cls, CycNumber::zeta(4));
    REQUIRE(fidx >= 0);
    GroupAlgebraElement qfused = fused_idempotent(qctx, qht.irreducibles[fidx]);
    CharacterTable qgt = character_table(q8);
    for (const auto& chi : qgt.irreducibles)
        if (chi.degree_int() == 2) CHECK(algebra_eq(qfused, pci_from_character(chi)));

    // The trivial character is always stable: error.
    CHECK_THROWS_AS(fused_idempotent(ctx, ht.irreducibles[triv]), InputError);
}

TEST_CASE("galois equivariance of idempotents and lambda") {
    // sigma_t(e_eta) = e_(twist eta) and sigma_t(lambda_i) = lambda_j, checked
    // over every index-p context of a few groups with t fixing Q.
    for (GroupPtr G : {make_c4(), make_d4(), make_q8(), make_c3c3()}) {
        for (const Subgroup& H : index_p_normal_subgroups(G)) {
            IndexPContext ctx = index_p_context(G, H);
            CharacterTable ht = character_table(H.sub);
            int e = ht.exponent;
            for (int i = 0; i < ht.count(); ++i) {
                const auto& chi = ht.irreducibles[i];
                for (int t : units_mod(e)) {
                    if (e == 1) t = 1;
                    ClassFunction twisted = galois_twist(chi, t);
                    int j = ht.index_of(twisted);
                    REQUIRE(j >= 0);
                    // Coefficient-wise Galois image of the idempotent.
                    GroupAlgebraElement e_i = pci_from_character(chi);
                    GroupAlgebraElement mapped(H.sub);
                    for (const auto& [g, v] : e_i.terms()) mapped.set(g, cyc_galois(v, t));
                    CHECK(algebra_eq(mapped, pci_from_character(ht.irreducibles[j])));
                    // Lambda equivariance on the stable side.
                    if (class_function_eq(conjugate_character(chi, ctx), chi)) {
                        CycNumber li = lambda_of(ctx, chi);
                        CycNumber lj = lambda_of(ctx, ht.irreducibles[j]);
                        CHECK(cyc_eq(cyc_galois(li, t), lj));
                    }
                }
            }
        }
    }
}

TEST_CASE("mu agrees across conjugates") {
    // Where mu exists for one Galois conjugate it is the same for all.
    GroupPtr c33 = make_c3c3();
    IndexPContext ctx = index_p_context(c33, subgroup(c33, {1}));
    CharacterTable ht = character_table(ctx.H.sub);
    for (const auto& orb : galois_orbits_over_F(ht, FieldSpec(1))) {
        std::optional<CycNumber> first;
        for (int idx : orb.members) {
            const auto& chi = ht.irreducibles[idx];
            if (!class_function_eq(conjugate_character(chi, ctx), chi)) continue;
            LambdaMu lm = mu_test(lambda_of(ctx, chi), ctx.p, FieldSpec(1));
            if (!first.has_value()) {
                if (lm.mu.has_value()) first = lm.mu;
            } else {
                REQUIRE(lm.mu.has_value());
                CHECK(cyc_eq(*lm.mu, *first));
            }
        }
    }
}
