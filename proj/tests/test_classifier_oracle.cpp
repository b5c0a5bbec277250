#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "indexp/errors.hpp"
#include "indexp/oracle.hpp"
#include "indexp/roots.hpp"

#include <algorithm>
#include <memory>

using namespace indexp;

namespace {

GroupPtr make_s3() { return FiniteGroup::from_perm_generators(3, {{1, 2, 0}, {1, 0, 2}}); }
GroupPtr make_c4() { return FiniteGroup::from_perm_generators(4, {{1, 2, 3, 0}}); }
GroupPtr make_c6() { return FiniteGroup::from_perm_generators(6, {{1, 2, 3, 4, 5, 0}}); }
GroupPtr make_c9() {
    return FiniteGroup::from_perm_generators(9, {{1, 2, 3, 4, 5, 6, 7, 8, 0}});
}
GroupPtr make_d4() { return FiniteGroup::from_perm_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}); }
GroupPtr make_q8() {
    return FiniteGroup::from_perm_generators(
        8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
}
GroupPtr make_c3c3() {
    return FiniteGroup::from_perm_generators(6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}});
}

CycNumber rat(long n, long d = 1) { return CycNumber::rational(Rational(n, d)); }

struct Setup {
    IndexPContext ctx;
    std::shared_ptr<const CharacterTable> h_table;
    std::shared_ptr<const CharacterTable> g_table;
};

Setup make_setup(const GroupPtr& G, const std::vector<int>& h_gens,
                 std::optional<int> x = std::nullopt) {
    Setup s;
    s.ctx = index_p_context(G, subgroup(G, h_gens), x);
    s.h_table = std::make_shared<CharacterTable>(character_table(s.ctx.H.sub));
    s.g_table = std::make_shared<CharacterTable>(character_table(G));
    return s;
}

// The F-irreducible containing the character with the given value at the
// class of sub-element `probe`.
FIrreducibleSpec eta_with_value(const Setup& s, const FieldSpec& F, int parent_elem,
                                const CycNumber& value) {
    int cls = s.ctx.H.sub->class_of(s.ctx.H.from_parent(parent_elem));
    int idx = -1;
    for (int i = 0; i < s.h_table->count(); ++i)
        if (cyc_eq(s.h_table->irreducibles[i].values[cls], value)) {
            idx = i;
            break;
        }
    REQUIRE(idx >= 0);
    FIrreducibleSpec eta;
    eta.table = s.h_table;
    eta.representative = idx;
    for (const auto& orb : galois_orbits_over_F(*s.h_table, F))
        if (std::find(orb.members.begin(), orb.members.end(), idx) != orb.members.end())
            eta.orbit = orb;
    REQUIRE(!eta.orbit.members.empty());
    return eta;
}

FIrreducibleSpec eta_trivial(const Setup& s, const FieldSpec& F) {
    return eta_with_value(s, F, 0, rat(1));
}

} // namespace

TEST_CASE("classifier: the five canonical instances") {
    // Case 1: S3 over Q(zeta_3), eta a single nontrivial character of A3.
    {
        Setup s = make_setup(make_s3(), {1});
        FieldSpec F(3);
        FIrreducibleSpec eta = eta_with_value(s, F, 1, CycNumber::zeta(3));
        InductionCase ic = classify(s.ctx, eta, F);
        CHECK(ic.case_id == 1);
        CHECK(ic.k == 1);
        CHECK(ic.predicted_count == 1);
        CHECK_FALSE(ic.lambda.has_value());
    }
    // Case 2: Q8 with H = <i> over Q; the orbit is x-stable, members move.
    {
        Setup s = make_setup(make_q8(), {1});
        FieldSpec F(1);
        FIrreducibleSpec eta = eta_with_value(s, F, 1, CycNumber::zeta(4));
        CHECK(eta.orbit.k == 2);
        InductionCase ic = classify(s.ctx, eta, F);
        CHECK(ic.case_id == 2);
        CHECK(ic.predicted_count == 1);
    }
    // Case 3: C4 over C2 with the sign character, F = Q; lambda = -1.
    {
        Setup s = make_setup(make_c4(), {2});
        FieldSpec F(1);
        FIrreducibleSpec eta = eta_with_value(s, F, 2, rat(-1));
        InductionCase ic = classify(s.ctx, eta, F);
        CHECK(ic.case_id == 3);
        REQUIRE(ic.lambda.has_value());
        CHECK(cyc_eq(*ic.lambda, rat(-1)));
        CHECK_FALSE(ic.mu.has_value());
        CHECK(ic.predicted_count == 1);
    }
    // Case 4: D4 over <r> with eta(r) = -1, F = Q; lambda = 4, mu = 2.
    {
        Setup s = make_setup(make_d4(), {1});
        FieldSpec F(1);
        FIrreducibleSpec eta = eta_with_value(s, F, 1, rat(-1));
        InductionCase ic = classify(s.ctx, eta, F);
        CHECK(ic.case_id == 4);
        REQUIRE(ic.lambda.has_value());
        CHECK(cyc_eq(*ic.lambda, rat(4)));
        REQUIRE(ic.mu.has_value());
        CHECK(cyc_eq(*ic.mu, rat(2)));
        CHECK(ic.predicted_count == 2);
        CHECK(ic.zeta_p_in_field);
    }
    // Case 5: C3 x C3 over the first factor, F = Q; lambda = mu = 1, k = 2.
    {
        Setup s = make_setup(make_c3c3(), {1});
        FieldSpec F(1);
        FIrreducibleSpec eta = eta_with_value(s, F, 1, CycNumber::zeta(3));
        InductionCase ic = classify(s.ctx, eta, F);
        CHECK(ic.case_id == 5);
        CHECK(ic.k == 2);
        REQUIRE(ic.lambda.has_value());
        CHECK(cyc_eq(*ic.lambda, rat(1)));
        REQUIRE(ic.mu.has_value());
        CHECK(cyc_eq(*ic.mu, rat(1)));
        CHECK_FALSE(ic.zeta_p_in_field);
        CHECK(ic.predicted_count == 3);
    }
}

TEST_CASE("predict_decomposition on the canonical instances") {
    // D4 case 4: two constituents, each a singleton rational orbit of degree 1.
    {
        Setup s = make_setup(make_d4(), {1});
        FieldSpec F(1);
        FIrreducibleSpec eta = eta_with_value(s, F, 1, rat(-1));
        InductionCase ic = classify(s.ctx, eta, F);
        DecompositionReport r = predict_decomposition(ic, s.ctx, eta, *s.g_table);
        REQUIRE(r.actual_count == 2);
        CHECK(r.match);
        for (const auto& c : r.constituents) {
            CHECK(c.orbit_size == 1);
            CHECK(c.complex_multiplicity == 1);
            CHECK(c.degree == 1);
        }
    }
    // Q8 case 2: one constituent with complex multiplicity 2.
    {
        Setup s = make_setup(make_q8(), {1});
        FieldSpec F(1);
        FIrreducibleSpec eta = eta_with_value(s, F, 1, CycNumber::zeta(4));
        InductionCase ic = classify(s.ctx, eta, F);
        DecompositionReport r = predict_decomposition(ic, s.ctx, eta, *s.g_table);
        REQUIRE(r.actual_count == 1);
        CHECK(r.match);
        CHECK(r.constituents[0].complex_multiplicity == 2);
        CHECK(r.constituents[0].orbit_size == 1);
        CHECK(r.constituents[0].degree == 2);
    }
    // C3 x C3 case 5: three constituents of orbit size 2, multiplicity 1,
    // pairing chi psi_j with its conjugate.
    {
        Setup s = make_setup(make_c3c3(), {1});
        FieldSpec F(1);
        FIrreducibleSpec eta = eta_with_value(s, F, 1, CycNumber::zeta(3));
        InductionCase ic = classify(s.ctx, eta, F);
        DecompositionReport r = predict_decomposition(ic, s.ctx, eta, *s.g_table);
        REQUIRE(r.actual_count == 3);
        CHECK(r.match);
        for (const auto& c : r.constituents) {
            CHECK(c.orbit_size == 2);
            CHECK(c.complex_multiplicity == 1);
            CHECK(c.degree == 2);
        }
        // The constituents partition the six characters nontrivial on the
        // first factor.
        std::vector<int> support;
        for (const auto& c : r.constituents)
            support.insert(support.end(), c.orbit.begin(), c.orbit.end());
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        CHECK(support.size() == 6);
    }
}

TEST_CASE("oracle examples") {
    // (C4, C2, sign, Q): one constituent, the pair of faithful characters.
    {
        Setup s = make_setup(make_c4(), {2});
        FIrreducibleSpec eta = eta_with_value(s, FieldSpec(1), 2, rat(-1));
        DecompositionReport r = oracle_decompose(s.ctx, eta, *s.g_table);
        REQUIRE(r.actual_count == 1);
        CHECK(r.constituents[0].orbit_size == 2);
        CHECK(r.constituents[0].complex_multiplicity == 1);
        CHECK(r.constituents[0].degree == 2);
    }
    // (C6, C3, orbit of a faithful character, Q): two constituents.
    {
        Setup s = make_setup(make_c6(), {2});
        FIrreducibleSpec eta = eta_with_value(s, FieldSpec(1), 2, CycNumber::zeta(3));
        CHECK(eta.orbit.k == 2);
        DecompositionReport r = oracle_decompose(s.ctx, eta, *s.g_table);
        CHECK(r.actual_count == 2);
        for (const auto& c : r.constituents) {
            CHECK(c.complex_multiplicity == 1);
            CHECK(c.degree == 2);
        }
    }
    // (C9, C3, nontrivial eta, Q): a single six-dimensional rational orbit.
    {
        Setup s = make_setup(make_c9(), {3});
        FIrreducibleSpec eta = eta_with_value(s, FieldSpec(1), 3, CycNumber::zeta(3));
        DecompositionReport r = oracle_decompose(s.ctx, eta, *s.g_table);
        REQUIRE(r.actual_count == 1);
        CHECK(r.constituents[0].orbit_size == 6);
        CHECK(r.constituents[0].degree == 6);
        CHECK(r.constituents[0].complex_multiplicity == 1);
    }
}

TEST_CASE("compare_verify on canonical instances and a full D4 sweep") {
    struct Spec {
        GroupPtr G;
        std::vector<int> h_gens;
        int conductor;
    };
    std::vector<Spec> specs{{make_s3(), {1}, 3},   {make_q8(), {1}, 1}, {make_c4(), {2}, 1},
                            {make_d4(), {1}, 1},   {make_c3c3(), {1}, 1}, {make_c9(), {3}, 1},
                            {make_c6(), {2}, 1}};
    for (const auto& spec : specs) {
        Setup s = make_setup(spec.G, spec.h_gens);
        FieldSpec F(spec.conductor);
        for (const auto& orb : galois_orbits_over_F(*s.h_table, F)) {
            FIrreducibleSpec eta;
            eta.table = s.h_table;
            eta.orbit = orb;
            eta.representative = orb.members.front();
            VerificationOutcome out = compare_verify(s.ctx, eta, F, *s.g_table);
            CHECK(out.ok());
        }
    }

    // Sweep every index-2 normal subgroup of D4 over Q: every orbit matches.
    GroupPtr d4 = make_d4();
    auto g_table = std::make_shared<CharacterTable>(character_table(d4));
    for (const Subgroup& H : index_p_normal_subgroups(d4)) {
        IndexPContext ctx = index_p_context(d4, H);
        auto h_table = std::make_shared<CharacterTable>(character_table(H.sub));
        for (const auto& orb : galois_orbits_over_F(*h_table, FieldSpec(1))) {
            FIrreducibleSpec eta;
            eta.table = h_table;
            eta.orbit = orb;
            eta.representative = orb.members.front();
            VerificationOutcome out = compare_verify(ctx, eta, FieldSpec(1), *g_table);
            CHECK(out.ok());
        }
    }
}

TEST_CASE("negative control: the phi-factor reading of k disagrees") {
    // On the C3 x C3 instance the number of irreducible factors of Phi_3
    // over Q is 1, so that reading predicts 2 constituents; the truth is 3.
    Setup s = make_setup(make_c3c3(), {1});
    FieldSpec F(1);
    FIrreducibleSpec eta = eta_with_value(s, F, 1, CycNumber::zeta(3));
    VerificationOutcome out = compare_verify(s.ctx, eta, F, *s.g_table);
    CHECK(out.ok());
    CHECK(out.case_id == 5);
    CHECK(out.oracle_count == 3);
    CHECK(phi_p_factor_count(3, F) == 1);
    CHECK(out.phi_reading_count == 2);
    CHECK_FALSE(out.phi_reading_matches);
}

TEST_CASE("lift invariance of the verdict") {
    // C6 over C3: the pinned lift g has lambda = zeta_3 with no rational
    // square root, but the class of g^3 carries lambda = 1; the verdict must
    // be case 4 for every choice of x.
    GroupPtr c6 = make_c6();
    Subgroup h = subgroup(c6, {2});
    auto h_table = std::make_shared<CharacterTable>(character_table(h.sub));
    auto g_table = std::make_shared<CharacterTable>(character_table(c6));
    for (int x : {1, 3, 5}) {
        IndexPContext ctx = index_p_context(c6, h, x);
        FIrreducibleSpec eta;
        eta.table = h_table;
        for (const auto& orb : galois_orbits_over_F(*h_table, FieldSpec(1)))
            if (orb.k == 2) eta.orbit = orb;
        REQUIRE(eta.orbit.k == 2);
        eta.representative = eta.orbit.members.front();
        InductionCase ic = classify(ctx, eta, FieldSpec(1));
        CHECK(ic.case_id == 4);
        REQUIRE(ic.mu.has_value());
        CHECK(cyc_eq(*ic.mu, rat(1)));
        CHECK(ic.witness_x.has_value());
        // The witness lift is x^3 regardless of the pin.
        CHECK(*ic.witness_x == 3);
        VerificationOutcome out = compare_verify(ctx, eta, FieldSpec(1), *g_table);
        CHECK(out.ok());
    }

    // All lifts agree on the canonical instances too.
    GroupPtr d4 = make_d4();
    Subgroup hr = subgroup(d4, {1});
    auto htd = std::make_shared<CharacterTable>(character_table(hr.sub));
    auto gtd = std::make_shared<CharacterTable>(character_table(d4));
    std::vector<int> lifts;
    for (int g = 0; g < d4->order(); ++g)
        if (!hr.contains(g)) lifts.push_back(g);
    int r_cls = hr.sub->class_of(hr.from_parent(1));
    FIrreducibleSpec eta;
    eta.table = htd;
    for (int i = 0; i < htd->count(); ++i)
        if (cyc_eq(htd->irreducibles[i].values[r_cls], rat(-1))) eta.representative = i;
    for (const auto& orb : galois_orbits_over_F(*htd, FieldSpec(1)))
        if (std::find(orb.members.begin(), orb.members.end(), eta.representative) !=
            orb.members.end())
            eta.orbit = orb;
    for (int x : lifts) {
        IndexPContext ctx = index_p_context(d4, hr, x);
        InductionCase ic = classify(ctx, eta, FieldSpec(1));
        CHECK(ic.case_id == 4);
    }
}

TEST_CASE("case 4 constituents align with the extension idempotents") {
    // Each extension idempotent matches the classical idempotent of exactly
    // one induced constituent, and distinct j land in distinct constituents.
    Setup s = make_setup(make_d4(), {1});
    FieldSpec F(1);
    FIrreducibleSpec eta = eta_with_value(s, F, 1, rat(-1));
    InductionCase ic = classify(s.ctx, eta, F);
    REQUIRE(ic.case_id == 4);
    DecompositionReport r = predict_decomposition(ic, s.ctx, eta, *s.g_table);
    auto es = extension_idempotents(
        s.ctx, pci_from_character(s.h_table->irreducibles[eta.representative]), *ic.mu);
    std::vector<int> hits;
    for (const auto& e : es) {
        for (const auto& c : r.constituents)
            for (int idx : c.orbit)
                if (algebra_eq(e, pci_from_character(s.g_table->irreducibles[idx])))
                    hits.push_back(idx);
    }
    std::sort(hits.begin(), hits.end());
    CHECK(hits.size() == 2);
    CHECK(std::unique(hits.begin(), hits.end()) == hits.end());
}

TEST_CASE("lemma 2.1 and the index-p dichotomy hold exactly") {
    struct Spec {
        GroupPtr G;
        std::vector<int> h_gens;
    };
    std::vector<Spec> specs{{make_s3(), {1}}, {make_q8(), {1}}, {make_d4(), {1}},
                            {make_c4(), {2}}, {make_c6(), {2}}, {make_c9(), {3}},
                            {make_c3c3(), {1}}};
    for (const auto& spec : specs) {
        Setup s = make_setup(spec.G, spec.h_gens);
        PropertyReport lemma = lemma21_check(s.ctx, *s.h_table, *s.g_table, FieldSpec(1));
        CHECK(lemma.ok());
        CHECK(lemma.checked > 0);
        PropertyReport dich = index_p_dichotomy_check(s.ctx, *s.h_table, *s.g_table);
        CHECK(dich.ok());
    }
}

TEST_CASE("degree bookkeeping is enforced") {
    // Every decomposition produced satisfies sum(mult * degree) = p * deg(eta);
    // spot-check by recomputing on a few instances.
    for (auto& [G, gens] : std::vector<std::pair<GroupPtr, std::vector<int>>>{
             {make_q8(), {1}}, {make_c9(), {3}}, {make_c3c3(), {1}}}) {
        Setup s = make_setup(G, gens);
        for (int m : {1, 3, 4}) {
            FieldSpec F(m);
            for (const auto& orb : galois_orbits_over_F(*s.h_table, F)) {
                FIrreducibleSpec eta;
                eta.table = s.h_table;
                eta.orbit = orb;
                eta.representative = orb.members.front();
                DecompositionReport r = oracle_decompose(s.ctx, eta, *s.g_table);
                long total = 0;
                for (const auto& c : r.constituents) total += c.complex_multiplicity * c.degree;
                CHECK(total == static_cast<long>(s.ctx.p) * r.eta_orbit_degree);
            }
        }
    }
}
