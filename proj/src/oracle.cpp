#include "indexp/oracle.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"

#include <algorithm>
#include <sstream>

namespace indexp {

DecompositionReport oracle_decompose(const IndexPContext& ctx, const FIrreducibleSpec& eta,
                                     const CharacterTable& g_table) {
    check_input(g_table.group.get() == ctx.G.get(), "oracle: table is not G's");
    const FiniteGroup& G = *ctx.G;
    const CharacterTable& h_table = *eta.table;

    // Orbit-sum character of eta on H, summed directly.
    std::vector<CycNumber> orbit_sum(h_table.irreducibles[0].values.size());
    for (int idx : eta.orbit.members)
        for (std::size_t c = 0; c < orbit_sum.size(); ++c)
            orbit_sum[c] = cyc_add(orbit_sum[c], h_table.irreducibles[idx].values[c]);

    // Induction from scratch: Ind f(g) = (1/|H|) sum over a with a^-1 g a in H.
    const auto& g_classes = G.classes().classes;
    std::vector<CycNumber> induced(g_classes.size());
    for (std::size_t c = 0; c < g_classes.size(); ++c) {
        int g = g_classes[c].representative;
        CycNumber acc;
        for (int a = 0; a < G.order(); ++a) {
            int conj = G.mul(G.mul(G.inverse(a), g), a);
            if (!ctx.H.contains(conj)) continue;
            acc = cyc_add(acc, orbit_sum[ctx.H.sub->class_of(ctx.H.from_parent(conj))]);
        }
        induced[c] = cyc_mul(acc, CycNumber::rational(Rational(1, ctx.H.order())));
    }

    // Complex multiplicities by first orthogonality, written out longhand.
    std::vector<long> mult(g_table.count(), 0);
    for (int i = 0; i < g_table.count(); ++i) {
        CycNumber acc;
        for (std::size_t c = 0; c < g_classes.size(); ++c) {
            int inv_cls = G.class_of(G.inverse(g_classes[c].representative));
            CycNumber term = cyc_mul(induced[c], g_table.irreducibles[i].values[inv_cls]);
            if (!term.is_zero())
                acc = cyc_add(acc, cyc_mul(term, CycNumber::integer(g_classes[c].size())));
        }
        acc = cyc_mul(acc, CycNumber::rational(Rational(1, G.order())));
        check_internal(acc.is_rational() && rat_is_integer(acc.rational_value()),
                       "oracle multiplicity is not an integer");
        mult[i] = static_cast<long>(acc.rational_value().get_num().get_si());
        check_internal(mult[i] >= 0, "oracle multiplicity is negative");
    }

    // Partition the support into Galois orbits over F.
    DecompositionReport report;
    report.case_id = 0;
    report.p = ctx.p;
    report.F = eta.orbit.F;
    report.eta_orbit_degree = eta.orbit_degree();
    long total = 0;
    for (const auto& orb : galois_orbits_over_F(g_table, eta.orbit.F)) {
        bool in_support = mult[orb.members.front()] > 0;
        long deg = 0;
        for (int idx : orb.members) {
            check_internal((mult[idx] > 0) == in_support,
                           "support is not a union of Galois orbits");
            check_internal(mult[idx] == mult[orb.members.front()],
                           "multiplicity varies inside a Galois orbit");
            deg += g_table.irreducibles[idx].degree_int();
        }
        if (!in_support) continue;
        Constituent c;
        c.orbit = orb.members;
        c.orbit_size = orb.k;
        c.complex_multiplicity = mult[orb.members.front()];
        c.degree = deg;
        total += c.complex_multiplicity * deg;
        report.constituents.push_back(std::move(c));
    }
    report.actual_count = static_cast<int>(report.constituents.size());
    check_internal(total == static_cast<long>(ctx.p) * report.eta_orbit_degree,
                   "degree bookkeeping failed in oracle_decompose");
    return report;
}

namespace {

bool constituents_eq(const std::vector<Constituent>& a, const std::vector<Constituent>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].orbit != b[i].orbit || a[i].complex_multiplicity != b[i].complex_multiplicity ||
            a[i].degree != b[i].degree)
            return false;
    }
    return true;
}

} // namespace

VerificationOutcome compare_verify(const IndexPContext& ctx, const FIrreducibleSpec& eta,
                                   const FieldSpec& F, const CharacterTable& g_table) {
    VerificationOutcome out;
    out.F = F;
    out.p = ctx.p;
    out.induction = classify(ctx, eta, F);
    out.case_id = out.induction.case_id;
    out.k = out.induction.k;
    out.predicted = predict_decomposition(out.induction, ctx, eta, g_table);
    out.oracle = oracle_decompose(ctx, eta, g_table);
    out.predicted_count = out.predicted.actual_count;
    out.oracle_count = out.oracle.actual_count;
    // The theorem's claim: the case's predicted count matches the truth.
    out.counts_equal = out.induction.predicted_count == out.oracle_count &&
                       out.predicted.match;
    out.constituents_equal = constituents_eq(out.predicted.constituents, out.oracle.constituents);

    const CharacterTable& h_table = *eta.table;
    if (out.case_id >= 4 && out.induction.witness_x.has_value()) {
        // mu must be the same across all Galois conjugates (same lift).
        IndexPContext vctx = *out.induction.witness_x == ctx.x
                                 ? ctx
                                 : index_p_context(ctx.G, ctx.H, *out.induction.witness_x);
        for (int idx : eta.orbit.members) {
            CycNumber lam_i = lambda_of(vctx, h_table.irreducibles[idx]);
            LambdaMu lm = mu_test(lam_i, ctx.p, F);
            if (!lm.mu.has_value() || !cyc_eq(*lm.mu, *out.induction.mu)) {
                out.mu_uniform = false;
                break;
            }
        }
    }
    if (out.case_id == 1) {
        // The p conjugate F-irreducibles induce the same class function.
        ClassFunction base = induce_character(ctx, eta.orbit_sum());
        ClassFunction cur = eta.orbit_sum();
        for (int i = 1; i < ctx.p; ++i) {
            cur = conjugate_character(cur, ctx);
            if (!class_function_eq(induce_character(ctx, cur), base)) {
                out.case1_consistent = false;
                break;
            }
        }
    }
    if (out.case_id == 5) {
        out.phi_reading_count = 1 + phi_p_factor_count(ctx.p, F);
        out.phi_reading_matches = out.phi_reading_count == out.oracle_count;
    }
    if (!out.ok()) {
        std::ostringstream os;
        os << "case=" << out.case_id << " predicted=" << out.induction.predicted_count
           << " oracle=" << out.oracle_count << " constituents_equal=" << out.constituents_equal
           << " mu_uniform=" << out.mu_uniform << " case1_consistent=" << out.case1_consistent;
        out.detail = os.str();
    }
    return out;
}

PropertyReport lemma21_check(const IndexPContext& ctx, const CharacterTable& h_table,
                             const CharacterTable& g_table, const FieldSpec& F) {
    PropertyReport report;
    int e = g_table.exponent;
    std::vector<int> ts = units_mod(e);
    if (e == 1) ts = {1};
    for (int i = 0; i < h_table.count(); ++i) {
        const Character& chi = h_table.irreducibles[i];
        ClassFunction ind = induce_character(ctx, chi);
        for (int t : ts) {
            ++report.checked;
            ClassFunction lhs = galois_twist(ind, t);
            ClassFunction rhs = induce_character(ctx, galois_twist(chi, t));
            if (!class_function_eq(lhs, rhs)) {
                ++report.failed;
                if (report.first_failure.empty())
                    report.first_failure =
                        "twist/induce mismatch at chi#" + std::to_string(i) + " t=" + std::to_string(t);
            }
        }
    }
    // Induction of an orbit sum equals the sum of member inductions.
    for (const auto& orb : galois_orbits_over_F(h_table, F)) {
        ++report.checked;
        ClassFunction sum_then_induce;
        {
            FIrreducibleSpec spec;
            spec.table = std::make_shared<CharacterTable>(h_table);
            spec.orbit = orb;
            spec.representative = orb.members.front();
            sum_then_induce = induce_character(ctx, spec.orbit_sum());
        }
        ClassFunction induce_then_sum;
        induce_then_sum.group = ctx.G;
        induce_then_sum.values.assign(g_table.irreducibles[0].values.size(), CycNumber());
        for (int idx : orb.members) {
            ClassFunction ind = induce_character(ctx, h_table.irreducibles[idx]);
            for (std::size_t c = 0; c < induce_then_sum.values.size(); ++c)
                induce_then_sum.values[c] = cyc_add(induce_then_sum.values[c], ind.values[c]);
        }
        if (!class_function_eq(sum_then_induce, induce_then_sum)) {
            ++report.failed;
            if (report.first_failure.empty()) report.first_failure = "orbit-sum induction mismatch";
        }
    }
    return report;
}

PropertyReport index_p_dichotomy_check(const IndexPContext& ctx, const CharacterTable& h_table,
                                       const CharacterTable& g_table) {
    PropertyReport report;
    for (int i = 0; i < h_table.count(); ++i) {
        ++report.checked;
        const Character& chi = h_table.irreducibles[i];
        // <x>-orbit size.
        int orbit_size = 1;
        ClassFunction cur = conjugate_character(chi, ctx);
        while (!class_function_eq(cur, chi)) {
            ++orbit_size;
            cur = conjugate_character(cur, ctx);
            check_internal(orbit_size <= ctx.p, "conjugation orbit exceeded p");
        }
        bool ok = true;
        if (orbit_size != 1 && orbit_size != ctx.p) ok = false;
        ClassFunction ind = induce_character(ctx, chi);
        if (orbit_size == ctx.p) {
            ok = ok && cyc_eq(inner_product(ind, ind), CycNumber::rational(Rational(1)));
        } else {
            // p distinct constituents, each multiplicity one.
            long found = 0;
            for (int j = 0; j < g_table.count(); ++j) {
                CycNumber ip = inner_product(ind, g_table.irreducibles[j]);
                if (ip.is_zero()) continue;
                if (!cyc_eq(ip, CycNumber::rational(Rational(1)))) {
                    ok = false;
                    break;
                }
                ++found;
            }
            ok = ok && found == ctx.p;
        }
        if (!ok) {
            ++report.failed;
            if (report.first_failure.empty())
                report.first_failure = "dichotomy failed at chi#" + std::to_string(i);
        }
    }
    return report;
}

} // namespace indexp
