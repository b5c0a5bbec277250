#include "indexp/classifier.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"
#include "indexp/roots.hpp"

#include <algorithm>
#include <set>

namespace indexp {

InductionCase classify(const IndexPContext& ctx, const FIrreducibleSpec& eta,
                       const FieldSpec& F) {
    check_input(eta.table->group.get() == ctx.H.sub.get(),
                "classify: eta is not a character of the context subgroup");
    check_input(eta.orbit.F == F, "classify: orbit was computed over a different field");
    const CharacterTable& h_table = *eta.table;

    InductionCase out;
    out.p = ctx.p;
    out.k = eta.orbit.k;
    out.F = F;
    out.zeta_p_in_field = zeta_p_in_F(ctx.p, F);
    out.orbit_members = eta.orbit.members;

    // Conjugate orbit as a set of character indices.
    std::set<int> orbit_set(eta.orbit.members.begin(), eta.orbit.members.end());
    std::set<int> conj_set;
    std::vector<bool> member_stable;
    for (int idx : eta.orbit.members) {
        ClassFunction conj = conjugate_character(h_table.irreducibles[idx], ctx);
        int cidx = h_table.index_of(conj);
        check_internal(cidx >= 0, "conjugate character left the table");
        conj_set.insert(cidx);
        member_stable.push_back(cidx == idx);
    }

    if (conj_set != orbit_set) {
        // The paper's dichotomy: stability is all-or-none across the orbit.
        for (bool s : member_stable)
            check_internal(!s, "mixed stability inside a Galois orbit");
        out.case_id = 1;
        out.predicted_count = 1;
        return out;
    }
    bool rep_stable = member_stable[std::distance(
        eta.orbit.members.begin(),
        std::find(eta.orbit.members.begin(), eta.orbit.members.end(), eta.representative))];
    bool all_stable = std::all_of(member_stable.begin(), member_stable.end(),
                                  [](bool b) { return b; });
    bool none_stable = std::none_of(member_stable.begin(), member_stable.end(),
                                    [](bool b) { return b; });
    check_internal(all_stable || none_stable, "mixed stability inside a Galois orbit");
    if (!rep_stable) {
        out.case_id = 2;
        out.predicted_count = 1;
        return out;
    }

    // Stable branch. lambda depends on the chosen lift of the coset
    // generator, and the root test can succeed for some lifts only; scan the
    // conjugacy classes inside xH (pinned x first) for a witness.
    const ClassFunction& rep = h_table.irreducibles[eta.representative];
    std::vector<int> class_reps;
    {
        std::set<int> seen;
        int cx = ctx.G->class_of(ctx.x);
        seen.insert(cx);
        class_reps.push_back(ctx.G->classes().classes[cx].representative);
        for (int h : ctx.H.members) {
            int g = ctx.G->mul(ctx.x, h);
            int c = ctx.G->class_of(g);
            if (seen.insert(c).second)
                class_reps.push_back(ctx.G->classes().classes[c].representative);
        }
        // Deterministic: pinned class first, the rest by class index.
        std::sort(class_reps.begin() + 1, class_reps.end(),
                  [&](int a, int b) { return ctx.G->class_of(a) < ctx.G->class_of(b); });
    }

    std::optional<CycNumber> found_mu;
    for (int lift : class_reps) {
        IndexPContext vctx = lift == ctx.x ? ctx : index_p_context(ctx.G, ctx.H, lift);
        CycNumber lam = lambda_of(vctx, rep);
        out.lambda_by_lift.emplace_back(lift, lam);
        if (!found_mu.has_value()) {
            LambdaMu lm = mu_test(lam, ctx.p, F);
            if (lm.mu.has_value()) {
                found_mu = lm.mu;
                out.lambda = lam;
                out.mu = lm.mu;
                out.witness_x = lift;
            }
        }
    }
    if (!found_mu.has_value()) {
        out.case_id = 3;
        out.lambda = out.lambda_by_lift.front().second; // at the pinned x
        out.predicted_count = 1;
        return out;
    }
    out.case_id = out.zeta_p_in_field ? 4 : 5;
    out.predicted_count = out.case_id == 4 ? ctx.p : 1 + out.k;
    return out;
}

DecompositionReport predict_decomposition(const InductionCase& ic, const IndexPContext& ctx,
                                          const FIrreducibleSpec& eta,
                                          const CharacterTable& g_table) {
    check_input(g_table.group.get() == ctx.G.get(), "predict: table is not G's");
    DecompositionReport report;
    report.case_id = ic.case_id;
    report.p = ctx.p;
    report.F = ic.F;
    report.eta_orbit_degree = eta.orbit_degree();

    ClassFunction induced = induce_character(ctx, eta.orbit_sum());
    std::vector<GaloisOrbit> orbits = galois_orbits_over_F(g_table, ic.F);
    long total = 0;
    for (const auto& orb : orbits) {
        // Multiplicity of the first member; must be constant across the orbit.
        std::optional<long> mult;
        long deg = 0;
        for (int idx : orb.members) {
            CycNumber ip = inner_product(induced, g_table.irreducibles[idx]);
            check_internal(ip.is_rational() && rat_is_integer(ip.rational_value()),
                           "constituent multiplicity is not an integer");
            long m = static_cast<long>(ip.rational_value().get_num().get_si());
            check_internal(m >= 0, "negative constituent multiplicity");
            if (!mult.has_value())
                mult = m;
            else
                check_internal(*mult == m, "multiplicity varies inside a Galois orbit");
            deg += g_table.irreducibles[idx].degree_int();
        }
        if (*mult == 0) continue;
        Constituent c;
        c.orbit = orb.members;
        c.orbit_size = orb.k;
        c.complex_multiplicity = *mult;
        c.degree = deg;
        total += *mult * deg;
        report.constituents.push_back(std::move(c));
    }
    report.actual_count = static_cast<int>(report.constituents.size());
    report.predicted_count = ic.predicted_count;
    report.match = report.predicted_count == report.actual_count;
    check_internal(total == static_cast<long>(ctx.p) * report.eta_orbit_degree,
                   "degree bookkeeping failed in predict_decomposition");
    return report;
}

int phi_p_factor_count(int p, const FieldSpec& F) {
    return static_cast<int>((p - 1) / phi_p_orbit_subgroup(p, F).size());
}

} // namespace indexp
