#include "indexp/idempotents.hpp"

#include "indexp/errors.hpp"
#include "indexp/numtheory.hpp"
#include "indexp/roots.hpp"

namespace indexp {

GroupAlgebraElement pci_from_character(const ClassFunction& chi) {
    const GroupPtr& K = chi.group;
    GroupAlgebraElement e(K);
    CycNumber scale = cyc_mul(chi.degree(), CycNumber::rational(Rational(1, K->order())));
    for (int g = 0; g < K->order(); ++g)
        e.set(g, cyc_mul(scale, chi.at_element(K->inverse(g))));
    return e;
}

CycNumber central_character_value(const ClassFunction& chi, const GroupAlgebraElement& z) {
    check_input(chi.group.get() == z.group().get(),
                "central_character_value: different groups");
    check_input(z.is_central(), "central_character_value: element is not central");
    const FiniteGroup& K = *chi.group;
    CycNumber acc;
    for (const auto& cls : K.classes().classes) {
        CycNumber c = z.coeff(cls.representative);
        if (c.is_zero()) continue;
        acc = cyc_add(acc, cyc_mul(cyc_mul(c, CycNumber::integer(cls.size())),
                                   chi.values[K.class_of(cls.representative)]));
    }
    return cyc_div(acc, chi.degree());
}

CycNumber lambda_of(const IndexPContext& ctx, const ClassFunction& eta) {
    check_input(class_function_eq(conjugate_character(eta, ctx), eta),
                "lambda_of: character is not x-stable");
    GroupAlgebraElement z = class_sum_pth_power(ctx);
    CycNumber lambda = central_character_value(eta, z);
    check_internal(!lambda.is_zero(), "lambda_of: lambda vanished");
    return lambda;
}

LambdaMu mu_test(const CycNumber& lambda, int p, const FieldSpec& F) {
    check_input(!lambda.is_zero(), "mu_test: lambda must be nonzero");
    LambdaMu out;
    out.lambda = lambda;
    out.p = p;
    out.F = F;
    out.mu = pth_root_in_F(lambda, p, F);
    return out;
}

std::vector<GroupAlgebraElement> extension_idempotents(const IndexPContext& ctx,
                                                       const GroupAlgebraElement& e_eta,
                                                       const CycNumber& mu) {
    check_input(!mu.is_zero(), "extension_idempotents: mu must be nonzero");
    GroupAlgebraElement e = e_eta;
    if (e.group().get() == ctx.H.sub.get()) e = algebra_embed(e, ctx.H);
    check_input(e.group().get() == ctx.G.get(),
                "extension_idempotents: idempotent over the wrong group");

    const int p = ctx.p;
    GroupAlgebraElement c = algebra_mul(class_sum(ctx.G, ctx.x), e).scaled(cyc_inv(mu));
    CycNumber zeta_p = CycNumber::zeta(p);

    // Powers c^0 e = e, c^1, ..., c^{p-1} (c already contains the factor e).
    std::vector<GroupAlgebraElement> cpow{e};
    for (int a = 1; a < p; ++a) cpow.push_back(algebra_mul(cpow.back(), c));

    std::vector<GroupAlgebraElement> out;
    CycNumber inv_p = CycNumber::rational(Rational(1, p));
    for (int j = 0; j < p; ++j) {
        GroupAlgebraElement acc(ctx.G);
        for (int a = 0; a < p; ++a) {
            CycNumber w = cyc_pow(zeta_p, static_cast<long>(j) * a % p);
            acc = algebra_add(acc, cpow[a].scaled(w));
        }
        out.push_back(acc.scaled(inv_p));
    }

    // Exact verification of the defining identities.
    GroupAlgebraElement sum(ctx.G);
    for (int j = 0; j < p; ++j) {
        check_internal(algebra_eq(algebra_mul(out[j], out[j]), out[j]),
                       "extension idempotent " + std::to_string(j) + " is not idempotent");
        check_internal(out[j].is_central(),
                       "extension idempotent " + std::to_string(j) + " is not central");
        for (int i = 0; i < j; ++i)
            check_internal(algebra_mul(out[i], out[j]).is_zero(),
                           "extension idempotents " + std::to_string(i) + "," +
                               std::to_string(j) + " are not orthogonal");
        sum = algebra_add(sum, out[j]);
    }
    check_internal(algebra_eq(sum, e), "extension idempotents do not sum to e_eta");
    return out;
}

GroupAlgebraElement fused_idempotent(const IndexPContext& ctx, const ClassFunction& eta) {
    check_input(!class_function_eq(conjugate_character(eta, ctx), eta),
                "fused_idempotent: eta is x-stable");
    // Sum of the <x>-orbit idempotents.
    GroupAlgebraElement sum(ctx.G);
    ClassFunction cur = eta;
    for (int i = 0; i < ctx.p; ++i) {
        sum = algebra_add(sum, algebra_embed(pci_from_character(cur), ctx.H));
        cur = conjugate_character(cur, ctx);
    }
    check_internal(class_function_eq(cur, eta), "conjugation orbit did not close");

    // Equality with the classical idempotent of the induced irreducible.
    ClassFunction ind = induce_character(ctx, eta);
    CycNumber norm = inner_product(ind, ind);
    check_internal(cyc_eq(norm, CycNumber::rational(Rational(1))),
                   "induced character of a moved eta is not irreducible");
    check_internal(algebra_eq(sum, pci_from_character(ind)),
                   "fused idempotent differs from the classical one");
    return sum;
}

bool IdempotentReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

IdempotentReport idempotent_checks(const std::vector<GroupAlgebraElement>& elements,
                                   const GroupPtr& ambient) {
    IdempotentReport report;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        check_input(elements[i].group().get() == ambient.get(),
                    "idempotent_checks: element over the wrong group");
        const auto& e = elements[i];
        report.checks.push_back(
            {"e" + std::to_string(i) + " idempotent", algebra_eq(algebra_mul(e, e), e)});
        report.checks.push_back({"e" + std::to_string(i) + " central", e.is_central()});
    }
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            report.checks.push_back(
                {"e" + std::to_string(i) + "*e" + std::to_string(j) + " = 0",
                 algebra_mul(elements[i], elements[j]).is_zero()});
    GroupAlgebraElement sum(ambient);
    for (const auto& e : elements) sum = algebra_add(sum, e);
    report.checks.push_back({"sum = 1", algebra_eq(sum, algebra_identity(ambient))});
    return report;
}

} // namespace indexp
