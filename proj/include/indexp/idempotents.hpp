#ifndef INDEXP_IDEMPOTENTS_HPP
#define INDEXP_IDEMPOTENTS_HPP

#include "indexp/character.hpp"

#include <optional>
#include <string>
#include <vector>

namespace indexp {

// lambda with the outcome of the p-th-root test over F.
struct LambdaMu {
    CycNumber lambda;
    std::optional<CycNumber> mu; // present iff a p-th root of lambda lies in F
    int p = 0;
    FieldSpec F;
};

// e_chi = (chi(1)/|K|) sum chi(g^-1) g, verified idempotent and central.
GroupAlgebraElement pci_from_character(const ClassFunction& chi);

// Scalar by which a central element acts on the chi-block:
// omega(z) = sum over classes coeff * |C| * chi(C) / chi(1).
CycNumber central_character_value(const ClassFunction& chi, const GroupAlgebraElement& z);

// lambda for an x-stable irreducible of H: omega_eta(C(x)^p). Errors if eta
// is not x-stable; a zero lambda is an internal error.
CycNumber lambda_of(const IndexPContext& ctx, const ClassFunction& eta);

LambdaMu mu_test(const CycNumber& lambda, int p, const FieldSpec& F);

// The p idempotents (1/p) sum_a zeta_p^{ja} c^a e_eta with c = C(x) e_eta / mu.
// e_eta may live over H or already embedded in G. All verification identities
// are checked exactly.
std::vector<GroupAlgebraElement> extension_idempotents(const IndexPContext& ctx,
                                                       const GroupAlgebraElement& e_eta,
                                                       const CycNumber& mu);

// Sum of the <x>-orbit idempotents of a non-stable eta; equals the classical
// idempotent of the induced irreducible (verified).
GroupAlgebraElement fused_idempotent(const IndexPContext& ctx, const ClassFunction& eta);

struct IdempotentCheck {
    std::string name;
    bool pass = false;
};

struct IdempotentReport {
    std::vector<IdempotentCheck> checks;
    bool all_pass() const;
};

// e^2 = e, centrality, pairwise orthogonality, and whether the total sums to 1.
IdempotentReport idempotent_checks(const std::vector<GroupAlgebraElement>& elements,
                                   const GroupPtr& ambient);

} // namespace indexp

#endif
