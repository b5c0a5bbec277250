#ifndef INDEXP_ORACLE_HPP
#define INDEXP_ORACLE_HPP

#include "indexp/classifier.hpp"

#include <string>
#include <vector>

namespace indexp {

// Brute-force decomposition of the induced orbit sum, written directly from
// the induction formula and orthogonality; it never consults lambda, mu or
// idempotents, so it can contradict the classifier when one of them is wrong.
DecompositionReport oracle_decompose(const IndexPContext& ctx, const FIrreducibleSpec& eta,
                                     const CharacterTable& g_table);

struct VerificationOutcome {
    int case_id = 0;
    int p = 0;
    int k = 0;
    FieldSpec F;
    int predicted_count = 0;
    int oracle_count = 0;
    bool counts_equal = false;
    bool constituents_equal = false;
    bool mu_uniform = true;     // same mu across all orbit conjugates
    bool case1_consistent = true; // the p conjugate orbits induce equal class functions
    // Case 5 only: the alternative count 1 + (#factors of Phi_p over F).
    int phi_reading_count = -1;
    bool phi_reading_matches = true;
    std::string detail; // populated on mismatch
    InductionCase induction;
    DecompositionReport predicted;
    DecompositionReport oracle;

    bool ok() const { return counts_equal && constituents_equal && mu_uniform && case1_consistent; }
};

// classify + predict_decomposition against oracle_decompose, plus the
// case-specific cross-checks.
VerificationOutcome compare_verify(const IndexPContext& ctx, const FIrreducibleSpec& eta,
                                   const FieldSpec& F, const CharacterTable& g_table);

struct PropertyReport {
    long checked = 0;
    long failed = 0;
    std::string first_failure;
    bool ok() const { return failed == 0; }
};

// Exact character-level identities: induction commutes with Galois twists,
// and induction of an orbit sum equals the sum of member inductions.
PropertyReport lemma21_check(const IndexPContext& ctx, const CharacterTable& h_table,
                             const CharacterTable& g_table, const FieldSpec& F);

// Index-p dichotomy: every H-irreducible has <x>-orbit size 1 or p; size-p
// orbits induce irreducibly, size-1 orbits induce p distinct constituents of
// multiplicity one.
PropertyReport index_p_dichotomy_check(const IndexPContext& ctx, const CharacterTable& h_table,
                                       const CharacterTable& g_table);

} // namespace indexp

#endif
