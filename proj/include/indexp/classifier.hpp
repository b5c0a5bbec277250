#ifndef INDEXP_CLASSIFIER_HPP
#define INDEXP_CLASSIFIER_HPP

#include "indexp/character.hpp"
#include "indexp/idempotents.hpp"

#include <optional>
#include <vector>

namespace indexp {

// Outcome of the five-way decision for an F-irreducible eta of H.
//   1: the conjugate orbit differs from eta's orbit        -> 1 constituent
//   2: the orbit is stable as a set, members are moved     -> 1 constituent
//   3: members stable, no p-th root of lambda in F         -> 1 constituent
//   4: root in F and zeta_p in F                           -> p constituents
//   5: root in F and zeta_p not in F                       -> 1 + k constituents
struct InductionCase {
    int case_id = 0;
    int p = 0;
    int k = 0; // Galois orbit size of eta over F
    FieldSpec F;
    bool zeta_p_in_field = false;
    std::optional<CycNumber> lambda; // cases >= 3; from the witness lift if any
    std::optional<CycNumber> mu;     // cases 4 and 5
    std::optional<int> witness_x;    // coset element whose lambda has the root
    int predicted_count = 0;
    std::vector<int> orbit_members;  // H-character indices
    // lambda per coset class representative, recorded for reporting.
    std::vector<std::pair<int, CycNumber>> lambda_by_lift;
};

// One F-constituent of the induced representation: a Galois orbit of
// G-irreducibles with its (constant) complex multiplicity.
struct Constituent {
    std::vector<int> orbit; // G-character indices, sorted
    int orbit_size = 0;
    long complex_multiplicity = 0;
    long degree = 0; // degree of the orbit-sum character
};

struct DecompositionReport {
    int case_id = 0; // 0 when produced without the classifier
    int p = 0;
    FieldSpec F;
    long eta_orbit_degree = 0;
    std::vector<Constituent> constituents;
    int predicted_count = -1; // -1 when no prediction was attached
    int actual_count = 0;
    bool match = true; // predicted == actual whenever a prediction exists
};

// The decision procedure. The stable branch scans every conjugacy class in
// the coset xH for a lift whose lambda has a p-th root in F; the pinned x is
// tried first, so reported values stay faithful to the context.
InductionCase classify(const IndexPContext& ctx, const FIrreducibleSpec& eta,
                       const FieldSpec& F);

// Constituents of the induced orbit-sum character, computed from G's table
// and compared against the case prediction.
DecompositionReport predict_decomposition(const InductionCase& ic, const IndexPContext& ctx,
                                          const FIrreducibleSpec& eta,
                                          const CharacterTable& g_table);

// Number of irreducible factors of Phi_p over F (the alternative reading of
// the case-5 count, reported for documentation).
int phi_p_factor_count(int p, const FieldSpec& F);

} // namespace indexp

#endif
