#ifndef INDEXP_ROOTS_HPP
#define INDEXP_ROOTS_HPP

#include "indexp/cycpoly.hpp"

#include <optional>
#include <vector>

namespace indexp {

// Irreducible factors of Phi_p over F = Q(zeta_m), computed from the Galois
// orbits of the action of Gal(F(zeta_p)/F) on the primitive p-th roots.
// Monic, conductor m_F, sorted by smallest root exponent; the product equals
// Phi_p and all degrees agree.
std::vector<CycPoly> factor_phi_p_over_F(int p, const FieldSpec& F);

// The subgroup S of (Z/p)^* whose orbits index those factors.
std::vector<int> phi_p_orbit_subgroup(int p, const FieldSpec& F);

// Exact decision: mu in F with mu^p = lambda, or nullopt when no such root
// exists. When several roots lie in F the one with lexicographically largest
// coordinates at conductor m_F is returned.
std::optional<CycNumber> pth_root_in_F(const CycNumber& lambda, int p, const FieldSpec& F);

// All roots of X^p - lambda lying in F, sorted canonically (used by tests
// and the brute-force cross-checks).
std::vector<CycNumber> all_pth_roots_in_F(const CycNumber& lambda, int p, const FieldSpec& F);

} // namespace indexp

#endif
