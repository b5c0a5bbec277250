#ifndef INDEXP_CHARACTER_HPP
#define INDEXP_CHARACTER_HPP

#include "indexp/group.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace indexp {

// Exact class function; characters and induced class functions share this
// representation and irreducibility is a checked property.
struct ClassFunction {
    GroupPtr group;
    std::vector<CycNumber> values; // indexed by conjugacy class

    const CycNumber& at_class(int c) const { return values[c]; }
    const CycNumber& at_element(int g) const { return values[group->class_of(g)]; }
    CycNumber degree() const { return values[group->class_of(0)]; }
    long degree_int() const;
};

using Character = ClassFunction;

bool class_function_eq(const ClassFunction& a, const ClassFunction& b);

struct CharacterTable {
    GroupPtr group;
    int exponent = 1;
    long ell = 0; // the Dixon prime used
    std::vector<Character> irreducibles;

    int count() const { return static_cast<int>(irreducibles.size()); }
    // Index of a character equal to the given class function, or -1.
    int index_of(const ClassFunction& f) const;
};

// Exact character table by eigenvector splitting of the class-multiplication
// matrices over F_ell followed by a discrete-Fourier lift of each value.
// Exact orthogonality is verified before returning.
CharacterTable character_table(const GroupPtr& G);

// Ind_H^G f as a class function on G.
ClassFunction induce_character(const GroupPtr& G, const Subgroup& H, const ClassFunction& f);
ClassFunction induce_character(const IndexPContext& ctx, const ClassFunction& f);

// Restriction along the embedding, re-indexed by H-classes.
ClassFunction restrict_character(const ClassFunction& f, const Subgroup& H);

// (1/|G|) sum over classes of |C| a(C) sigma_-1(b(C)).
CycNumber inner_product(const ClassFunction& a, const ClassFunction& b);

// f^x(h) = f(x h x^{-1}); an action of <x> on H-class functions.
ClassFunction conjugate_character(const ClassFunction& f, const IndexPContext& ctx);

// f^{sigma_t}(g) = f(g^t); requires gcd(t, exponent) = 1.
ClassFunction galois_twist(const ClassFunction& f, long t);

// Galois orbit of characters over F, i.e. one F-irreducible up to Schur index.
struct GaloisOrbit {
    FieldSpec F;
    std::vector<int> members;    // character indices, sorted
    int k = 0;                   // orbit size
    std::vector<int> stabilizer; // units t mod exponent fixing the representative
};

std::vector<GaloisOrbit> galois_orbits_over_F(const CharacterTable& table, const FieldSpec& F);

// (1/|G|) sum chi(g^2): 1, -1 or 0 for irreducibles; diagnostic only.
CycNumber fs_indicator(const ClassFunction& chi);

// Minimal normalized m' with all values fixed by sigma_t for t = 1 mod m'.
int character_field_conductor(const ClassFunction& chi);

// An F-irreducible: a Galois orbit with a chosen representative and an
// optional externally supplied Schur index.
struct FIrreducibleSpec {
    std::shared_ptr<const CharacterTable> table;
    GaloisOrbit orbit;
    int representative = 0; // character index in `table`
    std::optional<int> schur_index;

    const Character& rep_char() const { return table->irreducibles[representative]; }
    // Sum of the orbit members' characters (the F-rational trace up to Schur index).
    ClassFunction orbit_sum() const;
    long orbit_degree() const; // degree of orbit_sum
};

} // namespace indexp

#endif
