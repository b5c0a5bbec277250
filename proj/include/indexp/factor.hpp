#ifndef INDEXP_FACTOR_HPP
#define INDEXP_FACTOR_HPP

#include "indexp/polynomial.hpp"

#include <vector>

namespace indexp {

// Complete factorization into irreducibles over Q. Factors are primitive
// integer polynomials with positive leading coefficient, sorted by
// (degree, coefficient sequence); f equals content times their product.
std::vector<RatPoly> factor_over_Q(const RatPoly& f);

// Squarefree decomposition (Yun): pairwise-coprime squarefree parts with
// multiplicities; f = content * prod part_i^{mult_i}.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f);

} // namespace indexp

#endif
