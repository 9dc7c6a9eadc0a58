#pragma once

#include "annkit/character.hpp"

#include <vector>

namespace annkit {

// Explicit matrix model of an irreducible character over a cyclotomic field
// Q(zeta_m): one dim x dim matrix per group element.
struct Realization {
    const FiniteGroup* group = nullptr;
    long m = 1;  // realization field Q(zeta_m)
    std::size_t dim = 0;
    std::vector<std::vector<std::vector<Cyclo>>> mats;  // [element][row][col]

    const std::vector<std::vector<Cyclo>>& at(int g) const { return mats[g]; }
};

// Search order: linear characters directly; then a multiplicity-one
// permutation module projection over Q(chi) when Q(chi) is itself cyclotomic;
// then induction from a linear character of a subgroup (monomial path).
// Throws std::runtime_error when no realization is found.
Realization find_realization(const Character& chi);

// Linear or induced-from-linear only: matrices are monomial with root-of-unity
// entries, so the standard lattice O^{chi(1)} is stable under the action.
Realization find_monomial_realization(const Character& chi);

// matrix utilities over Q(zeta_m)
std::vector<std::vector<Cyclo>> cmat_mul(const std::vector<std::vector<Cyclo>>& a,
                                         const std::vector<std::vector<Cyclo>>& b);
Cyclo cmat_trace(const std::vector<std::vector<Cyclo>>& a);

}  // namespace annkit
