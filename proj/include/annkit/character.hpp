#pragma once

#include "annkit/cyclotomic.hpp"
#include "annkit/group.hpp"

#include <vector>

namespace annkit {

// Exact class function on a FiniteGroup with values in Q(zeta_e),
// e = exponent(G).
struct Character {
    const FiniteGroup* group = nullptr;
    std::vector<Cyclo> values;  // per conjugacy class, classes() order
    long degree = 0;

    const Cyclo& at_class(int c) const { return values[c]; }
    Cyclo at(int g) const { return values[group->class_of(g)]; }
    bool operator==(const Character& o) const { return values == o.values; }
};

// Full irreducible table via Dixon-Schneider; deterministic order: by degree,
// then lexicographically by value coefficient vectors.  Exact (verified by
// orthogonality) and cached per group instance.
std::vector<Character> character_table(const FiniteGroup& g);

// <chi, psi> = (1/|G|) sum chi(g) conj(psi(g)); exact rational for real use
// cases, returned as a Cyclo for generality
Cyclo inner_product(const Character& chi, const Character& psi);

// restriction of chi to a subgroup, as a character of h.as_group()
Character restrict_character(const Character& chi, const Subgroup& h);

// Frobenius induction of a character of h.as_group() up to the parent
Character induce(const Subgroup& h, const Character& psi);

// inflation of a character of q = g/N along proj (parent element -> q index)
Character inflate(const FiniteGroup& g, const std::vector<int>& proj,
                  const Character& phi);

// kernel of chi as a subgroup
Subgroup character_kernel(const Character& chi);

// quotient by ker(chi) together with the faithful character it deflates to;
// also returns the projection map
struct DeflateResult {
    FiniteGroup quotient;
    std::vector<int> proj;
    Character phi;  // faithful on quotient
};
DeflateResult deflate_through_kernel(const Character& chi);

// Q(chi) as the stabilizer data inside Gal(Q(zeta_e)/Q), plus d_chi for the
// chosen cyclotomic realization field (see realization module): degree
// [Q(zeta_m) : Q(chi)] where Q(zeta_m) is the realization field found.
struct CharacterField {
    long e;                        // exponent of G
    std::vector<long> stabilizer;  // k with chi^k = chi (sorted)
    long field_degree;             // [Q(chi) : Q]
    long d_chi;
};
CharacterField character_field(const Character& chi);

// Galois orbit over Gal(Q(zeta_e)/Q): pairs (k, chi^k), deduplicated, sorted
// by k of first occurrence
std::vector<std::pair<long, Character>> galois_orbit(const Character& chi);

Character galois_twist(const Character& chi, long k);

// chi(j) = -chi(1) for a central involution j
bool is_odd(const Character& chi, int j);

}  // namespace annkit
