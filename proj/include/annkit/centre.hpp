#pragma once

#include "annkit/character.hpp"
#include "annkit/ideal.hpp"
#include "annkit/realization.hpp"

#include <string>
#include <vector>

namespace annkit {

// Element of the centre of E[G] in character coordinates: one component per
// irreducible, in character_table(g) order, values in Q(zeta_e).
struct CentreElement {
    const FiniteGroup* group = nullptr;
    std::vector<Cyclo> comps;

    CentreElement() = default;
    explicit CentreElement(const FiniteGroup& g)
        : group(&g), comps(character_table(g).size()) {}

    bool operator==(const CentreElement& o) const { return comps == o.comps; }
};

// Element of E[G] as one coefficient per group element.
struct GroupRingElement {
    const FiniteGroup* group = nullptr;
    std::vector<Cyclo> coeff;

    GroupRingElement() = default;
    explicit GroupRingElement(const FiniteGroup& g)
        : group(&g), coeff(g.order()) {}

    bool operator==(const GroupRingElement& o) const { return coeff == o.coeff; }
};

GroupRingElement gr_one(const FiniteGroup& g);
GroupRingElement gr_element(const FiniteGroup& g, int x);
GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_sub(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_scale(const Cyclo& c, const GroupRingElement& a);
bool gr_is_central(const GroupRingElement& a);
bool gr_is_zero(const GroupRingElement& a);

// character coordinates of a central element: z_chi = (1/chi(1)) sum c_g chi(g)
CentreElement centre_components(const GroupRingElement& x);
// coefficient form: c_g = (1/|G|) sum_chi z_chi chi(1) chi(g^{-1}); throws
// std::domain_error if any coefficient is irrational
GroupRingElement to_group_ring(const CentreElement& z);

// every coefficient p-integral (denominator coprime to p)
bool p_integrality_check(const GroupRingElement& x, const Int& p);

// e_chi = (chi(1)/|G|) sum chi(g^{-1}) g; pr_chi = (|G|/chi(1)) e_chi
GroupRingElement idempotent(const Character& chi);
GroupRingElement projector(const Character& chi);

// component at chi becomes the component at the conjugate character
CentreElement sharp(const CentreElement& z);

// multiplicative induction: component at chi is prod_psi z_psi^<chi|_H, psi>
CentreElement induce_centre(const Subgroup& h, const CentreElement& z);

// reduced norm of x in the chi-component of E[G]: a^{chi(1)} for central x
// with component a, chi-value sum for linear chi, det over a realization
// otherwise
Cyclo reduced_norm(const Character& chi, const GroupRingElement& x);

// Local data at a prime of the base field: decomposition group, inertia,
// a Frobenius lift, and the residue norm.
struct DecompositionData {
    std::string label;
    Subgroup gp;
    Subgroup g0p;
    int frob = 0;
    Int residue_norm = 1;

    DecompositionData(std::string label_, Subgroup gp_, Subgroup g0p_, int frob_,
                      Int residue_norm_);
};

struct LocalIdempotents {
    GroupRingElement e1;      // e'_p  = |G0|^{-1} Norm_{G0}
    GroupRingElement e2;      // e''_p = 1 - e'_p
    GroupRingElement ebar1;   // |Gp|^{-1} Norm_{Gp}
    GroupRingElement ebar2;   // 1 - ebar1
};
LocalIdempotents local_idempotents(const DecompositionData& d);

// generators of U_p over Z[G_p]: {Norm_{G0}, 1 - e'_p F^{-1}}
std::vector<GroupRingElement> u_p_generators(const DecompositionData& d);

enum class UChiFlag { EXACT, LOWER_BOUND };

struct UChiResult {
    CycloIdeal ideal;  // at conductor exponent(G)
    UChiFlag flag = UChiFlag::EXACT;
};

// The ideal U_chi from the local units U_p at the ramified primes.  Exactly O
// when no prime ramifies, G is abelian, or every inertia subgroup is normal
// in G; otherwise a sub-ideal generated by reduced norms of lattice
// generators of O[G]U_p, flagged LOWER_BOUND.
UChiResult u_chi(const Character& chi,
                 const std::vector<DecompositionData>& local_data);

}  // namespace annkit
