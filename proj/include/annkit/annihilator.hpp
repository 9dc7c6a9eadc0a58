#pragma once

#include "annkit/forms.hpp"
#include "annkit/lvalues.hpp"
#include "annkit/twistcohom.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace annkit {

enum class SplitStatus { SPLIT, NONSPLIT, UNKNOWN };
enum class TriState { YES, NO, UNKNOWN };

// Per-prime field-theoretic metadata; never computed from embeddings, always
// supplied (UNKNOWN is honest).
struct PrimeInfo {
    Int p;
    TriState ramified_in_top_over_Q = TriState::UNKNOWN;
    // primes of K^+ above p, in K/K^+
    std::vector<SplitStatus> splitting;
    // K^cl contained in (K^cl)^+(zeta_p)
    TriState zeta_p_condition = TriState::UNKNOWN;
};

// Arithmetic data for a Galois extension top/k with group `group`.
struct FieldDatum {
    std::shared_ptr<const FiniteGroup> group;
    std::string label;
    bool k_is_rational = false;
    TriState k_totally_real = TriState::UNKNOWN;
    TriState cm = TriState::UNKNOWN;
    int j = -1;  // complex conjugation when cm == YES
    std::vector<DecompositionData> ramified_primes;
    std::vector<Subgroup> infinite_places;  // decomposition groups at infinity
    std::optional<GModule> mu;              // roots of unity, cyclic
    std::vector<PrimeInfo> p_info;

    const PrimeInfo* info_for(const Int& p) const;
};

// invariants M^H as a module over q = G/H (H normal, proj the projection)
GModule invariant_submodule(const GModule& m, const Subgroup& h,
                            const FiniteGroup& q, const std::vector<int>& proj);

// Deflation of chi through its kernel together with the K-level datum
// (K the field cut out by chi).
struct CutFieldReduction {
    std::shared_ptr<const FiniteGroup> qgroup;
    std::vector<int> proj;  // parent element -> quotient element
    Character phi;          // faithful on *qgroup
    FieldDatum kfield;
};
CutFieldReduction reduce_to_cut_field(const Character& chi,
                                      const FieldDatum& field);

// Gal(Q(sqrt(-d))/Q) with the standard CM metadata for a fundamental
// discriminant -d < 0; p-ramification read off from p | d
FieldDatum imaginary_quadratic_datum(long d, const Int& p);

enum class StarVerdict { HOLDS_TRIVIALLY, HOLDS, FAILS, UNKNOWN };

struct StarReport {
    StarVerdict verdict = StarVerdict::UNKNOWN;
    std::vector<std::string> notes;
};

// Condition (*) for the K-level datum at an odd prime p.  chi, when given,
// enables the known-case exemptions (rational-valued; k = Q with chi linear).
StarReport condition_star(const FieldDatum& field, const Int& p,
                          const Character* chi = nullptr);

struct AnnihilatorElement {
    GroupRingElement element;  // rational coefficients
    bool zero_by_vanishing = false;
    std::string chi_key;
    Int p = 0;
    Cyclo x;
    std::vector<std::string> lvalue_keys;
    StarVerdict verdict = StarVerdict::UNKNOWN;
    UChiFlag u_flag = UChiFlag::EXACT;
    bool central = false;
    bool p_integral = false;
    std::vector<std::string> notes;
};

// The Theorem element sum_w x^w L(0, conj(chi)^w) pr_{chi^w}, w running over
// Gal(Q(zeta_m)/Q) for the realization field Q(zeta_m).  Membership of x in
// D^{-1} h(mu, chi) U_chi is checked at the primes above p only.
AnnihilatorElement build_theorem_element(const Character& chi,
                                         const FieldDatum& field, const Int& p,
                                         const Cyclo& x,
                                         const LValueTable& table);

// The Corollary element sum_{chi != 1} L_S(0, conj(chi)) d_chi pr_chi;
// requires every inertia subgroup normal and p odd unramified.
AnnihilatorElement build_corollary_element(
    const FieldDatum& field, const std::vector<DecompositionData>& s_extra,
    const Int& p, const LValueTable& table);

struct VerificationReport {
    bool pass = false;
    Int denominator = 1;  // global denominator cleared (coprime to p)
    std::vector<std::string> lines;
    std::vector<std::string> witnesses;
};

// Apply the element to every generator of the p-primary part of the class
// group; PASS iff all images vanish there.
VerificationReport verify_annihilation(const AnnihilatorElement& a,
                                       const ClassGroupData& cl, const Int& p);

}  // namespace annkit
