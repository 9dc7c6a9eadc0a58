#pragma once

#include "annkit/centre.hpp"
#include "annkit/gmodule.hpp"
#include "annkit/ideal.hpp"
#include "annkit/realization.hpp"

#include <vector>

namespace annkit {

// T_chi: the free O-lattice O^{chi(1)} with the right action coming from a
// monomial realization (all matrix entries are roots of unity, so the
// standard lattice is stable).
struct ChiTwistLattice {
    Character chi;
    Realization rho;
};
ChiTwistLattice chi_twist_lattice(const Character& chi);

// M[chi] = T_chi tensor M with the diagonal left action
// t (x) m -> t rho(g^{-1}) (x) g(m), as a finite O-module (O = Z[zeta_m])
// together with its Z-coordinate model.
struct TwistedModule {
    const FiniteGroup* group = nullptr;
    long m = 1;           // realization field conductor
    std::size_t phi = 1;  // [O : Z]
    std::size_t d = 1;    // chi(1)
    std::vector<Int> omoduli;  // additive order of each O-generator
    std::vector<Mat> zaction;  // per group element, N x N integer matrices
    Mat zeta;                  // multiplication by zeta_m, N x N
    std::vector<Int> zmoduli;  // per Z-coordinate, size N = |omoduli| * phi

    std::size_t zdim() const { return zmoduli.size(); }
    Int order() const;
    Int exponent_bound() const;  // largest coordinate modulus (1 if none)
    Vec reduce(Vec v) const;
    Vec apply(int g, const Vec& v) const;
    bool is_zero(const Vec& v) const;
    // all elements as coordinate vectors; intended for small modules
    std::vector<Vec> elements() const;
};

TwistedModule build_twist(const Character& chi, const GModule& mod);

// Finite subquotient P/Q of Z^R with a zeta_m-action that stabilises both
// lattices; carries the O-module structure needed for Fitting ideals.
class OSubquotient {
public:
    OSubquotient(long m, std::size_t phi, Mat zeta_block, std::size_t copies,
                 std::vector<Vec> p, std::vector<Vec> q, Int exponent_bound);

    const std::vector<Vec>& numerator() const { return p_; }
    const std::vector<Vec>& denominator() const { return q_; }
    // nontrivial abelian invariant factors (ascending divisibility)
    std::vector<Int> abelian_invariants() const;
    Int order() const;
    CycloIdeal fitting() const;  // Fit_O of the O-module presentation

private:
    long m_;
    std::size_t phi_;
    Mat zeta_block_;
    std::size_t copies_;
    std::vector<Vec> p_, q_;
    Int nmax_;

    Vec zeta_apply(const Vec& v) const;
};

// H^i(G, M[chi]) for i in {0, 1, 2}: bar-resolution cocycles over coboundaries
// (cyclic groups use the periodic Norm/augmentation description)
OSubquotient cohomology(const TwistedModule& t, int i);

struct NormMapData {
    OSubquotient invariants;    // M^chi
    OSubquotient coinvariants;  // M_chi
    Int kernel_order;           // of t(M, chi): M_chi -> M^chi
    Int cokernel_order;
};
NormMapData invariants_coinvariants_norm(const TwistedModule& t);

// h(mu, chi) = Fit(H^0) * Fit(H^1)^{-1} * Fit(H^2); mu must be cyclic
CycloIdeal h_mu_chi(const GModule& mu, const Character& chi);

// x * pr_chi, after checking that x annihilates M[chi]^G; throws
// std::domain_error with a witness description when the check fails
GroupRingElement annihilator_transfer(const Cyclo& x, const Character& chi,
                                      const GModule& mod);

// sum over the Galois orbit of (y x)^w pr_{chi^w}: integer coefficients,
// verified to annihilate mod; y must lie in the inverse different
GroupRingElement trace_descent(const Cyclo& x, const Cyclo& y,
                               const Character& chi, const GModule& mod);

}  // namespace annkit
