#pragma once

#include "annkit/numeric.hpp"

#include <utility>
#include <vector>

// Polynomials over F_p, little-endian coefficient vectors with no trailing
// zeros; all coefficients reduced into [0, p).
namespace annkit::fp {

using Poly = std::vector<Int>;

Poly trim(Poly f);
long deg(const Poly& f);  // deg(0) = -1
Poly add(const Poly& a, const Poly& b, const Int& p);
Poly sub(const Poly& a, const Poly& b, const Int& p);
Poly mul(const Poly& a, const Poly& b, const Int& p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const Int& p);
Poly mod(const Poly& a, const Poly& b, const Int& p);
Poly gcd(Poly a, Poly b, const Int& p);  // monic
Poly monic(Poly a, const Int& p);
Poly powmod(const Poly& base, Int e, const Poly& m, const Int& p);

// x^n - 1 reduced mod p
Poly xn_minus_1(long n, const Int& p);

// n-th cyclotomic polynomial reduced mod p (computed over Z, then reduced)
Poly cyclotomic_mod_p(long n, const Int& p);

// n-th cyclotomic polynomial over Z (little-endian integer coefficients)
std::vector<Int> cyclotomic_poly(long n);

// Monic irreducible factors of a squarefree monic f over F_p, each of known
// equal degree d (Cantor-Zassenhaus with a deterministic seed), sorted by
// coefficient sequence so output is canonical.
std::vector<Poly> equal_degree_factor(const Poly& f, long d, const Int& p);

// Monic irreducible factors (with multiplicity collapsed out; input must be
// squarefree) via distinct-degree then equal-degree splitting; canonical order.
std::vector<Poly> factor_squarefree(const Poly& f, const Int& p);

}  // namespace annkit::fp
