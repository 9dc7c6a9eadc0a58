#pragma once

#include "annkit/cyclotomic.hpp"
#include "annkit/linalg.hpp"

#include <vector>

namespace annkit {

// Fractional ideal of O = Z[zeta_n]: an integral Z-lattice in HNF (rows span
// an O-submodule of O) divided by a positive integer denominator.  Canonical:
// gcd of all entries and the denominator is 1, so equality is field equality.
class CycloIdeal {
public:
    static CycloIdeal zero(long n);
    static CycloIdeal unit(long n);
    static CycloIdeal from_generators(long n, const std::vector<Cyclo>& gens);
    static CycloIdeal principal(long n, const Cyclo& x);
    // raw lattice data (rows must already span an O-module)
    static CycloIdeal from_lattice(long n, std::vector<Vec> rows, Int den);

    long conductor() const { return n_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return rows_.empty(); }

    bool operator==(const CycloIdeal& o) const;
    bool operator!=(const CycloIdeal& o) const { return !(*this == o); }
    CycloIdeal operator*(const CycloIdeal& o) const;
    CycloIdeal inverse() const;
    CycloIdeal scale(const Rat& q) const;

    Rat norm() const;
    bool contains(const Cyclo& x) const;
    bool contains_ideal(const CycloIdeal& o) const;
    std::vector<Cyclo> basis_elements() const;

    // valuations at the primes above p, in the canonical (sorted-factor) order
    std::vector<long> p_valuations(const Int& p) const;

private:
    long n_ = 1;
    std::vector<Vec> rows_;
    Int den_ = 1;
    void normalize();
};

CycloIdeal inverse_different(long n);

// Phi_n'(zeta_n), the generator of the different of Q(zeta_n)
Cyclo different_generator(long n);

// Primes of Z[zeta_n] above p as integral ideals (p, h_i(zeta_n)), h_i the
// canonical sorted irreducible factors of Phi_n mod p; paired with their
// ramification index e and residue degree f.
struct PrimeAboveP {
    CycloIdeal ideal;
    long e;
    long f;
};
std::vector<PrimeAboveP> primes_above(long n, const Int& p);

// Finite O-module given by a relation matrix: r generators, c >= r relations
// (columns); cokernel of O^c -> O^r must be finite.
struct OModulePresentation {
    long n = 1;
    std::size_t r = 0, c = 0;
    std::vector<Cyclo> entries;  // row-major r x c

    Cyclo& at(std::size_t i, std::size_t j) { return entries[i * c + j]; }
    const Cyclo& at(std::size_t i, std::size_t j) const { return entries[i * c + j]; }
};

// Determinant of a square matrix over Q(zeta_n) (Gaussian elimination).
Cyclo cyclo_det(std::vector<std::vector<Cyclo>> m);

// Rank over the field E of an r x c matrix of Cyclo.
std::size_t cyclo_rank(std::vector<std::vector<Cyclo>> m);

// Ideal generated by all r x r minors; throws std::domain_error when the
// cokernel is infinite (row rank < r).
CycloIdeal fitting_ideal(const OModulePresentation& m);

}  // namespace annkit
