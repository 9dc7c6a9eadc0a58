#pragma once

#include "annkit/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace annkit {

// Exact element of Q(zeta_n), stored as rational coefficients on the power
// basis 1, zeta, ..., zeta^{phi(n)-1}, always reduced mod the n-th cyclotomic
// polynomial.  Mixed-conductor arithmetic lifts both operands to the lcm.
class Cyclo {
public:
    Cyclo() : n_(1), c_(1, Rat(0)) {}
    explicit Cyclo(const Rat& q) : n_(1), c_(1, q) { c_[0].canonicalize(); }
    explicit Cyclo(long v) : n_(1), c_(1, Rat(v)) {}
    explicit Cyclo(const Int& v) : n_(1), c_(1, Rat(v)) {}

    static Cyclo zeta(long n, long k = 1);
    // coefficients on 1..zeta^{phi(n)-1} (shorter vectors are zero-padded)
    static Cyclo from_coeffs(long n, std::vector<Rat> coeffs);
    // arbitrary-degree polynomial in zeta_n (reduced here)
    static Cyclo from_poly(long n, const std::vector<Rat>& poly);

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo inv() const;  // throws on zero
    Cyclo pow(long e) const;
    // zeta -> zeta^k, gcd(k, n) = 1
    Cyclo galois(long k) const;
    Cyclo conj() const { return galois(-1); }
    Rat trace_to_Q() const;

    // re-express in Q(zeta_m) for n | m
    Cyclo embed(long m) const;
    // drop to the smallest cyclotomic subfield Q(zeta_d), d | n, containing
    // this element (d minimal with the element fixed by Gal(Q(zeta_n)/Q(zeta_d)))
    Cyclo reduce_conductor() const;

    // lcm of coefficient denominators
    Int denominator() const;

    std::string str() const;

private:
    long n_;
    std::vector<Rat> c_;
};

inline Cyclo operator*(const Rat& q, const Cyclo& x) { return Cyclo(q) * x; }

// trace of zeta_n^i down to Q: mu(n/g) * phi(n) / phi(n/g), g = gcd(i, n)
Rat trace_of_power(long n, long i);

long mobius(long n);

}  // namespace annkit
