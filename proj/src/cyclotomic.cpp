#include "annkit/cyclotomic.hpp"

#include "annkit/fpoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace annkit {

long mobius(long n) {
    long r = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        r = -r;
    }
    return r;
}

Rat trace_of_power(long n, long i) {
    i = ((i % n) + n) % n;
    long g = std::gcd(i, n);
    long m = n / g;  // order of zeta^i
    long mu = mobius(m);
    if (mu == 0) return Rat(0);
    return Rat(mu) * Rat(euler_phi(n)) / Rat(euler_phi(m));
}

namespace {

const std::vector<Int>& phi_poly(long n) {
    static std::map<long, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, fp::cyclotomic_poly(n)).first;
    return it->second;
}

// reduce a rational polynomial in zeta_n modulo Phi_n to degree < phi(n)
std::vector<Rat> reduce_mod_phi(long n, std::vector<Rat> poly) {
    const auto& phi = phi_poly(n);
    const std::size_t d = phi.size() - 1;  // = phi(n)
    for (long i = (long)poly.size() - 1; i >= (long)d; --i) {
        Rat f = poly[i];
        if (f == 0) continue;
        for (std::size_t j = 0; j < phi.size(); ++j)
            poly[i - d + j] -= f * Rat(phi[j]);
    }
    poly.resize(d, Rat(0));
    return poly;
}

}  // namespace

Cyclo Cyclo::zeta(long n, long k) {
    assert(n >= 1);
    k = ((k % n) + n) % n;
    long d = euler_phi(n);
    std::vector<Rat> poly(n, Rat(0));
    poly[k] = 1;
    Cyclo x;
    x.n_ = n;
    x.c_ = reduce_mod_phi(n, std::move(poly));
    x.c_.resize(d, Rat(0));
    return x;
}

Cyclo Cyclo::from_coeffs(long n, std::vector<Rat> coeffs) {
    std::size_t d = (std::size_t)euler_phi(n);
    assert(coeffs.size() <= d);
    coeffs.resize(d, Rat(0));
    for (auto& q : coeffs) q.canonicalize();
    Cyclo x;
    x.n_ = n;
    x.c_ = std::move(coeffs);
    return x;
}

Cyclo Cyclo::from_poly(long n, const std::vector<Rat>& poly) {
    Cyclo x;
    x.n_ = n;
    x.c_ = reduce_mod_phi(n, poly);
    return x;
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q == 0; });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclo: not rational: " + str());
    return c_[0];
}

Cyclo Cyclo::embed(long m) const {
    assert(m % n_ == 0);
    if (m == n_) return *this;
    long s = m / n_;
    std::vector<Rat> poly((std::size_t)(n_ - 1) * s + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * s] = c_[i];
    return from_poly(m, poly);
}

Cyclo Cyclo::operator-() const {
    Cyclo x = *this;
    for (auto& q : x.c_) q = -q;
    return x;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclo a = embed(m), b = o.embed(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclo a = embed(m), b = o.embed(m);
    std::vector<Rat> poly(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) poly[i + j] += a.c_[i] * b.c_[j];
    }
    return from_poly(m, poly);
}

bool Cyclo::operator==(const Cyclo& o) const {
    long m = std::lcm(n_, o.n_);
    return embed(m).c_ == o.embed(m).c_;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    if (is_rational()) return Cyclo(Rat(1) / c_[0]);
    // extended Euclid in Q[x] against Phi_n
    const auto& phi_z = phi_poly(n_);
    std::vector<Rat> r0(phi_z.begin(), phi_z.end());
    std::vector<Rat> r1(c_.begin(), c_.end());
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> t0 = {}, t1 = {Rat(1)};
    auto polmod = [](std::vector<Rat> a, const std::vector<Rat>& b,
                     std::vector<Rat>* qout) {
        std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
        for (long i = (long)a.size() - (long)b.size(); i >= 0; --i) {
            Rat f = a[i + b.size() - 1] / b.back();
            q[i] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (qout) *qout = std::move(q);
        return a;
    };
    while (r1.size() > 1 || (r1.size() == 1 && false)) {
        std::vector<Rat> q;
        std::vector<Rat> r2 = polmod(r0, r1, &q);
        // t2 = t0 - q * t1
        std::vector<Rat> t2 = t0;
        t2.resize(std::max(t0.size(), q.size() + t1.size() - 1), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
        }
        while (!t2.empty() && t2.back() == 0) t2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
        if (r1.empty()) throw std::domain_error("Cyclo: inverse failed");
    }
    // r1 is a nonzero constant; inverse = t1 / r1[0]
    for (auto& q : t1) q /= r1[0];
    return from_poly(n_, t1);
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inv(); }

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclo r((Rat(1)));
    Cyclo b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Cyclo Cyclo::galois(long k) const {
    k = ((k % n_) + n_) % n_;
    assert(std::gcd(k, n_) == 1);
    std::vector<Rat> poly((std::size_t)n_, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        poly[(i * (std::size_t)k) % (std::size_t)n_] += c_[i];
    return from_poly(n_, poly);
}

Rat Cyclo::trace_to_Q() const {
    Rat t = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) t += c_[i] * trace_of_power(n_, (long)i);
    return t;
}

Cyclo Cyclo::reduce_conductor() const {
    long best = n_;
    for (long d : divisors(n_)) {
        if (d >= best) continue;
        // fixed by Gal(Q(zeta_n)/Q(zeta_d)) = { k : k = 1 mod d, gcd(k,n)=1 }?
        bool fixed = true;
        for (long k = 1; k < n_ && fixed; ++k) {
            if (std::gcd(k, n_) != 1 || k % d != 1 % d) continue;
            if (galois(k) != *this) fixed = false;
        }
        if (fixed) best = d;
    }
    if (best == n_) return *this;
    // express in Q(zeta_best): solve via embedding of basis
    long db = euler_phi(best);
    // element lies in the Q-span of embed(zeta_best^j); find coordinates by
    // solving a linear system over Q in the power basis of Q(zeta_n)
    std::vector<std::vector<Rat>> cols;
    for (long j = 0; j < db; ++j)
        cols.push_back(Cyclo::zeta(best, j).embed(n_).c_);
    std::size_t dim = c_.size();
    // Gaussian elimination solve cols * x = c_
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(db + 1, Rat(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (long j = 0; j < db; ++j) m[i][j] = cols[j][i];
        m[i][db] = c_[i];
    }
    std::vector<long> pivot_col(dim, -1);
    std::size_t rank = 0;
    for (long j = 0; j < db && rank < dim; ++j) {
        std::size_t p = rank;
        while (p < dim && m[p][j] == 0) ++p;
        if (p == dim) continue;
        std::swap(m[rank], m[p]);
        Rat f = m[rank][j];
        for (long k = j; k <= db; ++k) m[rank][k] /= f;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == rank || m[i][j] == 0) continue;
            Rat g = m[i][j];
            for (long k = j; k <= db; ++k) m[i][k] -= g * m[rank][k];
        }
        pivot_col[rank++] = j;
    }
    std::vector<Rat> x(db, Rat(0));
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = m[i][db];
    for (std::size_t i = rank; i < dim; ++i)
        if (m[i][db] != 0) throw std::logic_error("reduce_conductor: inconsistent");
    Cyclo out = from_coeffs(best, std::move(x));
    assert(out.embed(n_) == *this);
    return out;
}

Int Cyclo::denominator() const {
    Int d = 1;
    for (const auto& q : c_) d = lcm(d, q.get_den());
    return d;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    os << "[n=" << n_ << ";";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace annkit
