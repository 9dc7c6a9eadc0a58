#include "annkit/ideal.hpp"

#include "annkit/fpoly.hpp"

#include <algorithm>
#include <cassert>

namespace annkit {

namespace {

Vec int_coeffs_scaled(const Cyclo& x, const Int& scale) {
    // coefficients of scale * x, which must be integral
    Vec v;
    v.reserve(x.coeffs().size());
    for (const auto& q : x.coeffs()) {
        Rat s = q * Rat(scale);
        assert(s.get_den() == 1);
        v.push_back(s.get_num());
    }
    return v;
}

Cyclo cyclo_from_vec(long n, const Vec& v, const Int& den) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& x : v) {
        Rat q(x, den);
        q.canonicalize();
        c.push_back(q);
    }
    return Cyclo::from_coeffs(n, std::move(c));
}

}  // namespace

void CycloIdeal::normalize() {
    if (rows_.empty()) {
        den_ = 1;
        return;
    }
    Int g = den_;
    for (const auto& r : rows_)
        for (const auto& x : r) g = gcd(g, x);
    if (g > 1) {
        for (auto& r : rows_)
            for (auto& x : r) x /= g;
        den_ /= g;
    }
}

CycloIdeal CycloIdeal::zero(long n) {
    CycloIdeal i;
    i.n_ = n;
    return i;
}

CycloIdeal CycloIdeal::unit(long n) {
    CycloIdeal i;
    i.n_ = n;
    std::size_t d = (std::size_t)euler_phi(n);
    for (std::size_t k = 0; k < d; ++k) {
        Vec e(d, 0);
        e[k] = 1;
        i.rows_.push_back(std::move(e));
    }
    return i;
}

CycloIdeal CycloIdeal::from_lattice(long n, std::vector<Vec> rows, Int den) {
    CycloIdeal i;
    i.n_ = n;
    i.rows_ = hnf(std::move(rows), (std::size_t)euler_phi(n));
    i.den_ = std::move(den);
    i.normalize();
    return i;
}

CycloIdeal CycloIdeal::from_generators(long n, const std::vector<Cyclo>& gens) {
    std::size_t d = (std::size_t)euler_phi(n);
    Int den = 1;
    std::vector<Cyclo> lifted;
    for (const auto& g : gens) {
        Cyclo ge = g.embed(n);
        den = lcm(den, ge.denominator());
        lifted.push_back(std::move(ge));
    }
    std::vector<Vec> rows;
    for (const auto& g : lifted) {
        if (g.is_zero()) continue;
        Cyclo pow = g;
        for (std::size_t j = 0; j < d; ++j) {
            rows.push_back(int_coeffs_scaled(pow, den));
            pow = pow * Cyclo::zeta(n);
        }
    }
    return from_lattice(n, std::move(rows), den);
}

CycloIdeal CycloIdeal::principal(long n, const Cyclo& x) {
    return from_generators(n, {x});
}

bool CycloIdeal::operator==(const CycloIdeal& o) const {
    return n_ == o.n_ && den_ == o.den_ && rows_ == o.rows_;
}

std::vector<Cyclo> CycloIdeal::basis_elements() const {
    std::vector<Cyclo> b;
    for (const auto& r : rows_) b.push_back(cyclo_from_vec(n_, r, den_));
    return b;
}

CycloIdeal CycloIdeal::operator*(const CycloIdeal& o) const {
    assert(n_ == o.n_);
    if (is_zero() || o.is_zero()) return zero(n_);
    std::vector<Vec> rows;
    for (const auto& a : rows_) {
        Cyclo xa = cyclo_from_vec(n_, a, 1);
        for (const auto& b : o.rows_) {
            Cyclo prod = xa * cyclo_from_vec(n_, b, 1);
            rows.push_back(int_coeffs_scaled(prod, 1));
        }
    }
    return from_lattice(n_, std::move(rows), den_ * o.den_);
}

CycloIdeal CycloIdeal::scale(const Rat& q) const {
    if (q == 0) return zero(n_);
    CycloIdeal i;
    i.n_ = n_;
    Int num = q.get_num() > 0 ? Int(q.get_num()) : Int(-q.get_num());
    i.rows_ = rows_;
    for (auto& r : i.rows_)
        for (auto& x : r) x *= num;
    i.den_ = den_ * q.get_den();
    i.rows_ = hnf(std::move(i.rows_), rows_.empty() ? 0 : rows_[0].size());
    i.normalize();
    return i;
}

Rat CycloIdeal::norm() const {
    if (is_zero()) return Rat(0);
    std::size_t d = (std::size_t)euler_phi(n_);
    assert(rows_.size() == d);
    Int det = 1;
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t p = 0;
        while (rows_[i][p] == 0) ++p;
        det *= rows_[i][p];
    }
    Rat nm(det, pow_int(den_, (unsigned long)d));
    nm.canonicalize();
    return nm;
}

bool CycloIdeal::contains(const Cyclo& x) const {
    if (x.is_zero()) return true;
    if (is_zero()) return false;
    Cyclo xe = x.embed(n_);
    // need den_ * x integral
    Vec v;
    for (const auto& q : xe.coeffs()) {
        Rat s = q * Rat(den_);
        if (s.get_den() != 1) return false;
        v.push_back(s.get_num());
    }
    return in_lattice(rows_, v);
}

bool CycloIdeal::contains_ideal(const CycloIdeal& o) const {
    for (const auto& b : o.basis_elements())
        if (!contains(b)) return false;
    return true;
}

CycloIdeal CycloIdeal::inverse() const {
    if (is_zero()) throw std::domain_error("CycloIdeal: inverse of zero ideal");
    auto b = basis_elements();
    const std::size_t d = b.size();
    std::vector<std::vector<Rat>> gram(d, std::vector<Rat>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = i; k < d; ++k)
            gram[i][k] = gram[k][i] = (b[i] * b[k]).trace_to_Q();
    auto ginv = rat_inverse(std::move(gram));
    // dual basis, then multiply by the different generator
    Cyclo dg = different_generator(n_);
    std::vector<Cyclo> gens;
    for (std::size_t j = 0; j < d; ++j) {
        Cyclo dual;
        for (std::size_t k = 0; k < d; ++k)
            if (ginv[j][k] != 0) dual += Cyclo(ginv[j][k]) * b[k];
        gens.push_back(dual * dg);
    }
    return from_generators(n_, gens);
}

Cyclo different_generator(long n) {
    auto phi = fp::cyclotomic_poly(n);
    std::vector<Rat> deriv;
    for (std::size_t i = 1; i < phi.size(); ++i) deriv.push_back(Rat(phi[i] * Int(i)));
    return Cyclo::from_poly(n, deriv);
}

CycloIdeal inverse_different(long n) {
    return CycloIdeal::principal(n, different_generator(n).inv());
}

std::vector<PrimeAboveP> primes_above(long n, const Int& p) {
    long pl = to_long(p);
    long a, m;
    split_prime_part(n, pl, a, m);
    long e = (a == 0) ? 1 : euler_phi(n / m);
    auto factors = fp::factor_squarefree(fp::cyclotomic_mod_p(m, p), p);
    std::vector<PrimeAboveP> out;
    for (const auto& h : factors) {
        // Phi_n = Phi_m^{phi(p^a)} mod p, so the distinct irreducible factors
        // of Phi_n mod p are exactly the h_i; evaluate each at zeta_n
        Cyclo zm = Cyclo::zeta(n);
        Cyclo hz;
        Cyclo pw(Rat(1));
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i] != 0) hz += Cyclo(Rat(h[i])) * pw;
            pw = pw * zm;
        }
        PrimeAboveP pr{CycloIdeal::from_generators(n, {Cyclo(Rat(p)), hz}),
                       e, fp::deg(h)};
        out.push_back(std::move(pr));
    }
    return out;
}

std::vector<long> CycloIdeal::p_valuations(const Int& p) const {
    if (is_zero()) throw std::domain_error("p_valuations of zero ideal");
    auto primes = primes_above(n_, p);
    // valuation of the denominator part
    long vden = 0;
    Int d = den_;
    while (fdiv_r(d, p) == 0) {
        d = fdiv_q(d, p);
        ++vden;
    }
    std::vector<long> vals;
    CycloIdeal num = *this;
    num.den_ = 1;  // numerator lattice as an integral ideal
    for (const auto& pr : primes) {
        long v = 0;
        CycloIdeal pk = pr.ideal;
        while (pk.contains_ideal(num)) {
            ++v;
            pk = pk * pr.ideal;
        }
        vals.push_back(v - pr.e * vden);
    }
    return vals;
}

Cyclo cyclo_det(std::vector<std::vector<Cyclo>> m) {
    const std::size_t n = m.size();
    Cyclo det((Rat(1)));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return Cyclo();
        if (p != k) {
            std::swap(m[k], m[p]);
            det = -det;
        }
        det = det * m[k][k];
        Cyclo inv = m[k][k].inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Cyclo f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return det;
}

std::size_t cyclo_rank(std::vector<std::vector<Cyclo>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t p = rank;
        while (p < rows && m[p][j].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[rank], m[p]);
        Cyclo inv = m[rank][j].inv();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][j].is_zero()) continue;
            Cyclo f = m[i][j] * inv;
            for (std::size_t k = j; k < cols; ++k) m[i][k] = m[i][k] - f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

CycloIdeal fitting_ideal(const OModulePresentation& m) {
    if (m.r == 0) return CycloIdeal::unit(m.n);
    std::vector<std::vector<Cyclo>> full(m.r, std::vector<Cyclo>(m.c));
    for (std::size_t i = 0; i < m.r; ++i)
        for (std::size_t j = 0; j < m.c; ++j) full[i][j] = m.at(i, j);
    if (m.c < m.r || cyclo_rank(full) < m.r)
        throw std::domain_error("fitting_ideal: infinite cokernel");
    // all r x r minors over column subsets
    std::vector<Cyclo> minors;
    std::vector<std::size_t> idx(m.r);
    for (std::size_t i = 0; i < m.r; ++i) idx[i] = i;
    while (true) {
        std::vector<std::vector<Cyclo>> sub(m.r, std::vector<Cyclo>(m.r));
        for (std::size_t i = 0; i < m.r; ++i)
            for (std::size_t j = 0; j < m.r; ++j) sub[i][j] = full[i][idx[j]];
        Cyclo d = cyclo_det(std::move(sub));
        if (!d.is_zero()) minors.push_back(std::move(d));
        // next combination
        long i = (long)m.r - 1;
        while (i >= 0 && idx[i] == m.c - m.r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (std::size_t k = i + 1; k < m.r; ++k) idx[k] = idx[k - 1] + 1;
    }
    if (minors.empty()) return CycloIdeal::zero(m.n);
    return CycloIdeal::from_generators(m.n, minors);
}

}  // namespace annkit
