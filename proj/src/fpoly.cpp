#include "annkit/fpoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace annkit::fp {

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

long deg(const Poly& f) { return (long)f.size() - 1; }

Poly add(const Poly& a, const Poly& b, const Int& p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
        r[i] = fdiv_r(r[i], p);
    }
    return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, const Int& p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
        r[i] = fdiv_r(r[i], p);
    }
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& x : r) x = fdiv_r(x, p);
    return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const Int& p) {
    assert(!b.empty());
    Poly r = a, q;
    if (a.size() < b.size()) return {q, r};
    q.assign(a.size() - b.size() + 1, 0);
    Int inv_lead = invmod(b.back(), p);
    for (long i = (long)a.size() - (long)b.size(); i >= 0; --i) {
        if ((std::size_t)(i + deg(b)) >= r.size() || r[i + deg(b)] == 0) continue;
        Int f = fdiv_r(r[i + deg(b)] * inv_lead, p);
        q[i] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = fdiv_r(r[i + j] - f * b[j], p);
    }
    return {trim(std::move(q)), trim(std::move(r))};
}

Poly mod(const Poly& a, const Poly& b, const Int& p) { return divmod(a, b, p).second; }

Poly monic(Poly a, const Int& p) {
    a = trim(std::move(a));
    if (a.empty()) return a;
    Int inv = invmod(a.back(), p);
    for (auto& x : a) x = fdiv_r(x * inv, p);
    return a;
}

Poly gcd(Poly a, Poly b, const Int& p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

Poly powmod(const Poly& base, Int e, const Poly& m, const Int& p) {
    Poly r = {Int(1)}, b = mod(base, m, p);
    while (e > 0) {
        if (fdiv_r(e, 2) == 1) r = mod(mul(r, b, p), m, p);
        e = fdiv_q(e, 2);
        if (e > 0) b = mod(mul(b, b, p), m, p);
    }
    return r;
}

Poly xn_minus_1(long n, const Int& p) {
    Poly f(n + 1, 0);
    f[0] = fdiv_r(Int(-1), p);
    f[n] = 1;
    return trim(std::move(f));
}

std::vector<Int> cyclotomic_poly(long n) {
    static std::map<long, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // divide x^n - 1 by prod of Phi_d, d | n, d < n (exact division over Z)
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        std::vector<Int> phi_d = cyclotomic_poly(d);
        // exact polynomial division num / phi_d
        std::vector<Int> q(num.size() - phi_d.size() + 1, 0);
        std::vector<Int> r = num;
        for (long i = (long)q.size() - 1; i >= 0; --i) {
            Int f = r[i + phi_d.size() - 1];  // phi_d monic
            q[i] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < phi_d.size(); ++j) r[i + j] -= f * phi_d[j];
        }
        num = std::move(q);
    }
    cache[n] = num;
    return num;
}

Poly cyclotomic_mod_p(long n, const Int& p) {
    auto z = cyclotomic_poly(n);
    for (auto& x : z) x = fdiv_r(x, p);
    return trim(std::move(z));
}

std::vector<Poly> equal_degree_factor(const Poly& f, long d, const Int& p) {
    std::vector<Poly> out, work = {monic(f, p)};
    if (deg(work[0]) <= 0) return {};
    Rng rng(0x5eedf00dULL + (unsigned long)d);
    Int q_exp = (pow_int(p, (unsigned long)d) - 1) / 2;
    while (!work.empty()) {
        Poly g = std::move(work.back());
        work.pop_back();
        if (deg(g) == d) {
            out.push_back(std::move(g));
            continue;
        }
        // random splitting attempt
        Poly a(deg(g), 0);
        for (auto& x : a) x = fdiv_r(Int(rng.uniform(0, 1L << 30)), p);
        a = trim(std::move(a));
        if (a.empty()) {
            work.push_back(std::move(g));
            continue;
        }
        Poly h;
        if (p == 2) {
            // trace map splitting
            Poly t = a, cur = a;
            for (long i = 1; i < d; ++i) {
                cur = mod(mul(cur, cur, p), g, p);
                t = add(t, cur, p);
            }
            h = gcd(g, t, p);
        } else {
            Poly b = powmod(a, q_exp, g, p);
            b = sub(b, {Int(1)}, p);
            h = gcd(g, b, p);
        }
        if (deg(h) <= 0 || deg(h) == deg(g)) {
            work.push_back(std::move(g));
            continue;
        }
        work.push_back(divmod(g, h, p).first);
        work.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly> factor_squarefree(const Poly& f, const Int& p) {
    std::vector<Poly> out;
    Poly g = monic(f, p);
    // strip root-zero factor
    if (!g.empty() && g[0] == 0) {
        out.push_back({Int(0), Int(1)});
        std::size_t k = 0;
        while (g[k] == 0) ++k;
        g.erase(g.begin(), g.begin() + k);
    }
    Poly x = {Int(0), Int(1)};
    Poly h = x;  // x^(p^i) mod g
    long i = 0;
    while (deg(g) > 0) {
        ++i;
        if (deg(g) < 2 * i) {
            out.push_back(g);
            break;
        }
        h = powmod(h, p, g, p);
        Poly gd = gcd(g, sub(h, x, p), p);
        if (deg(gd) > 0) {
            for (auto& irr : equal_degree_factor(gd, i, p)) out.push_back(irr);
            g = divmod(g, gd, p).first;
            h = mod(h, g, p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace annkit::fp
