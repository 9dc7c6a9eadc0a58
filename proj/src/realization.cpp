#include "annkit/realization.hpp"

#include "annkit/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace annkit {

std::vector<std::vector<Cyclo>> cmat_mul(const std::vector<std::vector<Cyclo>>& a,
                                         const std::vector<std::vector<Cyclo>>& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    std::vector<std::vector<Cyclo>> c(n, std::vector<Cyclo>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

Cyclo cmat_trace(const std::vector<std::vector<Cyclo>>& a) {
    Cyclo t;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

namespace {

long minimal_value_conductor(const std::vector<Cyclo>& values) {
    long m = 1;
    for (const auto& v : values) m = std::lcm(m, v.reduce_conductor().conductor());
    return m;
}

// stabilizer of chi in (Z/e)^*
std::vector<long> chi_stabilizer(const Character& chi) {
    long e = chi.group->exponent();
    std::vector<long> stab;
    if (e == 1) return {1};
    for (long k = 1; k < e; ++k) {
        if (std::gcd(k, e) != 1) continue;
        if (galois_twist(chi, k) == chi) stab.push_back(k);
    }
    return stab;
}

// Q(chi) = Q(zeta_m0) iff the stabilizer is exactly the kernel of
// (Z/e)^* -> (Z/m0)^*
long cyclotomic_character_field(const Character& chi, const std::vector<long>& stab) {
    long e = chi.group->exponent();
    if (e == 1) return 1;
    for (long m0 : divisors(e)) {
        std::vector<long> ker;
        for (long k = 1; k < e; ++k)
            if (std::gcd(k, e) == 1 && k % m0 == 1 % m0) ker.push_back(k);
        if (ker == stab) return m0;
    }
    return -1;
}

Realization linear_realization(const Character& chi) {
    Realization r;
    r.group = chi.group;
    r.dim = 1;
    r.m = minimal_value_conductor(chi.values);
    r.mats.resize(chi.group->order());
    for (int g = 0; g < chi.group->order(); ++g)
        r.mats[g] = {{chi.at(g).reduce_conductor().embed(r.m)}};
    return r;
}

// solve B x = v with B's columns linearly independent over Q(zeta)
std::vector<Cyclo> cmat_solve(const std::vector<std::vector<Cyclo>>& bcols,
                              std::vector<Cyclo> v) {
    const std::size_t n = v.size(), m = bcols.size();
    std::vector<std::vector<Cyclo>> aug(n, std::vector<Cyclo>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = bcols[j][i];
        aug[i][m] = v[i];
    }
    std::vector<long> pivot(m, -1);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < m && rank < n; ++j) {
        std::size_t p = rank;
        while (p < n && aug[p][j].is_zero()) ++p;
        if (p == n) continue;
        std::swap(aug[rank], aug[p]);
        Cyclo inv = aug[rank][j].inv();
        for (std::size_t k = 0; k <= m; ++k) aug[rank][k] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || aug[i][j].is_zero()) continue;
            Cyclo f = aug[i][j];
            for (std::size_t k = 0; k <= m; ++k) aug[i][k] -= f * aug[rank][k];
        }
        pivot[j] = (long)rank;
        ++rank;
    }
    std::vector<Cyclo> x(m);
    for (std::size_t j = 0; j < m; ++j)
        if (pivot[j] != -1) x[j] = aug[pivot[j]][m];
    return x;
}

// permutation-module projection: requires <Ind_H^G 1, chi> = 1 and Q(chi)
// cyclotomic = Q(zeta_m0)
bool try_perm_projection(const Character& chi, long m0, const Subgroup& h,
                         Realization& out) {
    const FiniteGroup& g = *chi.group;
    // left cosets of H
    std::vector<int> coset_of(g.order(), -1);
    std::vector<int> reps;
    for (int a = 0; a < g.order(); ++a) {
        if (coset_of[a] != -1) continue;
        int id = (int)reps.size();
        for (int hh : h.elements()) coset_of[g.mul(a, hh)] = id;
        reps.push_back(a);
    }
    const std::size_t r = reps.size();
    // multiplicity <Ind 1, chi> = (1/|H|) sum_{x in H} chi(x)
    Cyclo mult;
    for (int x : h.elements()) mult += chi.at(x);
    mult *= Cyclo(Rat(1, h.order()));
    if (mult != Cyclo(1)) return false;
    // projector e_chi on the permutation module, entries in Q(zeta_m0)
    std::vector<std::vector<Cyclo>> proj(r, std::vector<Cyclo>(r));
    for (int x = 0; x < g.order(); ++x) {
        Cyclo w = chi.at(g.inverse(x)).reduce_conductor();
        if (w.is_zero()) continue;
        w = w.embed(m0);
        // permutation action of x on cosets: aH -> xaH
        for (std::size_t j = 0; j < r; ++j) {
            std::size_t i = (std::size_t)coset_of[g.mul(x, reps[j])];
            proj[i][j] += w;
        }
    }
    Cyclo scale(Rat(chi.degree, g.order()));
    for (auto& row : proj)
        for (auto& c : row) c *= scale;
    // column space basis of the projector
    std::vector<std::vector<Cyclo>> bcols;
    {
        std::vector<std::vector<Cyclo>> work(r, std::vector<Cyclo>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) work[i][j] = proj[i][j];
        // column reduction: pick pivot columns of proj
        std::vector<std::vector<Cyclo>> rows = work;
        std::size_t rank = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t j = 0; j < r && rank < r; ++j) {
            std::size_t p = rank;
            while (p < r && rows[p][j].is_zero()) ++p;
            if (p == r) continue;
            std::swap(rows[rank], rows[p]);
            Cyclo inv = rows[rank][j].inv();
            for (std::size_t k = 0; k < r; ++k) rows[rank][k] *= inv;
            for (std::size_t i = 0; i < r; ++i) {
                if (i == rank || rows[i][j].is_zero()) continue;
                Cyclo f = rows[i][j];
                for (std::size_t k = 0; k < r; ++k) rows[i][k] -= f * rows[rank][k];
            }
            pivots.push_back(j);
            ++rank;
        }
        for (std::size_t j : pivots) {
            std::vector<Cyclo> col(r);
            for (std::size_t i = 0; i < r; ++i) col[i] = proj[i][j];
            bcols.push_back(std::move(col));
        }
    }
    if ((long)bcols.size() != chi.degree) return false;
    // action matrices in the basis bcols
    out.group = &g;
    out.m = m0;
    out.dim = (std::size_t)chi.degree;
    out.mats.assign(g.order(), {});
    for (int x = 0; x < g.order(); ++x) {
        std::vector<std::vector<Cyclo>> a(out.dim, std::vector<Cyclo>(out.dim));
        for (std::size_t j = 0; j < out.dim; ++j) {
            // x . bcols[j]
            std::vector<Cyclo> v(r);
            for (std::size_t i = 0; i < r; ++i) {
                std::size_t xi = (std::size_t)coset_of[g.mul(x, reps[i])];
                v[xi] += bcols[j][i];
            }
            auto coords = cmat_solve(bcols, std::move(v));
            for (std::size_t i = 0; i < out.dim; ++i) a[i][j] = coords[i];
        }
        out.mats[x] = std::move(a);
    }
    return true;
}

bool try_monomial(const Character& chi, Realization& out) {
    const FiniteGroup& g = *chi.group;
    auto subs = all_subgroups(g);
    for (const auto& h : subs) {
        if (g.order() / h.order() != chi.degree) continue;
        std::vector<int> to_sub;
        FiniteGroup hg = h.as_group(&to_sub);
        auto htbl = character_table(hg);
        for (const auto& psi : htbl) {
            if (psi.degree != 1) continue;
            if (!(induce(h, psi) == chi)) continue;
            long m = minimal_value_conductor(psi.values);
            // coset reps
            std::vector<int> coset_of(g.order(), -1);
            std::vector<int> reps;
            for (int a = 0; a < g.order(); ++a) {
                if (coset_of[a] != -1) continue;
                int id = (int)reps.size();
                for (int hh : h.elements()) coset_of[g.mul(a, hh)] = id;
                reps.push_back(a);
            }
            const std::size_t r = reps.size();
            out.group = &g;
            out.m = m;
            out.dim = r;
            out.mats.assign(g.order(), {});
            for (int x = 0; x < g.order(); ++x) {
                std::vector<std::vector<Cyclo>> a(r, std::vector<Cyclo>(r));
                for (std::size_t j = 0; j < r; ++j) {
                    int y = g.mul(x, reps[j]);
                    std::size_t i = (std::size_t)coset_of[y];
                    int hh = g.mul(g.inverse(reps[i]), y);
                    assert(to_sub[hh] != -1);
                    a[i][j] = psi.values[hg.class_of(to_sub[hh])]
                                  .reduce_conductor()
                                  .embed(m);
                }
                out.mats[x] = std::move(a);
            }
            return true;
        }
    }
    return false;
}

}  // namespace

Realization find_realization(const Character& chi) {
    const FiniteGroup& g = *chi.group;
    if (chi.degree == 1) return linear_realization(chi);
    auto stab = chi_stabilizer(chi);
    long m0 = cyclotomic_character_field(chi, stab);
    Realization out;
    if (m0 > 0) {
        // permutation path, largest subgroups first (smallest modules)
        auto subs = all_subgroups(g);
        std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
            if (a.order() != b.order()) return a.order() > b.order();
            return a.elements() < b.elements();
        });
        for (const auto& h : subs) {
            if (h.order() == g.order()) continue;
            if (try_perm_projection(chi, m0, h, out)) return out;
        }
    }
    if (try_monomial(chi, out)) return out;
    throw std::runtime_error(
        "find_realization: no monomial or permutation realization; supply one");
}

Realization find_monomial_realization(const Character& chi) {
    if (chi.degree == 1) return linear_realization(chi);
    Realization out;
    if (try_monomial(chi, out)) return out;
    throw std::runtime_error(
        "find_monomial_realization: character is not monomial; supply a realization");
}

CharacterField character_field(const Character& chi) {
    CharacterField cf;
    cf.e = chi.group->exponent();
    cf.stabilizer = chi_stabilizer(chi);
    long phi_e = cf.e == 1 ? 1 : euler_phi(cf.e);
    cf.field_degree = phi_e / (long)cf.stabilizer.size();
    Realization r = find_realization(chi);
    long phi_m = r.m == 1 ? 1 : euler_phi(r.m);
    assert(phi_m % cf.field_degree == 0);
    cf.d_chi = phi_m / cf.field_degree;
    return cf;
}

}  // namespace annkit
