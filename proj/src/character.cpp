#include "annkit/character.hpp"

#include "annkit/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace annkit {

namespace {

// ---- small dense linear algebra over F_p (p < 2^15, entries in long) ----

using FVec = std::vector<long>;
using FMat = std::vector<FVec>;  // list of columns

long fmod(long x, long p) { return ((x % p) + p) % p; }

long fpow(long b, long e, long p) {
    long r = 1 % p;
    b = fmod(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        e >>= 1;
        b = b * b % p;
    }
    return r;
}

long finv(long a, long p) { return fpow(fmod(a, p), p - 2, p); }

FVec mat_apply(const std::vector<FVec>& rows, const FVec& v, long p) {
    FVec w(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        long s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s = (s + rows[i][j] * v[j]) % p;
        w[i] = s;
    }
    return w;
}

// kernel of a square matrix given by rows; returns basis columns
std::vector<FVec> fp_kernel(std::vector<FVec> rows, long p) {
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<long> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < n && rank < rows.size(); ++j) {
        std::size_t pr = rank;
        while (pr < rows.size() && rows[pr][j] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        long inv = finv(rows[rank][j], p);
        for (std::size_t k = 0; k < n; ++k) rows[rank][k] = rows[rank][k] * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][j] == 0) continue;
            long f = rows[i][j];
            for (std::size_t k = 0; k < n; ++k)
                rows[i][k] = fmod(rows[i][k] - f * rows[rank][k], p);
        }
        pivot_of_col[j] = (long)rank;
        ++rank;
    }
    std::vector<FVec> ker;
    for (std::size_t j = 0; j < n; ++j) {
        if (pivot_of_col[j] != -1) continue;
        FVec v(n, 0);
        v[j] = 1;
        for (std::size_t jj = 0; jj < n; ++jj)
            if (pivot_of_col[jj] != -1) v[jj] = fmod(-rows[pivot_of_col[jj]][j], p);
        ker.push_back(std::move(v));
    }
    return ker;
}

// solve B x = v where B's columns are a linearly independent family
FVec fp_solve(const std::vector<FVec>& cols, const FVec& v, long p) {
    const std::size_t n = v.size(), m = cols.size();
    std::vector<FVec> aug(n, FVec(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = cols[j][i];
        aug[i][m] = v[i];
    }
    std::size_t rank = 0;
    std::vector<long> pivot_col(m, -1);
    for (std::size_t j = 0; j < m && rank < n; ++j) {
        std::size_t pr = rank;
        while (pr < n && aug[pr][j] == 0) ++pr;
        if (pr == n) continue;
        std::swap(aug[rank], aug[pr]);
        long inv = finv(aug[rank][j], p);
        for (std::size_t k = 0; k <= m; ++k) aug[rank][k] = aug[rank][k] * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || aug[i][j] == 0) continue;
            long f = aug[i][j];
            for (std::size_t k = 0; k <= m; ++k)
                aug[i][k] = fmod(aug[i][k] - f * aug[rank][k], p);
        }
        pivot_col[j] = (long)rank;
        ++rank;
    }
    FVec x(m, 0);
    for (std::size_t j = 0; j < m; ++j)
        if (pivot_col[j] != -1) x[j] = aug[pivot_col[j]][m];
    return x;
}

long smallest_primitive_root(long p) {
    std::vector<long> prime_factors;
    for (auto [q, e] : factorize(p - 1)) prime_factors.push_back(q);
    for (long h = 2; h < p; ++h) {
        bool ok = true;
        for (long q : prime_factors)
            if (fpow(h, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return h;
    }
    throw std::logic_error("no primitive root");
}

// descending coefficient order within a degree, so the trivial character
// (all-ones) leads the linear block
bool char_value_less(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto &ca = a[i].coeffs(), &cb = b[i].coeffs();
        if (ca != cb) return cb < ca;
    }
    return false;
}

std::vector<Character> abelian_table(const FiniteGroup& g) {
    const long n = g.order(), e = g.exponent();
    // small generating set
    std::vector<int> gens;
    {
        Subgroup h = Subgroup::trivial(g);
        for (int a = 0; a < n && h.order() < n; ++a) {
            if (h.contains(a)) continue;
            gens.push_back(a);
            std::vector<int> gg = h.elements();
            gg.push_back(a);
            h = Subgroup::generated(g, gg);
        }
    }
    const std::size_t s = gens.size();
    // BFS coordinates c(x) in Z^s with prod gens[i]^{c_i} = x
    std::vector<Vec> coord(n);
    std::vector<int> bfs = {0};
    coord[0] = Vec(s, 0);
    std::vector<char> vis(n, 0);
    vis[0] = 1;
    std::vector<Vec> relations;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        int x = bfs[head];
        for (std::size_t i = 0; i < s; ++i) {
            int y = g.mul(x, gens[i]);
            Vec cy = coord[x];
            cy[i] += 1;
            if (!vis[y]) {
                vis[y] = 1;
                coord[y] = std::move(cy);
                bfs.push_back(y);
            } else {
                // fundamental cycle: c(x) + e_i - c(y) is a relation
                Vec rel = std::move(cy);
                for (std::size_t j = 0; j < s; ++j) rel[j] -= coord[y][j];
                relations.push_back(std::move(rel));
            }
        }
    }
    auto snf = snf_lattice(std::move(relations), s);
    // invariant factors d_j (all positive since G is finite); y = c(x) * Q
    std::vector<long> d(s);
    for (std::size_t j = 0; j < s; ++j) d[j] = to_long(snf.d[j]);
    std::vector<std::vector<long>> ycoord(n);
    for (int x = 0; x < n; ++x) {
        Vec y = mat_vec(mat_transpose(snf.Q), coord[x]);
        std::vector<long> yl(s);
        for (std::size_t j = 0; j < s; ++j) {
            assert(d[j] > 0);
            yl[j] = to_long(fdiv_r(y[j], d[j]));
        }
        ycoord[x] = std::move(yl);
    }
    // characters: one per tuple (t_j mod d_j)
    std::vector<Character> table;
    std::vector<long> t(s, 0);
    while (true) {
        Character chi;
        chi.group = &g;
        chi.degree = 1;
        chi.values.resize(g.num_classes());
        for (int x = 0; x < n; ++x) {
            long exp = 0;
            for (std::size_t j = 0; j < s; ++j)
                exp = (exp + t[j] * ycoord[x][j] % e * (e / d[j])) % e;
            chi.values[g.class_of(x)] = Cyclo::zeta(e, exp);
        }
        table.push_back(std::move(chi));
        std::size_t j = 0;
        while (j < s && ++t[j] == d[j]) t[j++] = 0;
        if (j == s) break;
    }
    assert((long)table.size() == n);
    return table;
}

std::vector<Character> dixon_table(const FiniteGroup& g) {
    const long n = g.order(), e = g.exponent();
    const std::size_t k = g.num_classes();
    // prime p = 1 mod e, p > 2|G|
    long p = e + 1;
    while (p <= 2 * n || !is_prime(Int(p))) p += e;
    // structure constants a[i][j][l]
    std::vector<long> csize(k);
    for (std::size_t c = 0; c < k; ++c) csize[c] = (long)g.classes()[c].size();
    std::vector<std::vector<std::vector<long>>> a(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            for (int x : g.classes()[i])
                for (int y : g.classes()[j]) ++a[i][j][g.class_of(g.mul(x, y))];
            for (std::size_t l = 0; l < k; ++l) {
                assert(a[i][j][l] % csize[l] == 0);
                a[i][j][l] /= csize[l];
            }
        }
    // split the class algebra into common eigenvectors
    std::vector<std::vector<FVec>> spaces;  // each: list of basis columns
    {
        std::vector<FVec> whole;
        for (std::size_t j = 0; j < k; ++j) {
            FVec ej(k, 0);
            ej[j] = 1;
            whole.push_back(std::move(ej));
        }
        spaces.push_back(std::move(whole));
    }
    for (std::size_t i = 1; i < k; ++i) {
        bool all_split = std::all_of(spaces.begin(), spaces.end(),
                                     [](const auto& s) { return s.size() == 1; });
        if (all_split) break;
        // rows of M_i: (M_i)_{j,l} = a[i][j][l] mod p
        std::vector<FVec> rows(k, FVec(k));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) rows[j][l] = a[i][j][l] % p;
        std::vector<std::vector<FVec>> next;
        for (auto& space : spaces) {
            const std::size_t dim = space.size();
            if (dim == 1) {
                next.push_back(std::move(space));
                continue;
            }
            // action matrix R of M_i on the subspace
            std::vector<FVec> rcols;
            for (const auto& b : space) rcols.push_back(fp_solve(space, mat_apply(rows, b, p), p));
            // R rows for kernel computation
            std::vector<FVec> rrows(dim, FVec(dim));
            for (std::size_t cix = 0; cix < dim; ++cix)
                for (std::size_t rix = 0; rix < dim; ++rix) rrows[rix][cix] = rcols[cix][rix];
            std::size_t found = 0;
            for (long lam = 0; lam < p && found < dim; ++lam) {
                std::vector<FVec> shifted = rrows;
                for (std::size_t d2 = 0; d2 < dim; ++d2)
                    shifted[d2][d2] = fmod(shifted[d2][d2] - lam, p);
                auto ker = fp_kernel(std::move(shifted), p);
                if (ker.empty()) continue;
                found += ker.size();
                std::vector<FVec> sub;
                for (const auto& kv : ker) {
                    FVec col(k, 0);
                    for (std::size_t j2 = 0; j2 < dim; ++j2)
                        for (std::size_t t2 = 0; t2 < k; ++t2)
                            col[t2] = (col[t2] + kv[j2] * space[j2][t2]) % p;
                    sub.push_back(std::move(col));
                }
                next.push_back(std::move(sub));
            }
            assert(found == dim);
        }
        spaces = std::move(next);
    }
    assert(spaces.size() == k);
    // each 1-dim space -> a character
    long z = fpow(smallest_primitive_root(p), (p - 1) / e, p);
    long zinv = finv(z, p);
    std::vector<Character> table;
    for (const auto& space : spaces) {
        FVec u = space[0];
        long u0inv = finv(u[0], p);  // identity class is index 0
        for (auto& x : u) x = x * u0inv % p;
        // degree
        long s = 0;
        for (std::size_t l = 0; l < k; ++l)
            s = (s + u[l] * u[(std::size_t)g.inverse_class((int)l)] % p *
                         finv(csize[l] % p, p)) % p;
        long dsq = (n % p) * finv(s, p) % p;
        long d = 0;
        for (long cand = 1; cand * cand <= n; ++cand)
            if (cand * cand % p == dsq) {
                d = cand;
                break;
            }
        assert(d > 0);
        // chi values mod p per class
        FVec xv(k);
        for (std::size_t l = 0; l < k; ++l)
            xv[l] = d % p * u[l] % p * finv(csize[l] % p, p) % p;
        // lift each class value to Q(zeta_e)
        Character chi;
        chi.group = &g;
        chi.degree = d;
        chi.values.resize(k);
        long einv = finv(e % p, p);
        for (std::size_t l = 0; l < k; ++l) {
            int rep = g.class_rep((int)l);
            std::vector<Rat> poly(e, Rat(0));
            for (long t = 0; t < e; ++t) {
                long c = 0;
                for (long s2 = 0; s2 < e; ++s2) {
                    long cls = g.class_of(g.power(rep, s2));
                    c = (c + xv[(std::size_t)cls] * fpow(zinv, s2 * t % e, p)) % p;
                }
                c = c * einv % p;
                assert(c <= n);  // true coefficients are small
                poly[t] = Rat(c);
            }
            chi.values[l] = Cyclo::from_poly(e, poly);
        }
        table.push_back(std::move(chi));
    }
    return table;
}

}  // namespace

std::vector<Character> character_table(const FiniteGroup& g) {
    std::vector<Character> table =
        g.is_abelian() ? abelian_table(g) : dixon_table(g);
    std::sort(table.begin(), table.end(), [](const Character& x, const Character& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        return char_value_less(x.values, y.values);
    });
    return table;
}

Cyclo inner_product(const Character& chi, const Character& psi) {
    const FiniteGroup& g = *chi.group;
    Cyclo s;
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        Cyclo term = chi.values[c] * psi.values[c].conj();
        s += Cyclo(Rat((long)g.classes()[c].size())) * term;
    }
    return s * Cyclo(Rat(1, g.order()));
}

Character restrict_character(const Character& chi, const Subgroup& h) {
    FiniteGroup hg = h.as_group();
    Character r;
    r.degree = chi.degree;
    r.values.resize(hg.num_classes());
    for (std::size_t c = 0; c < hg.num_classes(); ++c) {
        int rep_sub = hg.class_rep((int)c);
        r.values[c] = chi.at(h.elements()[rep_sub]);
    }
    r.group = nullptr;  // caller pairs it with h.as_group() as needed
    return r;
}

Character induce(const Subgroup& h, const Character& psi) {
    const FiniteGroup& g = h.parent();
    std::vector<int> to_sub;
    FiniteGroup hg = h.as_group(&to_sub);
    Character ind;
    ind.group = &g;
    ind.values.resize(g.num_classes());
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        int rep = g.class_rep((int)c);
        Cyclo s;
        for (int x = 0; x < g.order(); ++x) {
            int cx = g.conjugate(x, rep);
            if (to_sub[cx] == -1) continue;
            s += psi.values[hg.class_of(to_sub[cx])];
        }
        ind.values[c] = s * Cyclo(Rat(1, h.order()));
    }
    ind.degree = to_long(ind.values[0].rational_value().get_num());
    return ind;
}

Character inflate(const FiniteGroup& g, const std::vector<int>& proj,
                  const Character& phi) {
    Character chi;
    chi.group = &g;
    chi.degree = phi.degree;
    chi.values.resize(g.num_classes());
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        int rep = g.class_rep((int)c);
        chi.values[c] = phi.values[phi.group->class_of(proj[rep])];
    }
    return chi;
}

Subgroup character_kernel(const Character& chi) {
    const FiniteGroup& g = *chi.group;
    Cyclo deg((Rat(chi.degree)));
    std::vector<int> ker;
    for (int x = 0; x < g.order(); ++x)
        if (chi.at(x) == deg) ker.push_back(x);
    return Subgroup(g, std::move(ker));
}

DeflateResult deflate_through_kernel(const Character& chi) {
    const FiniteGroup& g = *chi.group;
    Subgroup ker = character_kernel(chi);
    DeflateResult res;
    res.quotient = quotient_group(g, ker, &res.proj);
    // preimage of each quotient class rep
    res.phi.group = &res.quotient;
    res.phi.degree = chi.degree;
    res.phi.values.resize(res.quotient.num_classes());
    for (std::size_t c = 0; c < res.quotient.num_classes(); ++c) {
        int qrep = res.quotient.class_rep((int)c);
        for (int x = 0; x < g.order(); ++x)
            if (res.proj[x] == qrep) {
                res.phi.values[c] = chi.at(x);
                break;
            }
    }
    return res;
}

Character galois_twist(const Character& chi, long k) {
    Character t = chi;
    for (auto& v : t.values) v = v.galois(k % v.conductor() == 0 ? 1 : k);
    return t;
}

std::vector<std::pair<long, Character>> galois_orbit(const Character& chi) {
    long e = chi.group->exponent();
    std::vector<std::pair<long, Character>> orbit;
    for (long k = 1; k < e || (e == 1 && k == 1); ++k) {
        if (e > 1 && std::gcd(k, e) != 1) continue;
        Character t = galois_twist(chi, k);
        bool dup = std::any_of(orbit.begin(), orbit.end(),
                               [&](const auto& pr) { return pr.second == t; });
        if (!dup) orbit.emplace_back(k, std::move(t));
        if (e == 1) break;
    }
    return orbit;
}

bool is_odd(const Character& chi, int j) {
    const FiniteGroup& g = *chi.group;
    if (g.mul(j, j) != 0 || j == 0)
        throw std::invalid_argument("j must be an involution");
    if (g.classes()[g.class_of(j)].size() != 1)
        throw std::invalid_argument("j must be central");
    return chi.at(j) == Cyclo(Rat(-chi.degree));
}

}  // namespace annkit
