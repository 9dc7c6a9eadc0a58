#include "annkit/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace annkit {

Mat mat_mul(const Mat& x, const Mat& y) {
    assert(x.c == y.r);
    Mat z(x.r, y.c);
    for (std::size_t i = 0; i < x.r; ++i)
        for (std::size_t k = 0; k < x.c; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0) continue;
            for (std::size_t j = 0; j < y.c; ++j) z.at(i, j) += xv * y.at(k, j);
        }
    return z;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    assert(m.c == v.size());
    Vec w(m.r, 0);
    for (std::size_t i = 0; i < m.r; ++i)
        for (std::size_t j = 0; j < m.c; ++j)
            if (m.at(i, j) != 0) w[i] += m.at(i, j) * v[j];
    return w;
}

Mat mat_transpose(const Mat& m) {
    Mat t(m.c, m.r);
    for (std::size_t i = 0; i < m.r; ++i)
        for (std::size_t j = 0; j < m.c; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Mat mat_pow(const Mat& m, long e) {
    assert(m.r == m.c && e >= 0);
    Mat r = Mat::identity(m.r), b = m;
    while (e > 0) {
        if (e & 1) r = mat_mul(r, b);
        e >>= 1;
        if (e) b = mat_mul(b, b);
    }
    return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
    assert(x.r == y.r && x.c == y.c);
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    assert(x.r == y.r && x.c == y.c);
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

namespace {

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Plain row HNF; if red != 0, entries may be freely reduced mod red (callers
// must re-adjoin red*Z^n afterwards to restore the exact span).
std::vector<Vec> hnf_core(std::vector<Vec>& rows, std::size_t n, const Int& red) {
    std::size_t pr = 0;
    for (std::size_t col = 0; col < n && pr < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = pr; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    cmp(abs(rows[i][col]), abs(rows[best][col])) < 0)
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[pr], rows[best]);
            bool clean = true;
            for (std::size_t i = pr + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = fdiv_q(rows[i][col], rows[pr][col]);
                for (std::size_t j = col; j < n; ++j) {
                    rows[i][j] -= q * rows[pr][j];
                    if (red != 0) rows[i][j] = fdiv_r(rows[i][j], red);
                }
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) {
                if (rows[pr][col] < 0)
                    for (auto& x : rows[pr]) x = -x;
                for (std::size_t j = 0; j < pr; ++j) {
                    if (rows[j][col] == 0) continue;
                    Int q = fdiv_q(rows[j][col], rows[pr][col]);
                    for (std::size_t k = col; k < n; ++k) rows[j][k] -= q * rows[pr][k];
                }
                ++pr;
                break;
            }
        }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const Vec& v) { return is_zero(v); }),
               rows.end());
    return rows;
}

}  // namespace

std::vector<Vec> hnf(std::vector<Vec> rows, std::size_t n, const Int& mod) {
    for (auto& r : rows) assert(r.size() == n);
    if (mod == 0) return hnf_core(rows, n, mod);
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = mod;
        rows.push_back(std::move(e));
    }
    for (auto& r : rows)
        for (auto& x : r) x = fdiv_r(x, mod);
    hnf_core(rows, n, mod);
    // restore mod*Z^n which free reduction may have eaten
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = mod;
        rows.push_back(std::move(e));
    }
    Int zero = 0;
    return hnf_core(rows, n, zero);
}

Vec hnf_reduce(const std::vector<Vec>& basis, Vec v, std::vector<Int>* coeffs) {
    if (coeffs) coeffs->assign(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t p = 0;
        while (p < basis[i].size() && basis[i][p] == 0) ++p;
        if (p == basis[i].size()) continue;
        Int q = fdiv_q(v[p], basis[i][p]);
        if (q == 0) continue;
        for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * basis[i][j];
        if (coeffs) (*coeffs)[i] = q;
    }
    return v;
}

bool in_lattice(const std::vector<Vec>& basis, const Vec& v) {
    return is_zero(hnf_reduce(basis, v));
}

std::optional<std::vector<Int>> lattice_coords(const std::vector<Vec>& basis, const Vec& v) {
    std::vector<Int> c;
    if (!is_zero(hnf_reduce(basis, v, &c))) return std::nullopt;
    return c;
}

std::vector<Vec> int_kernel(const std::vector<Vec>& rows, std::size_t n) {
    const std::size_t m = rows.size();
    std::vector<Vec> aug;
    aug.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vec v(n + m, 0);
        std::copy(rows[i].begin(), rows[i].end(), v.begin());
        v[n + i] = 1;
        aug.push_back(std::move(v));
    }
    auto h = hnf(std::move(aug), n + m);
    std::vector<Vec> ker;
    for (const auto& row : h) {
        bool left_zero = std::all_of(row.begin(), row.begin() + n,
                                     [](const Int& x) { return x == 0; });
        if (left_zero) ker.emplace_back(row.begin() + n, row.end());
    }
    return ker;
}

std::vector<Vec> preimage_lattice(const Mat& A, const std::vector<Vec>& target,
                                  const Int& mod) {
    const std::size_t r = A.r, a = A.c;
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < a; ++j) {
        Vec v(r + a, 0);
        for (std::size_t i = 0; i < r; ++i) v[i] = A.at(i, j);
        v[r + j] = 1;
        rows.push_back(std::move(v));
    }
    for (const auto& t : target) {
        assert(t.size() == r);
        Vec v(r + a, 0);
        std::copy(t.begin(), t.end(), v.begin());
        rows.push_back(std::move(v));
    }
    auto h = hnf(std::move(rows), r + a, mod);
    std::vector<Vec> pre;
    for (const auto& row : h) {
        bool left_zero = std::all_of(row.begin(), row.begin() + r,
                                     [](const Int& x) { return x == 0; });
        if (left_zero) {
            Vec x(row.begin() + r, row.end());
            if (!is_zero(x)) pre.push_back(std::move(x));
        }
    }
    return pre;
}

SnfResult snf_lattice(std::vector<Vec> rows, std::size_t n, const Int& mod) {
    rows = hnf(std::move(rows), n, mod);
    SnfResult res;
    res.Q = Mat::identity(n);
    res.Qinv = Mat::identity(n);

    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& r : rows) std::swap(r[i], r[j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(res.Q.at(k, i), res.Q.at(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(res.Qinv.at(i, k), res.Qinv.at(j, k));
    };
    // col_j -= q * col_t
    auto col_sub = [&](std::size_t j, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (auto& r : rows) r[j] -= q * r[t];
        for (std::size_t k = 0; k < n; ++k) res.Q.at(k, j) -= q * res.Q.at(k, t);
        for (std::size_t k = 0; k < n; ++k) res.Qinv.at(t, k) += q * res.Qinv.at(j, k);
    };
    auto col_neg = [&](std::size_t j) {
        for (auto& r : rows) r[j] = -r[j];
        for (std::size_t k = 0; k < n; ++k) res.Q.at(k, j) = -res.Q.at(k, j);
        for (std::size_t k = 0; k < n; ++k) res.Qinv.at(j, k) = -res.Qinv.at(j, k);
    };
    auto reduce_trailing = [&](std::size_t tr, std::size_t t) {
        if (mod == 0) return;
        for (std::size_t i = tr; i < rows.size(); ++i)
            for (std::size_t j = t; j < n; ++j) rows[i][j] = fdiv_r(rows[i][j], mod);
    };

    const std::size_t steps = std::min(rows.size(), n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        bool again = true;
        while (again) {
            // locate minimal nonzero entry in region [t.., t..]
            std::size_t bi = rows.size(), bj = n;
            for (std::size_t i = t; i < rows.size(); ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (rows[i][j] != 0 &&
                        (bi == rows.size() || cmp(abs(rows[i][j]), abs(rows[bi][bj])) < 0)) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows.size()) { again = false; break; }
            std::swap(rows[t], rows[bi]);
            col_swap(t, bj);
            if (rows[t][t] < 0) col_neg(t);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows.size(); ++i) {
                if (rows[i][t] == 0) continue;
                Int q = fdiv_q(rows[i][t], rows[t][t]);
                for (std::size_t j = t; j < n; ++j) rows[i][j] -= q * rows[t][j];
                if (rows[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (rows[t][j] == 0) continue;
                Int q = fdiv_q(rows[t][j], rows[t][t]);
                col_sub(j, t, q);
                if (rows[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility fix-up
            const Int& d = rows[t][t];
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows.size() && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (rows[i][j] % d != 0) {
                        for (std::size_t k = t; k < n; ++k) rows[t][k] += rows[i][k];
                        fixed = false;
                    }
            if (fixed) {
                reduce_trailing(t + 1, t + 1);
                again = false;
            }
        }
        if (rows.size() <= t || rows[t][t] == 0) break;
    }
    res.d.assign(n, 0);
    for (std::size_t i = 0; i < std::min(rows.size(), n); ++i) res.d[i] = rows[i][i];
    if (mod != 0)
        for (auto& d : res.d) d = (d == 0) ? mod : gcd(d, mod);
    return res;
}

Int int_det(const Mat& m) {
    assert(m.r == m.c);
    const std::size_t n = m.r;
    if (n == 0) return 1;
    Mat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = v;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) throw std::domain_error("rat_inverse: singular matrix");
        std::swap(m[k], m[p]);
        std::swap(inv[k], inv[p]);
        Rat piv = m[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rat f = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

std::vector<Vec> kernel_mod_m(const Mat& A, const Int& m) {
    assert(m > 0);
    const std::size_t r = A.r, c = A.c;
    struct Col {
        Vec a;  // length r
        Vec v;  // length c
    };
    std::deque<Col> active;
    for (std::size_t j = 0; j < c; ++j) {
        Col col;
        col.a.resize(r);
        for (std::size_t i = 0; i < r; ++i) col.a[i] = fdiv_r(A.at(i, j), m);
        col.v.assign(c, 0);
        col.v[j] = 1;
        active.push_back(std::move(col));
    }
    auto scale_add = [&](Col& x, const Int& s, const Col& y, const Int& t) {
        // x := s*x + t*y  (mod m)
        for (std::size_t i = 0; i < r; ++i) x.a[i] = fdiv_r(s * x.a[i] + t * y.a[i], m);
        for (std::size_t i = 0; i < c; ++i) x.v[i] = fdiv_r(s * x.v[i] + t * y.v[i], m);
    };
    for (std::size_t row = 0; row < r; ++row) {
        std::vector<std::size_t> nz;
        for (std::size_t k = 0; k < active.size(); ++k)
            if (active[k].a[row] != 0) nz.push_back(k);
        while (nz.size() >= 2) {
            std::size_t i = nz[nz.size() - 2], j = nz[nz.size() - 1];
            Int a = active[i].a[row], b = active[j].a[row], s, t;
            Int g = gcdext(a, b, s, t);
            Col combined = active[i];
            scale_add(combined, s, active[j], t);
            Col elim = active[i];
            scale_add(elim, b / g, active[j], -(a / g));
            active[i] = std::move(combined);
            active[j] = std::move(elim);
            nz.pop_back();
            if (active[i].a[row] == 0) nz.pop_back();
        }
        if (!nz.empty()) {
            std::size_t k = nz[0];
            Int a = active[k].a[row];
            Int g = gcd(a, m);
            if (g != m) {
                Col scaled = active[k];
                Int f = m / g;
                for (auto& x : scaled.a) x = fdiv_r(f * x, m);
                for (auto& x : scaled.v) x = fdiv_r(f * x, m);
                active.push_back(std::move(scaled));
            }
            active.erase(active.begin() + k);
        }
    }
    std::vector<Vec> ker;
    for (auto& col : active) {
        assert(is_zero(col.a));
        if (!is_zero(col.v)) ker.push_back(std::move(col.v));
    }
    return ker;
}

}  // namespace annkit
