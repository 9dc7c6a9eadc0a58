#pragma once

#include "annkit/numeric.hpp"

#include <optional>
#include <vector>

namespace annkit {

using Vec = std::vector<Int>;

struct Mat {
    std::size_t r = 0, c = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r(rows), c(cols), a(rows * cols, 0) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * c + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * c + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Mat& o) const { return r == o.r && c == o.c && a == o.a; }
};

Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_vec(const Mat& m, const Vec& v);  // column-vector convention
Mat mat_transpose(const Mat& m);
Mat mat_pow(const Mat& m, long e);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);

// Row-style Hermite normal form of the lattice spanned by the given vectors.
// Result rows have strictly increasing pivot columns, positive pivots, and
// entries above each pivot reduced into [0, pivot).  If mod != 0 the lattice
// mod*Z^n is adjoined and all entries are kept reduced modulo mod.
std::vector<Vec> hnf(std::vector<Vec> rows, std::size_t n, const Int& mod = 0);

// Reduce v against an HNF basis; returns the residue.  If coeffs != nullptr it
// receives the coefficient of each basis row used.
Vec hnf_reduce(const std::vector<Vec>& basis, Vec v, std::vector<Int>* coeffs = nullptr);

bool in_lattice(const std::vector<Vec>& basis, const Vec& v);

// x with sum_i x_i * basis_i = v, or nullopt.
std::optional<std::vector<Int>> lattice_coords(const std::vector<Vec>& basis, const Vec& v);

// Kernel of the Z-linear map e_i -> rows[i]:
// basis of { x : sum_i x_i rows[i] = 0 }.
std::vector<Vec> int_kernel(const std::vector<Vec>& rows, std::size_t n);

// { v in Z^a : A v in span(target) }, where A is r x a and target spans a
// lattice in Z^r.  mod, if nonzero, is a known exponent (mod*Z^a lies in the
// preimage) used to keep entries small.
std::vector<Vec> preimage_lattice(const Mat& A, const std::vector<Vec>& target,
                                  const Int& mod = 0);

// Smith normal form of the lattice spanned by `rows` inside Z^n, with column
// transform tracking: diag = invariant factors d_1 | d_2 | ... (length n;
// trailing zeros if the lattice has lower rank).  Q and Qinv satisfy: in the
// new coordinates y = x * Q the lattice is spanned by d_i * e_i.
// If mod != 0, mod*Z^n is adjoined first.
struct SnfResult {
    std::vector<Int> d;
    Mat Q, Qinv;
};
SnfResult snf_lattice(std::vector<Vec> rows, std::size_t n, const Int& mod = 0);

// Determinant of a square integer matrix (Bareiss fraction-free elimination).
Int int_det(const Mat& m);

// Inverse of a square rational matrix; throws if singular.
std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m);

// Generators of { v in (Z/m)^c : A v = 0 (mod m) } for an r x c matrix A.
std::vector<Vec> kernel_mod_m(const Mat& A, const Int& m);

}  // namespace annkit
