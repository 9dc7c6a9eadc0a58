#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annkit/realization.hpp"

using namespace annkit;

namespace {

FiniteGroup cyclic(long n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % (int)n;
    return FiniteGroup::from_cayley(std::move(t));
}

FiniteGroup s3() {
    return FiniteGroup::from_perm_generators(3, {{1, 2, 0}, {1, 0, 2}});
}

FiniteGroup q8() {
    return FiniteGroup::from_perm_generators(
        8, {{1, 2, 3, 0, 7, 4, 5, 6}, {4, 5, 6, 7, 2, 3, 0, 1}});
}

void check_realization(const FiniteGroup& g, const Character& chi,
                       const Realization& r) {
    REQUIRE(r.dim == (std::size_t)chi.degree);
    // trace recovers the character
    for (int x = 0; x < g.order(); ++x)
        CHECK(cmat_trace(r.at(x)) == chi.at(x));
    // homomorphism
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            CHECK(cmat_mul(r.at(x), r.at(y)) == r.at(g.mul(x, y)));
    // entries live in Q(zeta_m)
    for (int x = 0; x < g.order(); ++x)
        for (const auto& row : r.at(x))
            for (const auto& c : row) CHECK(r.m % c.conductor() == 0);
}

}  // namespace

TEST_CASE("linear realizations") {
    auto c6 = cyclic(6);
    for (const auto& chi : character_table(c6)) {
        auto r = find_realization(chi);
        check_realization(c6, chi, r);
        CHECK(r.m <= 3);  // Q(zeta_6) = Q(zeta_3)
    }
}

TEST_CASE("S3 two-dimensional: rational realization via permutation module") {
    auto g = s3();
    auto tbl = character_table(g);
    auto r = find_realization(tbl[2]);
    check_realization(g, tbl[2], r);
    CHECK(r.m == 1);  // realized over Q
    auto cf = character_field(tbl[2]);
    CHECK(cf.field_degree == 1);
    CHECK(cf.d_chi == 1);
}

TEST_CASE("Q8 two-dimensional: monomial realization, d = 2") {
    auto g = q8();
    auto tbl = character_table(g);
    const Character& chi = tbl[4];
    REQUIRE(chi.degree == 2);
    auto r = find_realization(chi);
    check_realization(g, chi, r);
    CHECK(r.m == 4);
    auto cf = character_field(chi);
    CHECK(cf.field_degree == 1);  // rational-valued
    CHECK(cf.d_chi == 2);
}

TEST_CASE("character fields of abelian groups have d = 1") {
    for (long n : {2L, 3L, 5L, 6L, 8L}) {
        auto g = cyclic(n);
        for (const auto& chi : character_table(g)) {
            auto cf = character_field(chi);
            CHECK(cf.d_chi == 1);
        }
    }
}

TEST_CASE("S4-like check: A4 three-dimensional") {
    auto a4 = FiniteGroup::from_perm_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
    REQUIRE(a4.order() == 12);
    auto tbl = character_table(a4);
    for (const auto& chi : tbl) {
        auto r = find_realization(chi);
        check_realization(a4, chi, r);
    }
}
