#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annkit/cyclotomic.hpp"
#include "annkit/fpoly.hpp"

using namespace annkit;

TEST_CASE("cyclotomic polynomials") {
    CHECK(fp::cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(fp::cyclotomic_poly(2) == std::vector<Int>{1, 1});
    CHECK(fp::cyclotomic_poly(3) == std::vector<Int>{1, 1, 1});
    CHECK(fp::cyclotomic_poly(4) == std::vector<Int>{1, 0, 1});
    CHECK(fp::cyclotomic_poly(6) == std::vector<Int>{1, -1, 1});
    CHECK(fp::cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
    // first cyclotomic polynomial with a coefficient other than 0, +-1
    auto c105 = fp::cyclotomic_poly(105);
    CHECK(c105[7] == -2);
    CHECK(c105.size() == 49);
    // product over divisors gives x^n - 1
    for (long n : {12L, 30L, 36L}) {
        std::vector<Int> prod = {1};
        for (long d : divisors(n)) {
            auto f = fp::cyclotomic_poly(d);
            std::vector<Int> r(prod.size() + f.size() - 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < f.size(); ++j) r[i + j] += prod[i] * f[j];
            prod = std::move(r);
        }
        std::vector<Int> expect(n + 1, 0);
        expect[0] = -1;
        expect[n] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("F_p factorization of cyclotomic polynomials") {
    // Phi_23 mod 2: 23 | 2^11 - 1, so ord_23(2) = 11: two factors of degree 11
    auto f = fp::factor_squarefree(fp::cyclotomic_mod_p(23, 2), 2);
    REQUIRE(f.size() == 2);
    CHECK(fp::deg(f[0]) == 11);
    CHECK(fp::deg(f[1]) == 11);
    CHECK(fp::mul(f[0], f[1], 2) == fp::cyclotomic_mod_p(23, 2));
    // Phi_5 mod 11: splits completely (11 = 1 mod 5)
    auto g = fp::factor_squarefree(fp::cyclotomic_mod_p(5, 11), 11);
    REQUIRE(g.size() == 4);
    for (const auto& irr : g) CHECK(fp::deg(irr) == 1);
    // Phi_8 mod 3: ord_8(3) = 2: two quadratic factors
    auto h = fp::factor_squarefree(fp::cyclotomic_mod_p(8, 3), 3);
    REQUIRE(h.size() == 2);
    CHECK(fp::deg(h[0]) == 2);
    // determinism
    CHECK(fp::factor_squarefree(fp::cyclotomic_mod_p(23, 2), 2) == f);
}

TEST_CASE("basic identities in Q(zeta_n)") {
    // zeta_3 + zeta_3^2 = -1
    CHECK(Cyclo::zeta(3) + Cyclo::zeta(3, 2) == Cyclo(-1));
    // galois: zeta_5 -> zeta_5^2
    CHECK(Cyclo::zeta(5).galois(2) == Cyclo::zeta(5, 2));
    // (1 + zeta_8)(1 + zeta_8^-1) = 2 + zeta_8 + zeta_8^7
    Cyclo lhs = (Cyclo(1) + Cyclo::zeta(8)) * (Cyclo(1) + Cyclo::zeta(8, 7));
    Cyclo rhs = Cyclo(2) + Cyclo::zeta(8) + Cyclo::zeta(8, 7);
    CHECK(lhs == rhs);
    // zeta_n^n = 1
    for (long n : {2L, 3L, 4L, 6L, 8L, 12L, 23L}) CHECK(Cyclo::zeta(n).pow(n) == Cyclo(1));
}

TEST_CASE("traces") {
    CHECK(Cyclo(1).embed(3).trace_to_Q() == Rat(2));
    CHECK(Cyclo::zeta(3).trace_to_Q() == Rat(-1));
    CHECK(Cyclo::zeta(8).trace_to_Q() == Rat(0));
    CHECK(Cyclo::zeta(12).trace_to_Q() == Rat(0));
    CHECK(Cyclo::zeta(6).trace_to_Q() == Rat(1));
    // trace = sum over Galois group
    for (long n : {5L, 8L, 12L}) {
        Cyclo x = Cyclo::zeta(n) + Cyclo(Rat(1, 2)) * Cyclo::zeta(n, 2) + Cyclo(3);
        Cyclo s;
        for (long k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) s += x.galois(k);
        CHECK(s.is_rational());
        CHECK(s.rational_value() == x.trace_to_Q());
    }
}

TEST_CASE("field axioms and inverses") {
    Rng rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        long n = std::vector<long>{3, 4, 5, 8, 12}[(std::size_t)rng.uniform(0, 4)];
        long d = euler_phi(n);
        std::vector<Rat> a(d), b(d);
        for (auto& q : a) {
            q = Rat(rng.uniform(-5, 5), rng.uniform(1, 3));
            q.canonicalize();
        }
        for (auto& q : b) {
            q = Rat(rng.uniform(-5, 5), rng.uniform(1, 3));
            q.canonicalize();
        }
        Cyclo x = Cyclo::from_coeffs(n, a), y = Cyclo::from_coeffs(n, b);
        CHECK(x * y == y * x);
        CHECK((x + y) * (x - y) == x * x - y * y);
        if (!x.is_zero()) {
            CHECK(x * x.inv() == Cyclo(1));
            CHECK(x / x == Cyclo(1));
        }
        // galois is a ring hom
        long k = 0;
        do k = rng.uniform(1, n - 1); while (std::gcd(k, n) != 1);
        CHECK(x.galois(k) * y.galois(k) == (x * y).galois(k));
        CHECK(x.galois(k) + y.galois(k) == (x + y).galois(k));
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("conductor embedding and reduction") {
    // zeta_3 = zeta_6^2
    CHECK(Cyclo::zeta(3).embed(6) == Cyclo::zeta(6, 2));
    // mixed-conductor product: zeta_3 * zeta_4 = zeta_12^7
    CHECK(Cyclo::zeta(3) * Cyclo::zeta(4) == Cyclo::zeta(12, 7));
    // reduce_conductor finds the minimal field
    Cyclo x = Cyclo::zeta(12, 4);  // = zeta_3
    Cyclo r = x.reduce_conductor();
    CHECK(r.conductor() == 3);
    CHECK(r == Cyclo::zeta(3));
    CHECK(Cyclo(5).embed(8).reduce_conductor().conductor() == 1);
    // sqrt(-3) = 2 zeta_3 + 1 lives in Q(zeta_3)
    Cyclo s = (Cyclo(2) * Cyclo::zeta(12, 4) + Cyclo(1));
    CHECK(s.reduce_conductor().conductor() == 3);
}
