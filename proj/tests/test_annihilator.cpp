#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annkit/annihilator.hpp"

using namespace annkit;

namespace {

std::shared_ptr<const FiniteGroup> shared_cyclic(long n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % (int)n;
    return std::make_shared<const FiniteGroup>(
        FiniteGroup::from_cayley(std::move(t)));
}

std::shared_ptr<const FiniteGroup> shared_s3() {
    return std::make_shared<const FiniteGroup>(
        FiniteGroup::from_perm_generators(3, {{1, 2, 0}, {1, 0, 2}}));
}

// Gal(Q(sqrt(-d))/Q) with standard CM metadata; p odd, unramified, with the
// zeta_p condition known to fail (d not the quadratic field inside Q(zeta_p))
FieldDatum quadratic_field(std::shared_ptr<const FiniteGroup> c2, long d,
                           const Int& p) {
    FieldDatum f;
    f.group = c2;
    f.label = "Q(sqrt(-" + std::to_string(d) + "))";
    f.k_is_rational = true;
    f.k_totally_real = TriState::YES;
    f.cm = TriState::YES;
    f.j = 1;
    f.ramified_primes.emplace_back(std::to_string(d), Subgroup::whole(*c2),
                                   Subgroup::whole(*c2), 0, Int(d));
    f.infinite_places.push_back(Subgroup::whole(*c2));
    long w = d == 3 ? 6 : d == 4 ? 4 : 2;
    Mat neg(1, 1);
    neg.at(0, 0) = -1;
    f.mu = GModule::from_generator_mats(*c2, {w}, {{1, neg}});
    PrimeInfo pi;
    pi.p = p;
    pi.ramified_in_top_over_Q = (d % to_long(p) == 0) ? TriState::YES : TriState::NO;
    pi.zeta_p_condition = TriState::NO;
    f.p_info.push_back(pi);
    return f;
}

Character sign_char(const FiniteGroup& c2) {
    auto tbl = character_table(c2);
    return tbl[1];
}


int order_two_element(const FiniteGroup& g) {
    for (int a = 1; a < g.order(); ++a)
        if (g.element_order(a) == 2) return a;
    return -1;
}

}  // namespace

TEST_CASE("condition_star verdicts") {
    auto c2 = shared_cyclic(2);
    FieldDatum f = quadratic_field(c2, 23, 3);

    SUBCASE("p = 2 and non-primes are rejected") {
        CHECK_THROWS_AS(condition_star(f, 2), std::invalid_argument);
        CHECK_THROWS_AS(condition_star(f, 9), std::invalid_argument);
    }
    SUBCASE("unramified p holds trivially") {
        CHECK(condition_star(f, 3).verdict == StarVerdict::HOLDS_TRIVIALLY);
    }
    SUBCASE("rational character exemption") {
        Character sgn = sign_char(*c2);
        FieldDatum bare;
        bare.group = c2;
        CHECK(condition_star(bare, 5, &sgn).verdict ==
              StarVerdict::HOLDS_TRIVIALLY);
    }
    SUBCASE("failing zeta_p condition holds trivially even when ramified") {
        FieldDatum g = quadratic_field(c2, 3, 3);
        CHECK(g.p_info[0].ramified_in_top_over_Q == TriState::YES);
        CHECK(condition_star(g, 3).verdict == StarVerdict::HOLDS_TRIVIALLY);
    }
    SUBCASE("all hypotheses with nonsplit primes: HOLDS") {
        FieldDatum g = quadratic_field(c2, 7, 7);
        g.p_info[0].zeta_p_condition = TriState::YES;
        g.p_info[0].splitting = {SplitStatus::NONSPLIT};
        CHECK(condition_star(g, 7).verdict == StarVerdict::HOLDS);
    }
    SUBCASE("a split prime fails") {
        FieldDatum g = quadratic_field(c2, 7, 7);
        g.p_info[0].zeta_p_condition = TriState::YES;
        g.p_info[0].splitting = {SplitStatus::SPLIT};
        CHECK(condition_star(g, 7).verdict == StarVerdict::FAILS);
    }
    SUBCASE("missing data is UNKNOWN; HOLDS implies no split entry") {
        std::vector<TriState> tri = {TriState::YES, TriState::NO,
                                     TriState::UNKNOWN};
        std::vector<SplitStatus> sp = {SplitStatus::SPLIT, SplitStatus::NONSPLIT,
                                       SplitStatus::UNKNOWN};
        for (auto a : tri)
            for (auto b : tri)
                for (auto c : tri)
                    for (auto s : sp) {
                        FieldDatum g = quadratic_field(c2, 7, 7);
                        g.k_totally_real = a;
                        g.cm = b;
                        g.p_info[0].ramified_in_top_over_Q = TriState::YES;
                        g.p_info[0].zeta_p_condition = c;
                        g.p_info[0].splitting = {s};
                        auto r = condition_star(g, 7);
                        if (r.verdict == StarVerdict::HOLDS)
                            CHECK(s == SplitStatus::NONSPLIT);
                        if (r.verdict == StarVerdict::FAILS)
                            CHECK(s == SplitStatus::SPLIT);
                    }
    }
}

TEST_CASE("invariant_submodule") {
    auto c2 = shared_cyclic(2);
    auto c1 = shared_cyclic(1);
    Mat neg(1, 1);
    neg.at(0, 0) = -1;
    GModule m = GModule::from_generator_mats(*c2, {8}, {{1, neg}});
    std::vector<int> proj(2, 0);
    GModule inv =
        invariant_submodule(m, Subgroup::whole(*c2), *c1, proj);
    CHECK(inv.invariant_factors() == std::vector<Int>{2});
    GModule all = invariant_submodule(m, Subgroup::trivial(*c2), *c2, {0, 1});
    CHECK(all.invariant_factors() == std::vector<Int>{8});
    CHECK(all.apply(1, {1}) == Vec{7});
}

TEST_CASE("reduce_to_cut_field") {
    SUBCASE("faithful character is an identity reduction") {
        auto c2 = shared_cyclic(2);
        FieldDatum f = quadratic_field(c2, 23, 3);
        auto red = reduce_to_cut_field(sign_char(*c2), f);
        CHECK(red.qgroup->order() == 2);
        CHECK(red.proj == std::vector<int>{0, 1});
        CHECK(red.kfield.mu->invariant_factors() == std::vector<Int>{2});
        CHECK(red.kfield.ramified_primes.size() == 1);
        CHECK(red.kfield.cm == TriState::YES);
    }
    SUBCASE("S3 x C2: inflated character cuts out the S3 part") {
        auto g12 = std::make_shared<const FiniteGroup>(
            FiniteGroup::from_perm_generators(
                5, {{1, 2, 0, 3, 4}, {1, 0, 2, 3, 4}, {0, 1, 2, 4, 3}}));
        REQUIRE(g12->order() == 12);
        auto tbl = character_table(*g12);
        const Character* chi = nullptr;
        for (const auto& c : tbl)
            if (c.degree == 2 && character_kernel(c).order() == 2) chi = &c;
        REQUIRE(chi != nullptr);
        // mu = Z/4 where the central C2 acts by -1 and the S3 part trivially
        const Character* ell = nullptr;
        int z = g12->centre_elements()[1];
        for (const auto& c : tbl)
            if (c.degree == 1 && c.at(z) == Cyclo(-1)) ell = &c;
        REQUIRE(ell != nullptr);
        std::vector<Mat> mats;
        for (int a = 0; a < g12->order(); ++a) {
            Mat m(1, 1);
            m.at(0, 0) = ell->at(a).rational_value().get_num();
            mats.push_back(m);
        }
        FieldDatum f;
        f.group = g12;
        f.k_totally_real = TriState::YES;
        f.mu = GModule::from_element_mats(*g12, {4}, std::move(mats));
        f.ramified_primes.emplace_back(
            "q", Subgroup::generated(*g12, {g12->centre_elements()[1]}),
            Subgroup::trivial(*g12), z, Int(5));
        auto red = reduce_to_cut_field(*chi, f);
        CHECK(red.qgroup->order() == 6);
        CHECK_FALSE(red.qgroup->is_abelian());
        CHECK(red.kfield.mu->invariant_factors() == std::vector<Int>{2});
        // decomposition data collapses to the identity coset
        CHECK(red.kfield.ramified_primes[0].gp.order() == 1);
    }
    SUBCASE("sign character of S3 gives a quadratic datum") {
        auto s3 = shared_s3();
        auto tbl = character_table(*s3);
        const Character* sgn = nullptr;
        for (const auto& c : tbl)
            if (c.degree == 1 && !(c == tbl.front())) sgn = &c;
        REQUIRE(sgn != nullptr);
        FieldDatum f;
        f.group = s3;
        f.k_totally_real = TriState::YES;
        int t = order_two_element(*s3);
        f.ramified_primes.emplace_back("q", Subgroup::generated(*s3, {t}),
                                       Subgroup::generated(*s3, {t}), 0, Int(7));
        auto red = reduce_to_cut_field(*sgn, f);
        CHECK(red.qgroup->order() == 2);
        CHECK(red.qgroup->is_abelian());
        CHECK(red.kfield.ramified_primes[0].gp.order() == 2);
    }
}

TEST_CASE("theorem element on Q(sqrt(-23)) at p = 3") {
    auto c2 = shared_cyclic(2);
    FieldDatum f = quadratic_field(c2, 23, 3);
    Character sgn = sign_char(*c2);
    LValueTable table;
    Cyclo l0 = dirichlet_L_at_0(quadratic_character(-23));
    CHECK(l0 == Cyclo(3));
    table.set(sgn, l0, LProvider::BERNOULLI);

    AnnihilatorElement a = build_theorem_element(sgn, f, 3, Cyclo(1), table);
    CHECK(a.element.coeff[0] == Cyclo(3));
    CHECK(a.element.coeff[1] == Cyclo(-3));
    CHECK(a.central);
    CHECK(a.p_integral);
    CHECK(a.verdict == StarVerdict::HOLDS_TRIVIALLY);
    CHECK(a.u_flag == UChiFlag::EXACT);
    CHECK_FALSE(a.zero_by_vanishing);

    ClassGroupData cl = form_class_group(23);
    auto rep = verify_annihilation(a, cl, 3);
    CHECK(rep.pass);
    CHECK(rep.denominator == 1);

    SUBCASE("corrupted element fails with a witness") {
        AnnihilatorElement bad = a;
        bad.element.coeff[0] = Cyclo(1);
        bad.element.coeff[1] = Cyclo(-1);
        auto r2 = verify_annihilation(bad, cl, 3);
        CHECK_FALSE(r2.pass);
        CHECK_FALSE(r2.witnesses.empty());
    }
    SUBCASE("zero element passes trivially") {
        AnnihilatorElement z = a;
        z.element = GroupRingElement(*c2);
        CHECK(verify_annihilation(z, cl, 3).pass);
    }
}

TEST_CASE("membership of x in the admissible ideal is enforced") {
    auto c2 = shared_cyclic(2);
    FieldDatum f = quadratic_field(c2, 23, 3);
    // force 3 into h(mu, chi): mu = Z/9 with the minus action
    Mat neg(1, 1);
    neg.at(0, 0) = -1;
    f.mu = GModule::from_generator_mats(*c2, {9}, {{1, neg}});
    Character sgn = sign_char(*c2);
    LValueTable table;
    table.set(sgn, Cyclo(3), LProvider::SUPPLIED);
    CHECK_THROWS_AS(build_theorem_element(sgn, f, 3, Cyclo(1), table),
                    std::domain_error);
    AnnihilatorElement a = build_theorem_element(sgn, f, 3, Cyclo(9), table);
    CHECK(a.element.coeff[0] == Cyclo(27));
    // at p = 5 the same mu is harmless and x = 1 admissible
    f.p_info[0].p = 5;
    AnnihilatorElement b = build_theorem_element(sgn, f, 5, Cyclo(1), table);
    CHECK(b.element.coeff[0] == Cyclo(3));
}

TEST_CASE("positive order of vanishing yields the zero element") {
    auto s3 = shared_s3();
    auto tbl = character_table(*s3);
    const Character* chi2 = nullptr;
    for (const auto& c : tbl)
        if (c.degree == 2) chi2 = &c;
    REQUIRE(chi2 != nullptr);
    FieldDatum f;
    f.group = s3;
    f.k_totally_real = TriState::YES;
    f.mu = GModule::trivial_action(*s3, {2});
    // infinite places with order-2 decomposition groups: chi2 restricted
    // contains the trivial character
    f.infinite_places.push_back(
        Subgroup::generated(*s3, {order_two_element(*s3)}));
    PrimeInfo pi;
    pi.p = 5;
    pi.ramified_in_top_over_Q = TriState::NO;
    f.p_info.push_back(pi);
    LValueTable table;
    AnnihilatorElement a = build_theorem_element(*chi2, f, 5, Cyclo(1), table);
    CHECK(a.zero_by_vanishing);
    CHECK(gr_is_zero(a.element));
}

TEST_CASE("cubic orbit sum: C3 characters over Q(zeta_3)") {
    auto c3 = shared_cyclic(3);
    auto tbl = character_table(*c3);
    const Character& chi = tbl[1];
    FieldDatum f;
    f.group = c3;
    f.k_is_rational = true;
    f.k_totally_real = TriState::YES;
    f.mu = GModule::trivial_action(*c3, {2});
    PrimeInfo pi;
    pi.p = 5;
    pi.ramified_in_top_over_Q = TriState::NO;
    f.p_info.push_back(pi);

    Character chibar = galois_twist(chi, -1);
    Cyclo v = Cyclo(1) + Cyclo::zeta(3);  // a supplied nonrational value
    LValueTable table;
    table.set(chibar, v, LProvider::SUPPLIED);
    table = artin_formalism_galois(std::move(table), chibar);

    AnnihilatorElement a = build_theorem_element(chi, f, 5, Cyclo(1), table);
    CHECK(a.central);
    CHECK(a.lvalue_keys.size() == 2);
    // coefficient at g: sum over w of V^w chi^w(g^{-1}), an exact trace
    for (int g = 0; g < 3; ++g) {
        Cyclo expect;
        for (long w = 1; w <= 2; ++w)
            expect += v.galois(w) * chi.at(c3->inverse(g)).galois(w);
        CHECK(a.element.coeff[(std::size_t)g] ==
              Cyclo(expect.rational_value()));
    }
    SUBCASE("inconsistent orbit values are rejected") {
        LValueTable bad;
        bad.set(chibar, v, LProvider::SUPPLIED);
        bad.set(galois_twist(chibar, 2), v + Cyclo(1), LProvider::SUPPLIED);
        CHECK_THROWS_AS(build_theorem_element(chi, f, 5, Cyclo(1), bad),
                        std::domain_error);
    }
    SUBCASE("corollary equals the orbit sum of theorem elements") {
        AnnihilatorElement c = build_corollary_element(f, {}, 5, table);
        CHECK(c.element == a.element);
        CHECK(c.central);
    }
}

TEST_CASE("corollary element checks and the |G| Theta comparison") {
    auto c2 = shared_cyclic(2);
    FieldDatum f = quadratic_field(c2, 23, 3);
    Character sgn = sign_char(*c2);
    LValueTable table;
    table.set(sgn, Cyclo(3), LProvider::BERNOULLI);

    AnnihilatorElement c = build_corollary_element(f, {}, 3, table);
    CHECK(c.element.coeff[0] == Cyclo(3));
    CHECK(c.element.coeff[1] == Cyclo(-3));
    CHECK(verify_annihilation(c, form_class_group(23), 3).pass);

    // nontrivial centre component equals |G| * L(0, conj chi)
    auto comps = centre_components(c.element);
    CHECK(comps.comps[1] == Cyclo(6));

    SUBCASE("ramified p is rejected") {
        CHECK_THROWS_AS(build_corollary_element(f, {}, 23, table),
                        std::invalid_argument);
    }
    SUBCASE("a fully split extra prime kills the truncated value") {
        std::vector<DecompositionData> s_extra;
        s_extra.emplace_back("2", Subgroup::trivial(*c2), Subgroup::trivial(*c2),
                             0, Int(2));
        AnnihilatorElement z = build_corollary_element(f, s_extra, 3, table);
        CHECK(gr_is_zero(z.element));
    }
    SUBCASE("non-normal inertia is rejected") {
        auto s3 = shared_s3();
        FieldDatum g;
        g.group = s3;
        int t = order_two_element(*s3);
        g.ramified_primes.emplace_back("q", Subgroup::generated(*s3, {t}),
                                       Subgroup::generated(*s3, {t}), 0, Int(7));
        PrimeInfo pi;
        pi.p = 5;
        pi.ramified_in_top_over_Q = TriState::NO;
        g.p_info.push_back(pi);
        LValueTable t2;
        CHECK_THROWS_AS(build_corollary_element(g, {}, 5, t2),
                        std::invalid_argument);
    }
}
