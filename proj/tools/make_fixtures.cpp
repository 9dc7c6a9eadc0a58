// Regenerates the bundled fixture files in data/.  Each fixture is
// self-checked against the library before being written.
#include "annkit/io.hpp"

#include <iostream>
#include <stdexcept>

using namespace annkit;

namespace {

std::shared_ptr<const FiniteGroup> catalog_group(
    const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const auto& e : cat)
        if (e.name == name) return e.group;
    throw std::runtime_error("catalog group not found: " + name);
}

long zeta_exponent(const Cyclo& v, long n) {
    Cyclo z = Cyclo::zeta(n);
    Cyclo acc(1);
    for (long k = 0; k < n; ++k) {
        if (acc == v) return k;
        acc = acc * z;
    }
    throw std::runtime_error("value is not a root of unity of order dividing " +
                             std::to_string(n));
}

int order_n_element(const FiniteGroup& g, long n) {
    for (int a = 0; a < g.order(); ++a)
        if (g.element_order(a) == n) return a;
    throw std::runtime_error("no element of order " + std::to_string(n));
}

// the minus class group of the 23rd cyclotomic field: Z/3, with a generator
// of Gal(Q(zeta_23)/Q) acting by inversion (the quadratic character of
// conductor 23 evaluated at the primitive root 5)
Fixture zeta23_fixture(const std::vector<CatalogEntry>& cat) {
    Fixture f;
    f.name = "q_zeta23_minus";
    auto g22 = catalog_group(cat, "C22");
    f.field.group = g22;
    f.field.label = "Q(zeta_23)/Q";
    f.field.k_is_rational = true;
    f.field.k_totally_real = TriState::YES;
    f.field.cm = TriState::YES;
    f.field.j = 11;  // sigma^11 = complex conjugation
    f.field.ramified_primes.emplace_back("23", Subgroup::whole(*g22),
                                         Subgroup::whole(*g22), 0, Int(23));
    f.field.infinite_places.emplace_back(*g22, std::vector<int>{0, 11});
    {
        Mat five(1, 1);
        five.at(0, 0) = 5;  // sigma: zeta_23 -> zeta_23^5, -1 -> -1
        f.field.mu = GModule::from_generator_mats(*g22, {46}, {{1, five}});
    }
    PrimeInfo pi;
    pi.p = 3;
    pi.ramified_in_top_over_Q = TriState::NO;
    pi.zeta_p_condition = TriState::UNKNOWN;
    f.field.p_info.push_back(pi);

    {
        Mat inv(1, 1);
        inv.at(0, 0) = -1;
        ClassGroupData cl{g22,
                          GModule::from_generator_mats(*g22, {3}, {{1, inv}}),
                          ClassGroupSource::INGESTED,
                          {"[P_2]"}};
        f.class_group = std::move(cl);
    }

    // L(0, conj chi_t) via the Dirichlet character psi with psi(5) =
    // conj(chi_t)(sigma); exact Bernoulli evaluation
    auto tbl = character_table(*g22);
    DirichletCharacter probe(23, {1});
    long g0 = probe.generators()[0];
    long c = -1;  // 5 = g0^c mod 23
    {
        long acc = 1;
        for (long k = 1; k <= 22; ++k) {
            acc = acc * g0 % 23;
            if (acc == 5) c = k;
        }
    }
    Int s_g, t_g;
    gcdext(Int(c), Int(22), s_g, t_g);
    long cinv = ((to_long(s_g) % 22) + 22) % 22;
    for (int t = 1; t < (int)tbl.size(); ++t) {
        long k = zeta_exponent(tbl[(std::size_t)t].at(1), 22);
        long e = ((-k % 22) + 22) % 22 * cinv % 22;
        DirichletCharacter psi(23, {e});
        Cyclo v = psi.is_trivial() ? Cyclo(0) : dirichlet_L_at_0(psi);
        f.lvalue_entries.push_back({t, -1, v, LProvider::BERNOULLI});
    }

    ExpectedReport er;
    er.kind = "corollary";
    er.chi_index = 0;
    er.p = 3;
    f.expected.push_back(er);
    return f;
}

// cubic CM fixture over an imaginary quadratic base: ingested cl = Z/7 with
// sigma acting by 2, SUPPLIED non-rational L-value in Q(zeta_3)
Fixture c3_fixture(const std::vector<CatalogEntry>& cat) {
    Fixture f;
    f.name = "c3_cm";
    auto g3 = catalog_group(cat, "C3");
    f.field.group = g3;
    f.field.label = "sextic CM over imaginary quadratic";
    f.field.k_totally_real = TriState::NO;
    f.field.cm = TriState::UNKNOWN;
    f.field.ramified_primes.emplace_back("q13", Subgroup::whole(*g3),
                                         Subgroup::whole(*g3), 0, Int(13));
    f.field.mu = GModule::trivial_action(*g3, {2});
    PrimeInfo pi;
    pi.p = 7;
    pi.ramified_in_top_over_Q = TriState::NO;
    pi.zeta_p_condition = TriState::UNKNOWN;
    f.field.p_info.push_back(pi);
    {
        Mat two(1, 1);
        two.at(0, 0) = 2;
        ClassGroupData cl{g3, GModule::from_generator_mats(*g3, {7}, {{1, two}}),
                          ClassGroupSource::INGESTED,
                          {"[Q]"}};
        f.class_group = std::move(cl);
    }
    // supplied value chosen so the trace-symmetrized element annihilates
    Cyclo v = Cyclo(1) + Cyclo(3) * Cyclo::zeta(3);
    f.lvalue_entries.push_back({1, -1, v, LProvider::SUPPLIED});
    f.lvalue_entries.push_back({2, -1, v.galois(2), LProvider::SUPPLIED});

    ExpectedReport er;
    er.kind = "theorem";
    er.chi_index = 1;
    er.p = 7;
    f.expected.push_back(er);
    return f;
}

// S3 with supplied rational values: all d_chi = 1, construction-only fixture
Fixture s3_fixture(const std::vector<CatalogEntry>& cat) {
    Fixture f;
    f.name = "s3_supplied";
    auto s3 = catalog_group(cat, "D3");
    f.field.group = s3;
    f.field.label = "S3 sextic, non-abelian";
    f.field.k_is_rational = true;
    f.field.k_totally_real = TriState::YES;
    int r3 = order_n_element(*s3, 3);
    f.field.ramified_primes.emplace_back(
        "q7", Subgroup::generated(*s3, {r3}), Subgroup::generated(*s3, {r3}), 0,
        Int(7));
    f.field.mu = GModule::trivial_action(*s3, {2});
    PrimeInfo pi;
    pi.p = 5;
    pi.ramified_in_top_over_Q = TriState::NO;
    pi.zeta_p_condition = TriState::UNKNOWN;
    f.field.p_info.push_back(pi);
    f.lvalue_entries.push_back({1, -1, Cyclo(2), LProvider::SUPPLIED});
    f.lvalue_entries.push_back({2, -1, Cyclo(3), LProvider::SUPPLIED});
    ExpectedReport er;
    er.kind = "corollary";
    er.chi_index = 0;
    er.p = 5;
    f.expected.push_back(er);
    return f;
}

// quaternion / dihedral local data with every inertia subgroup normal
Fixture q8_fixture(const std::vector<CatalogEntry>& cat) {
    Fixture f;
    f.name = "q8_inertia";
    auto q8 = catalog_group(cat, "Q8");
    f.field.group = q8;
    f.field.label = "quaternion octic, normal inertia";
    f.field.k_is_rational = true;
    f.field.k_totally_real = TriState::YES;
    int a = order_n_element(*q8, 4);
    int a2 = q8->mul(a, a);
    f.field.ramified_primes.emplace_back(
        "q5", Subgroup::generated(*q8, {a}), Subgroup::generated(*q8, {a2}), a,
        Int(5));
    f.field.ramified_primes.emplace_back(
        "q13", Subgroup::generated(*q8, {a2}), Subgroup::generated(*q8, {a2}),
        0, Int(13));
    PrimeInfo pi;
    pi.p = 3;
    pi.ramified_in_top_over_Q = TriState::NO;
    pi.zeta_p_condition = TriState::UNKNOWN;
    f.field.p_info.push_back(pi);
    return f;
}

Fixture d4_fixture(const std::vector<CatalogEntry>& cat) {
    Fixture f;
    f.name = "d4_inertia";
    auto d4 = catalog_group(cat, "D4");
    f.field.group = d4;
    f.field.label = "dihedral octic, normal non-split inertia";
    f.field.k_is_rational = true;
    f.field.k_totally_real = TriState::YES;
    int r = order_n_element(*d4, 4);
    int s = -1;
    for (int x = 1; x < d4->order(); ++x) {
        Subgroup rot = Subgroup::generated(*d4, {r});
        if (d4->element_order(x) == 2 && !rot.contains(x)) s = x;
    }
    f.field.ramified_primes.emplace_back("q7", Subgroup::whole(*d4),
                                         Subgroup::generated(*d4, {r}), s,
                                         Int(7));
    PrimeInfo pi;
    pi.p = 3;
    pi.ramified_in_top_over_Q = TriState::NO;
    pi.zeta_p_condition = TriState::UNKNOWN;
    f.field.p_info.push_back(pi);
    return f;
}

void self_check(const Fixture& f) {
    for (const auto& d : f.field.ramified_primes)
        if (!d.g0p.is_normal())
            throw std::runtime_error(f.name + ": inertia not normal");
    LValueTable table = f.lvalue_table();
    for (const auto& er : f.expected) {
        AnnihilatorElement a =
            er.kind == "corollary"
                ? build_corollary_element(f.field, {}, er.p, table)
                : build_theorem_element(
                      character_table(*f.field.group)[(std::size_t)er.chi_index],
                      f.field, er.p, er.x, table);
        bool ok = a.central && a.p_integral;
        if (f.class_group)
            ok = ok && verify_annihilation(a, *f.class_group, er.p).pass;
        if (ok != er.pass)
            throw std::runtime_error(f.name + ": expected report disagrees");
    }
}

}  // namespace

int main() {
    try {
        auto cat = load_catalog();
        std::vector<Fixture> fixtures = {
            zeta23_fixture(cat), c3_fixture(cat), s3_fixture(cat),
            q8_fixture(cat), d4_fixture(cat)};
        for (const auto& f : fixtures) {
            self_check(f);
            std::string path = data_dir() + "/" + f.name + ".json";
            write_json(fixture_to_json(f), path);
            std::cout << "wrote " << path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "make_fixtures: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
