#include "annkit/annihilator.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace annkit {

namespace {

bool is_odd_prime(const Int& p) {
    return p > 2 && p % 2 == 1 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

bool rational_valued(const Character& chi) {
    for (const auto& v : chi.values)
        if (!v.is_rational()) return false;
    return true;
}

CycloIdeal extend_ideal(const CycloIdeal& a, long n) {
    if (a.conductor() == n) return a;
    if (a.is_zero()) return CycloIdeal::zero(n);
    return CycloIdeal::from_generators(n, a.basis_elements());
}

long vp(Int d, const Int& p) {
    long v = 0;
    while (d % p == 0) {
        d /= p;
        ++v;
    }
    return v;
}

std::string vec_str(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + "]";
}

// turn exact cyclotomic coefficients into rational ones, or throw
void rationalize(GroupRingElement& e, const char* what) {
    for (auto& c : e.coeff) {
        Cyclo r = c.reduce_conductor();
        if (!r.is_rational())
            throw std::domain_error(std::string(what) +
                                    ": coefficient is not rational");
        c = Cyclo(r.rational_value());
    }
}

// smallest t = w (mod m) with gcd(t, nn) = 1
long coprime_lift(long w, long m, long nn) {
    for (long t = w;; t += m)
        if (std::gcd(t, nn) == 1) return t;
}

}  // namespace

const PrimeInfo* FieldDatum::info_for(const Int& p) const {
    for (const auto& i : p_info)
        if (i.p == p) return &i;
    return nullptr;
}

FieldDatum imaginary_quadratic_datum(long d, const Int& p) {
    if (d < 3) throw std::invalid_argument("imaginary_quadratic_datum: d < 3");
    auto c2 = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_cayley({{0, 1}, {1, 0}}, "C2"));
    FieldDatum f;
    f.group = c2;
    f.label = "Q(sqrt(-" + std::to_string(d) + "))";
    f.k_is_rational = true;
    f.k_totally_real = TriState::YES;
    f.cm = TriState::YES;
    f.j = 1;
    long rest = d;  // -d fundamental, so the ramified primes are those in d
    for (long q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        f.ramified_primes.emplace_back(std::to_string(q), Subgroup::whole(*c2),
                                       Subgroup::whole(*c2), 0, Int(q));
    }
    f.infinite_places.push_back(Subgroup::whole(*c2));
    long w = d == 3 ? 6 : d == 4 ? 4 : 2;
    Mat neg(1, 1);
    neg.at(0, 0) = -1;
    f.mu = GModule::from_generator_mats(*c2, {w}, {{1, neg}});
    PrimeInfo pi;
    pi.p = p;
    pi.ramified_in_top_over_Q =
        fdiv_r(Int(d), p) == 0 ? TriState::YES : TriState::NO;
    pi.zeta_p_condition = TriState::UNKNOWN;
    f.p_info.push_back(std::move(pi));
    return f;
}

GModule invariant_submodule(const GModule& m, const Subgroup& h,
                            const FiniteGroup& q, const std::vector<int>& proj) {
    std::size_t n = m.rank();
    Int dm = 1;
    for (const auto& d : m.invariant_factors()) dm = lcm(dm, d);
    std::vector<Vec> lambda(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) lambda[i][i] = m.invariant_factors()[i];
    // invariant lattice under h
    std::vector<Vec> p;
    std::vector<int> nontriv;
    for (int t : h.elements())
        if (t != 0) nontriv.push_back(t);
    if (nontriv.empty() || n == 0) {
        p.assign(n, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
    } else {
        Mat stack(nontriv.size() * n, n);
        std::vector<Vec> target;
        for (std::size_t ti = 0; ti < nontriv.size(); ++ti) {
            const Mat& a = m.action(nontriv[ti]);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j)
                    stack.at(ti * n + i, j) = a.at(i, j);
                stack.at(ti * n + i, i) -= 1;
            }
        }
        for (std::size_t i = 0; i < nontriv.size() * n; ++i) {
            Vec tr(nontriv.size() * n, 0);
            tr[i] = m.invariant_factors()[i % n];
            target.push_back(std::move(tr));
        }
        p = preimage_lattice(stack, target, dm);
    }
    std::vector<Vec> rel;
    for (const auto& row : lambda) {
        auto c = lattice_coords(p, row);
        if (!c) throw std::logic_error("invariant_submodule: moduli not inside");
        rel.push_back(std::move(*c));
    }
    auto snf = snf_lattice(std::move(rel), n);
    std::vector<std::size_t> keep;
    std::vector<Int> newd;
    for (std::size_t j = 0; j < n; ++j)
        if (snf.d[j] > 1) {
            keep.push_back(j);
            newd.push_back(snf.d[j]);
        }
    std::vector<Vec> gens;
    for (std::size_t j : keep) {
        Vec w(n, 0);
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t a = 0; a < n; ++a) w[a] += snf.Qinv.at(j, t) * p[t][a];
        gens.push_back(std::move(w));
    }
    // one representative per quotient element
    std::vector<int> rep((std::size_t)q.order(), -1);
    for (int g = 0; g < (int)proj.size(); ++g)
        if (rep[(std::size_t)proj[g]] == -1) rep[(std::size_t)proj[g]] = g;
    std::vector<Mat> mats((std::size_t)q.order(), Mat(keep.size(), keep.size()));
    for (int qe = 0; qe < q.order(); ++qe) {
        const Mat& a = m.action(rep[(std::size_t)qe]);
        for (std::size_t j = 0; j < keep.size(); ++j) {
            Vec img = mat_vec(a, gens[j]);
            auto c = lattice_coords(p, img);
            if (!c) throw std::logic_error("invariant_submodule: action leaves P");
            for (std::size_t l = 0; l < keep.size(); ++l) {
                Int y = 0;
                for (std::size_t t = 0; t < n; ++t)
                    y += (*c)[t] * snf.Q.at(t, keep[l]);
                mats[(std::size_t)qe].at(l, j) = y;
            }
        }
    }
    return GModule::from_element_mats(q, std::move(newd), std::move(mats));
}

CutFieldReduction reduce_to_cut_field(const Character& chi,
                                      const FieldDatum& field) {
    if (chi.group != field.group.get())
        throw std::invalid_argument("reduce_to_cut_field: group mismatch");
    bool trivial = true;
    for (const auto& v : chi.values)
        if (!(v == Cyclo(1))) trivial = false;
    if (trivial)
        throw std::invalid_argument("reduce_to_cut_field: chi must be nontrivial");
    Subgroup ker = character_kernel(chi);
    auto dr = deflate_through_kernel(chi);
    auto sp = std::make_shared<const FiniteGroup>(std::move(dr.quotient));
    Character phi = dr.phi;
    phi.group = sp.get();

    CutFieldReduction out{sp, dr.proj, phi, {}};
    FieldDatum& kf = out.kfield;
    kf.group = sp;
    kf.label = field.label;
    kf.k_is_rational = field.k_is_rational;
    kf.k_totally_real = field.k_totally_real;
    kf.p_info = field.p_info;

    auto push_subgroup = [&](const Subgroup& s) {
        std::set<int> elems;
        for (int e : s.elements()) elems.insert(dr.proj[(std::size_t)e]);
        return Subgroup(*sp, std::vector<int>(elems.begin(), elems.end()));
    };
    for (const auto& d : field.ramified_primes)
        kf.ramified_primes.emplace_back(d.label, push_subgroup(d.gp),
                                        push_subgroup(d.g0p),
                                        dr.proj[(std::size_t)d.frob],
                                        d.residue_norm);
    for (const auto& s : field.infinite_places)
        kf.infinite_places.push_back(push_subgroup(s));
    if (field.mu)
        kf.mu = invariant_submodule(*field.mu, ker, *sp, dr.proj);

    if (ker.order() == 1) {
        kf.cm = field.cm;
        kf.j = field.j;
    } else if (field.k_totally_real == TriState::YES &&
               !kf.infinite_places.empty()) {
        auto j = detect_cm_and_j(phi, kf.infinite_places);
        if (j) {
            kf.cm = TriState::YES;
            kf.j = *j;
        } else {
            kf.cm = TriState::NO;
        }
    }
    return out;
}

StarReport condition_star(const FieldDatum& field, const Int& p,
                          const Character* chi) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("condition_star: p must be an odd prime");
    StarReport r;
    if (chi) {
        if (rational_valued(*chi)) {
            r.verdict = StarVerdict::HOLDS_TRIVIALLY;
            r.notes.push_back("rational-valued character: Strong Stark known");
            return r;
        }
        if (field.k_is_rational && chi->degree == 1) {
            r.verdict = StarVerdict::HOLDS_TRIVIALLY;
            r.notes.push_back("linear character over Q: Strong Stark known");
            return r;
        }
    }
    const PrimeInfo* pi = field.info_for(p);
    if (pi && pi->ramified_in_top_over_Q == TriState::NO) {
        r.verdict = StarVerdict::HOLDS_TRIVIALLY;
        r.notes.push_back("p unramified in K/Q");
        return r;
    }
    TriState a = field.k_totally_real;
    TriState b = field.cm;
    TriState c = pi ? pi->zeta_p_condition : TriState::UNKNOWN;
    if (a == TriState::NO || b == TriState::NO || c == TriState::NO) {
        r.verdict = StarVerdict::HOLDS_TRIVIALLY;
        r.notes.push_back("hypotheses (a)-(c) do not all hold");
        return r;
    }
    bool any_split = false;
    bool any_unknown = !pi || pi->splitting.empty();
    if (pi)
        for (auto s : pi->splitting) {
            if (s == SplitStatus::SPLIT) any_split = true;
            if (s == SplitStatus::UNKNOWN) any_unknown = true;
        }
    if (!any_split && !any_unknown) {
        r.verdict = StarVerdict::HOLDS;
        r.notes.push_back("no prime of K^+ above p splits in K/K^+");
        return r;
    }
    if (any_split && a == TriState::YES && b == TriState::YES &&
        c == TriState::YES) {
        r.verdict = StarVerdict::FAILS;
        r.notes.push_back("a split prime above p with (a)-(c) in force");
        return r;
    }
    r.verdict = StarVerdict::UNKNOWN;
    r.notes.push_back("insufficient splitting or hypothesis data");
    return r;
}

AnnihilatorElement build_theorem_element(const Character& chi,
                                         const FieldDatum& field, const Int& p,
                                         const Cyclo& x,
                                         const LValueTable& table) {
    if (chi.group != field.group.get())
        throw std::invalid_argument("build_theorem_element: group mismatch");
    const FiniteGroup& g = *chi.group;
    AnnihilatorElement out;
    out.p = p;
    out.x = x;
    out.chi_key = character_key(chi);
    StarReport star = condition_star(field, p, &chi);
    out.verdict = star.verdict;
    out.notes = star.notes;
    out.element = GroupRingElement(g);

    long r = order_of_vanishing(chi, field.infinite_places);
    if (r > 0) {
        out.zero_by_vanishing = true;
        out.central = true;
        out.p_integral = true;
        out.notes.push_back("positive order of vanishing: element is zero");
        return out;
    }

    Realization rho = find_monomial_realization(chi);
    long m = rho.m;
    Cyclo xr = x.reduce_conductor();
    if (m % xr.conductor() != 0)
        throw std::invalid_argument(
            "build_theorem_element: x must lie in the realization field");

    if (!field.mu)
        throw std::invalid_argument("build_theorem_element: mu data required");
    CycloIdeal hmc = h_mu_chi(*field.mu, chi);
    UChiResult u = u_chi(chi, field.ramified_primes);
    out.u_flag = u.flag;
    if (u.flag == UChiFlag::LOWER_BOUND)
        out.notes.push_back("U_chi is a lower bound: membership test is partial");
    long nn = std::lcm(m, g.exponent());
    CycloIdeal adm = extend_ideal(inverse_different(m), nn) *
                     extend_ideal(hmc, nn) * extend_ideal(u.ideal, nn);
    if (!xr.is_zero()) {
        auto xv = CycloIdeal::principal(nn, xr.embed(nn)).p_valuations(p);
        auto av = adm.p_valuations(p);
        for (std::size_t i = 0; i < xv.size(); ++i)
            if (xv[i] < av[i])
                throw std::domain_error(
                    "build_theorem_element: x is not in D^{-1} h(mu,chi) U_chi "
                    "at p");
    }

    std::set<std::string> keys;
    for (long w = 1; w <= m; ++w) {
        if (m > 1 && std::gcd(w, m) != 1) continue;
        if (m == 1 && w > 1) break;
        long wl = coprime_lift(w, m, nn);
        Character chiw = galois_twist(chi, wl);
        Character chibarw = galois_twist(chi, -wl);
        if (!table.has(chibarw))
            throw std::domain_error(
                "build_theorem_element: missing orbit L-value for " +
                character_key(chibarw));
        Cyclo v = table.get(chibarw).value;
        keys.insert(character_key(chibarw));
        Cyclo xw = xr.galois(w);
        for (int a = 0; a < g.order(); ++a)
            out.element.coeff[(std::size_t)a] += xw * v * chiw.at(g.inverse(a));
    }
    rationalize(out.element, "build_theorem_element");
    out.lvalue_keys.assign(keys.begin(), keys.end());
    out.central = gr_is_central(out.element);
    out.p_integral = p_integrality_check(out.element, p);
    return out;
}

AnnihilatorElement build_corollary_element(
    const FieldDatum& field, const std::vector<DecompositionData>& s_extra,
    const Int& p, const LValueTable& table) {
    const FiniteGroup& g = *field.group;
    if (!is_odd_prime(p))
        throw std::invalid_argument("build_corollary_element: p must be odd");
    const PrimeInfo* pi = field.info_for(p);
    if (!pi || pi->ramified_in_top_over_Q != TriState::NO)
        throw std::invalid_argument(
            "build_corollary_element: p must be marked unramified in L/Q");
    for (const auto& d : field.ramified_primes)
        if (!d.g0p.is_normal())
            throw std::invalid_argument(
                "build_corollary_element: inertia subgroup " + d.label +
                " is not normal");
    AnnihilatorElement out;
    out.p = p;
    out.x = Cyclo(1);
    out.chi_key = "all-nontrivial";
    out.verdict = StarVerdict::HOLDS_TRIVIALLY;
    out.notes.push_back("p unramified in L/Q");
    out.element = GroupRingElement(g);
    auto tbl = character_table(g);
    std::set<std::string> keys;
    for (std::size_t t = 1; t < tbl.size(); ++t) {
        const Character& chi = tbl[t];
        Character chibar = galois_twist(chi, -1);
        if (!table.has(chibar))
            throw std::domain_error(
                "build_corollary_element: missing L-value for " +
                character_key(chibar));
        Cyclo v = truncate(chibar, table.get(chibar).value, s_extra);
        keys.insert(character_key(chibar));
        Cyclo w = v * Cyclo(character_field(chi).d_chi);
        for (int a = 0; a < g.order(); ++a)
            out.element.coeff[(std::size_t)a] += w * chi.at(g.inverse(a));
    }
    rationalize(out.element, "build_corollary_element");
    out.lvalue_keys.assign(keys.begin(), keys.end());
    out.central = gr_is_central(out.element);
    out.p_integral = p_integrality_check(out.element, p);
    return out;
}

VerificationReport verify_annihilation(const AnnihilatorElement& a,
                                       const ClassGroupData& cl, const Int& p) {
    const GModule& mod = cl.module;
    const FiniteGroup& g = mod.group();
    if (a.element.group->order() != g.order())
        throw std::invalid_argument("verify_annihilation: group order mismatch");
    VerificationReport rep;
    std::vector<Rat> coeffs;
    for (const auto& c : a.element.coeff) {
        Cyclo r = c.reduce_conductor();
        if (!r.is_rational())
            throw std::domain_error("verify_annihilation: irrational coefficient");
        coeffs.push_back(r.rational_value());
        rep.denominator = lcm(rep.denominator, Int(coeffs.back().get_den()));
    }
    if (gcd(rep.denominator, p) != 1)
        throw std::domain_error("verify_annihilation: element is not p-integral");
    rep.pass = true;
    bool any = false;
    for (std::size_t i = 0; i < mod.rank(); ++i) {
        long ai = vp(mod.invariant_factors()[i], p);
        if (ai == 0) continue;
        any = true;
        Vec gen(mod.rank(), 0);
        gen[i] = 1;
        Vec img(mod.rank(), 0);
        for (int x = 0; x < g.order(); ++x) {
            Rat c = coeffs[(std::size_t)x] * Rat(rep.denominator);
            Vec w = mod.apply(x, gen);
            for (std::size_t j = 0; j < img.size(); ++j)
                img[j] += c.get_num() * w[j];
        }
        img = mod.reduce(std::move(img));
        bool zero = true;
        for (std::size_t j = 0; j < img.size(); ++j) {
            Int pk = pow_int(p, (unsigned long)vp(mod.invariant_factors()[j], p));
            if (img[j] % pk != 0) zero = false;
        }
        std::string label = i < cl.generator_labels.size()
                                ? cl.generator_labels[i]
                                : "g" + std::to_string(i);
        std::ostringstream line;
        line << label << ": image " << vec_str(img) << " -> "
             << (zero ? "zero" : "NONZERO") << " in the p-part";
        rep.lines.push_back(line.str());
        if (!zero) {
            rep.pass = false;
            rep.witnesses.push_back(label + " image " + vec_str(img));
        }
    }
    if (!any) rep.lines.push_back("class group has trivial p-part");
    return rep;
}

}  // namespace annkit
