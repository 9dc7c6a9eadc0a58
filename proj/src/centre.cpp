#include "annkit/centre.hpp"

#include <algorithm>
#include <stdexcept>

namespace annkit {

GroupRingElement gr_one(const FiniteGroup& g) {
    GroupRingElement r(g);
    r.coeff[0] = Cyclo(1);
    return r;
}

GroupRingElement gr_element(const FiniteGroup& g, int x) {
    GroupRingElement r(g);
    r.coeff[x] = Cyclo(1);
    return r;
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r(*a.group);
    for (int i = 0; i < a.group->order(); ++i) r.coeff[i] = a.coeff[i] + b.coeff[i];
    return r;
}

GroupRingElement gr_sub(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r(*a.group);
    for (int i = 0; i < a.group->order(); ++i) r.coeff[i] = a.coeff[i] - b.coeff[i];
    return r;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
    const FiniteGroup& g = *a.group;
    GroupRingElement r(g);
    for (int i = 0; i < g.order(); ++i) {
        if (a.coeff[i].is_zero()) continue;
        for (int j = 0; j < g.order(); ++j) {
            if (b.coeff[j].is_zero()) continue;
            r.coeff[g.mul(i, j)] += a.coeff[i] * b.coeff[j];
        }
    }
    return r;
}

GroupRingElement gr_scale(const Cyclo& c, const GroupRingElement& a) {
    GroupRingElement r(*a.group);
    for (int i = 0; i < a.group->order(); ++i) r.coeff[i] = c * a.coeff[i];
    return r;
}

bool gr_is_central(const GroupRingElement& a) {
    const FiniteGroup& g = *a.group;
    for (const auto& cls : g.classes())
        for (std::size_t i = 1; i < cls.size(); ++i)
            if (a.coeff[cls[i]] != a.coeff[cls[0]]) return false;
    return true;
}

bool gr_is_zero(const GroupRingElement& a) {
    for (const auto& c : a.coeff)
        if (!c.is_zero()) return false;
    return true;
}

CentreElement centre_components(const GroupRingElement& x) {
    if (!gr_is_central(x)) throw std::domain_error("centre_components: not central");
    const FiniteGroup& g = *x.group;
    const auto& tbl = character_table(g);
    CentreElement z(g);
    for (std::size_t t = 0; t < tbl.size(); ++t) {
        Cyclo s;
        for (std::size_t c = 0; c < g.num_classes(); ++c) {
            const Cyclo& w = x.coeff[g.class_rep((int)c)];
            if (w.is_zero()) continue;
            s += Cyclo(Rat((long)g.classes()[c].size())) * w * tbl[t].values[c];
        }
        z.comps[t] = s * Cyclo(Rat(1, tbl[t].degree));
    }
    return z;
}

GroupRingElement to_group_ring(const CentreElement& z) {
    const FiniteGroup& g = *z.group;
    const auto& tbl = character_table(g);
    GroupRingElement x(g);
    std::vector<Cyclo> per_class(g.num_classes());
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        Cyclo s;
        int ic = g.inverse_class((int)c);
        for (std::size_t t = 0; t < tbl.size(); ++t) {
            if (z.comps[t].is_zero()) continue;
            s += z.comps[t] * Cyclo(Rat(tbl[t].degree)) * tbl[t].values[ic];
        }
        s *= Cyclo(Rat(1, g.order()));
        if (!s.is_rational())
            throw std::domain_error("to_group_ring: coefficient not rational");
        per_class[c] = Cyclo(s.rational_value());
    }
    for (int i = 0; i < g.order(); ++i) x.coeff[i] = per_class[g.class_of(i)];
    return x;
}

bool p_integrality_check(const GroupRingElement& x, const Int& p) {
    for (const auto& c : x.coeff)
        if (c.denominator() % p == 0) return false;
    return true;
}

GroupRingElement idempotent(const Character& chi) {
    const FiniteGroup& g = *chi.group;
    GroupRingElement e(g);
    Cyclo scale(Rat(chi.degree, g.order()));
    for (int x = 0; x < g.order(); ++x) e.coeff[x] = scale * chi.at(g.inverse(x));
    return e;
}

GroupRingElement projector(const Character& chi) {
    const FiniteGroup& g = *chi.group;
    GroupRingElement p(g);
    for (int x = 0; x < g.order(); ++x) p.coeff[x] = chi.at(g.inverse(x));
    return p;
}

CentreElement sharp(const CentreElement& z) {
    const FiniteGroup& g = *z.group;
    const auto& tbl = character_table(g);
    CentreElement r(g);
    for (std::size_t t = 0; t < tbl.size(); ++t) {
        Character conj;
        conj.values.reserve(tbl[t].values.size());
        for (const auto& v : tbl[t].values) conj.values.push_back(v.conj());
        auto it = std::find_if(tbl.begin(), tbl.end(), [&](const Character& c) {
            return c.values == conj.values;
        });
        if (it == tbl.end()) throw std::logic_error("sharp: conjugate not in table");
        r.comps[t] = z.comps[(std::size_t)(it - tbl.begin())];
    }
    return r;
}

CentreElement induce_centre(const Subgroup& h, const CentreElement& z) {
    const FiniteGroup& g = h.parent();
    FiniteGroup hg = h.as_group();
    const auto& htbl = character_table(hg);
    if (z.comps.size() != htbl.size())
        throw std::invalid_argument("induce_centre: component count mismatch");
    const auto& tbl = character_table(g);
    CentreElement r(g);
    for (std::size_t t = 0; t < tbl.size(); ++t) {
        Character res = restrict_character(tbl[t], h);
        res.group = &hg;
        Cyclo prod(1);
        for (std::size_t s = 0; s < htbl.size(); ++s) {
            Cyclo m = inner_product(res, htbl[s]);
            long mult = to_long(m.rational_value().get_num());
            if (mult == 0) continue;
            if (z.comps[s].is_zero()) {
                prod = Cyclo();
                break;
            }
            prod *= z.comps[s].pow(mult);
        }
        r.comps[t] = prod;
    }
    return r;
}

namespace {

Cyclo nr_with_realization(const Realization& rel, const GroupRingElement& x) {
    const FiniteGroup& g = *x.group;
    std::vector<std::vector<Cyclo>> m(rel.dim, std::vector<Cyclo>(rel.dim));
    for (int a = 0; a < g.order(); ++a) {
        if (x.coeff[a].is_zero()) continue;
        for (std::size_t i = 0; i < rel.dim; ++i)
            for (std::size_t j = 0; j < rel.dim; ++j)
                if (!rel.at(a)[i][j].is_zero()) m[i][j] += x.coeff[a] * rel.at(a)[i][j];
    }
    return cyclo_det(std::move(m));
}

}  // namespace

Cyclo reduced_norm(const Character& chi, const GroupRingElement& x) {
    const FiniteGroup& g = *chi.group;
    if (chi.degree == 1) {
        Cyclo s;
        for (int a = 0; a < g.order(); ++a)
            if (!x.coeff[a].is_zero()) s += x.coeff[a] * chi.at(a);
        return s;
    }
    if (gr_is_central(x)) {
        Cyclo s;
        for (int a = 0; a < g.order(); ++a)
            if (!x.coeff[a].is_zero()) s += x.coeff[a] * chi.at(a);
        return (s * Cyclo(Rat(1, chi.degree))).pow(chi.degree);
    }
    return nr_with_realization(find_realization(chi), x);
}

DecompositionData::DecompositionData(std::string label_, Subgroup gp_,
                                     Subgroup g0p_, int frob_, Int residue_norm_)
    : label(std::move(label_)),
      gp(std::move(gp_)),
      g0p(std::move(g0p_)),
      frob(frob_),
      residue_norm(std::move(residue_norm_)) {
    const FiniteGroup& g = gp.parent();
    for (int x : g0p.elements())
        if (!gp.contains(x))
            throw std::invalid_argument("DecompositionData: inertia not in G_p");
    for (int a : gp.elements())
        for (int x : g0p.elements())
            if (!g0p.contains(g.conjugate(a, x)))
                throw std::invalid_argument("DecompositionData: inertia not normal in G_p");
    if (!gp.contains(frob))
        throw std::invalid_argument("DecompositionData: Frobenius not in G_p");
    // cosets F^k G0 must exhaust G_p
    std::vector<char> seen(g.order(), 0);
    long covered = 0;
    int f = 0;
    do {
        for (int x : g0p.elements()) {
            int y = g.mul(f, x);
            if (!seen[y]) {
                seen[y] = 1;
                ++covered;
            }
        }
        f = g.mul(f, frob);
    } while (f != 0);
    if (covered != gp.order())
        throw std::invalid_argument("DecompositionData: Frobenius does not generate G_p/G_0");
    if (residue_norm < 2 || factorize(to_long(residue_norm)).size() != 1)
        throw std::invalid_argument("DecompositionData: residue norm not a prime power");
}

LocalIdempotents local_idempotents(const DecompositionData& d) {
    const FiniteGroup& g = d.gp.parent();
    LocalIdempotents li;
    li.e1 = GroupRingElement(g);
    li.ebar1 = GroupRingElement(g);
    Cyclo w0(Rat(1, d.g0p.order()));
    for (int x : d.g0p.elements()) li.e1.coeff[x] = w0;
    Cyclo wp(Rat(1, d.gp.order()));
    for (int x : d.gp.elements()) li.ebar1.coeff[x] = wp;
    li.e2 = gr_sub(gr_one(g), li.e1);
    li.ebar2 = gr_sub(gr_one(g), li.ebar1);
    return li;
}

std::vector<GroupRingElement> u_p_generators(const DecompositionData& d) {
    const FiniteGroup& g = d.gp.parent();
    GroupRingElement norm0(g);
    for (int x : d.g0p.elements()) norm0.coeff[x] = Cyclo(1);
    auto li = local_idempotents(d);
    GroupRingElement second =
        gr_sub(gr_one(g), gr_mul(li.e1, gr_element(g, g.inverse(d.frob))));
    return {norm0, second};
}

UChiResult u_chi(const Character& chi,
                 const std::vector<DecompositionData>& local_data) {
    const FiniteGroup& g = *chi.group;
    long e = g.exponent();
    std::vector<const DecompositionData*> ramified;
    for (const auto& d : local_data)
        if (d.g0p.order() > 1) ramified.push_back(&d);
    if (ramified.empty() || g.is_abelian())
        return {CycloIdeal::unit(e), UChiFlag::EXACT};
    bool all_normal = true;
    for (const auto* d : ramified)
        if (!d->g0p.is_normal()) all_normal = false;
    if (all_normal) return {CycloIdeal::unit(e), UChiFlag::EXACT};

    Realization rel = find_realization(chi);
    CycloIdeal ideal = CycloIdeal::unit(e);
    for (const auto* d : ramified) {
        auto ugens = u_p_generators(*d);
        std::vector<Cyclo> gens;
        for (int a = 0; a < g.order(); ++a) {
            GroupRingElement ga = gr_element(g, a);
            for (const auto& u : ugens) {
                Cyclo v = nr_with_realization(rel, gr_mul(ga, u));
                if (!v.is_zero()) gens.push_back(v.embed(e));
            }
            // |G0| Z[G] sits inside Z[G_p]U_p: |G0| = |G0|(1 - e'F^{-1}) + Norm_{G0}F^{-1}
            Cyclo v = nr_with_realization(
                rel, gr_scale(Cyclo(Rat((long)d->g0p.order())), ga));
            if (!v.is_zero()) gens.push_back(v.embed(e));
        }
        ideal = ideal * CycloIdeal::from_generators(e, gens);
    }
    return {ideal, UChiFlag::LOWER_BOUND};
}

}  // namespace annkit
