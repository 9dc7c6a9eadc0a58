#include "annkit/twistcohom.hpp"

#include <algorithm>
#include <stdexcept>

namespace annkit {

namespace {

// multiplication by an integral element of Z[zeta_m] on the power basis
Mat zmult(long m, std::size_t phi, const Cyclo& c) {
    Mat out(phi, phi);
    for (std::size_t b = 0; b < phi; ++b) {
        Cyclo prod = c.embed(m) * Cyclo::zeta(m).pow((long)b);
        const auto& cf = prod.coeffs();
        for (std::size_t a = 0; a < phi; ++a) {
            Rat v = a < cf.size() ? cf[a] : Rat(0);
            if (v.get_den() != 1)
                throw std::invalid_argument("zmult: element not integral");
            out.at(a, b) = v.get_num();
        }
    }
    return out;
}

std::vector<Vec> diag_lattice(const std::vector<Int>& moduli) {
    std::vector<Vec> rows(moduli.size(), Vec(moduli.size(), 0));
    for (std::size_t i = 0; i < moduli.size(); ++i) rows[i][i] = moduli[i];
    return rows;
}

// replicate a diagonal-moduli lattice over `copies` blocks
std::vector<Int> replicate(const std::vector<Int>& moduli, std::size_t copies) {
    std::vector<Int> out;
    out.reserve(moduli.size() * copies);
    for (std::size_t c = 0; c < copies; ++c)
        out.insert(out.end(), moduli.begin(), moduli.end());
    return out;
}

int cyclic_generator(const FiniteGroup& g) {
    for (int a = 0; a < g.order(); ++a)
        if (g.element_order(a) == g.order()) return a;
    return -1;
}

Mat norm_matrix(const TwistedModule& t) {
    std::size_t n = t.zdim();
    Mat nm(n, n);
    for (int g = 0; g < t.group->order(); ++g) nm = mat_add(nm, t.zaction[(std::size_t)g]);
    return nm;
}

// lattice spanned by the columns of A together with the moduli lattice
std::vector<Vec> column_span_plus(const Mat& a, const std::vector<Int>& moduli) {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < a.c; ++j) {
        Vec col(a.r);
        for (std::size_t i = 0; i < a.r; ++i) col[i] = a.at(i, j);
        rows.push_back(std::move(col));
    }
    for (auto& r : diag_lattice(moduli)) rows.push_back(std::move(r));
    return hnf(std::move(rows), a.r);
}

}  // namespace

ChiTwistLattice chi_twist_lattice(const Character& chi) {
    return {chi, find_monomial_realization(chi)};
}

Int TwistedModule::order() const {
    Int o = 1;
    for (const auto& n : zmoduli) o *= n;
    return o;
}

Int TwistedModule::exponent_bound() const {
    Int e = 1;
    for (const auto& n : zmoduli) e = lcm(e, n);
    return e;
}

Vec TwistedModule::reduce(Vec v) const {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fdiv_r(v[i], zmoduli[i]);
    return v;
}

Vec TwistedModule::apply(int g, const Vec& v) const {
    return reduce(mat_vec(zaction[(std::size_t)g], v));
}

bool TwistedModule::is_zero(const Vec& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (fdiv_r(v[i], zmoduli[i]) != 0) return false;
    return true;
}

std::vector<Vec> TwistedModule::elements() const {
    std::vector<Vec> out;
    Vec cur(zdim(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < zdim()) {
            cur[i] += 1;
            if (cur[i] < zmoduli[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == zdim()) break;
    }
    return out;
}

TwistedModule build_twist(const Character& chi, const GModule& mod) {
    const FiniteGroup& g = *chi.group;
    if (&mod.group() != &g)
        throw std::invalid_argument("build_twist: module group mismatch");
    Realization rho = find_monomial_realization(chi);
    TwistedModule t;
    t.group = &g;
    t.m = rho.m;
    t.phi = rho.m == 1 ? 1 : (std::size_t)euler_phi(rho.m);
    t.d = rho.dim;
    std::size_t r = mod.rank();
    // O-generator (i, k) = m_i tensor basis vector k; index i * d + k
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < t.d; ++k)
            t.omoduli.push_back(mod.invariant_factors()[i]);
    std::size_t og = t.omoduli.size();
    std::size_t n = og * t.phi;
    for (const auto& om : t.omoduli)
        for (std::size_t b = 0; b < t.phi; ++b) t.zmoduli.push_back(om);
    (void)n;
    // zeta action: block diagonal multiplication
    Mat zb = zmult(t.m, t.phi, Cyclo::zeta(t.m));
    t.zeta = Mat(t.zdim(), t.zdim());
    for (std::size_t o = 0; o < og; ++o)
        for (std::size_t a = 0; a < t.phi; ++a)
            for (std::size_t b = 0; b < t.phi; ++b)
                t.zeta.at(o * t.phi + a, o * t.phi + b) = zb.at(a, b);
    // action: e_{i,k} -> sum_{l,k'} A(g)_{l,i} rho(g^{-1})_{k,k'} e_{l,k'}
    t.zaction.assign((std::size_t)g.order(), Mat(t.zdim(), t.zdim()));
    for (int x = 0; x < g.order(); ++x) {
        const Mat& am = mod.action(x);
        const auto& rhom = rho.at(g.inverse(x));
        Mat& out = t.zaction[(std::size_t)x];
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < t.d; ++k)
                for (std::size_t l = 0; l < r; ++l)
                    for (std::size_t kp = 0; kp < t.d; ++kp) {
                        if (rhom[k][kp].is_zero()) continue;
                        Mat zm = zmult(t.m, t.phi, rhom[k][kp]);
                        std::size_t row0 = (l * t.d + kp) * t.phi;
                        std::size_t col0 = (i * t.d + k) * t.phi;
                        for (std::size_t a = 0; a < t.phi; ++a)
                            for (std::size_t b = 0; b < t.phi; ++b)
                                out.at(row0 + a, col0 + b) += am.at(l, i) * zm.at(a, b);
                    }
    }
    return t;
}

OSubquotient::OSubquotient(long m, std::size_t phi, Mat zeta_block,
                           std::size_t copies, std::vector<Vec> p,
                           std::vector<Vec> q, Int exponent_bound)
    : m_(m),
      phi_(phi),
      zeta_block_(std::move(zeta_block)),
      copies_(copies),
      p_(std::move(p)),
      q_(std::move(q)),
      nmax_(std::move(exponent_bound)) {}

Vec OSubquotient::zeta_apply(const Vec& v) const {
    std::size_t bs = zeta_block_.r;
    Vec out(v.size(), 0);
    for (std::size_t c = 0; c < copies_; ++c)
        for (std::size_t a = 0; a < bs; ++a) {
            Int s = 0;
            for (std::size_t b = 0; b < bs; ++b)
                s += zeta_block_.at(a, b) * v[c * bs + b];
            out[c * bs + a] = s;
        }
    return out;
}

std::vector<Int> OSubquotient::abelian_invariants() const {
    std::vector<Vec> rel;
    for (const auto& q : q_) {
        auto coords = lattice_coords(p_, q);
        if (!coords) throw std::logic_error("OSubquotient: Q not inside P");
        rel.push_back(std::move(*coords));
    }
    auto snf = snf_lattice(std::move(rel), p_.size());
    std::vector<Int> out;
    for (const auto& di : snf.d)
        if (di > 1) out.push_back(di);
    return out;
}

Int OSubquotient::order() const {
    Int o = 1;
    for (const auto& di : abelian_invariants()) o *= di;
    return o;
}

CycloIdeal OSubquotient::fitting() const {
    std::size_t rr = p_.size();
    std::vector<Vec> rel;
    for (const auto& q : q_) {
        auto coords = lattice_coords(p_, q);
        if (!coords) throw std::logic_error("OSubquotient: Q not inside P");
        rel.push_back(std::move(*coords));
    }
    auto snf = snf_lattice(rel, rr);
    // generators with nontrivial order: rows of Qinv (in P-basis coordinates)
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < rr; ++j)
        if (snf.d[j] > 1) keep.push_back(j);
    if (keep.empty()) return CycloIdeal::unit(m_);
    std::size_t s = keep.size();
    // ambient vectors of the kept generators
    std::vector<Vec> gens;
    for (std::size_t j : keep) {
        Vec w(p_[0].size(), 0);
        for (std::size_t tt = 0; tt < rr; ++tt)
            for (std::size_t a = 0; a < w.size(); ++a)
                w[a] += snf.Qinv.at(j, tt) * p_[tt][a];
        gens.push_back(std::move(w));
    }
    // columns (j, b): P-basis coordinates of zeta^b * w_j
    Mat mtx(rr, s * phi_);
    for (std::size_t j = 0; j < s; ++j) {
        Vec v = gens[j];
        for (std::size_t b = 0; b < phi_; ++b) {
            if (b > 0) v = zeta_apply(v);
            auto coords = lattice_coords(p_, v);
            if (!coords) throw std::logic_error("OSubquotient: zeta unstable");
            for (std::size_t tt = 0; tt < rr; ++tt)
                mtx.at(tt, j * phi_ + b) = (*coords)[tt];
        }
    }
    auto relations = preimage_lattice(mtx, rel, nmax_);
    OModulePresentation pres;
    pres.n = m_;
    pres.r = s;
    pres.c = relations.size();
    pres.entries.resize(pres.r * pres.c);
    for (std::size_t j = 0; j < relations.size(); ++j)
        for (std::size_t i = 0; i < s; ++i) {
            std::vector<Rat> cf(phi_);
            for (std::size_t b = 0; b < phi_; ++b)
                cf[b] = Rat(relations[j][i * phi_ + b]);
            pres.at(i, j) = Cyclo::from_coeffs(m_, std::move(cf));
        }
    return fitting_ideal(pres);
}

namespace {

// {x : A_stack x in Lambda-blocks}, for the maps (action(g) - 1, g != 1)
std::vector<Vec> invariant_lattice(const TwistedModule& t) {
    std::size_t n = t.zdim();
    long ng = t.group->order();
    if (ng == 1) {
        std::vector<Vec> id(n, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }
    Mat stack((std::size_t)(ng - 1) * n, n);
    std::vector<Vec> target;
    for (int g = 1; g < ng; ++g) {
        std::size_t r0 = (std::size_t)(g - 1) * n;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                stack.at(r0 + i, j) = t.zaction[(std::size_t)g].at(i, j);
            stack.at(r0 + i, i) -= 1;
        }
    }
    std::size_t rows = stack.r;
    for (std::size_t i = 0; i < rows; ++i) {
        Vec tr(rows, 0);
        tr[i] = t.zmoduli[i % n];
        target.push_back(std::move(tr));
    }
    return preimage_lattice(stack, target, t.exponent_bound());
}

// the phi x phi multiplication-by-zeta block of the coordinate model
Mat zeta_small(const TwistedModule& t) {
    if (!t.omoduli.empty()) {
        Mat out(t.phi, t.phi);
        for (std::size_t a = 0; a < t.phi; ++a)
            for (std::size_t b = 0; b < t.phi; ++b)
                out.at(a, b) = t.zeta.at(a, b);
        return out;
    }
    return zmult(t.m, t.phi, Cyclo::zeta(t.m));
}

std::vector<Vec> identity_basis(std::size_t n) {
    std::vector<Vec> id(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

// coboundary C^q -> C^{q+1} for the inhomogeneous bar complex; q = 1 or 2
Mat coboundary(const TwistedModule& t, int q) {
    const FiniteGroup& g = *t.group;
    std::size_t n = t.zdim();
    std::size_t ng = (std::size_t)g.order();
    auto add_block = [&](Mat& m, std::size_t br, std::size_t bc, const Mat& blk,
                         long sign) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (blk.at(i, j) != 0)
                    m.at(br * n + i, bc * n + j) += sign * blk.at(i, j);
    };
    Mat id = Mat::identity(n);
    if (q == 1) {
        Mat m(ng * ng * n, ng * n);
        for (std::size_t a = 0; a < ng; ++a)
            for (std::size_t b = 0; b < ng; ++b) {
                std::size_t row = a * ng + b;
                add_block(m, row, b, t.zaction[a], 1);
                add_block(m, row, (std::size_t)g.mul((int)a, (int)b), id, -1);
                add_block(m, row, a, id, 1);
            }
        return m;
    }
    if (q == 2) {
        Mat m(ng * ng * ng * n, ng * ng * n);
        for (std::size_t a = 0; a < ng; ++a)
            for (std::size_t b = 0; b < ng; ++b)
                for (std::size_t c = 0; c < ng; ++c) {
                    std::size_t row = (a * ng + b) * ng + c;
                    add_block(m, row, b * ng + c, t.zaction[a], 1);
                    add_block(m, row, (std::size_t)g.mul((int)a, (int)b) * ng + c,
                              id, -1);
                    add_block(m, row, a * ng + (std::size_t)g.mul((int)b, (int)c),
                              id, 1);
                    add_block(m, row, a * ng + b, id, -1);
                }
        return m;
    }
    throw std::invalid_argument("coboundary: bad degree");
}

}  // namespace

OSubquotient cohomology(const TwistedModule& t, int i) {
    const FiniteGroup& g = *t.group;
    std::size_t n = t.zdim();
    Int nmax = t.exponent_bound();
    if (i == 0) {
        return OSubquotient(t.m, t.phi, zeta_small(t), t.zdim() / t.phi,
                            invariant_lattice(t),
                            hnf(diag_lattice(t.zmoduli), n), nmax);
    }
    int gen = cyclic_generator(g);
    if (gen >= 0) {
        // periodic description for cyclic groups
        Mat nm = norm_matrix(t);
        Mat smin1 = mat_sub(t.zaction[(std::size_t)gen], Mat::identity(n));
        if (i == 1) {
            // ker(Norm) / im(s - 1)
            std::vector<Vec> target = diag_lattice(t.zmoduli);
            auto p = preimage_lattice(nm, target, nmax);
            auto q = column_span_plus(smin1, t.zmoduli);
            return OSubquotient(t.m, t.phi, zeta_small(t), t.zdim() / t.phi,
                                std::move(p), std::move(q), nmax);
        }
        // i == 2: invariants / im(Norm)
        auto p = invariant_lattice(t);
        auto q = column_span_plus(nm, t.zmoduli);
        return OSubquotient(t.m, t.phi, zeta_small(t), t.zdim() / t.phi, std::move(p),
                            std::move(q), nmax);
    }
    if (i != 1 && i != 2) throw std::invalid_argument("cohomology: degree > 2");
    std::size_t ng = (std::size_t)g.order();
    std::size_t copies = (i == 1) ? ng : ng * ng;
    std::vector<Int> cmod = replicate(t.zmoduli, copies);
    Mat delta = coboundary(t, i);
    std::vector<Vec> target = diag_lattice(replicate(t.zmoduli, copies * ng));
    auto p = preimage_lattice(delta, target, nmax);
    // coboundaries from the previous degree
    Mat prev;
    if (i == 1) {
        // (delta^0 x)(g) = A_g x - x
        prev = Mat(copies * n, n);
        for (std::size_t a = 0; a < ng; ++a)
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c)
                    prev.at(a * n + r, c) = t.zaction[a].at(r, c);
                prev.at(a * n + r, r) -= 1;
            }
    } else {
        prev = coboundary(t, 1);
    }
    auto q = column_span_plus(prev, cmod);
    return OSubquotient(t.m, t.phi, zeta_small(t), copies * t.zdim() / t.phi,
                        std::move(p), std::move(q), nmax);
}

NormMapData invariants_coinvariants_norm(const TwistedModule& t) {
    std::size_t n = t.zdim();
    Int nmax = t.exponent_bound();
    auto pinv = invariant_lattice(t);
    auto lambda = hnf(diag_lattice(t.zmoduli), n);
    OSubquotient inv(t.m, t.phi, zeta_small(t), t.zdim() / t.phi, pinv, lambda, nmax);
    // coinvariants: Z^N / (Lambda + sum im(A_g - 1))
    std::vector<Vec> qrows = diag_lattice(t.zmoduli);
    for (int g = 1; g < t.group->order(); ++g) {
        const Mat& a = t.zaction[(std::size_t)g];
        for (std::size_t j = 0; j < n; ++j) {
            Vec col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = a.at(i, j);
            col[j] -= 1;
            qrows.push_back(std::move(col));
        }
    }
    auto qcoin = hnf(std::move(qrows), n);
    OSubquotient coin(t.m, t.phi, zeta_small(t), t.zdim() / t.phi, identity_basis(n),
                      qcoin, nmax);
    // t(M, chi): M_chi -> M^chi induced by the norm
    Mat nm = norm_matrix(t);
    // kernel: {x : Norm x in Lambda} / Q_coin
    auto ker_lattice = preimage_lattice(nm, lambda, nmax);
    OSubquotient ker(t.m, t.phi, zeta_small(t), t.zdim() / t.phi, ker_lattice, qcoin,
                     nmax);
    // cokernel: P_inv / (im(Norm) + Lambda)
    auto image = column_span_plus(nm, t.zmoduli);
    OSubquotient coker(t.m, t.phi, zeta_small(t), t.zdim() / t.phi, pinv, image, nmax);
    return NormMapData{std::move(inv), std::move(coin), ker.order(),
                       coker.order()};
}

CycloIdeal h_mu_chi(const GModule& mu, const Character& chi) {
    if (mu.rank() > 1)
        throw std::invalid_argument("h_mu_chi: mu must be cyclic");
    TwistedModule t = build_twist(chi, mu);
    CycloIdeal f0 = cohomology(t, 0).fitting();
    CycloIdeal f1 = cohomology(t, 1).fitting();
    CycloIdeal f2 = cohomology(t, 2).fitting();
    return f0 * f2 * f1.inverse();
}

GroupRingElement annihilator_transfer(const Cyclo& x, const Character& chi,
                                      const GModule& mod) {
    if (x.denominator() != 1)
        throw std::invalid_argument("annihilator_transfer: x must be integral");
    TwistedModule t = build_twist(chi, mod);
    Mat xm(t.zdim(), t.zdim());
    Mat xb = zmult(t.m, t.phi, x);
    for (std::size_t o = 0; o < t.omoduli.size(); ++o)
        for (std::size_t a = 0; a < t.phi; ++a)
            for (std::size_t b = 0; b < t.phi; ++b)
                xm.at(o * t.phi + a, o * t.phi + b) = xb.at(a, b);
    auto pinv = invariant_lattice(t);
    auto lambda = hnf(diag_lattice(t.zmoduli), t.zdim());
    for (const auto& v : pinv) {
        Vec img = mat_vec(xm, v);
        if (!in_lattice(lambda, img)) {
            std::string witness = "[";
            for (std::size_t i = 0; i < v.size(); ++i)
                witness += (i ? "," : "") + v[i].get_str();
            witness += "]";
            throw std::domain_error(
                "annihilator_transfer: x does not annihilate the invariants; "
                "witness " +
                witness);
        }
    }
    const FiniteGroup& g = *chi.group;
    GroupRingElement out(g);
    for (int a = 0; a < g.order(); ++a) out.coeff[a] = x * chi.at(g.inverse(a));
    return out;
}

GroupRingElement trace_descent(const Cyclo& x, const Cyclo& y,
                               const Character& chi, const GModule& mod) {
    Cyclo yr = y.reduce_conductor();
    long my = yr.conductor();
    if (!inverse_different(my).contains(yr))
        throw std::invalid_argument("trace_descent: y not in the inverse different");
    const FiniteGroup& g = *chi.group;
    Cyclo z = (y * x).reduce_conductor();
    long L = std::lcm(std::lcm(z.conductor(), g.exponent()),
                      x.reduce_conductor().conductor());
    GroupRingElement out(g);
    if (z.is_zero()) return out;
    for (int a = 0; a < g.order(); ++a) {
        Cyclo s;
        Cyclo base = z.embed(L);
        Cyclo cval = chi.at(g.inverse(a)).embed(L);
        for (long k = 1; k <= L; ++k) {
            if (std::gcd(k, L) != 1) continue;
            s += base.galois(k) * cval.galois(k);
        }
        if (!s.is_rational() || s.rational_value().get_den() != 1)
            throw std::logic_error("trace_descent: non-integral trace");
        out.coeff[a] = Cyclo(s.rational_value());
    }
    // the descended element must annihilate the module itself
    for (const auto& mvec : mod.elements()) {
        Vec acc(mod.rank(), 0);
        for (int a = 0; a < g.order(); ++a) {
            Vec img = mod.apply(a, mvec);
            for (std::size_t i = 0; i < acc.size(); ++i)
                acc[i] += out.coeff[a].rational_value().get_num() * img[i];
        }
        if (!mod.is_zero(acc))
            throw std::domain_error("trace_descent: element fails to annihilate");
    }
    return out;
}

}  // namespace annkit
