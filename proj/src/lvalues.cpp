#include "annkit/lvalues.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace annkit {

namespace {

// CRT-lifted generator basis of (Z/f)^*, with orders
void unit_group_basis(long f, std::vector<long>& gens, std::vector<long>& orders) {
    gens.clear();
    orders.clear();
    if (f <= 2) return;
    for (auto [p, a] : factorize(f)) {
        long pa = 1;
        for (long i = 0; i < a; ++i) pa *= p;
        long rest = f / pa;
        auto lift = [&](long g) {
            // x = g mod pa, x = 1 mod rest
            for (long x = 1; x < f; ++x)
                if (x % pa == g % pa && (rest == 1 || x % rest == 1)) return x;
            throw std::logic_error("unit_group_basis: CRT lift failed");
        };
        if (p == 2) {
            if (a == 1) continue;
            gens.push_back(lift(pa - 1));
            orders.push_back(2);
            if (a >= 3) {
                gens.push_back(lift(5));
                orders.push_back(pa / 4);
            }
        } else {
            long phi = pa / p * (p - 1);
            long root = 0;
            for (long g = 2; g < pa; ++g) {
                if (g % p == 0) continue;
                if (mul_order_mod(g, pa) == phi) {
                    root = g;
                    break;
                }
            }
            gens.push_back(lift(root));
            orders.push_back(phi);
        }
    }
}

}  // namespace

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exponents)
    : f_(modulus), exps_(std::move(exponents)) {
    if (f_ < 1) throw std::invalid_argument("DirichletCharacter: bad modulus");
    unit_group_basis(f_, gens_, gen_orders_);
    if (exps_.size() != gens_.size())
        throw std::invalid_argument("DirichletCharacter: exponent count mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        exps_[i] = ((exps_[i] % gen_orders_[i]) + gen_orders_[i]) % gen_orders_[i];
    order_ = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        order_ = std::lcm(order_, gen_orders_[i] / std::gcd(gen_orders_[i], exps_[i]));
    // discrete logs via the full product of the cyclic factors
    dlog_.assign((std::size_t)std::max(f_, 2L), {});
    long total = 1;
    for (long o : gen_orders_) total *= o;
    if (f_ > 1) {
        for (long it = 0; it < total; ++it) {
            long x = 1, rem = it;
            std::vector<long> e(gens_.size());
            for (std::size_t i = 0; i < gens_.size(); ++i) {
                e[i] = rem % gen_orders_[i];
                rem /= gen_orders_[i];
                for (long k = 0; k < e[i]; ++k) x = (x * gens_[i]) % f_;
            }
            dlog_[(std::size_t)x] = std::move(e);
        }
    }
}

Cyclo DirichletCharacter::at(long a) const {
    a = ((a % f_) + f_) % f_;
    if (f_ == 1) return Cyclo(1);
    if (std::gcd(a, f_) != 1) return Cyclo();
    long t = 0;
    const auto& e = dlog_[(std::size_t)a];
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        // chi(g_i) = zeta_{n_i}^{exps_i} = zeta_order^{exps_i * order / n_i}
        long num = exps_[i] * order_ / gen_orders_[i] * e[i] % order_;
        t = (t + num) % order_;
    }
    return Cyclo::zeta(order_, t);
}

long DirichletCharacter::conductor() const {
    for (long d : divisors(f_)) {
        bool ok = true;
        for (long a = 1; a < f_ && ok; ++a) {
            if (std::gcd(a, f_) != 1 || a % d != 1 % d) continue;
            if (at(a) != Cyclo(1)) ok = false;
        }
        if (ok) return d;
    }
    return f_;
}

bool DirichletCharacter::is_odd() const {
    if (f_ <= 2) return false;
    return at(f_ - 1) == Cyclo(-1);
}

DirichletCharacter DirichletCharacter::galois_twist(long k) const {
    if (std::gcd(k, order_) != 1)
        throw std::invalid_argument("galois_twist: k not coprime to order");
    std::vector<long> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = e[i] * k % gen_orders_[i];
    return DirichletCharacter(f_, std::move(e));
}

DirichletCharacter quadratic_character(long d) {
    long f = d < 0 ? -d : d;
    std::vector<long> gens, orders;
    unit_group_basis(f, gens, orders);
    std::vector<long> exps(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int k = kronecker(Int(d), Int(gens[i]));
        if (k == 0) throw std::invalid_argument("quadratic_character: not fundamental");
        if (k == -1) {
            if (orders[i] % 2 != 0)
                throw std::invalid_argument("quadratic_character: not fundamental");
            exps[i] = orders[i] / 2;
        }
    }
    DirichletCharacter chi(f, std::move(exps));
    if (!chi.is_primitive())
        throw std::invalid_argument("quadratic_character: discriminant not fundamental");
    return chi;
}

Cyclo dirichlet_L_at_0(const DirichletCharacter& chi) {
    if (chi.is_trivial())
        throw std::domain_error("dirichlet_L_at_0: trivial character");
    if (!chi.is_primitive())
        throw std::invalid_argument("dirichlet_L_at_0: character not primitive");
    if (!chi.is_odd()) return Cyclo();
    Cyclo s;
    long f = chi.modulus();
    for (long a = 1; a < f; ++a) {
        if (std::gcd(a, f) != 1) continue;
        s += chi.at(a) * Cyclo(Rat(a));
    }
    return s * Cyclo(Rat(-1, f));
}

Cyclo euler_factor_at_0_inverse(const Character& psi, const DecompositionData& d) {
    const FiniteGroup& g = d.gp.parent();
    std::vector<int> to_sub;
    FiniteGroup hg = d.gp.as_group(&to_sub);
    if (psi.values.size() != hg.num_classes())
        throw std::invalid_argument("euler_factor: character/group mismatch");
    auto value = [&](int parent_elem) -> const Cyclo& {
        return psi.values[hg.class_of(to_sub[parent_elem])];
    };
    long n0 = d.g0p.order();
    // m = dim V^{G_0}
    Cyclo msum;
    for (int h : d.g0p.elements()) msum += value(h);
    msum *= Cyclo(Rat(1, n0));
    long m = to_long(msum.rational_value().get_num());
    if (msum.rational_value().get_den() != 1 || m < 0)
        throw std::logic_error("euler_factor: bad invariant dimension");
    if (m == 0) return Cyclo(1);
    // power traces of F on V^{G_0}
    std::vector<Cyclo> t(m + 1);
    int fk = 0;
    for (long k = 1; k <= m; ++k) {
        fk = g.mul(fk, d.frob);
        Cyclo s;
        for (int h : d.g0p.elements()) s += value(g.mul(fk, h));
        t[k] = s * Cyclo(Rat(1, n0));
    }
    // Newton's identities for the elementary symmetric functions
    std::vector<Cyclo> el(m + 1);
    el[0] = Cyclo(1);
    for (long j = 1; j <= m; ++j) {
        Cyclo s;
        for (long i = 1; i <= j; ++i) {
            Cyclo term = el[j - i] * t[i];
            s += (i % 2 == 1) ? term : -term;
        }
        el[j] = s * Cyclo(Rat(1, j));
    }
    // det(1 - F) = sum (-1)^j e_j
    Cyclo det;
    for (long j = 0; j <= m; ++j) det += (j % 2 == 0) ? el[j] : -el[j];
    return det;
}

long order_of_vanishing(const Character& chi, const std::vector<Subgroup>& places) {
    const FiniteGroup& g = *chi.group;
    Rat r(0);
    for (const auto& v : places) {
        if (v.order() > 2)
            throw std::invalid_argument("order_of_vanishing: place group too large");
        Cyclo s;
        for (int h : v.elements()) s += chi.at(h);
        r += (s * Cyclo(Rat(1, v.order()))).rational_value();
    }
    Cyclo inv;
    for (std::size_t c = 0; c < g.num_classes(); ++c)
        inv += Cyclo(Rat((long)g.classes()[c].size())) * chi.values[c];
    r -= (inv * Cyclo(Rat(1, g.order()))).rational_value();
    if (r.get_den() != 1) throw std::logic_error("order_of_vanishing: non-integer");
    long out = to_long(r.get_num());
    if (out < 0) throw std::logic_error("order_of_vanishing: negative");
    return out;
}

std::optional<int> detect_cm_and_j(const Character& chi,
                                   const std::vector<Subgroup>& places) {
    if (order_of_vanishing(chi, places) > 0) return std::nullopt;
    const FiniteGroup& g = *chi.group;
    Cyclo minus_deg(Rat(-chi.degree));
    std::vector<int> candidates;
    for (int z : g.centre_elements())
        if (g.element_order(z) == 2 && chi.at(z) == minus_deg) candidates.push_back(z);
    if (candidates.size() != 1)
        throw std::domain_error("detect_cm_and_j: no unique central involution");
    int j = candidates[0];
    for (const auto& v : places)
        if (v.order() == 2 && v.elements()[1] != j)
            throw std::domain_error("detect_cm_and_j: place involution differs from j");
    return j;
}

Cyclo truncate(const Character& chi, const Cyclo& value,
               const std::vector<DecompositionData>& extra_primes) {
    Cyclo out = value;
    for (const auto& d : extra_primes) {
        Character psi = restrict_character(chi, d.gp);
        out *= euler_factor_at_0_inverse(psi, d);
    }
    return out;
}

std::string character_key(const Character& chi) {
    std::string key;
    for (const auto& v : chi.values) {
        key += v.reduce_conductor().str();
        key += ';';
    }
    return key;
}

void LValueTable::set(const Character& chi, Cyclo value, LProvider provider) {
    std::string key = character_key(chi);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
        if (it->second.value != value)
            throw std::domain_error("LValueTable: conflicting entries for a character");
        return;
    }
    entries_.emplace(std::move(key), Entry{std::move(value), provider});
}

bool LValueTable::has(const Character& chi) const {
    return entries_.count(character_key(chi)) != 0;
}

const LValueTable::Entry& LValueTable::get(const Character& chi) const {
    auto it = entries_.find(character_key(chi));
    if (it == entries_.end())
        throw std::out_of_range("LValueTable: missing entry");
    return it->second;
}

LValueTable artin_formalism_inflation(LValueTable t, const Character& chi,
                                      const Character& phi) {
    if (chi.degree != phi.degree)
        throw std::invalid_argument("artin_formalism_inflation: degree mismatch");
    t.set(chi, t.get(phi).value, LProvider::FORMALISM);
    return t;
}

LValueTable artin_formalism_galois(LValueTable t, const Character& chi) {
    Cyclo v = t.get(chi).value;
    for (const auto& [k, chiw] : galois_orbit(chi))
        t.set(chiw, v.galois(k), LProvider::FORMALISM);
    return t;
}

bool artin_formalism_additive(const LValueTable& t,
                              const std::vector<std::pair<long, Character>>& lhs,
                              const std::vector<std::pair<long, Character>>& rhs) {
    if (lhs.empty() && rhs.empty()) return true;
    std::size_t nc = (lhs.empty() ? rhs : lhs)[0].second.values.size();
    // the virtual characters themselves must agree
    for (std::size_t c = 0; c < nc; ++c) {
        Cyclo a, b;
        for (const auto& [mult, chi] : lhs) a += Cyclo(Rat(mult)) * chi.values[c];
        for (const auto& [mult, chi] : rhs) b += Cyclo(Rat(mult)) * chi.values[c];
        if (a != b)
            throw std::invalid_argument("artin_formalism_additive: characters differ");
    }
    Cyclo num(1), den(1);
    for (const auto& [mult, chi] : lhs) {
        const Cyclo& v = t.get(chi).value;
        if (mult >= 0)
            num *= v.pow(mult);
        else
            den *= v.pow(-mult);
    }
    Cyclo num2(1), den2(1);
    for (const auto& [mult, chi] : rhs) {
        const Cyclo& v = t.get(chi).value;
        if (mult >= 0)
            num2 *= v.pow(mult);
        else
            den2 *= v.pow(-mult);
    }
    return num * den2 == num2 * den;
}

CentreElement stickelberger_element(const FiniteGroup& g,
                                    const std::vector<DecompositionData>& s_extra,
                                    const LValueTable& table) {
    if (!g.is_abelian())
        throw std::invalid_argument("stickelberger_element: group not abelian");
    const auto tbl = character_table(g);
    CentreElement theta(g);
    for (std::size_t t = 0; t < tbl.size(); ++t) {
        Character conj;
        conj.group = &g;
        conj.degree = tbl[t].degree;
        for (const auto& v : tbl[t].values) conj.values.push_back(v.conj());
        if (!table.has(conj))
            throw std::out_of_range("stickelberger_element: incomplete table");
        theta.comps[t] = truncate(conj, table.get(conj).value, s_extra);
    }
    return theta;
}

}  // namespace annkit
