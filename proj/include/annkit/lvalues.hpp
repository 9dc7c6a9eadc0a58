#pragma once

#include "annkit/centre.hpp"
#include "annkit/character.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace annkit {

// Character of (Z/f)^* given by exponents on a fixed generator basis
// (primitive roots at odd prime powers; -1, 5 at powers of two).
class DirichletCharacter {
public:
    DirichletCharacter(long modulus, std::vector<long> exponents);

    long modulus() const { return f_; }
    const std::vector<long>& generators() const { return gens_; }
    const std::vector<long>& generator_orders() const { return gen_orders_; }
    const std::vector<long>& exponents() const { return exps_; }

    long order() const { return order_; }
    long conductor() const;
    bool is_primitive() const { return conductor() == f_; }
    bool is_trivial() const { return order_ == 1; }
    bool is_odd() const;  // chi(-1) = -1

    // value at a (0 when gcd(a, f) > 1), in Q(zeta_order)
    Cyclo at(long a) const;

    DirichletCharacter galois_twist(long k) const;

private:
    long f_;
    std::vector<long> gens_, gen_orders_, exps_;
    long order_;
    std::vector<std::vector<long>> dlog_;  // per residue class, generator exponents
};

// quadratic character attached to a fundamental discriminant (Kronecker symbol)
DirichletCharacter quadratic_character(long fundamental_discriminant);

// L(0, chi) = -B_{1,chi} for odd primitive chi; 0 for even nontrivial chi;
// throws std::domain_error for the trivial character
Cyclo dirichlet_L_at_0(const DirichletCharacter& chi);

// det(1 - F_p | V_psi^{G_0,p}) via power traces and Newton's identities;
// psi is a character of d.gp.as_group()
Cyclo euler_factor_at_0_inverse(const Character& psi, const DecompositionData& d);

// r(chi) = sum_v <chi|_{G_v}, 1> - <chi, 1>
long order_of_vanishing(const Character& chi, const std::vector<Subgroup>& places);

// the unique central involution j with chi(j) = -chi(1); nullopt when the
// order of vanishing is positive; throws on inconsistent place data
std::optional<int> detect_cm_and_j(const Character& chi,
                                   const std::vector<Subgroup>& places);

// L_S(0, chi) = value * prod_p det(1 - F_p | V^{G_0,p}) over the extra primes
Cyclo truncate(const Character& chi, const Cyclo& value,
               const std::vector<DecompositionData>& extra_primes);

enum class LProvider { BERNOULLI, SUPPLIED, FORMALISM };

std::string character_key(const Character& chi);

// map character -> exact L-value at 0, with provenance tag per entry
class LValueTable {
public:
    struct Entry {
        Cyclo value;
        LProvider provider = LProvider::SUPPLIED;
    };

    void set(const Character& chi, Cyclo value, LProvider provider);
    bool has(const Character& chi) const;
    const Entry& get(const Character& chi) const;  // throws if absent
    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, Entry>& entries() const { return entries_; }

private:
    std::map<std::string, Entry> entries_;
};

// entry(chi) := entry(phi) for chi the inflation of phi; contradiction with
// an existing entry throws std::domain_error
LValueTable artin_formalism_inflation(LValueTable t, const Character& chi,
                                      const Character& phi);

// fill the Galois orbit of chi: entry(chi^w) := entry(chi)^w
LValueTable artin_formalism_galois(LValueTable t, const Character& chi);

// virtual-character identity sum a_i chi_i = sum b_j psi_j implies the
// product identity prod entry(chi_i)^{a_i} = prod entry(psi_j)^{b_j};
// verifies both the character identity and the value identity
bool artin_formalism_additive(const LValueTable& t,
                              const std::vector<std::pair<long, Character>>& lhs,
                              const std::vector<std::pair<long, Character>>& rhs);

// Theta(K/k, S) for abelian G: component at chi is L_S(0, conj(chi))
CentreElement stickelberger_element(const FiniteGroup& g,
                                    const std::vector<DecompositionData>& s_extra,
                                    const LValueTable& table);

}  // namespace annkit
