#pragma once

#include "annkit/numeric.hpp"

#include <string>
#include <vector>

namespace annkit {

// Finite group on element indices 0..order-1, identity = 0, given by its
// Cayley table.  Conjugacy classes are ordered canonically: identity class
// first, then by increasing element order, then by smallest representative.
class FiniteGroup {
public:
    static constexpr long kOrderCap = 512;

    static FiniteGroup from_cayley(std::vector<std::vector<int>> cayley,
                                   std::string name = "");
    // generators as permutations of 0..degree-1 acting on the right; the group
    // generated is closed and converted to a Cayley table
    static FiniteGroup from_perm_generators(int degree,
                                            const std::vector<std::vector<int>>& gens,
                                            std::string name = "");

    long order() const { return (long)cayley_.size(); }
    const std::string& name() const { return name_; }
    int mul(int a, int b) const { return cayley_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int power(int a, long e) const;
    int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
    long element_order(int a) const { return elem_order_[a]; }
    long exponent() const { return exponent_; }
    bool is_abelian() const;
    std::vector<int> centre_elements() const;

    std::size_t num_classes() const { return classes_.size(); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int g) const { return class_of_[g]; }
    int class_rep(int c) const { return classes_[c][0]; }
    // class containing the inverses of class c
    int inverse_class(int c) const { return class_of_[inv_[classes_[c][0]]]; }

    const std::vector<std::vector<int>>& cayley() const { return cayley_; }

private:
    std::vector<std::vector<int>> cayley_;
    std::vector<int> inv_;
    std::vector<long> elem_order_;
    long exponent_ = 1;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::string name_;

    void finalize();
};

class Subgroup {
public:
    Subgroup(const FiniteGroup& parent, std::vector<int> elements);
    static Subgroup generated(const FiniteGroup& parent, std::vector<int> gens);
    static Subgroup trivial(const FiniteGroup& parent);
    static Subgroup whole(const FiniteGroup& parent);

    const FiniteGroup& parent() const { return *parent_; }
    const std::vector<int>& elements() const { return elems_; }
    long order() const { return (long)elems_.size(); }
    bool contains(int g) const;
    bool is_normal() const;
    // the subgroup as a standalone group; to_sub maps parent element -> index
    // in the subgroup group (-1 if absent), from_sub the reverse
    FiniteGroup as_group(std::vector<int>* to_sub = nullptr,
                         std::vector<int>* from_sub = nullptr) const;

    bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
    bool operator<(const Subgroup& o) const { return elems_ < o.elems_; }

private:
    const FiniteGroup* parent_;
    std::vector<int> elems_;
};

// G / N for normal N; proj maps parent elements to quotient element indices
FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& normal,
                           std::vector<int>* proj);

// all subgroups, sorted by (order, element set); intended for catalog-size
// groups
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

}  // namespace annkit
