#pragma once

#include "annkit/group.hpp"
#include "annkit/linalg.hpp"

#include <vector>

namespace annkit {

// Finite abelian group (sum of Z/d_i, d_1 | d_2 | ...) with a G-action given
// by one integer matrix per group element, taken modulo each row's d_i.
class GModule {
public:
    static GModule from_element_mats(const FiniteGroup& g, std::vector<Int> d,
                                     std::vector<Mat> mats);
    static GModule from_generator_mats(
        const FiniteGroup& g, std::vector<Int> d,
        const std::vector<std::pair<int, Mat>>& gen_mats);
    static GModule trivial_action(const FiniteGroup& g, std::vector<Int> d);

    const FiniteGroup& group() const { return *group_; }
    const std::vector<Int>& invariant_factors() const { return d_; }
    std::size_t rank() const { return d_.size(); }
    const Mat& action(int g) const { return mats_[(std::size_t)g]; }
    Int order() const;

    // coordinates reduced into [0, d_i)
    Vec reduce(Vec v) const;
    Vec apply(int g, const Vec& v) const;
    bool is_zero(const Vec& v) const;
    // all elements (coordinate vectors); intended for small modules
    std::vector<Vec> elements() const;

private:
    const FiniteGroup* group_ = nullptr;
    std::vector<Int> d_;
    std::vector<Mat> mats_;
};

}  // namespace annkit
