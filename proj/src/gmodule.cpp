#include "annkit/gmodule.hpp"

#include <stdexcept>

namespace annkit {

namespace {

void check_invariant_factors(const std::vector<Int>& d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 1) throw std::invalid_argument("GModule: invariant factor < 1");
        if (i > 0 && d[i] % d[i - 1] != 0)
            throw std::invalid_argument("GModule: invariant factors must divide");
    }
}

// rowwise congruence mod d_i
bool mats_congruent(const Mat& x, const Mat& y, const std::vector<Int>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (fdiv_r(x.at(i, j) - y.at(i, j), d[i]) != 0) return false;
    return true;
}

// column j lands in Z/d_i: need d_i | a_ij * d_j
void check_well_defined(const Mat& m, const std::vector<Int>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if ((m.at(i, j) * d[j]) % d[i] != 0)
                throw std::invalid_argument("GModule: action not well-defined");
}

}  // namespace

GModule GModule::from_element_mats(const FiniteGroup& g, std::vector<Int> d,
                                   std::vector<Mat> mats) {
    check_invariant_factors(d);
    if ((long)mats.size() != g.order())
        throw std::invalid_argument("GModule: one matrix per group element required");
    std::size_t r = d.size();
    for (auto& m : mats) {
        if (m.r != r || m.c != r) throw std::invalid_argument("GModule: matrix shape");
        check_well_defined(m, d);
    }
    if (!mats_congruent(mats[0], Mat::identity(r), d))
        throw std::invalid_argument("GModule: identity must act trivially");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (!mats_congruent(mat_mul(mats[(std::size_t)a], mats[(std::size_t)b]),
                                mats[(std::size_t)g.mul(a, b)], d))
                throw std::invalid_argument("GModule: action is not a homomorphism");
    GModule m;
    m.group_ = &g;
    m.d_ = std::move(d);
    m.mats_ = std::move(mats);
    return m;
}

GModule GModule::from_generator_mats(
    const FiniteGroup& g, std::vector<Int> d,
    const std::vector<std::pair<int, Mat>>& gen_mats) {
    check_invariant_factors(d);
    std::size_t r = d.size();
    std::vector<Mat> mats((std::size_t)g.order());
    std::vector<char> known((std::size_t)g.order(), 0);
    mats[0] = Mat::identity(r);
    known[0] = 1;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 0; a < g.order(); ++a) {
            if (!known[(std::size_t)a]) continue;
            for (const auto& [s, m] : gen_mats) {
                int b = g.mul(a, s);
                if (known[(std::size_t)b]) continue;
                mats[(std::size_t)b] = mat_mul(mats[(std::size_t)a], m);
                known[(std::size_t)b] = 1;
                progress = true;
            }
        }
    }
    for (char k : known)
        if (!k) throw std::invalid_argument("GModule: generators do not generate");
    return from_element_mats(g, std::move(d), std::move(mats));
}

GModule GModule::trivial_action(const FiniteGroup& g, std::vector<Int> d) {
    std::vector<Mat> mats((std::size_t)g.order(), Mat::identity(d.size()));
    return from_element_mats(g, std::move(d), std::move(mats));
}

Int GModule::order() const {
    Int o = 1;
    for (const auto& di : d_) o *= di;
    return o;
}

Vec GModule::reduce(Vec v) const {
    for (std::size_t i = 0; i < d_.size(); ++i) v[i] = fdiv_r(v[i], d_[i]);
    return v;
}

Vec GModule::apply(int g, const Vec& v) const {
    return reduce(mat_vec(mats_[(std::size_t)g], v));
}

bool GModule::is_zero(const Vec& v) const {
    for (std::size_t i = 0; i < d_.size(); ++i)
        if (fdiv_r(v[i], d_[i]) != 0) return false;
    return true;
}

std::vector<Vec> GModule::elements() const {
    std::vector<Vec> out;
    Vec cur(d_.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < d_.size()) {
            cur[i] += 1;
            if (cur[i] < d_[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == d_.size()) break;
    }
    return out;
}

}  // namespace annkit
