#include "annkit/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace annkit {

FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> cayley,
                                     std::string name) {
    const long n = (long)cayley.size();
    if (n < 1 || n > kOrderCap)
        throw std::invalid_argument("group order out of range");
    for (const auto& row : cayley)
        if ((long)row.size() != n)
            throw std::invalid_argument("Cayley table not square");
    // identity checks
    for (int a = 0; a < n; ++a)
        if (cayley[0][a] != a || cayley[a][0] != a)
            throw std::invalid_argument("element 0 is not a two-sided identity");
    // latin square (unique inverses / cancellation)
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen_r(n, 0), seen_c(n, 0);
        for (int b = 0; b < n; ++b) {
            int r = cayley[a][b], c = cayley[b][a];
            if (r < 0 || r >= n || c < 0 || c >= n || seen_r[r] || seen_c[c])
                throw std::invalid_argument("Cayley table is not a latin square");
            seen_r[r] = seen_c[c] = 1;
        }
    }
    // associativity spot check: full check is O(n^3); n <= 512 makes it cheap
    // enough for catalog sizes, so do it exactly
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
                    throw std::invalid_argument("Cayley table not associative");
    FiniteGroup g;
    g.cayley_ = std::move(cayley);
    g.name_ = std::move(name);
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::from_perm_generators(
    int degree, const std::vector<std::vector<int>>& gens, std::string name) {
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(degree);
        for (int i = 0; i < degree; ++i) c[i] = b[a[i]];
        return c;
    };
    std::vector<std::vector<int>> elems = {id};
    std::map<std::vector<int>, int> index = {{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gperm : gens) {
            auto next = compose(elems[head], gperm);
            if (index.emplace(next, (int)elems.size()).second) {
                if ((long)elems.size() >= kOrderCap)
                    throw std::invalid_argument("generated group exceeds order cap");
                elems.push_back(std::move(next));
            }
        }
    }
    const int n = (int)elems.size();
    std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            cayley[a][b] = index.at(compose(elems[a], elems[b]));
    return from_cayley(std::move(cayley), std::move(name));
}

void FiniteGroup::finalize() {
    const long n = order();
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (cayley_[a][b] == 0) inv_[a] = b;
    elem_order_.assign(n, 1);
    exponent_ = 1;
    for (int a = 0; a < n; ++a) {
        long o = 1;
        int x = a;
        while (x != 0) {
            x = mul(x, a);
            ++o;
        }
        elem_order_[a] = o;
        exponent_ = std::lcm(exponent_, o);
    }
    // conjugacy classes
    class_of_.assign(n, -1);
    std::vector<std::vector<int>> raw;
    for (int a = 0; a < n; ++a) {
        if (class_of_[a] != -1) continue;
        std::set<int> cls;
        for (int g = 0; g < n; ++g) cls.insert(conjugate(g, a));
        std::vector<int> v(cls.begin(), cls.end());
        for (int x : v) class_of_[x] = (int)raw.size();
        raw.push_back(std::move(v));
    }
    std::sort(raw.begin(), raw.end(), [&](const auto& x, const auto& y) {
        if (x[0] == 0) return true;
        if (y[0] == 0) return false;
        long ox = elem_order_[x[0]], oy = elem_order_[y[0]];
        if (ox != oy) return ox < oy;
        return x[0] < y[0];
    });
    classes_ = std::move(raw);
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (int x : classes_[c]) class_of_[x] = (int)c;
}

int FiniteGroup::power(int a, long e) const {
    long o = elem_order_[a];
    e = ((e % o) + o) % o;
    int r = 0;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

bool FiniteGroup::is_abelian() const {
    return (long)classes_.size() == order();
}

std::vector<int> FiniteGroup::centre_elements() const {
    std::vector<int> z;
    for (int a = 0; a < order(); ++a)
        if (classes_[class_of_[a]].size() == 1) z.push_back(a);
    return z;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<int> elements)
    : parent_(&parent), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty() || elems_[0] != 0)
        throw std::invalid_argument("subgroup must contain the identity");
    for (int a : elems_)
        for (int b : elems_)
            if (!contains(parent.mul(a, b)))
                throw std::invalid_argument("subgroup not closed");
}

Subgroup Subgroup::generated(const FiniteGroup& parent, std::vector<int> gens) {
    std::set<int> elems = {0};
    std::vector<int> queue = {0};
    while (!queue.empty()) {
        int a = queue.back();
        queue.pop_back();
        for (int g : gens) {
            int b = parent.mul(a, g);
            if (elems.insert(b).second) queue.push_back(b);
        }
    }
    return Subgroup(parent, std::vector<int>(elems.begin(), elems.end()));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
    return Subgroup(parent, {0});
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
    std::vector<int> all(parent.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(parent, std::move(all));
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

bool Subgroup::is_normal() const {
    for (int g = 0; g < parent_->order(); ++g)
        for (int h : elems_)
            if (!contains(parent_->conjugate(g, h))) return false;
    return true;
}

FiniteGroup Subgroup::as_group(std::vector<int>* to_sub,
                               std::vector<int>* from_sub) const {
    const int m = (int)elems_.size();
    std::vector<int> idx(parent_->order(), -1);
    for (int i = 0; i < m; ++i) idx[elems_[i]] = i;
    std::vector<std::vector<int>> cayley(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            cayley[i][j] = idx[parent_->mul(elems_[i], elems_[j])];
    if (to_sub) *to_sub = idx;
    if (from_sub) *from_sub = elems_;
    return FiniteGroup::from_cayley(std::move(cayley));
}

FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& normal,
                           std::vector<int>* proj) {
    if (!normal.is_normal()) throw std::invalid_argument("subgroup not normal");
    const long n = g.order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    // cosets keyed by their sorted element set; identity coset first, then by
    // smallest element, so quotient identity is index 0
    for (int a = 0; a < n; ++a) {
        if (coset_of[a] != -1) continue;
        std::vector<int> coset;
        for (int h : normal.elements()) coset.push_back(g.mul(a, h));
        std::sort(coset.begin(), coset.end());
        int id = (int)reps.size();
        for (int x : coset) coset_of[x] = id;
        reps.push_back(coset[0]);
    }
    const int q = (int)reps.size();
    std::vector<std::vector<int>> cayley(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            cayley[i][j] = coset_of[g.mul(reps[i], reps[j])];
    if (proj) *proj = coset_of;
    return FiniteGroup::from_cayley(std::move(cayley));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    // seed with all cyclic subgroups, then close under joins with cyclic ones
    std::vector<std::vector<int>> cyclic;
    for (int a = 0; a < g.order(); ++a) {
        auto s = Subgroup::generated(g, {a});
        if (seen.insert(s.elements()).second) {
            cyclic.push_back(s.elements());
            out.push_back(std::move(s));
        } else {
            cyclic.push_back(s.elements());
        }
    }
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int a = 0; a < g.order(); ++a) {
            if (out[head].contains(a)) continue;
            std::vector<int> gens = out[head].elements();
            gens.push_back(a);
            auto s = Subgroup::generated(g, gens);
            if (seen.insert(s.elements()).second) out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elements() < y.elements();
    });
    return out;
}

}  // namespace annkit
