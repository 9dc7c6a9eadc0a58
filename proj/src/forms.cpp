#include "annkit/forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace annkit {

namespace {

bool squarefree(long n) {
    if (n < 0) n = -n;
    for (auto [p, a] : factorize(n))
        if (a > 1) return false;
    return true;
}

}  // namespace

bool is_fundamental_discriminant(long disc) {
    if (disc == 0 || disc == 1) return false;
    long m4 = ((disc % 4) + 4) % 4;
    if (m4 == 1) return squarefree(disc);
    if (m4 != 0) return false;
    long q = disc / 4;
    long qm = ((q % 4) + 4) % 4;
    return (qm == 2 || qm == 3) && squarefree(q);
}

FormClass principal_form(long d) {
    if (d % 4 == 0) return {1, 0, Int(d / 4)};
    return {1, 1, Int((d + 1) / 4)};
}

FormClass reduce_form(FormClass f) {
    Int D = f.discriminant();
    while (true) {
        // normalize b into (-a, a]
        Int m = fdiv_r(f.b, 2 * f.a);
        if (m > f.a) m -= 2 * f.a;
        Int c = (m * m - D) / (4 * f.a);
        if (f.a > c) {
            f = {c, -m, f.a};
            continue;
        }
        f.b = (f.a == c && m < 0) ? -m : m;
        f.c = c;
        return f;
    }
}

FormClass form_inverse(const FormClass& f) {
    return reduce_form({f.a, -f.b, f.c});
}

FormClass compose(const FormClass& f1in, const FormClass& f2in) {
    if (f1in.discriminant() != f2in.discriminant())
        throw std::invalid_argument("compose: discriminant mismatch");
    FormClass f1 = f1in, f2 = f2in;
    if (f1.a > f2.a) std::swap(f1, f2);
    Int s = (f1.b + f2.b) / 2;
    Int n = f2.b - s;
    Int y1, d;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        Int u, v;
        d = gcdext(f2.a, f1.a, u, v);
        y1 = u;
    }
    Int x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        Int u, v;
        d1 = gcdext(s, d, u, v);
        x2 = u;
        y2 = -v;
    }
    Int v1 = f1.a / d1;
    Int v2 = f2.a / d1;
    Int r = fdiv_r(y1 * y2 * n - x2 * f2.c, v1);
    Int b3 = f2.b + 2 * v2 * r;
    Int a3 = v1 * v2;
    Int c3 = (f2.c * d1 + r * (f2.b + v2 * r)) / v1;
    return reduce_form({a3, b3, c3});
}

std::vector<FormClass> reduced_forms(long d) {
    if (!is_fundamental_discriminant(-d))
        throw std::invalid_argument("reduced_forms: -d not a fundamental discriminant");
    std::vector<FormClass> out;
    for (long a = 1; 3 * a * a <= d; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b + d;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            out.push_back({Int(a), Int(b), Int(c)});
        }
    }
    std::sort(out.begin(), out.end());
    auto pf = principal_form(d);
    auto it = std::find(out.begin(), out.end(), pf);
    if (it == out.end()) throw std::logic_error("reduced_forms: principal form missing");
    std::rotate(out.begin(), it, it + 1);
    return out;
}

long class_number(long d) {
    return (long)reduced_forms(d).size();
}

long unit_count(long d) {
    if (d == 3) return 6;
    if (d == 4) return 4;
    return 2;
}

ClassGroupData form_class_group(long d) {
    auto forms = reduced_forms(d);
    std::map<FormClass, int> index;
    for (std::size_t i = 0; i < forms.size(); ++i) index[forms[i]] = (int)i;
    long h = (long)forms.size();

    // small generating set by greedy closure
    std::vector<int> gens;
    std::vector<int> covered{0};
    std::vector<char> in_span((std::size_t)h, 0);
    in_span[0] = 1;
    while ((long)covered.size() < h) {
        int pick = -1;
        for (int i = 0; i < h; ++i)
            if (!in_span[(std::size_t)i]) {
                pick = i;
                break;
            }
        gens.push_back(pick);
        // close under the new generator
        std::vector<int> frontier = covered;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier) {
                int y = index.at(compose(forms[(std::size_t)x], forms[(std::size_t)pick]));
                if (!in_span[(std::size_t)y]) {
                    in_span[(std::size_t)y] = 1;
                    covered.push_back(y);
                    next.push_back(y);
                }
            }
            frontier = std::move(next);
        }
    }

    std::size_t sgens = gens.size();
    // generator-exponent coordinates by BFS
    std::vector<Vec> coord((std::size_t)h);
    std::vector<char> seen((std::size_t)h, 0);
    coord[0] = Vec(sgens, 0);
    seen[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (std::size_t i = 0; i < sgens; ++i) {
            int y = index.at(
                compose(forms[(std::size_t)x], forms[(std::size_t)gens[i]]));
            if (seen[(std::size_t)y]) continue;
            seen[(std::size_t)y] = 1;
            coord[(std::size_t)y] = coord[(std::size_t)x];
            coord[(std::size_t)y][i] += 1;
            queue.push_back(y);
        }
    }
    // relation lattice: c(x) + e_i - c(x * g_i)
    std::vector<Vec> relations;
    for (int x = 0; x < h; ++x)
        for (std::size_t i = 0; i < sgens; ++i) {
            int y = index.at(
                compose(forms[(std::size_t)x], forms[(std::size_t)gens[i]]));
            Vec rel = coord[(std::size_t)x];
            rel[i] += 1;
            for (std::size_t j = 0; j < sgens; ++j) rel[j] -= coord[(std::size_t)y][j];
            relations.push_back(std::move(rel));
        }
    auto snf = snf_lattice(std::move(relations), sgens);
    std::vector<Int> inv_factors;
    for (std::size_t j = 0; j < sgens; ++j)
        if (snf.d[j] > 1) inv_factors.push_back(snf.d[j]);
    // labels: a form mapping to each retained coordinate, when one exists
    std::vector<std::string> labels(inv_factors.size());
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < sgens; ++j)
        if (snf.d[j] > 1) kept.push_back(j);
    for (int x = 0; x < h; ++x) {
        Vec y = mat_vec(mat_transpose(snf.Q), coord[(std::size_t)x]);
        for (std::size_t t = 0; t < kept.size(); ++t) {
            bool unit = true;
            for (std::size_t j = 0; j < sgens; ++j) {
                Int want = (j == kept[t]) ? 1 : 0;
                if (snf.d[j] == 0 ? y[j] != want
                                  : fdiv_r(y[j] - want, snf.d[j]) != 0)
                    unit = false;
            }
            if (unit && labels[t].empty())
                labels[t] = "(" + forms[(std::size_t)x].a.get_str() + "," +
                            forms[(std::size_t)x].b.get_str() + "," +
                            forms[(std::size_t)x].c.get_str() + ")";
        }
    }
    for (std::size_t t = 0; t < labels.size(); ++t)
        if (labels[t].empty()) labels[t] = "g" + std::to_string(t);

    auto c2 = std::make_shared<FiniteGroup>(
        FiniteGroup::from_cayley({{0, 1}, {1, 0}}, "C2"));
    std::size_t r = inv_factors.size();
    Mat inv_mat(r, r);
    for (std::size_t i = 0; i < r; ++i) inv_mat.at(i, i) = -1;
    ClassGroupData cg;
    cg.galois = c2;
    cg.module = GModule::from_element_mats(*c2, inv_factors,
                                          {Mat::identity(r), inv_mat});
    cg.source = ClassGroupSource::FORMS_ORACLE;
    cg.generator_labels = std::move(labels);

    if (cg.module.order() != h)
        throw std::logic_error("form_class_group: structure mismatch");
    return cg;
}

}  // namespace annkit
