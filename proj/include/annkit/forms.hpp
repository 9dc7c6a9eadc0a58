#pragma once

#include "annkit/gmodule.hpp"

#include <memory>
#include <string>
#include <vector>

namespace annkit {

// Reduced positive definite binary quadratic form a x^2 + b x y + c y^2 of
// negative fundamental discriminant.
struct FormClass {
    Int a, b, c;

    Int discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const FormClass& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    bool operator<(const FormClass& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

bool is_fundamental_discriminant(long disc);

// all reduced forms of discriminant -d, sorted, principal form first
std::vector<FormClass> reduced_forms(long d);

FormClass principal_form(long d);
FormClass reduce_form(FormClass f);
FormClass compose(const FormClass& f, const FormClass& g);
FormClass form_inverse(const FormClass& f);

long class_number(long d);
// number of units w(-d): 6, 4, or 2
long unit_count(long d);

enum class ClassGroupSource { FORMS_ORACLE, INGESTED };

// Class group as a Galois module; `galois` owns the acting group when the
// data was produced internally.
struct ClassGroupData {
    std::shared_ptr<const FiniteGroup> galois;
    GModule module;
    ClassGroupSource source = ClassGroupSource::INGESTED;
    std::vector<std::string> generator_labels;
};

// cl(Q(sqrt(-d))) with C2-action: the nontrivial element acts by inversion
ClassGroupData form_class_group(long d);

}  // namespace annkit
