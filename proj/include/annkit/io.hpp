#pragma once

#include "annkit/annihilator.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace annkit {

using Json = nlohmann::json;  // object keys sorted: dumps are canonical

inline constexpr long kSchemaVersion = 1;

// ---- serialization (all integers as decimal strings, rationals as "a/b") ----

Json group_to_json(const FiniteGroup& g);
// accepts {"cayley": ...}, {"perm_generators": {...}} or {"direct_product":
// [n1, n2, ...]} (product of cyclic groups)
std::shared_ptr<const FiniteGroup> group_from_json(const Json& j);

Json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(const Json& j);

Json ideal_to_json(const CycloIdeal& a);
CycloIdeal ideal_from_json(const Json& j);

Json gmodule_to_json(const GModule& m);
GModule gmodule_from_json(const Json& j, const FiniteGroup& g);

Json field_to_json(const FieldDatum& f);
FieldDatum field_from_json(const Json& j);

Json classgroup_to_json(const ClassGroupData& cl);
ClassGroupData classgroup_from_json(const Json& j,
                                    std::shared_ptr<const FiniteGroup> galois);

Json element_to_json(const AnnihilatorElement& a);
// g may be pre-set (must match the serialized group order); when null it is
// filled with the parsed group, which the caller must keep alive
AnnihilatorElement element_from_json(const Json& j,
                                     std::shared_ptr<const FiniteGroup>& g);

Json verification_to_json(const VerificationReport& r);

// ---- fixtures ----

// L-value entry keyed by position in the canonical character table plus a
// Galois twist, so keys survive serialization without character matching
struct LValueFixtureEntry {
    int chi_index = 0;
    long twist = 1;
    Cyclo value;
    LProvider provider = LProvider::SUPPLIED;
};

struct ExpectedReport {
    std::string kind;  // "theorem" | "corollary"
    int chi_index = 1;
    Cyclo x = Cyclo(1);
    Int p = 0;
    bool pass = true;
};

struct Fixture {
    std::string name;
    FieldDatum field;
    std::optional<ClassGroupData> class_group;
    std::vector<LValueFixtureEntry> lvalue_entries;
    std::vector<ExpectedReport> expected;

    LValueTable lvalue_table() const;
};

// FNV-1a 64-bit over the canonical payload dump, "fnv1a64:" + 16 hex digits
std::string checksum_hex(const std::string& payload);

Json fixture_to_json(const Fixture& f);       // embeds a fresh checksum
Fixture fixture_from_json(const Json& j);     // verifies the checksum
Fixture ingest(const std::string& path);
void write_json(const Json& j, const std::string& path);

// $ANNKIT_FIXTURES when set, else the bundled data directory
std::string data_dir();

struct CatalogEntry {
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
};
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<CatalogEntry> load_catalog();  // data_dir()/groups_catalog.json

// human-readable rendering of a report object (deterministic)
std::string render_text_report(const Json& j);

}  // namespace annkit
