#include "annkit/io.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace annkit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::runtime_error("schema: " + where + ": " + what);
}

void need_version(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("schema_version"))
        fail(where, "missing schema_version");
    if (j.at("schema_version").get<long>() != kSchemaVersion)
        fail(where, "unsupported schema_version");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        fail(where, std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string int_str(const Int& x) { return x.get_str(); }
Int int_parse(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int((long)j.get<long>());
    if (!j.is_string()) fail(where, "expected integer string");
    try {
        return Int(j.get<std::string>());
    } catch (const std::exception&) {
        fail(where, "bad integer '" + j.get<std::string>() + "'");
    }
}

Rat rat_parse(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat((long)j.get<long>());
    if (!j.is_string()) fail(where, "expected rational string");
    try {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        fail(where, "bad rational '" + j.get<std::string>() + "'");
    }
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.r; ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.c; ++j) row.push_back(int_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "matrix must be a nonempty array");
    Mat m((long)j.size(), (long)j.at(0).size());
    for (long i = 0; i < m.r; ++i) {
        const Json& row = j.at((std::size_t)i);
        if (!row.is_array() || (long)row.size() != m.c)
            fail(where, "ragged matrix row");
        for (long k = 0; k < m.c; ++k)
            m.at(i, k) = int_parse(row.at((std::size_t)k), where);
    }
    return m;
}

Json int_vec_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_str(x));
    return a;
}
std::vector<Int> int_vec_parse(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected array");
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_parse(e, where));
    return out;
}

const char* tristate_str(TriState t) {
    switch (t) {
        case TriState::YES: return "YES";
        case TriState::NO: return "NO";
        default: return "UNKNOWN";
    }
}
TriState tristate_parse(const Json& j, const std::string& where) {
    std::string s = j.get<std::string>();
    if (s == "YES") return TriState::YES;
    if (s == "NO") return TriState::NO;
    if (s == "UNKNOWN") return TriState::UNKNOWN;
    fail(where, "bad tristate '" + s + "'");
}

const char* split_str(SplitStatus s) {
    switch (s) {
        case SplitStatus::SPLIT: return "SPLIT";
        case SplitStatus::NONSPLIT: return "NONSPLIT";
        default: return "UNKNOWN";
    }
}
SplitStatus split_parse(const Json& j, const std::string& where) {
    std::string s = j.get<std::string>();
    if (s == "SPLIT") return SplitStatus::SPLIT;
    if (s == "NONSPLIT") return SplitStatus::NONSPLIT;
    if (s == "UNKNOWN") return SplitStatus::UNKNOWN;
    fail(where, "bad split status '" + s + "'");
}

const char* provider_str(LProvider p) {
    switch (p) {
        case LProvider::BERNOULLI: return "BERNOULLI";
        case LProvider::SUPPLIED: return "SUPPLIED";
        default: return "FORMALISM";
    }
}
LProvider provider_parse(const Json& j, const std::string& where) {
    std::string s = j.get<std::string>();
    if (s == "BERNOULLI") return LProvider::BERNOULLI;
    if (s == "SUPPLIED") return LProvider::SUPPLIED;
    if (s == "FORMALISM") return LProvider::FORMALISM;
    fail(where, "bad provider '" + s + "'");
}

const char* verdict_str(StarVerdict v) {
    switch (v) {
        case StarVerdict::HOLDS_TRIVIALLY: return "HOLDS_TRIVIALLY";
        case StarVerdict::HOLDS: return "HOLDS";
        case StarVerdict::FAILS: return "FAILS";
        default: return "UNKNOWN";
    }
}
StarVerdict verdict_parse(const Json& j, const std::string& where) {
    std::string s = j.get<std::string>();
    if (s == "HOLDS_TRIVIALLY") return StarVerdict::HOLDS_TRIVIALLY;
    if (s == "HOLDS") return StarVerdict::HOLDS;
    if (s == "FAILS") return StarVerdict::FAILS;
    if (s == "UNKNOWN") return StarVerdict::UNKNOWN;
    fail(where, "bad verdict '" + s + "'");
}

std::vector<int> elem_list_parse(const Json& j, long order,
                                 const std::string& where) {
    if (!j.is_array()) fail(where, "expected element list");
    std::vector<int> out;
    for (const auto& e : j) {
        long v = e.get<long>();
        if (v < 0 || v >= order) fail(where, "element index out of range");
        out.push_back((int)v);
    }
    return out;
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = g.name();
    j["order"] = g.order();
    Json rows = Json::array();
    for (const auto& row : g.cayley()) rows.push_back(row);
    j["cayley"] = std::move(rows);
    return j;
}

std::shared_ptr<const FiniteGroup> group_from_json(const Json& j) {
    const std::string where = "group";
    if (!j.is_object()) fail(where, "expected object");
    std::string name = j.value("name", std::string());
    if (j.contains("cayley")) {
        const Json& c = j.at("cayley");
        std::vector<std::vector<int>> tbl;
        for (const auto& row : c) tbl.push_back(row.get<std::vector<int>>());
        auto g = FiniteGroup::from_cayley(std::move(tbl), name);
        if (j.contains("order") && j.at("order").get<long>() != g.order())
            fail(where, "declared order disagrees with the Cayley table");
        return std::make_shared<const FiniteGroup>(std::move(g));
    }
    if (j.contains("perm_generators")) {
        const Json& p = j.at("perm_generators");
        int degree = (int)field(p, "degree", where).get<long>();
        std::vector<std::vector<int>> gens;
        for (const auto& g : field(p, "gens", where))
            gens.push_back(g.get<std::vector<int>>());
        auto g = FiniteGroup::from_perm_generators(degree, gens, name);
        if (j.contains("order") && j.at("order").get<long>() != g.order())
            fail(where, "declared order disagrees with the generators");
        return std::make_shared<const FiniteGroup>(std::move(g));
    }
    if (j.contains("direct_product")) {
        std::vector<long> ns = j.at("direct_product").get<std::vector<long>>();
        if (ns.empty()) fail(where, "empty direct product");
        int degree = 0;
        for (long n : ns) {
            if (n < 1) fail(where, "bad cyclic factor");
            degree += (int)n;
        }
        std::vector<std::vector<int>> gens;
        int off = 0;
        for (long n : ns) {
            std::vector<int> p(degree);
            for (int i = 0; i < degree; ++i) p[(std::size_t)i] = i;
            for (int i = 0; i < n; ++i) p[(std::size_t)(off + i)] = off + (i + 1) % (int)n;
            gens.push_back(std::move(p));
            off += (int)n;
        }
        auto g = FiniteGroup::from_perm_generators(degree, gens, name);
        if (j.contains("order") && j.at("order").get<long>() != g.order())
            fail(where, "declared order disagrees with the factors");
        return std::make_shared<const FiniteGroup>(std::move(g));
    }
    fail(where, "need one of cayley / perm_generators / direct_product");
}

Json cyclo_to_json(const Cyclo& c) {
    Json j;
    j["conductor"] = c.conductor();
    Json coeffs = Json::array();
    for (const Rat& r : c.coeffs()) coeffs.push_back(rat_str(r));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Cyclo cyclo_from_json(const Json& j) {
    const std::string where = "cyclo";
    long n = field(j, "conductor", where).get<long>();
    std::vector<Rat> coeffs;
    for (const auto& e : field(j, "coeffs", where))
        coeffs.push_back(rat_parse(e, where));
    try {
        return Cyclo::from_coeffs(n, std::move(coeffs));
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

Json ideal_to_json(const CycloIdeal& a) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["conductor"] = a.conductor();
    j["denominator"] = int_str(a.den());
    Json rows = Json::array();
    for (const auto& r : a.rows()) rows.push_back(int_vec_json(r));
    j["hnf_rows"] = std::move(rows);
    return j;
}

CycloIdeal ideal_from_json(const Json& j) {
    const std::string where = "ideal";
    need_version(j, where);
    long n = field(j, "conductor", where).get<long>();
    Int den = int_parse(field(j, "denominator", where), where);
    std::vector<Vec> rows;
    for (const auto& r : field(j, "hnf_rows", where))
        rows.push_back(int_vec_parse(r, where));
    try {
        return CycloIdeal::from_lattice(n, std::move(rows), den);
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

Json gmodule_to_json(const GModule& m) {
    Json j;
    j["invariant_factors"] = int_vec_json(m.invariant_factors());
    Json action = Json::array();
    for (int g = 0; g < m.group().order(); ++g) {
        Json e;
        e["g"] = g;
        e["matrix"] = mat_to_json(m.action(g));
        action.push_back(std::move(e));
    }
    j["action"] = std::move(action);
    return j;
}

GModule gmodule_from_json(const Json& j, const FiniteGroup& g) {
    const std::string where = "gmodule";
    std::vector<Int> d =
        int_vec_parse(field(j, "invariant_factors", where), where);
    std::vector<std::pair<int, Mat>> gen_mats;
    for (const auto& e : field(j, "action", where)) {
        long gi = field(e, "g", where).get<long>();
        if (gi < 0 || gi >= g.order()) fail(where, "action element out of range");
        Mat m = mat_from_json(field(e, "matrix", where), where + ".action");
        if (m.r != (long)d.size() || m.c != (long)d.size())
            fail(where, "action matrix has the wrong shape");
        gen_mats.emplace_back((int)gi, std::move(m));
    }
    try {
        return GModule::from_generator_mats(g, std::move(d), gen_mats);
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

Json field_to_json(const FieldDatum& f) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = group_to_json(*f.group);
    j["label"] = f.label;
    j["k_is_rational"] = f.k_is_rational;
    j["k_totally_real"] = tristate_str(f.k_totally_real);
    j["cm"] = tristate_str(f.cm);
    j["j"] = f.j;
    Json ramified = Json::array();
    for (const auto& d : f.ramified_primes) {
        Json e;
        e["label"] = d.label;
        e["gp"] = d.gp.elements();
        e["g0p"] = d.g0p.elements();
        e["frob"] = d.frob;
        e["residue_norm"] = int_str(d.residue_norm);
        ramified.push_back(std::move(e));
    }
    j["ramified_primes"] = std::move(ramified);
    Json places = Json::array();
    for (const auto& v : f.infinite_places) places.push_back(v.elements());
    j["infinite_places"] = std::move(places);
    j["mu"] = f.mu ? gmodule_to_json(*f.mu) : Json();
    Json pinfo = Json::array();
    for (const auto& pi : f.p_info) {
        Json e;
        e["p"] = int_str(pi.p);
        e["ramified_in_top_over_Q"] = tristate_str(pi.ramified_in_top_over_Q);
        Json sp = Json::array();
        for (auto s : pi.splitting) sp.push_back(split_str(s));
        e["splitting"] = std::move(sp);
        e["zeta_p_condition"] = tristate_str(pi.zeta_p_condition);
        pinfo.push_back(std::move(e));
    }
    j["p_info"] = std::move(pinfo);
    return j;
}

FieldDatum field_from_json(const Json& j) {
    const std::string where = "field";
    need_version(j, where);
    FieldDatum f;
    f.group = group_from_json(field(j, "group", where));
    long n = f.group->order();
    f.label = j.value("label", std::string());
    f.k_is_rational = j.value("k_is_rational", false);
    f.k_totally_real = tristate_parse(field(j, "k_totally_real", where), where);
    f.cm = tristate_parse(field(j, "cm", where), where);
    f.j = (int)j.value("j", -1);
    if (f.cm == TriState::YES && (f.j < 0 || f.j >= n))
        fail(where, "cm == YES needs a valid conjugation element j");
    for (const auto& e : field(j, "ramified_primes", where)) {
        std::string lbl = field(e, "label", where).get<std::string>();
        auto gp = elem_list_parse(field(e, "gp", where), n, where);
        auto g0p = elem_list_parse(field(e, "g0p", where), n, where);
        long frob = field(e, "frob", where).get<long>();
        if (frob < 0 || frob >= n) fail(where, "frobenius out of range");
        Int nq = int_parse(field(e, "residue_norm", where), where);
        try {
            f.ramified_primes.emplace_back(lbl, Subgroup(*f.group, gp),
                                           Subgroup(*f.group, g0p), (int)frob,
                                           nq);
        } catch (const std::exception& ex) {
            fail(where + ".ramified_primes[" + lbl + "]", ex.what());
        }
    }
    for (const auto& e : field(j, "infinite_places", where))
        f.infinite_places.emplace_back(*f.group, elem_list_parse(e, n, where));
    if (j.contains("mu") && !j.at("mu").is_null())
        f.mu = gmodule_from_json(j.at("mu"), *f.group);
    for (const auto& e : field(j, "p_info", where)) {
        PrimeInfo pi;
        pi.p = int_parse(field(e, "p", where), where);
        pi.ramified_in_top_over_Q =
            tristate_parse(field(e, "ramified_in_top_over_Q", where), where);
        for (const auto& s : field(e, "splitting", where))
            pi.splitting.push_back(split_parse(s, where));
        pi.zeta_p_condition =
            tristate_parse(field(e, "zeta_p_condition", where), where);
        f.p_info.push_back(std::move(pi));
    }
    return f;
}

Json classgroup_to_json(const ClassGroupData& cl) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = cl.source == ClassGroupSource::FORMS_ORACLE ? "FORMS_ORACLE"
                                                              : "INGESTED";
    j["generator_labels"] = cl.generator_labels;
    j["module"] = gmodule_to_json(cl.module);
    return j;
}

ClassGroupData classgroup_from_json(const Json& j,
                                    std::shared_ptr<const FiniteGroup> galois) {
    const std::string where = "class_group";
    need_version(j, where);
    std::string src = field(j, "source", where).get<std::string>();
    if (src != "FORMS_ORACLE" && src != "INGESTED")
        fail(where, "bad source '" + src + "'");
    ClassGroupData cl{galois, gmodule_from_json(field(j, "module", where), *galois),
                      src == "FORMS_ORACLE" ? ClassGroupSource::FORMS_ORACLE
                                            : ClassGroupSource::INGESTED,
                      {}};
    if (j.contains("generator_labels"))
        cl.generator_labels =
            j.at("generator_labels").get<std::vector<std::string>>();
    return cl;
}

Json element_to_json(const AnnihilatorElement& a) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["group"] = group_to_json(*a.element.group);
    Json coeff = Json::array();
    for (const Cyclo& c : a.element.coeff)
        coeff.push_back(rat_str(c.rational_value()));
    j["coeff"] = std::move(coeff);
    j["zero_by_vanishing"] = a.zero_by_vanishing;
    j["chi_key"] = a.chi_key;
    j["p"] = int_str(a.p);
    j["x"] = cyclo_to_json(a.x);
    j["lvalue_keys"] = a.lvalue_keys;
    j["star_verdict"] = verdict_str(a.verdict);
    j["u_chi_flag"] = a.u_flag == UChiFlag::EXACT ? "EXACT" : "LOWER_BOUND";
    j["central"] = a.central;
    j["p_integral"] = a.p_integral;
    j["notes"] = a.notes;
    return j;
}

AnnihilatorElement element_from_json(const Json& j,
                                     std::shared_ptr<const FiniteGroup>& g) {
    const std::string where = "element";
    need_version(j, where);
    if (!g) g = group_from_json(field(j, "group", where));
    AnnihilatorElement a;
    a.element = GroupRingElement(*g);
    const Json& coeff = field(j, "coeff", where);
    if ((long)coeff.size() != g->order())
        fail(where, "coefficient count disagrees with the group order");
    for (long i = 0; i < g->order(); ++i)
        a.element.coeff[(std::size_t)i] =
            Cyclo(rat_parse(coeff.at((std::size_t)i), where));
    a.zero_by_vanishing = field(j, "zero_by_vanishing", where).get<bool>();
    a.chi_key = field(j, "chi_key", where).get<std::string>();
    a.p = int_parse(field(j, "p", where), where);
    a.x = cyclo_from_json(field(j, "x", where));
    a.lvalue_keys =
        field(j, "lvalue_keys", where).get<std::vector<std::string>>();
    a.verdict = verdict_parse(field(j, "star_verdict", where), where);
    std::string fl = field(j, "u_chi_flag", where).get<std::string>();
    if (fl != "EXACT" && fl != "LOWER_BOUND") fail(where, "bad u_chi_flag");
    a.u_flag = fl == "EXACT" ? UChiFlag::EXACT : UChiFlag::LOWER_BOUND;
    a.central = field(j, "central", where).get<bool>();
    a.p_integral = field(j, "p_integral", where).get<bool>();
    a.notes = field(j, "notes", where).get<std::vector<std::string>>();
    return a;
}

Json verification_to_json(const VerificationReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["pass"] = r.pass;
    j["denominator"] = int_str(r.denominator);
    j["lines"] = r.lines;
    j["witnesses"] = r.witnesses;
    return j;
}

LValueTable Fixture::lvalue_table() const {
    auto tbl = character_table(*field.group);
    LValueTable t;
    for (const auto& e : lvalue_entries) {
        if (e.chi_index < 0 || e.chi_index >= (int)tbl.size())
            throw std::runtime_error("fixture: lvalue chi_index out of range");
        Character chi = galois_twist(tbl[(std::size_t)e.chi_index], e.twist);
        t.set(chi, e.value, e.provider);
    }
    return t;
}

std::string checksum_hex(const std::string& payload) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
    return os.str();
}

namespace {

Json fixture_payload(const Fixture& f) {
    Json p;
    p["field"] = field_to_json(f.field);
    p["class_group"] =
        f.class_group ? classgroup_to_json(*f.class_group) : Json();
    Json lv = Json::array();
    for (const auto& e : f.lvalue_entries) {
        Json x;
        x["chi_index"] = e.chi_index;
        x["twist"] = e.twist;
        x["value"] = cyclo_to_json(e.value);
        x["provider"] = provider_str(e.provider);
        lv.push_back(std::move(x));
    }
    p["lvalues"] = std::move(lv);
    Json ex = Json::array();
    for (const auto& e : f.expected) {
        Json x;
        x["kind"] = e.kind;
        x["chi_index"] = e.chi_index;
        x["x"] = cyclo_to_json(e.x);
        x["p"] = int_str(e.p);
        x["pass"] = e.pass;
        ex.push_back(std::move(x));
    }
    p["expected"] = std::move(ex);
    return p;
}

}  // namespace

Json fixture_to_json(const Fixture& f) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = f.name;
    Json payload = fixture_payload(f);
    j["checksum"] = checksum_hex(payload.dump());
    j["payload"] = std::move(payload);
    return j;
}

Fixture fixture_from_json(const Json& j) {
    const std::string where = "fixture";
    need_version(j, where);
    Fixture f;
    f.name = field(j, "name", where).get<std::string>();
    const Json& payload = field(j, "payload", where);
    std::string want = field(j, "checksum", where).get<std::string>();
    std::string got = checksum_hex(payload.dump());
    if (want != got)
        fail(where, "checksum mismatch (recorded " + want + ", computed " +
                        got + ")");
    f.field = field_from_json(field(payload, "field", where));
    if (payload.contains("class_group") && !payload.at("class_group").is_null())
        f.class_group =
            classgroup_from_json(payload.at("class_group"), f.field.group);
    for (const auto& e : field(payload, "lvalues", where)) {
        LValueFixtureEntry le;
        le.chi_index = (int)field(e, "chi_index", where).get<long>();
        le.twist = field(e, "twist", where).get<long>();
        le.value = cyclo_from_json(field(e, "value", where));
        le.provider = provider_parse(field(e, "provider", where), where);
        f.lvalue_entries.push_back(std::move(le));
    }
    for (const auto& e : field(payload, "expected", where)) {
        ExpectedReport er;
        er.kind = field(e, "kind", where).get<std::string>();
        if (er.kind != "theorem" && er.kind != "corollary")
            fail(where, "bad expected kind '" + er.kind + "'");
        er.chi_index = (int)field(e, "chi_index", where).get<long>();
        er.x = cyclo_from_json(field(e, "x", where));
        er.p = int_parse(field(e, "p", where), where);
        er.pass = field(e, "pass", where).get<bool>();
        f.expected.push_back(std::move(er));
    }
    return f;
}

Fixture ingest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ingest: cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("ingest: " + path + ": " + e.what());
    }
    try {
        return fixture_from_json(j);
    } catch (const std::exception& e) {
        throw std::runtime_error("ingest: " + path + ": " + e.what());
    }
}

void write_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string data_dir() {
    if (const char* env = std::getenv("ANNKIT_FIXTURES")) return env;
    return ANNKIT_DATA_DIR;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("catalog: cannot open " + path);
    Json j = Json::parse(in);
    need_version(j, "catalog");
    std::vector<CatalogEntry> out;
    for (const auto& e : field(j, "groups", "catalog")) {
        CatalogEntry ce;
        ce.group = group_from_json(e);
        ce.name = ce.group->name().empty() ? e.value("name", std::string())
                                           : ce.group->name();
        if (ce.name.empty()) fail("catalog", "unnamed group entry");
        out.push_back(std::move(ce));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog() {
    return load_catalog(data_dir() + "/groups_catalog.json");
}

std::string render_text_report(const Json& j) {
    std::ostringstream os;
    std::function<void(const Json&, int)> walk = [&](const Json& v, int depth) {
        std::string pad((std::size_t)depth * 2, ' ');
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (it.value().is_object() || it.value().is_array()) {
                    os << pad << it.key() << ":\n";
                    walk(it.value(), depth + 1);
                } else {
                    os << pad << it.key() << ": " << it.value().dump() << "\n";
                }
            }
        } else if (v.is_array()) {
            for (const auto& e : v) {
                if (e.is_object() || e.is_array()) {
                    os << pad << "-\n";
                    walk(e, depth + 1);
                } else {
                    os << pad << "- " << e.dump() << "\n";
                }
            }
        } else {
            os << pad << v.dump() << "\n";
        }
    };
    walk(j, 0);
    return os.str();
}

}  // namespace annkit
