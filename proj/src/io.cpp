#include "ecid/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "ecid/errors.hpp"

namespace ecid {

namespace {

const Json& require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string(what) + ": " + ex.what());
    }
}

u64 get_u64(const Json& j, const char* what) {
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<i64>() < 0)) {
        throw ParseError(std::string(what) + ": expected a non-negative integer");
    }
    return j.get<u64>();
}

template <class T>
std::optional<T> optional_from(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get_as<T>(j.at(key), key);
}

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

Permutation permutation_from_json(const Json& j, std::size_t degree) {
    if (j.is_string()) {
        if (degree == 0) throw ParseError("group: cycle-notation permutations need \"degree\"");
        return parse_cycles(j.get<std::string>(), degree);
    }
    auto img = get_as<std::vector<std::uint32_t>>(j, "permutation");
    if (degree != 0 && img.size() != degree) throw ParseError("group: permutation length differs from \"degree\"");
    return img;
}

}  // namespace

Json load_json_arg(const std::string& arg) {
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot read \"" + arg + "\"");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("malformed JSON in \"" + arg.substr(0, 60) + "\": " + ex.what());
    }
}

FieldPtr field_from_json(const Json& j) {
    const u64 p = get_u64(require(j, "p", "field"), "field.p");
    const u64 degree = j.contains("degree") ? get_u64(j.at("degree"), "field.degree") : 1;
    if (degree == 0 || degree > 64) throw ParseError("field.degree out of range");
    std::optional<std::vector<u64>> modulus;
    if (j.contains("modulus")) modulus = get_as<std::vector<u64>>(j.at("modulus"), "field.modulus");
    return FiniteField::make(p, static_cast<unsigned>(degree), modulus);
}

Json field_to_json(const FiniteField& f) {
    return Json{{"p", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.modulus()}};
}

Group group_from_json(const Json& j, std::size_t cap) {
    if (!j.is_object()) throw ParseError("group: expected a JSON object");
    if (j.contains("abelian")) {
        const auto inv = get_as<std::vector<u64>>(j.at("abelian"), "group.abelian");
        return Group::abelian(inv, cap);
    }
    if (j.contains("permutations")) {
        const std::size_t degree = j.contains("degree") ? get_u64(j.at("degree"), "group.degree") : 0;
        std::vector<Permutation> gens;
        for (const auto& g : j.at("permutations")) gens.push_back(permutation_from_json(g, degree));
        if (!j.contains("elements")) return Group::from_permutations(gens, cap);
        std::vector<Permutation> elements;
        for (const auto& e : j.at("elements")) elements.push_back(permutation_from_json(e, degree));
        return Group::from_permutations_ordered(gens, elements, cap);
    }
    if (j.contains("cayley")) {
        auto table = get_as<std::vector<std::vector<std::uint32_t>>>(j.at("cayley"), "group.cayley");
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = get_as<std::vector<std::string>>(j.at("labels"), "group.labels");
        return Group::from_table(std::move(table), std::move(labels));
    }
    if (j.contains("invariants")) throw ParseError("group: an \"invariants\" description has no elements");
    throw ParseError("group: expected one of \"abelian\", \"permutations\", \"cayley\"");
}

bool is_invariants_group(const Json& j) { return j.is_object() && j.contains("invariants"); }

NonabelianInvariants invariants_from_json(const Json& j) {
    const Json& inv = require(j, "invariants", "group");
    NonabelianInvariants out;
    out.order = get_u64(require(inv, "order", "group.invariants"), "order");
    out.abelianization_order = get_u64(require(inv, "abelianization_order", "group.invariants"), "abelianization_order");
    out.class_count = optional_from<u64>(inv, "class_count");
    out.t_w = optional_from<u64>(inv, "t_w");
    out.phi_exponent = optional_from<u64>(inv, "phi_exponent");
    return out;
}

AlgebraElement element_from_json(const Json& j, FieldPtr field, const Group& g) {
    if (!j.is_object()) throw ParseError("idempotent: expected a JSON object");
    auto subgroup_for = [&](const Json& which) {
        const auto name = get_as<std::string>(which, "idempotent subgroup");
        if (name == "group") {
            std::vector<std::size_t> all(g.order());
            std::iota(all.begin(), all.end(), std::size_t{0});
            return all;
        }
        if (name == "commutator") return commutator_subgroup(g).subgroup;
        throw ParseError("idempotent: unknown subgroup \"" + name + "\" (use group or commutator)");
    };
    if (j.contains("hat")) return hat_idempotent(g, subgroup_for(j.at("hat")), field);
    if (j.contains("one_minus_hat")) {
        return AlgebraElement::one(field, g) - hat_idempotent(g, subgroup_for(j.at("one_minus_hat")), field);
    }
    if (j.contains("digits")) {
        return AlgebraElement::from_digits(field, g, get_as<std::string>(j.at("digits"), "idempotent.digits"));
    }
    const Json& coeffs = require(j, "coeffs", "idempotent");
    if (!coeffs.is_array() || coeffs.size() != g.order()) {
        throw ParseError("idempotent.coeffs: expected " + std::to_string(g.order()) + " entries");
    }
    std::vector<u64> codes;
    codes.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (c.is_number_integer()) {
            codes.push_back(field->from_integer(c.get<i64>()));
        } else if (c.is_array()) {
            const auto poly = get_as<std::vector<u64>>(c, "idempotent.coeffs");
            if (poly.size() > field->degree()) throw ParseError("idempotent.coeffs: coefficient list longer than the degree");
            for (u64 v : poly) {
                if (v >= field->characteristic()) throw ParseError("idempotent.coeffs: coefficient outside [0, p)");
            }
            codes.push_back(field->from_coefficients(poly));
        } else {
            throw ParseError("idempotent.coeffs: entries must be integers or coefficient lists");
        }
    }
    return AlgebraElement(std::move(field), g, std::move(codes));
}

Json element_to_json(const AlgebraElement& e) {
    Json coeffs = Json::array();
    const auto& f = *e.field();
    for (u64 c : e.codes()) {
        if (f.degree() == 1) {
            coeffs.push_back(c);
        } else {
            coeffs.push_back(f.coefficients(c));
        }
    }
    return Json{{"coeffs", coeffs}};
}

WedderburnData wedderburn_from_json(const Json& j) {
    WedderburnData wd;
    wd.commutative_count = get_u64(require(j, "r", "wedderburn"), "wedderburn.r");
    for (const auto& pair : require(j, "noncommutative", "wedderburn")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("wedderburn.noncommutative: expected [n, d] pairs");
        wd.noncommutative.emplace_back(get_u64(pair[0], "n_j"), get_u64(pair[1], "d_j"));
    }
    if (j.contains("commutative_degrees")) {
        wd.commutative_degrees = get_as<std::vector<u64>>(j.at("commutative_degrees"), "wedderburn.commutative_degrees");
    }
    if (j.contains("source")) wd.source = wedderburn_source_from_string(get_as<std::string>(j.at("source"), "source"));
    wd.validate();
    return wd;
}

Json to_json(const WedderburnData& wd) {
    Json nc = Json::array();
    for (const auto& [n, d] : wd.noncommutative) nc.push_back({n, d});
    Json j{{"r", wd.commutative_count}, {"noncommutative", nc}, {"gamma", wd.gamma()}, {"source", to_string(wd.source)}};
    if (!wd.commutative_degrees.empty()) j["commutative_degrees"] = wd.commutative_degrees;
    return j;
}

Json to_json(const ClassificationReport& r) {
    Json rules = Json::array();
    for (const auto& f : r.rules) {
        rules.push_back({{"id", f.id}, {"statement", f.statement}, {"inputs", f.inputs}, {"holds", f.holds},
                         {"decisive", f.decisive}});
    }
    Json j{{"verdict", to_string(r.verdict)}, {"p", r.p},       {"q", r.q}, {"group_order", r.group_order},
           {"semisimple", r.semisimple},       {"rules", rules}};
    Json quantities = Json::object();
    put_optional(quantities, "t_w", r.t_w);
    put_optional(quantities, "phi_exponent", r.phi_exponent);
    put_optional(quantities, "abelianization_order", r.abelianization_order);
    put_optional(quantities, "gamma", r.gamma);
    put_optional(quantities, "b0", r.b0);
    put_optional(quantities, "floor_sqrt_gamma", r.floor_sqrt_gamma);
    put_optional(quantities, "s", r.s);
    put_optional(quantities, "ceil_sqrt_gamma_over_s", r.ceil_sqrt_gamma_over_s);
    j["quantities"] = quantities;
    j["splitting"] = {{"asserted", r.splitting_asserted}, {"certified", r.splitting_certified}};
    if (r.wedderburn) j["wedderburn"] = to_json(*r.wedderburn);
    if (r.census) {
        const auto& c = *r.census;
        Json dims = Json::array();
        for (const auto& [d, n] : c.primitive_dimension_counts) dims.push_back({d, n});
        j["census"] = {{"candidates", c.candidates},
                       {"idempotents", c.idempotents},
                       {"primitive", c.primitive},
                       {"primitive_dimension_counts", dims},
                       {"every_primitive_has_dim_p", c.every_primitive_has_dim_p},
                       {"every_principal_indecomposable_ecd", c.every_principal_indecomposable_ecd}};
    }
    return j;
}

ClassificationReport classification_from_json(const Json& j) {
    ClassificationReport r;
    r.verdict = verdict_from_string(get_as<std::string>(require(j, "verdict", "report"), "verdict"));
    r.p = get_u64(require(j, "p", "report"), "p");
    r.q = get_u64(require(j, "q", "report"), "q");
    r.group_order = get_u64(require(j, "group_order", "report"), "group_order");
    r.semisimple = get_as<bool>(require(j, "semisimple", "report"), "semisimple");
    for (const auto& f : require(j, "rules", "report")) {
        r.rules.push_back({get_as<std::string>(f.at("id"), "rule.id"), get_as<std::string>(f.at("statement"), "rule"),
                           get_as<std::string>(f.at("inputs"), "rule"), get_as<bool>(f.at("holds"), "rule"),
                           get_as<bool>(f.at("decisive"), "rule")});
    }
    if (j.contains("quantities")) {
        const auto& q = j.at("quantities");
        r.t_w = optional_from<u64>(q, "t_w");
        r.phi_exponent = optional_from<u64>(q, "phi_exponent");
        r.abelianization_order = optional_from<u64>(q, "abelianization_order");
        r.gamma = optional_from<u64>(q, "gamma");
        r.b0 = optional_from<u64>(q, "b0");
        r.floor_sqrt_gamma = optional_from<u64>(q, "floor_sqrt_gamma");
        r.s = optional_from<u64>(q, "s");
        r.ceil_sqrt_gamma_over_s = optional_from<u64>(q, "ceil_sqrt_gamma_over_s");
    }
    if (j.contains("splitting")) {
        r.splitting_asserted = get_as<bool>(j.at("splitting").at("asserted"), "splitting.asserted");
        r.splitting_certified = get_as<bool>(j.at("splitting").at("certified"), "splitting.certified");
    }
    if (j.contains("wedderburn")) r.wedderburn = wedderburn_from_json(j.at("wedderburn"));
    if (j.contains("census")) {
        const auto& c = j.at("census");
        ModularCensusSummary s;
        s.candidates = get_u64(c.at("candidates"), "census.candidates");
        s.idempotents = get_as<std::size_t>(c.at("idempotents"), "census.idempotents");
        s.primitive = get_as<std::size_t>(c.at("primitive"), "census.primitive");
        for (const auto& d : c.at("primitive_dimension_counts")) {
            s.primitive_dimension_counts.emplace_back(get_as<std::size_t>(d.at(0), "dim"), get_as<std::size_t>(d.at(1), "count"));
        }
        s.every_primitive_has_dim_p = get_as<bool>(c.at("every_primitive_has_dim_p"), "census");
        s.every_principal_indecomposable_ecd = get_as<bool>(c.at("every_principal_indecomposable_ecd"), "census");
        r.census = s;
    }
    return r;
}

namespace {

Json bounds_to_json(const std::vector<Bound>& bounds) {
    Json out = Json::array();
    for (const auto& b : bounds) out.push_back({{"value", b.value.to_string()}, {"cite", b.cite}});
    return out;
}

}  // namespace

Json to_json(const CodeReport& r) {
    Json j{{"idempotent", r.idempotent}, {"dim", r.dim}, {"dim_method", to_string(r.dim_method)}};
    put_optional(j, "dim_formula", r.dim_formula);
    put_optional(j, "congruence_set", r.congruence_set);
    if (r.distance) {
        j["distance"] = {{"exact", *r.distance}};
    } else {
        j["distance"] = {{"lower_bounds", bounds_to_json(r.bounds)}};
    }
    j["bounds"] = bounds_to_json(r.bounds);
    j["primitivity"] = to_string(r.primitivity);
    j["primitivity_reason"] = r.primitivity_reason;
    return j;
}

CodeReport code_report_from_json(const Json& j) {
    CodeReport r;
    r.idempotent = get_as<std::vector<u64>>(require(j, "idempotent", "code report"), "idempotent");
    r.dim = get_as<std::size_t>(require(j, "dim", "code report"), "dim");
    r.dim_method = dim_method_from_string(get_as<std::string>(require(j, "dim_method", "code report"), "dim_method"));
    r.dim_formula = optional_from<u64>(j, "dim_formula");
    r.congruence_set = optional_from<std::vector<u64>>(j, "congruence_set");
    const auto& dist = require(j, "distance", "code report");
    if (dist.contains("exact")) r.distance = get_u64(dist.at("exact"), "distance.exact");
    for (const auto& b : require(j, "bounds", "code report")) {
        r.bounds.push_back({Rational::parse(get_as<std::string>(b.at("value"), "bound.value")),
                            get_as<std::string>(b.at("cite"), "bound.cite")});
    }
    r.primitivity = primitivity_from_string(get_as<std::string>(require(j, "primitivity", "code report"), "primitivity"));
    if (j.contains("primitivity_reason")) r.primitivity_reason = get_as<std::string>(j.at("primitivity_reason"), "reason");
    return r;
}

Json to_json(const QOrbitData& d) {
    Json orbits = Json::array();
    for (const auto& o : d.orbits) {
        Json members = Json::array();
        for (auto i : o) members.push_back(d.group.label(i));
        orbits.push_back({{"size", o.size()}, {"t", d.t[o.front()]}, {"members", members}});
    }
    return Json{{"q", d.q.q},
                {"group_order", d.group.order()},
                {"exponent", d.exponent},
                {"l", d.l},
                {"w", d.group.label(d.w)},
                {"t_w", d.t_w},
                {"orbit_count", d.orbits.size()},
                {"orbits", orbits}};
}

Json to_json(const SplittingVerdict& v) {
    return Json{{"splits", v.splits},
                {"t_w_divides_t", v.t_w_divides_t},
                {"exponent_divides_q_t_minus_1", v.exponent_divides_q_t_minus_1},
                {"t_w", v.t_w},
                {"exponent", v.exponent},
                {"q_t_mod_exponent", v.q_t_mod_exponent},
                {"evidence", v.evidence}};
}

}  // namespace ecid
