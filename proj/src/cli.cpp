#include "ecid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ecid/errors.hpp"
#include "ecid/io.hpp"

namespace ecid::cli {

namespace {

struct Options {
    std::string field;
    std::string group;
    std::vector<std::string> idempotents;
    std::string wedderburn;
    std::string subsets = "singletons";
    u64 budget = kDefaultDistanceBudget;
    unsigned threads = 0;
    u64 t = 0;
    u64 gamma = 0;
    u64 s = 0;
    std::optional<u64> distance;
    bool assert_splitting = false;
    bool modular_exhaustive = false;
    bool primitive = false;
    bool json = false;
    bool table = false;
};

std::string hex_seed() {
    std::ostringstream s;
    s << "0x" << std::hex << Group::kAssociativitySeed;
    return s.str();
}

Json header(const std::string& command) {
    return Json{{"tool", "ecid"}, {"version", kVersion}, {"command", command}, {"seed", hex_seed()}};
}

void print_header(std::ostream& out, const std::string& command) {
    out << "# ecid " << kVersion << ' ' << command << " seed=" << hex_seed() << '\n';
}

FieldPtr load_field(const Options& o) {
    if (o.field.empty()) throw ParseError("--field is required");
    return field_from_json(load_json_arg(o.field));
}

Json load_group_json(const Options& o) {
    if (o.group.empty()) throw ParseError("--group is required");
    return load_json_arg(o.group);
}

std::optional<WedderburnData> load_wedderburn(const Options& o) {
    if (o.wedderburn.empty()) return std::nullopt;
    return wedderburn_from_json(load_json_arg(o.wedderburn));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string opt_str(const std::optional<u64>& v) { return v ? std::to_string(*v) : "-"; }

void print_classification(std::ostream& out, const ClassificationReport& r) {
    out << "verdict: " << to_string(r.verdict) << '\n';
    out << "p = " << r.p << ", q = " << r.q << ", |H| = " << r.group_order
        << (r.semisimple ? " (semisimple)" : " (modular)") << '\n';
    std::vector<std::string> q;
    auto add = [&](const char* name, const std::optional<u64>& v) {
        if (v) q.push_back(std::string(name) + " = " + std::to_string(*v));
    };
    add("t_w", r.t_w);
    add("phi(exp)", r.phi_exponent);
    add("[H:H']", r.abelianization_order);
    add("gamma", r.gamma);
    add("b0", r.b0);
    add("floor(sqrt(gamma))", r.floor_sqrt_gamma);
    add("s", r.s);
    add("ceil(sqrt(gamma/s))", r.ceil_sqrt_gamma_over_s);
    if (!q.empty()) out << join(q, ", ") << '\n';
    if (r.splitting_asserted || r.splitting_certified) {
        out << "splitting field: " << (r.splitting_certified ? "certified (exp(H) | q - 1)" : "asserted by caller") << '\n';
    }
    if (r.wedderburn) {
        std::vector<std::string> nc;
        for (const auto& [n, d] : r.wedderburn->noncommutative) nc.push_back("M_" + std::to_string(n) + "(deg " + std::to_string(d) + ")");
        out << "wedderburn (" << to_string(r.wedderburn->source) << "): r = " << r.wedderburn->commutative_count
            << (nc.empty() ? "" : ", " + join(nc, " + ")) << '\n';
    }
    if (r.census) {
        const auto& c = *r.census;
        out << "census: " << c.candidates << " candidates, " << c.idempotents << " idempotents, " << c.primitive
            << " primitive\n";
        for (const auto& [d, n] : c.primitive_dimension_counts) out << "  primitive of dimension " << d << ": " << n << '\n';
    }
    out << "rules:\n";
    for (const auto& f : r.rules) {
        out << "  [" << (f.holds ? "holds" : "fails") << (f.decisive ? ", decisive" : "") << "] " << f.id << ": "
            << f.statement << " (" << f.inputs << ")\n";
    }
}

// ---- orbits ------------------------------------------------------------------------------

int cmd_orbits(const Options& o, std::ostream& out) {
    const auto field = load_field(o);
    const auto g = group_from_json(load_group_json(o));
    const auto d = qorbits(g, field->prime_power());
    if (o.json) {
        Json j = header("orbits");
        j["result"] = to_json(d);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    print_header(out, "orbits");
    std::vector<std::string> sizes;
    for (const auto& orb : d.orbits) sizes.push_back(std::to_string(orb.size()));
    std::sort(sizes.begin(), sizes.end(), [](const std::string& a, const std::string& b) { return std::stoull(a) < std::stoull(b); });
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    out << "q = " << d.q.q << ", |G| = " << g.order() << ", exp(G) = " << d.exponent << ", l = " << d.l
        << ", w = " << g.label(d.w) << ", t_w = " << d.t_w << '\n';
    out << "orbit sizes: {" << join(sizes, ", ") << "}, " << d.orbits.size() << " orbits\n";
    const std::size_t shown = std::min<std::size_t>(d.orbits.size(), 64);
    for (std::size_t i = 0; i < shown; ++i) {
        std::vector<std::string> members;
        for (auto m : d.orbits[i]) members.push_back(g.label(m));
        out << "  size " << d.orbits[i].size() << ": " << join(members, ", ") << '\n';
    }
    if (shown < d.orbits.size()) out << "  ... " << d.orbits.size() - shown << " more (use --json)\n";
    return kExitOk;
}

// ---- splitting ---------------------------------------------------------------------------

int cmd_splitting(const Options& o, std::ostream& out) {
    const auto field = load_field(o);
    const auto g = group_from_json(load_group_json(o));
    const auto q = field->prime_power();
    Json result;
    if (g.is_abelian()) {
        if (o.t == 0) throw ParseError("splitting: --t is required for an abelian group");
        result = to_json(is_splitting_field(g, q, o.t));
        result["t"] = o.t;
    } else {
        if (g.order() % q.p == 0) throw DomainError("splitting: p divides |H|");
        result = Json{{"necessary_exp_abelianization_divides_q_minus_1", splitting_necessary_condition(g, q)},
                      {"sufficient_exp_divides_q_minus_1", splitting_sufficient_condition(g, q)}};
    }
    if (o.json) {
        Json j = header("splitting");
        j["result"] = result;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    print_header(out, "splitting");
    if (g.is_abelian()) {
        out << "t = " << o.t << ": " << (result["splits"].get<bool>() ? "splitting field" : "not a splitting field") << '\n';
        out << "exp(G) = " << result["exponent"] << ", q^t mod exp(G) = " << result["q_t_mod_exponent"]
            << ", t_w = " << result["t_w"] << ", t_w | t: " << (result["t_w_divides_t"].get<bool>() ? "yes" : "no") << '\n';
        out << result["evidence"].get<std::string>() << '\n';
    } else {
        out << "exp(H/H') | q - 1 (necessary): "
            << (result["necessary_exp_abelianization_divides_q_minus_1"].get<bool>() ? "yes" : "no") << '\n';
        out << "exp(H) | q - 1 (sufficient): " << (result["sufficient_exp_divides_q_minus_1"].get<bool>() ? "yes" : "no")
            << '\n';
    }
    return kExitOk;
}

// ---- classify ----------------------------------------------------------------------------

ClassificationReport classify_from_options(const Options& o, FieldPtr field, const Json& gj) {
    const auto q = field->prime_power();
    const auto wd = load_wedderburn(o);
    if (is_invariants_group(gj)) {
        SplittingStatus st;
        st.asserted = o.assert_splitting;
        return classify_nonabelian_arithmetic(invariants_from_json(gj), q, wd, st);
    }
    const auto g = group_from_json(gj);
    if (g.order() % q.p != 0) return classify_semisimple(g, q, wd, o.assert_splitting);
    if (o.modular_exhaustive) return classify_modular_exhaustive(g, field, o.budget);
    ClassificationReport r;
    r.p = q.p;
    r.q = q.q;
    r.group_order = g.order();
    r.semisimple = false;
    const bool cp = modular_necessary_condition(g, q);
    r.rules.push_back({"sylow-cp-obstruction", "ECID forces every Sylow p-subgroup to be cyclic of order p",
                       "order=" + std::to_string(g.order()) + ", p=" + std::to_string(q.p), !cp, !cp});
    r.verdict = cp ? Verdict::Undecided : Verdict::NotEcid;
    return r;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const auto field = load_field(o);
    const auto r = classify_from_options(o, field, load_group_json(o));
    if (o.json) {
        Json j = header("classify");
        j["field"] = field_to_json(*field);
        j["report"] = to_json(r);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    print_header(out, "classify");
    print_classification(out, r);
    if (!r.semisimple && !r.census && r.verdict == Verdict::Undecided) {
        out << "hint: p divides |H|; rerun with --modular-exhaustive to enumerate idempotents\n";
    }
    return kExitOk;
}

// ---- wedderburn --------------------------------------------------------------------------

int cmd_wedderburn(const Options& o, std::ostream& out) {
    u64 gamma = o.gamma;
    u64 s = o.s;
    Json source = Json::object();
    if (!o.group.empty()) {
        const auto field = load_field(o);
        const auto q = field->prime_power();
        const auto g = group_from_json(load_group_json(o));
        if (g.is_abelian()) throw DomainError("wedderburn: group is abelian (gamma = 0)");
        if (g.order() % q.p == 0) throw DomainError("wedderburn: p divides |H|");
        const bool certified = splitting_sufficient_condition(g, q);
        if (!certified && !o.assert_splitting) {
            throw HypothesisRequired("wedderburn: the solver needs a splitting field; exp(H) does not divide q - 1, "
                                     "pass --assert-splitting to vouch for it");
        }
        if (o.assert_splitting && !splitting_necessary_condition(g, q)) {
            throw DomainError("splitting assertion contradicts the necessary condition exp(H/H') | q - 1");
        }
        const auto comm = commutator_subgroup(g);
        gamma = g.order() - comm.quotient.order();
        s = conjugacy_class_count(g) - comm.quotient.order();
        source = {{"group_order", g.order()},
                  {"abelianization_order", comm.quotient.order()},
                  {"class_count", conjugacy_class_count(g)},
                  {"splitting", certified ? "certified" : "asserted"}};
    } else if (gamma == 0) {
        throw ParseError("wedderburn: give --group with --field, or --gamma (and optionally --s)");
    }
    Json j = header("wedderburn");
    j["input"] = source;
    j["gamma"] = gamma;
    j["b0"] = b0(gamma);
    j["floor_sqrt_gamma"] = isqrt(gamma);
    j["floor_gamma_over_2"] = gamma / 2;
    if (s > 0) {
        j["s"] = s;
        j["ceil_sqrt_gamma_over_s"] = ceil_sqrt_ratio(gamma, s);
        j["solutions"] = wedderburn_solver(gamma, s);
    }
    if (o.json) {
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    print_header(out, "wedderburn");
    out << "gamma = " << gamma << ", b0 = " << j["b0"] << ", floor(sqrt(gamma)) = " << j["floor_sqrt_gamma"]
        << ", floor(gamma/2) = " << gamma / 2 << '\n';
    if (s > 0) {
        out << "s = " << s << ", ceil(sqrt(gamma/s)) = " << j["ceil_sqrt_gamma_over_s"] << '\n';
        const auto sols = j["solutions"];
        out << sols.size() << " solution(s) of sum n_j^2 = gamma with n_j >= 2"
            << (sols.size() == 1 ? " (unique)" : "") << '\n';
        for (const auto& sol : sols) {
            std::vector<std::string> parts;
            for (const auto& n : sol) parts.push_back(std::to_string(n.get<u64>()));
            out << "  {" << join(parts, ", ") << "}\n";
        }
    }
    return kExitOk;
}

// ---- code --------------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> subsets_of(std::size_t m, const std::string& mode) {
    std::vector<std::vector<std::size_t>> out;
    if (mode == "singletons") {
        for (std::size_t i = 0; i < m; ++i) out.push_back({i});
        return out;
    }
    if (mode == "sum") {
        std::vector<std::size_t> all(m);
        for (std::size_t i = 0; i < m; ++i) all[i] = i;
        out.push_back(all);
        return out;
    }
    if (mode != "all") throw ParseError("--subsets must be all, singletons or sum");
    if (m > 16) throw ParseError("--subsets all supports at most 16 idempotents");
    for (std::size_t size = 1; size <= m; ++size) {
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < m; ++i) {
                if (pick[i]) s.push_back(i);
            }
            out.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

std::string subset_name(const std::vector<std::size_t>& s) {
    std::vector<std::string> parts;
    for (auto i : s) parts.push_back(std::to_string(i + 1));
    return "{" + join(parts, ",") + "}";
}

std::optional<ClassificationReport> certificate_for(const Options& o, FieldPtr field, const Group& g) {
    const auto q = field->prime_power();
    if (g.order() % q.p != 0) return classify_semisimple(g, q, load_wedderburn(o), o.assert_splitting);
    if (o.modular_exhaustive) return classify_modular_exhaustive(g, field, o.budget);
    return std::nullopt;
}

int cmd_code(const Options& o, std::ostream& out) {
    const auto field = load_field(o);
    const auto g = group_from_json(load_group_json(o));
    if (o.idempotents.empty()) throw ParseError("code: --idempotents is required");
    std::vector<AlgebraElement> es;
    for (const auto& arg : o.idempotents) es.push_back(element_from_json(load_json_arg(arg), field, g));
    const auto certificate = certificate_for(o, field, g);
    const u64 n = g.order();
    const u64 p = field->characteristic();

    Json table1 = Json::array();
    for (std::size_t i = 0; i < es.size(); ++i) {
        const u64 l1 = lambda1(es[i]).code();
        Json row{{"i", i + 1}, {"lambda1", field->format(l1)}, {"idempotent", is_idempotent(es[i])}};
        if (field->in_prime_subfield(l1)) {
            row["order_times_lambda1"] = checked_mul(n, l1);
            row["D"] = dimension_formula_D(static_cast<i64>(checked_mul(n, l1) % p), p);
        } else {
            row["order_times_lambda1"] = field->format(order_times_lambda1(es[i]));
        }
        table1.push_back(row);
    }

    CodeOptions copts;
    copts.budget = o.budget;
    copts.threads = o.threads;
    copts.certificate = certificate ? &*certificate : nullptr;
    copts.primitive_asserted = o.primitive;

    bool budget_hit = false;
    Json table2 = Json::array();
    for (const auto& subset : subsets_of(es.size(), o.subsets)) {
        AlgebraElement sum = AlgebraElement::zero(field, g);
        std::vector<AlgebraElement> parts;
        for (auto i : subset) {
            sum = sum + es[i];
            parts.push_back(es[i]);
        }
        const auto rep = analyze_code(sum, copts);
        budget_hit = budget_hit || (rep.dim > 0 && !rep.distance);
        Json row{{"subset", subset_name(subset)}, {"dim", rep.dim}};
        row["order_over_dim"] = rep.dim ? Rational(n, rep.dim).to_string() : "-";
        row["report"] = to_json(rep);
        if (certificate && certificate->certifies_ecid() && subset.size() > 1) {
            try {
                const auto sumf = ecid_dimension_sum(parts, *certificate, true);
                row["sum_formula_dim"] = sumf.dimension;
            } catch (const DomainError& ex) {
                row["sum_formula_dim"] = nullptr;
                row["sum_formula_note"] = ex.what();
            }
        }
        table2.push_back(row);
    }

    if (o.json) {
        Json j = header("code");
        j["field"] = field_to_json(*field);
        j["group_order"] = n;
        j["certificate"] = certificate ? to_json(*certificate) : Json(nullptr);
        j["table1"] = table1;
        j["table2"] = table2;
        out << j.dump(2) << '\n';
    } else {
        print_header(out, "code");
        if (certificate) out << "ambient algebra: " << to_string(certificate->verdict) << '\n';
        out << "Table 1\n";
        out << std::left << std::setw(4) << "i" << std::setw(12) << "lambda1" << std::setw(12) << "|H|lambda1"
            << "D\n";
        for (const auto& row : table1) {
            std::ostringstream prod;
            if (row["order_times_lambda1"].is_string()) {
                prod << row["order_times_lambda1"].get<std::string>();
            } else {
                prod << row["order_times_lambda1"].get<u64>();
            }
            out << std::setw(4) << row["i"].get<u64>() << std::setw(12) << row["lambda1"].get<std::string>()
                << std::setw(12) << prod.str() << (row.contains("D") ? std::to_string(row["D"].get<u64>()) : "-")
                << (row["idempotent"].get<bool>() ? "" : "   (not idempotent)") << '\n';
        }
        out << "Table 2\n";
        out << std::setw(10) << "I" << std::setw(6) << "dim" << std::setw(10) << "|H|/dim" << std::setw(6) << "d"
            << "primitivity\n";
        for (const auto& row : table2) {
            const auto& rep = row["report"];
            const std::string d = rep["distance"].contains("exact") ? std::to_string(rep["distance"]["exact"].get<u64>()) : "?";
            out << std::setw(10) << row["subset"].get<std::string>() << std::setw(6) << row["dim"].get<u64>()
                << std::setw(10) << row["order_over_dim"].get<std::string>() << std::setw(6) << d
                << rep["primitivity"].get<std::string>() << '\n';
        }
        out << std::right;
        if (budget_hit) out << "distance budget exceeded for rows marked '?'; lower bounds only (see --json)\n";
    }
    return budget_hit ? kExitBudget : kExitOk;
}

// ---- search ------------------------------------------------------------------------------

int cmd_search(const Options& o, std::ostream& out) {
    const auto field = load_field(o);
    const auto g = group_from_json(load_group_json(o));
    const auto census = idempotent_search(g, field, o.budget, o.threads);
    const bool digits = field->degree() == 1 && field->order() <= 10;
    auto repr = [&](const AlgebraElement& e) {
        if (!digits) return element_to_json(e).dump();
        std::string s;
        for (u64 c : e.codes()) s += static_cast<char>('0' + c);
        return s;
    };
    Json list = Json::array();
    for (std::size_t i = 0; i < census.idempotents.size(); ++i) {
        Json row{{"element", repr(census.idempotents[i])}, {"dim", census.dimension[i]}, {"primitive", bool(census.primitive[i])}};
        if (census.dimension[i] > 0 && !census.primitive[i]) row["primitive_parts"] = census.primitive_decomposition(i).size();
        list.push_back(row);
    }
    if (o.json) {
        Json j = header("search");
        j["field"] = field_to_json(*field);
        j["candidates"] = census.candidates;
        j["idempotent_count"] = census.idempotents.size();
        j["primitive_count"] = census.primitive_count();
        j["idempotents"] = list;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    print_header(out, "search");
    out << census.candidates << " candidates, " << census.idempotents.size() << " idempotents, "
        << census.primitive_count() << " primitive\n";
    out << "primitive idempotents:\n";
    for (const auto& row : list) {
        if (row["primitive"].get<bool>()) out << "  " << row["element"].get<std::string>() << "  dim " << row["dim"] << '\n';
    }
    out << "other idempotents:\n";
    for (const auto& row : list) {
        if (row["primitive"].get<bool>()) continue;
        out << "  " << row["element"].get<std::string>() << "  dim " << row["dim"];
        if (row.contains("primitive_parts")) out << "  (" << row["primitive_parts"] << " primitive parts)";
        out << '\n';
    }
    return kExitOk;
}

// ---- bounds ------------------------------------------------------------------------------

int cmd_bounds(const Options& o, std::ostream& out) {
    const auto field = load_field(o);
    const auto g = group_from_json(load_group_json(o));
    if (o.idempotents.size() != 1) throw ParseError("bounds: give exactly one --idempotent");
    const auto e = element_from_json(load_json_arg(o.idempotents.front()), field, g);
    const auto q = field->prime_power();
    const bool modular = g.order() % q.p == 0;
    if (modular && !o.modular_exhaustive) {
        throw HypothesisRequired("bounds: p divides |H|; the modular test needs an ECID certificate "
                                 "(pass --modular-exhaustive to compute one)");
    }
    const auto certificate = certificate_for(o, field, g);
    CodeOptions copts;
    copts.budget = o.budget;
    copts.threads = o.threads;
    copts.certificate = certificate ? &*certificate : nullptr;
    copts.primitive_asserted = o.primitive;
    auto rep = analyze_code(e, copts);
    if (o.distance && rep.distance && *o.distance != *rep.distance) {
        throw DomainError("bounds: supplied distance differs from the exact distance " + std::to_string(*rep.distance));
    }
    if (o.distance && !rep.distance) {
        // Re-run the non-primitivity tests against the caller's value.
        PrimitivityVerdict v;
        if (!modular && g.is_abelian()) {
            v = nonprimitivity_test_abelian(g, q, *o.distance);
        } else if (modular && certificate) {
            v = nonprimitivity_test_modular(g, q, *certificate, *o.distance);
        }
        if (v.verdict != Primitivity::Unknown) {
            rep.primitivity = v.verdict;
            rep.primitivity_reason = v.reason;
        }
    }
    const bool budget_hit = rep.dim > 0 && !rep.distance;
    if (o.json) {
        Json j = header("bounds");
        j["certificate"] = certificate ? to_json(*certificate) : Json(nullptr);
        j["report"] = to_json(rep);
        out << j.dump(2) << '\n';
        return budget_hit ? kExitBudget : kExitOk;
    }
    print_header(out, "bounds");
    if (certificate) out << "ambient algebra: " << to_string(certificate->verdict) << '\n';
    out << "dim = " << rep.dim << " (" << to_string(rep.dim_method) << ")";
    if (rep.dim_formula) out << ", D(|H| lambda1) = " << *rep.dim_formula;
    out << '\n';
    if (rep.congruence_set) {
        std::vector<std::string> c;
        for (u64 v : *rep.congruence_set) c.push_back(std::to_string(v));
        out << "dimension congruence set: {" << join(c, ", ") << "}\n";
    }
    out << "d = " << opt_str(rep.distance) << '\n';
    out << "lower bounds:\n";
    for (const auto& b : rep.bounds) out << "  " << b.value.to_string() << "  " << b.cite << '\n';
    out << "primitivity: " << to_string(rep.primitivity);
    if (!rep.primitivity_reason.empty()) out << " (" << rep.primitivity_reason << ")";
    out << '\n';
    return budget_hit ? kExitBudget : kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--field", o.field, "field JSON or file, e.g. '{\"p\":5,\"degree\":2,\"modulus\":[2,4,1]}'");
    sub->add_option("--group", o.group, "group JSON or file");
    sub->add_option("--budget", o.budget, "enumeration budget (codewords or candidates)");
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores); output does not depend on it");
    auto* json = sub->add_flag("--json", o.json, "emit a JSON report");
    sub->add_flag("--table", o.table, "emit a text table (default)")->excludes(json);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Group algebras over finite fields: ECD/ECID classification and group-code analysis", "ecid"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;

    auto* orbits = app.add_subcommand("orbits", "q-orbits, t_g, l and t_w of an abelian group");
    add_common(orbits, o);

    auto* splitting = app.add_subcommand("splitting", "splitting-field tests");
    add_common(splitting, o);
    splitting->add_option("--t", o.t, "extension degree t (abelian groups)");

    auto* classify = app.add_subcommand("classify", "minimal-ECD / ECID classification");
    add_common(classify, o);
    classify->add_flag("--modular-exhaustive", o.modular_exhaustive, "enumerate all idempotents when p divides |H|");
    classify->add_option("--wedderburn", o.wedderburn, "Wedderburn data JSON or file");
    classify->add_flag("--assert-splitting", o.assert_splitting, "vouch that F_q is a splitting field of H");

    auto* wedderburn = app.add_subcommand("wedderburn", "gamma, b0 and the sum-of-squares solver");
    add_common(wedderburn, o);
    wedderburn->add_option("--gamma", o.gamma, "gamma = |H| - [H:H'] (arithmetic-only mode)");
    wedderburn->add_option("--s", o.s, "number of non-commutative components");
    wedderburn->add_flag("--assert-splitting", o.assert_splitting, "vouch that F_q is a splitting field of H");

    auto* code = app.add_subcommand("code", "dimension and minimum distance of idempotent-generated codes");
    add_common(code, o);
    code->add_option("--idempotents,--idempotent", o.idempotents, "idempotent JSON or files")->expected(1, -1);
    code->add_option("--subsets", o.subsets, "all | singletons | sum");
    code->add_option("--wedderburn", o.wedderburn, "Wedderburn data JSON or file");
    code->add_flag("--assert-splitting", o.assert_splitting, "vouch that F_q is a splitting field of H");
    code->add_flag("--modular-exhaustive", o.modular_exhaustive, "certify a modular algebra by exhaustive search");
    code->add_flag("--primitive", o.primitive, "the caller knows each code's idempotent is primitive");

    auto* search = app.add_subcommand("search", "exhaustive idempotent search");
    add_common(search, o);

    auto* bounds = app.add_subcommand("bounds", "lower bounds and non-primitivity tests for one idempotent");
    add_common(bounds, o);
    bounds->add_option("--idempotent,--idempotents", o.idempotents, "idempotent JSON or file")->expected(1);
    bounds->add_option("--distance", o.distance, "known distance (used when the exact one is out of budget)");
    bounds->add_option("--wedderburn", o.wedderburn, "Wedderburn data JSON or file");
    bounds->add_flag("--assert-splitting", o.assert_splitting, "vouch that F_q is a splitting field of H");
    bounds->add_flag("--modular-exhaustive", o.modular_exhaustive, "certify a modular algebra by exhaustive search");
    bounds->add_flag("--primitive", o.primitive, "the caller knows the idempotent is primitive");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code_ = app.exit(ex, out, err);
        return code_ == 0 ? kExitOk : kExitParse;
    }

    try {
        if (orbits->parsed()) return cmd_orbits(o, out);
        if (splitting->parsed()) return cmd_splitting(o, out);
        if (classify->parsed()) return cmd_classify(o, out);
        if (wedderburn->parsed()) return cmd_wedderburn(o, out);
        if (code->parsed()) return cmd_code(o, out);
        if (search->parsed()) return cmd_search(o, out);
        if (bounds->parsed()) return cmd_bounds(o, out);
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << '\n';
        return kExitParse;
    } catch (const BudgetExceeded& ex) {
        err << "budget exceeded: " << ex.what() << '\n';
        return kExitBudget;
    } catch (const HypothesisRequired& ex) {
        err << "hypothesis required: " << ex.what() << '\n';
        return kExitHypothesis;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace ecid::cli
