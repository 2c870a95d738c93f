#include "ecid/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ecid/codes.hpp"
#include "ecid/cyclotomic.hpp"
#include "ecid/errors.hpp"

namespace ecid {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::MinimalEcd: return "minimal-ECD";
        case Verdict::Ecid: return "ECID";
        case Verdict::NotEcid: return "not-ECID";
        case Verdict::Undecided: return "undecided";
    }
    return "undecided";
}

Verdict verdict_from_string(const std::string& s) {
    for (auto v : {Verdict::MinimalEcd, Verdict::Ecid, Verdict::NotEcid, Verdict::Undecided}) {
        if (to_string(v) == s) return v;
    }
    throw ParseError("unknown verdict \"" + s + "\"");
}

std::string to_string(WedderburnSource s) {
    switch (s) {
        case WedderburnSource::UserSupplied: return "user-supplied";
        case WedderburnSource::ArithmeticSolver: return "arithmetic-solver";
        case WedderburnSource::AbelianOrbits: return "abelian-orbits";
    }
    return "user-supplied";
}

WedderburnSource wedderburn_source_from_string(const std::string& s) {
    for (auto v : {WedderburnSource::UserSupplied, WedderburnSource::ArithmeticSolver, WedderburnSource::AbelianOrbits}) {
        if (to_string(v) == s) return v;
    }
    throw ParseError("unknown Wedderburn source \"" + s + "\"");
}

u64 WedderburnData::gamma() const {
    u64 g = 0;
    for (const auto& [n, d] : noncommutative) g += checked_mul(checked_mul(n, n), d);
    return g;
}

u64 WedderburnData::max_n_times_d() const {
    u64 m = 0;
    for (const auto& [n, d] : noncommutative) m = std::max(m, checked_mul(n, d));
    return m;
}

u64 WedderburnData::max_n() const {
    u64 m = 0;
    for (const auto& [n, d] : noncommutative) m = std::max(m, n);
    return m;
}

void WedderburnData::validate() const {
    for (const auto& [n, d] : noncommutative) {
        if (n < 2) throw DomainError("Wedderburn data: matrix sizes n_j must be >= 2");
        if (d < 1) throw DomainError("Wedderburn data: field degrees d_j must be >= 1");
    }
    if (!commutative_degrees.empty() && commutative_degrees.size() != commutative_count) {
        throw DomainError("Wedderburn data: commutative degree list does not match r");
    }
}

namespace {

std::string kv(std::initializer_list<std::pair<const char*, u64>> items) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : items) {
        if (!first) out << ", ";
        first = false;
        out << k << '=' << v;
    }
    return out.str();
}

void require_semisimple(u64 order, PrimePower q, const char* who) {
    if (order % q.p == 0) {
        throw DomainError(std::string(who) + ": p = " + std::to_string(q.p) + " divides the group order " +
                          std::to_string(order) + "; use the modular path");
    }
}

// Records rule firings and keeps positive and negative conclusions apart.
class Ledger {
public:
    explicit Ledger(ClassificationReport& r) : report_(r) {}

    void note(std::string id, std::string statement, std::string inputs, bool holds) {
        report_.rules.push_back({std::move(id), std::move(statement), std::move(inputs), holds, false});
    }

    void conclude(std::string id, std::string statement, std::string inputs, bool holds, Verdict v) {
        const bool decisive = holds && report_.verdict == Verdict::Undecided;
        if (holds && report_.verdict != Verdict::Undecided && report_.verdict != v) {
            throw DomainError("classification: rule " + id + " contradicts an earlier verdict (inconsistent input data)");
        }
        report_.rules.push_back({std::move(id), std::move(statement), std::move(inputs), holds, decisive});
        if (holds) report_.verdict = v;
    }

private:
    ClassificationReport& report_;
};

}  // namespace

u64 max_minimal_ideal_dim(const Group& g, PrimePower q) { return qorbits(g, q).t_w; }

WedderburnData abelian_wedderburn(const Group& g, PrimePower q) {
    const auto d = qorbits(g, q);
    WedderburnData wd;
    wd.source = WedderburnSource::AbelianOrbits;
    wd.commutative_count = d.orbits.size();
    for (const auto& o : d.orbits) wd.commutative_degrees.push_back(o.size());
    return wd;
}

ClassificationReport classify_abelian_semisimple(const Group& g, PrimePower q) {
    if (!g.is_abelian()) throw DomainError("classify_abelian_semisimple: group is not abelian");
    require_semisimple(g.order(), q, "classify_abelian_semisimple");
    const auto d = qorbits(g, q);
    ClassificationReport r;
    r.p = q.p;
    r.q = q.q;
    r.group_order = g.order();
    r.t_w = d.t_w;
    r.phi_exponent = euler_phi(d.exponent);
    r.wedderburn = abelian_wedderburn(g, q);
    Ledger ledger(r);
    const std::string in = kv({{"t_w", d.t_w}, {"p", q.p}});
    ledger.conclude("orbit-criterion", "minimal ECD iff t_w <= p (t_w = largest minimal ideal dimension)", in,
                    d.t_w <= q.p, Verdict::MinimalEcd);
    ledger.conclude("orbit-criterion-negative", "t_w > p: a minimal ideal of dimension t_w exceeds p", in,
                    d.t_w > q.p, Verdict::NotEcid);
    ledger.note("totient-criterion", "phi(exp(G)) <= p implies minimal ECD",
                kv({{"phi_exp", *r.phi_exponent}, {"p", q.p}}), *r.phi_exponent <= q.p);
    // t_w is the least t with exp(G) | q^t - 1, so it is the smallest admissible splitting index.
    ledger.note("splitting-index-criterion", "a splitting extension of index t <= p implies minimal ECD",
                kv({{"t", d.t_w}, {"exp", d.exponent}, {"p", q.p}}), d.t_w <= q.p);
    return r;
}

u64 b0(u64 gamma) {
    if (gamma < 4) throw DomainError("b0: gamma must be at least 4");
    u64 best = 0;
    for (u64 f = 1; f <= gamma / 4; ++f) best = std::max(best, isqrt(gamma / f) * f);
    return best;
}

std::vector<std::vector<u64>> wedderburn_solver(u64 gamma, u64 s) {
    std::vector<std::vector<u64>> out;
    if (s == 0) return out;
    std::vector<u64> current;
    std::function<void(u64, u64, u64)> rec = [&](u64 remaining, u64 slots, u64 min_n) {
        if (slots == 0) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        for (u64 n = min_n; n * n * slots <= remaining; ++n) {
            current.push_back(n);
            rec(remaining - n * n, slots - 1, n);
            current.pop_back();
        }
    };
    rec(gamma, s, 2);
    return out;
}

ClassificationReport classify_nonabelian_arithmetic(const NonabelianInvariants& inv, PrimePower q,
                                                    const std::optional<WedderburnData>& wd,
                                                    SplittingStatus splitting) {
    require_semisimple(inv.order, q, "classify_nonabelian");
    if (inv.abelianization_order == 0 || inv.order % inv.abelianization_order != 0) {
        throw DomainError("classify_nonabelian: [H:H'] must divide |H|");
    }
    const u64 p = q.p;
    ClassificationReport r;
    r.p = p;
    r.q = q.q;
    r.group_order = inv.order;
    r.abelianization_order = inv.abelianization_order;
    r.splitting_asserted = splitting.asserted;
    r.splitting_certified = splitting.certified;
    const u64 gamma = inv.order - inv.abelianization_order;
    if (gamma < 4) throw DomainError("classify_nonabelian: |H| - [H:H'] < 4, group is abelian");
    r.gamma = gamma;
    r.b0 = b0(gamma);
    r.floor_sqrt_gamma = isqrt(gamma);
    r.t_w = inv.t_w;
    r.phi_exponent = inv.phi_exponent;
    if (inv.abelianization_order == 1) r.t_w = 1;
    if (splitting.any()) {
        // A splitting field of H splits H/H', so all commutative components are F_q.
        if (r.t_w && *r.t_w != 1) {
            throw DomainError("classify_nonabelian: splitting asserted but t_w = " + std::to_string(*r.t_w) + " != 1");
        }
        r.t_w = 1;
        if (inv.class_count) {
            if (*inv.class_count < inv.abelianization_order) throw DomainError("classify_nonabelian: too few classes");
            r.s = *inv.class_count - inv.abelianization_order;
            r.ceil_sqrt_gamma_over_s = ceil_sqrt_ratio(gamma, *r.s);
        }
    }

    Ledger ledger(r);
    const bool tw_ok = r.t_w && *r.t_w <= p;
    if (r.t_w) {
        ledger.conclude("commutative-part-obstruction", "t_w(H/H') > p: a commutative minimal ideal exceeds p",
                        kv({{"t_w", *r.t_w}, {"p", p}}), *r.t_w > p, Verdict::NotEcid);
    }

    if (wd) {
        wd->validate();
        if (wd->gamma() != gamma) {
            throw DomainError("Wedderburn data: sum n_j^2 d_j = " + std::to_string(wd->gamma()) +
                              " but |H| - [H:H'] = " + std::to_string(gamma));
        }
        r.wedderburn = wd;
        r.s = wd->noncommutative.size();
        const u64 m = wd->max_n_times_d();
        if (r.t_w) {
            const std::string in = kv({{"t_w", *r.t_w}, {"max_n_d", m}, {"p", p}});
            ledger.conclude("wedderburn-criterion", "minimal ECD iff t_w <= p and max n_j [F_j:F_q] <= p", in,
                            tw_ok && m <= p, Verdict::MinimalEcd);
        }
        ledger.conclude("wedderburn-obstruction", "max n_j [F_j:F_q] > p: a matrix component has a minimal ideal above p",
                        kv({{"max_n_d", m}, {"p", p}}), m > p, Verdict::NotEcid);
    }

    if (r.phi_exponent) {
        ledger.note("totient-criterion", "phi(exp(H/H')) <= p gives t_w <= p",
                    kv({{"phi_exp", *r.phi_exponent}, {"p", p}}), *r.phi_exponent <= p);
    }
    if (r.t_w) {
        ledger.conclude("commutator-index-criterion", "t_w <= p and |H| - [H:H'] <= p imply minimal ECD",
                        kv({{"t_w", *r.t_w}, {"gamma", gamma}, {"p", p}}), tw_ok && gamma <= p, Verdict::MinimalEcd);
        ledger.conclude("b0-criterion", "t_w <= p and (b0 <= p or floor(gamma/2) <= p) imply minimal ECD",
                        kv({{"t_w", *r.t_w}, {"b0", *r.b0}, {"floor_gamma_2", gamma / 2}, {"p", p}}),
                        tw_ok && (*r.b0 <= p || gamma / 2 <= p), Verdict::MinimalEcd);
    }
    if (splitting.any()) {
        ledger.conclude("sqrt-gamma-criterion", "over a splitting field, floor(sqrt(gamma)) <= p implies minimal ECD",
                        kv({{"floor_sqrt_gamma", *r.floor_sqrt_gamma}, {"p", p}}), *r.floor_sqrt_gamma <= p,
                        Verdict::MinimalEcd);
        if (r.s && !wd) {
            ledger.conclude("sqrt-gamma-over-s-obstruction",
                            "over a splitting field, max n_j >= ceil(sqrt(gamma/s)) > p rules out minimal ECD",
                            kv({{"ceil_sqrt_gamma_over_s", *r.ceil_sqrt_gamma_over_s}, {"s", *r.s}, {"p", p}}),
                            *r.ceil_sqrt_gamma_over_s > p, Verdict::NotEcid);
        }
    }
    return r;
}

ClassificationReport classify_nonabelian_semisimple(const Group& h, PrimePower q,
                                                    const std::optional<WedderburnData>& wd, bool assert_splitting) {
    if (h.is_abelian()) throw DomainError("classify_nonabelian_semisimple: group is abelian");
    require_semisimple(h.order(), q, "classify_nonabelian_semisimple");
    const auto comm = commutator_subgroup(h);
    const auto orbit = qorbits(comm.quotient, q);

    SplittingStatus splitting;
    splitting.asserted = assert_splitting;
    splitting.certified = splitting_sufficient_condition(h, q);
    const bool necessary = splitting_necessary_condition(h, q);
    if (assert_splitting && !necessary) {
        throw DomainError("splitting assertion contradicts the necessary condition exp(H/H') | q - 1");
    }

    NonabelianInvariants inv;
    inv.order = h.order();
    inv.abelianization_order = comm.quotient.order();
    inv.t_w = orbit.t_w;
    inv.phi_exponent = euler_phi(orbit.exponent);
    inv.class_count = conjugacy_class_count(h);

    std::optional<WedderburnData> data = wd;
    std::vector<std::vector<u64>> solutions;
    if (!data && splitting.any()) {
        const u64 s = *inv.class_count - inv.abelianization_order;
        solutions = wedderburn_solver(inv.order - inv.abelianization_order, s);
        if (solutions.size() == 1) {
            WedderburnData derived;
            derived.source = WedderburnSource::ArithmeticSolver;
            derived.commutative_count = inv.abelianization_order;
            derived.commutative_degrees.assign(inv.abelianization_order, 1);
            for (u64 n : solutions.front()) derived.noncommutative.emplace_back(n, 1);
            data = derived;
        }
    }

    auto report = classify_nonabelian_arithmetic(inv, q, data, splitting);
    report.rules.insert(report.rules.begin(),
                        {"splitting-necessary", "exp(H/H') | q - 1 is necessary for F_q to split H",
                         kv({{"exp_abelianization", orbit.exponent}, {"q", q.q}}), necessary, false});
    report.rules.insert(report.rules.begin() + 1,
                        {"splitting-sufficient", "exp(H) | q - 1 certifies that F_q splits H",
                         kv({{"exp", exponent(h).exponent}, {"q", q.q}}), splitting.certified, false});
    if (!wd && splitting.any()) {
        report.rules.push_back({"wedderburn-solver", "unique s-tuple n_j >= 2 with sum n_j^2 = gamma",
                                kv({{"gamma", *report.gamma}, {"s", *report.s}, {"solutions", solutions.size()}}),
                                solutions.size() == 1, false});
    }
    return report;
}

ClassificationReport classify_semisimple(const Group& h, PrimePower q, const std::optional<WedderburnData>& wd,
                                         bool assert_splitting) {
    if (h.is_abelian()) return classify_abelian_semisimple(h, q);
    return classify_nonabelian_semisimple(h, q, wd, assert_splitting);
}

bool modular_necessary_condition(const Group& h, PrimePower q) {
    if (h.order() % q.p != 0) throw DomainError("modular_necessary_condition: p does not divide |H|");
    return sylow_is_cp(h, q.p);
}

ClassificationReport classify_modular_exhaustive(const Group& h, FieldPtr field, u64 budget) {
    const auto q = field->prime_power();
    const u64 p = q.p;
    ClassificationReport r;
    r.p = p;
    r.q = q.q;
    r.group_order = h.order();
    r.semisimple = false;
    Ledger ledger(r);
    const bool cp = modular_necessary_condition(h, q);
    ledger.conclude("sylow-cp-obstruction", "ECID forces every Sylow p-subgroup to be cyclic of order p",
                    kv({{"order", h.order()}, {"p", p}}), !cp, Verdict::NotEcid);
    if (!cp) return r;

    const auto census = idempotent_search(h, field, budget);
    ModularCensusSummary summary;
    summary.candidates = census.candidates;
    summary.idempotents = census.idempotents.size();
    summary.primitive = census.primitive_count();
    std::map<std::size_t, std::size_t> dims;
    bool all_p = true, all_ecd = true;
    for (std::size_t i = 0; i < census.idempotents.size(); ++i) {
        if (!census.primitive[i]) continue;
        ++dims[census.dimension[i]];
        all_p = all_p && census.dimension[i] == p;
        all_ecd = all_ecd && census.dimension[i] <= p;
    }
    summary.primitive_dimension_counts.assign(dims.begin(), dims.end());
    summary.every_primitive_has_dim_p = all_p;
    summary.every_principal_indecomposable_ecd = all_ecd;
    if (all_p != all_ecd) {
        throw std::logic_error("classify_modular_exhaustive: ECD and dimension-p criteria disagree");
    }
    r.census = summary;
    const std::string in = kv({{"primitive", summary.primitive}, {"p", p}});
    ledger.note("principal-indecomposables-ecd", "every ideal generated by a primitive idempotent has dimension <= p",
                in, all_ecd);
    ledger.conclude("primitive-dimension-criterion", "ECID iff every primitive idempotent generates a dimension-p ideal",
                    in, all_p, Verdict::Ecid);
    ledger.conclude("primitive-dimension-obstruction", "some primitive idempotent generates an ideal of dimension != p",
                    in, !all_p, Verdict::NotEcid);
    return r;
}

}  // namespace ecid
