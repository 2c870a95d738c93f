#include "ecid/codes.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ecid/cyclotomic.hpp"
#include "ecid/errors.hpp"

namespace ecid {

std::string to_string(Primitivity p) {
    switch (p) {
        case Primitivity::Primitive: return "primitive";
        case Primitivity::NotPrimitive: return "not-primitive";
        case Primitivity::Unknown: return "unknown";
    }
    return "unknown";
}

Primitivity primitivity_from_string(const std::string& s) {
    for (auto v : {Primitivity::Primitive, Primitivity::NotPrimitive, Primitivity::Unknown}) {
        if (to_string(v) == s) return v;
    }
    throw ParseError("unknown primitivity \"" + s + "\"");
}

std::string to_string(DimMethod m) {
    switch (m) {
        case DimMethod::RankOracle: return "rank-oracle";
        case DimMethod::DFormula: return "D-formula";
        case DimMethod::CongruenceSet: return "congruence-set";
    }
    return "rank-oracle";
}

DimMethod dim_method_from_string(const std::string& s) {
    for (auto v : {DimMethod::RankOracle, DimMethod::DFormula, DimMethod::CongruenceSet}) {
        if (to_string(v) == s) return v;
    }
    throw ParseError("unknown dimension method \"" + s + "\"");
}

Rational prime_ratio_product(u64 n) {
    Rational r(1);
    for (u64 p : prime_divisors(n)) r = r * Rational(p, p - 1);
    return r;
}

namespace {

void require_semisimple(const Group& g, PrimePower q, const char* who) {
    if (g.order() % q.p == 0) throw DomainError(std::string(who) + ": p divides |G|");
}

u64 least_residue_of_order_lambda1(const AlgebraElement& e) {
    const u64 x = order_times_lambda1(e);
    if (!e.field()->in_prime_subfield(x)) {
        throw DomainError("|G| lambda1(e) is not in the prime field; e is not an idempotent");
    }
    return x;
}

bool is_identity_element(const AlgebraElement& e) {
    return e == AlgebraElement::one(e.field(), e.group());
}

}  // namespace

std::vector<Bound> abelian_bounds(const Group& g, FieldPtr field, const AlgebraElement& e) {
    if (!g.is_abelian()) throw DomainError("abelian_bounds: group is not abelian");
    const auto q = field->prime_power();
    require_semisimple(g, q, "abelian_bounds");
    const auto orbits = qorbits(g, q);
    const u64 n = g.order();
    std::vector<Bound> out;
    out.push_back({prime_ratio_product(n), "prod p_i/(p_i-1) over primes dividing |G|"});
    out.push_back({Rational(n, orbits.t_w), "|G|/t_w"});

    const bool cond_a = orbits.t_w <= q.p;
    // The least t with exp(G) | q^t - 1 is t_w; check it directly.
    const bool cond_b = orbits.t_w <= q.p && powmod(q.q, orbits.t_w, orbits.exponent) == 1 % orbits.exponent;
    const bool cond_c = euler_phi(orbits.exponent) <= q.p;
    if (cond_a || cond_b || cond_c) {
        const u64 x = least_residue_of_order_lambda1(e);
        const u64 d = dimension_formula_D_code(x, q.p);
        std::string why = cond_a ? "t_w <= p" : (cond_b ? "exp(G) | q^t - 1 with t <= p" : "phi(exp(G)) <= p");
        out.push_back({Rational(n, d), "|G|/D(|G| lambda1(e)), licensed by " + why});
    }
    if (cond_c) out.push_back({Rational(n, q.p), "|G|/p, licensed by phi(exp(G)) <= p"});
    return out;
}

PrimitivityVerdict nonprimitivity_test_abelian(const Group& g, PrimePower q, u64 distance) {
    require_semisimple(g, q, "nonprimitivity_test_abelian");
    const u64 tw = qorbits(g, q).t_w;
    const Rational threshold(g.order(), tw);
    std::ostringstream why;
    why << "d = " << distance << ", |G|/t_w = " << threshold.to_string();
    if (Rational(distance) < threshold) return {Primitivity::NotPrimitive, why.str() + ": d below |G|/t_w"};
    return {Primitivity::Unknown, why.str()};
}

CongruenceSet dimension_congruence_set(const AlgebraElement& e) {
    if (e.is_zero()) throw DomainError("dimension_congruence_set: e = 0 generates the zero code");
    if (is_identity_element(e)) throw DomainError("dimension_congruence_set: e = 1 generates the whole algebra");
    const u64 p = e.field()->characteristic();
    const u64 n = e.group().order();
    CongruenceSet cs;
    cs.r = least_residue_of_order_lambda1(e);
    if (n >= cs.r + 1) {
        const u64 kmax = (n - (cs.r + 1)) / p;
        for (u64 k = 0; k <= kmax; ++k) {
            const u64 c = cs.r + k * p;
            if (c == 0) continue;
            cs.candidates.push_back(c);
            cs.distance_bounds.emplace_back(n, c);
        }
    }
    return cs;
}

PrimitivityVerdict nonprimitivity_test_semisimple(const Group& h, PrimePower q, const WedderburnData& wd, u64 a,
                                                  u64 distance) {
    require_semisimple(h, q, "nonprimitivity_test_semisimple");
    const auto comm = commutator_subgroup(h);
    const u64 tw = qorbits(comm.quotient, q).t_w;
    const u64 needed = std::max(tw, wd.max_n_times_d());
    if (a < needed) {
        throw DomainError("nonprimitivity_test_semisimple: a = " + std::to_string(a) + " is below max(t_w, max n_j d_j) = " +
                          std::to_string(needed));
    }
    const Rational threshold(h.order(), a);
    std::ostringstream why;
    why << "d = " << distance << ", |H|/a = " << threshold.to_string() << " (a = " << a << ")";
    if (Rational(distance) < threshold) return {Primitivity::NotPrimitive, why.str() + ": d below |H|/a"};
    return {Primitivity::Unknown, why.str()};
}

u64 splitting_shortcut_a(const WedderburnData& wd) {
    for (const auto& [n, d] : wd.noncommutative) {
        if (d != 1) throw DomainError("splitting shortcut: every [F_j : F_q] must be 1 over a splitting field");
    }
    return std::max<u64>(1, wd.max_n());
}

EcidDimensionSum ecid_dimension_sum(std::span<const AlgebraElement> parts, const ClassificationReport& certificate,
                                    bool cross_check) {
    if (!certificate.certifies_ecid()) {
        throw HypothesisRequired("ecid_dimension_sum: the ambient algebra is not certified ECID (verdict " +
                                 to_string(certificate.verdict) + ")");
    }
    if (parts.empty()) throw DomainError("ecid_dimension_sum: no idempotents given");
    const u64 p = parts.front().field()->characteristic();
    const u64 n = parts.front().group().order();
    if (certificate.p != p || certificate.group_order != n) {
        throw HypothesisRequired("ecid_dimension_sum: certificate was issued for a different algebra");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!is_idempotent(parts[i])) throw DomainError("ecid_dimension_sum: part " + std::to_string(i) + " is not idempotent");
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (i != j && !alg_mul(parts[i], parts[j]).is_zero()) {
                throw DomainError("ecid_dimension_sum: parts " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are not orthogonal");
            }
        }
    }
    EcidDimensionSum out;
    AlgebraElement total = AlgebraElement::zero(parts.front().field(), parts.front().group());
    for (const auto& e : parts) {
        const u64 r = least_residue_of_order_lambda1(e);
        out.residues.push_back(r);
        out.dimension += r == 0 ? p : r;
        total = total + e;
    }
    out.distance_bound = Rational(n, out.dimension);
    if (cross_check) {
        out.rank_dimension = ideal_dimension(total);
        if (*out.rank_dimension != out.dimension) {
            throw DomainError("ecid_dimension_sum: sum formula gives " + std::to_string(out.dimension) + " but rank gives " +
                              std::to_string(*out.rank_dimension) + "; some part is not primitive");
        }
    }
    return out;
}

PrimitivityVerdict nonprimitivity_test_modular(const Group& h, PrimePower q, const ClassificationReport& certificate,
                                               u64 distance) {
    if (h.order() % q.p != 0) throw DomainError("nonprimitivity_test_modular: p does not divide |H|");
    if (certificate.verdict != Verdict::Ecid || certificate.p != q.p || certificate.group_order != h.order()) {
        throw HypothesisRequired("nonprimitivity_test_modular: no ECID certificate for this algebra");
    }
    const Rational threshold(h.order(), q.p);
    std::ostringstream why;
    why << "d = " << distance << ", |H|/p = " << threshold.to_string();
    if (Rational(distance) < threshold) return {Primitivity::NotPrimitive, why.str() + ": d below |H|/p"};
    return {Primitivity::Unknown, why.str()};
}

namespace {

// Smallest possible dimension of a nonzero ideal generated by an idempotent: the p-part of
// |H| in the modular case, 1 otherwise.
u64 minimal_projective_dimension(u64 order, u64 p) {
    u64 part = 1;
    while (order % p == 0) {
        order /= p;
        part *= p;
    }
    return part;
}

}  // namespace

CodeReport analyze_code(const AlgebraElement& e, const CodeOptions& options) {
    const auto& field = *e.field();
    const auto& g = e.group();
    const u64 p = field.characteristic();
    const auto q = field.prime_power();
    const u64 n = g.order();
    const bool semisimple = n % p != 0;

    CodeReport rep;
    rep.idempotent.assign(e.codes().begin(), e.codes().end());
    rep.dim = ideal_dimension(e);
    rep.dim_method = DimMethod::RankOracle;
    const bool idempotent = is_idempotent(e);
    const bool trivial = e.is_zero() || is_identity_element(e);

    std::optional<CongruenceSet> cs;
    if (idempotent && !trivial) {
        cs = dimension_congruence_set(e);
        rep.congruence_set = cs->candidates;
        if (std::find(cs->candidates.begin(), cs->candidates.end(), rep.dim) == cs->candidates.end()) {
            throw std::logic_error("analyze_code: rank dimension is missing from the congruence set");
        }
        rep.dim_formula = dimension_formula_D_code(cs->r, p);
        if (rep.dim <= p && *rep.dim_formula != rep.dim) {
            throw std::logic_error("analyze_code: D-formula disagrees with the rank dimension");
        }
    }

    if (rep.dim > 0) {
        try {
            rep.distance = min_distance_exact(e, options.budget, options.threads);
        } catch (const BudgetExceeded&) {
            rep.distance.reset();
        }
        rep.bounds.push_back({Rational(n, rep.dim), "|G|/dim"});
        if (cs && !cs->candidates.empty()) {
            rep.bounds.push_back({Rational(n, cs->candidates.back()), "|G|/(r+kp) at the largest admissible dimension"});
        }
    }

    // Primitivity.
    if (!idempotent) {
        rep.primitivity_reason = "e is not idempotent";
    } else if (e.is_zero()) {
        rep.primitivity = Primitivity::NotPrimitive;
        rep.primitivity_reason = "e = 0";
    } else if (rep.dim == minimal_projective_dimension(n, p)) {
        rep.primitivity = Primitivity::Primitive;
        rep.primitivity_reason = "dimension " + std::to_string(rep.dim) + " is the least possible for an idempotent ideal";
    } else if (options.primitive_asserted) {
        rep.primitivity = Primitivity::Primitive;
        rep.primitivity_reason = "asserted by caller";
    }

    if (rep.primitivity == Primitivity::Unknown && idempotent && rep.distance) {
        const u64 d = *rep.distance;
        PrimitivityVerdict v;
        if (semisimple && g.is_abelian()) {
            v = nonprimitivity_test_abelian(g, q, d);
        } else if (semisimple && options.certificate && options.certificate->wedderburn) {
            const auto& wd = *options.certificate->wedderburn;
            const u64 a = std::max(options.certificate->t_w.value_or(1), wd.max_n_times_d());
            v = nonprimitivity_test_semisimple(g, q, wd, a, d);
        } else if (!semisimple && options.certificate && options.certificate->verdict == Verdict::Ecid) {
            v = nonprimitivity_test_modular(g, q, *options.certificate, d);
        }
        rep.primitivity = v.verdict;
        rep.primitivity_reason = v.reason;
    }

    // Inside the non-commutative part, an idempotent whose ideal is smaller than twice the
    // least minimal-ideal dimension there cannot split.
    if (rep.primitivity == Primitivity::Unknown && idempotent && semisimple && !g.is_abelian() && options.certificate &&
        options.certificate->wedderburn && !options.certificate->wedderburn->noncommutative.empty()) {
        const auto comm = commutator_subgroup(g);
        const auto hat = hat_idempotent(g, comm.subgroup, e.field());
        if (alg_mul(e, hat).is_zero()) {
            u64 least = std::numeric_limits<u64>::max();
            for (const auto& [nj, dj] : options.certificate->wedderburn->noncommutative) least = std::min(least, nj * dj);
            if (rep.dim < 2 * least) {
                rep.primitivity = Primitivity::Primitive;
                rep.primitivity_reason = "e annihilates the commutator average and dim " + std::to_string(rep.dim) +
                                         " < 2 * (least minimal ideal dimension " + std::to_string(least) +
                                         ") in the non-commutative part";
            }
        }
    }

    if (semisimple && g.is_abelian() && idempotent && rep.primitivity == Primitivity::Primitive) {
        for (auto& b : abelian_bounds(g, e.field(), e)) rep.bounds.push_back(std::move(b));
    }
    return rep;
}

}  // namespace ecid
