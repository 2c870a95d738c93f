// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ecid/algebra.hpp"
#include "ecid/classify.hpp"
#include "ecid/codes.hpp"
#include "ecid/cyclotomic.hpp"
#include "ecid/io.hpp"
#include "fixtures.hpp"

using namespace ecid;

namespace {

// Wall-clock limits, seconds.
constexpr double kLimitA4 = 60.0;
constexpr double kLimitC6 = 1.0;
constexpr double kLimitTables = 600.0;
constexpr double kLimitArithmetic = 1.0;
constexpr double kLimitFifthPowers = 5.0;

constexpr int kSplittingCases = 240;

class Check {
public:
    void expect(bool cond, const std::string& what) {
        ++checks_;
        if (!cond) {
            ++violations_;
            if (first_.empty()) first_ = what;
        }
    }
    bool ok() const { return violations_ == 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checks_ << " checks, " << violations_ << " violations";
        if (!first_.empty()) s << "; first: " << first_;
        return s.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t violations_ = 0;
    std::string first_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// One computed code, kept for the cross-criterion checks.
struct Sample {
    AlgebraElement e;
    std::size_t dim;
    std::optional<u64> distance;
    std::vector<Bound> bounds;
    bool certified_context;
};

std::vector<Sample> samples;

struct AbelianInstance {
    Group g;
    PrimePower q;
    u64 exponent;  // from the invariants, independent of the orbit code
};

std::vector<AbelianInstance> abelian_instances;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << detail << std::endl;
    if (!ok) ++failures;
}

template <class F>
void run_criterion(int id, const std::string& name, F&& body) {
    try {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        const double limit = body(c);
        const double elapsed = seconds_since(t0);
        std::ostringstream d;
        d << c.summary();
        d.precision(3);
        d << std::fixed << ", " << elapsed << " s";
        if (limit > 0) {
            d << " (limit " << limit << " s)";
            c.expect(elapsed < limit, "time limit");
        }
        report(id, name, c.ok(), d.str());
    } catch (const std::exception& ex) {
        report(id, name, false, std::string("exception: ") + ex.what());
    }
}

bool orthogonal(const AlgebraElement& a, const AlgebraElement& b) {
    return alg_mul(a, b).is_zero() && alg_mul(b, a).is_zero();
}

double criterion_a4(Check& c) {
    auto h = fixtures::a4();
    auto f = fixtures::gf(3);
    const auto report = classify_modular_exhaustive(h, f);
    c.expect(report.verdict == Verdict::Ecid, "verdict ECID");
    const auto census = idempotent_search(h, f);
    c.expect(census.candidates == 531441, "531441 candidates");

    std::set<std::string> listed;
    for (const auto& d : fixtures::a4_listed_digits()) listed.insert(AlgebraElement::from_digits(f, h, d).to_string());
    c.expect(listed.size() == 118, "118 listed idempotents");

    std::set<std::string> dim3, primitive;
    for (std::size_t i = 0; i < census.idempotents.size(); ++i) {
        const auto& e = census.idempotents[i];
        if (census.dimension[i] == 3) dim3.insert(e.to_string());
        if (census.primitive[i]) {
            primitive.insert(e.to_string());
        }
    }
    c.expect(dim3.size() == 118, "118 idempotents of dimension 3");
    c.expect(dim3 == primitive, "dimension 3 exactly the primitive ones");
    c.expect(dim3 == listed, "matches the listed idempotents");

    const auto one = AlgebraElement::one(f, h);
    for (std::size_t i = 0; i < census.idempotents.size(); ++i) {
        const auto& e = census.idempotents[i];
        if (e.is_zero() || e == one || census.primitive[i]) continue;
        const auto idx = census.primitive_decomposition(i);
        c.expect(idx.size() == 2 || idx.size() == 3, "decomposition into 2 or 3 primitives");
        auto acc = AlgebraElement::zero(f, h);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            c.expect(census.primitive[idx[a]], "parts primitive");
            acc = acc + census.idempotents[idx[a]];
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                c.expect(orthogonal(census.idempotents[idx[a]], census.idempotents[idx[b]]), "parts orthogonal");
            }
        }
        c.expect(acc == e, "parts sum to e");
    }

    CodeOptions opts;
    opts.certificate = &report;
    for (std::size_t i = 0; i < census.idempotents.size(); ++i) {
        const auto& e = census.idempotents[i];
        if (e.is_zero()) continue;
        if (census.primitive[i]) {
            const auto r = analyze_code(e, opts);
            samples.push_back({e, r.dim, r.distance, r.bounds, true});
        } else {
            samples.push_back({e, census.dimension[i], std::nullopt, {}, true});
        }
    }
    return kLimitA4;
}

double criterion_c6(Check& c) {
    const u64 inv[] = {6};
    auto g = Group::abelian(inv);
    auto f = fixtures::gf(2);
    const auto census = idempotent_search(g, f);
    std::set<std::string> prim;
    for (std::size_t i = 0; i < census.idempotents.size(); ++i) {
        if (census.primitive[i]) prim.insert(census.idempotents[i].to_string());
    }
    c.expect(prim == std::set<std::string>{"1 + x^2 + x^4", "x^2 + x^4"}, "primitive set");
    c.expect(ideal_dimension(AlgebraElement(f, g, {0, 0, 1, 0, 1, 0})) == 4, "dim of (x^2 + x^4) = 4");
    const auto report = classify_modular_exhaustive(g, f);
    c.expect(report.verdict == Verdict::NotEcid, "verdict not-ECID");
    c.expect(sylow_is_cp(g, 2), "Sylow 2-subgroup is C2");
    for (std::size_t i = 0; i < census.idempotents.size(); ++i) {
        const auto& e = census.idempotents[i];
        if (e.is_zero()) continue;
        const auto r = analyze_code(e);
        samples.push_back({e, r.dim, r.distance, r.bounds, false});
    }
    return kLimitC6;
}

double criterion_tables(Check& c) {
    auto f = fixtures::gf25();
    c.expect(f->modulus() == std::vector<u64>{2, 4, 1}, "modulus x^2 + 4x + 2");
    auto h = fixtures::sl23();
    const auto es = fixtures::sl23_idempotents(f, h);
    std::vector<std::size_t> all(h.order());
    std::iota(all.begin(), all.end(), std::size_t{0});
    c.expect(hat_idempotent(h, all, f) == es[0], "e1 = (1/24) sum h");

    const u64 lambdas[] = {4, 3, 2}, products[] = {96, 72, 48}, dims[] = {1, 2, 3};
    for (std::size_t i = 0; i < 3; ++i) {
        c.expect(is_idempotent(es[i]), "idempotent");
        c.expect(lambda1(es[i]).code() == lambdas[i], "lambda1");
        c.expect(h.order() * lambda1(es[i]).code() == products[i], "|H| lambda1");
        c.expect(dimension_formula_D(static_cast<i64>(products[i]), 5) == dims[i], "D");
    }

    const auto cert = classify_semisimple(h, PrimePower::from_q(25));
    c.expect(cert.certifies_ecid(), "GF(25) SL(2,3) certified minimal ECD");
    CodeOptions opts;
    opts.certificate = &cert;
    const std::vector<std::vector<std::size_t>> subsets = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    const std::size_t want_dim[] = {1, 2, 3, 3, 4, 5, 6};
    const u64 want_d[] = {24, 18, 12, 15, 6, 9, 6};
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        auto e = AlgebraElement::zero(f, h);
        for (auto i : subsets[k]) e = e + es[i];
        const auto r = analyze_code(e, opts);
        c.expect(r.dim == want_dim[k], "Table 2 dimension");
        c.expect(r.distance == want_d[k], "Table 2 distance");
        samples.push_back({e, r.dim, r.distance, r.bounds, true});
    }
    return kLimitTables;
}

double criterion_arithmetic(Check& c) {
    auto h = fixtures::sl23();
    const auto r = classify_semisimple(h, PrimePower::from_q(25));
    c.expect(r.gamma == 21u, "gamma = 21");
    c.expect(b0(21) == 10, "b0(21) = 10");
    c.expect(r.floor_sqrt_gamma == 4u, "floor sqrt 21 = 4");
    c.expect(wedderburn_solver(21, 4) == std::vector<std::vector<u64>>{{2, 2, 2, 3}}, "unique {2,2,2,3}");

    NonabelianInvariants m12;
    m12.order = 95040;
    m12.abelianization_order = 1;
    m12.class_count = 15;
    m12.t_w = 1;
    m12.phi_exponent = 1;
    const auto m = classify_nonabelian_arithmetic(m12, PrimePower::from_q(307), std::nullopt, {true, false});
    c.expect(m.gamma == 95039u, "M12 gamma");
    c.expect(m.s == 14u, "M12 s");
    c.expect(m.ceil_sqrt_gamma_over_s == 83u, "ceil sqrt(gamma/s) = 83");
    c.expect(m.floor_sqrt_gamma == 308u, "floor sqrt(gamma) = 308");
    // Integer cross-check of the two roots.
    c.expect(82u * 82u * 14u < 95039u && 83u * 83u * 14u >= 95039u, "83 is the ceiling");
    c.expect(308u * 308u <= 95039u && 309u * 309u > 95039u, "308 is the floor");
    return kLimitArithmetic;
}

std::pair<std::vector<u64>, PrimePower> random_instance(std::mt19937_64& gen) {
    std::uniform_int_distribution<u64> inv(2, 12);
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<u64> invariants;
    u64 order = 1;
    for (int k = count(gen); k > 0; --k) {
        const u64 x = inv(gen);
        if (order * x > 200) break;
        invariants.push_back(x);
        order *= x;
    }
    if (invariants.empty()) {
        invariants.push_back(inv(gen));
        order = invariants[0];
    }
    std::uniform_int_distribution<u64> prime_pick(2, 251);
    std::uniform_int_distribution<unsigned> alpha_pick(1, 4);
    while (true) {
        const u64 p = prime_pick(gen);
        if (!is_prime(p) || order % p == 0) continue;
        unsigned alpha = 1;
        u64 q = p;
        for (unsigned target = alpha_pick(gen); alpha < target && q * p <= (1u << 16); ++alpha) q *= p;
        return {invariants, PrimePower::from_parts(p, alpha)};
    }
}

double criterion_splitting(Check& c) {
    auto gen = fixtures::rng(0xacce);
    std::uniform_int_distribution<u64> tpick(1, 12);
    for (int k = 0; k < kSplittingCases; ++k) {
        auto [inv, q] = random_instance(gen);
        auto g = Group::abelian(inv);
        const u64 exp = std::accumulate(inv.begin(), inv.end(), u64{1}, [](u64 a, u64 b) { return lcm(a, b); });
        const auto d = qorbits(g, q);
        c.expect(d.t_w == d.l, "t_w = l");
        const u64 t = tpick(gen);
        const bool by_orbits = t % d.t_w == 0;
        const bool by_exponent = powmod(q.q % exp, t, exp) == 1 % exp;
        c.expect(by_orbits == by_exponent, "t_w | t iff exp | q^t - 1");
        c.expect(is_splitting_field(g, q, t).splits == by_exponent, "is_splitting_field");
        abelian_instances.push_back({g, q, exp});
    }
    return 0;
}

double criterion_power_laws(Check& c) {
    for (const auto& inst : abelian_instances) {
        const auto& g = inst.g;
        const auto d = qorbits(g, inst.q);
        for (std::size_t x = 0; x < g.order(); ++x) {
            // g^(q^a) computed by a-fold q-th powers through the group.
            const u64 o = g.element_order(x);
            const u64 step = inst.q.q % o;
            std::size_t y = x;
            for (u64 a = 1; a <= 4 * d.l; ++a) {
                y = g.power(y, step);
                c.expect((y == x) == (a % d.t[x] == 0), "g^(q^a) = g iff t_g | a");
            }
        }
        for (std::size_t x = 0; x < g.order(); ++x) {
            for (std::size_t z = 0; z < g.order(); ++z) {
                if (g.element_order(z) % g.element_order(x) == 0) c.expect(d.t[z] % d.t[x] == 0, "o(g) | o(h) => t_g | t_h");
            }
        }
    }
    return 0;
}

double criterion_dimension(Check& c) {
    for (const auto& s : samples) {
        const u64 p = s.e.field()->characteristic();
        const u64 x = order_times_lambda1(s.e);
        c.expect(ideal_dimension(s.e) == s.dim, "recorded dimension is the rank");
        c.expect(s.dim % p == x % p, "dim = |G| lambda1 mod p");
        if (s.certified_context && s.dim <= p) c.expect(dimension_formula_D_code(x, p) == s.dim, "D equals rank");
    }
    return 0;
}

double criterion_bounds(Check& c) {
    std::size_t exact = 0;
    for (const auto& s : samples) {
        if (!s.distance) continue;
        ++exact;
        const u64 d = *s.distance;
        c.expect(s.e.group().order() <= s.dim * d, "|G| <= dim d");
        for (const auto& b : s.bounds) c.expect(b.value <= Rational(d), "bound " + b.cite);
    }
    c.expect(exact >= 118 + 3 + 7, "distances from criteria 1-3 present");
    for (const auto& inst : abelian_instances) {
        const auto d = qorbits(inst.g, inst.q);
        c.expect(prime_ratio_product(inst.g.order()) <= Rational(inst.g.order(), d.t_w), "prod p/(p-1) <= |G|/t_w");
    }
    return 0;
}

double criterion_fifth_powers(Check& c) {
    const u64 q = 15625;  // 5^6
    c.expect(powmod(q, 4, 144) == 1, "144 | (5^6)^4 - 1");
    u64 five24 = 1;
    for (int i = 0; i < 24; ++i) five24 *= 5;
    const u64 product = 32ULL * 9 * 7 * 13 * 31 * 313 * 601 * 390001;
    c.expect(product == five24 - 1, "factorization of 5^24 - 1");
    c.expect(five24 - 1 == 59604644775390624ULL, "5^24 - 1 value");
    c.expect((five24 - 1) % 144 == 0, "144 divides it");

    const auto q56 = PrimePower::from_parts(5, 6);
    for (const std::vector<u64>& inv : {std::vector<u64>{2, 16, 9, 3}, std::vector<u64>{8, 8, 16, 9}}) {
        const auto r = classify_semisimple(Group::abelian(inv), q56);
        c.expect(r.verdict == Verdict::MinimalEcd, "minimal ECD");
    }
    return kLimitFifthPowers;
}

}  // namespace

int main() {
    run_criterion(1, "A4 census over F3", criterion_a4);
    run_criterion(2, "C6 over F2", criterion_c6);
    run_criterion(3, "SL(2,3) over GF(25) tables", criterion_tables);
    run_criterion(4, "Wedderburn arithmetic", criterion_arithmetic);
    run_criterion(5, "splitting-field equivalences", criterion_splitting);
    run_criterion(6, "power-map laws", criterion_power_laws);
    run_criterion(7, "dimension oracle vs formula", criterion_dimension);
    run_criterion(8, "bound chain", criterion_bounds);
    run_criterion(9, "5^6 arithmetic and G1, G2", criterion_fifth_powers);
    std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << std::endl;
    return failures == 0 ? 0 : 1;
}
