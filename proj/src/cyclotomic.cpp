#include "ecid/cyclotomic.hpp"

#include <map>
#include <sstream>

#include "ecid/errors.hpp"

namespace ecid {

namespace {

void require_coprime(const Group& g, PrimePower q, const char* who) {
    if (g.order() % q.p == 0) {
        throw DomainError(std::string(who) + ": p = " + std::to_string(q.p) + " divides |G| = " +
                          std::to_string(g.order()) + " (group algebra is not semisimple)");
    }
}

}  // namespace

QOrbitData qorbits(const Group& g, PrimePower q) {
    if (!g.is_abelian()) throw DomainError("qorbits: group must be abelian");
    require_coprime(g, q, "qorbits");
    const std::size_t n = g.order();
    QOrbitData d;
    d.group = g;
    d.q = q;
    d.t.resize(n);
    d.gen_class_sizes.resize(n);

    std::map<u64, std::pair<u64, u64>> by_order;  // o(g) -> (t, phi)
    for (std::size_t a = 0; a < n; ++a) {
        const u64 o = g.element_order(a);
        auto it = by_order.find(o);
        if (it == by_order.end()) {
            it = by_order.emplace(o, std::make_pair(multiplicative_order(q.q % o, o), euler_phi(o))).first;
        }
        d.t[a] = it->second.first;
        d.gen_class_sizes[a] = it->second.second;
        d.l = lcm(d.l, d.t[a]);
    }

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    d.orbit_of.assign(n, kNone);
    for (std::size_t a = 0; a < n; ++a) {
        if (d.orbit_of[a] != kNone) continue;
        std::vector<std::size_t> orbit;
        std::size_t x = a;
        do {
            d.orbit_of[x] = d.orbits.size();
            orbit.push_back(x);
            x = g.power(x, q.q % g.element_order(x));
        } while (x != a);
        if (orbit.size() != d.t[a]) {
            throw std::logic_error("qorbits: traced orbit size disagrees with multiplicative order");
        }
        d.orbits.push_back(std::move(orbit));
    }

    const auto e = exponent(g);
    d.exponent = e.exponent;
    d.w = e.witness;
    d.t_w = d.t[d.w];
    return d;
}

SplittingVerdict is_splitting_field(const Group& g, PrimePower q, u64 t) {
    if (t == 0) throw DomainError("is_splitting_field: extension degree must be positive");
    const auto data = qorbits(g, q);
    SplittingVerdict v;
    v.t_w = data.t_w;
    v.exponent = data.exponent;
    v.q_t_mod_exponent = powmod(q.q, t, data.exponent);
    v.exponent_divides_q_t_minus_1 = v.q_t_mod_exponent == 1 % data.exponent;
    v.t_w_divides_t = t % data.t_w == 0;
    if (v.exponent_divides_q_t_minus_1 != v.t_w_divides_t) {
        throw std::logic_error("is_splitting_field: t_w | t and exp(G) | q^t - 1 disagree");
    }
    v.splits = v.exponent_divides_q_t_minus_1;
    std::ostringstream ev;
    ev << "q^t mod exp(G) = " << v.q_t_mod_exponent << " with exp(G) = " << v.exponent << ", t = " << t
       << ", t_w = " << v.t_w << "; splitting field and primitive root of unity decided through exp(G) | q^t - 1";
    v.evidence = ev.str();
    return v;
}

bool splitting_necessary_condition(const Group& h, PrimePower q) {
    require_coprime(h, q, "splitting_necessary_condition");
    const auto comm = commutator_subgroup(h);
    const u64 e = exponent(comm.quotient).exponent;
    return (q.q - 1) % e == 0;
}

bool splitting_sufficient_condition(const Group& h, PrimePower q) {
    require_coprime(h, q, "splitting_sufficient_condition");
    return (q.q - 1) % exponent(h).exponent == 0;
}

}  // namespace ecid
