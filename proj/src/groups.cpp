#include "ecid/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "ecid/errors.hpp"

namespace ecid {

struct Group::Impl {
    std::size_t n = 0;
    std::size_t identity = 0;
    std::vector<std::uint32_t> table;  // empty for arithmetic abelian groups
    std::vector<u64> invariants;       // non-empty only for arithmetic abelian groups
    std::vector<u64> strides;
    std::vector<std::size_t> inverses;
    std::vector<u64> orders;
    std::vector<std::string> labels;
    bool abelian = false;

    std::size_t mul(std::size_t a, std::size_t b) const {
        if (!table.empty()) return table[a * n + b];
        std::size_t out = 0;
        for (std::size_t k = 0; k < invariants.size(); ++k) {
            const u64 ca = (a / strides[k]) % invariants[k];
            const u64 cb = (b / strides[k]) % invariants[k];
            out += ((ca + cb) % invariants[k]) * strides[k];
        }
        return out;
    }
};

namespace {

void fill_orders_and_inverses(Group::Impl& impl) {
    impl.orders.assign(impl.n, 0);
    impl.inverses.assign(impl.n, 0);
    for (std::size_t a = 0; a < impl.n; ++a) {
        std::size_t x = a;
        u64 k = 1;
        std::size_t prev = impl.identity;
        while (x != impl.identity) {
            prev = x;
            x = impl.mul(x, a);
            ++k;
            if (k > impl.n) throw DomainError("group: element order exceeds group order");
        }
        impl.orders[a] = k;
        impl.inverses[a] = (a == impl.identity) ? impl.identity : prev;  // a^(k-1)
    }
}

std::string permutation_key(const Permutation& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint32_t));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    // (a*b)(i) = a(b(i))
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i] - 1];
    return out;
}

void validate_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (auto v : p) {
        if (v < 1 || v > p.size() || seen[v]) throw DomainError("permutation: not a bijection of {1..m}");
        seen[v] = true;
    }
}

struct Closure {
    std::vector<Permutation> elements;
    std::unordered_map<std::string, std::size_t> index;
};

Closure permutation_closure(std::span<const Permutation> generators, std::size_t cap) {
    std::size_t degree = 0;
    for (const auto& g : generators) degree = std::max(degree, g.size());
    std::vector<Permutation> gens;
    for (auto g : generators) {
        validate_permutation(g);
        for (std::uint32_t i = static_cast<std::uint32_t>(g.size()) + 1; i <= degree; ++i) g.push_back(i);
        gens.push_back(std::move(g));
    }
    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i + 1);

    Closure c;
    c.elements.push_back(id);
    c.index.emplace(permutation_key(id), 0);
    for (std::size_t head = 0; head < c.elements.size(); ++head) {
        for (const auto& s : gens) {
            Permutation y = compose(c.elements[head], s);
            auto key = permutation_key(y);
            if (c.index.count(key)) continue;
            if (c.elements.size() >= cap) {
                throw DomainError("group: permutation closure exceeds cap of " + std::to_string(cap));
            }
            c.index.emplace(std::move(key), c.elements.size());
            c.elements.push_back(std::move(y));
        }
    }
    return c;
}

Group group_from_closure(const Closure& c) {
    const std::size_t n = c.elements.size();
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            table[i][j] = static_cast<std::uint32_t>(c.index.at(permutation_key(compose(c.elements[i], c.elements[j]))));
        }
    }
    std::vector<std::string> labels;
    for (const auto& p : c.elements) labels.push_back(format_cycles(p));
    return Group::from_table(std::move(table), std::move(labels));
}

}  // namespace

Permutation parse_cycles(const std::string& text, std::size_t degree) {
    Permutation perm(degree);
    for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint32_t>(i + 1);
    std::string trimmed;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    }
    if (trimmed.empty() || trimmed == "1" || trimmed == "()") return perm;
    std::size_t pos = 0;
    std::vector<bool> used(degree + 1, false);
    while (pos < trimmed.size()) {
        if (trimmed[pos] != '(') throw ParseError("cycle notation: expected '(' in \"" + text + "\"");
        const auto close = trimmed.find(')', pos);
        if (close == std::string::npos) throw ParseError("cycle notation: unbalanced parenthesis");
        const std::string body = trimmed.substr(pos + 1, close - pos - 1);
        std::vector<std::uint32_t> points;
        if (body.find(',') != std::string::npos) {
            std::stringstream ss(body);
            std::string tok;
            while (std::getline(ss, tok, ',')) points.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        } else {
            for (char ch : body) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("cycle notation: bad point");
                points.push_back(static_cast<std::uint32_t>(ch - '0'));
            }
        }
        for (std::size_t k = 0; k < points.size(); ++k) {
            const auto from = points[k];
            if (from < 1 || from > degree || used[from]) throw DomainError("cycle notation: invalid point");
            used[from] = true;
            perm[from - 1] = points[(k + 1) % points.size()];
        }
        pos = close + 1;
    }
    return perm;
}

std::string format_cycles(const Permutation& perm) {
    std::vector<bool> seen(perm.size() + 1, false);
    std::ostringstream out;
    const bool wide = perm.size() > 9;
    for (std::uint32_t start = 1; start <= perm.size(); ++start) {
        if (seen[start] || perm[start - 1] == start) continue;
        out << '(';
        std::uint32_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first && wide) out << ',';
            out << x;
            first = false;
            x = perm[x - 1];
        }
        out << ')';
    }
    const auto s = out.str();
    return s.empty() ? "()" : s;
}

Group::Group() {
    static const std::shared_ptr<const Impl> trivial = [] {
        auto impl = std::make_shared<Impl>();
        impl->n = 1;
        impl->table = {0};
        impl->inverses = {0};
        impl->orders = {1};
        impl->labels = {"1"};
        impl->abelian = true;
        return impl;
    }();
    impl_ = trivial;
}

Group Group::abelian(std::span<const u64> invariants, std::size_t cap) {
    if (invariants.empty()) throw DomainError("abelian group: need at least one invariant");
    auto impl = std::make_shared<Impl>();
    impl->invariants.assign(invariants.begin(), invariants.end());
    u64 n = 1;
    for (u64 k : invariants) {
        if (k < 2) throw DomainError("abelian group: invariants must be >= 2");
        n = checked_mul(n, k);
        if (n > cap) throw DomainError("abelian group: order exceeds cap of " + std::to_string(cap));
    }
    impl->n = n;
    impl->strides.assign(invariants.size(), 1);
    for (std::size_t k = invariants.size() - 1; k-- > 0;) impl->strides[k] = impl->strides[k + 1] * invariants[k + 1];
    impl->identity = 0;
    impl->abelian = true;
    impl->labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (invariants.size() == 1) {
            impl->labels[a] = a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a));
        } else {
            std::string s = "(";
            for (std::size_t k = 0; k < invariants.size(); ++k) {
                if (k) s += ',';
                s += std::to_string((a / impl->strides[k]) % invariants[k]);
            }
            impl->labels[a] = s + ")";
        }
    }
    // Orders and inverses arithmetically: o = lcm(n_k / gcd(n_k, c_k)).
    impl->orders.assign(n, 1);
    impl->inverses.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        u64 o = 1;
        std::size_t inv = 0;
        for (std::size_t k = 0; k < invariants.size(); ++k) {
            const u64 c = (a / impl->strides[k]) % invariants[k];
            o = lcm(o, invariants[k] / gcd(invariants[k], c));
            inv += ((invariants[k] - c) % invariants[k]) * impl->strides[k];
        }
        impl->orders[a] = o;
        impl->inverses[a] = inv;
    }
    return Group(std::move(impl));
}

Group Group::from_table(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw DomainError("cayley table: empty");
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw DomainError("cayley table: not square");
        std::vector<bool> seen(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = table[i][j];
            if (v >= n || seen[v]) throw DomainError("cayley table: row " + std::to_string(i) + " is not a permutation");
            seen[v] = true;
            impl->table[i * n + j] = v;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = impl->table[i * n + j];
            if (seen[v]) throw DomainError("cayley table: column " + std::to_string(j) + " is not a permutation");
            seen[v] = true;
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = impl->table[e * n + j] == j && impl->table[j * n + e] == j;
        if (ok) {
            impl->identity = e;
            found = true;
        }
    }
    if (!found) throw DomainError("cayley table: no two-sided identity");

    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        return impl->mul(impl->mul(a, b), c) == impl->mul(a, impl->mul(b, c));
    };
    if (n <= kExhaustiveAssociativityLimit) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) throw DomainError("cayley table: not associative");
    } else {
        std::mt19937_64 rng(kAssociativitySeed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int i = 0; i < 10000; ++i) {
            if (!assoc(pick(rng), pick(rng), pick(rng))) throw DomainError("cayley table: not associative");
        }
    }

    impl->abelian = true;
    for (std::size_t i = 0; i < n && impl->abelian; ++i)
        for (std::size_t j = i + 1; j < n && impl->abelian; ++j)
            impl->abelian = impl->table[i * n + j] == impl->table[j * n + i];

    if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    } else if (labels.size() != n) {
        throw DomainError("cayley table: label count does not match order");
    }
    impl->labels = std::move(labels);
    fill_orders_and_inverses(*impl);
    return Group(std::move(impl));
}

Group Group::from_permutations(std::span<const Permutation> generators, std::size_t cap) {
    return group_from_closure(permutation_closure(generators, cap));
}

Group Group::from_permutations_ordered(std::span<const Permutation> generators,
                                       std::span<const Permutation> elements, std::size_t cap) {
    Closure c = permutation_closure(generators, cap);
    if (elements.size() != c.elements.size()) {
        throw DomainError("group: element list has " + std::to_string(elements.size()) +
                          " entries but the generated group has order " + std::to_string(c.elements.size()));
    }
    const std::size_t degree = c.elements.front().size();
    Closure ordered;
    for (auto e : elements) {
        validate_permutation(e);
        for (std::uint32_t i = static_cast<std::uint32_t>(e.size()) + 1; i <= degree; ++i) e.push_back(i);
        auto key = permutation_key(e);
        if (!c.index.count(key)) throw DomainError("group: listed element " + format_cycles(e) + " is not generated");
        if (ordered.index.count(key)) throw DomainError("group: element listed twice: " + format_cycles(e));
        ordered.index.emplace(std::move(key), ordered.elements.size());
        ordered.elements.push_back(std::move(e));
    }
    return group_from_closure(ordered);
}

std::size_t Group::order() const { return impl_->n; }
std::size_t Group::identity() const { return impl_->identity; }
std::size_t Group::mul(std::size_t a, std::size_t b) const { return impl_->mul(a, b); }
std::size_t Group::inverse(std::size_t a) const { return impl_->inverses[a]; }
u64 Group::element_order(std::size_t a) const { return impl_->orders[a]; }
const std::string& Group::label(std::size_t a) const { return impl_->labels[a]; }
const std::vector<std::string>& Group::labels() const { return impl_->labels; }
bool Group::is_abelian() const { return impl_->abelian; }

const std::vector<u64>* Group::abelian_invariants() const {
    return impl_->invariants.empty() ? nullptr : &impl_->invariants;
}

std::size_t Group::power(std::size_t a, u64 e) const {
    e %= impl_->orders[a];
    if (!impl_->invariants.empty()) {
        std::size_t out = 0;
        for (std::size_t k = 0; k < impl_->invariants.size(); ++k) {
            const u64 m = impl_->invariants[k];
            const u64 c = (a / impl_->strides[k]) % m;
            out += mulmod(c, e, m) * impl_->strides[k];
        }
        return out;
    }
    std::size_t result = impl_->identity;
    std::size_t base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

ExponentInfo exponent(const Group& g) {
    ExponentInfo info;
    for (std::size_t a = 0; a < g.order(); ++a) info.exponent = lcm(info.exponent, g.element_order(a));
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (g.element_order(a) == info.exponent) {
            info.witness = a;
            break;
        }
    }
    return info;
}

std::vector<std::size_t> generated_subgroup(const Group& g, std::span<const std::size_t> generators) {
    std::vector<bool> in(g.order(), false);
    std::vector<std::size_t> members{g.identity()};
    in[g.identity()] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (auto s : generators) {
            const auto y = g.mul(members[head], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_subgroup(const Group& g, std::span<const std::size_t> subset) {
    if (subset.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (auto a : subset) {
        if (a >= g.order()) return false;
        in[a] = true;
    }
    if (!in[g.identity()]) return false;
    for (auto a : subset)
        for (auto b : subset)
            if (!in[g.mul(a, b)]) return false;
    return true;
}

CommutatorData commutator_subgroup(const Group& g) {
    CommutatorData out;
    const std::size_t n = g.order();
    if (g.is_abelian()) {
        out.subgroup = {g.identity()};
        out.quotient = g;
        out.coset_of.resize(n);
        out.representative.resize(n);
        for (std::size_t a = 0; a < n; ++a) out.coset_of[a] = out.representative[a] = a;
        return out;
    }
    std::vector<bool> is_comm(n, false);
    std::vector<std::size_t> comms;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto c = g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
            if (!is_comm[c]) {
                is_comm[c] = true;
                comms.push_back(c);
            }
        }
    }
    out.subgroup = generated_subgroup(g, comms);
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    out.coset_of.assign(n, kUnassigned);
    for (std::size_t a = 0; a < n; ++a) {
        if (out.coset_of[a] != kUnassigned) continue;
        const std::size_t idx = out.representative.size();
        out.representative.push_back(a);
        for (auto h : out.subgroup) out.coset_of[g.mul(a, h)] = idx;
    }
    const std::size_t m = out.representative.size();
    std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(g.label(out.representative[i]) + "H'");
        for (std::size_t j = 0; j < m; ++j) {
            table[i][j] = static_cast<std::uint32_t>(out.coset_of[g.mul(out.representative[i], out.representative[j])]);
        }
    }
    out.quotient = Group::from_table(std::move(table), std::move(labels));
    return out;
}

std::size_t conjugacy_class_count(const Group& g) {
    const std::size_t n = g.order();
    if (g.is_abelian()) return n;
    std::vector<bool> seen(n, false);
    std::size_t classes = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        ++classes;
        for (std::size_t h = 0; h < n; ++h) seen[g.mul(g.mul(h, x), g.inverse(h))] = true;
    }
    return classes;
}

bool sylow_is_cp(const Group& g, u64 p) {
    if (!is_prime(p)) throw DomainError("sylow_is_cp: p must be prime");
    const u64 n = g.order();
    return n % p == 0 && (n / p) % p != 0;
}

}  // namespace ecid
