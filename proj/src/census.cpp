#include <algorithm>
#include <atomic>
#include <thread>

#include "ecid/codes.hpp"
#include "ecid/errors.hpp"

namespace ecid {

namespace {

struct Found {
    std::vector<std::vector<u64>> coeffs;
};

class SquareChecker {
public:
    SquareChecker(const Group& h, const FiniteField& field) : field_(field), n_(h.order()) {
        table_.resize(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = static_cast<std::uint32_t>(h.mul(i, j));
        }
        // pairs_[k] lists (i, j) with i*j = k, so (e^2)_k can be checked one k at a time.
        pairs_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) pairs_[table_[i * n_ + j]].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
        }
    }

    bool idempotent(const std::vector<u64>& e) const {
        for (std::size_t k = 0; k < n_; ++k) {
            u64 acc = 0;
            for (const auto& [i, j] : pairs_[k]) {
                if (e[i] == 0 || e[j] == 0) continue;
                acc = field_.add(acc, field_.mul(e[i], e[j]));
            }
            if (acc != e[k]) return false;
        }
        return true;
    }

private:
    const FiniteField& field_;
    std::size_t n_;
    std::vector<std::uint32_t> table_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs_;
};

// Enumerates every vector whose leading `prefix_len` digits spell `prefix`, in lexicographic order.
Found scan_stratum(const SquareChecker& check, std::size_t n, u64 q, u64 prefix, std::size_t prefix_len) {
    Found out;
    std::vector<u64> e(n, 0);
    for (std::size_t i = prefix_len; i-- > 0;) {
        e[i] = prefix % q;
        prefix /= q;
    }
    while (true) {
        if (check.idempotent(e)) out.coeffs.push_back(e);
        std::size_t pos = n;
        bool done = true;
        while (pos > prefix_len) {
            --pos;
            if (++e[pos] < q) {
                done = false;
                break;
            }
            e[pos] = 0;
        }
        if (done) return out;
    }
}

}  // namespace

std::size_t IdempotentCensus::primitive_count() const {
    return static_cast<std::size_t>(std::count(primitive.begin(), primitive.end(), true));
}

std::optional<std::size_t> IdempotentCensus::find(const AlgebraElement& e) const {
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        if (idempotents[i] == e) return i;
    }
    return std::nullopt;
}

std::vector<std::size_t> IdempotentCensus::primitive_decomposition(std::size_t index) const {
    if (index >= idempotents.size()) throw DomainError("primitive_decomposition: index out of range");
    std::vector<std::size_t> parts;
    AlgebraElement rest = idempotents[index];
    while (!rest.is_zero()) {
        auto idx = find(rest);
        if (!idx) throw std::logic_error("primitive_decomposition: remainder is not in the census");
        if (primitive[*idx]) {
            parts.push_back(*idx);
            break;
        }
        bool split = false;
        for (std::size_t f = 0; f < idempotents.size() && !split; ++f) {
            if (!primitive[f] || dimension[f] >= dimension[*idx]) continue;
            const auto& cand = idempotents[f];
            if (alg_mul(rest, cand) == cand && alg_mul(cand, rest) == cand) {
                parts.push_back(f);
                rest = rest - cand;
                split = true;
            }
        }
        if (!split) throw std::logic_error("primitive_decomposition: no primitive summand found");
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

IdempotentCensus idempotent_search(const Group& h, FieldPtr field, u64 budget, unsigned threads) {
    const std::size_t n = h.order();
    const u64 q = field->order();
    u64 total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / q) throw BudgetExceeded("idempotent search needs q^|H| > " + std::to_string(budget) + " candidates");
        total *= q;
    }
    if (total > budget) throw BudgetExceeded("idempotent search needs " + std::to_string(total) + " candidates");

    const SquareChecker check(h, *field);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::size_t prefix_len = 0;
    u64 strata = 1;
    while (prefix_len < n && strata < 4ull * threads) {
        strata *= q;
        ++prefix_len;
    }
    std::vector<Found> results(strata);
    std::atomic<u64> next{0};
    auto worker = [&] {
        for (u64 s = next++; s < strata; s = next++) results[s] = scan_stratum(check, n, q, s, prefix_len);
    };
    std::vector<std::thread> pool;
    const unsigned used = static_cast<unsigned>(std::min<u64>(threads, strata));
    for (unsigned t = 1; t < used; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    IdempotentCensus census;
    census.candidates = total;
    for (auto& r : results) {
        for (auto& c : r.coeffs) census.idempotents.emplace_back(field, h, std::move(c));
    }
    const std::size_t m = census.idempotents.size();
    census.dimension.resize(m);
    for (std::size_t i = 0; i < m; ++i) census.dimension[i] = ideal_dimension(census.idempotents[i]);

    // e != 0 is primitive when no idempotent f with 0 < dim f < dim e satisfies ef = fe = f.
    census.primitive.assign(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (census.dimension[i] == 0) continue;
        bool prim = true;
        for (std::size_t j = 0; j < m && prim; ++j) {
            if (census.dimension[j] == 0 || census.dimension[j] >= census.dimension[i]) continue;
            const auto& e = census.idempotents[i];
            const auto& f = census.idempotents[j];
            if (alg_mul(e, f) == f && alg_mul(f, e) == f) prim = false;
        }
        census.primitive[i] = prim;
    }
    return census;
}

}  // namespace ecid
