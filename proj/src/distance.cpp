#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "ecid/codes.hpp"
#include "ecid/errors.hpp"

namespace ecid {

namespace {

constexpr u64 kSaturated = std::numeric_limits<u64>::max();

struct Task {
    std::size_t lead;  // first row with a nonzero (= 1) coefficient
    u64 second;        // coefficient of row lead + 1 (ignored when lead is the last row)
};

// Scans every codeword of one stratum; returns its minimum weight.
class StratumScanner {
public:
    StratumScanner(const FiniteField& field, const Matrix& basis) : field_(field), basis_(basis) {
        const std::size_t n = basis.cols;
        const u64 q = field.order();
        if (field.tabulated()) {
            // delta_[j][c] = (c+1)*row_j - c*row_j, and for c = q-1 the wrap back to 0.
            delta_.assign(basis.rows * q * n, 0);
            scaled_.assign(basis.rows * q * n, 0);
            for (std::size_t j = 0; j < basis.rows; ++j) {
                for (u64 c = 0; c < q; ++c) {
                    for (std::size_t x = 0; x < n; ++x) scaled_[(j * q + c) * n + x] = field.mul(c, basis.at(j, x));
                }
                for (u64 c = 0; c < q; ++c) {
                    const u64 next = (c + 1) % q;
                    for (std::size_t x = 0; x < n; ++x) {
                        delta_[(j * q + c) * n + x] =
                            field.sub(scaled_[(j * q + next) * n + x], scaled_[(j * q + c) * n + x]);
                    }
                }
            }
        }
    }

    u64 scan(const Task& task) const {
        const std::size_t n = basis_.cols;
        const std::size_t k = basis_.rows;
        std::vector<u64> word(basis_.row(task.lead).begin(), basis_.row(task.lead).end());
        std::size_t first_free = task.lead + 1;
        if (task.lead + 1 < k) {
            for (std::size_t x = 0; x < n; ++x) word[x] = field_.add(word[x], field_.mul(task.second, basis_.at(task.lead + 1, x)));
            first_free = task.lead + 2;
        }
        const std::size_t free_rows = k > first_free ? k - first_free : 0;
        std::vector<u64> digits(free_rows, 0);
        u64 best = weight(word);
        const u64 q = field_.order();
        const bool fast = field_.tabulated();
        const auto& add = field_.add_table();
        while (true) {
            // odometer over the free rows, last row fastest
            std::size_t pos = free_rows;
            while (pos > 0) {
                --pos;
                const std::size_t row = first_free + pos;
                const u64 c = digits[pos];
                if (fast) {
                    const u64* d = &delta_[(row * q + c) * n];
                    for (std::size_t x = 0; x < n; ++x) word[x] = add[word[x] * q + d[x]];
                } else {
                    const u64 next = (c + 1) % q;
                    const u64 diff = field_.sub(next, c);
                    for (std::size_t x = 0; x < n; ++x) word[x] = field_.add(word[x], field_.mul(diff, basis_.at(row, x)));
                }
                digits[pos] = (c + 1) % q;
                if (digits[pos] != 0) break;
                if (pos == 0) return best;
            }
            if (free_rows == 0) return best;
            best = std::min(best, weight(word));
        }
    }

private:
    static u64 weight(const std::vector<u64>& w) {
        u64 count = 0;
        for (u64 v : w) count += v != 0;
        return count;
    }

    const FiniteField& field_;
    const Matrix& basis_;
    std::vector<u64> delta_;
    std::vector<u64> scaled_;
};

}  // namespace

u64 projective_codeword_count(u64 q, std::size_t k) {
    u64 total = 0, term = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > kSaturated - term) return kSaturated;
        total += term;
        if (i + 1 < k) {
            if (term > kSaturated / q) return kSaturated;
            term *= q;
        }
    }
    return total;
}

u64 min_distance_of_basis(const FiniteField& field, const Matrix& basis, u64 budget, unsigned threads) {
    const std::size_t k = basis.rows;
    if (k == 0) throw DomainError("min_distance: the zero code has no minimum distance");
    const u64 q = field.order();
    const u64 count = projective_codeword_count(q, k);
    if (count > budget) {
        throw BudgetExceeded("min_distance: " + (count == kSaturated ? std::string("more than 2^64") : std::to_string(count)) +
                             " codewords exceed the budget of " + std::to_string(budget));
    }
    std::vector<Task> tasks;
    for (std::size_t lead = 0; lead < k; ++lead) {
        if (lead + 1 < k) {
            for (u64 c = 0; c < q; ++c) tasks.push_back({lead, c});
        } else {
            tasks.push_back({lead, 0});
        }
    }
    StratumScanner scanner(field, basis);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
    std::vector<u64> results(tasks.size(), kSaturated);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) results[t] = scanner.scan(tasks[t]);
    };
    if (threads <= 1 || count < 4096) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return *std::min_element(results.begin(), results.end());
}

Matrix ideal_basis(const AlgebraElement& e) {
    Matrix m = right_mul_matrix(e);
    const auto pivots = row_reduce(*e.field(), m);
    Matrix basis(pivots.size(), m.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::copy(m.row(r).begin(), m.row(r).end(), basis.row(r).begin());
    }
    return basis;
}

u64 min_distance_exact(const AlgebraElement& e, u64 budget, unsigned threads) {
    if (e.is_zero()) throw DomainError("min_distance_exact: e must be nonzero");
    return min_distance_of_basis(*e.field(), ideal_basis(e), budget, threads);
}

}  // namespace ecid
