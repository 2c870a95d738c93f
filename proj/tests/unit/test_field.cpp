#include <doctest.h>

#include <functional>

#include "ecid/errors.hpp"
#include "ecid/field.hpp"
#include "fixtures.hpp"

using namespace ecid;

namespace {

// Schoolbook polynomial product reduced by a monic modulus, all mod p. Constant term first.
std::vector<u64> poly_mulmod(const std::vector<u64>& a, const std::vector<u64>& b, const std::vector<u64>& m, u64 p) {
    std::vector<u64> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const std::size_t deg = m.size() - 1;
    for (std::size_t k = prod.size(); k-- > deg;) {
        const u64 c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= deg; ++i) prod[k - deg + i] = (prod[k - deg + i] + (p - c) * m[i]) % p;
    }
    prod.resize(deg, 0);
    return prod;
}

// Irreducibility by trial division with every monic polynomial of degree 1..deg/2.
bool irreducible_by_trial_division(const std::vector<u64>& f, u64 p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        u64 count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            std::vector<u64> g(d + 1, 0);
            u64 x = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = x % p;
                x /= p;
            }
            g[d] = 1;
            // Remainder of f by g.
            std::vector<u64> r = f;
            for (std::size_t k = r.size(); k-- > d;) {
                const u64 c = r[k];
                if (c == 0) continue;
                for (std::size_t i = 0; i <= d; ++i) r[k - d + i] = (r[k - d + i] + (p - c) * g[i]) % p;
            }
            bool zero = true;
            for (std::size_t i = 0; i < d; ++i) zero = zero && r[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

// Rank as the largest k with a nonzero k x k minor (cofactor expansion).
u64 det(const FiniteField& f, std::vector<std::vector<u64>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    u64 acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<u64>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<u64> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(m[r][k]);
            }
            minor.push_back(row);
        }
        u64 term = f.mul(m[0][c], det(f, minor));
        acc = (c % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

std::size_t minor_rank(const FiniteField& f, const Matrix& m) {
    std::size_t best = 0;
    const std::size_t kmax = std::min(m.rows, m.cols);
    for (std::size_t k = 1; k <= kmax; ++k) {
        bool found = false;
        std::vector<std::size_t> rows, cols;
        std::function<void(std::size_t, std::size_t)> pick_cols;
        std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
            if (found) return;
            if (rows.size() == k) {
                pick_cols(0, 0);
                return;
            }
            for (std::size_t r = start; r < m.rows; ++r) {
                rows.push_back(r);
                pick_rows(r + 1);
                rows.pop_back();
            }
        };
        pick_cols = [&](std::size_t start, std::size_t) {
            if (found) return;
            if (cols.size() == k) {
                std::vector<std::vector<u64>> sub(k, std::vector<u64>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.at(rows[i], cols[j]);
                }
                if (det(f, sub) != 0) found = true;
                return;
            }
            for (std::size_t c = start; c < m.cols; ++c) {
                cols.push_back(c);
                pick_cols(c + 1, 0);
                cols.pop_back();
            }
        };
        pick_rows(0);
        if (found) best = k;
    }
    return best;
}

}  // namespace

TEST_CASE("field construction") {
    auto f = FiniteField::make(5, 2, std::vector<u64>{2, 4, 1});
    CHECK(f->order() == 25);
    CHECK(f->modulus() == std::vector<u64>{2, 4, 1});

    auto f3 = FiniteField::make(3, 1);
    CHECK(f3->order() == 3);
    CHECK(f3->modulus() == std::vector<u64>{0, 1});

    SUBCASE("GF(4) picks the only irreducible quadratic") {
        std::vector<std::vector<u64>> irreducible;
        for (u64 c0 = 0; c0 < 2; ++c0) {
            for (u64 c1 = 0; c1 < 2; ++c1) {
                // A binary quadratic is irreducible iff it has no root in GF(2).
                bool root = false;
                for (u64 x = 0; x < 2; ++x) root = root || (c0 + c1 * x + x * x) % 2 == 0;
                if (!root) irreducible.push_back({c0, c1, 1});
            }
        }
        REQUIRE(irreducible.size() == 1);
        CHECK(FiniteField::make(2, 2)->modulus() == irreducible.front());
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(FiniteField::make(6, 1), DomainError);
        CHECK_THROWS_AS(FiniteField::make(5, 2, std::vector<u64>{1, 0, 1}), DomainError);  // x^2 + 1 = (x-2)(x-3)
        CHECK_THROWS_AS(FiniteField::make(5, 2, std::vector<u64>{2, 4}), DomainError);
        CHECK_THROWS_AS(FiniteField::make(5, 0), DomainError);
    }
}

TEST_CASE("canonical modulus is the least irreducible") {
    for (u64 p : {2, 3, 5}) {
        for (unsigned d = 2; d <= 4; ++d) {
            if (p == 5 && d == 4) continue;
            auto f = FiniteField::make(p, d);
            // Walk monic polynomials in constant-term-first lexicographic order.
            u64 count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p;
            std::vector<u64> first;
            for (u64 idx = 0; idx < count && first.empty(); ++idx) {
                std::vector<u64> poly(d + 1, 0);
                u64 x = idx;
                // The constant term is the most significant digit.
                for (unsigned i = d; i-- > 0;) {
                    poly[i] = x % p;
                    x /= p;
                }
                poly[d] = 1;
                if (irreducible_by_trial_division(poly, p)) first = poly;
            }
            CAPTURE(p);
            CAPTURE(d);
            CHECK(f->modulus() == first);
        }
    }
}

TEST_CASE("is_irreducible agrees with trial division") {
    for (u64 p : {2, 3, 5}) {
        for (std::size_t d = 1; d <= 4; ++d) {
            u64 count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= p;
            for (u64 idx = 0; idx < count; ++idx) {
                std::vector<u64> poly(d + 1, 0);
                u64 x = idx;
                for (std::size_t i = 0; i < d; ++i) {
                    poly[i] = x % p;
                    x /= p;
                }
                poly[d] = 1;
                CAPTURE(poly);
                CHECK(is_irreducible(poly, p) == irreducible_by_trial_division(poly, p));
            }
        }
    }
}

TEST_CASE("arithmetic examples") {
    auto f5 = FiniteField::make(5, 1);
    CHECK(f5->inv(4) == 4);
    CHECK_THROWS_AS(f5->inv(0), DomainError);

    auto f = fixtures::gf25();
    const u64 gamma = f->from_coefficients(std::vector<u64>{0, 1});
    const auto expected = poly_mulmod({0, 1}, {0, 1}, f->modulus(), 5);
    CHECK(expected == std::vector<u64>{3, 1});
    CHECK(f->coefficients(f->mul(gamma, gamma)) == expected);
    CHECK(f->format(f->mul(gamma, gamma)) == "g + 3");

    for (u64 a = 0; a < 25; ++a) CHECK(f->add(a, 0) == a);
}

TEST_CASE("field elements refuse mixed fields") {
    auto a = FieldElement(fixtures::gf(5), 2);
    auto b = FieldElement(fixtures::gf(7), 2);
    CHECK_THROWS_AS(a + b, MismatchError);
    CHECK_THROWS_AS(a * b, MismatchError);
    CHECK((a * a).code() == 4);
    CHECK((a.inv() * a).code() == 1);
    CHECK_THROWS_AS(FieldElement(fixtures::gf(5), 0).inv(), DomainError);
}

TEST_CASE("field axioms and Frobenius on random samples") {
    auto gen = fixtures::rng(1);
    const std::vector<FieldPtr> fields = {fixtures::gf(2), fixtures::gf(2, 2), fixtures::gf(3, 2), fixtures::gf(2, 3),
                                          fixtures::gf25(), fixtures::gf(2, 11), fixtures::gf(5, 6), fixtures::gf(101)};
    for (const auto& f : fields) {
        CAPTURE(f->order());
        if (f->order() > FiniteField::kTableLimit) CHECK_FALSE(f->tabulated());
        std::uniform_int_distribution<u64> pick(0, f->order() - 1);
        const u64 p = f->characteristic();
        for (int i = 0; i < 300; ++i) {
            const u64 a = pick(gen), b = pick(gen), c = pick(gen);
            CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
            CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
            CHECK(f->pow(a, f->order()) == a);
        }
    }
}

TEST_CASE("matrix rank") {
    auto f = fixtures::gf(5);
    Matrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(matrix_rank(*f, id) == 4);
    CHECK(matrix_rank(*f, Matrix(3, 5)) == 0);

    SUBCASE("agrees with the minor oracle") {
        auto gen = fixtures::rng(2);
        for (u64 p : {2, 3, 5}) {
            auto fp = fixtures::gf(p);
            std::uniform_int_distribution<u64> entry(0, p - 1);
            std::uniform_int_distribution<std::size_t> dim(1, 4);
            for (int trial = 0; trial < 200; ++trial) {
                Matrix m(dim(gen), dim(gen));
                for (auto& v : m.data) v = entry(gen);
                // Sparsify some matrices so low ranks show up.
                if (trial % 3 == 0) {
                    for (auto& v : m.data) v = (entry(gen) == 0) ? v : 0;
                }
                CHECK(matrix_rank(*fp, m) == minor_rank(*fp, m));
            }
        }
    }

    SUBCASE("field-element rows") {
        auto fp = fixtures::gf(3);
        std::vector<std::vector<FieldElement>> rows = {{{fp, 1}, {fp, 2}}, {{fp, 2}, {fp, 1}}};
        CHECK(matrix_rank(rows) == 1);
        rows[1].pop_back();
        CHECK_THROWS_AS(matrix_rank(rows), DomainError);
        std::vector<std::vector<FieldElement>> mixed = {{{fp, 1}}, {{fixtures::gf(5), 1}}};
        CHECK_THROWS_AS(matrix_rank(mixed), MismatchError);
    }
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(2, 3) == 2);
    CHECK(multiplicative_order(25, 1) == 1);
    // exp(SL(2,3)) = 12 divides 5^2 - 1 but not 5 - 1; over GF(25) it already divides q - 1.
    CHECK(multiplicative_order(5, 12) == 2);
    CHECK(4 % 12 != 0);
    CHECK(multiplicative_order(25, 12) == 1);
    CHECK_THROWS_AS(multiplicative_order(6, 9), DomainError);

    auto gen = fixtures::rng(3);
    std::uniform_int_distribution<u64> pick(1, 5000);
    int tested = 0;
    while (tested < 500) {
        const u64 m = pick(gen), b = pick(gen);
        if (gcd(b, m) != 1) continue;
        ++tested;
        u64 k = 1, x = b % m;
        while (x != 1 % m) {
            x = x * b % m;
            ++k;
        }
        CHECK(multiplicative_order(b, m) == k);
        CHECK(euler_phi(m) % k == 0);
    }
}

TEST_CASE("integer helpers") {
    CHECK(is_prime(390001));
    CHECK_FALSE(is_prime(1));
    CHECK(euler_phi(144) == 48);
    CHECK(isqrt(95039) == 308);
    CHECK(ceil_sqrt_ratio(95039, 14) == 83);
    for (u64 n = 0; n < 2000; ++n) {
        const u64 r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
    for (u64 num = 1; num < 300; ++num) {
        for (u64 den = 1; den < 20; ++den) {
            const u64 c = ceil_sqrt_ratio(num, den);
            // c is the least integer with c^2 >= num/den.
            CHECK(c * c * den >= num);
            CHECK((c == 0 || (c - 1) * (c - 1) * den < num));
        }
    }
    u64 back = 1;
    for (const auto& [p, e] : factorize(5960464477539062ULL / 2 * 2)) {
        for (unsigned i = 0; i < e; ++i) back *= p;
    }
    CHECK(back == 5960464477539062ULL);
    CHECK_THROWS_AS(checked_mul(1ULL << 40, 1ULL << 40), DomainError);
    CHECK(PrimePower::from_q(15625).alpha == 6);
    CHECK_THROWS_AS(PrimePower::from_q(12), DomainError);
}
