#include <doctest.h>

#include <numeric>

#include "ecid/algebra.hpp"
#include "ecid/errors.hpp"
#include "fixtures.hpp"

using namespace ecid;

namespace {

Group cyclic(u64 n) {
    const u64 inv[] = {n};
    return Group::abelian(inv);
}

AlgebraElement random_element(const FieldPtr& f, const Group& g, std::mt19937_64& gen) {
    std::uniform_int_distribution<u64> pick(0, f->order() - 1);
    std::vector<u64> c(g.order());
    for (auto& v : c) v = pick(gen);
    return AlgebraElement(f, g, c);
}

// Product through the group table written out directly.
AlgebraElement convolution_oracle(const AlgebraElement& a, const AlgebraElement& b) {
    const auto& g = a.group();
    const auto& f = *a.field();
    std::vector<u64> out(g.order(), 0);
    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j) {
            const auto k = g.mul(i, j);
            out[k] = f.add(out[k], f.mul(a.code(i), b.code(j)));
        }
    }
    return AlgebraElement(a.field(), g, out);
}

}  // namespace

TEST_CASE("F2 C6 examples") {
    auto f = fixtures::gf(2);
    auto g = cyclic(6);
    auto e1 = AlgebraElement(f, g, {1, 0, 1, 0, 1, 0});
    auto e2 = AlgebraElement(f, g, {0, 0, 1, 0, 1, 0});
    CHECK(is_idempotent(e1));
    CHECK(is_idempotent(e2));
    CHECK(alg_mul(e2, e2) == e2);
    CHECK(ideal_dimension(e2) == 4);
    CHECK(matrix_rank(*f, right_mul_matrix(e2)) == 4);
    CHECK(ideal_dimension(e1) == 2);
    CHECK(is_idempotent(AlgebraElement::zero(f, g)));
    CHECK(is_idempotent(AlgebraElement::one(f, g)));
    CHECK(e1.to_string() == "1 + x^2 + x^4");
}

TEST_CASE("identity and zero") {
    auto f = fixtures::gf25();
    auto h = fixtures::sl23();
    auto gen = fixtures::rng(21);
    auto a = random_element(f, h, gen);
    CHECK(alg_mul(a, AlgebraElement::one(f, h)) == a);
    CHECK(alg_mul(AlgebraElement::one(f, h), a) == a);
    CHECK(alg_mul(a, AlgebraElement::zero(f, h)).is_zero());
    CHECK(lambda1(AlgebraElement::zero(f, h)).code() == 0);

    const auto one = right_mul_matrix(AlgebraElement::one(f, h));
    for (std::size_t i = 0; i < h.order(); ++i) {
        for (std::size_t j = 0; j < h.order(); ++j) CHECK(one.at(i, j) == (i == j ? 1u : 0u));
    }
    CHECK(matrix_rank(*f, right_mul_matrix(AlgebraElement::zero(f, h))) == 0);
    CHECK(ideal_dimension(AlgebraElement::one(f, h)) == 24);
}

TEST_CASE("listed A4 primitive idempotents") {
    auto f = fixtures::gf(3);
    auto h = fixtures::a4();
    const auto digits = fixtures::a4_listed_digits();
    REQUIRE(digits.size() == 118);
    auto one = AlgebraElement::one(f, h);
    for (const auto& d : digits) {
        auto e = AlgebraElement::from_digits(f, h, d);
        CAPTURE(d);
        CHECK(is_idempotent(e));
        CHECK(ideal_dimension(e) == 3);
        CHECK(ideal_dimension(e) + ideal_dimension(one - e) == h.order());
        // dim F_3 A_4 e = |G| lambda1(e) mod 3 in the least-residue sense.
        CHECK(ideal_dimension(e) % 3 == order_times_lambda1(e) % 3);
    }
    CHECK_THROWS_AS(AlgebraElement::from_digits(f, h, "11220102000x"), ParseError);
    CHECK_THROWS_AS(AlgebraElement::from_digits(f, h, "11220102000"), DomainError);
    CHECK_THROWS_AS(AlgebraElement::from_digits(f, h, "312201020000"), DomainError);
    CHECK_THROWS_AS(AlgebraElement::from_digits(fixtures::gf25(), fixtures::sl23(), "1"), DomainError);
}

TEST_CASE("SL(2,3) idempotents over GF(25)") {
    auto f = fixtures::gf25();
    auto h = fixtures::sl23();
    const auto es = fixtures::sl23_idempotents(f, h);
    const u64 lambdas[] = {4, 3, 2};
    const u64 products[] = {96, 72, 48};
    const u64 dims[] = {1, 2, 3};
    for (std::size_t i = 0; i < 3; ++i) {
        CAPTURE(i);
        CHECK(is_idempotent(es[i]));
        CHECK(lambda1(es[i]).code() == lambdas[i]);
        CHECK(24 * lambdas[i] == products[i]);
        CHECK(order_times_lambda1(es[i]) == products[i] % 5);
        CHECK(ideal_dimension(es[i]) == dims[i]);
        CHECK(dimension_formula_D_code(order_times_lambda1(es[i]), 5) == dims[i]);
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j) CHECK(alg_mul(es[i], es[j]).is_zero());
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            CHECK(ideal_dimension(es[i] + es[j]) == ideal_dimension(es[i]) + ideal_dimension(es[j]));
        }
    }

    std::vector<std::size_t> all(24);
    std::iota(all.begin(), all.end(), std::size_t{0});
    CHECK(hat_idempotent(h, all, f) == es[0]);

    const auto comm = commutator_subgroup(h);
    const auto hat = hat_idempotent(h, comm.subgroup, f);
    CHECK(is_idempotent(hat));
    CHECK(convolution_oracle(hat, hat) == hat);
    const auto rest = AlgebraElement::one(f, h) - hat;
    CHECK(ideal_dimension(rest) == 21);
    // e2 and e3 live in the non-commutative part.
    CHECK(alg_mul(es[1], hat).is_zero());
    CHECK(alg_mul(es[2], hat).is_zero());

    const std::size_t trivial[] = {h.identity()};
    CHECK(hat_idempotent(h, trivial, f) == AlgebraElement::one(f, h));
    const std::size_t not_subgroup[] = {0, 1};
    CHECK_THROWS_AS(hat_idempotent(h, not_subgroup, f), DomainError);

    auto a4 = fixtures::a4();
    std::vector<std::size_t> a4_all(12);
    std::iota(a4_all.begin(), a4_all.end(), std::size_t{0});
    CHECK_THROWS_AS(hat_idempotent(a4, a4_all, fixtures::gf(3)), DomainError);
}

TEST_CASE("dimension function") {
    CHECK(dimension_formula_D(96, 5) == 1);
    CHECK(dimension_formula_D(48, 5) == 3);
    CHECK(dimension_formula_D(0, 5) == 5);
    CHECK(dimension_formula_D(-1, 5) == 4);
    CHECK_THROWS_AS(dimension_formula_D(3, 4), DomainError);
    CHECK_THROWS_AS(dimension_formula_D_code(7, 5), DomainError);
}

TEST_CASE("ring laws and the matrix convention") {
    auto gen = fixtures::rng(22);
    const std::vector<std::pair<FieldPtr, Group>> algebras = {
        {fixtures::gf25(), fixtures::sl23()}, {fixtures::gf(3), fixtures::a4()}, {fixtures::gf(2, 2), cyclic(5)}};
    for (const auto& [f, g] : algebras) {
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_element(f, g, gen), b = random_element(f, g, gen), c = random_element(f, g, gen);
            CHECK(alg_mul(a, b) == convolution_oracle(a, b));
            CHECK(alg_mul(alg_mul(a, b), c) == alg_mul(a, alg_mul(b, c)));
            CHECK(alg_mul(a, b + c) == alg_mul(a, b) + alg_mul(a, c));
            CHECK(alg_mul(a + b, c) == alg_mul(a, c) + alg_mul(b, c));
            // Row vectors: x -> x(ab) is v -> v M(a) M(b).
            const auto lhs = right_mul_matrix(alg_mul(a, b));
            const auto rhs = matrix_multiply(*f, right_mul_matrix(a), right_mul_matrix(b));
            CHECK(lhs.data == rhs.data);
        }
    }
}

TEST_CASE("compatibility checks") {
    auto a = AlgebraElement::one(fixtures::gf(2), cyclic(6));
    auto b = AlgebraElement::one(fixtures::gf(3), cyclic(6));
    auto c = AlgebraElement::one(fixtures::gf(2), cyclic(5));
    CHECK_THROWS_AS(a + b, MismatchError);
    CHECK_THROWS_AS(alg_mul(a, c), MismatchError);
    CHECK_THROWS_AS(AlgebraElement(fixtures::gf(2), cyclic(6), {1, 0}), DomainError);
    CHECK_THROWS_AS(AlgebraElement(fixtures::gf(2), cyclic(2), {1, 2}), DomainError);
}
