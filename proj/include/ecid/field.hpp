#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecid/numeric.hpp"

namespace ecid {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(p^degree) as residues of GF(p)[x] modulo a monic irreducible polynomial.
///
/// Elements are handled as integer codes: the residue c0 + c1 x + ... + c_{a-1} x^{a-1}
/// has code c0 + c1 p + ... + c_{a-1} p^{a-1}. Zero is code 0 and one is code 1, and the
/// prime subfield is exactly the codes below p. Fields with q <= kTableLimit keep dense
/// addition/multiplication tables; larger fields fall back to polynomial arithmetic.
class FiniteField {
public:
    static constexpr u64 kTableLimit = 1024;

    /// When `modulus` is omitted the lexicographically smallest monic irreducible polynomial
    /// of the given degree is chosen (coefficient lists compared constant term first).
    static FieldPtr make(u64 p, unsigned degree, std::optional<std::vector<u64>> modulus = std::nullopt);

    u64 characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    u64 order() const { return q_; }
    PrimePower prime_power() const { return {p_, degree_, q_}; }
    /// Constant term first, monic (last entry 1), length degree + 1.
    const std::vector<u64>& modulus() const { return modulus_; }
    bool tabulated() const { return !mul_table_.empty(); }

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 mul(u64 a, u64 b) const;
    /// Throws DomainError for a == 0.
    u64 inv(u64 a) const;
    u64 pow(u64 a, u64 e) const;

    /// Image of an integer in the prime subfield.
    u64 from_integer(i64 n) const;
    bool in_prime_subfield(u64 code) const { return code < p_; }

    std::vector<u64> coefficients(u64 code) const;
    /// Accepts up to `degree` coefficients (constant term first), each reduced mod p.
    u64 from_coefficients(std::span<const u64> coeffs) const;
    /// Human-readable form using `var` for the generator, e.g. "3g + 4".
    std::string format(u64 code, const std::string& var = "g") const;

    bool same_as(const FiniteField& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

    // Raw table access for enumeration kernels; only valid when tabulated().
    const std::vector<std::uint16_t>& add_table() const { return add_table_; }
    const std::vector<std::uint16_t>& mul_table() const { return mul_table_; }

private:
    FiniteField(u64 p, unsigned degree, std::vector<u64> modulus);
    u64 mul_poly(u64 a, u64 b) const;
    u64 add_poly(u64 a, u64 b) const;

    u64 p_;
    unsigned degree_;
    u64 q_;
    std::vector<u64> modulus_;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<u64> inv_table_;
};

/// Monic irreducibility over GF(p) (Rabin's test). `poly` is constant term first.
bool is_irreducible(const std::vector<u64>& poly, u64 p);

/// A value in a specific field. Arithmetic between different fields throws MismatchError.
class FieldElement {
public:
    FieldElement(FieldPtr field, u64 code);
    static FieldElement from_coefficients(FieldPtr field, std::span<const u64> coeffs);

    const FieldPtr& field() const { return field_; }
    u64 code() const { return code_; }
    std::vector<u64> coefficients() const { return field_->coefficients(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(u64 e) const;

    bool operator==(const FieldElement& o) const;
    std::string to_string() const { return field_->format(code_); }

private:
    void check_same(const FieldElement& o) const;

    FieldPtr field_;
    u64 code_;
};

/// Dense row-major matrix of field codes.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<u64> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    u64& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    u64 at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<const u64> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
    std::span<u64> row(std::size_t r) { return {data.data() + r * cols, cols}; }
};

/// Reduces `m` in place to reduced row-echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(const FiniteField& field, Matrix& m);
std::size_t matrix_rank(const FiniteField& field, Matrix m);
/// Throws DomainError on ragged input and MismatchError on mixed fields.
std::size_t matrix_rank(std::span<const std::vector<FieldElement>> rows);
Matrix matrix_multiply(const FiniteField& field, const Matrix& a, const Matrix& b);

}  // namespace ecid
