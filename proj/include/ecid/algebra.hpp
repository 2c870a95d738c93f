#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ecid/field.hpp"
#include "ecid/groups.hpp"

namespace ecid {

/// An element sum_g lambda_g g of F_q G, coefficients indexed by group-element index.
class AlgebraElement {
public:
    AlgebraElement(FieldPtr field, Group group, std::vector<u64> coeffs);

    static AlgebraElement zero(FieldPtr field, Group group);
    static AlgebraElement one(FieldPtr field, Group group);
    static AlgebraElement basis(FieldPtr field, Group group, std::size_t element);
    /// Prime fields only: one digit per group element, e.g. "112201020000".
    static AlgebraElement from_digits(FieldPtr field, Group group, const std::string& digits);

    const FieldPtr& field() const { return field_; }
    const Group& group() const { return group_; }
    std::span<const u64> codes() const { return coeffs_; }
    u64 code(std::size_t g) const { return coeffs_[g]; }
    FieldElement coeff(std::size_t g) const { return {field_, coeffs_[g]}; }
    std::size_t weight() const;
    bool is_zero() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(u64 scalar) const;
    bool operator==(const AlgebraElement& o) const;

    std::string to_string() const;

private:
    void check_compatible(const AlgebraElement& o) const;

    FieldPtr field_;
    Group group_;
    std::vector<u64> coeffs_;
};

/// (ab)_k = sum over i*j = k of a_i b_j.
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
bool is_idempotent(const AlgebraElement& a);
/// Coefficient at the identity.
FieldElement lambda1(const AlgebraElement& a);

/// Row g holds the coefficients of g*e, so the row space is the left ideal F_q G e and,
/// with row vectors, x -> x e is v -> v M. Hence M(ab) = M(a) M(b).
Matrix right_mul_matrix(const AlgebraElement& e);
/// dim F_q G e, the rank of right_mul_matrix(e).
std::size_t ideal_dimension(const AlgebraElement& e);

/// r if r != 0, p if r == 0, where r is the least non-negative residue of x mod p.
u64 dimension_formula_D(i64 x, u64 p);
/// Same, for an element of the prime subfield given by its code.
u64 dimension_formula_D_code(u64 code, u64 p);

/// (1/|S|) sum_{h in S} h for a subgroup S; throws when p | |S| or S is not a subgroup.
AlgebraElement hat_idempotent(const Group& g, std::span<const std::size_t> subgroup, FieldPtr field);

/// |G| * lambda1(e) as an element of F_q; lies in the prime subfield when e is idempotent.
u64 order_times_lambda1(const AlgebraElement& e);

}  // namespace ecid
