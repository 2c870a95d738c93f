#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecid/numeric.hpp"

namespace ecid {

/// A permutation of {1..m} in one-line notation: image[i-1] is the image of i.
using Permutation = std::vector<std::uint32_t>;

/// Parses cycle notation such as "(1247)(3685)" or "(1,2,10)(3,4)"; "()" or "1" is the identity.
/// Points without a comma separator are read as single digits.
Permutation parse_cycles(const std::string& text, std::size_t degree);
std::string format_cycles(const Permutation& perm);

/// A finite group, stored extensionally.
///
/// Element indices run over 0..n-1 and the index order is part of the group's identity.
/// Groups built from abelian invariants multiply arithmetically in mixed-radix
/// coordinates instead of storing an n x n Cayley table. Copies are cheap (shared
/// immutable state).
class Group {
public:
    static constexpr std::size_t kDefaultOrderCap = 10000;
    static constexpr std::size_t kExhaustiveAssociativityLimit = 256;
    static constexpr std::uint64_t kAssociativitySeed = 0x5eed'ec1dULL;

    /// The trivial group.
    Group();

    /// Direct product C_{n_1} x ... x C_{n_k}; index = mixed radix with the last factor fastest.
    static Group abelian(std::span<const u64> invariants, std::size_t cap = kDefaultOrderCap);
    /// Validates the Latin-square property, a two-sided identity and associativity.
    static Group from_table(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels = {});
    /// Closure by breadth-first search from the identity; products compose functionally,
    /// (a*b)(i) = a(b(i)). Labels are cycle notation.
    static Group from_permutations(std::span<const Permutation> generators, std::size_t cap = kDefaultOrderCap);
    /// Same closure, then elements reordered to follow `elements` exactly (which must list the group).
    static Group from_permutations_ordered(std::span<const Permutation> generators,
                                           std::span<const Permutation> elements,
                                           std::size_t cap = kDefaultOrderCap);

    std::size_t order() const;
    std::size_t identity() const;
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;
    std::size_t power(std::size_t a, u64 e) const;
    u64 element_order(std::size_t a) const;
    const std::string& label(std::size_t a) const;
    const std::vector<std::string>& labels() const;
    bool is_abelian() const;
    /// Present only for groups built by abelian().
    const std::vector<u64>* abelian_invariants() const;

    struct Impl;  // opaque

private:
    explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

struct ExponentInfo {
    u64 exponent = 1;
    std::size_t witness = 0;  // smallest index with element_order == exponent
};

ExponentInfo exponent(const Group& g);

struct CommutatorData {
    std::vector<std::size_t> subgroup;      // sorted indices of H'
    Group quotient;                         // cosets ordered by representative
    std::vector<std::size_t> coset_of;      // element index -> quotient index
    std::vector<std::size_t> representative;  // quotient index -> smallest member
};

CommutatorData commutator_subgroup(const Group& g);

/// Closure of a generating set (indices) under multiplication; sorted.
std::vector<std::size_t> generated_subgroup(const Group& g, std::span<const std::size_t> generators);
bool is_subgroup(const Group& g, std::span<const std::size_t> subset);

std::size_t conjugacy_class_count(const Group& g);

/// True iff p divides |G| exactly once.
bool sylow_is_cp(const Group& g, u64 p);

}  // namespace ecid
