#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecid/algebra.hpp"
#include "ecid/classify.hpp"
#include "ecid/rational.hpp"

namespace ecid {

inline constexpr u64 kDefaultDistanceBudget = 100'000'000;

/// Minimum Hamming weight of the row space of `basis` (linearly independent rows).
///
/// Codewords are enumerated once per one-dimensional subspace (leading coefficient 1), so
/// (q^k - 1)/(q - 1) codewords are evaluated; that count is checked against `budget`
/// (BudgetExceeded). Work is split over leading-coefficient strata across `threads`
/// workers (0 = hardware concurrency); the result does not depend on the thread count.
u64 min_distance_of_basis(const FiniteField& field, const Matrix& basis, u64 budget = kDefaultDistanceBudget,
                          unsigned threads = 0);

/// Number of codewords min_distance_of_basis evaluates for dimension k.
u64 projective_codeword_count(u64 q, std::size_t k);

/// d(F_q G e) for e != 0, using a reduced row-echelon basis of right_mul_matrix(e).
u64 min_distance_exact(const AlgebraElement& e, u64 budget = kDefaultDistanceBudget, unsigned threads = 0);

/// Reduced row-echelon basis of the left ideal F_q G e.
Matrix ideal_basis(const AlgebraElement& e);

struct Bound {
    Rational value;
    std::string cite;

    bool operator==(const Bound&) const = default;
};

/// prod over primes p_i | n of p_i / (p_i - 1) = n / phi(rad(n))-style quantity, exactly.
Rational prime_ratio_product(u64 n);

/// Lower bounds on d(F_q G e) for a primitive idempotent e of a semisimple abelian F_q G:
/// prod p_i/(p_i-1) <= |G|/t_w, and |G|/D(|G| lambda1(e)) when t_w <= p (equivalently some
/// t <= p with exp(G) | q^t - 1) or phi(exp(G)) <= p; with the totient condition also |G|/p.
std::vector<Bound> abelian_bounds(const Group& g, FieldPtr field, const AlgebraElement& e);

enum class Primitivity { Primitive, NotPrimitive, Unknown };
std::string to_string(Primitivity p);
Primitivity primitivity_from_string(const std::string& s);

struct PrimitivityVerdict {
    Primitivity verdict = Primitivity::Unknown;
    std::string reason;
};

/// Not primitive when d < |G| / t_w (G abelian, semisimple).
PrimitivityVerdict nonprimitivity_test_abelian(const Group& g, PrimePower q, u64 distance);

struct CongruenceSet {
    u64 r = 0;                        // least residue of |H| lambda1(e) mod p
    std::vector<u64> candidates;      // r + kp, k = 0..floor((|H| - (r+1))/p), zero dropped
    std::vector<Rational> distance_bounds;  // |H| / candidate
    bool consistent() const { return !candidates.empty(); }
};

/// Throws DomainError for e = 0 or e = 1.
CongruenceSet dimension_congruence_set(const AlgebraElement& e);

/// Not primitive when d < |H| / a, where a >= max(t_w, max n_j d_j).
/// Throws DomainError when a is below that maximum.
PrimitivityVerdict nonprimitivity_test_semisimple(const Group& h, PrimePower q, const WedderburnData& wd, u64 a,
                                                  u64 distance);

/// Over a splitting field: the admissible a = max n_j (t_w = 1).
u64 splitting_shortcut_a(const WedderburnData& wd);

struct EcidDimensionSum {
    u64 dimension = 0;                 // sum_{i not in J} r_i + |J| p
    std::vector<u64> residues;         // r_i
    Rational distance_bound;           // |H| / dimension
    std::optional<std::size_t> rank_dimension;  // rank oracle on the sum, when computed
};

/// Dimension of F_q H (e_1 + ... + e_m) for pairwise orthogonal primitive idempotents in an
/// algebra certified ECID by `certificate`. Throws DomainError on an orthogonality violation
/// and HypothesisRequired when the certificate does not certify ECID.
EcidDimensionSum ecid_dimension_sum(std::span<const AlgebraElement> parts, const ClassificationReport& certificate,
                                    bool cross_check = true);

/// p | |H|, algebra certified ECID: not primitive when d < |H| / p.
PrimitivityVerdict nonprimitivity_test_modular(const Group& h, PrimePower q, const ClassificationReport& certificate,
                                               u64 distance);

/// Every idempotent of F_q H, found by enumerating all q^|H| elements.
struct IdempotentCensus {
    u64 candidates = 0;
    std::vector<AlgebraElement> idempotents;  // enumeration order (lexicographic coefficient vectors)
    std::vector<bool> primitive;
    std::vector<std::size_t> dimension;

    std::size_t primitive_count() const;
    std::optional<std::size_t> find(const AlgebraElement& e) const;
    /// Indices of pairwise orthogonal primitive idempotents summing to idempotents[index].
    std::vector<std::size_t> primitive_decomposition(std::size_t index) const;
};

/// Throws BudgetExceeded when q^|H| > budget.
IdempotentCensus idempotent_search(const Group& h, FieldPtr field, u64 budget = kDefaultSearchBudget,
                                   unsigned threads = 0);

enum class DimMethod { RankOracle, DFormula, CongruenceSet };
std::string to_string(DimMethod m);
DimMethod dim_method_from_string(const std::string& s);

struct CodeReport {
    std::vector<u64> idempotent;  // coefficient codes in group order
    std::size_t dim = 0;
    DimMethod dim_method = DimMethod::RankOracle;
    std::optional<u64> dim_formula;  // D(|G| lambda1(e)), when e is not 0 or 1
    std::optional<std::vector<u64>> congruence_set;
    std::optional<u64> distance;     // exact, when within budget
    std::vector<Bound> bounds;
    Primitivity primitivity = Primitivity::Unknown;
    std::string primitivity_reason;

    bool operator==(const CodeReport&) const = default;
};

struct CodeOptions {
    u64 budget = kDefaultDistanceBudget;
    unsigned threads = 0;
    /// ECID / minimal-ECD certificate of the ambient algebra, if known.
    const ClassificationReport* certificate = nullptr;
    /// The caller knows e is primitive (enables the abelian bounds).
    bool primitive_asserted = false;
};

/// Full analysis of F_q G e: rank dimension, D-formula and congruence cross-checks, exact
/// distance within budget (otherwise bounds only) and whichever primitivity tests apply.
CodeReport analyze_code(const AlgebraElement& e, const CodeOptions& options = {});

}  // namespace ecid
