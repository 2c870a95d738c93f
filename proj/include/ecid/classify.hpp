#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecid/field.hpp"
#include "ecid/groups.hpp"
#include "ecid/numeric.hpp"

namespace ecid {

enum class Verdict { MinimalEcd, Ecid, NotEcid, Undecided };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// One evaluated criterion. `holds` is the truth value of the criterion's hypothesis;
/// `decisive` marks the rule that fixed the verdict.
struct RuleFiring {
    std::string id;
    std::string statement;
    std::string inputs;
    bool holds = false;
    bool decisive = false;

    bool operator==(const RuleFiring&) const = default;
};

enum class WedderburnSource { UserSupplied, ArithmeticSolver, AbelianOrbits };

std::string to_string(WedderburnSource s);
WedderburnSource wedderburn_source_from_string(const std::string& s);

/// F_q H = (F_1 + ... + F_r) + (M_{n_1}(F'_1) + ... + M_{n_s}(F'_s)).
struct WedderburnData {
    u64 commutative_count = 0;                       // r
    std::vector<u64> commutative_degrees;            // [F_i : F_q], filled for abelian-orbit data
    std::vector<std::pair<u64, u64>> noncommutative;  // (n_j >= 2, d_j = [F_j : F_q] >= 1)
    WedderburnSource source = WedderburnSource::UserSupplied;

    /// sum n_j^2 d_j, the dimension of the non-commutative part.
    u64 gamma() const;
    u64 max_n_times_d() const;
    u64 max_n() const;
    /// Throws DomainError when some n_j < 2 or d_j < 1.
    void validate() const;

    bool operator==(const WedderburnData&) const = default;
};

/// Summary of an exhaustive idempotent census attached to a modular classification.
struct ModularCensusSummary {
    u64 candidates = 0;
    std::size_t idempotents = 0;
    std::size_t primitive = 0;
    std::vector<std::pair<std::size_t, std::size_t>> primitive_dimension_counts;  // (dim, count)
    bool every_primitive_has_dim_p = false;
    bool every_principal_indecomposable_ecd = false;

    bool operator==(const ModularCensusSummary&) const = default;
};

struct ClassificationReport {
    Verdict verdict = Verdict::Undecided;
    u64 p = 0;
    u64 q = 0;
    u64 group_order = 0;
    bool semisimple = true;
    std::vector<RuleFiring> rules;

    std::optional<u64> t_w;
    std::optional<u64> phi_exponent;  // phi(exp(G)), G abelian or H/H'
    std::optional<u64> abelianization_order;
    std::optional<u64> gamma;
    std::optional<u64> b0;
    std::optional<u64> floor_sqrt_gamma;
    std::optional<u64> s;
    std::optional<u64> ceil_sqrt_gamma_over_s;
    bool splitting_asserted = false;
    bool splitting_certified = false;
    std::optional<WedderburnData> wedderburn;
    std::optional<ModularCensusSummary> census;

    /// True for minimal-ECD and ECID verdicts.
    bool certifies_ecid() const { return verdict == Verdict::MinimalEcd || verdict == Verdict::Ecid; }
    bool operator==(const ClassificationReport&) const = default;
};

/// F_q G with G abelian and p not dividing |G|: minimal ECD iff t_w <= p.
ClassificationReport classify_abelian_semisimple(const Group& g, PrimePower q);

/// Largest dimension of a minimal ideal of F_q G (G abelian, semisimple): t_w.
u64 max_minimal_ideal_dim(const Group& g, PrimePower q);

/// Wedderburn data of a commutative semisimple F_q G read off the q-orbits.
WedderburnData abelian_wedderburn(const Group& g, PrimePower q);

/// Arithmetic description of a non-abelian group, enough to run the classification rules
/// without a Cayley table (e.g. for groups too large to build).
struct NonabelianInvariants {
    u64 order = 0;
    u64 abelianization_order = 0;        // [H : H']
    std::optional<u64> t_w;              // of H/H' over F_q
    std::optional<u64> phi_exponent;     // phi(exp(H/H'))
    std::optional<u64> class_count;      // number of conjugacy classes of H
};

struct SplittingStatus {
    bool asserted = false;   // caller vouches that F_q splits H
    bool certified = false;  // proved internally (exp(H) | q - 1)
    bool any() const { return asserted || certified; }
};

ClassificationReport classify_nonabelian_arithmetic(const NonabelianInvariants& inv, PrimePower q,
                                                    const std::optional<WedderburnData>& wd,
                                                    SplittingStatus splitting);

/// F_q H with H non-abelian and p not dividing |H|. Uses supplied Wedderburn data when
/// present; otherwise derives it over a splitting field (certified via exp(H) | q - 1 or
/// asserted) from the class count and the sum-of-squares solver, and falls back to the
/// sufficient arithmetic tests.
ClassificationReport classify_nonabelian_semisimple(const Group& h, PrimePower q,
                                                    const std::optional<WedderburnData>& wd = std::nullopt,
                                                    bool assert_splitting = false);

/// Dispatches on abelian / non-abelian; semisimple only.
ClassificationReport classify_semisimple(const Group& h, PrimePower q,
                                         const std::optional<WedderburnData>& wd = std::nullopt,
                                         bool assert_splitting = false);

/// max over f = 1..floor(gamma/4) of floor(sqrt(gamma/f)) * f. Throws for gamma < 4.
u64 b0(u64 gamma);

/// All nondecreasing s-tuples of integers >= 2 whose squares sum to gamma.
std::vector<std::vector<u64>> wedderburn_solver(u64 gamma, u64 s);

/// p | |H|: true iff the Sylow p-subgroups are cyclic of order p. False rules out ECID.
bool modular_necessary_condition(const Group& h, PrimePower q);

inline constexpr u64 kDefaultSearchBudget = 100'000'000;

/// p | |H|: ECID iff every primitive idempotent generates a p-dimensional ideal, decided by
/// enumerating all q^|H| elements. Throws BudgetExceeded when q^|H| > budget.
ClassificationReport classify_modular_exhaustive(const Group& h, FieldPtr field, u64 budget = kDefaultSearchBudget);

}  // namespace ecid
