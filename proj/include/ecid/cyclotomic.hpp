#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecid/groups.hpp"
#include "ecid/numeric.hpp"

namespace ecid {

/// q-orbits S_g = {g^(q^j)} of an abelian group and the integers derived from them.
struct QOrbitData {
    Group group;
    PrimePower q;
    std::vector<u64> t;                          // t_g = ord of q modulo o(g)
    std::vector<std::vector<std::size_t>> orbits;  // ordered by smallest member
    std::vector<std::size_t> orbit_of;
    u64 l = 1;                                   // lcm of all t_g
    u64 exponent = 1;
    std::size_t w = 0;                           // smallest index with o(w) = exp(G)
    u64 t_w = 1;
    std::vector<u64> gen_class_sizes;            // phi(o(g)) = |C_g|
};

/// Requires G abelian and p not dividing |G|. Orbits are traced through the group's own
/// power map and cross-checked against the arithmetic t_g.
QOrbitData qorbits(const Group& g, PrimePower q);

/// Outcome of the splitting-field test for the degree-t extension of F_q.
struct SplittingVerdict {
    bool splits = false;
    bool t_w_divides_t = false;             // t_w | t
    bool exponent_divides_q_t_minus_1 = false;  // exp(G) | q^t - 1
    u64 t_w = 1;
    u64 exponent = 1;
    u64 q_t_mod_exponent = 0;
    std::string evidence;
};

/// Decided by exp(G) | q^t - 1 (computed as q^t mod exp(G)); the t_w | t condition is
/// evaluated alongside and must agree.
SplittingVerdict is_splitting_field(const Group& g, PrimePower q, u64 t);

/// exp(H/H') | q - 1; necessary for F_q to split H, not sufficient.
bool splitting_necessary_condition(const Group& h, PrimePower q);

/// exp(H) | q - 1, which guarantees that F_q splits H.
bool splitting_sufficient_condition(const Group& h, PrimePower q);

}  // namespace ecid
