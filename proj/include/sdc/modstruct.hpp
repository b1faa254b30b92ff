#ifndef SDC_MODSTRUCT_HPP
#define SDC_MODSTRUCT_HPP

#include <cstddef>
#include <vector>

#include "sdc/code.hpp"
#include "sdc/perm.hpp"

namespace sdc {

// A code together with an automorphism of 2-power order acting on it.
// Construction verifies both properties, so holding a code_action is
// proof that the pair is valid.
struct code_action {
    linear_code code;
    permutation perm;
    std::size_t order;  // 2^a
};

code_action make_action(const linear_code& c, const permutation& p);

// r_i = rank of (g-1)^i restricted to the code, i = 0..q. Always starts
// at k and ends at 0, since (g-1)^q vanishes in characteristic 2.
std::vector<std::size_t> rank_profile(const code_action& a);

// Multiplicities of the indecomposables V_i = R/(X^i) for R = F2[X]/(X^q)
// in the code, extracted from the rank profile by second differences:
// m_i = r_{i-1} - 2 r_i + r_{i+1}.
struct cyclic_decomposition {
    std::size_t q;                       // group order
    std::vector<std::size_t> mult;       // mult[i] = multiplicity of V_{i+1}, i = 0..q-1
    std::vector<std::size_t> ranks;      // r_0..r_q
};

cyclic_decomposition decompose(const code_action& a);

// Free module: the decomposition is V_q^(k/q) and nothing else.
bool is_free(const code_action& a);

// Same question decided through the order-2 subgroup: the action of
// g^(q/2) is free iff its fixed code has dimension k/2. Agreement with
// is_free is the restriction criterion for cyclic 2-groups.
bool is_free_by_restriction(const code_action& a);

// dim / group_order when integral; otherwise the reduced fraction that
// witnesses the impossibility of a free module of that rank.
struct free_rank_result {
    bool integral;
    std::size_t rank;  // valid when integral
    std::size_t num, den;  // reduced fraction dim/group_order
};

free_rank_result free_rank_obstruction(std::size_t dim, std::size_t group_order);

// Subcode annihilated by g-1; the socle of the module when q = 2.
linear_code fixed_code(const code_action& a);

// Relabeling tau with tau p tau^-1 = (1,2)(3,4)...(n-1,n), for a
// fixed-point-free involution p. Orbits are taken sorted by their
// smallest element, so the result is deterministic.
permutation normalize_involution(const permutation& p);

bool is_standard_involution(const permutation& p);

// pi: projection of the fixed code of the standard involution onto one
// coordinate per orbit, (c_1,c_1,...,c_m,c_m) -> (c_1,...,c_m).
linear_code pi_map(const code_action& a);

// Phi: orbit-sum map on the whole code,
// (c_1,...,c_n) -> (c_1+c_2, ..., c_{n-1}+c_n).
linear_code phi_map(const code_action& a);

// The duality chain Phi(C) <= pi(C(g)) = Phi(C)^perp for a self-dual code
// with a fixed-point-free involution (normalized internally), plus the
// halved distance bound d(pi(C(g))) >= ceil(d(C)/2).
struct duality_chain_report {
    bool phi_subset_pi;
    bool pi_equals_phi_dual;
    std::size_t dim_pi, dim_phi;
    bool distance_bound_ok;
    std::size_t d_code, d_pi;
};

duality_chain_report duality_chain_check(const code_action& a);

}  // namespace sdc

#endif
