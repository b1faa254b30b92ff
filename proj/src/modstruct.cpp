#include "sdc/modstruct.hpp"

#include <numeric>
#include <stdexcept>

namespace sdc {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

// images of the generator rows under (g-1): row -> g(row) + row
std::vector<bit_vector> apply_g_minus_one(const permutation& g,
                                          const std::vector<bit_vector>& rows) {
    std::vector<bit_vector> out;
    out.reserve(rows.size());
    for (const bit_vector& r : rows) out.push_back(g.apply(r) ^ r);
    return out;
}

}  // namespace

code_action make_action(const linear_code& c, const permutation& p) {
    if (p.size() != c.n())
        throw std::invalid_argument("make_action: permutation degree differs from code length");
    std::size_t q = p.order();
    if (!is_power_of_two(q))
        throw std::invalid_argument("make_action: permutation order " + std::to_string(q) +
                                    " is not a power of two");
    for (std::size_t i = 0; i < c.k(); ++i)
        if (!c.contains(p.apply(c.generator().row(i))))
            throw std::invalid_argument("make_action: permutation does not stabilize the code");
    return {c, p, q};
}

std::vector<std::size_t> rank_profile(const code_action& a) {
    std::vector<std::size_t> r;
    r.push_back(a.code.k());
    std::vector<bit_vector> rows = a.code.generator().row_data();
    for (std::size_t i = 1; i <= a.order; ++i) {
        rows = apply_g_minus_one(a.perm, rows);
        r.push_back(rows.empty() ? 0 : rank(bit_matrix::from_rows(rows)));
    }
    return r;
}

cyclic_decomposition decompose(const code_action& a) {
    std::vector<std::size_t> r = rank_profile(a);
    std::size_t q = a.order;
    cyclic_decomposition d;
    d.q = q;
    d.ranks = r;
    d.mult.resize(q, 0);
    for (std::size_t i = 1; i <= q; ++i) {
        long next = (i + 1 <= q) ? long(r[i + 1]) : 0;
        long m = long(r[i - 1]) + next - 2 * long(r[i]);
        // the rank profile of a nilpotent map is convex
        if (m < 0) throw std::logic_error("decompose: rank profile is not convex");
        d.mult[i - 1] = std::size_t(m);
    }
    std::size_t total = 0;
    for (std::size_t i = 1; i <= q; ++i) total += i * d.mult[i - 1];
    if (total != a.code.k())
        throw std::logic_error("decompose: multiplicities do not account for the dimension");
    return d;
}

bool is_free(const code_action& a) {
    cyclic_decomposition d = decompose(a);
    std::size_t q = d.q, k = a.code.k();
    if (k % q != 0) return false;
    for (std::size_t i = 0; i + 1 < q; ++i)
        if (d.mult[i] != 0) return false;
    return d.mult[q - 1] == k / q;
}

bool is_free_by_restriction(const code_action& a) {
    std::size_t q = a.order, k = a.code.k();
    if (q == 1) return true;  // F2 itself is the free module of rank 1
    permutation h = a.perm;
    for (std::size_t pow = 2; pow < q; pow *= 2) h = h * h;  // h = g^(q/2)
    code_action invol = make_action(a.code, h);
    if (k % 2 != 0) return false;
    return fixed_code(invol).k() == k / 2;
}

free_rank_result free_rank_obstruction(std::size_t dim, std::size_t group_order) {
    if (dim == 0 || group_order == 0)
        throw std::invalid_argument("free_rank_obstruction: inputs must be positive");
    std::size_t g = std::gcd(dim, group_order);
    free_rank_result r;
    r.num = dim / g;
    r.den = group_order / g;
    r.integral = (r.den == 1);
    r.rank = r.integral ? r.num : 0;
    return r;
}

linear_code fixed_code(const code_action& a) {
    std::size_t k = a.code.k();
    if (k == 0) return linear_code::zero(a.code.n());
    // kernel of the coefficient map x -> sum x_j (g-1)(b_j)
    std::vector<bit_vector> images = apply_g_minus_one(a.perm, a.code.generator().row_data());
    bit_matrix coeff_system = bit_matrix::from_rows(images).transposed();  // n x k
    bit_matrix coeffs = kernel(coeff_system);  // rows = coefficient vectors of length k
    if (coeffs.rows() == 0) return linear_code::zero(a.code.n());
    std::vector<bit_vector> rows;
    for (std::size_t i = 0; i < coeffs.rows(); ++i) {
        bit_vector v(a.code.n());
        for (std::size_t j : coeffs.row(i).support()) v ^= a.code.generator().row(j);
        rows.push_back(std::move(v));
    }
    return linear_code::from_generators(rows);
}

bool is_standard_involution(const permutation& p) {
    if (p.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < p.size(); i += 2)
        if (p(i) != i + 1 || p(i + 1) != i) return false;
    return true;
}

permutation normalize_involution(const permutation& p) {
    std::size_t n = p.size();
    if (n % 2 != 0) throw std::invalid_argument("normalize_involution: odd degree");
    std::vector<std::uint32_t> tau(n);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = p(i);
        if (j == i) throw std::invalid_argument("normalize_involution: fixed point at " +
                                                std::to_string(i + 1));
        if (p(j) != i) throw std::invalid_argument("normalize_involution: order is not 2");
        if (j < i) continue;  // orbit already seen from its minimum
        tau[i] = std::uint32_t(2 * t);
        tau[j] = std::uint32_t(2 * t + 1);
        ++t;
    }
    return permutation::from_images(std::move(tau));
}

namespace {

void require_standard(const code_action& a, const char* op) {
    if (!is_standard_involution(a.perm))
        throw std::invalid_argument(std::string(op) +
                                    ": involution is not in standard form (1,2)(3,4)...");
}

bit_vector project_pairs_first(const bit_vector& v) {
    bit_vector r(v.size() / 2);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (v[2 * i]) r.set(i, true);
    return r;
}

bit_vector pair_sums(const bit_vector& v) {
    bit_vector r(v.size() / 2);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (v[2 * i] != v[2 * i + 1]) r.set(i, true);
    return r;
}

}  // namespace

linear_code pi_map(const code_action& a) {
    require_standard(a, "pi_map");
    linear_code fc = fixed_code(a);
    if (fc.k() == 0) return linear_code::zero(a.code.n() / 2);
    std::vector<bit_vector> rows;
    for (std::size_t i = 0; i < fc.k(); ++i)
        rows.push_back(project_pairs_first(fc.generator().row(i)));
    return linear_code::from_generators(rows);
}

linear_code phi_map(const code_action& a) {
    require_standard(a, "phi_map");
    if (a.code.k() == 0) return linear_code::zero(a.code.n() / 2);
    std::vector<bit_vector> rows;
    for (std::size_t i = 0; i < a.code.k(); ++i)
        rows.push_back(pair_sums(a.code.generator().row(i)));
    linear_code img = linear_code::from_generators(rows);
    return img.k() == 0 ? linear_code::zero(a.code.n() / 2) : img;
}

duality_chain_report duality_chain_check(const code_action& a) {
    if (!is_self_dual(a.code))
        throw std::invalid_argument("duality_chain_check: code is not self-dual");
    code_action act = a;
    if (!is_standard_involution(act.perm)) {
        permutation tau = normalize_involution(act.perm);  // also checks fpf order 2
        std::vector<bit_vector> rows;
        for (std::size_t i = 0; i < act.code.k(); ++i)
            rows.push_back(tau.apply(act.code.generator().row(i)));
        act = make_action(linear_code::from_generators(rows),
                          tau * act.perm * tau.inverse());
    }

    linear_code pi = pi_map(act);
    linear_code phi = phi_map(act);

    duality_chain_report rep;
    rep.dim_pi = pi.k();
    rep.dim_phi = phi.k();
    rep.phi_subset_pi = true;
    for (std::size_t i = 0; i < phi.k(); ++i)
        if (!pi.contains(phi.generator().row(i))) rep.phi_subset_pi = false;
    rep.pi_equals_phi_dual = (pi == dual(phi));
    rep.d_code = min_distance(act.code);
    rep.d_pi = min_distance(pi);
    rep.distance_bound_ok = rep.d_pi >= (rep.d_code + 1) / 2;
    return rep;
}

}  // namespace sdc
