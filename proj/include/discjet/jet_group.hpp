#ifndef DISCJET_JET_GROUP_HPP
#define DISCJET_JET_GROUP_HPP

#include <cstddef>
#include <vector>

#include <discjet/base_ring.hpp>
#include <discjet/series.hpp>

namespace discjet
{

/// A point of G^(c)(R): the order-c jet of a continuous automorphism
/// t_k -> rho_k(t) of R[[t_1..t_n]].
///
/// The coefficient of t^J in component k is r^k_J. Construction enforces
///  - every constant term r^k_0 is nilpotent in R,
///  - the linear part (r^k_{e_k'}) has a unit determinant.
/// Elements with all constant terms zero form K^(c)(R).
///
/// Products are formed from zero lifts: each stored jet is read as the polynomial
/// automorphism with exactly its terms. For elements of K this is the group law of
/// K^(c). With nilpotent translations the level-c product depends on the terms of the
/// left operand up to degree c + nu - 1 (see working_order), so exact G-arithmetic
/// has to feed left operands at that order.
class jet_automorphism
{
public:
    explicit jet_automorphism(series_tuple components);

    static jet_automorphism identity(std::size_t n, int c, ring_ptr ring);

    std::size_t dim() const noexcept { return components_.size(); }
    int order() const noexcept { return components_.front().order(); }
    const ring_ptr &ring() const noexcept { return components_.front().ring(); }
    const series_tuple &components() const noexcept { return components_; }
    const truncated_series &component(std::size_t k) const { return components_.at(k); }

    ring_element coefficient(std::size_t k, const multi_index &j) const { return component(k).coefficient(j); }
    ring_element constant_term(std::size_t k) const { return component(k).constant_term(); }
    // Row k, column k' holds r^k_{e_k'}.
    ring_matrix linear_part() const;

    friend bool operator==(const jet_automorphism &, const jet_automorphism &) = default;

    std::string to_string() const;

private:
    series_tuple components_;
};

// c + nu - 1: the order to which a left operand must be known for its level-c product
// with a translated right operand to be exact (terms of degree d reach degree <= c only
// through d - c nilpotent constant factors).
int working_order(int c, const base_ring &ring);

jet_automorphism jet_identity(std::size_t n, int c, ring_ptr ring);

// (rho o sigma)(t_k) = rho_k(sigma(t)): sigma is applied first.
jet_automorphism jet_compose(const jet_automorphism &rho, const jet_automorphism &sigma);

// rho o sigma truncated to c <= order(sigma), reading rho as the exact polynomial it
// stores. This is the exact product in G^(c) once rho is known to working_order(c).
jet_automorphism jet_compose_truncated(const jet_automorphism &rho, const jet_automorphism &sigma, int c);

// Two-sided inverse. Splits off the translation, inverts the origin-preserving part
// degree by degree to order c + nu - 1, then precomposes with the opposite translation.
jet_automorphism jet_invert(const jet_automorphism &g);

jet_automorphism jet_truncate(const jet_automorphism &g, int c);
// Zero lift to a higher order.
jet_automorphism jet_lift(const jet_automorphism &g, int c);

struct jet_flags
{
    bool in_G = false;
    bool in_K = false;
    bool in_K_u = false;
    // Largest c' <= c with the truncation to c' equal to the identity; -1 if none.
    int identity_level = -1;

    bool in_N(int c_prime) const noexcept { return in_G && c_prime <= identity_level; }
};

jet_flags jet_classify(const jet_automorphism &g);
// Same for raw component tuples, which need not satisfy the G invariants.
jet_flags jet_classify(const series_tuple &components);

// g = tau_a o k with tau_a(t) = t + a and k in K.
struct translation_split
{
    std::vector<ring_element> translation;
    jet_automorphism origin_preserving;
};

translation_split split_translation(const jet_automorphism &g);
jet_automorphism jet_translation(std::size_t n, int c, const std::vector<ring_element> &a);

// k = A o u, A linear, u in K_u.
struct linear_split
{
    jet_automorphism linear;
    jet_automorphism unipotent;
};

linear_split split_linear_unipotent(const jet_automorphism &k);
jet_automorphism jet_linear(const ring_matrix &a, int c);

bool jets_c_equivalent(const jet_automorphism &g, const jet_automorphism &h, int c_prime);

// Tuple-level kernels, also used for generic (symbolic) points where the jet
// invariants cannot be checked.

// outer(inner(t)) computed to the given order; outer read as exact polynomials.
series_tuple compose_tuples(const series_tuple &outer, const series_tuple &inner, int order);
// Row k, column k' holds the t_k' coefficient of component k.
ring_matrix linear_part_of_tuple(const series_tuple &components);
// Components t_i -> sum_j a_ij t_j.
series_tuple linear_tuple(const ring_matrix &a, int order);
// Inverse of u = t + (terms of degree >= 2), solved degree by degree: v = t - h(v).
// The linear part of u is assumed, not checked, to be the identity.
series_tuple invert_unipotent_tuple(const series_tuple &u, int order);

} // namespace discjet

#endif
