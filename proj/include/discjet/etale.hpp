#ifndef DISCJET_ETALE_HPP
#define DISCJET_ETALE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <discjet/base_ring.hpp>
#include <discjet/jet_group.hpp>
#include <discjet/series.hpp>

namespace discjet
{

/// Polynomial map R^n -> R^n stored exactly.
///
/// Each component is kept as a truncated_series whose order is the map's degree
/// (at least 1), so no term is ever dropped.
class poly_map
{
public:
    explicit poly_map(series_tuple components);

    static poly_map identity(std::size_t n, ring_ptr ring);
    // The jet's stored terms read as a polynomial map.
    static poly_map from_jet(const jet_automorphism &g);

    std::size_t dim() const noexcept { return components_.size(); }
    const ring_ptr &ring() const noexcept { return components_.front().ring(); }
    const series_tuple &components() const noexcept { return components_; }
    // Highest total degree of a nonzero term; 0 for constant maps.
    int degree() const;

    std::vector<ring_element> operator()(const std::vector<ring_element> &point) const;
    // Row k, column k' holds d f_k / d t_k' at the point.
    ring_matrix jacobian_at(const std::vector<ring_element> &point) const;

    friend bool operator==(const poly_map &a, const poly_map &b);

    std::string to_string() const;

private:
    series_tuple components_;
};

// f(g(t)) expanded exactly.
poly_map poly_map_compose_exact(const poly_map &f, const poly_map &g);

// Components of f(w + t) truncated to order c.
series_tuple jet_at(const poly_map &f, const std::vector<ring_element> &w, int c);

/// Split chart form of a common etale neighbourhood: legs phi and psi from the chart
/// to the two families, with section w.
///
/// A valid roof has phi(w), psi(w) nilpotent (the sections agree on the reduced base)
/// and unit Jacobians at w.
struct roof_chart
{
    poly_map phi;
    poly_map psi;
    std::vector<ring_element> w;
};

// Throws precondition_error naming the violated condition.
void check_roof(const roof_chart &roof);

// omega = psi^ o (phi^)^{-1} in G^(c)(R), computed at order working_order(c) and truncated.
jet_automorphism roof_jet(const roof_chart &roof, int c);

roof_chart roof_mirror(const roof_chart &roof);

// Both legs precomposed with g; requires g(w') = w exactly and a unit Jacobian of g at w'.
roof_chart roof_restrict(const roof_chart &roof, const poly_map &g, const std::vector<ring_element> &w_prime);

// phi(w) = psi(w) = 0 exactly.
bool roof_is_strict(const roof_chart &roof);

// Roof with phi = identity, psi = the zero lift of omega, w = 0; its jet is omega.
roof_chart roof_witness(const jet_automorphism &omega);

} // namespace discjet

#endif
