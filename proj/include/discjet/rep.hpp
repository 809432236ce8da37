#ifndef DISCJET_REP_HPP
#define DISCJET_REP_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <discjet/hopf.hpp>
#include <discjet/jet_group.hpp>

namespace discjet
{

using coord_matrix = std::vector<std::vector<coord_element>>;

/// Finite-dimensional representation of K^(c) given by its matrix coefficients.
///
/// Entry (i, j) is the i-th coordinate of the image of basis vector j, so evaluation
/// at a group element is an ordinary matrix and products compose left to right.
/// Weights are those read off the scaling family (empty until computed or supplied);
/// they follow the basis order.
class representation
{
public:
    representation(std::size_t n, int c, coord_matrix entries, std::vector<int> weights = {});

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t dim() const noexcept { return space_->dim(); }
    int order() const noexcept { return space_->order(); }
    const coordinate_space_ptr &space() const noexcept { return space_; }
    const coord_matrix &entries() const noexcept { return entries_; }
    const coord_element &entry(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
    const std::vector<int> &weights() const noexcept { return weights_; }

private:
    coordinate_space_ptr space_;
    coord_matrix entries_;
    std::vector<int> weights_;
};

// Action on m / m^{c+1} with basis t^J, 0 < |J| <= c, graded-lex: R(rho) f = f o rho^{-1}.
representation rep_jet_standard(std::size_t n, int c);
// The 1-dimensional representation det(a^k_{e_k'}).
representation rep_det(std::size_t n, int c);
representation rep_trivial(std::size_t n, int c);

// Substitutes g's coefficients for the coordinates; g must lie in K^(c)(R).
ring_matrix rep_eval(const representation &rep, const jet_automorphism &g);

struct homomorphism_report
{
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_entry;
};

// Delta(R_ij) = sum_k R_ik (x) R_kj for every entry, as exact tensor identities.
homomorphism_report rep_check_homomorphism(const representation &rep);

// d_i with R(z id)_ii = z^{d_i}; throws precondition_error if the scaling family is not
// diagonal with pure powers of z.
std::vector<int> rep_weights(const representation &rep);

// max |J| over the coordinates occurring in the entries (a det denominator counts as the
// linear coordinates); 0 for constant entries.
int factoring_order(const representation &rep);

struct extension_report
{
    // d_max - d_min + 1
    int alpha0 = 0;
    int factoring_order = 0;
    bool bound_holds = false;
};

// Reads the weights, checks that entry (i, j) is homogeneous of degree d_j - d_i and
// compares the factoring order with alpha0. Throws precondition_error on a homogeneity
// violation.
extension_report extension_order(const representation &rep);

// The same entries read as functions on K^(c') for c' >= c.
representation rep_lift(const representation &rep, int c_prime);

} // namespace discjet

#endif
