#ifndef DISCJET_LIE_HPP
#define DISCJET_LIE_HPP

#include <cstddef>
#include <string>

#include <discjet/jet_group.hpp>
#include <discjet/series.hpp>

namespace discjet
{

/// Truncated vector field D = sum_k f_k d/dt_k on R[t_1..t_n]/m^{c+1}.
///
/// m-order of the coefficients places D in the Lie algebras
///  - >= 1: Lie K (vanishes at the origin),
///  - >= 2: Lie K_u (no linear part).
class derivation
{
public:
    explicit derivation(series_tuple coefficients);

    static derivation zero(std::size_t n, int c, ring_ptr ring);

    std::size_t dim() const noexcept { return coefficients_.size(); }
    int order() const noexcept { return coefficients_.front().order(); }
    const ring_ptr &ring() const noexcept { return coefficients_.front().ring(); }
    const series_tuple &coefficients() const noexcept { return coefficients_; }
    const truncated_series &coefficient(std::size_t k) const { return coefficients_.at(k); }

    bool is_zero() const;
    // Minimum m-order over the coefficients; c + 1 for the zero derivation.
    int m_order() const;
    bool in_lie_K() const { return m_order() >= 1; }
    bool in_lie_K_u() const { return m_order() >= 2; }

    derivation &operator+=(const derivation &other);
    derivation &operator-=(const derivation &other);
    friend derivation operator+(derivation a, const derivation &b) { return a += b; }
    friend derivation operator-(derivation a, const derivation &b) { return a -= b; }
    derivation scaled(const ring_element &c) const;
    derivation scaled(const rational &q) const;

    friend bool operator==(const derivation &, const derivation &) = default;

    std::string to_string() const;

private:
    series_tuple coefficients_;
};

// sum_k f_k * df/dt_k, truncated to order c.
truncated_series apply_derivation(const derivation &d, const truncated_series &f);

// [D, E]_k = D(E_k) - E(D_k).
derivation derivation_bracket(const derivation &d, const derivation &e);

// Component k is sum_i D^i(t_k) / i!; requires m-order >= 2 so the sum stops at i = c.
jet_automorphism exp_derivation(const derivation &d);

// Inverse of exp_derivation on K_u, solved one degree at a time.
derivation log_unipotent(const jet_automorphism &u);

// (Ad_k D)(t_j) = D(k_j) o k^{-1}.
derivation adjoint(const jet_automorphism &k, const derivation &d);

} // namespace discjet

#endif
