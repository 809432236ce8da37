#ifndef DISCJET_SERIES_HPP
#define DISCJET_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <discjet/base_ring.hpp>
#include <discjet/multi_index.hpp>

namespace discjet
{

// Element of R[t_1..t_n]/m^{c+1}, m = (t_1..t_n).
//
// Sparse: terms are sorted by graded-lex multi-index, never zero, never of degree > c.
class truncated_series
{
public:
    using term = std::pair<multi_index, ring_element>;

    truncated_series(std::size_t dim, int order, ring_ptr ring);

    static truncated_series variable(std::size_t dim, int order, ring_ptr ring, std::size_t k);
    static truncated_series constant(std::size_t dim, int order, const ring_element &value);
    static truncated_series monomial(std::size_t dim, int order, const multi_index &j, const ring_element &coef);

    std::size_t dim() const noexcept { return dim_; }
    int order() const noexcept { return order_; }
    const ring_ptr &ring() const noexcept { return ring_; }
    const std::vector<term> &terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    ring_element coefficient(const multi_index &j) const;
    ring_element constant_term() const { return coefficient(multi_index(dim_)); }
    // min{|J| : coefficient nonzero}; nullopt for the zero series.
    std::optional<int> m_order() const;
    // Highest |J| carrying a nonzero coefficient; -1 for zero.
    int degree() const;

    // Adds coef * t^J (dropped if |J| > order).
    void add_term(const multi_index &j, const ring_element &coef);
    void set_coefficient(const multi_index &j, const ring_element &coef);

    // Drops terms of degree > c and sets the order to c.
    truncated_series truncate(int c) const;
    // Same terms viewed at a higher order (the zero lift).
    truncated_series lift(int c) const;
    // Terms of exactly degree d.
    truncated_series homogeneous_part(int d) const;
    truncated_series derivative(std::size_t k) const;

    truncated_series &operator+=(const truncated_series &other);
    truncated_series &operator-=(const truncated_series &other);
    friend truncated_series operator+(truncated_series a, const truncated_series &b) { return a += b; }
    friend truncated_series operator-(truncated_series a, const truncated_series &b) { return a -= b; }
    friend truncated_series operator*(const truncated_series &a, const truncated_series &b);
    truncated_series operator-() const;
    truncated_series scaled(const ring_element &c) const;
    truncated_series scaled(const rational &q) const;

    friend bool operator==(const truncated_series &a, const truncated_series &b);

    std::string to_string(const std::string &var = "t") const;

private:
    void check_shape(const truncated_series &other) const;

    std::size_t dim_;
    int order_;
    ring_ptr ring_;
    std::vector<term> terms_;
};

using series_tuple = std::vector<truncated_series>;

truncated_series series_add(const truncated_series &f, const truncated_series &g);
truncated_series series_sub(const truncated_series &f, const truncated_series &g);
truncated_series series_mul(const truncated_series &f, const truncated_series &g);
truncated_series series_truncate(const truncated_series &f, int c);

// f(g_1..g_n) with f read as an exact polynomial, products kept to work_order; the result
// is truncated to min(order f, order g_k). Every g_k must have a nilpotent constant term
// (otherwise the substitution is not continuous) and work_order must reach the result order.
truncated_series series_substitute(const truncated_series &f, std::span<const truncated_series> g, int work_order);

// Polynomial evaluation f(g) at the given order with no continuity requirement on g.
// Exact whenever f is a polynomial, which every stored series is.
truncated_series evaluate_at(const truncated_series &f, std::span<const truncated_series> g, int order);

// Substitutes each component of f into the same g, sharing the monomial powers of g.
series_tuple evaluate_tuple_at(std::span<const truncated_series> f, std::span<const truncated_series> g, int order);

} // namespace discjet

#endif
