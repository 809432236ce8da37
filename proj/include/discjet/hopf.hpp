#ifndef DISCJET_HOPF_HPP
#define DISCJET_HOPF_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <discjet/base_ring.hpp>
#include <discjet/jet_group.hpp>
#include <discjet/multi_index.hpp>

namespace discjet
{

// The coordinate a^k_J of K^(c): coefficient of t^J in component k (k is 0-based).
struct coord_variable
{
    std::size_t k;
    multi_index j;

    friend bool operator==(const coord_variable &, const coord_variable &) = default;
};

// k first, then graded-lex J.
bool coord_variable_less(const coord_variable &a, const coord_variable &b) noexcept;

// |J| - 1
int grading_degree(const coord_variable &v);

// Variable bookkeeping for the coordinate ring of K^(c) in n variables.
//
// Polynomials live in symbolic rings:
//  - ring(): the alphabet a^k_J, named "a2" (n = 1) or "a1_(2,1)",
//  - tensor_ring(): left alphabet b^k_J followed by right alphabet c^k_J,
//  - triple_ring(): three alphabets x, y, z, for coassociativity.
// Every alphabet lists the variables in coord_variable_less order.
class coordinate_space
{
public:
    // Shared instance per (n, c).
    static std::shared_ptr<const coordinate_space> get(std::size_t n, int c);

    std::size_t dim() const noexcept { return n_; }
    int order() const noexcept { return c_; }
    const std::vector<coord_variable> &variables() const noexcept { return variables_; }
    std::size_t size() const noexcept { return variables_.size(); }
    std::optional<std::size_t> index_of(const coord_variable &v) const;

    const ring_ptr &ring() const noexcept { return ring_; }
    const ring_ptr &tensor_ring() const noexcept { return tensor_ring_; }
    const ring_ptr &triple_ring() const noexcept { return triple_ring_; }

    ring_element variable(std::size_t index) const;
    // alphabet 0 = left (b), 1 = right (c)
    ring_element tensor_variable(int alphabet, std::size_t index) const;
    ring_element triple_variable(int alphabet, std::size_t index) const;

    // det(a^k_{e_k'}) in ring().
    const ring_element &det() const noexcept { return det_; }
    ring_element tensor_det(int alphabet) const;

    // The generic automorphism t_k -> sum_J a^k_J t^J with coefficients in the given
    // alphabet of a ring from this space (offset = alphabet * size()).
    series_tuple generic_point(const ring_ptr &ring, std::size_t offset = 0) const;

    // Degree of a monomial of ring(), tensor_ring() or triple_ring() for deg = |J| - 1.
    int monomial_degree(const ring_monomial &m) const;

private:
    coordinate_space(std::size_t n, int c);

    std::size_t n_;
    int c_;
    std::vector<coord_variable> variables_;
    std::vector<int> degrees_;
    ring_ptr ring_, tensor_ring_, triple_ring_;
    ring_element det_;
};

using coordinate_space_ptr = std::shared_ptr<const coordinate_space>;

/// Element p / det^d of the coordinate ring of K^(c).
///
/// Denominators are powers of det only. Equality cross-multiplies, so (p, d) and
/// (p * det, d + 1) are the same element.
class coord_element
{
public:
    coord_element(coordinate_space_ptr space, ring_element numerator, unsigned det_power = 0);

    static coord_element constant(coordinate_space_ptr space, const rational &value);
    static coord_element variable(coordinate_space_ptr space, const coord_variable &v);

    const coordinate_space_ptr &space() const noexcept { return space_; }
    const ring_element &numerator() const noexcept { return numerator_; }
    unsigned det_power() const noexcept { return det_power_; }

    coord_element &operator+=(const coord_element &other);
    coord_element &operator-=(const coord_element &other);
    friend coord_element operator+(coord_element a, const coord_element &b) { return a += b; }
    friend coord_element operator-(coord_element a, const coord_element &b) { return a -= b; }
    friend coord_element operator*(const coord_element &a, const coord_element &b);

    friend bool operator==(const coord_element &a, const coord_element &b);

    // "(p) / det^d" or just "p".
    std::string to_string() const;

private:
    coordinate_space_ptr space_;
    ring_element numerator_;
    unsigned det_power_;
};

// Element p / (det_b^d_b det_c^d_c) of A (x) A.
class tensor_element
{
public:
    tensor_element(coordinate_space_ptr space, ring_element numerator, unsigned det_left = 0, unsigned det_right = 0);

    const coordinate_space_ptr &space() const noexcept { return space_; }
    const ring_element &numerator() const noexcept { return numerator_; }
    unsigned det_left() const noexcept { return det_left_; }
    unsigned det_right() const noexcept { return det_right_; }

    friend bool operator==(const tensor_element &a, const tensor_element &b);

    std::string to_string() const;

private:
    coordinate_space_ptr space_;
    ring_element numerator_;
    unsigned det_left_, det_right_;
};

template <typename V>
using coord_table = std::vector<std::pair<coord_variable, V>>;

// Delta(a^k_J) = coefficient of t^J in component k of generic_b o generic_c. Memoized.
const coord_table<tensor_element> &coproduct(std::size_t n, int c);
const tensor_element &coproduct_of(std::size_t n, int c, const coord_variable &v);

// eps(a^k_{e_k'}) = delta_kk', eps(a^k_J) = 0 for |J| > 1.
coord_table<rational> counit(std::size_t n, int c);

// S(a^k_J) = coefficient of t^J in component k of the generic inverse. Memoized.
const coord_table<coord_element> &antipode(std::size_t n, int c);

// The generic inverse t -> k^{-1}(t) with coefficients in Q[a^k_J, delta], delta standing
// for det^{-1}; the ring lists the a-alphabet of coordinate_space::get(n, c) followed by
// "delta". Memoized.
const series_tuple &generic_inverse(std::size_t n, int c);
// Rewrites p(a, delta) as q / det^d with q free of delta (d = highest power of delta in p).
coord_element coord_from_delta(const coordinate_space_ptr &space, const ring_element &p);

bool is_homogeneous(const coord_element &x, int degree);
bool is_homogeneous(const tensor_element &x, int degree);

// Sets a^k_{e_k'} = delta_kk' (in both alphabets for tensors); the chart of K_u.
coord_element specialize_unipotent(const coord_element &x);
tensor_element specialize_unipotent(const tensor_element &x);

// Value at a point of K^(c)(R) of matching n and c.
ring_element evaluate(const coord_element &x, const jet_automorphism &point);
ring_element evaluate(const tensor_element &x, const jet_automorphism &left, const jet_automorphism &right);

// Hopf laws for one generator, checked as exact polynomial identities.
bool coassociativity_holds(std::size_t n, int c, const coord_variable &v);
bool counit_law_holds(std::size_t n, int c, const coord_variable &v);
// Both m o (S (x) id) o Delta and m o (id (x) S) o Delta.
bool antipode_law_holds(std::size_t n, int c, const coord_variable &v);

} // namespace discjet

#endif
