#ifndef DISCJET_BASE_RING_HPP
#define DISCJET_BASE_RING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <discjet/rational.hpp>

namespace discjet
{

// Descriptor of a coefficient ring.
//
// Two families are supported, never mixed in one ring:
//  - nilpotent: Q[e_1..e_m]/(e_i^{N_i}), the test rings of the group functors (m = 0 is Q);
//  - symbolic: Q[x_1..x_m] with free commuting generators, used for generic points
//    (formal coefficients r_J, s_J, coordinate functions a^k_J).
class base_ring
{
public:
    static std::shared_ptr<const base_ring> rationals();
    static std::shared_ptr<const base_ring> nilpotent(std::vector<int> orders);
    static std::shared_ptr<const base_ring> symbolic(std::vector<std::string> names);

    std::size_t generators() const noexcept { return symbolic_ ? names_.size() : orders_.size(); }
    bool is_symbolic() const noexcept { return symbolic_; }
    std::span<const int> orders() const noexcept { return orders_; }
    std::span<const std::string> names() const noexcept { return names_; }

    // Smallest nu with Nil(R)^nu = 0, i.e. 1 + sum(N_i - 1). Throws for symbolic rings.
    int nilpotency_index() const;

    // Printable name of generator i ("e1", "e2", ... for nilpotent rings).
    std::string generator_name(std::size_t i) const;

    friend bool operator==(const base_ring &, const base_ring &) = default;

private:
    base_ring() = default;

    std::vector<int> orders_;
    std::vector<std::string> names_;
    bool symbolic_ = false;
};

using ring_ptr = std::shared_ptr<const base_ring>;

bool same_ring(const ring_ptr &a, const ring_ptr &b) noexcept;

// Exponents of the ring generators.
using ring_monomial = std::vector<std::uint16_t>;

bool ring_monomial_less(const ring_monomial &a, const ring_monomial &b) noexcept;

// Element of a base ring: sparse map from generator exponents to rationals, sorted in
// graded-lex order, without zero coefficients and (for nilpotent rings) with every
// exponent below its N_i.
class ring_element
{
public:
    struct term
    {
        ring_monomial exponents;
        rational coef;
    };

    explicit ring_element(ring_ptr ring);
    ring_element(ring_ptr ring, const rational &value);
    ring_element(ring_ptr ring, long value) : ring_element(std::move(ring), rational(value)) {}

    // Generator i of the ring (e_i, or the i-th symbol).
    static ring_element generator(ring_ptr ring, std::size_t i);
    static ring_element monomial(ring_ptr ring, ring_monomial exponents, const rational &coef);
    // Builds from arbitrary (possibly unsorted, repeated, zero) terms.
    static ring_element from_terms(ring_ptr ring, std::vector<term> terms);

    const ring_ptr &ring() const noexcept { return ring_; }
    const std::vector<term> &terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    // Coefficient of the empty monomial: the image in R_red = Q for nilpotent rings.
    rational rational_part() const;
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    // Nilpotent rings: iff rational_part() == 0. Symbolic rings: iff zero.
    bool is_nilpotent() const noexcept;
    // Nilpotent rings: iff rational_part() != 0. Symbolic rings: iff a nonzero constant.
    bool is_unit() const noexcept;

    ring_element &operator+=(const ring_element &other);
    ring_element &operator-=(const ring_element &other);
    ring_element &operator*=(const ring_element &other);
    ring_element &operator*=(const rational &q);

    friend ring_element operator+(ring_element a, const ring_element &b) { return a += b; }
    friend ring_element operator-(ring_element a, const ring_element &b) { return a -= b; }
    friend ring_element operator*(const ring_element &a, const ring_element &b);
    friend ring_element operator*(ring_element a, const rational &q) { return a *= q; }
    friend ring_element operator*(const rational &q, ring_element a) { return a *= q; }
    ring_element operator-() const;

    // Throws precondition_error("non-unit ...") when !is_unit().
    ring_element inverse() const;
    ring_element pow(unsigned e) const;

    friend bool operator==(const ring_element &a, const ring_element &b);

    std::string to_string() const;

private:
    void check_same_ring(const ring_element &other) const;

    ring_ptr ring_;
    std::vector<term> terms_;
};

ring_element ring_add(const ring_element &a, const ring_element &b);
ring_element ring_sub(const ring_element &a, const ring_element &b);
ring_element ring_mul(const ring_element &a, const ring_element &b);
ring_element ring_invert(const ring_element &a);

// Evaluates a polynomial (an element of a symbolic ring) by substituting values[i]
// for generator i. T needs +, * and construction of constants through make_constant.
template <typename T, typename MakeConstant>
T evaluate_polynomial(const ring_element &p, std::span<const T> values, MakeConstant make_constant)
{
    T result = make_constant(rational(0));
    // powers[i][e] = values[i]^e, filled lazily
    std::vector<std::vector<T>> powers(values.size());
    for (const auto &t : p.terms()) {
        T acc = make_constant(t.coef);
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            const unsigned e = t.exponents[i];
            if (e == 0) {
                continue;
            }
            auto &pw = powers[i];
            if (pw.empty()) {
                pw.push_back(make_constant(rational(1)));
            }
            while (pw.size() <= e) {
                pw.push_back(pw.back() * values[i]);
            }
            acc = acc * pw[e];
        }
        result = result + acc;
    }
    return result;
}

// Square matrices over a base ring.
using ring_matrix = std::vector<std::vector<ring_element>>;

ring_element determinant(const ring_matrix &m);
ring_matrix adjugate(const ring_matrix &m);
// adj(m) * det(m)^{-1}; throws precondition_error when det is not a unit.
ring_matrix matrix_inverse(const ring_matrix &m);
ring_matrix matrix_product(const ring_matrix &a, const ring_matrix &b);
ring_matrix identity_matrix(const ring_ptr &ring, std::size_t n);

} // namespace discjet

#endif
