#ifndef DISCJET_MULTI_INDEX_HPP
#define DISCJET_MULTI_INDEX_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace discjet
{

// Exponent vector J = (j_1..j_n) of a monomial t^J in at most max_dim variables.
class multi_index
{
public:
    static constexpr std::size_t max_dim = 8;
    static constexpr int max_exponent = 255;

    multi_index() = default;
    explicit multi_index(std::size_t dim);
    multi_index(std::initializer_list<int> exponents);
    explicit multi_index(std::span<const int> exponents);

    static multi_index unit(std::size_t dim, std::size_t k);

    std::size_t dim() const noexcept { return dim_; }
    int operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, int e);

    // |J|
    int degree() const noexcept;
    bool is_zero() const noexcept { return degree() == 0; }

    multi_index operator+(const multi_index &other) const;
    // Requires every exponent of other <= the matching exponent here.
    multi_index operator-(const multi_index &other) const;
    bool divides(const multi_index &other) const noexcept;

    std::vector<int> exponents() const;
    std::string to_string() const;

    friend bool operator==(const multi_index &, const multi_index &) = default;

private:
    std::array<std::uint8_t, max_dim> exps_{};
    std::uint8_t dim_ = 0;
};

// Graded-lexicographic order: lower total degree first, ties broken so that
// t_1 precedes t_2 (larger leading exponent first).
bool graded_lex_less(const multi_index &a, const multi_index &b) noexcept;

struct graded_lex
{
    bool operator()(const multi_index &a, const multi_index &b) const noexcept { return graded_lex_less(a, b); }
};

// All J with lo <= |J| <= hi in dim variables, in graded-lex order.
std::vector<multi_index> monomials_in_range(std::size_t dim, int lo, int hi);

} // namespace discjet

#endif
