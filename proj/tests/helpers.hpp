#ifndef DISCJET_TESTS_HELPERS_HPP
#define DISCJET_TESTS_HELPERS_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include <discjet/base_ring.hpp>
#include <discjet/jet_group.hpp>
#include <discjet/series.hpp>

namespace testing
{

using namespace discjet;

inline ring_element q(const ring_ptr &r, long num, long den = 1)
{
    rational v(num, den);
    v.canonicalize();
    return ring_element(r, v);
}

// e_i in a nilpotent ring.
inline ring_element eps(const ring_ptr &r, std::size_t i = 0)
{
    return ring_element::generator(r, i);
}

// One-variable series sum coefs[i] t^i.
inline truncated_series series1(const ring_ptr &r, int order, std::initializer_list<ring_element> coefs)
{
    truncated_series s(1, order, r);
    int i = 0;
    for (const auto &c : coefs) {
        s.add_term(multi_index{i++}, c);
    }
    return s;
}

inline truncated_series series1(int order, std::initializer_list<long> coefs)
{
    auto r = base_ring::rationals();
    truncated_series s(1, order, r);
    int i = 0;
    for (long c : coefs) {
        s.add_term(multi_index{i++}, ring_element(r, c));
    }
    return s;
}

inline jet_automorphism jet1(truncated_series s)
{
    return jet_automorphism(series_tuple{std::move(s)});
}

// Dense univariate polynomials over Q, used as an independent oracle.
struct dense_poly
{
    std::vector<rational> c;

    rational at(std::size_t i) const { return i < c.size() ? c[i] : rational(0); }

    friend dense_poly operator*(const dense_poly &a, const dense_poly &b)
    {
        dense_poly r;
        if (a.c.empty() || b.c.empty()) {
            return r;
        }
        r.c.assign(a.c.size() + b.c.size() - 1, rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return r;
    }

    friend dense_poly operator+(const dense_poly &a, const dense_poly &b)
    {
        dense_poly r;
        r.c.assign(std::max(a.c.size(), b.c.size()), rational(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            r.c[i] = a.at(i) + b.at(i);
        }
        return r;
    }

    dense_poly truncated(std::size_t order) const
    {
        dense_poly r = *this;
        if (r.c.size() > order + 1) {
            r.c.resize(order + 1);
        }
        return r;
    }

    dense_poly derivative() const
    {
        dense_poly r;
        for (std::size_t i = 1; i < c.size(); ++i) {
            r.c.push_back(c[i] * static_cast<long>(i));
        }
        return r;
    }

    // f(g) with full expansion, no truncation.
    dense_poly compose(const dense_poly &g) const
    {
        dense_poly result, power{{rational(1)}};
        for (const auto &coef : c) {
            result = result + dense_poly{{coef}} * power;
            power = power * g;
        }
        return result;
    }
};

inline truncated_series to_series(const dense_poly &p, int order)
{
    auto r = base_ring::rationals();
    truncated_series s(1, order, r);
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        s.add_term(multi_index{static_cast<int>(i)}, ring_element(r, p.c[i]));
    }
    return s;
}

} // namespace testing

#endif
