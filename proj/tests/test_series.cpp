#include <random>

#include <doctest.h>

#include <discjet/errors.hpp>
#include <discjet/series.hpp>

#include "helpers.hpp"

using namespace discjet;
using namespace testing;

namespace
{

truncated_series random_series(std::mt19937_64 &rng, std::size_t n, int c, const ring_ptr &r, int min_degree)
{
    truncated_series s(n, c, r);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto &j : monomials_in_range(n, min_degree, c)) {
        if (rng() % 3 == 0) {
            continue;
        }
        auto v = ring_element(r, rational(coef(rng)));
        if (r->generators() > 0 && rng() % 2) {
            v += ring_element::generator(r, rng() % r->generators()) * rational(coef(rng));
        }
        s.add_term(j, v);
    }
    return s;
}

series_tuple identity_tuple(std::size_t n, int c, const ring_ptr &r)
{
    series_tuple t;
    for (std::size_t k = 0; k < n; ++k) {
        t.push_back(truncated_series::variable(n, c, r, k));
    }
    return t;
}

} // namespace

TEST_CASE("series arithmetic examples")
{
    auto r = base_ring::rationals();
    auto t1 = truncated_series::variable(2, 2, r, 0), t2 = truncated_series::variable(2, 2, r, 1);
    CHECK(t1 * t2 == truncated_series::monomial(2, 2, multi_index{1, 1}, q(r, 1)));

    auto t = truncated_series::variable(1, 1, r, 0);
    CHECK((t * t).is_zero());

    // oracle: dense expansion then truncation
    dense_poly a{{1, 1}}, b{{1, -1, 1}};
    CHECK(series1(2, {1, 1}) * series1(2, {1, -1, 1}) == to_series((a * b).truncated(2), 2));
    CHECK(series1(2, {1, 1}) * series1(2, {1, -1, 1}) == series1(2, {1}));

    CHECK_THROWS_AS(series1(2, {1}) * series1(3, {1}), shape_mismatch);
}

TEST_CASE("series substitution examples")
{
    auto r = base_ring::rationals();
    auto f = series1(4, {0, 0, 1});
    auto g = series1(4, {0, 1, 1});
    std::vector<truncated_series> gs{g};
    CHECK(series_substitute(f, gs, 4) == series1(4, {0, 0, 1, 2, 1}));

    auto r2 = base_ring::nilpotent({2});
    auto e = eps(r2);
    auto shift = series1(r2, 2, {e, q(r2, 1)});
    std::vector<truncated_series> gshift{shift};
    CHECK(series_substitute(series1(r2, 2, {q(r2, 0), q(r2, 1)}), gshift, 2) == shift);

    // binomial oracle: (e + t)^3 = e^3 + 3e^2 t + 3e t^2 + t^3 with e^2 = 0
    auto cube = series1(r2, 3, {q(r2, 0), q(r2, 0), q(r2, 0), q(r2, 1)});
    ring_element binom[4] = {e.pow(3), e.pow(2) * rational(3), e * rational(3), q(r2, 1)};
    truncated_series expected(1, 2, r2);
    for (int i = 0; i <= 2; ++i) {
        expected.add_term(multi_index{i}, binom[i]);
    }
    CHECK(series_substitute(cube.truncate(3), gshift, 3) == expected);
    CHECK(expected == series1(r2, 2, {q(r2, 0), q(r2, 0), e * rational(3)}));

    // a unit constant term is not continuous
    std::vector<truncated_series> bad{series1(2, {1, 1})};
    CHECK_THROWS_AS(series_substitute(f, bad, 4), precondition_error);
    // working order below target
    CHECK_THROWS_AS(series_substitute(f, gs, 3), precondition_error);
}

TEST_CASE("series truncation")
{
    CHECK(series_truncate(series1(3, {0, 1, 1, 1}), 2) == series1(2, {0, 1, 1}));
    CHECK(series_truncate(series1(3, {}), 1).is_zero());
    auto r2 = base_ring::nilpotent({2});
    auto f = series1(r2, 4, {q(r2, 0), eps(r2), q(r2, 0), q(r2, 0), q(r2, 1)});
    CHECK(series_truncate(f, 3) == series1(r2, 3, {q(r2, 0), eps(r2)}));
    CHECK(series_truncate(f, 3).order() == 3);
}

TEST_CASE("m-order and derivative")
{
    auto r = base_ring::rationals();
    truncated_series s(2, 3, r);
    CHECK(!s.m_order());
    s.add_term(multi_index{1, 2}, q(r, 5));
    s.add_term(multi_index{2, 0}, q(r, 1));
    CHECK(s.m_order() == 2);
    CHECK(s.derivative(1) == truncated_series::monomial(2, 3, multi_index{1, 1}, q(r, 10)));
    CHECK(s.terms().front().first == multi_index{2, 0});
}

TEST_CASE("substitution properties")
{
    std::mt19937_64 rng(3);
    for (const auto &orders : {std::vector<int>{}, {2}, {3}, {2, 2}}) {
        auto r = base_ring::nilpotent(orders);
        for (std::size_t n = 1; n <= 3; ++n) {
            const int c = n == 3 ? 3 : 4;
            for (int trial = 0; trial < 8; ++trial) {
                auto f = random_series(rng, n, c, r, 0);
                series_tuple g, h;
                for (std::size_t k = 0; k < n; ++k) {
                    g.push_back(random_series(rng, n, c, r, 1));
                    h.push_back(random_series(rng, n, c, r, 1));
                }
                // identity
                CHECK(series_substitute(f, identity_tuple(n, c, r), c) == f);
                // associativity: f o (g o h) = (f o g) o h
                series_tuple gh;
                for (const auto &gk : g) {
                    gh.push_back(series_substitute(gk, h, c));
                }
                auto lhs = series_substitute(f, gh, c);
                auto rhs = series_substitute(series_substitute(f, g, c), h, c);
                CHECK(lhs == rhs);
                // m-order never drops
                auto fg = series_substitute(f, g, c);
                if (fg.m_order() && f.m_order()) {
                    CHECK(*fg.m_order() >= *f.m_order());
                }
                // truncation commutes with substitution
                const int cp = c - 1;
                series_tuple gt;
                for (const auto &gk : g) {
                    gt.push_back(gk.truncate(cp));
                }
                CHECK(fg.truncate(cp) == series_substitute(f.truncate(cp), gt, cp));
            }
        }
    }
}
