#include <doctest.h>

#include <discjet/errors.hpp>
#include <discjet/hopf.hpp>
#include <discjet/random.hpp>

#include "helpers.hpp"

using namespace discjet;
using namespace testing;

namespace
{

coord_variable var1(int degree)
{
    return {0, multi_index{degree}};
}

// b_d or c_d in the n = 1 tensor ring
ring_element tv(const coordinate_space &s, int alphabet, int degree)
{
    return s.tensor_variable(alphabet, static_cast<std::size_t>(degree - 1));
}

// Random point of K^(c)(Q) with integer coordinates in [-10, 10].
jet_automorphism integer_point(random_source &rs, std::size_t n, int c)
{
    auto r = base_ring::rationals();
    while (true) {
        series_tuple comps(n, truncated_series(n, c, r));
        for (std::size_t k = 0; k < n; ++k) {
            for (const auto &j : monomials_in_range(n, 1, c)) {
                comps[k].add_term(j, ring_element(r, static_cast<long>(rs.uniform(-10, 10))));
            }
        }
        if (!determinant(linear_part_of_tuple(comps)).is_zero()) {
            return jet_automorphism(std::move(comps));
        }
    }
}

} // namespace

TEST_CASE("coordinate space layout")
{
    auto s = coordinate_space::get(2, 2);
    CHECK(s->size() == 10);
    CHECK(s->variables().front() == coord_variable{0, multi_index{1, 0}});
    CHECK(s->variables()[5] == coord_variable{1, multi_index{1, 0}});
    CHECK(s->ring()->names()[2] == "a1_(2,0)");
    CHECK(coordinate_space::get(1, 3)->ring()->names()[2] == "a3");
    CHECK(coordinate_space::get(2, 2) == s);
    CHECK(!s->index_of({0, multi_index{3, 0}}));
}

TEST_CASE("coproduct in one variable")
{
    auto s = coordinate_space::get(1, 4);
    auto b = [&](int d) { return tv(*s, 0, d); };
    auto c = [&](int d) { return tv(*s, 1, d); };
    CHECK(coproduct_of(1, 4, var1(1)).numerator() == b(1) * c(1));
    CHECK(coproduct_of(1, 4, var1(2)).numerator() == b(2) * c(1) * c(1) + b(1) * c(2));

    auto u2 = specialize_unipotent(coproduct_of(1, 4, var1(2))).numerator();
    auto u3 = specialize_unipotent(coproduct_of(1, 4, var1(3))).numerator();
    auto u4 = specialize_unipotent(coproduct_of(1, 4, var1(4))).numerator();
    CHECK(u2 == b(2) + c(2));
    CHECK(u3 == b(3) + b(2) * c(2) * rational(2) + c(3));
    CHECK(u4 == b(4) + b(3) * c(2) * rational(3) + b(2) * c(2) * c(2) + b(2) * c(3) * rational(2) + c(4));
}

TEST_CASE("coproduct evaluates to composition")
{
    random_source rs(31);
    for (auto [n, c] : {std::pair<std::size_t, int>{1, 4}, {2, 3}, {3, 2}}) {
        for (const auto &orders : {std::vector<int>{}, {2}, {2, 3}}) {
            auto r = base_ring::nilpotent(orders);
            for (int trial = 0; trial < 3; ++trial) {
                auto rho = rs.k_element(n, c, r), sigma = rs.k_element(n, c, r);
                auto composite = jet_compose(rho, sigma);
                for (const auto &[v, delta] : coproduct(n, c)) {
                    CHECK(evaluate(delta, rho, sigma) == composite.coefficient(v.k, v.j));
                }
            }
        }
    }
}

TEST_CASE("counit")
{
    auto e1 = counit(1, 3);
    CHECK(e1[0].second == 1);
    CHECK(e1[1].second == 0);
    auto e2 = counit(2, 2);
    for (const auto &[v, value] : e2) {
        if (v.j == multi_index{0, 1} && v.k == 0) {
            CHECK(value == 0);
        }
        if (v.j == multi_index{0, 1} && v.k == 1) {
            CHECK(value == 1);
        }
    }
}

TEST_CASE("antipode")
{
    auto s = coordinate_space::get(1, 4);
    const auto &table = antipode(1, 4);
    auto a = [&](int d) { return s->variable(static_cast<std::size_t>(d - 1)); };
    CHECK(table[0].second == coord_element(s, ring_element(s->ring(), 1L), 1));
    CHECK(table[1].second == coord_element(s, -a(2), 3));
    // same element written with a larger det power
    CHECK(table[1].second == coord_element(s, -a(2) * a(1), 4));

    auto point = jet1(series1(4, {0, 1, 1}));
    auto inv = jet_invert(point);
    for (int d = 2; d <= 4; ++d) {
        CHECK(evaluate(table[static_cast<std::size_t>(d - 1)].second, point) == inv.coefficient(0, multi_index{d}));
    }
    CHECK(evaluate(table[1].second, point) == q(base_ring::rationals(), -1));
    CHECK(evaluate(table[2].second, point) == q(base_ring::rationals(), 2));
    CHECK(evaluate(table[3].second, point) == q(base_ring::rationals(), -5));

    random_source rs(37);
    for (auto [n, c] : {std::pair<std::size_t, int>{1, 5}, {2, 3}, {3, 2}}) {
        auto r = base_ring::nilpotent({3});
        for (int trial = 0; trial < 3; ++trial) {
            auto g = rs.k_element(n, c, r);
            auto gi = jet_invert(g);
            for (const auto &[v, sv] : antipode(n, c)) {
                CHECK(evaluate(sv, g) == gi.coefficient(v.k, v.j));
            }
        }
    }
}

TEST_CASE("grading")
{
    CHECK(grading_degree(var1(2)) == 1);
    CHECK(grading_degree({1, multi_index{1, 0}}) == 0);
    CHECK(grading_degree({0, multi_index{2, 1}}) == 2);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (int c = 1; c <= 5; ++c) {
            for (const auto &[v, delta] : coproduct(n, c)) {
                CHECK(is_homogeneous(delta, grading_degree(v)));
            }
            for (const auto &[v, sv] : antipode(n, c)) {
                CHECK(is_homogeneous(sv, grading_degree(v)));
            }
        }
    }
    auto s = coordinate_space::get(1, 3);
    CHECK(!is_homogeneous(coord_element(s, s->variable(1) + s->variable(2)), 1));
}

TEST_CASE("Hopf laws")
{
    for (auto [n, c] : {std::pair<std::size_t, int>{1, 4}, {2, 3}}) {
        for (const auto &v : coordinate_space::get(n, c)->variables()) {
            CHECK(coassociativity_holds(n, c, v));
            CHECK(counit_law_holds(n, c, v));
            CHECK(antipode_law_holds(n, c, v));
        }
    }
}

TEST_CASE("coordinate arithmetic and separation")
{
    auto s = coordinate_space::get(2, 2);
    auto x = coord_element::variable(s, {0, multi_index{0, 2}});
    auto y = coord_element::variable(s, {1, multi_index{1, 0}});
    auto det_inv = coord_element(s, ring_element(s->ring(), 1L), 1);
    CHECK(coord_element(s, s->det()) * det_inv == coord_element::constant(s, 1));
    CHECK((x + y) - y == x);
    CHECK_THROWS_AS(coord_element::variable(s, {0, multi_index{2, 1}}), precondition_error);

    random_source rs(41);
    std::vector<coord_element> pool{x, y, x * y, x * det_inv, y * det_inv, x * x, coord_element::constant(s, 1),
                                    det_inv};
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
            bool separated = false;
            for (int attempt = 0; attempt < 5 && !separated; ++attempt) {
                auto p = integer_point(rs, 2, 2);
                separated = !(evaluate(pool[i], p) == evaluate(pool[j], p));
            }
            CHECK(separated == (i != j));
        }
    }
}
