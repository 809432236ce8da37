#include <doctest.h>

#include <discjet/errors.hpp>
#include <discjet/lie.hpp>
#include <discjet/random.hpp>

#include "helpers.hpp"

using namespace discjet;
using namespace testing;

namespace
{

derivation der1(truncated_series f)
{
    return derivation(series_tuple{std::move(f)});
}

truncated_series mono2(int c, int a, int b, long coef = 1)
{
    auto r = base_ring::rationals();
    return truncated_series::monomial(2, c, multi_index{a, b}, ring_element(r, coef));
}

// One-variable oracle: [f d/dt, g d/dt] = (f g' - g f') d/dt, expanded densely.
dense_poly bracket_oracle(const dense_poly &f, const dense_poly &g)
{
    auto lhs = f * g.derivative();
    auto rhs = g * f.derivative();
    dense_poly out = lhs;
    for (std::size_t i = 0; i < rhs.c.size(); ++i) {
        if (out.c.size() <= i) {
            out.c.push_back(rational(0));
        }
        out.c[i] -= rhs.c[i];
    }
    return out;
}

derivation random_derivation(random_source &rs, std::size_t n, int c, const ring_ptr &r, int min_degree)
{
    series_tuple f;
    for (std::size_t k = 0; k < n; ++k) {
        f.push_back(rs.series(n, c, r, min_degree));
    }
    return derivation(std::move(f));
}

} // namespace

TEST_CASE("applying derivations")
{
    auto d = der1(series1(4, {0, 0, 1}));
    CHECK(apply_derivation(d, series1(4, {0, 1})) == series1(4, {0, 0, 1}));
    CHECK(apply_derivation(d, series1(4, {0, 0, 1})) == series1(4, {0, 0, 0, 2}));
    // t2 d/dt1 applied to t1 t2
    auto r = base_ring::rationals();
    derivation e(series_tuple{mono2(3, 0, 1), truncated_series(2, 3, r)});
    CHECK(apply_derivation(e, mono2(3, 1, 1)) == mono2(3, 0, 2));
    CHECK_THROWS_AS(apply_derivation(d, series1(3, {0, 1})), shape_mismatch);
}

TEST_CASE("bracket examples")
{
    auto t2 = der1(series1(5, {0, 0, 1})), t3 = der1(series1(5, {0, 0, 0, 1}));
    CHECK(derivation_bracket(t2, t3) == der1(series1(5, {0, 0, 0, 0, 1})));
    CHECK(derivation_bracket(t2, t3).coefficient(0)
          == to_series(bracket_oracle(dense_poly{{0, 0, 1}}, dense_poly{{0, 0, 0, 1}}).truncated(5), 5));
    CHECK(derivation_bracket(t2, t2).is_zero());
    auto t1 = der1(series1(5, {0, 1}));
    CHECK(derivation_bracket(t1, t2) == t2);

    random_source rs(3);
    for (int trial = 0; trial < 20; ++trial) {
        dense_poly f, g;
        for (int i = 1; i <= 4; ++i) {
            f.c.push_back(rs.small_rational());
            g.c.push_back(rs.small_rational());
        }
        f.c.insert(f.c.begin(), rational(0));
        g.c.insert(g.c.begin(), rational(0));
        auto got = derivation_bracket(der1(to_series(f, 6)), der1(to_series(g, 6)));
        CHECK(got.coefficient(0) == to_series(bracket_oracle(f, g).truncated(6), 6));
    }
}

TEST_CASE("Jacobi identity and antisymmetry")
{
    random_source rs(5);
    for (const auto &orders : {std::vector<int>{}, {2}, {2, 3}}) {
        auto r = base_ring::nilpotent(orders);
        for (std::size_t n = 1; n <= 3; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                const int c = 4;
                auto a = random_derivation(rs, n, c, r, 1), b = random_derivation(rs, n, c, r, 1),
                     d = random_derivation(rs, n, c, r, 1);
                auto jacobi = derivation_bracket(a, derivation_bracket(b, d))
                              + derivation_bracket(b, derivation_bracket(d, a))
                              + derivation_bracket(d, derivation_bracket(a, b));
                CHECK(jacobi.is_zero());
                CHECK(derivation_bracket(a, b) + derivation_bracket(b, a) == derivation::zero(n, c, r));
            }
        }
    }
}

TEST_CASE("level tags")
{
    CHECK(der1(series1(3, {1})).m_order() == 0);
    CHECK(!der1(series1(3, {1})).in_lie_K());
    CHECK(der1(series1(3, {0, 1})).in_lie_K());
    CHECK(!der1(series1(3, {0, 1})).in_lie_K_u());
    CHECK(der1(series1(3, {0, 0, 1})).in_lie_K_u());
    CHECK(derivation::zero(2, 3, base_ring::rationals()).in_lie_K_u());
}

TEST_CASE("exp examples")
{
    auto r = base_ring::rationals();
    CHECK(exp_derivation(derivation::zero(2, 3, r)) == jet_identity(2, 3, r));
    // D^i(t) = i! t^{i+1} for D = t^2 d/dt
    CHECK(exp_derivation(der1(series1(4, {0, 0, 1}))) == jet1(series1(4, {0, 1, 1, 1, 1})));
    derivation d(series_tuple{mono2(3, 0, 2), truncated_series(2, 3, r)});
    auto e = exp_derivation(d);
    CHECK(e.component(0) == mono2(3, 1, 0) + mono2(3, 0, 2));
    CHECK(e.component(1) == mono2(3, 0, 1));
    CHECK_THROWS_AS(exp_derivation(der1(series1(3, {0, 1}))), precondition_error);
}

TEST_CASE("log examples and round trips")
{
    auto r = base_ring::rationals();
    CHECK(log_unipotent(jet_identity(2, 4, r)).is_zero());
    CHECK(log_unipotent(jet1(series1(4, {0, 1, 1, 1, 1}))) == der1(series1(4, {0, 0, 1})));
    CHECK_THROWS_AS(log_unipotent(jet1(series1(3, {0, 2}))), precondition_error);

    random_source rs(7);
    for (const auto &orders : {std::vector<int>{}, {3}, {2, 2}}) {
        auto ring = base_ring::nilpotent(orders);
        for (std::size_t n = 1; n <= 3; ++n) {
            const int c = n == 3 ? 3 : 5;
            for (int trial = 0; trial < 5; ++trial) {
                auto d = random_derivation(rs, n, c, ring, 2);
                auto u = exp_derivation(d);
                CHECK(jet_classify(u).in_K_u);
                CHECK(log_unipotent(u) == d);
                auto v = rs.k_u_element(n, c, ring);
                CHECK(exp_derivation(log_unipotent(v)) == v);
            }
        }
    }
}

TEST_CASE("adjoint action")
{
    auto r = base_ring::rationals();
    auto d = der1(series1(4, {0, 0, 1}));
    CHECK(adjoint(jet_identity(1, 4, r), d) == d);
    // conjugating by t -> 2t halves t^2 d/dt
    CHECK(adjoint(jet1(series1(4, {0, 2})), d) == d.scaled(rational(1, 2)));
    auto r2 = base_ring::nilpotent({2});
    CHECK_THROWS_AS(adjoint(jet1(series1(r2, 2, {eps(r2), q(r2, 1)})), derivation::zero(1, 2, r2)),
                    precondition_error);

    random_source rs(11);
    for (const auto &orders : {std::vector<int>{}, {2}, {2, 2}}) {
        auto ring = base_ring::nilpotent(orders);
        for (std::size_t n = 1; n <= 2; ++n) {
            const int c = 4;
            for (int trial = 0; trial < 5; ++trial) {
                auto k = rs.k_element(n, c, ring), k2 = rs.k_element(n, c, ring);
                auto a = random_derivation(rs, n, c, ring, 1), b = random_derivation(rs, n, c, ring, 1);
                CHECK(adjoint(k, derivation_bracket(a, b)) == derivation_bracket(adjoint(k, a), adjoint(k, b)));
                // action property
                CHECK(adjoint(jet_compose(k, k2), a) == adjoint(k, adjoint(k2, a)));
                auto u = random_derivation(rs, n, c, ring, 2);
                CHECK(exp_derivation(adjoint(k, u)) == jet_compose(k, jet_compose(exp_derivation(u), jet_invert(k))));
            }
        }
    }
}

TEST_CASE("scaling conjugation is the grading")
{
    auto r = base_ring::rationals();
    const int c = 5;
    for (int z : {2, 3, -1}) {
        series_tuple scale;
        for (std::size_t k = 0; k < 2; ++k) {
            scale.push_back(truncated_series::variable(2, c, r, k).scaled(rational(z)));
        }
        jet_automorphism zid(std::move(scale));
        for (const auto &j : monomials_in_range(2, 1, c)) {
            for (std::size_t k = 0; k < 2; ++k) {
                series_tuple f(2, truncated_series(2, c, r));
                f[k] = truncated_series::monomial(2, c, j, ring_element(r, 1L));
                derivation d(f);
                rational factor = 1;
                const int e = j.degree() - 1;
                for (int i = 0; i < e; ++i) {
                    factor /= z;
                }
                CHECK(adjoint(zid, d) == d.scaled(factor));
            }
        }
    }
}
