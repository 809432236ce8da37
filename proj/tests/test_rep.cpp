#include <doctest.h>

#include <discjet/errors.hpp>
#include <discjet/random.hpp>
#include <discjet/rep.hpp>

#include "helpers.hpp"

using namespace discjet;
using namespace testing;

namespace
{

ring_matrix rational_matrix(const ring_ptr &r, std::vector<std::vector<rational>> rows)
{
    ring_matrix m;
    for (auto &row : rows) {
        std::vector<ring_element> out;
        for (auto &x : row) {
            out.emplace_back(r, x);
        }
        m.push_back(std::move(out));
    }
    return m;
}

jet_automorphism scaling(std::size_t n, int c, const ring_ptr &r, const rational &z)
{
    series_tuple comps;
    for (std::size_t k = 0; k < n; ++k) {
        comps.push_back(truncated_series::variable(n, c, r, k).scaled(z));
    }
    return jet_automorphism(std::move(comps));
}

} // namespace

TEST_CASE("standard representation in one variable")
{
    auto rep = rep_jet_standard(1, 2);
    auto s = rep.space();
    auto a1 = s->variable(0), a2 = s->variable(1);
    auto one = ring_element(s->ring(), 1L);
    CHECK(rep.size() == 2);
    CHECK(rep.entry(0, 0) == coord_element(s, one, 1));
    CHECK(rep.entry(0, 1) == coord_element::constant(s, 0));
    CHECK(rep.entry(1, 0) == coord_element(s, -a2, 3));
    CHECK(rep.entry(1, 1) == coord_element(s, one, 2));
    CHECK(rep.weights() == std::vector<int>{-1, -2});

    auto qq = base_ring::rationals();
    CHECK(rep_eval(rep, jet1(series1(2, {0, 1, 1}))) == rational_matrix(qq, {{1, 0}, {-1, 1}}));
    CHECK(rep_eval(rep, jet1(series1(2, {0, 2}))) == rational_matrix(qq, {{rational(1, 2), 0}, {0, rational(1, 4)}}));
    CHECK(rep_eval(rep, jet_identity(1, 2, qq)) == identity_matrix(qq, 2));

    auto r1 = rep_jet_standard(1, 1);
    CHECK(r1.size() == 1);
    CHECK(r1.entry(0, 0) == coord_element(r1.space(), ring_element(r1.space()->ring(), 1L), 1));
    CHECK(r1.weights() == std::vector<int>{-1});

    auto r2 = base_ring::nilpotent({2});
    CHECK_THROWS_AS(rep_eval(rep, jet1(series1(r2, 2, {eps(r2), q(r2, 1)}))), precondition_error);
    CHECK_THROWS_AS(rep_eval(rep, jet1(series1(3, {0, 1}))), shape_mismatch);
}

TEST_CASE("standard representation of the linear group")
{
    auto rep = rep_jet_standard(2, 1);
    auto s = rep.space();
    ring_matrix lin(2, std::vector<ring_element>(2, ring_element(s->ring())));
    for (std::size_t i = 0; i < s->size(); ++i) {
        const auto &v = s->variables()[i];
        lin[v.k][v.j[0] == 1 ? 0 : 1] = s->variable(i);
    }
    auto adj = adjugate(lin);
    // entry (i, j) = coordinate i of the image of t_j, i.e. (A^{-1})_{ji}
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(rep.entry(i, j) == coord_element(s, adj[j][i], 1));
        }
    }
    CHECK(rep.weights() == std::vector<int>{-1, -1});
    CHECK(rep_check_homomorphism(rep).ok);
}

TEST_CASE("one-dimensional representations")
{
    auto d = rep_det(2, 2);
    CHECK(rep_check_homomorphism(d).ok);
    CHECK(rep_weights(d) == std::vector<int>{2});
    auto e = extension_order(d);
    CHECK(e.alpha0 == 1);
    CHECK(e.factoring_order == 1);
    CHECK(e.bound_holds);

    auto t = rep_trivial(1, 3);
    CHECK(rep_check_homomorphism(t).ok);
    CHECK(rep_weights(t) == std::vector<int>{0});
    auto et = extension_order(t);
    CHECK(et.alpha0 == 1);
    CHECK(et.factoring_order == 0);
    CHECK(rep_weights(rep_det(1, 2)) == std::vector<int>{1});
}

TEST_CASE("homomorphism checks")
{
    for (int c = 1; c <= 4; ++c) {
        CHECK(rep_check_homomorphism(rep_jet_standard(1, c)).ok);
    }
    for (int c = 1; c <= 2; ++c) {
        CHECK(rep_check_homomorphism(rep_jet_standard(2, c)).ok);
    }
    auto rep = rep_jet_standard(1, 2);
    auto entries = rep.entries();
    entries[1][0] = entries[1][0] + coord_element::constant(rep.space(), 1);
    auto report = rep_check_homomorphism(representation(1, 2, entries));
    CHECK(!report.ok);
    REQUIRE(report.failing_entry);
    CHECK(*report.failing_entry == std::pair<std::size_t, std::size_t>{1, 0});
}

TEST_CASE("weights and the extension order")
{
    for (int c = 1; c <= 4; ++c) {
        auto rep = rep_jet_standard(1, c);
        std::vector<int> expected;
        for (int d = 1; d <= c; ++d) {
            expected.push_back(-d);
        }
        CHECK(rep_weights(rep) == expected);
        auto e = extension_order(rep);
        CHECK(e.alpha0 == c);
        CHECK(e.factoring_order == c);
        CHECK(e.bound_holds);
    }
    auto rep2 = rep_jet_standard(2, 2);
    CHECK(rep_weights(rep2) == std::vector<int>{-1, -1, -2, -2, -2});
    auto e2 = extension_order(rep2);
    CHECK(e2.alpha0 == 2);
    CHECK(e2.factoring_order <= 2);

    auto s = coordinate_space::get(1, 2);
    auto one = coord_element::constant(s, 1), zero = coord_element::constant(s, 0);
    auto a1 = coord_element(s, s->variable(0)), a2 = coord_element(s, s->variable(1));
    CHECK_THROWS_AS(rep_weights(representation(1, 2, {{one, a1}, {zero, one}})), precondition_error);
    CHECK_THROWS_AS(rep_weights(representation(1, 2, {{one + a1}})), precondition_error);
    CHECK_THROWS_AS(extension_order(representation(1, 2, {{one, a2}, {zero, one}})), precondition_error);
}

TEST_CASE("numerical homomorphism and covariance")
{
    random_source rs(211);
    for (auto [n, c] : {std::pair<std::size_t, int>{1, 3}, {2, 2}}) {
        for (const auto &orders : {std::vector<int>{}, {2}, {3}}) {
            auto r = base_ring::nilpotent(orders);
            for (const auto &rep : {rep_jet_standard(n, c), rep_det(n, c)}) {
                for (int trial = 0; trial < 4; ++trial) {
                    auto g = rs.k_element(n, c, r), h = rs.k_element(n, c, r);
                    CHECK(rep_eval(rep, jet_compose(g, h)) == matrix_product(rep_eval(rep, g), rep_eval(rep, h)));

                    // scaling_z^{-1} o g o scaling_z acts by diag(z^{-d}) M diag(z^d)
                    const rational z = rs.nonzero_rational();
                    auto sz = scaling(n, c, r, z);
                    auto conj = jet_compose(jet_invert(sz), jet_compose(g, sz));
                    auto m = rep_eval(rep, g);
                    const auto &w = rep.weights();
                    for (std::size_t i = 0; i < rep.size(); ++i) {
                        for (std::size_t j = 0; j < rep.size(); ++j) {
                            rational factor = 1;
                            const int e = w[j] - w[i];
                            for (int p = 0; p < std::abs(e); ++p) {
                                factor = e > 0 ? rational(factor * z) : rational(factor / z);
                            }
                            m[i][j] *= factor;
                        }
                    }
                    CHECK(rep_eval(rep, conj) == m);
                }
            }
        }
    }
}

TEST_CASE("lifting to higher order")
{
    random_source rs(223);
    auto r = base_ring::nilpotent({2});
    auto rep = rep_jet_standard(1, 2);
    auto lifted = rep_lift(rep, 4);
    CHECK(lifted.order() == 4);
    CHECK(lifted.weights() == rep.weights());
    CHECK(rep_check_homomorphism(lifted).ok);
    for (int trial = 0; trial < 5; ++trial) {
        auto h = rs.k_element(1, 4, r);
        CHECK(rep_eval(lifted, h) == rep_eval(rep, jet_truncate(h, 2)));
    }
    CHECK_THROWS_AS(rep_lift(rep, 1), precondition_error);
}
