#include <random>

#include <doctest.h>

#include <discjet/base_ring.hpp>
#include <discjet/errors.hpp>

#include "helpers.hpp"

using namespace discjet;
using namespace testing;

namespace
{

ring_element random_element(std::mt19937_64 &rng, const ring_ptr &r)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<ring_element::term> terms;
    const auto orders = r->orders();
    // every monomial of the truncated ring, each with probability ~1/2
    std::vector<ring_monomial> monos{ring_monomial(orders.size(), 0)};
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<ring_monomial> next;
        for (const auto &m : monos) {
            for (int e = 0; e < orders[i]; ++e) {
                auto mm = m;
                mm[i] = static_cast<std::uint16_t>(e);
                next.push_back(mm);
            }
        }
        monos = std::move(next);
    }
    for (const auto &m : monos) {
        if (rng() % 2) {
            terms.push_back({m, rational(coef(rng), 1 + static_cast<long>(rng() % 3))});
        }
    }
    return ring_element::from_terms(r, std::move(terms));
}

// Highest total weight of a monomial surviving in Q[e_i]/(e_i^{N_i}), plus one.
int brute_force_nilpotency(std::span<const int> orders)
{
    int best = 0;
    std::vector<int> e(orders.size(), 0);
    while (true) {
        int w = 0;
        for (int x : e) {
            w += x;
        }
        best = std::max(best, w);
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == orders[i]) {
            e[i++] = 0;
        }
        if (i == e.size()) {
            break;
        }
    }
    return best + 1;
}

} // namespace

TEST_CASE("ring arithmetic examples")
{
    auto r2 = base_ring::nilpotent({2});
    CHECK((q(r2, 1) + eps(r2)) * (q(r2, 1) - eps(r2)) == q(r2, 1));

    auto r3 = base_ring::nilpotent({3});
    auto e = eps(r3);
    CHECK((q(r3, 1) + e) * (q(r3, 1) + e) == q(r3, 1) + e * rational(2) + e * e);
    CHECK(!(e * e).is_zero());
    CHECK((e * e * e).is_zero());

    auto r22 = base_ring::nilpotent({2, 2});
    auto e1 = eps(r22, 0), e2 = eps(r22, 1);
    auto sum = e1 * e2 + e2 * e1;
    CHECK(sum == ring_element::monomial(r22, {1, 1}, rational(2)));
}

TEST_CASE("ring inversion")
{
    auto qq = base_ring::rationals();
    CHECK(ring_invert(q(qq, 2)) == q(qq, 1, 2));

    auto r3 = base_ring::nilpotent({3});
    auto e = eps(r3);
    CHECK(ring_invert(q(r3, 1) + e) == q(r3, 1) - e + e * e);

    // oracle: multiply back
    auto r2 = base_ring::nilpotent({2});
    auto a = q(r2, 3) + eps(r2);
    auto inv = ring_invert(a);
    CHECK(inv * a == q(r2, 1));
    CHECK(inv == q(r2, 1, 3) - eps(r2) * rational(1, 9));

    CHECK_THROWS_AS(ring_invert(eps(r2)), precondition_error);
    CHECK_THROWS_AS(ring_invert(q(r2, 0)), precondition_error);
}

TEST_CASE("nilpotency index")
{
    CHECK(base_ring::rationals()->nilpotency_index() == 1);
    CHECK(base_ring::nilpotent({3})->nilpotency_index() == 3);
    const std::vector<int> orders{2, 3};
    CHECK(brute_force_nilpotency(orders) == 4);
    CHECK(base_ring::nilpotent(orders)->nilpotency_index() == 4);
    CHECK_THROWS_AS(base_ring::nilpotent({1}), precondition_error);
    CHECK_THROWS(base_ring::symbolic({"x"})->nilpotency_index());
}

TEST_CASE("descriptor mismatch is rejected")
{
    auto a = eps(base_ring::nilpotent({2}));
    auto b = eps(base_ring::nilpotent({3}));
    CHECK_THROWS_AS(a + b, shape_mismatch);
    CHECK_THROWS_AS(a * b, shape_mismatch);
    // equal descriptors built separately are the same ring
    CHECK_NOTHROW(a + eps(base_ring::nilpotent({2})));
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(11);
    for (const auto &orders : {std::vector<int>{}, {2}, {4}, {2, 3}, {2, 2, 2}}) {
        auto r = base_ring::nilpotent(orders);
        for (int trial = 0; trial < 40; ++trial) {
            auto a = random_element(rng, r), b = random_element(rng, r), c = random_element(rng, r);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a + b) - b == a);
            if (a.is_unit()) {
                CHECK(ring_invert(a) * a == q(r, 1));
            } else {
                CHECK_THROWS_AS(ring_invert(a), precondition_error);
            }
        }
    }
}

TEST_CASE("products of nu nilpotents vanish")
{
    std::mt19937_64 rng(5);
    for (const auto &orders : {std::vector<int>{2}, {3}, {2, 3}, {2, 2, 2}}) {
        auto r = base_ring::nilpotent(orders);
        const int nu = r->nilpotency_index();
        for (int trial = 0; trial < 20; ++trial) {
            ring_element prod(r, 1L);
            for (int i = 0; i < nu; ++i) {
                auto x = random_element(rng, r);
                x -= ring_element(r, x.rational_part());
                prod *= x;
            }
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("symbolic rings")
{
    auto r = base_ring::symbolic({"x", "y"});
    auto x = ring_element::generator(r, 0), y = ring_element::generator(r, 1);
    auto p = (x + y).pow(3);
    CHECK(p.terms().size() == 4);
    CHECK(!x.is_unit());
    CHECK(!x.is_nilpotent());
    CHECK(q(r, 5).is_unit());
    CHECK_THROWS_AS(ring_invert(x), precondition_error);
    CHECK(p.to_string() == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");

    // evaluation x -> 2, y -> -1
    auto qq = base_ring::rationals();
    std::vector<ring_element> vals{q(qq, 2), q(qq, -1)};
    auto v = evaluate_polynomial<ring_element>(p, vals, [&](const rational &c) { return ring_element(qq, c); });
    CHECK(v == q(qq, 1));
}

TEST_CASE("determinant and inverse")
{
    auto r = base_ring::nilpotent({2});
    ring_matrix m{{q(r, 2), eps(r)}, {q(r, 1), q(r, 3)}};
    auto inv = matrix_inverse(m);
    CHECK(matrix_product(m, inv) == identity_matrix(r, 2));
    ring_matrix singular{{eps(r), q(r, 0)}, {q(r, 0), q(r, 1)}};
    CHECK_THROWS_AS(matrix_inverse(singular), precondition_error);
    ring_matrix m3{{q(r, 1), q(r, 2), q(r, 0)}, {q(r, 0), q(r, 1), q(r, 4)}, {q(r, 5), q(r, 6), q(r, 0)}};
    CHECK(determinant(m3) == q(r, 16));
    CHECK(matrix_product(m3, matrix_inverse(m3)) == identity_matrix(r, 3));
}
