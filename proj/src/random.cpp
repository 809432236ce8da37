#include <discjet/random.hpp>

namespace discjet
{

int random_source::uniform(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool random_source::one_in(int n)
{
    return uniform(1, n) == 1;
}

rational random_source::small_rational(int bound)
{
    rational r(uniform(-bound, bound), uniform(1, 2));
    r.canonicalize();
    return r;
}

rational random_source::nonzero_rational(int bound)
{
    int p = 0;
    while (p == 0) {
        p = uniform(-bound, bound);
    }
    rational r(p, uniform(1, 2));
    r.canonicalize();
    return r;
}

ring_element random_source::nilpotent(const ring_ptr &ring)
{
    ring_element x(ring);
    for (std::size_t i = 0; i < ring->generators(); ++i) {
        if (!one_in(3)) {
            x += ring_element::generator(ring, i) * small_rational();
        }
    }
    // occasionally a product of generators
    if (ring->generators() >= 1 && one_in(3)) {
        auto g = ring_element::generator(ring, static_cast<std::size_t>(uniform(0, static_cast<int>(ring->generators()) - 1)));
        x += g * g * small_rational();
    }
    return x;
}

ring_element random_source::element(const ring_ptr &ring)
{
    return ring_element(ring, small_rational()) + nilpotent(ring);
}

ring_element random_source::unit(const ring_ptr &ring)
{
    return ring_element(ring, nonzero_rational()) + nilpotent(ring);
}

truncated_series random_source::series(std::size_t n, int c, const ring_ptr &ring, int min_degree, int density)
{
    truncated_series s(n, c, ring);
    for (const auto &j : monomials_in_range(n, min_degree, c)) {
        if (uniform(0, density) == 0) {
            continue;
        }
        s.add_term(j, element(ring));
    }
    return s;
}

ring_matrix random_source::invertible_matrix(std::size_t n, const ring_ptr &ring)
{
    while (true) {
        ring_matrix m(n, std::vector<ring_element>(n, ring_element(ring)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = i == j ? unit(ring) : (one_in(2) ? element(ring) : nilpotent(ring));
            }
        }
        if (determinant(m).is_unit()) {
            return m;
        }
    }
}

jet_automorphism random_source::k_element(std::size_t n, int c, const ring_ptr &ring)
{
    const auto lin = invertible_matrix(n, ring);
    series_tuple comps;
    for (std::size_t k = 0; k < n; ++k) {
        auto s = series(n, c, ring, 2);
        for (std::size_t j = 0; j < n; ++j) {
            s.add_term(multi_index::unit(n, j), lin[k][j]);
        }
        comps.push_back(std::move(s));
    }
    return jet_automorphism(std::move(comps));
}

jet_automorphism random_source::k_u_element(std::size_t n, int c, const ring_ptr &ring)
{
    series_tuple comps;
    for (std::size_t k = 0; k < n; ++k) {
        auto s = series(n, c, ring, 2);
        s.add_term(multi_index::unit(n, k), ring_element(ring, 1L));
        comps.push_back(std::move(s));
    }
    return jet_automorphism(std::move(comps));
}

jet_automorphism random_source::g_element(std::size_t n, int c, const ring_ptr &ring)
{
    auto k = k_element(n, c, ring);
    if (ring->generators() == 0) {
        return k;
    }
    series_tuple comps = k.components();
    for (auto &s : comps) {
        auto a = nilpotent(ring);
        if (a.is_zero()) {
            a = ring_element::generator(ring, 0);
        }
        s.add_term(multi_index(n), a);
    }
    return jet_automorphism(std::move(comps));
}

std::vector<ring_element> random_source::nilpotent_point(std::size_t n, const ring_ptr &ring)
{
    std::vector<ring_element> w;
    for (std::size_t k = 0; k < n; ++k) {
        w.push_back(nilpotent(ring));
    }
    return w;
}

poly_map random_source::chart(std::size_t n, int degree, const ring_ptr &ring, const std::vector<ring_element> &w,
                              bool strict)
{
    series_tuple comps = k_element(n, degree, ring).components();
    poly_map f(comps);
    const auto at_w = f(w);
    for (std::size_t k = 0; k < n; ++k) {
        comps[k].add_term(multi_index(n), strict ? -at_w[k] : nilpotent(ring) - at_w[k]);
    }
    return poly_map(std::move(comps));
}

} // namespace discjet
