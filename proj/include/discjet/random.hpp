#ifndef DISCJET_RANDOM_HPP
#define DISCJET_RANDOM_HPP

#include <cstdint>
#include <random>

#include <discjet/base_ring.hpp>
#include <discjet/etale.hpp>
#include <discjet/jet_group.hpp>
#include <discjet/series.hpp>

namespace discjet
{

// Seeded generator of random algebraic objects with small rational coefficients,
// shared by the property suites. Identical seeds give identical sequences.
class random_source
{
public:
    explicit random_source(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);
    // true with probability 1/n
    bool one_in(int n);
    // p/q with |p| <= bound, 1 <= q <= 2
    rational small_rational(int bound = 3);
    rational nonzero_rational(int bound = 3);

    ring_element nilpotent(const ring_ptr &ring);
    ring_element element(const ring_ptr &ring);
    ring_element unit(const ring_ptr &ring);

    // Sparse series with terms of degree in [min_degree, c].
    truncated_series series(std::size_t n, int c, const ring_ptr &ring, int min_degree, int density = 2);
    ring_matrix invertible_matrix(std::size_t n, const ring_ptr &ring);

    jet_automorphism k_element(std::size_t n, int c, const ring_ptr &ring);
    jet_automorphism k_u_element(std::size_t n, int c, const ring_ptr &ring);
    // K element followed by a random nilpotent translation (nonzero when the ring has nilpotents).
    jet_automorphism g_element(std::size_t n, int c, const ring_ptr &ring);

    std::vector<ring_element> nilpotent_point(std::size_t n, const ring_ptr &ring);
    // Chart of the given degree, etale at w; strict charts satisfy f(w) = 0 exactly,
    // the others get a random nilpotent value at w.
    poly_map chart(std::size_t n, int degree, const ring_ptr &ring, const std::vector<ring_element> &w, bool strict);

    std::mt19937_64 &engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace discjet

#endif
