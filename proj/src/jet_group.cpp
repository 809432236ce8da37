#include <discjet/jet_group.hpp>

#include <algorithm>

#include <discjet/errors.hpp>

namespace discjet
{

namespace
{

void check_tuple_shape(const series_tuple &components)
{
    if (components.empty()) {
        throw shape_mismatch("jet needs at least one component");
    }
    const auto n = components.size();
    const auto &first = components.front();
    for (const auto &s : components) {
        if (s.dim() != n) {
            throw shape_mismatch("component in " + std::to_string(s.dim()) + " variables for a jet with "
                                 + std::to_string(n) + " components");
        }
        if (s.order() != first.order() || !same_ring(s.ring(), first.ring())) {
            throw shape_mismatch("jet components disagree in order or ring");
        }
    }
}

} // namespace

ring_matrix linear_part_of_tuple(const series_tuple &components)
{
    const auto n = components.size();
    ring_matrix m;
    m.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<ring_element> row;
        row.reserve(n);
        for (std::size_t kp = 0; kp < n; ++kp) {
            row.push_back(components[k].coefficient(multi_index::unit(n, kp)));
        }
        m.push_back(std::move(row));
    }
    return m;
}

namespace
{

void check_same_group(const jet_automorphism &a, const jet_automorphism &b)
{
    if (a.dim() != b.dim() || a.order() != b.order() || !same_ring(a.ring(), b.ring())) {
        throw shape_mismatch("jets live in different groups: (n " + std::to_string(a.dim()) + ", c "
                             + std::to_string(a.order()) + ") vs (n " + std::to_string(b.dim()) + ", c "
                             + std::to_string(b.order()) + ")");
    }
}

series_tuple translation_tuple(std::size_t n, int order, const std::vector<ring_element> &a)
{
    series_tuple out;
    for (std::size_t k = 0; k < n; ++k) {
        auto s = truncated_series::variable(n, order, a.at(k).ring(), k);
        s.add_term(multi_index(n), a[k]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

jet_automorphism::jet_automorphism(series_tuple components) : components_(std::move(components))
{
    check_tuple_shape(components_);
    if (order() < 1) {
        throw precondition_error("jet order must be at least 1");
    }
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const auto a = components_[k].constant_term();
        if (!a.is_nilpotent()) {
            throw precondition_error("non-nilpotent constant term " + a.to_string() + " in component "
                                     + std::to_string(k + 1));
        }
    }
    const auto det = determinant(linear_part());
    if (!det.is_unit()) {
        throw precondition_error("non-unit linear part: determinant " + det.to_string());
    }
}

jet_automorphism jet_automorphism::identity(std::size_t n, int c, ring_ptr ring)
{
    series_tuple comps;
    for (std::size_t k = 0; k < n; ++k) {
        comps.push_back(truncated_series::variable(n, c, ring, k));
    }
    return jet_automorphism(std::move(comps));
}

ring_matrix jet_automorphism::linear_part() const
{
    return linear_part_of_tuple(components_);
}

std::string jet_automorphism::to_string() const
{
    if (dim() == 1) {
        return "t -> " + components_.front().to_string();
    }
    std::string s = "(";
    for (std::size_t k = 0; k < dim(); ++k) {
        if (k) {
            s += ", ";
        }
        s += components_[k].to_string();
    }
    return s + ")";
}

int working_order(int c, const base_ring &ring)
{
    return ring.is_symbolic() ? c : c + ring.nilpotency_index() - 1;
}

jet_automorphism jet_identity(std::size_t n, int c, ring_ptr ring)
{
    if (n < 1) {
        throw precondition_error("jet dimension must be at least 1");
    }
    return jet_automorphism::identity(n, c, std::move(ring));
}

series_tuple compose_tuples(const series_tuple &outer, const series_tuple &inner, int order)
{
    return evaluate_tuple_at(outer, inner, order);
}

series_tuple linear_tuple(const ring_matrix &a, int order)
{
    const auto n = a.size();
    const auto &ring = a.at(0).at(0).ring();
    series_tuple out;
    for (std::size_t i = 0; i < n; ++i) {
        truncated_series s(n, order, ring);
        for (std::size_t j = 0; j < n; ++j) {
            s.add_term(multi_index::unit(n, j), a[i][j]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

series_tuple invert_unipotent_tuple(const series_tuple &u, int order)
{
    const auto n = u.size();
    const auto &ring = u.front().ring();
    // h = u - t, keeping only degrees >= 2
    series_tuple h;
    for (const auto &uk : u) {
        auto lifted = uk.order() >= order ? uk.truncate(order) : uk.lift(order);
        truncated_series hk(n, order, ring);
        for (const auto &[j, c] : lifted.terms()) {
            if (j.degree() >= 2) {
                hk.add_term(j, c);
            }
        }
        h.push_back(std::move(hk));
    }
    series_tuple v;
    for (std::size_t k = 0; k < n; ++k) {
        v.push_back(truncated_series::variable(n, std::min(order, 1), ring, k));
    }
    // The degree-d part of h(v) only sees v up to degree d - 1.
    for (int d = 2; d <= order; ++d) {
        series_tuple vd;
        for (const auto &vk : v) {
            vd.push_back(vk.lift(d));
        }
        series_tuple hd;
        for (const auto &hk : h) {
            hd.push_back(hk.truncate(d));
        }
        auto hv = evaluate_tuple_at(hd, vd, d);
        for (std::size_t k = 0; k < n; ++k) {
            vd[k] = truncated_series::variable(n, d, ring, k) - hv[k];
        }
        v = std::move(vd);
    }
    return v;
}

jet_automorphism jet_compose(const jet_automorphism &rho, const jet_automorphism &sigma)
{
    check_same_group(rho, sigma);
    return jet_automorphism(compose_tuples(rho.components(), sigma.components(), rho.order()));
}

jet_automorphism jet_compose_truncated(const jet_automorphism &rho, const jet_automorphism &sigma, int c)
{
    if (rho.dim() != sigma.dim() || !same_ring(rho.ring(), sigma.ring())) {
        throw shape_mismatch("jets of different dimension or ring");
    }
    if (c < 1 || c > sigma.order()) {
        throw precondition_error("target order " + std::to_string(c) + " exceeds the order of the right factor");
    }
    return jet_automorphism(compose_tuples(rho.components(), jet_truncate(sigma, c).components(), c));
}

jet_automorphism jet_invert(const jet_automorphism &g)
{
    const auto n = g.dim();
    const int c = g.order();
    const auto &ring = g.ring();
    auto [a, k] = split_translation(g);
    const bool translated = std::any_of(a.begin(), a.end(), [](const ring_element &x) { return !x.is_zero(); });
    // K is closed under inversion at level c; only translations need the extra precision.
    const int work = translated ? working_order(c, *ring) : c;

    series_tuple k_work;
    for (const auto &s : k.components()) {
        k_work.push_back(s.lift(work));
    }
    const auto a_inv = matrix_inverse(k.linear_part());
    const auto lin_inv = linear_tuple(a_inv, work);
    const auto u = compose_tuples(lin_inv, k_work, work);
    const auto u_inv = invert_unipotent_tuple(u, work);
    const auto k_inv = compose_tuples(u_inv, lin_inv, work);

    if (!translated) {
        series_tuple out;
        for (const auto &s : k_inv) {
            out.push_back(s.truncate(c));
        }
        return jet_automorphism(std::move(out));
    }
    std::vector<ring_element> minus_a;
    for (const auto &x : a) {
        minus_a.push_back(-x);
    }
    return jet_automorphism(compose_tuples(k_inv, translation_tuple(n, c, minus_a), c));
}

jet_automorphism jet_truncate(const jet_automorphism &g, int c)
{
    series_tuple out;
    for (const auto &s : g.components()) {
        out.push_back(s.truncate(c));
    }
    return jet_automorphism(std::move(out));
}

jet_automorphism jet_lift(const jet_automorphism &g, int c)
{
    series_tuple out;
    for (const auto &s : g.components()) {
        out.push_back(s.lift(c));
    }
    return jet_automorphism(std::move(out));
}

jet_flags jet_classify(const series_tuple &components)
{
    jet_flags flags;
    try {
        check_tuple_shape(components);
    } catch (const shape_mismatch &) {
        return flags;
    }
    const auto n = components.size();
    bool constants_nilpotent = true;
    bool constants_zero = true;
    for (const auto &s : components) {
        const auto a = s.constant_term();
        constants_nilpotent = constants_nilpotent && a.is_nilpotent();
        constants_zero = constants_zero && a.is_zero();
    }
    const auto lin = linear_part_of_tuple(components);
    flags.in_G = constants_nilpotent && components.front().order() >= 1 && determinant(lin).is_unit();
    flags.in_K = flags.in_G && constants_zero;
    bool linear_identity = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool ok = i == j ? lin[i][j].is_one() : lin[i][j].is_zero();
            linear_identity = linear_identity && ok;
        }
    }
    flags.in_K_u = flags.in_K && linear_identity;

    if (!constants_zero) {
        flags.identity_level = -1;
        return flags;
    }
    const int c = components.front().order();
    int first_difference = c + 1;
    for (std::size_t k = 0; k < n; ++k) {
        auto diff = components[k] - truncated_series::variable(n, c, components[k].ring(), k);
        if (auto m = diff.m_order()) {
            first_difference = std::min(first_difference, *m);
        }
    }
    flags.identity_level = first_difference - 1;
    return flags;
}

jet_flags jet_classify(const jet_automorphism &g)
{
    return jet_classify(g.components());
}

translation_split split_translation(const jet_automorphism &g)
{
    std::vector<ring_element> a;
    series_tuple k;
    for (const auto &s : g.components()) {
        auto c0 = s.constant_term();
        auto ks = s;
        ks.add_term(multi_index(g.dim()), -c0);
        a.push_back(std::move(c0));
        k.push_back(std::move(ks));
    }
    return {std::move(a), jet_automorphism(std::move(k))};
}

jet_automorphism jet_translation(std::size_t n, int c, const std::vector<ring_element> &a)
{
    if (a.size() != n) {
        throw shape_mismatch("translation vector length does not match the dimension");
    }
    return jet_automorphism(translation_tuple(n, c, a));
}

jet_automorphism jet_linear(const ring_matrix &a, int c)
{
    return jet_automorphism(linear_tuple(a, c));
}

linear_split split_linear_unipotent(const jet_automorphism &k)
{
    if (!jet_classify(k).in_K) {
        throw precondition_error("nonzero constant term: element is not in K");
    }
    auto lin = jet_linear(k.linear_part(), k.order());
    auto u = jet_compose(jet_invert(lin), k);
    return {std::move(lin), std::move(u)};
}

bool jets_c_equivalent(const jet_automorphism &g, const jet_automorphism &h, int c_prime)
{
    if (c_prime < 0 || c_prime > std::min(g.order(), h.order())) {
        throw precondition_error("comparison order " + std::to_string(c_prime) + " exceeds the jet orders");
    }
    if (g.dim() != h.dim() || !same_ring(g.ring(), h.ring())) {
        throw shape_mismatch("jets of different dimension or ring");
    }
    for (std::size_t k = 0; k < g.dim(); ++k) {
        if (!(g.component(k).truncate(c_prime) == h.component(k).truncate(c_prime))) {
            return false;
        }
    }
    return true;
}

} // namespace discjet
