#include <discjet/lie.hpp>

#include <algorithm>

#include <discjet/errors.hpp>

namespace discjet
{

namespace
{

void check_same_shape(const derivation &d, const derivation &e)
{
    if (d.dim() != e.dim() || d.order() != e.order() || !same_ring(d.ring(), e.ring())) {
        throw shape_mismatch("derivations of different shape");
    }
}

} // namespace

derivation::derivation(series_tuple coefficients) : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty()) {
        throw shape_mismatch("derivation needs at least one coefficient");
    }
    const auto n = coefficients_.size();
    for (const auto &f : coefficients_) {
        if (f.dim() != n || f.order() != coefficients_.front().order()
            || !same_ring(f.ring(), coefficients_.front().ring())) {
            throw shape_mismatch("derivation coefficients disagree in dimension, order or ring");
        }
    }
}

derivation derivation::zero(std::size_t n, int c, ring_ptr ring)
{
    return derivation(series_tuple(n, truncated_series(n, c, std::move(ring))));
}

bool derivation::is_zero() const
{
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const auto &f) { return f.is_zero(); });
}

int derivation::m_order() const
{
    int m = order() + 1;
    for (const auto &f : coefficients_) {
        if (auto mf = f.m_order()) {
            m = std::min(m, *mf);
        }
    }
    return m;
}

derivation &derivation::operator+=(const derivation &other)
{
    check_same_shape(*this, other);
    for (std::size_t k = 0; k < dim(); ++k) {
        coefficients_[k] += other.coefficients_[k];
    }
    return *this;
}

derivation &derivation::operator-=(const derivation &other)
{
    check_same_shape(*this, other);
    for (std::size_t k = 0; k < dim(); ++k) {
        coefficients_[k] -= other.coefficients_[k];
    }
    return *this;
}

derivation derivation::scaled(const ring_element &c) const
{
    series_tuple out;
    for (const auto &f : coefficients_) {
        out.push_back(f.scaled(c));
    }
    return derivation(std::move(out));
}

derivation derivation::scaled(const rational &q) const
{
    series_tuple out;
    for (const auto &f : coefficients_) {
        out.push_back(f.scaled(q));
    }
    return derivation(std::move(out));
}

std::string derivation::to_string() const
{
    std::string s;
    for (std::size_t k = 0; k < dim(); ++k) {
        if (coefficients_[k].is_zero()) {
            continue;
        }
        if (!s.empty()) {
            s += " + ";
        }
        const std::string partial = dim() == 1 ? "d/dt" : "d/dt" + std::to_string(k + 1);
        s += "(" + coefficients_[k].to_string() + ")" + partial;
    }
    return s.empty() ? "0" : s;
}

truncated_series apply_derivation(const derivation &d, const truncated_series &f)
{
    if (f.dim() != d.dim() || f.order() != d.order() || !same_ring(f.ring(), d.ring())) {
        throw shape_mismatch("series and derivation of different shape");
    }
    truncated_series out(d.dim(), d.order(), d.ring());
    for (std::size_t k = 0; k < d.dim(); ++k) {
        if (d.coefficient(k).is_zero()) {
            continue;
        }
        out += d.coefficient(k) * f.derivative(k);
    }
    return out;
}

derivation derivation_bracket(const derivation &d, const derivation &e)
{
    check_same_shape(d, e);
    series_tuple out;
    for (std::size_t k = 0; k < d.dim(); ++k) {
        out.push_back(apply_derivation(d, e.coefficient(k)) - apply_derivation(e, d.coefficient(k)));
    }
    return derivation(std::move(out));
}

jet_automorphism exp_derivation(const derivation &d)
{
    if (!d.in_lie_K_u()) {
        throw precondition_error("exp needs a derivation of m-order >= 2, got m-order " + std::to_string(d.m_order()));
    }
    const auto n = d.dim();
    const int c = d.order();
    series_tuple out;
    for (std::size_t k = 0; k < n; ++k) {
        auto power = truncated_series::variable(n, c, d.ring(), k);
        auto sum = power;
        // D^i(t_k) has m-order >= i + 1
        for (int i = 1; i < c; ++i) {
            power = apply_derivation(d, power).scaled(rational(1, i));
            if (power.is_zero()) {
                break;
            }
            sum += power;
        }
        out.push_back(std::move(sum));
    }
    return jet_automorphism(std::move(out));
}

derivation log_unipotent(const jet_automorphism &u)
{
    if (!jet_classify(u).in_K_u) {
        throw precondition_error("log needs a unipotent jet: zero constant terms and identity linear part");
    }
    const auto n = u.dim();
    const int c = u.order();
    auto d = derivation::zero(n, c, u.ring());
    // The degree-m part of exp(D) is D_m(t) plus terms built from D_{<m}.
    for (int m = 2; m <= c; ++m) {
        const auto current = exp_derivation(d);
        series_tuple next = d.coefficients();
        bool changed = false;
        for (std::size_t k = 0; k < n; ++k) {
            auto gap = (u.component(k) - current.component(k)).homogeneous_part(m);
            if (!gap.is_zero()) {
                next[k] += gap;
                changed = true;
            }
        }
        if (changed) {
            d = derivation(std::move(next));
        }
    }
    return d;
}

derivation adjoint(const jet_automorphism &k, const derivation &d)
{
    if (k.dim() != d.dim() || k.order() != d.order() || !same_ring(k.ring(), d.ring())) {
        throw shape_mismatch("group element and derivation of different shape");
    }
    if (!jet_classify(k).in_K) {
        throw precondition_error("adjoint action needs an element of K (zero constant terms)");
    }
    const auto k_inv = jet_invert(k);
    series_tuple pushed;
    for (std::size_t j = 0; j < d.dim(); ++j) {
        pushed.push_back(apply_derivation(d, k.component(j)));
    }
    return derivation(compose_tuples(pushed, k_inv.components(), d.order()));
}

} // namespace discjet
