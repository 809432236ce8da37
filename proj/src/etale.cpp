#include <discjet/etale.hpp>

#include <algorithm>

#include <discjet/errors.hpp>

namespace discjet
{

namespace
{

int stored_degree(const series_tuple &components)
{
    int d = 0;
    for (const auto &f : components) {
        d = std::max(d, f.degree());
    }
    return d;
}

ring_element evaluate_component(const truncated_series &f, const std::vector<ring_element> &point)
{
    ring_element out(f.ring());
    for (const auto &[j, coef] : f.terms()) {
        auto term = coef;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (j[i]) {
                term *= point[i].pow(static_cast<unsigned>(j[i]));
            }
        }
        out += term;
    }
    return out;
}

void check_point(const poly_map &f, const std::vector<ring_element> &point)
{
    if (point.size() != f.dim()) {
        throw shape_mismatch("point has " + std::to_string(point.size()) + " coordinates, map has "
                             + std::to_string(f.dim()) + " variables");
    }
    for (const auto &x : point) {
        if (!same_ring(x.ring(), f.ring())) {
            throw shape_mismatch("base ring descriptor mismatch between point and map");
        }
    }
}

} // namespace

poly_map::poly_map(series_tuple components)
{
    if (components.empty()) {
        throw shape_mismatch("polynomial map needs at least one component");
    }
    const auto n = components.size();
    for (const auto &f : components) {
        if (f.dim() != n || !same_ring(f.ring(), components.front().ring())) {
            throw shape_mismatch("polynomial map components disagree in dimension or ring");
        }
    }
    const int order = std::max(1, stored_degree(components));
    for (auto &f : components) {
        components_.push_back(f.order() >= order ? f.truncate(order) : f.lift(order));
    }
}

poly_map poly_map::identity(std::size_t n, ring_ptr ring)
{
    series_tuple comps;
    for (std::size_t k = 0; k < n; ++k) {
        comps.push_back(truncated_series::variable(n, 1, ring, k));
    }
    return poly_map(std::move(comps));
}

poly_map poly_map::from_jet(const jet_automorphism &g)
{
    return poly_map(g.components());
}

int poly_map::degree() const
{
    return stored_degree(components_);
}

std::vector<ring_element> poly_map::operator()(const std::vector<ring_element> &point) const
{
    check_point(*this, point);
    std::vector<ring_element> out;
    for (const auto &f : components_) {
        out.push_back(evaluate_component(f, point));
    }
    return out;
}

ring_matrix poly_map::jacobian_at(const std::vector<ring_element> &point) const
{
    check_point(*this, point);
    ring_matrix m;
    for (const auto &f : components_) {
        std::vector<ring_element> row;
        for (std::size_t k = 0; k < dim(); ++k) {
            row.push_back(evaluate_component(f.derivative(k), point));
        }
        m.push_back(std::move(row));
    }
    return m;
}

bool operator==(const poly_map &a, const poly_map &b)
{
    if (a.dim() != b.dim() || !same_ring(a.ring(), b.ring())) {
        return false;
    }
    const int order = std::max(a.components_.front().order(), b.components_.front().order());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!(a.components_[k].lift(order) == b.components_[k].lift(order))) {
            return false;
        }
    }
    return true;
}

std::string poly_map::to_string() const
{
    std::string s = "(";
    for (std::size_t k = 0; k < dim(); ++k) {
        if (k) {
            s += ", ";
        }
        s += components_[k].to_string();
    }
    return s + ")";
}

poly_map poly_map_compose_exact(const poly_map &f, const poly_map &g)
{
    if (f.dim() != g.dim() || !same_ring(f.ring(), g.ring())) {
        throw shape_mismatch("polynomial maps of different dimension or ring");
    }
    const int bound = std::max(1, f.degree() * g.degree());
    return poly_map(evaluate_tuple_at(f.components(), g.components(), bound));
}

series_tuple jet_at(const poly_map &f, const std::vector<ring_element> &w, int c)
{
    check_point(f, w);
    if (c < 0) {
        throw precondition_error("negative jet order");
    }
    series_tuple shifted;
    for (std::size_t k = 0; k < f.dim(); ++k) {
        auto s = truncated_series::variable(f.dim(), c, f.ring(), k);
        s.add_term(multi_index(f.dim()), w[k]);
        shifted.push_back(std::move(s));
    }
    return evaluate_tuple_at(f.components(), shifted, c);
}

void check_roof(const roof_chart &roof)
{
    const auto n = roof.phi.dim();
    if (roof.psi.dim() != n || !same_ring(roof.phi.ring(), roof.psi.ring())) {
        throw shape_mismatch("roof legs of different dimension or ring");
    }
    check_point(roof.phi, roof.w);
    for (std::size_t k = 0; k < n; ++k) {
        if (!roof.w[k].is_nilpotent()) {
            throw precondition_error("section coordinate " + std::to_string(k + 1) + " is not nilpotent");
        }
    }
    for (const auto *leg : {&roof.phi, &roof.psi}) {
        const char *name = leg == &roof.phi ? "phi" : "psi";
        for (const auto &x : (*leg)(roof.w)) {
            if (!x.is_nilpotent()) {
                throw precondition_error(std::string("section mismatch: ") + name + "(w) is not nilpotent");
            }
        }
        const auto det = determinant(leg->jacobian_at(roof.w));
        if (!det.is_unit()) {
            throw precondition_error(std::string("not etale at the section: singular Jacobian of ") + name
                                     + ", determinant " + det.to_string());
        }
    }
}

jet_automorphism roof_jet(const roof_chart &roof, int c)
{
    check_roof(roof);
    if (c < 1) {
        throw precondition_error("jet order must be at least 1");
    }
    const int work = working_order(c, *roof.phi.ring());
    const jet_automorphism phi_hat(jet_at(roof.phi, roof.w, work));
    const jet_automorphism psi_hat(jet_at(roof.psi, roof.w, work));
    // exact to order c; psi_hat is known to the working order it needs as left factor
    return jet_compose_truncated(psi_hat, jet_invert(phi_hat), c);
}

roof_chart roof_mirror(const roof_chart &roof)
{
    return {roof.psi, roof.phi, roof.w};
}

roof_chart roof_restrict(const roof_chart &roof, const poly_map &g, const std::vector<ring_element> &w_prime)
{
    check_roof(roof);
    if (g.dim() != roof.phi.dim() || !same_ring(g.ring(), roof.phi.ring())) {
        throw shape_mismatch("restriction map of different dimension or ring");
    }
    const auto image = g(w_prime);
    for (std::size_t k = 0; k < image.size(); ++k) {
        if (!(image[k] == roof.w[k])) {
            throw precondition_error("basepoint mismatch: g(w') differs from w in coordinate " + std::to_string(k + 1));
        }
    }
    const auto det = determinant(g.jacobian_at(w_prime));
    if (!det.is_unit()) {
        throw precondition_error("restriction map is not etale at w': Jacobian determinant " + det.to_string());
    }
    return {poly_map_compose_exact(roof.phi, g), poly_map_compose_exact(roof.psi, g), w_prime};
}

bool roof_is_strict(const roof_chart &roof)
{
    for (const auto *leg : {&roof.phi, &roof.psi}) {
        for (const auto &x : (*leg)(roof.w)) {
            if (!x.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

roof_chart roof_witness(const jet_automorphism &omega)
{
    std::vector<ring_element> origin(omega.dim(), ring_element(omega.ring()));
    return {poly_map::identity(omega.dim(), omega.ring()), poly_map::from_jet(omega), std::move(origin)};
}

} // namespace discjet
