#include <discjet/rep.hpp>

#include <algorithm>

#include <discjet/errors.hpp>

namespace discjet
{

namespace
{

// p / (det_b^l det_c^r) in the tensor ring of a space.
struct tensor_value
{
    ring_element numerator;
    unsigned left = 0, right = 0;
};

ring_element move_alphabet(const ring_element &p, const coordinate_space &space, int alphabet)
{
    std::vector<ring_element::term> terms;
    const auto offset = static_cast<std::size_t>(alphabet) * space.size();
    for (const auto &t : p.terms()) {
        ring_monomial m(space.tensor_ring()->generators(), 0);
        std::copy(t.exponents.begin(), t.exponents.end(), m.begin() + static_cast<std::ptrdiff_t>(offset));
        terms.push_back({std::move(m), t.coef});
    }
    return ring_element::from_terms(space.tensor_ring(), std::move(terms));
}

void add_scaled(tensor_value &acc, const tensor_value &x, const ring_element &det_b, const ring_element &det_c)
{
    const unsigned left = std::max(acc.left, x.left), right = std::max(acc.right, x.right);
    acc.numerator = acc.numerator * det_b.pow(left - acc.left) * det_c.pow(right - acc.right)
                    + x.numerator * det_b.pow(left - x.left) * det_c.pow(right - x.right);
    acc.left = left;
    acc.right = right;
}

} // namespace

representation::representation(std::size_t n, int c, coord_matrix entries, std::vector<int> weights)
    : space_(coordinate_space::get(n, c)), entries_(std::move(entries)), weights_(std::move(weights))
{
    const auto m = entries_.size();
    if (m == 0) {
        throw shape_mismatch("representation needs at least one basis vector");
    }
    for (const auto &row : entries_) {
        if (row.size() != m) {
            throw shape_mismatch("representation matrix is not square");
        }
        for (const auto &x : row) {
            if (x.space()->dim() != n || x.space()->order() != c) {
                throw shape_mismatch("matrix coefficient lives on a different K^(c)");
            }
        }
    }
    if (!weights_.empty() && weights_.size() != m) {
        throw shape_mismatch("weight list length differs from the representation dimension");
    }
}

representation rep_jet_standard(std::size_t n, int c)
{
    const auto space = coordinate_space::get(n, c);
    const auto &inverse = generic_inverse(n, c);
    const auto &ring = inverse.front().ring();
    const auto basis = monomials_in_range(n, 1, c);
    const auto m = basis.size();
    coord_matrix entries(m, std::vector<coord_element>(m, coord_element::constant(space, 0)));
    for (std::size_t j = 0; j < m; ++j) {
        // (k^{-1})^J
        auto image = truncated_series::constant(n, c, ring_element(ring, 1L));
        for (std::size_t i = 0; i < n; ++i) {
            for (int e = 0; e < basis[j][i]; ++e) {
                image = image * inverse[i];
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            entries[i][j] = coord_from_delta(space, image.coefficient(basis[i]));
        }
    }
    representation rep(n, c, std::move(entries));
    return representation(n, c, rep.entries(), rep_weights(rep));
}

representation rep_det(std::size_t n, int c)
{
    const auto space = coordinate_space::get(n, c);
    return representation(n, c, {{coord_element(space, space->det())}}, {static_cast<int>(n)});
}

representation rep_trivial(std::size_t n, int c)
{
    return representation(n, c, {{coord_element::constant(coordinate_space::get(n, c), 1)}}, {0});
}

ring_matrix rep_eval(const representation &rep, const jet_automorphism &g)
{
    if (g.dim() != rep.dim() || g.order() != rep.order()) {
        throw shape_mismatch("group element has (n " + std::to_string(g.dim()) + ", c " + std::to_string(g.order())
                             + "), representation is of K^(" + std::to_string(rep.order()) + ") in "
                             + std::to_string(rep.dim()) + " variables");
    }
    if (!jet_classify(g).in_K) {
        throw precondition_error("nonzero constant term: element is not in K");
    }
    ring_matrix out;
    for (const auto &row : rep.entries()) {
        std::vector<ring_element> r;
        for (const auto &x : row) {
            r.push_back(evaluate(x, g));
        }
        out.push_back(std::move(r));
    }
    return out;
}

homomorphism_report rep_check_homomorphism(const representation &rep)
{
    const auto &space = *rep.space();
    const auto &delta = coproduct(rep.dim(), rep.order());
    const auto &tensor = space.tensor_ring();
    std::vector<ring_element> delta_values;
    for (const auto &[v, d] : delta) {
        delta_values.push_back(d.numerator());
    }
    const auto det_b = space.tensor_det(0), det_c = space.tensor_det(1);
    const auto m = rep.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto &x = rep.entry(i, j);
            // Delta(det) = det_b det_c
            tensor_value lhs{evaluate_polynomial<ring_element>(x.numerator(), delta_values,
                                                               [&](const rational &q) { return ring_element(tensor, q); }),
                             x.det_power(), x.det_power()};
            tensor_value rhs{ring_element(tensor), 0, 0};
            for (std::size_t k = 0; k < m; ++k) {
                const auto &l = rep.entry(i, k), r = rep.entry(k, j);
                if (l.numerator().is_zero() || r.numerator().is_zero()) {
                    continue;
                }
                add_scaled(rhs,
                           {move_alphabet(l.numerator(), space, 0) * move_alphabet(r.numerator(), space, 1),
                            l.det_power(), r.det_power()},
                           det_b, det_c);
            }
            tensor_element a(rep.space(), lhs.numerator, lhs.left, lhs.right);
            tensor_element b(rep.space(), rhs.numerator, rhs.left, rhs.right);
            if (!(a == b)) {
                return {false, std::pair{i, j}};
            }
        }
    }
    return {};
}

std::vector<int> rep_weights(const representation &rep)
{
    const auto &space = *rep.space();
    const auto zring = base_ring::symbolic({"z"});
    const auto z = ring_element::generator(zring, 0);
    std::vector<ring_element> values;
    for (const auto &v : space.variables()) {
        const bool diagonal = v.j.degree() == 1 && v.j[v.k] == 1;
        values.push_back(diagonal ? z : ring_element(zring));
    }
    const auto n = static_cast<int>(space.dim());
    std::vector<int> weights;
    for (std::size_t i = 0; i < rep.size(); ++i) {
        for (std::size_t j = 0; j < rep.size(); ++j) {
            const auto &x = rep.entry(i, j);
            const auto p = evaluate_polynomial<ring_element>(x.numerator(), values,
                                                             [&](const rational &q) { return ring_element(zring, q); });
            if (i != j) {
                if (!p.is_zero()) {
                    throw precondition_error("basis does not diagonalize scaling: entry (" + std::to_string(i + 1)
                                             + ", " + std::to_string(j + 1) + ") survives as " + p.to_string());
                }
                continue;
            }
            if (p.terms().size() != 1 || p.terms().front().coef != 1) {
                throw precondition_error("basis does not diagonalize scaling: diagonal entry "
                                         + std::to_string(i + 1) + " is " + p.to_string() + ", not a power of z");
            }
            weights.push_back(static_cast<int>(p.terms().front().exponents[0]) - n * static_cast<int>(x.det_power()));
        }
    }
    return weights;
}

int factoring_order(const representation &rep)
{
    const auto &space = *rep.space();
    std::vector<bool> used(space.size(), false);
    for (const auto &row : rep.entries()) {
        for (const auto &x : row) {
            if (x.det_power() > 0 && !x.numerator().is_zero()) {
                for (std::size_t i = 0; i < space.size(); ++i) {
                    used[i] = used[i] || space.variables()[i].j.degree() == 1;
                }
            }
            for (const auto &t : x.numerator().terms()) {
                for (std::size_t i = 0; i < t.exponents.size(); ++i) {
                    used[i] = used[i] || t.exponents[i] > 0;
                }
            }
        }
    }
    int order = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (used[i]) {
            order = std::max(order, space.variables()[i].j.degree());
        }
    }
    return order;
}

extension_report extension_order(const representation &rep)
{
    const auto weights = rep_weights(rep);
    for (std::size_t i = 0; i < rep.size(); ++i) {
        for (std::size_t j = 0; j < rep.size(); ++j) {
            const int expected = weights[j] - weights[i];
            if (!is_homogeneous(rep.entry(i, j), expected)) {
                throw precondition_error("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1)
                                         + ") is not homogeneous of degree " + std::to_string(expected));
            }
        }
    }
    const auto [lo, hi] = std::minmax_element(weights.begin(), weights.end());
    extension_report report;
    report.alpha0 = *hi - *lo + 1;
    report.factoring_order = factoring_order(rep);
    report.bound_holds = report.factoring_order <= report.alpha0;
    return report;
}

representation rep_lift(const representation &rep, int c_prime)
{
    if (c_prime < rep.order()) {
        throw precondition_error("cannot lift a representation of K^(" + std::to_string(rep.order()) + ") to K^("
                                 + std::to_string(c_prime) + ")");
    }
    const auto &from = *rep.space();
    const auto to = coordinate_space::get(rep.dim(), c_prime);
    std::vector<std::size_t> target;
    for (const auto &v : from.variables()) {
        target.push_back(*to->index_of(v));
    }
    coord_matrix entries;
    for (const auto &row : rep.entries()) {
        std::vector<coord_element> r;
        for (const auto &x : row) {
            std::vector<ring_element::term> terms;
            for (const auto &t : x.numerator().terms()) {
                ring_monomial m(to->size(), 0);
                for (std::size_t i = 0; i < t.exponents.size(); ++i) {
                    m[target[i]] = t.exponents[i];
                }
                terms.push_back({std::move(m), t.coef});
            }
            r.emplace_back(to, ring_element::from_terms(to->ring(), std::move(terms)), x.det_power());
        }
        entries.push_back(std::move(r));
    }
    return representation(rep.dim(), c_prime, std::move(entries), rep.weights());
}

} // namespace discjet
