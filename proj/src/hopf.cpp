#include <discjet/hopf.hpp>

#include <algorithm>
#include <map>
#include <mutex>

#include <discjet/errors.hpp>

namespace discjet
{

namespace
{

std::string variable_name(const std::string &prefix, std::size_t n, const coord_variable &v)
{
    if (n == 1) {
        return prefix + std::to_string(v.j.degree());
    }
    return prefix + std::to_string(v.k + 1) + "_" + v.j.to_string();
}

// Moves generator i of p's ring to generator offsets[i / block] + i % block of target.
ring_element embed(const ring_element &p, const ring_ptr &target, std::size_t block,
                   std::span<const std::size_t> offsets)
{
    std::vector<ring_element::term> terms;
    terms.reserve(p.terms().size());
    for (const auto &t : p.terms()) {
        ring_monomial m(target->generators(), 0);
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i]) {
                m[offsets[i / block] + i % block] = t.exponents[i];
            }
        }
        terms.push_back({std::move(m), t.coef});
    }
    return ring_element::from_terms(target, std::move(terms));
}

void check_space(const coordinate_space_ptr &a, const coordinate_space_ptr &b)
{
    if (a != b && (a->dim() != b->dim() || a->order() != b->order())) {
        throw shape_mismatch("coordinate ring elements for different (n, c)");
    }
}

ring_element substitute(const ring_element &p, const std::vector<ring_element> &values, const ring_ptr &target)
{
    return evaluate_polynomial<ring_element>(p, values, [&](const rational &q) { return ring_element(target, q); });
}

std::vector<ring_element> point_values(const coordinate_space &space, const jet_automorphism &point)
{
    if (point.dim() != space.dim() || point.order() != space.order()) {
        throw shape_mismatch("evaluation point has the wrong dimension or order");
    }
    if (!jet_classify(point).in_K) {
        throw precondition_error("coordinate functions are evaluated on K (zero constant terms)");
    }
    std::vector<ring_element> values;
    values.reserve(space.size());
    for (const auto &v : space.variables()) {
        values.push_back(point.coefficient(v.k, v.j));
    }
    return values;
}

bool is_linear(const coord_variable &v)
{
    return v.j.degree() == 1;
}

rational counit_value(const coord_variable &v)
{
    return is_linear(v) && v.j.exponents()[v.k] == 1 ? rational(1) : rational(0);
}

} // namespace

bool coord_variable_less(const coord_variable &a, const coord_variable &b) noexcept
{
    if (a.k != b.k) {
        return a.k < b.k;
    }
    return graded_lex_less(a.j, b.j);
}

int grading_degree(const coord_variable &v)
{
    return v.j.degree() - 1;
}

coordinate_space::coordinate_space(std::size_t n, int c) : n_(n), c_(c), det_(base_ring::rationals())
{
    if (n < 1 || c < 1) {
        throw precondition_error("coordinate ring needs n >= 1 and c >= 1");
    }
    const auto monomials = monomials_in_range(n, 1, c);
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto &j : monomials) {
            variables_.push_back({k, j});
            degrees_.push_back(j.degree() - 1);
        }
    }
    auto names = [&](const std::string &prefix) {
        std::vector<std::string> out;
        for (const auto &v : variables_) {
            out.push_back(variable_name(prefix, n, v));
        }
        return out;
    };
    ring_ = base_ring::symbolic(names("a"));
    auto bc = names("b");
    for (auto &s : names("c")) {
        bc.push_back(std::move(s));
    }
    tensor_ring_ = base_ring::symbolic(std::move(bc));
    auto xyz = names("x");
    for (const char *prefix : {"y", "z"}) {
        for (auto &s : names(prefix)) {
            xyz.push_back(std::move(s));
        }
    }
    triple_ring_ = base_ring::symbolic(std::move(xyz));

    ring_matrix lin(n, std::vector<ring_element>(n, ring_element(ring_)));
    for (std::size_t i = 0; i < size(); ++i) {
        if (is_linear(variables_[i])) {
            const auto &e = variables_[i].j.exponents();
            const auto col = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
            lin[variables_[i].k][col] = variable(i);
        }
    }
    det_ = determinant(lin);
}

std::shared_ptr<const coordinate_space> coordinate_space::get(std::size_t n, int c)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, int>, std::shared_ptr<const coordinate_space>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[{n, c}];
    if (!slot) {
        slot.reset(new coordinate_space(n, c));
    }
    return slot;
}

std::optional<std::size_t> coordinate_space::index_of(const coord_variable &v) const
{
    auto it = std::lower_bound(variables_.begin(), variables_.end(), v, coord_variable_less);
    if (it == variables_.end() || !(*it == v)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - variables_.begin());
}

ring_element coordinate_space::variable(std::size_t index) const
{
    return ring_element::generator(ring_, index);
}

ring_element coordinate_space::tensor_variable(int alphabet, std::size_t index) const
{
    return ring_element::generator(tensor_ring_, static_cast<std::size_t>(alphabet) * size() + index);
}

ring_element coordinate_space::triple_variable(int alphabet, std::size_t index) const
{
    return ring_element::generator(triple_ring_, static_cast<std::size_t>(alphabet) * size() + index);
}

ring_element coordinate_space::tensor_det(int alphabet) const
{
    const std::size_t offsets[] = {static_cast<std::size_t>(alphabet) * size()};
    return embed(det_, tensor_ring_, size(), offsets);
}

series_tuple coordinate_space::generic_point(const ring_ptr &ring, std::size_t offset) const
{
    series_tuple out(n_, truncated_series(n_, c_, ring));
    for (std::size_t i = 0; i < size(); ++i) {
        out[variables_[i].k].add_term(variables_[i].j, ring_element::generator(ring, offset + i));
    }
    return out;
}

int coordinate_space::monomial_degree(const ring_monomial &m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        d += m[i] * degrees_[i % size()];
    }
    return d;
}

coord_element::coord_element(coordinate_space_ptr space, ring_element numerator, unsigned det_power)
    : space_(std::move(space)), numerator_(std::move(numerator)), det_power_(det_power)
{
    if (!same_ring(numerator_.ring(), space_->ring())) {
        throw shape_mismatch("numerator is not a polynomial in the coordinates of this space");
    }
}

coord_element coord_element::constant(coordinate_space_ptr space, const rational &value)
{
    auto ring = space->ring();
    return coord_element(std::move(space), ring_element(ring, value));
}

coord_element coord_element::variable(coordinate_space_ptr space, const coord_variable &v)
{
    const auto index = space->index_of(v);
    if (!index) {
        throw precondition_error("coordinate a^" + std::to_string(v.k + 1) + "_" + v.j.to_string()
                                 + " out of range");
    }
    auto x = space->variable(*index);
    return coord_element(std::move(space), std::move(x));
}

coord_element &coord_element::operator+=(const coord_element &other)
{
    check_space(space_, other.space_);
    if (det_power_ == other.det_power_) {
        numerator_ += other.numerator_;
    } else if (det_power_ > other.det_power_) {
        numerator_ += other.numerator_ * space_->det().pow(det_power_ - other.det_power_);
    } else {
        numerator_ = numerator_ * space_->det().pow(other.det_power_ - det_power_) + other.numerator_;
        det_power_ = other.det_power_;
    }
    return *this;
}

coord_element &coord_element::operator-=(const coord_element &other)
{
    coord_element neg(other.space_, -other.numerator_, other.det_power_);
    return *this += neg;
}

coord_element operator*(const coord_element &a, const coord_element &b)
{
    check_space(a.space_, b.space_);
    return coord_element(a.space_, a.numerator_ * b.numerator_, a.det_power_ + b.det_power_);
}

bool operator==(const coord_element &a, const coord_element &b)
{
    if (a.space_->dim() != b.space_->dim() || a.space_->order() != b.space_->order()) {
        return false;
    }
    if (a.det_power_ == b.det_power_) {
        return a.numerator_ == b.numerator_;
    }
    const auto &det = a.space_->det();
    if (a.det_power_ > b.det_power_) {
        return a.numerator_ == b.numerator_ * det.pow(a.det_power_ - b.det_power_);
    }
    return a.numerator_ * det.pow(b.det_power_ - a.det_power_) == b.numerator_;
}

std::string coord_element::to_string() const
{
    if (det_power_ == 0) {
        return numerator_.to_string();
    }
    return "(" + numerator_.to_string() + ") / det" + (det_power_ > 1 ? "^" + std::to_string(det_power_) : "");
}

tensor_element::tensor_element(coordinate_space_ptr space, ring_element numerator, unsigned det_left,
                               unsigned det_right)
    : space_(std::move(space)), numerator_(std::move(numerator)), det_left_(det_left), det_right_(det_right)
{
    if (!same_ring(numerator_.ring(), space_->tensor_ring())) {
        throw shape_mismatch("numerator is not a polynomial in the tensor coordinates of this space");
    }
}

bool operator==(const tensor_element &a, const tensor_element &b)
{
    if (a.space_->dim() != b.space_->dim() || a.space_->order() != b.space_->order()) {
        return false;
    }
    const unsigned left = std::max(a.det_left_, b.det_left_), right = std::max(a.det_right_, b.det_right_);
    auto scale = [&](const tensor_element &x) {
        return x.numerator_ * a.space_->tensor_det(0).pow(left - x.det_left_)
               * a.space_->tensor_det(1).pow(right - x.det_right_);
    };
    return scale(a) == scale(b);
}

std::string tensor_element::to_string() const
{
    if (det_left_ == 0 && det_right_ == 0) {
        return numerator_.to_string();
    }
    std::string den;
    if (det_left_) {
        den += "det_b^" + std::to_string(det_left_);
    }
    if (det_right_) {
        den += (den.empty() ? "" : " * ") + std::string("det_c^") + std::to_string(det_right_);
    }
    return "(" + numerator_.to_string() + ") / (" + den + ")";
}

const coord_table<tensor_element> &coproduct(std::size_t n, int c)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, int>, std::unique_ptr<coord_table<tensor_element>>> cache;
    auto space = coordinate_space::get(n, c);
    std::lock_guard lock(mutex);
    auto &slot = cache[{n, c}];
    if (!slot) {
        const auto &t = space->tensor_ring();
        const auto outer = space->generic_point(t, 0);
        const auto inner = space->generic_point(t, space->size());
        const auto composite = compose_tuples(outer, inner, c);
        auto table = std::make_unique<coord_table<tensor_element>>();
        for (const auto &v : space->variables()) {
            table->emplace_back(v, tensor_element(space, composite[v.k].coefficient(v.j)));
        }
        slot = std::move(table);
    }
    return *slot;
}

const tensor_element &coproduct_of(std::size_t n, int c, const coord_variable &v)
{
    const auto index = coordinate_space::get(n, c)->index_of(v);
    if (!index) {
        throw precondition_error("coordinate a^" + std::to_string(v.k + 1) + "_" + v.j.to_string()
                                 + " out of range");
    }
    return coproduct(n, c)[*index].second;
}

coord_table<rational> counit(std::size_t n, int c)
{
    coord_table<rational> out;
    for (const auto &v : coordinate_space::get(n, c)->variables()) {
        out.emplace_back(v, counit_value(v));
    }
    return out;
}

const series_tuple &generic_inverse(std::size_t n, int c)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, int>, std::unique_ptr<series_tuple>> cache;
    auto space = coordinate_space::get(n, c);
    std::lock_guard lock(mutex);
    auto &slot = cache[{n, c}];
    if (slot) {
        return *slot;
    }
    std::vector<std::string> names(space->ring()->names().begin(), space->ring()->names().end());
    names.push_back("delta");
    const auto ring = base_ring::symbolic(names);
    const auto delta = ring_element::generator(ring, space->size());
    const auto k = space->generic_point(ring);
    auto a_inv = adjugate(linear_part_of_tuple(k));
    for (auto &row : a_inv) {
        for (auto &x : row) {
            x *= delta;
        }
    }
    const auto lin_inv = linear_tuple(a_inv, c);
    auto u = compose_tuples(lin_inv, k, c);
    // delta * det = 1 makes the linear part of A^{-1} o k the identity.
    for (std::size_t i = 0; i < n; ++i) {
        truncated_series fixed = truncated_series::variable(n, c, ring, i);
        for (const auto &[j, coef] : u[i].terms()) {
            if (j.degree() >= 2) {
                fixed.add_term(j, coef);
            }
        }
        u[i] = std::move(fixed);
    }
    slot = std::make_unique<series_tuple>(compose_tuples(invert_unipotent_tuple(u, c), lin_inv, c));
    return *slot;
}

coord_element coord_from_delta(const coordinate_space_ptr &space, const ring_element &p)
{
    const auto delta_index = space->size();
    if (p.ring()->generators() != delta_index + 1) {
        throw shape_mismatch("polynomial is not over the coordinates and delta");
    }
    unsigned top = 0;
    for (const auto &t : p.terms()) {
        top = std::max<unsigned>(top, t.exponents[delta_index]);
    }
    std::vector<ring_element> det_powers{ring_element(space->ring(), 1L)};
    while (det_powers.size() <= top) {
        det_powers.push_back(det_powers.back() * space->det());
    }
    ring_element numerator(space->ring());
    for (const auto &t : p.terms()) {
        ring_monomial m(t.exponents.begin(), t.exponents.end() - 1);
        numerator += ring_element::monomial(space->ring(), std::move(m), t.coef) * det_powers[top - t.exponents[delta_index]];
    }
    return coord_element(space, std::move(numerator), top);
}

const coord_table<coord_element> &antipode(std::size_t n, int c)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, int>, std::unique_ptr<coord_table<coord_element>>> cache;
    auto space = coordinate_space::get(n, c);
    const auto &inverse = generic_inverse(n, c);
    std::lock_guard lock(mutex);
    auto &slot = cache[{n, c}];
    if (!slot) {
        auto table = std::make_unique<coord_table<coord_element>>();
        for (const auto &v : space->variables()) {
            table->emplace_back(v, coord_from_delta(space, inverse[v.k].coefficient(v.j)));
        }
        slot = std::move(table);
    }
    return *slot;
}

bool is_homogeneous(const coord_element &x, int degree)
{
    return std::all_of(x.numerator().terms().begin(), x.numerator().terms().end(),
                       [&](const auto &t) { return x.space()->monomial_degree(t.exponents) == degree; });
}

bool is_homogeneous(const tensor_element &x, int degree)
{
    return std::all_of(x.numerator().terms().begin(), x.numerator().terms().end(),
                       [&](const auto &t) { return x.space()->monomial_degree(t.exponents) == degree; });
}

coord_element specialize_unipotent(const coord_element &x)
{
    const auto &space = *x.space();
    std::vector<ring_element> values;
    for (std::size_t i = 0; i < space.size(); ++i) {
        const auto &v = space.variables()[i];
        values.push_back(is_linear(v) ? ring_element(space.ring(), counit_value(v)) : space.variable(i));
    }
    return coord_element(x.space(), substitute(x.numerator(), values, space.ring()));
}

tensor_element specialize_unipotent(const tensor_element &x)
{
    const auto &space = *x.space();
    std::vector<ring_element> values;
    for (int alphabet = 0; alphabet < 2; ++alphabet) {
        for (std::size_t i = 0; i < space.size(); ++i) {
            const auto &v = space.variables()[i];
            values.push_back(is_linear(v) ? ring_element(space.tensor_ring(), counit_value(v))
                                          : space.tensor_variable(alphabet, i));
        }
    }
    return tensor_element(x.space(), substitute(x.numerator(), values, space.tensor_ring()));
}

ring_element evaluate(const coord_element &x, const jet_automorphism &point)
{
    const auto values = point_values(*x.space(), point);
    auto num = substitute(x.numerator(), values, point.ring());
    if (x.det_power() == 0) {
        return num;
    }
    return num * ring_invert(determinant(point.linear_part())).pow(x.det_power());
}

ring_element evaluate(const tensor_element &x, const jet_automorphism &left, const jet_automorphism &right)
{
    if (!same_ring(left.ring(), right.ring())) {
        throw shape_mismatch("tensor evaluated at points over different rings");
    }
    auto values = point_values(*x.space(), left);
    for (auto &r : point_values(*x.space(), right)) {
        values.push_back(std::move(r));
    }
    auto num = substitute(x.numerator(), values, left.ring());
    if (x.det_left()) {
        num *= ring_invert(determinant(left.linear_part())).pow(x.det_left());
    }
    if (x.det_right()) {
        num *= ring_invert(determinant(right.linear_part())).pow(x.det_right());
    }
    return num;
}

bool coassociativity_holds(std::size_t n, int c, const coord_variable &v)
{
    const auto space = coordinate_space::get(n, c);
    const auto &table = coproduct(n, c);
    const auto &triple = space->triple_ring();
    const auto size = space->size();
    const auto &delta_v = coproduct_of(n, c, v).numerator();

    const std::size_t xy[] = {0, size}, yz[] = {size, 2 * size};
    std::vector<ring_element> left_values, right_values;
    for (std::size_t i = 0; i < size; ++i) {
        left_values.push_back(embed(table[i].second.numerator(), triple, size, xy));
        right_values.push_back(space->triple_variable(0, i));
    }
    for (std::size_t i = 0; i < size; ++i) {
        left_values.push_back(space->triple_variable(2, i));
        right_values.push_back(embed(table[i].second.numerator(), triple, size, yz));
    }
    return substitute(delta_v, left_values, triple) == substitute(delta_v, right_values, triple);
}

bool counit_law_holds(std::size_t n, int c, const coord_variable &v)
{
    const auto space = coordinate_space::get(n, c);
    const auto &ring = space->ring();
    const auto &delta_v = coproduct_of(n, c, v).numerator();
    const auto expected = space->variable(*space->index_of(v));
    std::vector<ring_element> eps_values, identity_values;
    for (std::size_t i = 0; i < space->size(); ++i) {
        eps_values.emplace_back(ring, counit_value(space->variables()[i]));
        identity_values.push_back(space->variable(i));
    }
    auto left = eps_values;
    left.insert(left.end(), identity_values.begin(), identity_values.end());
    auto right = identity_values;
    right.insert(right.end(), eps_values.begin(), eps_values.end());
    return substitute(delta_v, left, ring) == expected && substitute(delta_v, right, ring) == expected;
}

bool antipode_law_holds(std::size_t n, int c, const coord_variable &v)
{
    const auto space = coordinate_space::get(n, c);
    const auto &s = antipode(n, c);
    const auto &delta_v = coproduct_of(n, c, v).numerator();
    std::vector<coord_element> antipodes, identity;
    for (std::size_t i = 0; i < space->size(); ++i) {
        antipodes.push_back(s[i].second);
        identity.emplace_back(space, space->variable(i));
    }
    auto make = [&](const rational &q) { return coord_element::constant(space, q); };
    auto left = antipodes;
    left.insert(left.end(), identity.begin(), identity.end());
    auto right = identity;
    right.insert(right.end(), antipodes.begin(), antipodes.end());
    const auto expected = make(counit_value(v));
    return evaluate_polynomial<coord_element>(delta_v, left, make) == expected
           && evaluate_polynomial<coord_element>(delta_v, right, make) == expected;
}

} // namespace discjet
