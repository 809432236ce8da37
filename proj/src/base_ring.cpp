#include <discjet/base_ring.hpp>

#include <algorithm>
#include <map>

#include <discjet/errors.hpp>

namespace discjet
{

ring_ptr base_ring::rationals()
{
    static const ring_ptr q(new base_ring());
    return q;
}

ring_ptr base_ring::nilpotent(std::vector<int> orders)
{
    for (int n : orders) {
        if (n < 2) {
            throw precondition_error("nilpotency order must be at least 2, got " + std::to_string(n));
        }
    }
    if (orders.empty()) {
        return rationals();
    }
    auto *r = new base_ring();
    r->orders_ = std::move(orders);
    return ring_ptr(r);
}

ring_ptr base_ring::symbolic(std::vector<std::string> names)
{
    auto *r = new base_ring();
    r->names_ = std::move(names);
    r->symbolic_ = true;
    return ring_ptr(r);
}

int base_ring::nilpotency_index() const
{
    if (symbolic_) {
        throw precondition_error("symbolic ring has no finite nilpotency index");
    }
    int nu = 1;
    for (int n : orders_) {
        nu += n - 1;
    }
    return nu;
}

std::string base_ring::generator_name(std::size_t i) const
{
    return symbolic_ ? names_.at(i) : "e" + std::to_string(i + 1);
}

bool same_ring(const ring_ptr &a, const ring_ptr &b) noexcept
{
    return a == b || *a == *b;
}

bool ring_monomial_less(const ring_monomial &a, const ring_monomial &b) noexcept
{
    unsigned da = 0, db = 0;
    for (auto e : a) {
        da += e;
    }
    for (auto e : b) {
        db += e;
    }
    if (da != db) {
        return da < db;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] > b[i];
        }
    }
    return false;
}

namespace
{

struct monomial_cmp
{
    bool operator()(const ring_monomial &a, const ring_monomial &b) const noexcept { return ring_monomial_less(a, b); }
};

bool is_empty_monomial(const ring_monomial &m) noexcept
{
    return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

// Merge-add two sorted term lists, scaling the second by sign.
std::vector<ring_element::term> merge(const std::vector<ring_element::term> &a,
                                      const std::vector<ring_element::term> &b, int sign)
{
    std::vector<ring_element::term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && ring_monomial_less(a[i].exponents, b[j].exponents))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || ring_monomial_less(b[j].exponents, a[i].exponents)) {
            out.push_back(b[j++]);
            if (sign < 0) {
                out.back().coef = -out.back().coef;
            }
        } else {
            rational c = sign < 0 ? rational(a[i].coef - b[j].coef) : rational(a[i].coef + b[j].coef);
            if (c != 0) {
                out.push_back({a[i].exponents, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

ring_element::ring_element(ring_ptr ring) : ring_(std::move(ring)) {}

ring_element::ring_element(ring_ptr ring, const rational &value) : ring_(std::move(ring))
{
    if (value != 0) {
        terms_.push_back({ring_monomial(ring_->generators(), 0), value});
        terms_.back().coef.canonicalize();
    }
}

ring_element ring_element::generator(ring_ptr ring, std::size_t i)
{
    ring_monomial m(ring->generators(), 0);
    m.at(i) = 1;
    return monomial(std::move(ring), std::move(m), rational(1));
}

ring_element ring_element::monomial(ring_ptr ring, ring_monomial exponents, const rational &coef)
{
    std::vector<term> t;
    t.push_back({std::move(exponents), coef});
    return from_terms(std::move(ring), std::move(t));
}

ring_element ring_element::from_terms(ring_ptr ring, std::vector<term> terms)
{
    ring_element r(std::move(ring));
    const auto gens = r.ring_->generators();
    const auto orders = r.ring_->orders();
    std::map<ring_monomial, rational, monomial_cmp> acc;
    for (auto &t : terms) {
        if (t.exponents.size() != gens) {
            throw shape_mismatch("ring monomial has " + std::to_string(t.exponents.size()) + " exponents, ring has "
                                 + std::to_string(gens) + " generators");
        }
        bool vanishes = false;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            if (t.exponents[i] >= orders[i]) {
                vanishes = true;
            }
        }
        if (vanishes || t.coef == 0) {
            continue;
        }
        t.coef.canonicalize();
        acc[std::move(t.exponents)] += t.coef;
    }
    for (auto &[m, c] : acc) {
        if (c != 0) {
            r.terms_.push_back({m, c});
        }
    }
    return r;
}

rational ring_element::rational_part() const
{
    if (!terms_.empty() && is_empty_monomial(terms_.front().exponents)) {
        return terms_.front().coef;
    }
    return rational(0);
}

bool ring_element::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && is_empty_monomial(terms_.front().exponents));
}

bool ring_element::is_one() const noexcept
{
    return is_constant() && !terms_.empty() && terms_.front().coef == 1;
}

bool ring_element::is_nilpotent() const noexcept
{
    if (ring_->is_symbolic()) {
        return is_zero();
    }
    return rational_part() == 0;
}

bool ring_element::is_unit() const noexcept
{
    if (ring_->is_symbolic()) {
        return is_constant() && !is_zero();
    }
    return rational_part() != 0;
}

void ring_element::check_same_ring(const ring_element &other) const
{
    if (!same_ring(ring_, other.ring_)) {
        throw shape_mismatch("base ring descriptor mismatch");
    }
}

ring_element &ring_element::operator+=(const ring_element &other)
{
    check_same_ring(other);
    if (other.terms_.empty()) {
        return *this;
    }
    if (terms_.empty()) {
        terms_ = other.terms_;
        return *this;
    }
    terms_ = merge(terms_, other.terms_, 1);
    return *this;
}

ring_element &ring_element::operator-=(const ring_element &other)
{
    check_same_ring(other);
    if (other.terms_.empty()) {
        return *this;
    }
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
}

ring_element &ring_element::operator*=(const ring_element &other)
{
    *this = *this * other;
    return *this;
}

ring_element &ring_element::operator*=(const rational &q)
{
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.coef *= q;
    }
    return *this;
}

ring_element operator*(const ring_element &a, const ring_element &b)
{
    a.check_same_ring(b);
    if (a.terms_.empty() || b.terms_.empty()) {
        return ring_element(a.ring_);
    }
    if (a.is_constant()) {
        return b * a.terms_.front().coef;
    }
    if (b.is_constant()) {
        return a * b.terms_.front().coef;
    }
    const auto orders = a.ring_->orders();
    const auto gens = a.ring_->generators();
    std::map<ring_monomial, rational, monomial_cmp> acc;
    ring_monomial m(gens);
    for (const auto &ta : a.terms_) {
        for (const auto &tb : b.terms_) {
            bool vanishes = false;
            for (std::size_t i = 0; i < gens; ++i) {
                m[i] = static_cast<std::uint16_t>(ta.exponents[i] + tb.exponents[i]);
                if (i < orders.size() && m[i] >= orders[i]) {
                    vanishes = true;
                    break;
                }
            }
            if (vanishes) {
                continue;
            }
            auto [it, inserted] = acc.try_emplace(m, ta.coef * tb.coef);
            if (!inserted) {
                it->second += ta.coef * tb.coef;
            }
        }
    }
    ring_element r(a.ring_);
    r.terms_.reserve(acc.size());
    for (auto &[mono, c] : acc) {
        if (c != 0) {
            r.terms_.push_back({mono, c});
        }
    }
    return r;
}

ring_element ring_element::operator-() const
{
    ring_element r(*this);
    for (auto &t : r.terms_) {
        t.coef = -t.coef;
    }
    return r;
}

ring_element ring_element::inverse() const
{
    if (!is_unit()) {
        throw precondition_error("non-unit: cannot invert " + to_string());
    }
    const rational c = rational_part();
    const rational cinv = 1 / c;
    if (is_constant()) {
        return ring_element(ring_, cinv);
    }
    // a = c(1 + eta) with eta nilpotent; a^{-1} = c^{-1} sum_{i<nu} (-eta)^i.
    ring_element minus_eta = (*this * cinv - ring_element(ring_, 1L)) * rational(-1);
    ring_element sum(ring_, 1L);
    ring_element power(ring_, 1L);
    const int nu = ring_->nilpotency_index();
    for (int i = 1; i < nu; ++i) {
        power *= minus_eta;
        if (power.is_zero()) {
            break;
        }
        sum += power;
    }
    return sum * cinv;
}

ring_element ring_element::pow(unsigned e) const
{
    ring_element result(ring_, 1L);
    ring_element base(*this);
    while (e) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e) {
            base *= base;
        }
    }
    return result;
}

bool operator==(const ring_element &a, const ring_element &b)
{
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coef != b.terms_[i].coef) {
            return false;
        }
    }
    return true;
}

std::string ring_element::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &t : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += ring_->generator_name(i);
            if (t.exponents[i] > 1) {
                mono += '^' + std::to_string(t.exponents[i]);
            }
        }
        const bool negative = t.coef < 0;
        const rational mag = abs(t.coef);
        if (!s.empty()) {
            s += negative ? " - " : " + ";
        } else if (negative) {
            s += '-';
        }
        if (mono.empty()) {
            s += discjet::to_string(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += discjet::to_string(mag) + '*' + mono;
        }
    }
    return s;
}

ring_element ring_add(const ring_element &a, const ring_element &b)
{
    return a + b;
}

ring_element ring_sub(const ring_element &a, const ring_element &b)
{
    return a - b;
}

ring_element ring_mul(const ring_element &a, const ring_element &b)
{
    return a * b;
}

ring_element ring_invert(const ring_element &a)
{
    return a.inverse();
}

namespace
{

ring_matrix minor_of(const ring_matrix &m, std::size_t row, std::size_t col)
{
    ring_matrix out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == row) {
            continue;
        }
        std::vector<ring_element> r;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j != col) {
                r.push_back(m[i][j]);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

ring_element determinant(const ring_matrix &m)
{
    if (m.empty()) {
        throw precondition_error("determinant of an empty matrix");
    }
    const auto n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    if (n == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    }
    ring_element det(m[0][0].ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) {
            continue;
        }
        auto term = m[0][j] * determinant(minor_of(m, 0, j));
        if (j % 2) {
            det -= term;
        } else {
            det += term;
        }
    }
    return det;
}

ring_matrix adjugate(const ring_matrix &m)
{
    const auto n = m.size();
    const auto &ring = m.at(0).at(0).ring();
    ring_matrix adj(n, std::vector<ring_element>(n, ring_element(ring)));
    if (n == 1) {
        adj[0][0] = ring_element(ring, 1L);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto c = determinant(minor_of(m, i, j));
            adj[j][i] = (i + j) % 2 ? -c : c;
        }
    }
    return adj;
}

ring_matrix matrix_inverse(const ring_matrix &m)
{
    const auto det = determinant(m);
    if (!det.is_unit()) {
        throw precondition_error("non-unit linear part: determinant " + det.to_string() + " is not invertible");
    }
    const auto dinv = det.inverse();
    auto adj = adjugate(m);
    for (auto &row : adj) {
        for (auto &x : row) {
            x *= dinv;
        }
    }
    return adj;
}

ring_matrix matrix_product(const ring_matrix &a, const ring_matrix &b)
{
    const auto n = a.size();
    const auto &ring = a.at(0).at(0).ring();
    ring_matrix out(n, std::vector<ring_element>(n, ring_element(ring)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

ring_matrix identity_matrix(const ring_ptr &ring, std::size_t n)
{
    ring_matrix out(n, std::vector<ring_element>(n, ring_element(ring)));
    for (std::size_t i = 0; i < n; ++i) {
        out[i][i] = ring_element(ring, 1L);
    }
    return out;
}

} // namespace discjet
