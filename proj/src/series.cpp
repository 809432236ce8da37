#include <discjet/series.hpp>

#include <algorithm>
#include <map>

#include <discjet/errors.hpp>

namespace discjet
{

truncated_series::truncated_series(std::size_t dim, int order, ring_ptr ring)
    : dim_(dim), order_(order), ring_(std::move(ring))
{
    if (order < 0) {
        throw precondition_error("truncation order must be nonnegative");
    }
    if (dim > multi_index::max_dim) {
        throw precondition_error("series dimension exceeds the supported maximum");
    }
}

truncated_series truncated_series::variable(std::size_t dim, int order, ring_ptr ring, std::size_t k)
{
    truncated_series s(dim, order, ring);
    s.add_term(multi_index::unit(dim, k), ring_element(ring, 1L));
    return s;
}

truncated_series truncated_series::constant(std::size_t dim, int order, const ring_element &value)
{
    truncated_series s(dim, order, value.ring());
    s.add_term(multi_index(dim), value);
    return s;
}

truncated_series truncated_series::monomial(std::size_t dim, int order, const multi_index &j,
                                            const ring_element &coef)
{
    truncated_series s(dim, order, coef.ring());
    s.add_term(j, coef);
    return s;
}

ring_element truncated_series::coefficient(const multi_index &j) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), j,
                               [](const term &t, const multi_index &key) { return graded_lex_less(t.first, key); });
    if (it != terms_.end() && it->first == j) {
        return it->second;
    }
    return ring_element(ring_);
}

std::optional<int> truncated_series::m_order() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.front().first.degree();
}

int truncated_series::degree() const
{
    return terms_.empty() ? -1 : terms_.back().first.degree();
}

void truncated_series::add_term(const multi_index &j, const ring_element &coef)
{
    if (j.dim() != dim_) {
        throw shape_mismatch("multi-index " + j.to_string() + " does not match series dimension "
                             + std::to_string(dim_));
    }
    if (!same_ring(coef.ring(), ring_)) {
        throw shape_mismatch("coefficient ring does not match series ring");
    }
    if (j.degree() > order_ || coef.is_zero()) {
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), j,
                               [](const term &t, const multi_index &key) { return graded_lex_less(t.first, key); });
    if (it != terms_.end() && it->first == j) {
        it->second += coef;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    } else {
        terms_.insert(it, term{j, coef});
    }
}

void truncated_series::set_coefficient(const multi_index &j, const ring_element &coef)
{
    add_term(j, coef - coefficient(j));
}

truncated_series truncated_series::truncate(int c) const
{
    truncated_series s(dim_, c, ring_);
    for (const auto &t : terms_) {
        if (t.first.degree() > c) {
            break;
        }
        s.terms_.push_back(t);
    }
    return s;
}

truncated_series truncated_series::lift(int c) const
{
    if (c < order_) {
        throw precondition_error("lift target order " + std::to_string(c) + " is below the series order "
                                 + std::to_string(order_));
    }
    truncated_series s(*this);
    s.order_ = c;
    return s;
}

truncated_series truncated_series::homogeneous_part(int d) const
{
    truncated_series s(dim_, order_, ring_);
    for (const auto &t : terms_) {
        if (t.first.degree() == d) {
            s.terms_.push_back(t);
        }
    }
    return s;
}

truncated_series truncated_series::derivative(std::size_t k) const
{
    if (k >= dim_) {
        throw shape_mismatch("derivative index out of range");
    }
    // Order stays c: d/dt_k maps m^{c+1} into m^c, so only degrees <= c-1 are exact,
    // but callers multiply by something in m (derivations of Lie K) or truncate afterwards.
    std::map<multi_index, ring_element, graded_lex> acc;
    for (const auto &[j, coef] : terms_) {
        if (j[k] == 0) {
            continue;
        }
        multi_index jj = j;
        jj.set(k, j[k] - 1);
        acc.emplace(jj, coef * rational(j[k]));
    }
    truncated_series s(dim_, order_, ring_);
    for (auto &[j, c] : acc) {
        s.terms_.push_back({j, std::move(c)});
    }
    return s;
}

void truncated_series::check_shape(const truncated_series &other) const
{
    if (dim_ != other.dim_ || order_ != other.order_) {
        throw shape_mismatch("series shape mismatch: (dim " + std::to_string(dim_) + ", order "
                             + std::to_string(order_) + ") vs (dim " + std::to_string(other.dim_) + ", order "
                             + std::to_string(other.order_) + ")");
    }
    if (!same_ring(ring_, other.ring_)) {
        throw shape_mismatch("base ring descriptor mismatch");
    }
}

namespace
{

std::vector<truncated_series::term> merge_terms(const std::vector<truncated_series::term> &a,
                                                const std::vector<truncated_series::term> &b, bool subtract)
{
    std::vector<truncated_series::term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && graded_lex_less(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || graded_lex_less(b[j].first, a[i].first)) {
            out.push_back(subtract ? truncated_series::term{b[j].first, -b[j].second} : b[j]);
            ++j;
        } else {
            auto c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero()) {
                out.push_back({a[i].first, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

truncated_series &truncated_series::operator+=(const truncated_series &other)
{
    check_shape(other);
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

truncated_series &truncated_series::operator-=(const truncated_series &other)
{
    check_shape(other);
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

truncated_series operator*(const truncated_series &a, const truncated_series &b)
{
    a.check_shape(b);
    truncated_series out(a.dim_, a.order_, a.ring_);
    if (a.terms_.empty() || b.terms_.empty()) {
        return out;
    }
    std::map<multi_index, ring_element, graded_lex> acc;
    for (const auto &[ja, ca] : a.terms_) {
        const int room = a.order_ - ja.degree();
        if (room < 0) {
            break;
        }
        for (const auto &[jb, cb] : b.terms_) {
            if (jb.degree() > room) {
                break;
            }
            auto prod = ca * cb;
            if (prod.is_zero()) {
                continue;
            }
            auto key = ja + jb;
            auto it = acc.find(key);
            if (it == acc.end()) {
                acc.emplace(key, std::move(prod));
            } else {
                it->second += prod;
            }
        }
    }
    out.terms_.reserve(acc.size());
    for (auto &[j, c] : acc) {
        if (!c.is_zero()) {
            out.terms_.push_back({j, std::move(c)});
        }
    }
    return out;
}

truncated_series truncated_series::operator-() const
{
    truncated_series s(*this);
    for (auto &t : s.terms_) {
        t.second = -t.second;
    }
    return s;
}

truncated_series truncated_series::scaled(const ring_element &c) const
{
    if (!same_ring(c.ring(), ring_)) {
        throw shape_mismatch("scalar ring does not match series ring");
    }
    truncated_series s(dim_, order_, ring_);
    for (const auto &[j, coef] : terms_) {
        auto p = coef * c;
        if (!p.is_zero()) {
            s.terms_.push_back({j, std::move(p)});
        }
    }
    return s;
}

truncated_series truncated_series::scaled(const rational &q) const
{
    truncated_series s(dim_, order_, ring_);
    if (q == 0) {
        return s;
    }
    s.terms_ = terms_;
    for (auto &t : s.terms_) {
        t.second *= q;
    }
    return s;
}

bool operator==(const truncated_series &a, const truncated_series &b)
{
    if (a.dim_ != b.dim_ || a.order_ != b.order_ || !same_ring(a.ring_, b.ring_)
        || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) {
            return false;
        }
    }
    return true;
}

std::string truncated_series::to_string(const std::string &var) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[j, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (j[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += dim_ == 1 ? var : var + std::to_string(i + 1);
            if (j[i] > 1) {
                mono += '^' + std::to_string(j[i]);
            }
        }
        if (!s.empty()) {
            s += " + ";
        }
        const auto cs = c.to_string();
        if (mono.empty()) {
            s += cs;
        } else if (c.is_one()) {
            s += mono;
        } else if (c.terms().size() == 1) {
            s += cs + '*' + mono;
        } else {
            s += '(' + cs + ")*" + mono;
        }
    }
    return s;
}

truncated_series series_add(const truncated_series &f, const truncated_series &g)
{
    return f + g;
}

truncated_series series_sub(const truncated_series &f, const truncated_series &g)
{
    return f - g;
}

truncated_series series_mul(const truncated_series &f, const truncated_series &g)
{
    return f * g;
}

truncated_series series_truncate(const truncated_series &f, int c)
{
    if (c < 0) {
        throw precondition_error("truncation order must be nonnegative");
    }
    return f.truncate(c);
}

series_tuple evaluate_tuple_at(std::span<const truncated_series> f, std::span<const truncated_series> g, int order)
{
    if (g.empty()) {
        throw shape_mismatch("substitution needs at least one input series");
    }
    const auto &ring = g.front().ring();
    const auto out_dim = g.front().dim();
    series_tuple inputs;
    inputs.reserve(g.size());
    int min_m_order = order + 1;
    for (const auto &gk : g) {
        if (gk.dim() != out_dim || !same_ring(gk.ring(), ring)) {
            throw shape_mismatch("substituted series disagree in dimension or ring");
        }
        inputs.push_back(gk.order() >= order ? gk.truncate(order) : gk.lift(order));
        min_m_order = std::min(min_m_order, inputs.back().m_order().value_or(order + 1));
    }
    for (const auto &fi : f) {
        if (fi.dim() != g.size()) {
            throw shape_mismatch("substitution into a series in " + std::to_string(fi.dim()) + " variables needs "
                                 + std::to_string(fi.dim()) + " inputs, got " + std::to_string(g.size()));
        }
        if (!same_ring(fi.ring(), ring)) {
            throw shape_mismatch("base ring descriptor mismatch in substitution");
        }
    }

    // value(J) = prod_k g_k^{j_k}, built from value(J - e_k) * g_k with k the first used variable.
    std::map<multi_index, truncated_series, graded_lex> memo;
    memo.emplace(multi_index(g.size()), truncated_series::constant(out_dim, order, ring_element(ring, 1L)));
    auto value = [&](const multi_index &j, auto &self) -> const truncated_series & {
        auto it = memo.find(j);
        if (it != memo.end()) {
            return it->second;
        }
        std::size_t k = 0;
        while (j[k] == 0) {
            ++k;
        }
        const auto &prev = self(j - multi_index::unit(g.size(), k), self);
        auto prod = prev * inputs[k];
        return memo.emplace(j, std::move(prod)).first->second;
    };

    series_tuple out;
    out.reserve(f.size());
    for (const auto &fi : f) {
        truncated_series acc(out_dim, order, ring);
        for (const auto &[j, c] : fi.terms()) {
            if (min_m_order > 0 && static_cast<long>(j.degree()) * min_m_order > order) {
                break;
            }
            acc += value(j, value).scaled(c);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

truncated_series evaluate_at(const truncated_series &f, std::span<const truncated_series> g, int order)
{
    return evaluate_tuple_at(std::span<const truncated_series>(&f, 1), g, order).front();
}

truncated_series series_substitute(const truncated_series &f, std::span<const truncated_series> g, int work_order)
{
    int result_order = f.order();
    for (const auto &gk : g) {
        if (!gk.constant_term().is_nilpotent()) {
            throw precondition_error("non-nilpotent constant term " + gk.constant_term().to_string()
                                     + ": substitution is not continuous");
        }
        result_order = std::min(result_order, gk.order());
    }
    if (work_order < result_order) {
        throw precondition_error("working order " + std::to_string(work_order) + " is below the target order "
                                 + std::to_string(result_order));
    }
    return evaluate_at(f, g, work_order).truncate(result_order);
}

} // namespace discjet
