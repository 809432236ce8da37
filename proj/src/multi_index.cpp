#include <discjet/multi_index.hpp>

#include <algorithm>

#include <discjet/errors.hpp>

namespace discjet
{

multi_index::multi_index(std::size_t dim)
{
    if (dim > max_dim) {
        throw precondition_error("dimension " + std::to_string(dim) + " exceeds the supported maximum "
                                 + std::to_string(max_dim));
    }
    dim_ = static_cast<std::uint8_t>(dim);
}

multi_index::multi_index(std::initializer_list<int> exponents)
    : multi_index(std::span<const int>(exponents.begin(), exponents.size()))
{
}

multi_index::multi_index(std::span<const int> exponents) : multi_index(exponents.size())
{
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        set(i, exponents[i]);
    }
}

multi_index multi_index::unit(std::size_t dim, std::size_t k)
{
    multi_index j(dim);
    j.set(k, 1);
    return j;
}

void multi_index::set(std::size_t i, int e)
{
    if (e < 0 || e > max_exponent) {
        throw precondition_error("exponent " + std::to_string(e) + " out of range");
    }
    exps_[i] = static_cast<std::uint8_t>(e);
}

int multi_index::degree() const noexcept
{
    int d = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        d += exps_[i];
    }
    return d;
}

multi_index multi_index::operator+(const multi_index &other) const
{
    multi_index r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        r.set(i, exps_[i] + other.exps_[i]);
    }
    return r;
}

multi_index multi_index::operator-(const multi_index &other) const
{
    multi_index r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        r.set(i, exps_[i] - other.exps_[i]);
    }
    return r;
}

bool multi_index::divides(const multi_index &other) const noexcept
{
    for (std::size_t i = 0; i < dim_; ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

std::vector<int> multi_index::exponents() const
{
    return std::vector<int>(exps_.begin(), exps_.begin() + dim_);
}

std::string multi_index::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(exps_[i]);
    }
    return s + ")";
}

bool graded_lex_less(const multi_index &a, const multi_index &b) noexcept
{
    const int da = a.degree(), db = b.degree();
    if (da != db) {
        return da < db;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) {
            return a[i] > b[i];
        }
    }
    return false;
}

namespace
{

void enumerate(std::size_t dim, std::size_t pos, int remaining, multi_index &cur, std::vector<multi_index> &out)
{
    if (pos + 1 == dim) {
        cur.set(pos, remaining);
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.set(pos, e);
        enumerate(dim, pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<multi_index> monomials_in_range(std::size_t dim, int lo, int hi)
{
    std::vector<multi_index> out;
    if (dim == 0) {
        if (lo <= 0 && hi >= 0) {
            out.emplace_back(0);
        }
        return out;
    }
    for (int d = std::max(lo, 0); d <= hi; ++d) {
        multi_index cur(dim);
        enumerate(dim, 0, d, cur, out);
    }
    return out;
}

} // namespace discjet
