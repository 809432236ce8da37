#include <discjet/rational.hpp>

#include <cctype>

#include <discjet/errors.hpp>

namespace discjet
{

std::string to_string(const rational &q)
{
    return q.get_str();
}

rational parse_rational(std::string_view text)
{
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && s.front() == '-') {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw schema_error("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw schema_error("zero denominator in '" + std::string(text) + "'");
    }
    rational q(n, d);
    q.canonicalize();
    return q;
}

rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return rational(f);
}

} // namespace discjet
