#include "hamlie/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "hamlie/errors.hpp"

namespace hamlie {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("", "malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("", "zero denominator in '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    if (text.front() == '-') {
        n = -n;
    }
    Rational out(n, d);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

long ceil_abs(const Rational& value)
{
    const Rational a = abs(value);
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    if (!c.fits_slong_p()) {
        throw std::overflow_error("coordinate magnitude exceeds machine range");
    }
    return c.get_si();
}

} // namespace hamlie
