#include "hamlie/algebra.hpp"

namespace hamlie {

std::vector<Term> monomial_bracket(const Exponent& alpha, const Exponent& beta)
{
    check_same_dimension(alpha, beta);
    const std::size_t n = alpha.n();
    std::vector<Term> out;
    const Exponent sum = alpha + beta;
    for (std::size_t i = 0; i < n; ++i) {
        Rational c = alpha[i] * beta[n + i] - beta[i] * alpha[n + i];
        if (c == 0) {
            continue;
        }
        std::vector<Rational> coords(sum.coords().begin(), sum.coords().end());
        coords[i] -= 1;
        coords[n + i] -= 1;
        out.push_back(Term{Exponent(std::move(coords)), std::move(c)});
    }
    return out;
}

BarElement product(const BarElement& u, const BarElement& v)
{
    u.check_same_n(v);
    BarElement out(u.n());
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            out.add_term(a + b, ca * cb);
        }
    }
    return out;
}

namespace {

template <class Flavor>
BasicElement<Flavor> bracket_impl(const BasicElement<Flavor>& u, const BasicElement<Flavor>& v)
{
    u.check_same_n(v);
    BasicElement<Flavor> out(u.n());
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            const Rational scale = ca * cb;
            for (const auto& t : monomial_bracket(a, b)) {
                out.add_term(t.exponent, scale * t.coefficient);
            }
        }
    }
    return out;
}

} // namespace

BarElement bracket_bar(const BarElement& u, const BarElement& v)
{
    return bracket_impl(u, v);
}

HElement bracket(const HElement& u, const HElement& v)
{
    return bracket_impl(u, v);
}

HElement project_to_H(const BarElement& u)
{
    HElement out(u.n());
    for (const auto& [e, c] : u.terms()) {
        out.add_term(e, c);
    }
    return out;
}

BarElement lift_to_bar(const HElement& x)
{
    BarElement out(x.n());
    for (const auto& [e, c] : x.terms()) {
        out.add_term(e, c);
    }
    return out;
}

std::map<Grade, HElement> grade_decompose(const HElement& u)
{
    std::map<Grade, HElement> parts;
    for (const auto& [e, c] : u.terms()) {
        parts.try_emplace(grade(e), u.n()).first->second.add_term(e, c);
    }
    return parts;
}

HElement jacobi_defect(const HElement& x, const HElement& y, const HElement& z)
{
    HElement out = bracket(x, bracket(y, z));
    out += bracket(y, bracket(z, x));
    out += bracket(z, bracket(x, y));
    return out;
}

BarElement leibniz_defect(const BarElement& u, const BarElement& v, const BarElement& w)
{
    BarElement out = bracket_bar(u, product(v, w));
    out -= product(bracket_bar(u, v), w);
    out -= product(v, bracket_bar(u, w));
    return out;
}

template <class Flavor>
std::string to_string(const BasicElement<Flavor>& u)
{
    if (u.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : u.terms()) {
        Rational mag = c;
        if (first) {
            if (c < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            mag = abs(c);
        }
        first = false;
        if (mag != 1) {
            out += hamlie::to_string(mag) + "*";
        }
        out += "t^(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            out += (i ? "," : "") + hamlie::to_string(e[i]);
        }
        out += ")";
    }
    return out;
}

template std::string to_string(const BarElement&);
template std::string to_string(const HElement&);

} // namespace hamlie
