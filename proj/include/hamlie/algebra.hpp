#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamlie/errors.hpp"
#include "hamlie/exponent.hpp"
#include "hamlie/rational.hpp"

namespace hamlie {

/// Flavor tag for the group algebra Hbar = span{t^alpha}, which keeps t^0.
struct BarFlavor {
    static constexpr bool keeps_unit = true;
};

/// Flavor tag for the quotient H = Hbar / Q t^0, where t^0 is zero.
struct HFlavor {
    static constexpr bool keeps_unit = false;
};

/// Finite Q-linear combination of monomials t^alpha in canonical sparse form:
/// no zero coefficients, and (for HFlavor) no t^0 key. Terms iterate in
/// lexicographic exponent order.
template <class Flavor>
class BasicElement {
public:
    using TermMap = std::map<Exponent, Rational>;

    /// The zero element of the ambient space with parameter n.
    explicit BasicElement(std::size_t n) : m_n(n)
    {
        if (n == 0) {
            throw DimensionError("n must be positive");
        }
    }

    static BasicElement monomial(const Exponent& alpha, const Rational& c = 1)
    {
        BasicElement out(alpha.n());
        out.add_term(alpha, c);
        return out;
    }

    std::size_t n() const noexcept { return m_n; }
    const TermMap& terms() const noexcept { return m_terms; }
    std::size_t size() const noexcept { return m_terms.size(); }
    bool is_zero() const noexcept { return m_terms.empty(); }

    Rational coefficient(const Exponent& alpha) const
    {
        const auto it = m_terms.find(alpha);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    /// Adds c t^alpha, pruning a coefficient that cancels to zero. In H the
    /// term t^0 is silently dropped.
    void add_term(const Exponent& alpha, const Rational& c)
    {
        if (alpha.n() != m_n) {
            throw DimensionError("exponent of length " + std::to_string(alpha.size()) + " in ambient n="
                                 + std::to_string(m_n));
        }
        if (c == 0 || (!Flavor::keeps_unit && alpha.is_zero())) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    BasicElement& operator+=(const BasicElement& other)
    {
        check_same_n(other);
        for (const auto& [e, c] : other.m_terms) {
            add_term(e, c);
        }
        return *this;
    }

    BasicElement& operator-=(const BasicElement& other)
    {
        check_same_n(other);
        for (const auto& [e, c] : other.m_terms) {
            add_term(e, -c);
        }
        return *this;
    }

    BasicElement& operator*=(const Rational& s)
    {
        if (s == 0) {
            m_terms.clear();
            return *this;
        }
        for (auto& [e, c] : m_terms) {
            c *= s;
        }
        return *this;
    }

    friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
    friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
    friend BasicElement operator*(const Rational& s, BasicElement a) { return a *= s; }
    friend BasicElement operator-(BasicElement a) { return a *= Rational(-1); }

    friend bool operator==(const BasicElement& a, const BasicElement& b)
    {
        return a.m_n == b.m_n && a.m_terms == b.m_terms;
    }

    void check_same_n(const BasicElement& other) const
    {
        if (other.m_n != m_n) {
            throw DimensionError("ambient mismatch: n=" + std::to_string(m_n) + " vs n=" + std::to_string(other.m_n));
        }
    }

private:
    std::size_t m_n;
    TermMap m_terms;
};

using BarElement = BasicElement<BarFlavor>;
using HElement = BasicElement<HFlavor>;

/// One term c t^alpha of a bracket expansion.
struct Term {
    Exponent exponent;
    Rational coefficient;
};

/// [t^alpha, t^beta] = sum_i (alpha_i beta_{ibar} - beta_i alpha_{ibar}) t^{alpha+beta-sigma_i}.
/// Vanishing coefficients are omitted; the exponents of distinct i are
/// distinct, so the result is already combined. t^0 is kept.
std::vector<Term> monomial_bracket(const Exponent& alpha, const Exponent& beta);

/// Poisson product on Hbar: t^alpha t^beta = t^{alpha+beta}.
BarElement product(const BarElement& u, const BarElement& v);

/// Bracket on Hbar, keeping the t^0 term.
BarElement bracket_bar(const BarElement& u, const BarElement& v);

/// Bracket on H (the t^0 term is dropped).
HElement bracket(const HElement& u, const HElement& v);

/// The quotient map Hbar -> H.
HElement project_to_H(const BarElement& u);

/// The representative of x in Hbar with no t^0 term.
BarElement lift_to_bar(const HElement& x);

/// Splits u into its homogeneous components H_mu.
std::map<Grade, HElement> grade_decompose(const HElement& u);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero for every input.
HElement jacobi_defect(const HElement& x, const HElement& y, const HElement& z);

/// [u, v w] - [u,v] w - v [u,w]; zero for every input.
BarElement leibniz_defect(const BarElement& u, const BarElement& v, const BarElement& w);

/// Human-readable rendering, e.g. "4*t^(1,1) - t^(0,1/2)".
template <class Flavor>
std::string to_string(const BasicElement<Flavor>& u);

} // namespace hamlie
