#include "hamlie/exponent.hpp"

#include <algorithm>
#include <string>

#include "hamlie/errors.hpp"

namespace hamlie {

Exponent::Exponent(std::vector<Rational> coords) : m_coords(std::move(coords))
{
    if (m_coords.empty() || m_coords.size() % 2 != 0) {
        throw DimensionError("exponent length must be 2n with n >= 1, got " + std::to_string(m_coords.size()));
    }
}

Exponent::Exponent(std::initializer_list<Rational> coords) : Exponent(std::vector<Rational>(coords)) {}

Exponent Exponent::zero(std::size_t n)
{
    return Exponent(std::vector<Rational>(2 * n));
}

const Rational& Exponent::at(std::size_t p) const
{
    check_index(n(), p);
    return m_coords[p - 1];
}

const Rational& Exponent::at_bar(std::size_t p) const
{
    check_index(n(), p);
    return m_coords[n() + p - 1];
}

bool Exponent::is_zero() const
{
    return std::all_of(m_coords.begin(), m_coords.end(), [](const Rational& c) { return c == 0; });
}

Exponent& Exponent::operator+=(const Exponent& other)
{
    check_same_dimension(*this, other);
    for (std::size_t i = 0; i < m_coords.size(); ++i) {
        m_coords[i] += other.m_coords[i];
    }
    return *this;
}

Exponent& Exponent::operator-=(const Exponent& other)
{
    check_same_dimension(*this, other);
    for (std::size_t i = 0; i < m_coords.size(); ++i) {
        m_coords[i] -= other.m_coords[i];
    }
    return *this;
}

Exponent operator-(const Exponent& a)
{
    Exponent out = a;
    for (auto& c : out.m_coords) {
        c = -c;
    }
    return out;
}

Exponent operator*(long k, const Exponent& a)
{
    Exponent out = a;
    for (auto& c : out.m_coords) {
        c *= k;
    }
    return out;
}

Exponent operator*(const Rational& k, const Exponent& a)
{
    Exponent out = a;
    for (auto& c : out.m_coords) {
        c *= k;
    }
    return out;
}

const Rational& Grade::at(std::size_t p) const
{
    check_index(m_values.size(), p);
    return m_values[p - 1];
}

bool Grade::is_zero() const
{
    return std::all_of(m_values.begin(), m_values.end(), [](const Rational& c) { return c == 0; });
}

Grade& Grade::operator+=(const Grade& other)
{
    if (other.m_values.size() != m_values.size()) {
        throw DimensionError("grade length mismatch");
    }
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        m_values[i] += other.m_values[i];
    }
    return *this;
}

GammaSpec::GammaSpec(std::size_t n) : m_n(n)
{
    if (n == 0) {
        throw DimensionError("n must be positive");
    }
    for (std::size_t i = 0; i < 2 * n; ++i) {
        std::vector<Rational> c(2 * n);
        c[i] = 1;
        m_generators.emplace_back(std::move(c));
    }
}

GammaSpec::GammaSpec(std::size_t n, std::vector<Exponent> generators) : m_n(n), m_generators(std::move(generators))
{
    if (n == 0) {
        throw DimensionError("n must be positive");
    }
    for (const auto& g : m_generators) {
        if (g.n() != n) {
            throw DimensionError("generator has length " + std::to_string(g.size()) + ", expected "
                                 + std::to_string(2 * n));
        }
    }
}

void check_same_dimension(const Exponent& a, const Exponent& b)
{
    if (a.size() != b.size()) {
        throw DimensionError("exponent length mismatch: " + std::to_string(a.size()) + " vs "
                             + std::to_string(b.size()));
    }
}

void check_index(std::size_t n, std::size_t p)
{
    if (p < 1 || p > n) {
        throw IndexError("index " + std::to_string(p) + " outside 1.." + std::to_string(n));
    }
}

Exponent epsilon(std::size_t n, std::size_t p)
{
    check_index(n, p);
    std::vector<Rational> c(2 * n);
    c[p - 1] = 1;
    return Exponent(std::move(c));
}

Exponent epsilon_bar(std::size_t n, std::size_t p)
{
    check_index(n, p);
    std::vector<Rational> c(2 * n);
    c[n + p - 1] = 1;
    return Exponent(std::move(c));
}

Exponent sigma(std::size_t n, std::size_t p)
{
    check_index(n, p);
    std::vector<Rational> c(2 * n);
    c[p - 1] = 1;
    c[n + p - 1] = 1;
    return Exponent(std::move(c));
}

Exponent sigma(const GammaSpec& spec, std::size_t p)
{
    return sigma(spec.n(), p);
}

Grade grade(const Exponent& alpha)
{
    const std::size_t n = alpha.n();
    std::vector<Rational> g(n);
    for (std::size_t p = 0; p < n; ++p) {
        g[p] = alpha[n + p] - alpha[p];
    }
    return Grade(std::move(g));
}

std::size_t rank(std::span<const Exponent> vectors)
{
    if (vectors.empty()) {
        return 0;
    }
    const std::size_t cols = vectors.front().size();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != cols) {
            throw DimensionError("rank: vectors of different lengths");
        }
        rows.emplace_back(v.coords().begin(), v.coords().end());
    }

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) {
                continue;
            }
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < cols; ++j) {
                rows[i][j] -= f * rows[r][j];
            }
        }
        ++r;
    }
    return r;
}

bool is_nondegenerate(const GammaSpec& spec)
{
    return rank(spec.generators()) == 2 * spec.n();
}

} // namespace hamlie
