#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hamlie/rational.hpp"

namespace hamlie {

/// A point alpha of Gamma in Q^{2n}, the multi-index of the monomial t^alpha.
///
/// Coordinates are stored in block order: positions 0..n-1 hold
/// alpha_1..alpha_n and positions n..2n-1 hold the conjugates
/// alpha_{1bar}..alpha_{nbar}, so the conjugate of p is n+p.
class Exponent {
public:
    Exponent() = default;

    /// Throws DimensionError unless coords has positive even length.
    explicit Exponent(std::vector<Rational> coords);
    Exponent(std::initializer_list<Rational> coords);

    static Exponent zero(std::size_t n);

    /// n, half the number of coordinates.
    std::size_t n() const noexcept { return m_coords.size() / 2; }
    std::size_t size() const noexcept { return m_coords.size(); }

    /// Raw 0-based storage access.
    const Rational& operator[](std::size_t i) const { return m_coords[i]; }
    std::span<const Rational> coords() const noexcept { return m_coords; }

    /// alpha_p for p in 1..n.
    const Rational& at(std::size_t p) const;
    /// alpha_{pbar} for p in 1..n.
    const Rational& at_bar(std::size_t p) const;

    bool is_zero() const;

    Exponent& operator+=(const Exponent& other);
    Exponent& operator-=(const Exponent& other);

    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
    friend Exponent operator-(const Exponent& a);
    friend Exponent operator*(long k, const Exponent& a);
    friend Exponent operator*(const Rational& k, const Exponent& a);

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.m_coords == b.m_coords; }
    /// Lexicographic on coordinates; this is the canonical term order.
    friend bool operator<(const Exponent& a, const Exponent& b) { return a.m_coords < b.m_coords; }

private:
    std::vector<Rational> m_coords;
};

inline Exponent exp_add(const Exponent& a, const Exponent& b) { return a + b; }
inline Exponent exp_neg(const Exponent& a) { return -a; }
inline Exponent exp_scale(long k, const Exponent& a) { return k * a; }

/// An element mu of G = grade(Gamma) in Q^n.
class Grade {
public:
    Grade() = default;
    explicit Grade(std::vector<Rational> values) : m_values(std::move(values)) {}
    Grade(std::initializer_list<Rational> values) : m_values(values) {}

    static Grade zero(std::size_t n) { return Grade(std::vector<Rational>(n)); }

    std::size_t size() const noexcept { return m_values.size(); }
    /// mu_p for p in 1..n.
    const Rational& at(std::size_t p) const;
    std::span<const Rational> values() const noexcept { return m_values; }
    bool is_zero() const;

    Grade& operator+=(const Grade& other);
    friend Grade operator+(Grade a, const Grade& b) { return a += b; }

    friend bool operator==(const Grade& a, const Grade& b) { return a.m_values == b.m_values; }
    friend bool operator<(const Grade& a, const Grade& b) { return a.m_values < b.m_values; }

private:
    std::vector<Rational> m_values;
};

/// Ambient parameters: n and a generating set of the subgroup Gamma.
class GammaSpec {
public:
    /// Standard lattice generators eps_1..eps_{2n}. Throws DimensionError on n == 0.
    explicit GammaSpec(std::size_t n);
    /// Throws DimensionError on n == 0 or a generator of length != 2n.
    GammaSpec(std::size_t n, std::vector<Exponent> generators);

    std::size_t n() const noexcept { return m_n; }
    const std::vector<Exponent>& generators() const noexcept { return m_generators; }

private:
    std::size_t m_n;
    std::vector<Exponent> m_generators;
};

/// eps_p, the p-th unit vector (p in 1..n).
Exponent epsilon(std::size_t n, std::size_t p);
/// eps_{pbar}, the unit vector at position n+p (p in 1..n).
Exponent epsilon_bar(std::size_t n, std::size_t p);
/// sigma_p = eps_p + eps_{pbar}. Throws IndexError unless 1 <= p <= n.
Exponent sigma(std::size_t n, std::size_t p);
Exponent sigma(const GammaSpec& spec, std::size_t p);

/// grade(alpha)_p = alpha_{pbar} - alpha_p. This is the eigenvalue of
/// ad t^{sigma_p} on t^alpha.
Grade grade(const Exponent& alpha);

/// Rank over Q of a list of vectors, by exact Gaussian elimination.
std::size_t rank(std::span<const Exponent> vectors);

/// True iff the generators span Q^{2n}.
bool is_nondegenerate(const GammaSpec& spec);

/// Throws DimensionError unless both exponents have the same length.
void check_same_dimension(const Exponent& a, const Exponent& b);
/// Throws IndexError unless 1 <= p <= n.
void check_index(std::size_t n, std::size_t p);

} // namespace hamlie
