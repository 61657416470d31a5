#include "hamlie/sampling.hpp"

#include <array>
#include <stdexcept>

namespace hamlie {

long Sampler::uniform(long lo, long hi)
{
    if (hi < lo) {
        throw std::invalid_argument("empty sampling range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(m_engine() % span);
}

Rational Sampler::coordinate()
{
    static const std::array<Rational, 9> pool = {Rational(-3), Rational(-2), Rational(-1), Rational(0), Rational(1),
                                                 Rational(2),  Rational(3),  Rational(1, 2), Rational(-1, 2)};
    return pool[static_cast<std::size_t>(uniform(0, pool.size() - 1))];
}

Rational Sampler::coefficient()
{
    long v = uniform(-4, 3);
    if (v >= 0) {
        ++v;
    }
    return Rational(v);
}

Exponent Sampler::exponent(std::size_t n, bool allow_zero)
{
    for (;;) {
        std::vector<Rational> c(2 * n);
        for (auto& x : c) {
            x = coordinate();
        }
        Exponent e(std::move(c));
        if (allow_zero || !e.is_zero()) {
            return e;
        }
    }
}

Exponent Sampler::exponent_clean_at(std::size_t n, std::size_t p)
{
    check_index(n, p);
    for (;;) {
        std::vector<Rational> c(2 * n);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            if (i != p - 1 && i != n + p - 1) {
                c[i] = coordinate();
            }
        }
        Exponent e(std::move(c));
        if (!e.is_zero()) {
            return e;
        }
        if (n == 1) {
            throw std::invalid_argument("for n = 1 every exponent clean at p is zero");
        }
    }
}

Exponent Sampler::exponent_touching(std::size_t n, std::size_t p)
{
    for (;;) {
        Exponent e = exponent(n);
        if (e.at(p) != 0 || e.at_bar(p) != 0) {
            return e;
        }
    }
}

HElement Sampler::monomial(std::size_t n)
{
    return HElement::monomial(exponent(n), coefficient());
}

HElement Sampler::element(std::size_t n, std::size_t max_terms)
{
    HElement out(n);
    const long terms = uniform(1, static_cast<long>(max_terms));
    for (long i = 0; i < terms; ++i) {
        out.add_term(exponent(n), coefficient());
    }
    return out;
}

BarElement Sampler::bar_element(std::size_t n, std::size_t max_terms)
{
    BarElement out(n);
    const long terms = uniform(1, static_cast<long>(max_terms));
    for (long i = 0; i < terms; ++i) {
        out.add_term(exponent(n, true), coefficient());
    }
    return out;
}

HElement Sampler::homogeneous_element(std::size_t n, std::size_t max_terms)
{
    for (;;) {
        // Shifting by multiples of sigma_p keeps the grade fixed.
        const Exponent base = exponent(n, true);
        HElement out(n);
        const long terms = uniform(1, static_cast<long>(max_terms));
        for (long i = 0; i < terms; ++i) {
            Exponent e = base;
            for (std::size_t p = 1; p <= n; ++p) {
                e += uniform(-2, 2) * sigma(n, p);
            }
            out.add_term(e, coefficient());
        }
        if (!out.is_zero()) {
            return out;
        }
    }
}

TensorElement Sampler::tensor(std::size_t n, std::size_t m, std::size_t max_terms)
{
    for (;;) {
        TensorElement out(n, m);
        const long terms = uniform(1, static_cast<long>(max_terms));
        for (long i = 0; i < terms; ++i) {
            TensorKey key;
            for (std::size_t s = 0; s < m; ++s) {
                key.push_back(exponent(n));
            }
            out.add_term(key, coefficient());
        }
        if (!out.is_zero()) {
            return out;
        }
    }
}

TensorElement Sampler::skew_tensor(std::size_t n, std::size_t max_pairs)
{
    for (;;) {
        TensorElement out(n, 2);
        const long pairs = uniform(1, static_cast<long>(max_pairs));
        for (long i = 0; i < pairs; ++i) {
            const Exponent a = exponent(n);
            const Exponent b = exponent(n);
            const Rational c = coefficient();
            out.add_term({a, b}, c);
            out.add_term({b, a}, -c);
        }
        if (!out.is_zero()) {
            return out;
        }
    }
}

TensorElement Sampler::homogeneous_tensor(std::size_t n, std::size_t max_terms)
{
    for (;;) {
        const Exponent a0 = exponent(n);
        const Exponent b0 = exponent(n);
        TensorElement out(n, 2);
        const long terms = uniform(1, static_cast<long>(max_terms));
        for (long i = 0; i < terms; ++i) {
            Exponent a = a0;
            Exponent b = b0;
            for (std::size_t p = 1; p <= n; ++p) {
                a += uniform(-1, 1) * sigma(n, p);
                b += uniform(-1, 1) * sigma(n, p);
                // Moves grade between the slots without changing the total.
                const long shift = uniform(-1, 1);
                a += shift * epsilon_bar(n, p);
                b += shift * epsilon(n, p);
            }
            out.add_term({a, b}, coefficient());
        }
        if (!out.is_zero()) {
            return out;
        }
    }
}

} // namespace hamlie
