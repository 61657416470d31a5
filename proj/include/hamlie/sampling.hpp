#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hamlie/algebra.hpp"
#include "hamlie/exponent.hpp"
#include "hamlie/tensor.hpp"

namespace hamlie {

/// Seeded generator of random exponents, elements and tensors.
///
/// Coordinates are drawn from {-3,...,3, 1/2, -1/2}. Choices use raw
/// mt19937_64 output reduced by modulo, so a seed yields the same stream on
/// every standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : m_engine(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

    Rational coordinate();
    Rational coefficient();

    /// A random exponent of length 2n. Never zero unless allow_zero.
    Exponent exponent(std::size_t n, bool allow_zero = false);
    /// A random exponent whose coordinates p and pbar are both zero.
    Exponent exponent_clean_at(std::size_t n, std::size_t p);
    /// A random exponent with at least one of coordinates p, pbar nonzero.
    Exponent exponent_touching(std::size_t n, std::size_t p);

    HElement monomial(std::size_t n);
    /// Between 1 and max_terms random terms (possibly cancelling to fewer).
    HElement element(std::size_t n, std::size_t max_terms);
    BarElement bar_element(std::size_t n, std::size_t max_terms);
    /// Nonzero homogeneous element of H with at most max_terms terms.
    HElement homogeneous_element(std::size_t n, std::size_t max_terms);

    /// Nonzero tensor of arity m with 1..max_terms terms.
    TensorElement tensor(std::size_t n, std::size_t m, std::size_t max_terms);
    /// Nonzero skew 2-tensor sum c (a (x) b - b (x) a) with 1..max_pairs pairs,
    /// so at most 2*max_pairs terms.
    TensorElement skew_tensor(std::size_t n, std::size_t max_pairs);
    /// Nonzero homogeneous 2-tensor with at most max_terms terms.
    TensorElement homogeneous_tensor(std::size_t n, std::size_t max_terms);

private:
    std::mt19937_64 m_engine;
};

} // namespace hamlie
