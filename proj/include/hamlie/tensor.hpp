#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hamlie/algebra.hpp"
#include "hamlie/exponent.hpp"

namespace hamlie {

/// Basis tensor t^{a_1} (x) ... (x) t^{a_m}, one exponent per slot.
using TensorKey = std::vector<Exponent>;

/// Finite Q-linear combination of basis tensors in H^{(x)m}.
///
/// Canonical form: no zero coefficients and no slot carrying the zero
/// exponent (that factor is 0 in H). Terms iterate slotwise-lexicographically.
class TensorElement {
public:
    using TermMap = std::map<TensorKey, Rational>;

    /// The zero tensor of arity m over ambient n. Throws on n == 0 or m == 0.
    TensorElement(std::size_t n, std::size_t m);

    /// The elementary tensor x_1 (x) ... (x) x_m.
    static TensorElement product_of(const std::vector<HElement>& factors);

    std::size_t n() const noexcept { return m_n; }
    std::size_t arity() const noexcept { return m_arity; }
    const TermMap& terms() const noexcept { return m_terms; }
    std::size_t size() const noexcept { return m_terms.size(); }
    bool is_zero() const noexcept { return m_terms.empty(); }

    Rational coefficient(const TensorKey& key) const;

    /// Adds c times the basis tensor; a key with a zero slot is dropped.
    void add_term(const TensorKey& key, const Rational& c);

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(const Rational& s);

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }
    friend TensorElement operator-(TensorElement a) { return a *= Rational(-1); }

    friend bool operator==(const TensorElement& a, const TensorElement& b)
    {
        return a.m_n == b.m_n && a.m_arity == b.m_arity && a.m_terms == b.m_terms;
    }

    /// Throws DimensionError / ArityError on mismatch.
    void check_compatible(const TensorElement& other) const;

private:
    std::size_t m_n;
    std::size_t m_arity;
    TermMap m_terms;
};

/// a (x) b for tensors of arities m and k, giving arity m+k.
TensorElement tensor_product(const TensorElement& a, const TensorElement& b);
/// x (x) y in H (x) H.
TensorElement tensor(const HElement& x, const HElement& y);
/// x as an arity-1 tensor.
TensorElement as_tensor(const HElement& x);

/// Exchanges slots i and j (0-based) in every term.
TensorElement swap_slots(const TensorElement& v, std::size_t i, std::size_t j);

/// tau(x (x) y) = y (x) x. Arity 2 only.
TensorElement twist(const TensorElement& v);

/// xi(x1 (x) x2 (x) x3) = x2 (x) x3 (x) x1. Arity 3 only.
TensorElement cyclic(const TensorElement& v);

/// Brackets x into slot `slot` (0-based) of every term, identity elsewhere.
TensorElement act_in_slot(const HElement& x, const TensorElement& v, std::size_t slot);

/// Adjoint diagonal action: x . (a_1 (x) ... (x) a_m) = sum over slots of
/// a_1 (x) ... (x) [x, a_j] (x) ... (x) a_m.
TensorElement diag_action(const HElement& x, const TensorElement& v);

/// (v - tau v) / 2, the projection onto Im(1 - tau).
TensorElement skew_part(const TensorElement& v);
/// v + tau v == 0.
bool is_skew(const TensorElement& v);

/// Sum of the slot grades of a basis tensor.
Grade tensor_grade(const TensorKey& key);

/// Splits v by total grade: V_mu = sum_{nu+lambda=mu} H_nu (x) H_lambda.
std::map<Grade, TensorElement> tensor_grade_decompose(const TensorElement& v);

/// t^{sigma_p} . v - mu_p v for v homogeneous of grade mu; zero for every
/// such v. Throws HomogeneityError when v mixes grades.
TensorElement sigma_eigen_defect(std::size_t p, const TensorElement& v);

/// Largest coordinate minus smallest coordinate over every slot exponent of
/// every term, rounded up. Zero for the zero tensor.
long coordinate_spread(const TensorElement& v);

std::string to_string(const TensorElement& v);

} // namespace hamlie
