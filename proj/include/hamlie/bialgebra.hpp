#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamlie/algebra.hpp"
#include "hamlie/tensor.hpp"

namespace hamlie {

/// An element r of H (x) H used to build the coboundary cobracket x -> x . r.
///
/// skew() checks r + tau(r) == 0 and is what every cobracket operation
/// expects. raw() skips the check; it exists for the CYBE functional and
/// witness searches, which take arbitrary 2-tensors.
class RMatrix {
public:
    /// Throws ArityError for arity != 2 and ConstraintError if v is not skew.
    static RMatrix skew(TensorElement v);
    /// Throws ArityError for arity != 2.
    static RMatrix raw(TensorElement v);

    const TensorElement& value() const noexcept { return m_value; }
    std::size_t n() const noexcept { return m_value.n(); }
    bool is_skew() const noexcept { return m_skew; }

private:
    RMatrix(TensorElement v, bool skew) : m_value(std::move(v)), m_skew(skew) {}

    TensorElement m_value;
    bool m_skew;
};

/// Outcome of an identity or lemma check. passed is true exactly when the
/// defect, if present, is zero.
struct CheckReport {
    bool passed = false;
    std::optional<TensorElement> defect;
    std::optional<HElement> witness;
    std::string description;
};

/// Delta_r(x) = x . r.
TensorElement cobracket(const RMatrix& r, const HElement& x);

/// c(r) = [r12,r13] + [r12,r23] + [r13,r23], computed in H^{(x)3} as
/// sum_{i,j} [a_i,a_j] (x) b_i (x) b_j + a_i (x) [b_i,a_j] (x) b_j + a_i (x) a_j (x) [b_i,b_j]
/// over the terms a_i (x) b_i of r.
TensorElement cybe(const TensorElement& r);

/// Delta_r(x) + tau Delta_r(x); zero when r is skew.
TensorElement anti_commutativity_defect(const RMatrix& r, const HElement& x);

/// (1 (x) Delta_r) Delta_r(x): Delta_r applied to the second slot of each
/// term, the result occupying slots 2 and 3.
TensorElement iterated_cobracket(const RMatrix& r, const HElement& x);

/// (1 + xi + xi^2) (1 (x) Delta_r) Delta_r(x); zero when c(r) == 0.
TensorElement co_jacobi_defect(const RMatrix& r, const HElement& x);

/// co_jacobi_defect(r, x) - x . c(r). Zero for every skew r.
/// Throws ConstraintError if r is not skew.
TensorElement drinfeld_identity_defect(const RMatrix& r, const HElement& x);

/// Delta_r([x,y]) - x . Delta_r(y) + y . Delta_r(x); zero for every r.
TensorElement compatibility_defect(const RMatrix& r, const HElement& x, const HElement& y);

/// Thrown by triangular_from_pair when [a,b] != b.
class PairConstraintError : public ConstraintError {
public:
    explicit PairConstraintError(HElement defect);
    const HElement& defect() const noexcept { return m_defect; }

private:
    HElement m_defect;
};

/// r = a (x) b - b (x) a for [a,b] = b. The result is skew and satisfies
/// c(r) = 0; both are verified before returning.
RMatrix triangular_from_pair(const HElement& a, const HElement& b);

/// The probe monomials t^{k eps_p}, t^{k eps_pbar}, t^{k sigma_p} for
/// k = 1..K. Order: k ascending, then p ascending, then eps_p, eps_pbar,
/// sigma_p. Witness searches report the first nonzero probe in this order.
std::vector<Exponent> probe_family(std::size_t n, long bound);

/// First probe x (in probe_family order) with x . c != 0, for any arity.
std::optional<HElement> first_acting_probe(const TensorElement& c, long bound);

/// coordinate_spread(c) + 2, which suffices for the probes to detect any
/// nonzero tensor.
long default_bound(const TensorElement& c);

/// Searches the probe family for x with x . c != 0, c of arity 3. A miss
/// means no witness up to the bound, not that c is ad-invariant.
std::optional<HElement> ad_invariance_witness(const TensorElement& c, long bound);

} // namespace hamlie
