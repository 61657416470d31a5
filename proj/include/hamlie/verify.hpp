#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hamlie/algebra.hpp"
#include "hamlie/bialgebra.hpp"
#include "hamlie/tensor.hpp"

namespace hamlie {

/// The inner derivation x -> x . a for a fixed a in V = H (x) H.
class InnerDerivation {
public:
    /// Throws ArityError unless a has arity 2.
    explicit InnerDerivation(TensorElement a);

    const TensorElement& generator() const noexcept { return m_a; }
    TensorElement operator()(const HElement& x) const;

private:
    TensorElement m_a;
};

TensorElement inner_apply(const InnerDerivation& d, const HElement& x);

/// d([x,y]) - x . d(y) + y . d(x); zero for every inner derivation.
TensorElement derivation_defect(const InnerDerivation& d, const HElement& x, const HElement& y);

/// v in V^p = H^p (x) H + H (x) H^p, where H^p is spanned by the t^alpha
/// with alpha_p = alpha_pbar = 0.
bool vp_membership(const TensorElement& v, std::size_t p);

/// The terms of v lying outside V^p.
TensorElement vp_violation(const TensorElement& v, std::size_t p);

/// Bounded check of: t^{k eps_p} . v = t^{k eps_pbar} . v = 0 for all k
/// implies v in V^p. Probes k = 1..bound. The conclusion is only asserted
/// when bound >= default_bound(v); otherwise the report is inconclusive and
/// passes.
CheckReport lemma23_harness(const TensorElement& v, std::size_t p, long bound);

/// First probe monomial acting nontrivially on c (any arity); none for c = 0.
/// For c != 0 and bound >= default_bound(c) a witness always exists.
std::optional<HElement> annihilator_witness(const TensorElement& c, long bound);

/// Bounded check of: a . r skew for all a implies r skew. Tests the sample
/// and the probe family up to bound.
CheckReport skew_closure_harness(const TensorElement& r, const std::vector<HElement>& sample, long bound);

} // namespace hamlie
