#include "hamlie/bialgebra.hpp"

#include "hamlie/errors.hpp"

namespace hamlie {

RMatrix RMatrix::skew(TensorElement v)
{
    if (v.arity() != 2) {
        throw ArityError("r-matrix must have arity 2");
    }
    if (!hamlie::is_skew(v)) {
        throw ConstraintError("r is not skew: r + tau(r) = " + to_string(v + twist(v)));
    }
    return RMatrix(std::move(v), true);
}

RMatrix RMatrix::raw(TensorElement v)
{
    if (v.arity() != 2) {
        throw ArityError("r-matrix must have arity 2");
    }
    const bool s = hamlie::is_skew(v);
    return RMatrix(std::move(v), s);
}

TensorElement cobracket(const RMatrix& r, const HElement& x)
{
    return diag_action(x, r.value());
}

TensorElement cybe(const TensorElement& r)
{
    if (r.arity() != 2) {
        throw ArityError("cybe needs arity 2, got " + std::to_string(r.arity()));
    }
    TensorElement out(r.n(), 3);
    for (const auto& [ki, ci] : r.terms()) {
        const Exponent& a_i = ki[0];
        const Exponent& b_i = ki[1];
        for (const auto& [kj, cj] : r.terms()) {
            const Exponent& a_j = kj[0];
            const Exponent& b_j = kj[1];
            const Rational c = ci * cj;
            for (const auto& t : monomial_bracket(a_i, a_j)) {
                out.add_term({t.exponent, b_i, b_j}, c * t.coefficient);
            }
            for (const auto& t : monomial_bracket(b_i, a_j)) {
                out.add_term({a_i, t.exponent, b_j}, c * t.coefficient);
            }
            for (const auto& t : monomial_bracket(b_i, b_j)) {
                out.add_term({a_i, a_j, t.exponent}, c * t.coefficient);
            }
        }
    }
    return out;
}

TensorElement anti_commutativity_defect(const RMatrix& r, const HElement& x)
{
    const TensorElement d = cobracket(r, x);
    return d + twist(d);
}

TensorElement iterated_cobracket(const RMatrix& r, const HElement& x)
{
    const TensorElement d = cobracket(r, x);
    TensorElement out(r.n(), 3);
    for (const auto& [k, c] : d.terms()) {
        const TensorElement inner = cobracket(r, HElement::monomial(k[1]));
        for (const auto& [ki, ci] : inner.terms()) {
            out.add_term({k[0], ki[0], ki[1]}, c * ci);
        }
    }
    return out;
}

TensorElement co_jacobi_defect(const RMatrix& r, const HElement& x)
{
    const TensorElement v = iterated_cobracket(r, x);
    const TensorElement v1 = cyclic(v);
    return v + v1 + cyclic(v1);
}

TensorElement drinfeld_identity_defect(const RMatrix& r, const HElement& x)
{
    if (!r.is_skew()) {
        throw ConstraintError("Drinfeld identity requires a skew r");
    }
    return co_jacobi_defect(r, x) - diag_action(x, cybe(r.value()));
}

TensorElement compatibility_defect(const RMatrix& r, const HElement& x, const HElement& y)
{
    TensorElement out = cobracket(r, bracket(x, y));
    out -= diag_action(x, cobracket(r, y));
    out += diag_action(y, cobracket(r, x));
    return out;
}

PairConstraintError::PairConstraintError(HElement defect)
    : ConstraintError("[a,b] != b; [a,b] - b = " + to_string(defect)), m_defect(std::move(defect))
{
}

RMatrix triangular_from_pair(const HElement& a, const HElement& b)
{
    a.check_same_n(b);
    HElement defect = bracket(a, b) - b;
    if (!defect.is_zero()) {
        throw PairConstraintError(std::move(defect));
    }
    TensorElement r = tensor(a, b) - tensor(b, a);
    if (!cybe(r).is_zero()) {
        throw std::logic_error("triangular r-matrix violates the CYBE");
    }
    return RMatrix::skew(std::move(r));
}

std::vector<Exponent> probe_family(std::size_t n, long bound)
{
    std::vector<Exponent> out;
    for (long k = 1; k <= bound; ++k) {
        for (std::size_t p = 1; p <= n; ++p) {
            out.push_back(k * epsilon(n, p));
            out.push_back(k * epsilon_bar(n, p));
            out.push_back(k * sigma(n, p));
        }
    }
    return out;
}

std::optional<HElement> first_acting_probe(const TensorElement& c, long bound)
{
    if (c.is_zero()) {
        return std::nullopt;
    }
    for (const auto& e : probe_family(c.n(), bound)) {
        HElement x = HElement::monomial(e);
        if (!diag_action(x, c).is_zero()) {
            return x;
        }
    }
    return std::nullopt;
}

long default_bound(const TensorElement& c)
{
    return coordinate_spread(c) + 2;
}

std::optional<HElement> ad_invariance_witness(const TensorElement& c, long bound)
{
    if (c.arity() != 3) {
        throw ArityError("ad_invariance_witness needs arity 3, got " + std::to_string(c.arity()));
    }
    return first_acting_probe(c, bound);
}

} // namespace hamlie
