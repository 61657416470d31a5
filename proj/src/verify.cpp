#include "hamlie/verify.hpp"

#include <string>

#include "hamlie/errors.hpp"

namespace hamlie {

InnerDerivation::InnerDerivation(TensorElement a) : m_a(std::move(a))
{
    if (m_a.arity() != 2) {
        throw ArityError("inner derivation generator must have arity 2");
    }
}

TensorElement InnerDerivation::operator()(const HElement& x) const
{
    return diag_action(x, m_a);
}

TensorElement inner_apply(const InnerDerivation& d, const HElement& x)
{
    return d(x);
}

TensorElement derivation_defect(const InnerDerivation& d, const HElement& x, const HElement& y)
{
    TensorElement out = d(bracket(x, y));
    out -= diag_action(x, d(y));
    out += diag_action(y, d(x));
    return out;
}

namespace {

bool clean_at(const Exponent& e, std::size_t p)
{
    return e.at(p) == 0 && e.at_bar(p) == 0;
}

} // namespace

TensorElement vp_violation(const TensorElement& v, std::size_t p)
{
    if (v.arity() != 2) {
        throw ArityError("V^p membership needs arity 2");
    }
    check_index(v.n(), p);
    TensorElement out(v.n(), 2);
    for (const auto& [k, c] : v.terms()) {
        if (!clean_at(k[0], p) && !clean_at(k[1], p)) {
            out.add_term(k, c);
        }
    }
    return out;
}

bool vp_membership(const TensorElement& v, std::size_t p)
{
    return vp_violation(v, p).is_zero();
}

CheckReport lemma23_harness(const TensorElement& v, std::size_t p, long bound)
{
    if (v.arity() != 2) {
        throw ArityError("lemma23 harness needs arity 2");
    }
    check_index(v.n(), p);
    const std::size_t n = v.n();
    for (long k = 1; k <= bound; ++k) {
        for (const Exponent& e : {k * epsilon(n, p), k * epsilon_bar(n, p)}) {
            HElement x = HElement::monomial(e);
            if (!diag_action(x, v).is_zero()) {
                CheckReport rep;
                rep.passed = true;
                rep.witness = std::move(x);
                rep.description = "hypothesis not met: " + to_string(*rep.witness) + " acts nontrivially (k="
                                  + std::to_string(k) + ")";
                return rep;
            }
        }
    }

    CheckReport rep;
    const long needed = default_bound(v);
    if (bound < needed) {
        rep.passed = true;
        rep.description = "inconclusive: hypothesis holds up to K=" + std::to_string(bound)
                          + " but the conclusion needs K>=" + std::to_string(needed);
        return rep;
    }
    rep.defect = vp_violation(v, p);
    rep.passed = rep.defect->is_zero();
    rep.description = rep.passed ? "hypothesis met up to K=" + std::to_string(bound) + "; v lies in V^"
                                       + std::to_string(p)
                                 : "hypothesis met up to K=" + std::to_string(bound) + " but v is not in V^"
                                       + std::to_string(p);
    return rep;
}

std::optional<HElement> annihilator_witness(const TensorElement& c, long bound)
{
    return first_acting_probe(c, bound);
}

CheckReport skew_closure_harness(const TensorElement& r, const std::vector<HElement>& sample, long bound)
{
    if (r.arity() != 2) {
        throw ArityError("skew-closure harness needs arity 2");
    }
    std::vector<HElement> candidates = sample;
    for (const auto& e : probe_family(r.n(), bound)) {
        candidates.push_back(HElement::monomial(e));
    }
    for (auto& a : candidates) {
        if (!is_skew(diag_action(a, r))) {
            CheckReport rep;
            rep.passed = true;
            rep.witness = std::move(a);
            rep.description = "hypothesis not met: " + to_string(*rep.witness) + " . r is not skew";
            return rep;
        }
    }
    CheckReport rep;
    rep.defect = r + twist(r);
    rep.passed = rep.defect->is_zero();
    rep.description = rep.passed ? "hypothesis met up to K=" + std::to_string(bound) + "; r is skew"
                                 : "hypothesis met up to K=" + std::to_string(bound) + " but r is not skew";
    return rep;
}

} // namespace hamlie
