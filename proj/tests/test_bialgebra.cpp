#include <doctest.h>

#include "hamlie/bialgebra.hpp"
#include "hamlie/errors.hpp"
#include "hamlie/sampling.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace hamlie;
using namespace hamlie::test;

namespace {

const Exponent e1 = epsilon(1, 1);
const Exponent e1b = epsilon_bar(1, 1);
const Exponent s1 = sigma(1, 1);

/// The six-term value of c(r) for r = a(x)b - b(x)a with [a,b] = 4s,
/// expanded by hand.
TensorElement six_term(const Exponent& s, const Exponent& a, const Exponent& b)
{
    return 4 * (t3(s, a, b) - t3(s, b, a) - t3(a, s, b) + t3(b, s, a) + t3(a, b, s) - t3(b, a, s));
}

} // namespace

TEST_CASE("RMatrix construction")
{
    CHECK(RMatrix::skew(wedge(e1, e1b)).is_skew());
    CHECK_THROWS_AS(RMatrix::skew(t2(e1, e1b)), ConstraintError);
    CHECK_FALSE(RMatrix::raw(t2(e1, e1b)).is_skew());
    CHECK_THROWS_AS(RMatrix::raw(t3(e1, e1, e1)), ArityError);
}

TEST_CASE("cobracket")
{
    const RMatrix r = RMatrix::skew(wedge(s1, e1b));
    CHECK(cobracket(r, h(e1)) == wedge(e1, e1b));
    CHECK(cobracket(r, HElement(1)).is_zero());
    CHECK(cobracket(RMatrix::skew(TensorElement(1, 2)), h(e1)).is_zero());
}

TEST_CASE("cybe matches the brute-force oracle")
{
    CHECK(cybe(TensorElement(1, 2)).is_zero());
    CHECK(cybe(wedge(e1, e1b)).is_zero());
    CHECK(brute_force_cybe(wedge(e1, e1b)).is_zero());

    const TensorElement r = wedge(2 * e1, 2 * e1b);
    const TensorElement expected = six_term(s1, 2 * e1, 2 * e1b);
    CHECK(brute_force_cybe(r) == expected);
    CHECK(cybe(r) == expected);
    CHECK_THROWS_AS(cybe(t3(e1, e1, e1)), ArityError);

    Sampler s(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(s.uniform(1, 2));
        const TensorElement v = trial % 2 ? s.skew_tensor(n, 2) : s.tensor(n, 2, 4);
        CHECK(cybe(v) == brute_force_cybe(v));
    }
}

TEST_CASE("cybe is quadratic")
{
    const TensorElement r = wedge(2 * e1, 2 * e1b);
    CHECK(cybe(Rational(3) * r) == Rational(9) * cybe(r));
}

TEST_CASE("anti-commutativity defect")
{
    Sampler s(43);
    const RMatrix r = RMatrix::skew(s.skew_tensor(1, 2));
    CHECK(anti_commutativity_defect(r, s.element(1, 3)).is_zero());
    CHECK(anti_commutativity_defect(RMatrix::skew(TensorElement(1, 2)), h(e1)).is_zero());
    // a, b of distinct nonzero grades; t^{sigma_1} scales a(x)b by grade 3, not skew
    const RMatrix raw = RMatrix::raw(t2(e1b, 2 * e1b));
    CHECK_FALSE(anti_commutativity_defect(raw, h(s1)).is_zero());
    CHECK(anti_commutativity_defect(raw, h(s1)) == t2(e1b, 2 * e1b, 3) + t2(2 * e1b, e1b, 3));
}

TEST_CASE("co-Jacobi defect")
{
    const RMatrix tri = triangular_from_pair(h(s1), h(e1b));
    Sampler s(47);
    for (int i = 0; i < 10; ++i) {
        CHECK(co_jacobi_defect(tri, s.element(1, 3)).is_zero());
    }
    CHECK(co_jacobi_defect(RMatrix::skew(TensorElement(1, 2)), h(e1)).is_zero());

    const RMatrix r = RMatrix::skew(wedge(2 * e1, 2 * e1b));
    const TensorElement lhs = co_jacobi_defect(r, h(e1));
    CHECK(lhs == diag_action(h(e1), cybe(r.value())));
    CHECK_FALSE(lhs.is_zero());
}

TEST_CASE("Drinfeld identity")
{
    CHECK(drinfeld_identity_defect(RMatrix::skew(TensorElement(1, 2)), h(e1)).is_zero());
    const RMatrix tri = triangular_from_pair(h(s1), h(e1b));
    CHECK(co_jacobi_defect(tri, h(2 * e1)).is_zero());
    CHECK(diag_action(h(2 * e1), cybe(tri.value())).is_zero());
    CHECK(drinfeld_identity_defect(tri, h(2 * e1)).is_zero());
    CHECK_THROWS_AS(drinfeld_identity_defect(RMatrix::raw(t2(e1, e1b)), h(e1)), ConstraintError);

    Sampler s(53);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(s.uniform(1, 2));
        const RMatrix r = RMatrix::skew(s.skew_tensor(n, 2));
        const HElement x = s.monomial(n);
        CHECK(drinfeld_identity_defect(r, x).is_zero());
    }
}

TEST_CASE("compatibility defect")
{
    Sampler s(59);
    const RMatrix r = RMatrix::skew(s.skew_tensor(1, 2));
    CHECK(compatibility_defect(r, h(e1), h(e1)).is_zero());
    CHECK(compatibility_defect(r, h(2 * e1), h(2 * e1b)).is_zero());
    CHECK(compatibility_defect(RMatrix::skew(TensorElement(1, 2)), h(e1), h(e1b)).is_zero());
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(s.uniform(1, 2));
        const RMatrix any = RMatrix::raw(s.tensor(n, 2, 3));
        CHECK(compatibility_defect(any, s.element(n, 2), s.element(n, 2)).is_zero());
    }
}

TEST_CASE("triangular construction")
{
    const RMatrix r = triangular_from_pair(h(s1), h(e1b));
    CHECK(r.value() == wedge(s1, e1b));
    CHECK(cybe(r.value()).is_zero());
    CHECK(brute_force_cybe(r.value()).is_zero());

    try {
        (void)triangular_from_pair(h(s1), h(e1));
        FAIL("expected a constraint error");
    } catch (const PairConstraintError& e) {
        CHECK(e.defect() == h(e1, -2));
    }
    try {
        (void)triangular_from_pair(h(s1, 2), h(2 * e1b));
        FAIL("expected a constraint error");
    } catch (const PairConstraintError& e) {
        CHECK(e.defect() == h(2 * e1b, 3));
    }

    // a = t^{sigma_p}, b = t^beta with grade(beta)_p = 1, in n = 2
    const Exponent beta = epsilon_bar(2, 2) + 3 * sigma(2, 1);
    const RMatrix r2 = triangular_from_pair(h(sigma(2, 2)), h(beta));
    CHECK(cybe(r2.value()).is_zero());
}

TEST_CASE("probe family order")
{
    const auto probes = probe_family(2, 2);
    REQUIRE(probes.size() == 12);
    CHECK(probes[0] == epsilon(2, 1));
    CHECK(probes[1] == epsilon_bar(2, 1));
    CHECK(probes[2] == sigma(2, 1));
    CHECK(probes[3] == epsilon(2, 2));
    CHECK(probes[6] == 2 * epsilon(2, 1));
}

TEST_CASE("ad-invariance witness")
{
    CHECK_FALSE(ad_invariance_witness(TensorElement(1, 3), 5));
    const TensorElement c = cybe(wedge(2 * e1, 2 * e1b));
    const auto w = ad_invariance_witness(c, 3);
    REQUIRE(w);
    CHECK_FALSE(diag_action(*w, c).is_zero());
    // reported witness is the first acting probe
    for (const auto& e : probe_family(1, 3)) {
        if (HElement::monomial(e) == *w) {
            break;
        }
        CHECK(diag_action(HElement::monomial(e), c).is_zero());
    }
    const TensorElement tri = cybe(triangular_from_pair(h(s1), h(e1b)).value());
    for (long k = 1; k <= 6; ++k) {
        CHECK_FALSE(ad_invariance_witness(tri, k));
    }
    CHECK_THROWS_AS(ad_invariance_witness(t2(e1, e1b), 3), ArityError);
}
