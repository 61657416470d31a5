#include <doctest.h>

#include "hamlie/errors.hpp"
#include "hamlie/sampling.hpp"
#include "hamlie/tensor.hpp"
#include "support/builders.hpp"

using namespace hamlie;
using namespace hamlie::test;

namespace {

const Exponent e1 = epsilon(1, 1);
const Exponent e1b = epsilon_bar(1, 1);
const Exponent s1 = sigma(1, 1);

} // namespace

TEST_CASE("canonical form drops zero slots and cancelled terms")
{
    TensorElement v(1, 2);
    v.add_term({Exponent::zero(1), e1}, 3);
    CHECK(v.is_zero());
    v.add_term({e1, e1b}, 2);
    v.add_term({e1, e1b}, -2);
    CHECK(v.is_zero());
    CHECK_THROWS_AS(v.add_term({e1}, 1), ArityError);
    CHECK_THROWS_AS(v.add_term({e1, sigma(2, 1)}, 1), DimensionError);
    CHECK_THROWS_AS(TensorElement(1, 0), ArityError);
    CHECK_THROWS_AS(t2(e1, e1b) + t3(e1, e1, e1), ArityError);
}

TEST_CASE("twist")
{
    const Exponent a{2, Rational(1, 2)};
    CHECK(twist(t2(a, e1b)) == t2(e1b, a));
    CHECK(twist(t2(a, a)) == t2(a, a));
    CHECK_THROWS_AS(twist(t3(a, a, a)), ArityError);
}

TEST_CASE("cyclic")
{
    const Exponent a = e1;
    const Exponent b = 2 * e1b;
    const Exponent c = s1;
    CHECK(cyclic(t3(a, b, c)) == t3(b, c, a));
    CHECK_THROWS_AS(cyclic(t2(a, b)), ArityError);
}

TEST_CASE("diagonal action")
{
    CHECK(diag_action(h(s1), t2(e1b, e1b)) == t2(e1b, e1b, 2));
    CHECK(diag_action(h(s1), TensorElement(1, 2)).is_zero());
    CHECK(diag_action(h(e1), t2(e1, e1b)).is_zero());
    CHECK_THROWS_AS(diag_action(h(sigma(2, 1)), t2(e1, e1b)), DimensionError);
    // slot actions sum to the diagonal action
    const TensorElement v = t3(e1, 2 * e1b, s1) + t3(e1b, e1b, 3 * e1, -2);
    const HElement x = h(2 * e1) + h(e1b + s1, 5);
    CHECK(diag_action(x, v) == act_in_slot(x, v, 0) + act_in_slot(x, v, 1) + act_in_slot(x, v, 2));
}

TEST_CASE("skew part")
{
    const Exponent a = 2 * e1;
    const Exponent b = e1b;
    CHECK(skew_part(wedge(a, b)) == wedge(a, b));
    CHECK(is_skew(wedge(a, b)));
    CHECK(skew_part(t2(a, a)).is_zero());
    CHECK_FALSE(is_skew(t2(a, a)));
    CHECK(skew_part(t2(a, b)) == Rational(1, 2) * wedge(a, b));
    CHECK(is_skew(TensorElement(1, 2)));
}

TEST_CASE("tensor grade decomposition")
{
    auto parts = tensor_grade_decompose(t2(e1b, e1b));
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == Grade{2});
    parts = tensor_grade_decompose(t2(e1, e1b));
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == Grade{0});
    CHECK(tensor_grade_decompose(TensorElement(1, 2)).empty());
}

TEST_CASE("sigma eigenvalue defect")
{
    CHECK(sigma_eigen_defect(1, t2(e1b, e1b)).is_zero());
    CHECK(sigma_eigen_defect(1, t2(e1, e1b)).is_zero());
    CHECK(sigma_eigen_defect(1, TensorElement(1, 2)).is_zero());
    CHECK_THROWS_AS(sigma_eigen_defect(1, t2(e1, e1b) + t2(e1b, e1b)), HomogeneityError);
    CHECK_THROWS_AS(sigma_eigen_defect(2, t2(e1, e1b)), IndexError);
}

TEST_CASE("coordinate spread")
{
    CHECK(coordinate_spread(TensorElement(1, 2)) == 0);
    CHECK(coordinate_spread(t2(e1, e1b)) == 1);
    CHECK(coordinate_spread(t2(Exponent{-3, 0}, Exponent{Rational(1, 2), 0})) == 4);
}

TEST_CASE("permutation identities on random tensors")
{
    Sampler s(29);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(s.uniform(1, 2));
        const TensorElement v2 = s.tensor(n, 2, 4);
        const TensorElement v3 = s.tensor(n, 3, 4);
        CHECK(twist(twist(v2)) == v2);
        CHECK(cyclic(cyclic(cyclic(v3))) == v3);
        // xi = (1 (x) tau)(tau (x) 1)
        CHECK(cyclic(v3) == swap_slots(swap_slots(v3, 0, 1), 1, 2));
        const TensorElement d = v3 - cyclic(v3);
        CHECK((d + cyclic(d) + cyclic(cyclic(d))).is_zero());
        CHECK(is_skew(skew_part(v2)));
    }
}

TEST_CASE("diagonal action is a Lie action commuting with twist")
{
    Sampler s(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(s.uniform(1, 2));
        const HElement x = s.element(n, 2);
        const HElement y = s.element(n, 2);
        for (std::size_t m : {2u, 3u}) {
            const TensorElement v = s.tensor(n, m, 3);
            CHECK(diag_action(bracket(x, y), v) == diag_action(x, diag_action(y, v)) - diag_action(y, diag_action(x, v)));
        }
        const TensorElement v = s.tensor(n, 2, 3);
        CHECK(diag_action(x, twist(v)) == twist(diag_action(x, v)));
        CHECK(is_skew(diag_action(x, skew_part(v))));
    }
}

TEST_CASE("sigma eigenvalue law and grading on random homogeneous tensors")
{
    Sampler s(37);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(s.uniform(1, 2));
        const TensorElement v = s.homogeneous_tensor(n, 4);
        REQUIRE(tensor_grade_decompose(v).size() == 1);
        for (std::size_t p = 1; p <= n; ++p) {
            CHECK(sigma_eigen_defect(p, v).is_zero());
        }
        const HElement x = s.homogeneous_element(n, 2);
        const Grade nu = grade(x.terms().begin()->first);
        const Grade mu = tensor_grade(v.terms().begin()->first);
        const TensorElement xv = diag_action(x, v);
        for (const auto& [k, c] : xv.terms()) {
            CHECK(tensor_grade(k) == mu + nu);
        }
    }
}

TEST_CASE("tensor products and rendering")
{
    const TensorElement v = tensor(h(e1) + h(e1b, 2), h(s1));
    CHECK(v == t2(e1, s1) + t2(e1b, s1, 2));
    CHECK(TensorElement::product_of({h(e1), h(e1b), h(s1)}) == t3(e1, e1b, s1));
    CHECK(to_string(t2(e1, s1, -3)) == "-3*t^(1,0) (x) t^(1,1)");
}
