#include "doctest.h"

#include "monogen/errors.hpp"
#include "monogen/fields.hpp"
#include "monogen/index_form.hpp"
#include "monogen/order.hpp"
#include "oracles.hpp"

using namespace monogen;

namespace {

Integer eval_F(IndexFormF const & F, ElementCoords const & a)
{
    std::vector<Integer> v{a.x1, a.x2, a.y0, a.y1, a.y2};
    return F.poly.evaluate(v);
}

ElementCoords random_coords(oracle::Rng & rng, long b = 5)
{
    return ElementCoords{rng.integer(-b, b), rng.integer(-b, b), rng.integer(-b, b),
                         rng.integer(-b, b), rng.integer(-b, b), rng.integer(-b, b)};
}

}  // namespace

TEST_CASE("cubic field validation")
{
    auto f = make_cubic_field(-1, -2, 1);
    CHECK(f.disc == 49);
    CHECK_THROWS_AS(make_cubic_field(0, -1, 0), DomainError);  // x^3 - x has root 0
    CHECK_THROWS_AS(make_cubic_field(0, 0, -2), DomainError);  // complex cubic
    CHECK_THROWS_AS(make_cubic_field(-3, 3, -1), DomainError);  // (x - 1)^3
}

TEST_CASE("imaginary quadratic validation")
{
    auto m1 = make_imaginary_quadratic(1);
    CHECK(m1.kase == QuadCase::A);
    CHECK(m1.disc == -4);
    CHECK(m1.omega_trace == 0);
    CHECK(m1.omega_norm == 1);
    auto m3 = make_imaginary_quadratic(3);
    CHECK(m3.kase == QuadCase::B);
    CHECK(m3.disc == -3);
    CHECK(m3.omega_trace == 1);
    CHECK(m3.omega_norm == 1);
    CHECK(make_imaginary_quadratic(7).omega_norm == 2);
    CHECK(make_imaginary_quadratic(2).disc == -8);
    CHECK_THROWS_AS(make_imaginary_quadratic(4), DomainError);
    CHECK_THROWS_AS(make_imaginary_quadratic(0), DomainError);
    CHECK_THROWS_AS(make_imaginary_quadratic(-1), DomainError);
    CHECK_THROWS_AS(make_imaginary_quadratic(18), DomainError);
}

TEST_CASE("norms in L and M")
{
    auto f = make_cubic_field(-1, -2, 1);
    CHECK(norm_L_element(f, 1, 0, 0) == 1);
    CHECK(norm_L_element(f, 0, 1, 0) == -1);  // N(theta) = -a0
    oracle::Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        Integer y0 = rng.integer(-9, 9), y1 = rng.integer(-9, 9), y2 = rng.integer(-9, 9);
        CHECK(norm_polynomial_in_y0(f, y1, y2)(y0) == norm_L_element(f, y0, y1, y2));
    }
    auto m = make_imaginary_quadratic(7);
    QuadInt a{3, -2}, b{-1, 5};
    CHECK(norm(m, multiply(m, a, b)) == norm(m, a) * norm(m, b));
    CHECK(norm(m, QuadInt{0, 1}) == 2);
}

TEST_CASE("norm forms of the worked cubic")
{
    auto f = make_cubic_field(-1, -2, 1);
    BinaryCubicForm s = norm_form_shifted(f);
    CHECK(s == BinaryCubicForm{1, 2, -1, -1});
    CHECK(norm_form_theta(f) == BinaryCubicForm{1, -1, -2, 1});
    CHECK(s.is_irreducible());
    CHECK(s.discriminant() == 49);
    CHECK(s.canonical_encoding() == "1,2,-1,-1");
    CHECK_FALSE(BinaryCubicForm{1, 0, -1, 0}.is_irreducible());
}

TEST_CASE("shifted and theta norm forms are related by x -> x + a2 y")
{
    oracle::Rng rng(22);
    for (int i = 0; i < 30; ++i) {
        auto f = oracle::random_totally_real_cubic(rng);
        auto s = norm_form_shifted(f), t = norm_form_theta(f);
        for (int j = 0; j < 10; ++j) {
            Integer x = rng.integer(-50, 50), y = rng.integer(-50, 50);
            CHECK(s(x + f.a2 * y, y) == t(x, y));
        }
        CHECK(s.discriminant() == f.disc);
    }
}

TEST_CASE("order discriminant matches the trace form")
{
    oracle::Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        auto f = oracle::random_totally_real_cubic(rng);
        auto m = make_imaginary_quadratic(oracle::random_squarefree(rng));
        CompositeOrder o(f, m);
        Integer expected = oracle::sylvester_discriminant(f.polynomial()) * oracle::sylvester_discriminant(f.polynomial())
                           * m.disc * m.disc * m.disc;
        CHECK(o.discriminant() == expected);
        CHECK(o.trace_form_discriminant() == expected);
    }
}

TEST_CASE("structure constants are associative and commutative")
{
    oracle::Rng rng(24);
    auto o = composite_order(make_cubic_field(-1, -2, 1), make_imaginary_quadratic(3));
    for (int i = 0; i < 50; ++i) {
        Coords6 a = random_coords(rng).as_array(), b = random_coords(rng).as_array(), c = random_coords(rng).as_array();
        CHECK(o.multiply(a, b) == o.multiply(b, a));
        CHECK(o.multiply(o.multiply(a, b), c) == o.multiply(a, o.multiply(b, c)));
    }
}

TEST_CASE("index factorization identity")
{
    oracle::Rng rng(25);
    int checked = 0;
    for (int field = 0; field < 6; ++field) {
        auto f = oracle::random_totally_real_cubic(rng);
        auto m = make_imaginary_quadratic(oracle::random_squarefree(rng, 30));
        auto o = composite_order(f, m);
        auto F = build_F(f, m);
        for (int i = 0; i < 25; ++i) {
            ElementCoords a = random_coords(rng);
            UniPoly cp = char_poly(o, a);
            Integer dcp = discriminant(cp);
            auto k = element_index(o, a);
            auto nf = index_factors(o, a);
            Integer Fv = eval_F(F, a);
            if (!k) {
                CHECK(dcp == 0);
                CHECK(nf.n1 * nf.n2 * Fv == 0);
                continue;
            }
            CHECK(dcp == o.discriminant() * *k * *k);
            CHECK(*k == abs(nf.n1 * nf.n2 * Fv));
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("index is invariant under translation and sign")
{
    oracle::Rng rng(26);
    auto o = composite_order(make_cubic_field(-1, -2, 1), make_imaginary_quadratic(5));
    for (int i = 0; i < 40; ++i) {
        ElementCoords a = random_coords(rng);
        auto k = element_index(o, a);
        ElementCoords b = a;
        b.x0 += rng.integer(-20, 20);
        ElementCoords c{-a.x0, -a.x1, -a.x2, -a.y0, -a.y1, -a.y2};
        CHECK(element_index(o, b) == k);
        CHECK(element_index(o, c) == k);
    }
}

TEST_CASE("index form properties")
{
    auto f = make_cubic_field(-1, -2, 1);
    auto F1 = build_F(f, make_imaginary_quadratic(1));
    CHECK(F1.poly.variables() == std::vector<std::string>{"x1", "x2", "y0", "y1", "y2"});
    CHECK(F1.poly.total_degree() == 6);
    CHECK(eval_F(F1, ElementCoords::from5(0, 0, 1, -1, 0)) == -1);
    auto F3 = build_F(f, make_imaginary_quadratic(3));
    CHECK(F3.provenance_case == QuadCase::B);
    oracle::Rng rng(27);
    for (int i = 0; i < 50; ++i) {
        ElementCoords a = random_coords(rng);
        ElementCoords neg{0, -a.x1, -a.x2, -a.y0, -a.y1, -a.y2};
        CHECK(eval_F(F1, a) == eval_F(F1, neg));
        CHECK(eval_F(F3, a) == eval_F(F3, neg));
    }
    CHECK(eval_F(F1, ElementCoords::from5(0, 0, 1, 0, 0)) != 0);
}

TEST_CASE("generic index form has no x0")
{
    MultiPoly const & g = generic_index_form();
    CHECK_FALSE(g.has_variable("x0"));
    CHECK(g.variables().size() == 10);
    CHECK(&g == &generic_index_form());
}

TEST_CASE("parametric index form matches numeric builds")
{
    UniPoly a2 = UniPoly({0, 1, 0, 0, -1}, "t");   // -(t^4 - t)
    UniPoly a1 = UniPoly({0, 0, -2, 0, 0, 1}, "t"); // t^5 - 2 t^2
    UniPoly a0 = UniPoly::constant(1, "t");
    auto P = build_F_parametric(a2, a1, a0);
    CHECK(P.poly.variables() == std::vector<std::string>{"x1", "x2", "y0", "y1", "y2", "t", "d"});
    CHECK(P.poly.degree_in("d") <= 3);
    CHECK_THROWS_AS(build_F_parametric(a2, a1, a0, QuadCase::B), DomainError);
    oracle::Rng rng(28);
    for (long tv : {2, 3, 4})
        for (long dv : {2, 5, 6}) {
            auto f = make_cubic_field(a2(tv), a1(tv), a0(tv));
            auto F = build_F(f, make_imaginary_quadratic(dv));
            for (int i = 0; i < 8; ++i) {
                ElementCoords a = random_coords(rng, 3);
                std::vector<Integer> v{a.x1, a.x2, a.y0, a.y1, a.y2, Integer(tv), Integer(dv)};
                CHECK(P.poly.evaluate(v) == eval_F(F, a));
            }
        }
}

TEST_CASE("bounds table")
{
    CHECK(inequality_bounds(make_imaginary_quadratic(1)) == InequalityBounds{1, 1});
    CHECK(inequality_bounds(make_imaginary_quadratic(3)) == InequalityBounds{8, 1});
    CHECK(inequality_bounds(make_imaginary_quadratic(2)) == InequalityBounds{1, 0});
    CHECK(inequality_bounds(make_imaginary_quadratic(7)) == InequalityBounds{8, 0});
    CHECK(inequality_bounds(make_imaginary_quadratic(11)) == InequalityBounds{8, 0});
    CHECK(inequality_bounds(make_imaginary_quadratic(5)) == InequalityBounds{1, 0});
}
