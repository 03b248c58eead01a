// Exact kernel: rationals, polynomials, linear algebra, resultants,
// discriminants, implicitization.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "projconn/exact/error.hpp"
#include "projconn/exact/forms.hpp"
#include "projconn/exact/implicitize.hpp"
#include "projconn/exact/matrix.hpp"
#include "projconn/exact/poly.hpp"
#include "projconn/exact/rat.hpp"

using namespace projconn;

namespace {

const std::vector<std::string> UVW{"U", "V", "W"};

PolyMV mono3(unsigned u, unsigned v, unsigned w, long c) {
    return PolyMV::monomial(UVW, {u, v, w}, Rat(c));
}

} // namespace

TEST_CASE("rationals normalize and print canonically") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(0, 7) == Rat());
    CHECK(Rat(5).str() == "5");
    CHECK(Rat(-7, 3).str() == "-7/3");
    CHECK(Rat(4, 2).str() == "2");
    CHECK_THROWS_AS(Rat(1, 0), ShapeError);
}

TEST_CASE("rational parsing accepts integers, fractions, exact decimals") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat::parse("0.25") == Rat(1, 4));
    CHECK(Rat::parse("-1.5") == Rat(-3, 2));
    // Leading zeros must stay decimal, never flip to octal.
    CHECK(Rat::parse("0.0625") == Rat(1, 16));
    CHECK(Rat::parse("010") == Rat(10));
    CHECK_THROWS(Rat::parse("three"));
    CHECK_THROWS(Rat::parse("1/0"));
}

TEST_CASE("rational arithmetic is a field with tagged division by zero") {
    const Rat a(3, 4), b(-2, 5);
    CHECK(a + b == Rat(7, 20));
    CHECK(a * b == Rat(-3, 10));
    CHECK(a / b == Rat(-15, 8));
    CHECK(a - a == Rat(0));
    CHECK(a.inverse() == Rat(4, 3));
    CHECK(b.pow(3) == Rat(-8, 125));
    CHECK(b.abs() == Rat(2, 5));
    CHECK(b.sign() == -1);
    CHECK(a > b);
    try {
        (void)(a / Rat(0));
        FAIL("division by zero must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "division-by-zero");
    }
}

TEST_CASE("matrix determinant, product shape checks, exact solving") {
    MatQ m(3, 3, Rat(0));
    const long entries[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Rat(entries[i][j]);
    // By cofactor expansion: 2*(3*4 - 1*1) - 1*(1*4 - 1*0) + 0 = 18.
    CHECK(m.det() == Rat(18));

    const MatQ id = MatQ::identity(3, Rat(0), Rat(1));
    CHECK(m * id == m);
    CHECK_THROWS_AS(m * MatQ(2, 2, Rat(0)), ShapeError);

    const std::vector<Rat> sol = solve_linear(m, {Rat(1), Rat(0), Rat(0)});
    // Verify by substitution instead of trusting a precomputed inverse.
    for (std::size_t i = 0; i < 3; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < 3; ++j) acc += m.at(i, j) * sol[j];
        CHECK(acc == (i == 0 ? Rat(1) : Rat(0)));
    }

    MatQ sing(2, 2, Rat(1));
    try {
        solve_linear(sing, {Rat(1), Rat(2)});
        FAIL("singular system must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "singular-system");
    }

    CHECK(rank(sing) == 1);
    const auto ker = kernel_basis(sing);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] + ker[0][1] == Rat(0));
}

TEST_CASE("polynomials: arithmetic, evaluation, content, division") {
    const std::vector<std::string> xy{"x", "y"};
    const PolyMV x = PolyMV::variable(xy, "x");
    const PolyMV y = PolyMV::variable(xy, "y");

    const PolyMV p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.eval({Rat(3), Rat(2)}) == Rat(5));
    CHECK(p.substitute("y", Rat(1)) == x * x - PolyMV::constant(xy, Rat(1)));
    CHECK(p.deg_in("x") == 2);
    CHECK(p.total_degree() == 2);

    const PolyMV q = Rat(4) * x + Rat(6) * y;
    CHECK(q.content() == Rat(2));
    CHECK(q.primitive() == Rat(2) * x + Rat(3) * y);
    // Primitive normalization makes the first ascending-lex term positive.
    CHECK((-q).primitive() == Rat(2) * x + Rat(3) * y);

    const auto quot = (p * q).try_divide(q);
    REQUIRE(quot.has_value());
    CHECK(*quot == p);
    CHECK_FALSE((p + PolyMV::constant(xy, Rat(1))).try_divide(q).has_value());

    CHECK(p.proportional_to(Rat(-7) * p));
    CHECK_FALSE(p.proportional_to(q));

    // coeffs_in keeps the original variable list, zeroing the extracted one.
    const auto cs = (x * x * y + x + Rat(2) * y).coeffs_in("x");
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == Rat(2) * y);
    CHECK(cs[1] == PolyMV::constant(xy, Rat(1)));
    CHECK(cs[2] == y);
}

TEST_CASE("resultant follows the fixed sign convention") {
    const std::vector<std::string> xs{"x"};
    const PolyMV x = PolyMV::variable(xs, "x");
    const PolyMV one = PolyMV::constant(xs, Rat(1));
    CHECK(resultant(x - one, x - Rat(2) * one, "x") ==
          PolyMV::constant(xs, Rat(1)));

    const std::vector<std::string> xy{"x", "y"};
    const PolyMV X = PolyMV::variable(xy, "x");
    const PolyMV Y = PolyMV::variable(xy, "y");
    const PolyMV I = PolyMV::constant(xy, Rat(1));
    CHECK(resultant(X * X - Y, X - I, "x") == I - Y);

    try {
        resultant(Y, X - I, "x");
        FAIL("degree zero must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "degree-zero-in-variable");
    }
}

TEST_CASE("cubic discriminant equals the squared root differences") {
    // (s-t)(s-2t)(s-3t) = s^3 - 6 s^2 t + 11 s t^2 - 6 t^3 has roots 1,2,3,
    // so the discriminant is (1-2)^2 (1-3)^2 (2-3)^2 = 4.
    const BinaryForm3 f = BinaryForm3::constants(Rat(1), Rat(-6), Rat(11), Rat(-6));
    CHECK(discriminant3(f).constant_value() == Rat(4));

    // Double root (s-t)^2 (s-2t): discriminant vanishes.
    const BinaryForm3 g = BinaryForm3::constants(Rat(1), Rat(-4), Rat(5), Rat(-2));
    CHECK(discriminant3(g).constant_value() == Rat(0));
}

TEST_CASE("implicitization recovers conic, cubic, and line images") {
    auto form = [](long c0, long c1, long c2, long c3) {
        return BinaryForm3::constants(Rat(c0), Rat(c1), Rat(c2), Rat(c3));
    };

    // (2st^2, -2s^2 t, s^3): conic V^2 - 2 U W.
    const PolyMV conic = implicitize_cubic_curve(form(0, 0, 2, 0), form(0, -2, 0, 0),
                                                 form(1, 0, 0, 0));
    CHECK(conic == mono3(0, 2, 0, 1) + mono3(1, 0, 1, -2));

    // (2st^2, -2s^2 t, s^3 + t^3): cuspidal cubic 2UVW + U^3 - V^3.
    const PolyMV cubic = implicitize_cubic_curve(form(0, 0, 2, 0), form(0, -2, 0, 0),
                                                 form(1, 0, 0, 1));
    CHECK(cubic.proportional_to(mono3(1, 1, 1, 2) + mono3(3, 0, 0, 1) +
                                mono3(0, 3, 0, -1)));

    // (2st^2, -2s^2 t, s^2 t): the image is the line V + 2W = 0.
    const PolyMV line = implicitize_cubic_curve(form(0, 0, 2, 0), form(0, -2, 0, 0),
                                                form(0, 1, 0, 0));
    CHECK(line.proportional_to(mono3(0, 1, 0, 1) + mono3(0, 0, 1, 2)));

    // Proportional forms: the image degenerates to a point.
    try {
        implicitize_cubic_curve(form(1, 0, 0, 0), form(2, 0, 0, 0), form(3, 0, 0, 0));
        FAIL("degenerate image must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "degenerate-image");
    }
}
