// Connections over a point: fitting, pullback, centres of curvature, and
// central loci with their degeneration ladder.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "projconn/connection/connection.hpp"
#include "projconn/exact/error.hpp"
#include "projconn/jet/jet.hpp"

using namespace projconn;

namespace {

const std::vector<std::string> XY{"x0", "y0"};

PolyMV mono(unsigned i, unsigned j, const Rat& c) {
    return PolyMV::monomial(XY, {i, j}, c);
}

JetMap random_map(std::mt19937& rng, bool with_shear) {
    std::uniform_int_distribution<long> d(-5, 5);
    for (;;) {
        const long a = d(rng), b = d(rng), c = d(rng), dd = d(rng);
        if (a * dd == b * c) continue;
        if (!with_shear) return JetMap(Rat(a), Rat(b), Rat(c), Rat(dd));
        return JetMap(Rat(a), Rat(b), Rat(c), Rat(dd), Rat(d(rng)), Rat(d(rng)),
                      Rat(d(rng)), Rat(d(rng)));
    }
}

ProjConnection random_connection(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-6, 6);
    return ProjConnection(Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng)));
}

} // namespace

TEST_CASE("connection normalization and fitting") {
    const ProjConnection k(Rat(2), Rat(4), Rat(6), Rat(8), Rat(2));
    CHECK(k.A() == Rat(1));
    CHECK(k.B() == Rat(2));
    CHECK(k.C() == Rat(3));
    CHECK(k.D() == Rat(4));
    CHECK(k.E_display() == Rat(2));
    try {
        ProjConnection(Rat(1), Rat(0), Rat(0), Rat(0), Rat(0));
        FAIL("zero leading coefficient must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "zero-leading-coefficient");
    }

    // Four elements on w = v^3 pin down (A,B,C,D) = (0,0,0,1).
    const ProjConnection fitted =
        fit_connection(Element2{Rat(0), Rat(0)}, Element2{Rat(1), Rat(1)},
                       Element2{Rat(2), Rat(8)}, Element2{Rat(3), Rat(27)});
    CHECK(fitted == ProjConnection(Rat(0), Rat(0), Rat(0), Rat(1)));
    CHECK(satisfies(fitted, Element2{Rat(5), Rat(125)}));
    CHECK_FALSE(satisfies(fitted, Element2{Rat(5), Rat(124)}));

    // Repeated directions make the Vandermonde system singular.
    try {
        fit_connection(Element2{Rat(0), Rat(0)}, Element2{Rat(0), Rat(1)},
                       Element2{Rat(2), Rat(8)}, Element2{Rat(3), Rat(27)});
        FAIL("repeated direction must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "singular-system");
    }
}

TEST_CASE("pullback matches the fit-of-transformed-elements oracle") {
    std::mt19937 rng(7301);
    std::uniform_int_distribution<long> vdist(-9, 9);
    int done = 0;
    while (done < 30) {
        const ProjConnection k = random_connection(rng);
        const JetMap g = random_map(rng, true);
        // Four distinct directions on k, pushed through g.
        std::vector<Element2> moved;
        bool ok = true;
        for (long v = -2; v <= 1 && ok; ++v) {
            const Element2 e{Rat(v), k.rhs_at(Rat(v))};
            try {
                moved.push_back(apply(g, e));
            } catch (const DomainError&) {
                ok = false;
            }
        }
        if (!ok) continue;
        ProjConnection lhs = transform_connection(g, k);
        // The images may share directions only if g identified them; the
        // linear-fractional part is injective, so the fit is well posed.
        const ProjConnection oracle = fit_connection(moved[0], moved[1], moved[2], moved[3]);
        CHECK(lhs == oracle);
        for (const auto& m : moved) CHECK(satisfies(lhs, m));
        ++done;
    }
}

TEST_CASE("centre of curvature: worked values and commutation") {
    CHECK(centre(Element2{Rat(1), Rat(1)}) == Centre{Rat(-2), Rat(2)});
    try {
        centre(Element2{Rat(3), Rat(0)});
        FAIL("inflection element must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "inflection");
    }

    // Pure shear g = identity + lambda: (-2,2) -> (-1,1).
    const JetMap shear(Rat(1), Rat(0), Rat(0), Rat(1), Rat(1));
    CHECK(centre_transform(shear, Centre{Rat(-2), Rat(2)}) == Centre{Rat(-1), Rat(1)});

    // Pure scaling a=2: (-2,2) -> (-5, 5/2).
    const JetMap scale(Rat(2), Rat(0), Rat(0), Rat(1));
    CHECK(centre_transform(scale, Centre{Rat(-2), Rat(2)}) ==
          Centre{Rat(-5), Rat(5, 2)});

    // lambda = -1 sends this centre to infinity.
    const JetMap bad(Rat(1), Rat(0), Rat(0), Rat(1), Rat(-1));
    try {
        centre_transform(bad, Centre{Rat(-2), Rat(2)});
        FAIL("centre at infinity must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "centre-at-infinity");
    }

    std::mt19937 rng(7302);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    int done = 0;
    while (done < 50) {
        const Element2 e{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        const JetMap g = random_map(rng, true);
        try {
            const Centre lhs = centre(apply(g, e));
            const Centre rhs = centre_transform(g, centre(e));
            CHECK(lhs == rhs);
            ++done;
        } catch (const DomainError&) {
            // inflection / infinity configurations are outside the statement
        }
    }
}

TEST_CASE("rank-one central locus: closed form and membership") {
    const ProjConnection k(Rat(1), Rat(2), Rat(3), Rat(4));
    const PolyMV expected = mono(2, 0, Rat(1)) + mono(0, 2, Rat(1)) +
                            mono(3, 0, k.D()) - mono(2, 1, k.C()) +
                            mono(1, 2, k.B()) - mono(0, 3, k.A());
    CHECK(central_locus_rank1(k) == expected);

    std::mt19937 rng(7303);
    std::uniform_int_distribution<long> vnum(-9, 9);
    int done = 0;
    while (done < 40) {
        const ProjConnection kk = random_connection(rng);
        const PolyMV locus = central_locus_rank1(kk);
        const Rat v(vnum(rng), 1 + (done % 3));
        const Rat w = kk.rhs_at(v);
        if (w.is_zero()) continue;
        const Centre c = centre(Element2{v, w});
        CHECK(locus.eval({c.x0, c.y0}) == Rat(0));
        ++done;
    }
}

TEST_CASE("raw central substitution is multiplicative on safe factors") {
    const std::vector<std::string> vw{"v", "w"};
    const PolyMV v = PolyMV::variable(vw, "v");
    const PolyMV w = PolyMV::variable(vw, "w");
    const PolyMV one = PolyMV::constant(vw, Rat(1));
    const PolyMV p = v + w;
    const PolyMV q = v * v + w + one;
    CHECK(detail::central_locus_raw(p * q) ==
          detail::central_locus_raw(p) * detail::central_locus_raw(q));
}

TEST_CASE("rank-two classification ladder") {
    // Generic primes: a genuine sextic carrying the verbatim substitution.
    RankTwoEq gen;
    gen.A0 = Rat(2);
    gen.B0 = Rat(3); gen.B1 = Rat(5); gen.B2 = Rat(7); gen.B3 = Rat(11);
    gen.C0 = Rat(13); gen.C1 = Rat(17); gen.C2 = Rat(19); gen.C3 = Rat(23);
    gen.C4 = Rat(29); gen.C5 = Rat(31); gen.C6 = Rat(37);
    const Rank2Classification sextic = classify_rank2(gen);
    CHECK(sextic.kind == "sextic");
    CHECK(sextic.locus == detail::central_locus_raw(gen.to_poly()));
    CHECK(sextic.locus.total_degree() == 6);

    // Planted quartic: C3 = C1 + C5 and C0 + C4 = C2 + C6, but not conic.
    RankTwoEq qrt;
    qrt.A0 = Rat(0);
    qrt.B0 = Rat(0); qrt.B1 = Rat(0); qrt.B2 = Rat(0); qrt.B3 = Rat(0);
    qrt.C0 = Rat(1); qrt.C1 = Rat(0); qrt.C2 = Rat(2); qrt.C3 = Rat(0);
    qrt.C4 = Rat(2); qrt.C5 = Rat(0); qrt.C6 = Rat(1);
    const Rank2Classification quartic = classify_rank2(qrt);
    CHECK(quartic.kind == "quartic");
    const PolyMV circ = mono(2, 0, Rat(1)) + mono(0, 2, Rat(1));
    CHECK(quartic.locus * circ == detail::central_locus_raw(qrt.to_poly()));

    // Planted conic; the residual quadric matches the coefficient map
    // A0 + B0*y0 - B1*x0 + C6*x0^2 - C5*x0*y0 + C0*y0^2 exactly.
    RankTwoEq con;
    con.A0 = Rat(7);
    con.B0 = Rat(1); con.B1 = Rat(0); con.B2 = Rat(1); con.B3 = Rat(0);
    con.C0 = Rat(1); con.C1 = Rat(0); con.C2 = Rat(4); con.C3 = Rat(0);
    con.C4 = Rat(5); con.C5 = Rat(0); con.C6 = Rat(2);
    const Rank2Classification conic = classify_rank2(con);
    CHECK(conic.kind == "conic");
    CHECK(conic.locus == mono(0, 0, Rat(7)) + mono(0, 1, Rat(1)) +
                             mono(2, 0, Rat(2)) + mono(0, 2, Rat(1)));
    CHECK(conic.locus * circ * circ == detail::central_locus_raw(con.to_poly()));
}
