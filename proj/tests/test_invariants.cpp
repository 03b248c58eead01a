// Joint rational invariants of element tuples: the cross-ratio ladder, the
// second-order invariants, and the genericity chain.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "projconn/exact/error.hpp"
#include "projconn/invariants/invariants.hpp"
#include "projconn/jet/jet.hpp"

using namespace projconn;

namespace {

ElementTuple tuple_of(const std::vector<long>& vs, const std::vector<long>& ws) {
    ElementTuple t;
    for (std::size_t i = 0; i < vs.size(); ++i)
        t.items.push_back(Element2{Rat(vs[i]), Rat(ws[i])});
    return t;
}

ElementTuple random_generic_tuple(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    for (;;) {
        ElementTuple t;
        for (std::size_t i = 0; i < n; ++i)
            t.items.push_back(Element2{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))});
        if (check_genericity(t).generic()) return t;
    }
}

} // namespace

TEST_CASE("cross-ratio worked values and degeneracy") {
    CHECK(cross_ratio(Rat(0), Rat(1), Rat(2), Rat(3)) == Rat(4, 3));
    CHECK(cross_ratio(Rat(0), Rat(2), Rat(1), Rat(3)) == Rat(-1, 3));
    CHECK(cross_ratio(Rat(0), Rat(1), Rat(5), Rat(5)) == Rat(1));
    try {
        cross_ratio(Rat(1), Rat(0), Rat(2), Rat(1));
        FAIL("v4 = v1 must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "degenerate-configuration");
    }
}

TEST_CASE("worked six-element tuple: invariant values") {
    const ElementTuple t = tuple_of({0, 1, 2, 3, 4, 5}, {0, 1, 5, 2, 3, 4});
    const InvariantSet s = compute_invariants(t);
    REQUIRE(s.r.size() == 3);
    CHECK(s.r[0] == Rat(4, 3));
    CHECK(s.r[1] == Rat(3, 2));
    CHECK(s.r[2] == Rat(8, 5));
    REQUIRE(s.omega.size() == 1);
    CHECK(s.omega[0] == Rat(1472, 875));
}

TEST_CASE("sibling tuple trips the omega denominator") {
    const ElementTuple t = tuple_of({0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 6});
    const GenericityReport rep = check_genericity(t);
    REQUIRE(rep.violated.size() == 1);
    CHECK(rep.violated[0] == genericity::omega_denominator_zero);
    try {
        compute_invariants(t);
        FAIL("omega denominator zero must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "omega-denominator-zero");
    }
}

TEST_CASE("genericity report lists violations in chain order") {
    // Coincident directions and w1 = w2 are both still defined, so both appear.
    const ElementTuple both = tuple_of({0, 1, 0, 2}, {3, 3, 1, 1});
    const GenericityReport rep = check_genericity(both);
    REQUIRE(rep.violated.size() == 2);
    CHECK(rep.violated[0] == genericity::coincident_directions);
    CHECK(rep.violated[1] == genericity::w1_equals_w2);

    // s3 = 1: w3 = (v3 - v1)^3 with the normalizing pair at (0,1).
    const ElementTuple s3 = tuple_of({0, 1, 2, 3}, {0, 1, 8, 5});
    REQUIRE(check_genericity(s3).violated ==
            std::vector<std::string>{genericity::s3_equals_1});

    // sigma4 = r4: with v = (0,1,2,3) and w = (0,1,16,63), sigma4 = 4/3 = r4.
    const ElementTuple sig = tuple_of({0, 1, 2, 3}, {0, 1, 16, 63});
    REQUIRE(check_genericity(sig).violated ==
            std::vector<std::string>{genericity::sigma4_equals_r4});
    try {
        compute_invariants(sig);
        FAIL("sigma4 = r4 must throw");
    } catch (const DomainError& e) {
        CHECK(e.condition() == "sigma4-equals-r4");
    }

    ElementTuple small;
    small.items = {Element2{Rat(0), Rat(0)}, Element2{Rat(1), Rat(1)},
                   Element2{Rat(2), Rat(2)}};
    CHECK_THROWS_AS(check_genericity(small), ShapeError);
}

TEST_CASE("invariant cardinality over tuple sizes") {
    std::mt19937 rng(7201);
    for (std::size_t n = 4; n <= 10; ++n) {
        const ElementTuple t = random_generic_tuple(rng, n);
        const InvariantSet s = compute_invariants(t);
        CHECK(s.r.size() == n - 3);
        CHECK(s.omega.size() == (n >= 6 ? n - 5 : 0));
    }
}

TEST_CASE("invariants survive every generator flow on the worked tuple") {
    const ElementTuple t = tuple_of({0, 1, 2, 3, 4, 5}, {0, 1, 5, 2, 3, 4});
    const InvariantSet before = compute_invariants(t);
    for (int k = 1; k <= 8; ++k) {
        // 1/7 keeps every direction v in {0..5} away from infinity.
        const JetMap g = generator_flow(k, Rat(1, 7));
        ElementTuple moved;
        for (const auto& e : t.items) moved.items.push_back(apply(g, e));
        const InvariantSet after = compute_invariants(moved);
        INFO("generator " << k);
        CHECK(before.r == after.r);
        CHECK(before.omega == after.omega);
    }
}
