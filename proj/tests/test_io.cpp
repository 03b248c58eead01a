// Document layer: strict tagged-JSON round trips for every value kind.

#include <catch2/catch_amalgamated.hpp>

#include "projconn/io/document.hpp"
#include "projconn/projconn.hpp"

using namespace projconn;
using projconn::io::json;

TEST_CASE("rational scalars: strings and integers only") {
    CHECK(io::rat_from(json("3/4"), "x") == Rat(3, 4));
    CHECK(io::rat_from(json(-7), "x") == Rat(-7));
    CHECK_THROWS_AS(io::rat_from(json(0.5), "x"), io::DocumentError);
    CHECK_THROWS_AS(io::rat_from(json("seven"), "x"), io::DocumentError);
    CHECK_THROWS_AS(io::rat_from(json(nullptr), "x"), io::DocumentError);
}

TEST_CASE("element documents round-trip and reject junk") {
    const json doc = {{"kind", "elements"},
                      {"items", json::array({json{{"v", "1/2"}, {"w", 3}},
                                             json{{"v", -1}, {"w", "0.25"}}})},
                      {"basepoint", json{{"x", 0}, {"u", 0}}}};
    const ElementTuple t = io::elements_from(doc);
    REQUIRE(t.size() == 2);
    CHECK(t.items[0].v == Rat(1, 2));
    CHECK(t.items[1].w == Rat(1, 4));

    const json back = io::elements_to(t.items, &doc["basepoint"]);
    CHECK(back["kind"] == "elements");
    CHECK(back["items"][0]["v"] == "1/2");
    CHECK(back["basepoint"] == doc["basepoint"]);

    json extra = doc;
    extra["comment"] = "hi";
    CHECK_THROWS_AS(io::elements_from(extra), io::DocumentError);

    json wrong = doc;
    wrong["kind"] = "jetmap";
    CHECK_THROWS_AS(io::elements_from(wrong), io::DocumentError);

    json badfield = doc;
    badfield["items"][0]["z"] = 1;
    CHECK_THROWS_AS(io::elements_from(badfield), io::DocumentError);
}

TEST_CASE("jetmap and connection documents") {
    const JetMap g(Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6), Rat(7), Rat(8));
    const json gdoc = io::jetmap_to(g);
    const JetMap g2 = io::jetmap_from(gdoc);
    CHECK(g2.a == g.a);
    CHECK(g2.xi == g.xi);
    // Missing shear fields are not defaulted silently.
    json partial{{"kind", "jetmap"}, {"a", 1}, {"b", 0}, {"c", 0}, {"d", 1}};
    CHECK_THROWS_AS(io::jetmap_from(partial), io::DocumentError);

    const ProjConnection k(Rat(2), Rat(4), Rat(6), Rat(8), Rat(2));
    const json kdoc = io::connection_to(k);
    CHECK(kdoc["A"] == "1");  // serialized in normalized form
    CHECK(io::connection_from(kdoc) == k);
    const json with_e{{"kind", "connection"}, {"A", 2}, {"B", 4}, {"C", 6}, {"D", 8},
                      {"E", 2}};
    CHECK(io::connection_from(with_e) == k);
}

TEST_CASE("polynomial documents preserve ascending term order") {
    const std::vector<std::string> xy{"x", "y"};
    const PolyMV p = PolyMV::monomial(xy, {2, 0}, Rat(3)) +
                     PolyMV::monomial(xy, {0, 1}, Rat(-1, 2));
    const json j = io::poly_to(p);
    CHECK(io::poly_from(j) == p);
    REQUIRE(j["terms"].size() == 2);
    // Ascending lexicographic on exponent tuples: (0,1) before (2,0).
    CHECK(j["terms"][0]["exps"] == json::array({0, 1}));
    CHECK(j["terms"][1]["coef"] == "3");

    json bad = j;
    bad["terms"][0]["exps"] = json::array({0});
    CHECK_THROWS_AS(io::poly_from(bad), io::DocumentError);
}

TEST_CASE("model, rank2, and geometry documents") {
    const json lap{{"kind", "model"}, {"type", "laplace-net"}, {"a", 3}, {"b", 5},
                   {"c", 2}};
    const SurfaceFrameModel m = io::model_from(lap);
    REQUIRE(std::holds_alternative<LaplaceNet>(m));
    CHECK(std::get<LaplaceNet>(m).b == Rat(5));
    CHECK(io::model_to(m) == json{{"kind", "model"}, {"type", "laplace-net"},
                                  {"a", "3"}, {"b", "5"}, {"c", "2"}});
    CHECK_THROWS_AS(
        io::model_from(json{{"kind", "model"}, {"type", "moebius-strip"}}),
        io::DocumentError);

    RankTwoEq q;
    q.A0 = Rat(1);
    q.B0 = q.B1 = q.B2 = q.B3 = Rat(0);
    q.C0 = Rat(2); q.C1 = Rat(0); q.C2 = Rat(0); q.C3 = Rat(0);
    q.C4 = Rat(0); q.C5 = Rat(0); q.C6 = Rat(3);
    const json qdoc = io::rank2_to(q);
    CHECK(io::rank2_from(qdoc).C6 == Rat(3));

    const LaplaceNet model{Rat(3), Rat(5), Rat(2)};
    const PluckerLine line =
        geometry_from_connection(model, ProjConnection(Rat(1), Rat(2), Rat(3), Rat(4)));
    const json ldoc = io::line_to(line);
    CHECK(io::geometry_type(ldoc) == "line");
    CHECK(io::line_from(ldoc).p12() == Rat(76));

    const PencilData pencil = geometry_from_connection(
        Parabolic{Rat(3), Rat(5), Rat(7)}, ProjConnection(Rat(2), Rat(-1), Rat(4), Rat(-3)));
    CHECK(io::pencil_from(io::pencil_to(pencil)).alpha() == pencil.alpha());

    const GrassmannPlane plane = geometry_from_connection(
        GeneralSurface{}, ProjConnection(Rat(2), Rat(3), Rat(5), Rat(7)));
    CHECK(io::plane_from(io::plane_to(plane)).components() == plane.components());

    const std::vector<ConePoint> pts{embed(Element2{Rat(2), Rat(5)}),
                                     ConePoint::vertex()};
    const json cdoc = io::cone_points_to(pts);
    CHECK(io::geometry_type(cdoc) == "cone-points");
    const auto pts2 = io::cone_points_from(cdoc);
    REQUIRE(pts2.size() == 2);
    CHECK(pts2[0] == pts[0]);
    CHECK(pts2[1] == pts[1]);
}

TEST_CASE("invariants, errata, and error documents have stable shapes") {
    InvariantSet s;
    s.r = {Rat(4, 3)};
    s.omega = {Rat(1472, 875)};
    const json inv = io::invariants_to(s);
    CHECK(inv == json{{"kind", "invariants"},
                      {"r", json::array({"4/3"})},
                      {"omega", json::array({"1472/875"})}});

    const json err = io::error_to("inflection", "element has no centre (w = 0)");
    CHECK(err["kind"] == "error");
    CHECK(err["condition"] == "inflection");

    ErrataEntry entry{"sample-formula", "t", "d", "matches", "evidence"};
    const json rep = io::errata_to({entry});
    CHECK(rep["report"] == "errata");
    REQUIRE(rep["entries"].size() == 1);
    CHECK(rep["entries"][0]["formula"] == "sample-formula");
    CHECK(rep["entries"][0]["status"] == "matches");
}
