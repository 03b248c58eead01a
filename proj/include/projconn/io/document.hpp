#pragma once

// JSON document layer: every value crossing the process boundary is encoded
// as a tagged document with exact rationals serialized as canonical strings.
// Parsing is strict — unknown fields, missing fields, wrong shapes, and
// precision-lossy number types are all rejected with DocumentError.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "projconn/connection/connection.hpp"
#include "projconn/cone/cone.hpp"
#include "projconn/errata.hpp"
#include "projconn/exact/poly.hpp"
#include "projconn/exact/rat.hpp"
#include "projconn/invariants/invariants.hpp"
#include "projconn/jet/jet.hpp"
#include "projconn/osculating/incidence.hpp"
#include "projconn/osculating/models.hpp"

namespace projconn::io {

using json = nlohmann::ordered_json;

struct DocumentError : std::runtime_error {
    explicit DocumentError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw DocumentError(msg); }

inline void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                       const char* what) {
    if (!obj.is_object()) fail(std::string(what) + ": expected a JSON object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known) fail(std::string(what) + ": unknown field \"" + item.key() + "\"");
    }
}

inline const json& field(const json& obj, const char* key, const char* what) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

inline void require_kind(const json& doc, const char* kind) {
    if (!doc.is_object()) fail("document must be a JSON object");
    const auto it = doc.find("kind");
    if (it == doc.end()) fail("document has no \"kind\" tag");
    if (!it->is_string() || it->get<std::string>() != kind)
        fail(std::string("expected a \"") + kind + "\" document");
}

// --- scalars ----------------------------------------------------------------

inline Rat rat_from(const json& j, const char* what) {
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(std::string(what) + ": " + e.what());
        }
    }
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<std::int64_t>()));
    fail(std::string(what) + ": rationals must be strings \"p/q\" or integers");
}

inline json rat_to(const Rat& r) { return json(r.str()); }

inline Rat rat_field(const json& obj, const char* key, const char* what) {
    return rat_from(field(obj, key, what), key);
}

template <std::size_t N>
inline std::array<Rat, N> rat_array(const json& j, const char* what) {
    if (!j.is_array() || j.size() != N)
        fail(std::string(what) + ": expected an array of " + std::to_string(N) +
             " rationals");
    std::array<Rat, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = rat_from(j[i], what);
    return out;
}

// --- polynomials ------------------------------------------------------------

inline json poly_to(const PolyMV& p) {
    json vars = json::array();
    for (const auto& v : p.vars()) vars.push_back(v);
    json terms = json::array();
    for (const auto& [exps, coef] : p.terms()) {
        json e = json::array();
        for (unsigned x : exps) e.push_back(x);
        terms.push_back(json{{"exps", std::move(e)}, {"coef", coef.str()}});
    }
    return json{{"variables", std::move(vars)}, {"terms", std::move(terms)}};
}

inline PolyMV poly_from(const json& j) {
    check_keys(j, {"variables", "terms"}, "polynomial");
    const json& vars_j = field(j, "variables", "polynomial");
    if (!vars_j.is_array() || vars_j.empty()) fail("polynomial: variables must be a nonempty array");
    std::vector<std::string> vars;
    for (const auto& v : vars_j) {
        if (!v.is_string()) fail("polynomial: variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    PolyMV p = PolyMV::zero(vars);
    const json& terms = field(j, "terms", "polynomial");
    if (!terms.is_array()) fail("polynomial: terms must be an array");
    for (const auto& t : terms) {
        check_keys(t, {"exps", "coef"}, "polynomial term");
        const json& exps_j = field(t, "exps", "polynomial term");
        if (!exps_j.is_array() || exps_j.size() != vars.size())
            fail("polynomial term: exps length must match the variable list");
        std::vector<unsigned> exps;
        for (const auto& e : exps_j) {
            if (!e.is_number_unsigned()) fail("polynomial term: exponents must be nonnegative integers");
            exps.push_back(e.get<unsigned>());
        }
        p += PolyMV::monomial(vars, exps, rat_from(field(t, "coef", "polynomial term"), "coef"));
    }
    return p;
}

// --- elements ---------------------------------------------------------------

inline ElementTuple elements_from(const json& doc) {
    require_kind(doc, "elements");
    check_keys(doc, {"kind", "items", "basepoint"}, "elements document");
    const json& items = field(doc, "items", "elements document");
    if (!items.is_array() || items.empty())
        fail("elements document: items must be a nonempty array");
    ElementTuple t;
    for (const auto& item : items) {
        check_keys(item, {"v", "w"}, "element");
        t.items.push_back(Element2{rat_field(item, "v", "element"),
                                   rat_field(item, "w", "element")});
    }
    if (auto it = doc.find("basepoint"); it != doc.end())
        check_keys(*it, {"x", "u"}, "basepoint");
    return t;
}

inline json elements_to(const std::vector<Element2>& items,
                        const json* basepoint = nullptr) {
    json arr = json::array();
    for (const auto& e : items)
        arr.push_back(json{{"v", rat_to(e.v)}, {"w", rat_to(e.w)}});
    json doc{{"kind", "elements"}, {"items", std::move(arr)}};
    if (basepoint != nullptr) doc["basepoint"] = *basepoint;
    return doc;
}

// --- jet maps ---------------------------------------------------------------

inline JetMap jetmap_from(const json& doc) {
    require_kind(doc, "jetmap");
    check_keys(doc, {"kind", "a", "b", "c", "d", "lambda", "mu", "nu", "xi"},
               "jetmap document");
    return JetMap(rat_field(doc, "a", "jetmap"), rat_field(doc, "b", "jetmap"),
                  rat_field(doc, "c", "jetmap"), rat_field(doc, "d", "jetmap"),
                  rat_field(doc, "lambda", "jetmap"), rat_field(doc, "mu", "jetmap"),
                  rat_field(doc, "nu", "jetmap"), rat_field(doc, "xi", "jetmap"));
}

inline json jetmap_to(const JetMap& g) {
    return json{{"kind", "jetmap"},   {"a", rat_to(g.a)},      {"b", rat_to(g.b)},
                {"c", rat_to(g.c)},   {"d", rat_to(g.d)},      {"lambda", rat_to(g.lambda)},
                {"mu", rat_to(g.mu)}, {"nu", rat_to(g.nu)},    {"xi", rat_to(g.xi)}};
}

// --- connections ------------------------------------------------------------

inline ProjConnection connection_from(const json& doc) {
    require_kind(doc, "connection");
    check_keys(doc, {"kind", "A", "B", "C", "D", "E"}, "connection document");
    Rat e(1);
    if (doc.find("E") != doc.end()) e = rat_field(doc, "E", "connection");
    return ProjConnection(rat_field(doc, "A", "connection"),
                          rat_field(doc, "B", "connection"),
                          rat_field(doc, "C", "connection"),
                          rat_field(doc, "D", "connection"), e);
}

inline json connection_to(const ProjConnection& k) {
    return json{{"kind", "connection"}, {"A", rat_to(k.A())}, {"B", rat_to(k.B())},
                {"C", rat_to(k.C())},   {"D", rat_to(k.D())}};
}

// --- rank-two equations -----------------------------------------------------

inline RankTwoEq rank2_from(const json& doc) {
    require_kind(doc, "rank2");
    check_keys(doc,
               {"kind", "A0", "B0", "B1", "B2", "B3", "C0", "C1", "C2", "C3", "C4",
                "C5", "C6"},
               "rank2 document");
    return RankTwoEq{rat_field(doc, "A0", "rank2"), rat_field(doc, "B0", "rank2"),
                     rat_field(doc, "B1", "rank2"), rat_field(doc, "B2", "rank2"),
                     rat_field(doc, "B3", "rank2"), rat_field(doc, "C0", "rank2"),
                     rat_field(doc, "C1", "rank2"), rat_field(doc, "C2", "rank2"),
                     rat_field(doc, "C3", "rank2"), rat_field(doc, "C4", "rank2"),
                     rat_field(doc, "C5", "rank2"), rat_field(doc, "C6", "rank2")};
}

inline json rank2_to(const RankTwoEq& q) {
    return json{{"kind", "rank2"},     {"A0", rat_to(q.A0)}, {"B0", rat_to(q.B0)},
                {"B1", rat_to(q.B1)},  {"B2", rat_to(q.B2)}, {"B3", rat_to(q.B3)},
                {"C0", rat_to(q.C0)},  {"C1", rat_to(q.C1)}, {"C2", rat_to(q.C2)},
                {"C3", rat_to(q.C3)},  {"C4", rat_to(q.C4)}, {"C5", rat_to(q.C5)},
                {"C6", rat_to(q.C6)}};
}

// --- surface frame models ----------------------------------------------------

inline SurfaceFrameModel model_from(const json& doc) {
    require_kind(doc, "model");
    const json& type_j = field(doc, "type", "model document");
    if (!type_j.is_string()) fail("model document: type must be a string");
    const std::string type = type_j.get<std::string>();
    if (type == "asymptotic-net") {
        check_keys(doc, {"kind", "type", "a", "b", "c", "a1", "b1", "c1"},
                   "asymptotic-net model");
        return AsymptoticNet{rat_field(doc, "a", "model"), rat_field(doc, "b", "model"),
                             rat_field(doc, "c", "model"), rat_field(doc, "a1", "model"),
                             rat_field(doc, "b1", "model"), rat_field(doc, "c1", "model")};
    }
    if (type == "laplace-net") {
        check_keys(doc, {"kind", "type", "a", "b", "c"}, "laplace-net model");
        return LaplaceNet{rat_field(doc, "a", "model"), rat_field(doc, "b", "model"),
                          rat_field(doc, "c", "model")};
    }
    if (type == "parabolic") {
        check_keys(doc, {"kind", "type", "a", "b", "c"}, "parabolic model");
        return Parabolic{rat_field(doc, "a", "model"), rat_field(doc, "b", "model"),
                         rat_field(doc, "c", "model")};
    }
    if (type == "general-surface") {
        check_keys(doc, {"kind", "type"}, "general-surface model");
        return GeneralSurface{};
    }
    if (type == "plane-surface") {
        check_keys(doc,
                   {"kind", "type", "c", "a", "b", "p", "alpha", "beta", "q", "r", "s"},
                   "plane-surface model");
        return PlaneSurface{rat_field(doc, "c", "model"),     rat_field(doc, "a", "model"),
                            rat_field(doc, "b", "model"),     rat_field(doc, "p", "model"),
                            rat_field(doc, "alpha", "model"), rat_field(doc, "beta", "model"),
                            rat_field(doc, "q", "model"),     rat_field(doc, "r", "model"),
                            rat_field(doc, "s", "model")};
    }
    if (type == "developable") {
        check_keys(doc, {"kind", "type", "beta", "a", "b", "p", "alpha"},
                   "developable model");
        return Developable{rat_field(doc, "beta", "model"), rat_field(doc, "a", "model"),
                           rat_field(doc, "b", "model"), rat_field(doc, "p", "model"),
                           rat_field(doc, "alpha", "model")};
    }
    fail("model document: unknown type \"" + type + "\"");
}

inline json model_to(const SurfaceFrameModel& m) {
    if (const auto* n = std::get_if<AsymptoticNet>(&m))
        return json{{"kind", "model"},   {"type", "asymptotic-net"},
                    {"a", rat_to(n->a)}, {"b", rat_to(n->b)},
                    {"c", rat_to(n->c)}, {"a1", rat_to(n->a1)},
                    {"b1", rat_to(n->b1)}, {"c1", rat_to(n->c1)}};
    if (const auto* n = std::get_if<LaplaceNet>(&m))
        return json{{"kind", "model"},
                    {"type", "laplace-net"},
                    {"a", rat_to(n->a)},
                    {"b", rat_to(n->b)},
                    {"c", rat_to(n->c)}};
    if (const auto* n = std::get_if<Parabolic>(&m))
        return json{{"kind", "model"},
                    {"type", "parabolic"},
                    {"a", rat_to(n->a)},
                    {"b", rat_to(n->b)},
                    {"c", rat_to(n->c)}};
    if (std::get_if<GeneralSurface>(&m))
        return json{{"kind", "model"}, {"type", "general-surface"}};
    if (const auto* n = std::get_if<PlaneSurface>(&m))
        return json{{"kind", "model"},       {"type", "plane-surface"},
                    {"c", rat_to(n->c)},     {"a", rat_to(n->a)},
                    {"b", rat_to(n->b)},     {"p", rat_to(n->p)},
                    {"alpha", rat_to(n->alpha)}, {"beta", rat_to(n->beta)},
                    {"q", rat_to(n->q)},     {"r", rat_to(n->r)},
                    {"s", rat_to(n->s)}};
    const auto& n = std::get<Developable>(m);
    return json{{"kind", "model"},   {"type", "developable"}, {"beta", rat_to(n.beta)},
                {"a", rat_to(n.a)},  {"b", rat_to(n.b)},      {"p", rat_to(n.p)},
                {"alpha", rat_to(n.alpha)}};
}

// --- geometries ---------------------------------------------------------------

inline std::string geometry_type(const json& doc) {
    require_kind(doc, "geometry");
    const json& t = field(doc, "type", "geometry document");
    if (!t.is_string()) fail("geometry document: type must be a string");
    return t.get<std::string>();
}

inline json centre_to(const Centre& c) {
    return json{{"kind", "geometry"},
                {"type", "centre"},
                {"x0", rat_to(c.x0)},
                {"y0", rat_to(c.y0)}};
}

inline PluckerLine line_from(const json& doc) {
    check_keys(doc, {"kind", "type", "p12", "p13", "p14", "p23", "p42", "p34"},
               "line geometry");
    return PluckerLine(rat_field(doc, "p12", "line"), rat_field(doc, "p13", "line"),
                       rat_field(doc, "p14", "line"), rat_field(doc, "p23", "line"),
                       rat_field(doc, "p42", "line"), rat_field(doc, "p34", "line"));
}

inline json line_to(const PluckerLine& l) {
    return json{{"kind", "geometry"},     {"type", "line"},
                {"p12", rat_to(l.p12())}, {"p13", rat_to(l.p13())},
                {"p14", rat_to(l.p14())}, {"p23", rat_to(l.p23())},
                {"p42", rat_to(l.p42())}, {"p34", rat_to(l.p34())}};
}

inline PencilData pencil_from(const json& doc) {
    check_keys(doc, {"kind", "type", "alpha", "beta", "beta_prime"}, "pencil geometry");
    return PencilData(rat_array<4>(field(doc, "alpha", "pencil"), "alpha"),
                      rat_array<4>(field(doc, "beta", "pencil"), "beta"),
                      rat_array<4>(field(doc, "beta_prime", "pencil"), "beta_prime"));
}

inline json pencil_to(const PencilData& p) {
    auto arr = [](const std::array<Rat, 4>& a) {
        json out = json::array();
        for (const auto& r : a) out.push_back(r.str());
        return out;
    };
    return json{{"kind", "geometry"},
                {"type", "pencil"},
                {"alpha", arr(p.alpha())},
                {"beta", arr(p.beta())},
                {"beta_prime", arr(p.beta_prime())}};
}

inline GrassmannPlane plane_from(const json& doc) {
    check_keys(doc,
               {"kind", "type", "p123", "p124", "p125", "p134", "p135", "p145", "p234",
                "p235", "p245", "p345"},
               "plane geometry");
    return GrassmannPlane(std::array<Rat, 10>{
        rat_field(doc, "p123", "plane"), rat_field(doc, "p124", "plane"),
        rat_field(doc, "p125", "plane"), rat_field(doc, "p134", "plane"),
        rat_field(doc, "p135", "plane"), rat_field(doc, "p145", "plane"),
        rat_field(doc, "p234", "plane"), rat_field(doc, "p235", "plane"),
        rat_field(doc, "p245", "plane"), rat_field(doc, "p345", "plane")});
}

inline json plane_to(const GrassmannPlane& g) {
    static const char* names[10] = {"p123", "p124", "p125", "p134", "p135",
                                    "p145", "p234", "p235", "p245", "p345"};
    json doc{{"kind", "geometry"}, {"type", "plane"}};
    const auto comps = g.components();
    for (std::size_t i = 0; i < 10; ++i) doc[names[i]] = comps[i].str();
    return doc;
}

inline std::vector<ConePoint> cone_points_from(const json& doc) {
    check_keys(doc, {"kind", "type", "points"}, "cone-points geometry");
    const json& pts = field(doc, "points", "cone-points geometry");
    if (!pts.is_array() || pts.empty())
        fail("cone-points geometry: points must be a nonempty array");
    std::vector<ConePoint> out;
    for (const auto& p : pts) {
        const auto z = rat_array<5>(p, "cone point");
        try {
            out.push_back(ConePoint(z[0], z[1], z[2], z[3], z[4]));
        } catch (const ShapeError& e) {
            fail(std::string("cone point: ") + e.what());
        }
    }
    return out;
}

inline json cone_points_to(const std::vector<ConePoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) {
        json row = json::array();
        for (const auto& z : p.z()) row.push_back(z.str());
        arr.push_back(std::move(row));
    }
    return json{{"kind", "geometry"}, {"type", "cone-points"}, {"points", std::move(arr)}};
}

// --- invariants & reports -----------------------------------------------------

inline json invariants_to(const InvariantSet& s) {
    json r = json::array(), omega = json::array();
    for (const auto& x : s.r) r.push_back(x.str());
    for (const auto& x : s.omega) omega.push_back(x.str());
    return json{{"kind", "invariants"}, {"r", std::move(r)}, {"omega", std::move(omega)}};
}

inline json errata_to(const std::vector<ErrataEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries)
        arr.push_back(json{{"formula", e.formula},
                           {"status", e.status},
                           {"transcribed", e.transcribed},
                           {"derived", e.derived},
                           {"evidence", e.evidence}});
    return json{{"kind", "report"}, {"report", "errata"}, {"entries", std::move(arr)}};
}

inline json error_to(const std::string& condition, const std::string& message) {
    return json{{"kind", "error"}, {"condition", condition}, {"message", message}};
}

} // namespace projconn::io
