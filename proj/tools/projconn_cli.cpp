// Deterministic command-line front end: every operation of the library is
// exposed as a subcommand reading and writing tagged JSON documents with
// exact rational scalars. Identical inputs produce byte-identical output.
//
// Exit codes: 0 success; 1 domain error (a machine-readable error document is
// printed on standard output); 2 usage or malformed-document error (message
// on standard error).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "projconn/io/document.hpp"
#include "projconn/projconn.hpp"

namespace {

using projconn::io::json;

json read_document(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream file(path);
        if (!file)
            throw projconn::io::DocumentError("cannot open input file: " + path);
        std::ostringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw projconn::io::DocumentError(std::string("invalid JSON: ") + e.what());
    }
}

projconn::Rat rat_flag(const std::string& text, const char* what) {
    try {
        return projconn::Rat::parse(text);
    } catch (const std::exception& e) {
        throw projconn::io::DocumentError(std::string(what) + ": " + e.what());
    }
}

json coeffs_to(const projconn::ProjConnection& k) {
    return json{{"A", k.A().str()},
                {"B", k.B().str()},
                {"C", k.C().str()},
                {"D", k.D().str()}};
}

json locus_to(const projconn::PolyMV& p) {
    json poly = projconn::io::poly_to(p);
    return json{{"kind", "locus"},
                {"variables", std::move(poly["variables"])},
                {"terms", std::move(poly["terms"])}};
}

// --- subcommand handlers ---------------------------------------------------

json run_invariants(const json& doc) {
    const projconn::ElementTuple t = projconn::io::elements_from(doc);
    return projconn::io::invariants_to(projconn::compute_invariants(t));
}

json run_cross_ratio(const json& doc) {
    const projconn::ElementTuple t = projconn::io::elements_from(doc);
    if (t.size() != 4)
        throw projconn::io::DocumentError("cross-ratio expects exactly 4 elements");
    const projconn::Rat r = projconn::cross_ratio(t.items[0].v, t.items[1].v,
                                                  t.items[2].v, t.items[3].v);
    projconn::InvariantSet s;
    s.r.push_back(r);
    return projconn::io::invariants_to(s);
}

json run_fit(const json& doc) {
    const projconn::ElementTuple t = projconn::io::elements_from(doc);
    if (t.size() != 4)
        throw projconn::io::DocumentError("fit expects exactly 4 elements");
    return projconn::io::connection_to(projconn::fit_connection(
        t.items[0], t.items[1], t.items[2], t.items[3]));
}

json run_transform_element(const json& doc, const json& map_doc) {
    const projconn::ElementTuple t = projconn::io::elements_from(doc);
    const projconn::JetMap g = projconn::io::jetmap_from(map_doc);
    std::vector<projconn::Element2> moved;
    for (const auto& e : t.items) moved.push_back(projconn::apply(g, e));
    const auto basepoint = doc.find("basepoint");
    return projconn::io::elements_to(moved,
                                     basepoint == doc.end() ? nullptr : &*basepoint);
}

json run_transform_connection(const json& doc, const json& map_doc) {
    const projconn::ProjConnection k = projconn::io::connection_from(doc);
    const projconn::JetMap g = projconn::io::jetmap_from(map_doc);
    return projconn::io::connection_to(projconn::transform_connection(g, k));
}

json run_centre(const std::string& v_text, const std::string& w_text) {
    const projconn::Element2 e{rat_flag(v_text, "--v"), rat_flag(w_text, "--w")};
    return projconn::io::centre_to(projconn::centre(e));
}

json run_centre_locus(const json& doc) {
    const std::string kind = doc.is_object() && doc.contains("kind") && doc["kind"].is_string()
                                 ? doc["kind"].get<std::string>()
                                 : std::string();
    if (kind == "connection")
        return locus_to(projconn::central_locus_rank1(projconn::io::connection_from(doc)));
    if (kind == "rank2")
        return locus_to(projconn::central_locus(projconn::io::rank2_from(doc).to_poly()));
    throw projconn::io::DocumentError(
        "centre-locus expects a connection or rank2 document");
}

json run_classify_rank2(const json& doc) {
    const projconn::RankTwoEq q = projconn::io::rank2_from(doc);
    const projconn::Rank2Classification c = projconn::classify_rank2(q);
    return json{{"kind", "report"},
                {"report", "rank2-classification"},
                {"classification", c.kind},
                {"locus", projconn::io::poly_to(c.locus)}};
}

json incidence_report(const projconn::IncidenceResult& res) {
    return json{{"kind", "report"},
                {"report", "incidence"},
                {"determinant", projconn::io::poly_to(res.determinant)},
                {"cubic", projconn::io::poly_to(res.cubic)},
                {"connection", coeffs_to(res.connection)},
                {"transcribed", coeffs_to(res.transcribed)}};
}

json run_incidence(const json& doc, const json& model_doc) {
    const projconn::SurfaceFrameModel model = projconn::io::model_from(model_doc);
    const std::string type = projconn::io::geometry_type(doc);
    if (const auto* m = std::get_if<projconn::LaplaceNet>(&model)) {
        if (type != "line")
            throw projconn::io::DocumentError("a laplace-net model needs line geometry");
        return incidence_report(projconn::incidence_form(*m, projconn::io::line_from(doc)));
    }
    if (const auto* m = std::get_if<projconn::Parabolic>(&model)) {
        if (type != "pencil")
            throw projconn::io::DocumentError("a parabolic model needs pencil geometry");
        return incidence_report(
            projconn::incidence_form(*m, projconn::io::pencil_from(doc)));
    }
    if (std::get_if<projconn::GeneralSurface>(&model) != nullptr) {
        if (type != "plane")
            throw projconn::io::DocumentError(
                "a general-surface model needs plane geometry");
        return incidence_report(projconn::incidence_form(projconn::GeneralSurface{},
                                                         projconn::io::plane_from(doc)));
    }
    throw projconn::io::DocumentError(
        "incidence supports laplace-net, parabolic, and general-surface models");
}

json run_geometry(const json& doc, const json& model_doc) {
    const projconn::SurfaceFrameModel model = projconn::io::model_from(model_doc);
    const projconn::ProjConnection k = projconn::io::connection_from(doc);
    if (const auto* m = std::get_if<projconn::LaplaceNet>(&model))
        return projconn::io::line_to(projconn::geometry_from_connection(*m, k));
    if (const auto* m = std::get_if<projconn::Parabolic>(&model))
        return projconn::io::pencil_to(projconn::geometry_from_connection(*m, k));
    if (std::get_if<projconn::GeneralSurface>(&model) != nullptr)
        return projconn::io::plane_to(
            projconn::geometry_from_connection(projconn::GeneralSurface{}, k));
    throw projconn::io::DocumentError(
        "geometry supports laplace-net, parabolic, and general-surface models");
}

json run_envelope(const json& doc, const json& model_doc) {
    const projconn::SurfaceFrameModel model = projconn::io::model_from(model_doc);
    const auto* m = std::get_if<projconn::AsymptoticNet>(&model);
    if (m == nullptr)
        throw projconn::io::DocumentError("envelope expects an asymptotic-net model");
    const projconn::ProjConnection k = projconn::io::connection_from(doc);
    const projconn::PolyMV tangential = projconn::envelope_tangential_cubic(*m, k);
    const projconn::EnvelopePointLocus locus = projconn::envelope_point_locus(*m, k);
    json axis = json::array();
    for (const auto& form : locus.axis) axis.push_back(projconn::io::poly_to(form));
    return json{{"kind", "report"},
                {"report", "envelope"},
                {"classification", locus.classification},
                {"tangential", projconn::io::poly_to(tangential)},
                {"discriminant", projconn::io::poly_to(locus.discriminant)},
                {"locus", projconn::io::poly_to(locus.locus)},
                {"axis", std::move(axis)}};
}

json run_union_locus(const json& doc, const json& model_doc, bool have_model) {
    json equations = json::array();
    if (doc.is_object() && doc.contains("kind") && doc["kind"] == "geometry") {
        if (projconn::io::geometry_type(doc) != "plane")
            throw projconn::io::DocumentError("union-locus geometry input must be a plane");
        for (const auto& p : projconn::union_locus_general(projconn::io::plane_from(doc)))
            equations.push_back(projconn::io::poly_to(p));
    } else {
        if (!have_model)
            throw projconn::io::DocumentError(
                "union-locus with a connection input needs --model");
        const projconn::SurfaceFrameModel model = projconn::io::model_from(model_doc);
        const auto* m = std::get_if<projconn::LaplaceNet>(&model);
        if (m == nullptr)
            throw projconn::io::DocumentError(
                "union-locus with a connection input expects a laplace-net model");
        const projconn::ProjConnection k = projconn::io::connection_from(doc);
        equations.push_back(projconn::io::poly_to(projconn::union_locus_conjugate(*m, k)));
    }
    return json{{"kind", "report"}, {"report", "union-locus"},
                {"equations", std::move(equations)}};
}

json run_straight_lines(const json& doc) {
    const projconn::SurfaceFrameModel model = projconn::io::model_from(doc);
    const auto* m = std::get_if<projconn::PlaneSurface>(&model);
    if (m == nullptr)
        throw projconn::io::DocumentError("straight-lines expects a plane-surface model");
    return projconn::io::connection_to(projconn::straight_lines_connection(*m));
}

json run_embed(const json& doc) {
    const projconn::ElementTuple t = projconn::io::elements_from(doc);
    std::vector<projconn::ConePoint> points;
    for (const auto& e : t.items) points.push_back(projconn::embed(e));
    return projconn::io::cone_points_to(points);
}

json run_cone_check(const json& doc) {
    if (projconn::io::geometry_type(doc) != "cone-points")
        throw projconn::io::DocumentError("cone-check expects cone-points geometry");
    json flags = json::array();
    for (const auto& p : projconn::io::cone_points_from(doc))
        flags.push_back(projconn::on_cone(p));
    return json{{"kind", "report"}, {"report", "cone-check"}, {"on_cone", std::move(flags)}};
}

json run_g_matrix(const json& doc) {
    const projconn::JetMap g = projconn::io::jetmap_from(doc);
    const projconn::MatQ G = projconn::g_from_jetmap(g);
    json rows = json::array();
    for (std::size_t i = 0; i < 5; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < 5; ++j) row.push_back(G.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"kind", "report"}, {"report", "g-matrix"}, {"matrix", std::move(rows)}};
}

json run_cone_cross_ratio(const json& doc) {
    if (projconn::io::geometry_type(doc) != "cone-points")
        throw projconn::io::DocumentError("cone-cross-ratio expects cone-points geometry");
    const std::vector<projconn::ConePoint> pts = projconn::io::cone_points_from(doc);
    if (pts.size() != 4)
        throw projconn::io::DocumentError("cone-cross-ratio expects exactly 4 points");
    projconn::InvariantSet s;
    s.r.push_back(projconn::cone_cross_ratio(pts[0], pts[1], pts[2], pts[3]));
    return projconn::io::invariants_to(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for projective connections on surfaces"};
    app.require_subcommand(1);

    std::string in_path, map_path, model_path, v_text, w_text;

    auto add_in = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "input document (default: standard input)");
    };

    CLI::App* invariants = app.add_subcommand(
        "invariants", "joint rational invariants of an element tuple");
    add_in(invariants);
    CLI::App* cross_ratio = app.add_subcommand(
        "cross-ratio", "cross-ratio of four element directions");
    add_in(cross_ratio);
    CLI::App* fit = app.add_subcommand(
        "fit", "connection through four elements over one point");
    add_in(fit);
    CLI::App* transform_element = app.add_subcommand(
        "transform-element", "apply a jet map to each element");
    add_in(transform_element);
    transform_element->add_option("--map", map_path, "jetmap document")->required();
    CLI::App* transform_connection = app.add_subcommand(
        "transform-connection", "push a connection forward along a jet map");
    add_in(transform_connection);
    transform_connection->add_option("--map", map_path, "jetmap document")->required();
    CLI::App* centre = app.add_subcommand(
        "centre", "centre of curvature of an element");
    centre->add_option("--v", v_text, "direction coordinate")->required();
    centre->add_option("--w", w_text, "curvature coordinate")->required();
    CLI::App* centre_locus = app.add_subcommand(
        "centre-locus", "central locus of a connection or rank-two equation");
    add_in(centre_locus);
    CLI::App* classify_rank2 = app.add_subcommand(
        "classify-rank2", "degeneration class of the rank-two central locus");
    add_in(classify_rank2);
    CLI::App* incidence = app.add_subcommand(
        "incidence", "incidence determinant and connection of a geometry");
    add_in(incidence);
    incidence->add_option("--model", model_path, "model document")->required();
    CLI::App* geometry = app.add_subcommand(
        "geometry", "canonical geometry realizing a connection");
    add_in(geometry);
    geometry->add_option("--model", model_path, "model document")->required();
    CLI::App* envelope = app.add_subcommand(
        "envelope", "envelope of osculating planes on an asymptotic net");
    add_in(envelope);
    envelope->add_option("--model", model_path, "model document")->required();
    CLI::App* union_locus = app.add_subcommand(
        "union-locus", "locus swept by the osculating planes");
    add_in(union_locus);
    CLI::Option* union_model =
        union_locus->add_option("--model", model_path, "model document");
    CLI::App* straight_lines = app.add_subcommand(
        "straight-lines", "differential equation of the straight lines");
    add_in(straight_lines);
    CLI::App* embed = app.add_subcommand(
        "embed", "embed elements on the cubic cone");
    add_in(embed);
    CLI::App* cone_check = app.add_subcommand(
        "cone-check", "test whether points satisfy the cone equations");
    add_in(cone_check);
    CLI::App* g_matrix = app.add_subcommand(
        "g-matrix", "5×5 cone matrix of a jet map");
    add_in(g_matrix);
    CLI::App* cone_cross_ratio = app.add_subcommand(
        "cone-cross-ratio", "cross-ratio of four cone generators");
    add_in(cone_cross_ratio);
    app.add_subcommand("verify-errata",
                       "recompute every transcribed formula against its oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        json out;
        if (app.got_subcommand(invariants)) out = run_invariants(read_document(in_path));
        else if (app.got_subcommand(cross_ratio)) out = run_cross_ratio(read_document(in_path));
        else if (app.got_subcommand(fit)) out = run_fit(read_document(in_path));
        else if (app.got_subcommand(transform_element))
            out = run_transform_element(read_document(in_path), read_document(map_path));
        else if (app.got_subcommand(transform_connection))
            out = run_transform_connection(read_document(in_path), read_document(map_path));
        else if (app.got_subcommand(centre)) out = run_centre(v_text, w_text);
        else if (app.got_subcommand(centre_locus)) out = run_centre_locus(read_document(in_path));
        else if (app.got_subcommand(classify_rank2))
            out = run_classify_rank2(read_document(in_path));
        else if (app.got_subcommand(incidence))
            out = run_incidence(read_document(in_path), read_document(model_path));
        else if (app.got_subcommand(geometry))
            out = run_geometry(read_document(in_path), read_document(model_path));
        else if (app.got_subcommand(envelope))
            out = run_envelope(read_document(in_path), read_document(model_path));
        else if (app.got_subcommand(union_locus))
            out = run_union_locus(read_document(in_path),
                                  union_model->count() > 0 ? read_document(model_path)
                                                           : json(),
                                  union_model->count() > 0);
        else if (app.got_subcommand(straight_lines))
            out = run_straight_lines(read_document(in_path));
        else if (app.got_subcommand(embed)) out = run_embed(read_document(in_path));
        else if (app.got_subcommand(cone_check)) out = run_cone_check(read_document(in_path));
        else if (app.got_subcommand(g_matrix)) out = run_g_matrix(read_document(in_path));
        else if (app.got_subcommand(cone_cross_ratio))
            out = run_cone_cross_ratio(read_document(in_path));
        else out = projconn::io::errata_to(projconn::verify_errata());
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const projconn::DomainError& e) {
        std::cout << projconn::io::error_to(e.condition(), e.what()).dump(2) << "\n";
        return 1;
    } catch (const projconn::io::DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const projconn::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
