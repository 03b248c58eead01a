#pragma once

#include <string>
#include <vector>

#include "projconn/connection/connection.hpp"
#include "projconn/exact/error.hpp"
#include "projconn/exact/forms.hpp"
#include "projconn/exact/implicitize.hpp"
#include "projconn/exact/poly.hpp"
#include "projconn/osculating/incidence.hpp"
#include "projconn/osculating/models.hpp"

namespace projconn {

// Family of osculating planes of the one-parameter family of integral curves
// through a point of an asymptotic-net surface, as a binary cubic in the
// direction (s:t) whose coefficients are linear forms in the plane
// coordinates (chi2, chi3, chi4):
//   F(s,t;χ) = 2st(t·χ2 − s·χ3) − R(s,t)·χ4,
//   R = (2b−A)s³ − (B+2a)s²t + (2b1−C)st² − (D+2a1)t³.
inline BinaryForm3 envelope_plane_family(const AsymptoticNet& m, const ProjConnection& k) {
    const std::vector<std::string> X{"chi2", "chi3", "chi4"};
    const PolyMV chi2 = PolyMV::variable(X, "chi2");
    const PolyMV chi3 = PolyMV::variable(X, "chi3");
    const PolyMV chi4 = PolyMV::variable(X, "chi4");
    return BinaryForm3(chi4 * (k.A() - Rat(2) * m.b),
                       chi3 * Rat(-2) + chi4 * (k.B() + Rat(2) * m.a),
                       chi2 * Rat(2) + chi4 * (k.C() - Rat(2) * m.b1),
                       chi4 * (k.D() + Rat(2) * m.a1));
}

// Class (tangential) equation of the envelope of the osculating planes: the
// implicit equation of the dual curve (s:t) ↦ [2st² : −2s²t : −R(s,t)] in the
// plane coordinates (chi2, chi3, chi4). Degree 3 for a generic connection;
// degenerates to a conic or a linear form for special coefficient values.
inline PolyMV envelope_tangential_cubic(const AsymptoticNet& m, const ProjConnection& k) {
    return implicitize_cubic_curve(
        BinaryForm3::constants(Rat(0), Rat(0), Rat(2), Rat(0)),
        BinaryForm3::constants(Rat(0), Rat(-2), Rat(0), Rat(0)),
        BinaryForm3::constants(k.A() - Rat(2) * m.b, k.B() + Rat(2) * m.a,
                               k.C() - Rat(2) * m.b1, k.D() + Rat(2) * m.a1),
        {"chi2", "chi3", "chi4"});
}

// Point equation of the envelope with its degeneration type.
//   generic — cubic cone; the locus is the full discriminant (degree 4).
//   quadric — exactly one of the extreme coefficients of F vanishes
//             identically (A = 2b or D = −2a1); the discriminant acquires a
//             square factor, and `locus` is the remaining quadric.
//   line    — both vanish; every plane of the family contains the line cut
//             out by the two forms in `axis`.
// Polynomials are normalized to integral coprime coefficients with the sign
// of the underlying discriminant preserved.
struct EnvelopePointLocus {
    std::string classification;  // "generic" | "quadric" | "line"
    PolyMV discriminant;         // discriminant of F in (s:t), content-normalized
    PolyMV locus;                // point equation after stripping square factors
    std::vector<PolyMV> axis;    // two linear forms when classification == "line"
};

inline EnvelopePointLocus envelope_point_locus(const AsymptoticNet& m,
                                               const ProjConnection& k) {
    const BinaryForm3 F = envelope_plane_family(m, k);
    PolyMV disc = discriminant3(F);
    disc = disc * disc.content().inverse();

    const bool c0_zero = F.c0.is_zero();
    const bool c3_zero = F.c3.is_zero();
    if (c0_zero && c3_zero)
        return EnvelopePointLocus{
            "line", disc, disc, {F.c2.primitive(), F.c1.primitive()}};
    if (c0_zero || c3_zero) {
        PolyMV quad = c0_zero ? F.c2 * F.c2 - Rat(4) * F.c1 * F.c3
                              : F.c1 * F.c1 - Rat(4) * F.c0 * F.c2;
        quad = quad * quad.content().inverse();
        return EnvelopePointLocus{"quadric", disc, quad, {}};
    }
    return EnvelopePointLocus{"generic", disc, disc, {}};
}

// Locus of the osculating planes of the integral curves on a conjugate-net
// surface: with L1 = χ2 − A·χ3 − (C+2a)·χ4 and L2 = χ1 + D·χ4 + (B−2b)·χ3,
// the surface L1²·χ3 − L2²·χ4 in plane coordinates (chi1..chi4). For every
// on-shell curve datum, L1·dx − L2·du reproduces the defining equation, so
// osculating-plane points annihilate the locus.
inline PolyMV union_locus_conjugate(const LaplaceNet& m, const ProjConnection& k) {
    const std::vector<std::string> X{"chi1", "chi2", "chi3", "chi4"};
    const PolyMV chi1 = PolyMV::variable(X, "chi1");
    const PolyMV chi2 = PolyMV::variable(X, "chi2");
    const PolyMV chi3 = PolyMV::variable(X, "chi3");
    const PolyMV chi4 = PolyMV::variable(X, "chi4");
    const PolyMV L1 = chi2 - chi3 * k.A() - chi4 * (k.C() + Rat(2) * m.a);
    const PolyMV L2 = chi1 + chi4 * k.D() + chi3 * (k.B() - Rat(2) * m.b);
    return L1 * L1 * chi3 - L2 * L2 * chi4;
}

// Locus of the osculating planes for a spatial system on a general surface,
// as three equations in (chi1..chi5). With
//   S1 = χ2·p345 − χ3·p245 + χ4·p235 − χ5·p234,
//   S2 = χ1·p345 − χ3·p145 + χ4·p135 − χ5·p134,
// on-shell curve data satisfy dx·S1 = du·S2, whence
//   2·S1·χ3 − S2·χ4 = 0,   S1·χ4 − 2·S2·χ5 = 0,   χ4² − 4·χ3·χ5 = 0.
inline std::vector<PolyMV> union_locus_general(const GrassmannPlane& geom) {
    if (geom.p(3, 4, 5).is_zero())
        throw DomainError("tangent-plane-intersection",
                          "general-surface locus needs p345 ≠ 0");
    const std::vector<std::string> X{"chi1", "chi2", "chi3", "chi4", "chi5"};
    const PolyMV chi1 = PolyMV::variable(X, "chi1");
    const PolyMV chi2 = PolyMV::variable(X, "chi2");
    const PolyMV chi3 = PolyMV::variable(X, "chi3");
    const PolyMV chi4 = PolyMV::variable(X, "chi4");
    const PolyMV chi5 = PolyMV::variable(X, "chi5");
    const PolyMV S1 = chi2 * geom.p(3, 4, 5) - chi3 * geom.p(2, 4, 5) +
                      chi4 * geom.p(2, 3, 5) - chi5 * geom.p(2, 3, 4);
    const PolyMV S2 = chi1 * geom.p(3, 4, 5) - chi3 * geom.p(1, 4, 5) +
                      chi4 * geom.p(1, 3, 5) - chi5 * geom.p(1, 3, 4);
    return {S1 * Rat(2) * chi3 - S2 * chi4, S1 * chi4 - S2 * Rat(2) * chi5,
            chi4 * chi4 - Rat(4) * chi3 * chi5};
}

// Differential equation of the straight lines of a plane surface, derived by
// expanding det(y, y′, y″) symbolically in the frame (y, y_x, y_u) with
//   y′ = y_x + v·y_u,
//   y″ = (p+2cv+qv²)·y + (α+2av+rv²)·y_x + (β+2bv+sv²+w)·y_u.
inline ProjConnection straight_lines_connection(const PlaneSurface& m) {
    const std::vector<std::string> vars{"v", "w"};
    auto mono = [&](unsigned i, unsigned j, const Rat& c) {
        return PolyMV::monomial(vars, {i, j}, c);
    };
    MatR rows(3, 3, PolyMV::zero(vars));
    rows.at(0, 0) = mono(0, 0, Rat(1));
    rows.at(1, 1) = mono(0, 0, Rat(1));
    rows.at(1, 2) = mono(1, 0, Rat(1));
    rows.at(2, 0) = mono(0, 0, m.p) + mono(1, 0, Rat(2) * m.c) + mono(2, 0, m.q);
    rows.at(2, 1) = mono(0, 0, m.alpha) + mono(1, 0, Rat(2) * m.a) + mono(2, 0, m.r);
    rows.at(2, 2) = mono(0, 0, m.beta) + mono(1, 0, Rat(2) * m.b) + mono(2, 0, m.s) +
                    mono(0, 1, Rat(1));
    const PolyMV det = rows.det();

    const Rat kappa = det.coeff({0, 1});
    if (kappa.is_zero()) throw ShapeError("straight-line determinant lacks the w term");
    for (const auto& [e, c] : det.terms())
        if (e[1] > 1 || (e[1] == 1 && e[0] != 0) || (e[1] == 0 && e[0] > 3))
            throw ShapeError("unexpected straight-line determinant monomial");
    const Rat inv = kappa.inverse();
    return ProjConnection(-det.coeff({0, 0}) * inv, -det.coeff({1, 0}) * inv,
                          -det.coeff({2, 0}) * inv, -det.coeff({3, 0}) * inv);
}

} // namespace projconn
