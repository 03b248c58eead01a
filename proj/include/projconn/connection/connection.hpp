#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "projconn/exact/error.hpp"
#include "projconn/exact/matrix.hpp"
#include "projconn/exact/poly.hpp"
#include "projconn/exact/rat.hpp"
#include "projconn/jet/jet.hpp"

namespace projconn {

// First-degree (rank-one) equation E·w = A + B·v + C·v² + D·v³ over a fixed
// base point; its integral curves through the point form a one-parameter
// family indexed by direction. Coefficients are normalized by E on
// construction; the original E is kept for display only.
class ProjConnection {
public:
    ProjConnection(Rat A, Rat B, Rat C, Rat D, Rat E = Rat(1)) : e_display_(E) {
        if (E.is_zero())
            throw DomainError("zero-leading-coefficient",
                              "the coefficient of w must be nonzero");
        a_ = A / E;
        b_ = B / E;
        c_ = C / E;
        d_ = D / E;
    }

    const Rat& A() const { return a_; }
    const Rat& B() const { return b_; }
    const Rat& C() const { return c_; }
    const Rat& D() const { return d_; }
    const Rat& E_display() const { return e_display_; }

    // Right-hand side A + B·v + C·v² + D·v³ as coefficient array.
    Cubic cubic() const { return {a_, b_, c_, d_}; }

    Rat rhs_at(const Rat& v) const { return a_ + b_ * v + c_ * v * v + d_ * v * v * v; }

    // The defining polynomial w − (A + B·v + C·v² + D·v³) in variables v, w.
    PolyMV to_poly() const {
        const std::vector<std::string> vars{"v", "w"};
        PolyMV p = PolyMV::variable(vars, "w");
        p -= PolyMV::constant(vars, a_);
        p -= PolyMV::monomial(vars, {1, 0}, b_);
        p -= PolyMV::monomial(vars, {2, 0}, c_);
        p -= PolyMV::monomial(vars, {3, 0}, d_);
        return p;
    }

    friend bool operator==(const ProjConnection& x, const ProjConnection& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

private:
    Rat a_, b_, c_, d_;
    Rat e_display_;
};

// Second-rank equation A0·w² + (B0+B1v+B2v²+B3v³)·w + (C0+…+C6v⁶) = 0.
struct RankTwoEq {
    Rat A0;
    Rat B0, B1, B2, B3;
    Rat C0, C1, C2, C3, C4, C5, C6;

    PolyMV to_poly() const {
        const std::vector<std::string> vars{"v", "w"};
        PolyMV p = PolyMV::monomial(vars, {0, 2}, A0);
        const Rat* bs[] = {&B0, &B1, &B2, &B3};
        for (unsigned k = 0; k < 4; ++k) p += PolyMV::monomial(vars, {k, 1}, *bs[k]);
        const Rat* cs[] = {&C0, &C1, &C2, &C3, &C4, &C5, &C6};
        for (unsigned k = 0; k < 7; ++k) p += PolyMV::monomial(vars, {k, 0}, *cs[k]);
        if (p.is_zero())
            throw DomainError("zero-equation", "all rank-two coefficients vanish");
        return p;
    }
};

// Centre of curvature attached to a second-order element.
struct Centre {
    Rat x0, y0;

    friend bool operator==(const Centre& p, const Centre& q) {
        return p.x0 == q.x0 && p.y0 == q.y0;
    }
};

// Plane algebraic curve in the centre coordinates x0, y0.
using PlaneCurvePoly = PolyMV;

inline bool satisfies(const ProjConnection& k, const Element2& e) {
    return e.w == k.rhs_at(e.v);
}

// Unique first-degree equation through four elements with pairwise-distinct
// directions (Vandermonde solve for (A,B,C,D)).
inline ProjConnection fit_connection(const Element2& e1, const Element2& e2,
                                     const Element2& e3, const Element2& e4) {
    const Element2 es[] = {e1, e2, e3, e4};
    MatQ m(4, 4, Rat(0));
    std::vector<Rat> rhs(4, Rat(0));
    for (std::size_t i = 0; i < 4; ++i) {
        Rat p(1);
        for (std::size_t j = 0; j < 4; ++j) {
            m.at(i, j) = p;
            p = p * es[i].v;
        }
        rhs[i] = es[i].w;
    }
    const std::vector<Rat> sol = solve_linear(m, rhs);
    return ProjConnection(sol[0], sol[1], sol[2], sol[3]);
}

// Pullback of a connection along g, characterized by
//   satisfies(k, e)  ⟹  satisfies(transform_connection(g, k), apply(g, e)).
// With p the right-hand cubic of k and r(v) = q_g(v) + det(g)·p(v), the image
// cubic is p′(V) = (−cV+a)³ · r((dV−b)/(−cV+a)) / det(g)³.
inline ProjConnection transform_connection(const JetMap& g, const ProjConnection& k) {
    Cubic r = g.shear();
    const Cubic p = k.cubic();
    const Rat delta = g.det();
    for (unsigned i = 0; i < 4; ++i) r[i] += delta * p[i];
    const Cubic moved = detail::cubic_compose(r, g.d, -g.b, -g.c, g.a);
    const Rat d3 = delta.pow(3);
    return ProjConnection(moved[0] / d3, moved[1] / d3, moved[2] / d3, moved[3] / d3);
}

// Centre of curvature of an element: x0 = −v(1+v²)/w, y0 = (1+v²)/w.
inline Centre centre(const Element2& e) {
    if (e.w.is_zero())
        throw DomainError("inflection", "element has no centre (w = 0)");
    const Rat s = (Rat(1) + e.v * e.v) / e.w;
    return Centre{-e.v * s, s};
}

// Induced cubic transformation of centres; commutes with centre():
// centre(apply(g, e)) = centre_transform(g, centre(e)) wherever both sides
// are defined.
inline Centre centre_transform(const JetMap& g, const Centre& p) {
    const Rat& x0 = p.x0;
    const Rat& y0 = p.y0;
    const Rat den = g.lambda * y0.pow(3) - g.mu * x0 * y0 * y0 + g.nu * x0 * x0 * y0 -
                    g.xi * x0.pow(3) + g.det() * (x0 * x0 + y0 * y0);
    if (den.is_zero())
        throw DomainError("centre-at-infinity",
                          "transformed centre is at infinity (zero denominator)");
    const Rat u = g.a * x0 - g.b * y0;
    const Rat t = g.c * x0 - g.d * y0;
    const Rat s = (u * u + t * t) / den;
    return Centre{u * s, -t * s};
}

namespace detail {

// Substitute v = −x0/y0, w = (x0²+y0²)/y0³ into a polynomial in (v, w) and
// clear the minimal power of y0. No content normalization: scaling is kept
// verbatim so degenerate quotients can be compared coefficient-for-coefficient.
inline PolyMV central_locus_raw(const PolyMV& eqn) {
    if (eqn.is_zero())
        throw DomainError("zero-equation", "central locus of the zero polynomial");
    const std::size_t vi = eqn.var_index("v");
    const std::size_t wi = eqn.var_index("w");

    unsigned clear = 0;
    for (const auto& [e, c] : eqn.terms())
        clear = std::max(clear, e[vi] + 3 * e[wi]);

    const std::vector<std::string> out_vars{"x0", "y0"};
    const PolyMV x = PolyMV::variable(out_vars, "x0");
    const PolyMV y = PolyMV::variable(out_vars, "y0");
    const PolyMV circ = x * x + y * y;

    PolyMV acc = PolyMV::zero(out_vars);
    for (const auto& [e, c] : eqn.terms()) {
        const unsigned i = e[vi], j = e[wi];
        PolyMV term = PolyMV::constant(out_vars, (i % 2 == 0) ? c : -c);
        term = term * x.pow(i) * circ.pow(j) * y.pow(clear - i - 3 * j);
        acc += term;
    }
    return acc;
}

} // namespace detail

// Central locus of a first-degree equation: the special cubic
// (x0²+y0²) + D·x0³ − C·x0²y0 + B·x0y0² − A·y0³ (primitive part).
inline PlaneCurvePoly central_locus_rank1(const ProjConnection& k) {
    return detail::central_locus_raw(k.to_poly()).primitive();
}

// Central locus of an arbitrary equation in (v, w): substitution of the
// centre parametrization, cleared and reduced to primitive form. A rank-r
// input yields a curve of degree 3r for generic coefficients.
inline PlaneCurvePoly central_locus(const PolyMV& eqn) {
    return detail::central_locus_raw(eqn).primitive();
}

// Degeneration ladder of the rank-two central locus. The sextic drops to a
// quartic when C3 = C1+C5 and C0+C4 = C2+C6 (then x0²+y0² divides exactly),
// and to a conic when additionally B0=B2, B1=B3, C1=C5, C0+2C6=C4; the conic
// is A0 + B0·y0 − B1·x0 + C6·x0² − C5·x0·y0 + C0·y0², coefficient for
// coefficient. The returned polynomial keeps the verbatim scaling of the
// substitution (no content normalization).
struct Rank2Classification {
    std::string kind;  // "sextic" | "quartic" | "conic"
    PlaneCurvePoly locus;
};

inline Rank2Classification classify_rank2(const RankTwoEq& q) {
    PolyMV locus = detail::central_locus_raw(q.to_poly());
    const bool quartic = (q.C3 == q.C1 + q.C5) && (q.C0 + q.C4 == q.C2 + q.C6);
    if (!quartic) return {"sextic", std::move(locus)};

    const std::vector<std::string> out_vars{"x0", "y0"};
    const PolyMV circ = PolyMV::monomial(out_vars, {2, 0}, Rat(1)) +
                        PolyMV::monomial(out_vars, {0, 2}, Rat(1));
    auto once = locus.try_divide(circ);
    if (!once)
        throw DomainError("degeneration-mismatch",
                          "quartic conditions hold but division is inexact");
    const bool conic = (q.B0 == q.B2) && (q.B1 == q.B3) && (q.C1 == q.C5) &&
                       (q.C0 + Rat(2) * q.C6 == q.C4);
    if (!conic) return {"quartic", std::move(*once)};
    auto twice = once->try_divide(circ);
    if (!twice)
        throw DomainError("degeneration-mismatch",
                          "conic conditions hold but division is inexact");
    return {"conic", std::move(*twice)};
}

} // namespace projconn
