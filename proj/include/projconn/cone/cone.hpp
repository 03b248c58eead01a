#pragma once

#include <array>

#include "projconn/exact/error.hpp"
#include "projconn/exact/matrix.hpp"
#include "projconn/exact/rat.hpp"
#include "projconn/jet/jet.hpp"

namespace projconn {

// Point of CP4 in the chart-free homogeneous coordinates (z1:...:z5), stored
// as the canonical representative whose first nonzero coordinate is 1.
struct ConePoint {
    Rat z1, z2, z3, z4, z5;

    ConePoint(Rat c1, Rat c2, Rat c3, Rat c4, Rat c5)
        : z1(std::move(c1)), z2(std::move(c2)), z3(std::move(c3)),
          z4(std::move(c4)), z5(std::move(c5)) {
        Rat* coords[5] = {&z1, &z2, &z3, &z4, &z5};
        for (Rat* c : coords)
            if (!c->is_zero()) {
                const Rat scale = c->inverse();
                for (Rat* d : coords) *d = *d * scale;
                return;
            }
        throw ShapeError("projective point needs a nonzero coordinate");
    }

    static ConePoint vertex() { return ConePoint(Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)); }

    std::array<Rat, 5> z() const { return {z1, z2, z3, z4, z5}; }

    bool operator==(const ConePoint& o) const {
        return z1 == o.z1 && z2 == o.z2 && z3 == o.z3 && z4 == o.z4 && z5 == o.z5;
    }
    bool operator!=(const ConePoint& o) const { return !(*this == o); }
};

// The cubic cone over the twisted cubic: lines joining the vertex
// [0:0:0:0:1] to the directrix curve [1:v:v²:v³:0].
inline ConePoint embed(const Element2& e) {
    return ConePoint(Rat(1), e.v, e.v * e.v, e.v * e.v * e.v, e.w);
}

inline bool on_cone(const ConePoint& p) {
    return (p.z1 * p.z3 - p.z2 * p.z2).is_zero() &&
           (p.z2 * p.z3 - p.z1 * p.z4).is_zero() &&
           (p.z3 * p.z3 - p.z2 * p.z4).is_zero();
}

// The 5×5 matrix realizing a jet map on the cone: rows 1..4 carry the
// coefficients of (av+b)^{k-1}(cv+d)^{4-k} in the basis (1, v, v², v³), and
// row 5 is (λ, μ, ν, ξ, ad−bc), so that embedding commutes with the action:
//   embed(apply(g, e)) = g_from_jetmap(g) · embed(e)   projectively.
inline MatQ g_from_jetmap(const JetMap& g) {
    MatQ G(5, 5, Rat(0));
    for (int k = 0; k < 4; ++k) {
        const auto row = detail::twisted_power(g.a, g.b, g.c, g.d, static_cast<unsigned>(k));
        for (int j = 0; j < 4; ++j) G.at(k, j) = row[static_cast<std::size_t>(j)];
    }
    G.at(4, 0) = g.lambda;
    G.at(4, 1) = g.mu;
    G.at(4, 2) = g.nu;
    G.at(4, 3) = g.xi;
    G.at(4, 4) = g.det();
    return G;
}

inline ConePoint apply_gmat(const MatQ& G, const ConePoint& p) {
    if (G.rows() != 5 || G.cols() != 5) throw ShapeError("cone matrix must be 5×5");
    const std::array<Rat, 5> z = p.z();
    std::array<Rat, 5> image{};
    for (std::size_t i = 0; i < 5; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < 5; ++j) acc = acc + G.at(i, j) * z[j];
        image[i] = acc;
    }
    return ConePoint(image[0], image[1], image[2], image[3], image[4]);
}

// Symmetric-cube representation of an invertible 2×2 matrix ((a,b),(c,d)):
// the upper-left 4×4 block of g_from_jetmap for the shear-free jet map.
// Multiplicative: sym3(m·n) = sym3(m)·sym3(n); det(sym3(m)) = det(m)^6.
inline MatQ sym3(const MatQ& m) {
    if (m.rows() != 2 || m.cols() != 2) throw ShapeError("sym3 expects a 2×2 matrix");
    const JetMap g(m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1),
                   Rat(0), Rat(0), Rat(0), Rat(0));
    const MatQ G = g_from_jetmap(g);
    MatQ S(4, 4, Rat(0));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) S.at(i, j) = G.at(i, j);
    return S;
}

namespace detail {

// Homogeneous parameter (x:y) of the generator through a cone point, with
// v = x/y on the affine directrix chart and (1:0) the generator at infinity.
inline std::array<Rat, 2> generator_parameter(const ConePoint& p) {
    if (!on_cone(p)) throw DomainError("not-on-cone", "point fails the cone equations");
    if (p.z1.is_zero() && p.z2.is_zero() && p.z3.is_zero() && p.z4.is_zero())
        throw DomainError("vertex-point", "the vertex lies on every generator");
    if (p.z1.is_zero()) return {Rat(1), Rat(0)};
    return {p.z2, p.z1};
}

} // namespace detail

// Cross-ratio of the four generators through the given cone points, computed
// on the directrix parameters in the same order convention as cross_ratio.
inline Rat cone_cross_ratio(const ConePoint& p1, const ConePoint& p2,
                            const ConePoint& p3, const ConePoint& p4) {
    const std::array<std::array<Rat, 2>, 4> t = {
        detail::generator_parameter(p1), detail::generator_parameter(p2),
        detail::generator_parameter(p3), detail::generator_parameter(p4)};
    auto skew = [&](std::size_t i, std::size_t j) {
        return t[i][0] * t[j][1] - t[j][0] * t[i][1];
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (skew(i, j).is_zero())
                throw DomainError("coincident-generators",
                                  "two points lie on the same generator");
    return (skew(2, 0) * skew(3, 1)) / (skew(3, 0) * skew(2, 1));
}

} // namespace projconn
