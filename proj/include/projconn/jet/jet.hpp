#pragma once

#include <array>

#include "projconn/exact/error.hpp"
#include "projconn/exact/rat.hpp"

namespace projconn {

// Second-order differential element over a fixed base point: v = u', w = u''.
struct Element2 {
    Rat v, w;

    friend bool operator==(const Element2& a, const Element2& b) {
        return a.v == b.v && a.w == b.w;
    }
};

// Cubic polynomial q(v) = q0 + q1 v + q2 v² + q3 v³ stored by coefficients.
using Cubic = std::array<Rat, 4>;

namespace detail {

// Coefficients of (a·v + b)^k (c·v + d)^(3-k) in the basis (1, v, v², v³).
inline Cubic twisted_power(const Rat& a, const Rat& b, const Rat& c, const Rat& d, unsigned k) {
    Cubic lin{b, a, Rat(0), Rat(0)};  // a·v + b
    Cubic acc{Rat(1), Rat(0), Rat(0), Rat(0)};
    auto mul = [](const Cubic& p, const Cubic& q) {
        Cubic r{Rat(0), Rat(0), Rat(0), Rat(0)};
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; i + j < 4; ++j) r[i + j] += p[i] * q[j];
        return r;
    };
    for (unsigned i = 0; i < k; ++i) acc = mul(acc, lin);
    Cubic lin2{d, c, Rat(0), Rat(0)};
    for (unsigned i = k; i < 3; ++i) acc = mul(acc, lin2);
    return acc;
}

// Right action of the linear-fractional part on cubics:
// (q ∘ M)(v) := (c·v + d)³ · q((a·v + b)/(c·v + d)), expanded as a cubic.
inline Cubic cubic_compose(const Cubic& q, const Rat& a, const Rat& b, const Rat& c,
                           const Rat& d) {
    Cubic out{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (unsigned k = 0; k < 4; ++k) {
        if (q[k].is_zero()) continue;
        const Cubic part = twisted_power(a, b, c, d, k);
        for (unsigned i = 0; i < 4; ++i) out[i] += q[k] * part[i];
    }
    return out;
}

} // namespace detail

// Eight-parameter transformation acting on second-order elements:
//   V = (a·v + b)/(c·v + d),
//   W = (λ + μ·v + ν·v² + ξ·v³ + (ad − bc)·w) / (c·v + d)³.
// Parameters are stored literally (no projective normalization); group
// equality is decided by action, not by parameter comparison.
struct JetMap {
    Rat a, b, c, d;
    Rat lambda, mu, nu, xi;

    JetMap(Rat a_, Rat b_, Rat c_, Rat d_, Rat lambda_ = Rat(0), Rat mu_ = Rat(0),
           Rat nu_ = Rat(0), Rat xi_ = Rat(0))
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
          lambda(std::move(lambda_)), mu(std::move(mu_)), nu(std::move(nu_)),
          xi(std::move(xi_)) {
        if (det().is_zero())
            throw DomainError("invalid-jetmap", "linear-fractional part is singular (ad = bc)");
    }

    static JetMap identity() { return JetMap(Rat(1), Rat(0), Rat(0), Rat(1)); }

    Rat det() const { return a * d - b * c; }
    Cubic shear() const { return {lambda, mu, nu, xi}; }

    Rat shear_at(const Rat& v) const {
        return lambda + mu * v + nu * v * v + xi * v * v * v;
    }
};

inline Element2 apply(const JetMap& g, const Element2& e) {
    const Rat den = g.c * e.v + g.d;
    if (den.is_zero())
        throw DomainError("element-at-infinity",
                          "direction maps to infinity (c·v + d = 0)");
    const Rat V = (g.a * e.v + g.b) / den;
    const Rat W = (g.shear_at(e.v) + g.det() * e.w) / den.pow(3);
    return Element2{V, W};
}

// Group law: apply(compose(g2, g1), e) = apply(g2, apply(g1, e)).
// Linear parts multiply; shears compose by the twisted cocycle
// q = (q2 ∘ M1) + det(M2)·q1.
inline JetMap compose(const JetMap& g2, const JetMap& g1) {
    const Rat a = g2.a * g1.a + g2.b * g1.c;
    const Rat b = g2.a * g1.b + g2.b * g1.d;
    const Rat c = g2.c * g1.a + g2.d * g1.c;
    const Rat d = g2.c * g1.b + g2.d * g1.d;
    const Cubic moved = detail::cubic_compose(g2.shear(), g1.a, g1.b, g1.c, g1.d);
    const Rat det2 = g2.det();
    return JetMap(a, b, c, d, moved[0] + det2 * g1.lambda, moved[1] + det2 * g1.mu,
                  moved[2] + det2 * g1.nu, moved[3] + det2 * g1.xi);
}

// Exact two-sided inverse: the literal inverse matrix together with the
// shear −(1/Δ)·(q ∘ M⁻¹); the linear part’s determinant becomes 1/Δ.
inline JetMap inverse(const JetMap& g) {
    const Rat delta = g.det();
    const Rat ia = g.d / delta;
    const Rat ib = -g.b / delta;
    const Rat ic = -g.c / delta;
    const Rat id = g.a / delta;
    const Cubic moved = detail::cubic_compose(g.shear(), ia, ib, ic, id);
    const Rat f = -delta.inverse();
    return JetMap(ia, ib, ic, id, f * moved[0], f * moved[1], f * moved[2], f * moved[3]);
}

// One-parameter families realizing the eight generators of the action:
//   1: ∂v                6: v·∂w
//   2: ∂w                7: v²·∂w
//   3: v·∂v + w·∂w       8: v³·∂w
//   4: −v·∂v − 2w·∂w   (with 3, spans the two scalings v·∂v and w·∂w)
//   5: v²·∂v + 3vw·∂w
// Flows 3 and 4 require t ≠ −1 and obey the parameter law s⊕t = s+t+st;
// all the others are additive in t.
inline JetMap generator_flow(int k, const Rat& t) {
    switch (k) {
        case 1: return JetMap(Rat(1), t, Rat(0), Rat(1));
        case 2: return JetMap(Rat(1), Rat(0), Rat(0), Rat(1), t);
        case 3:
            if (t == Rat(-1))
                throw DomainError("invalid-jetmap", "scaling flow undefined at t = -1");
            return JetMap(Rat(1) + t, Rat(0), Rat(0), Rat(1));
        case 4:
            if (t == Rat(-1))
                throw DomainError("invalid-jetmap", "scaling flow undefined at t = -1");
            return JetMap(Rat(1), Rat(0), Rat(0), Rat(1) + t);
        case 5: return JetMap(Rat(1), Rat(0), -t, Rat(1));
        case 6: return JetMap(Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), t);
        case 7: return JetMap(Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), t);
        case 8: return JetMap(Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), t);
        default:
            throw DomainError("out-of-range-generator", "generator index must be 1..8");
    }
}

} // namespace projconn
