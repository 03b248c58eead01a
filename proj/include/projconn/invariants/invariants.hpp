#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "projconn/exact/error.hpp"
#include "projconn/exact/rat.hpp"
#include "projconn/jet/jet.hpp"

namespace projconn {

// An ordered tuple of second-order elements over a common base point.
struct ElementTuple {
    std::vector<Element2> items;

    std::size_t size() const { return items.size(); }
};

// Complete joint invariants of a generic n-tuple under the eight-parameter
// action: cross-ratios r_j for j = 4..n and, from six elements on, the
// second-order invariants Ω_l for l = 6..n.
struct InvariantSet {
    std::vector<Rat> r;      // r[j-4] is the cross-ratio of directions 1,2,3,j
    std::vector<Rat> omega;  // omega[l-6] is the second-order invariant Ω_l
};

// Violated preconditions of compute_invariants, in chain order. Conditions
// that become undefined once an earlier one fails are not listed.
struct GenericityReport {
    std::vector<std::string> violated;

    bool generic() const { return violated.empty(); }
};

// Condition slugs shared by check_genericity and the errors thrown by
// compute_invariants.
namespace genericity {
inline constexpr const char* coincident_directions = "coincident-directions";
inline constexpr const char* w1_equals_w2 = "w1-equals-w2";
inline constexpr const char* s3_equals_1 = "s3-equals-1";
inline constexpr const char* sigma4_equals_r4 = "sigma4-equals-r4";
inline constexpr const char* omega_denominator_zero = "omega-denominator-zero";
} // namespace genericity

// Classical cross-ratio of four directions; invariant under every JetMap.
inline Rat cross_ratio(const Rat& v1, const Rat& v2, const Rat& v3, const Rat& v4) {
    const Rat den = (v4 - v1) * (v3 - v2);
    if (den.is_zero())
        throw DomainError("degenerate-configuration",
                          "cross-ratio undefined: v4 = v1 or v3 = v2");
    return ((v3 - v1) * (v4 - v2)) / den;
}

namespace detail {

// Evaluators for the normalization chain; callers must respect the
// definedness order (xi/eta need distinct v1,v2 and w1 ≠ w2, sigma needs
// s3 ≠ 1, tau needs σ4 ≠ r4).
struct InvariantChain {
    const std::vector<Element2>& e;

    Rat xi(std::size_t i) const { return (e[i].v - e[0].v) / (e[1].v - e[0].v); }
    Rat eta(std::size_t i) const { return (e[i].w - e[0].w) / (e[1].w - e[0].w); }
    Rat s(std::size_t i) const { return eta(i) / xi(i).pow(3); }
    Rat r(std::size_t i) const { return cross_ratio(e[0].v, e[1].v, e[2].v, e[i].v); }
    Rat sigma(std::size_t i) const { return (s(i) - Rat(1)) / (s(2) - Rat(1)); }
    Rat tau(std::size_t i) const { return (sigma(i) - r(i)) / (sigma(3) - r(3)); }
    Rat omega_denominator() const {
        const Rat r4 = r(3), r5 = r(4);
        return (r4 * r4 - r4) * tau(4) - (r5 * r5 - r5);
    }
};

} // namespace detail

// Evaluates the genericity preconditions in chain order and lists every
// violated one that is still well defined at its point in the chain.
inline GenericityReport check_genericity(const ElementTuple& tuple) {
    const auto& e = tuple.items;
    const std::size_t n = e.size();
    if (n < 4) throw ShapeError("element tuple needs at least four elements");

    GenericityReport rep;
    bool distinct = true;
    for (std::size_t i = 0; i < n && distinct; ++i)
        for (std::size_t j = i + 1; j < n && distinct; ++j)
            if (e[i].v == e[j].v) distinct = false;
    if (!distinct) rep.violated.push_back(genericity::coincident_directions);
    if (e[0].w == e[1].w) rep.violated.push_back(genericity::w1_equals_w2);
    if (!rep.violated.empty()) return rep;

    const detail::InvariantChain chain{e};
    if (chain.s(2) == Rat(1)) {
        rep.violated.push_back(genericity::s3_equals_1);
        return rep;
    }
    if (chain.sigma(3) == chain.r(3)) {
        rep.violated.push_back(genericity::sigma4_equals_r4);
        return rep;
    }
    if (n >= 6 && chain.omega_denominator().is_zero())
        rep.violated.push_back(genericity::omega_denominator_zero);
    return rep;
}

// Full invariant chain for a generic tuple; throws DomainError carrying the
// first violated genericity condition otherwise.
inline InvariantSet compute_invariants(const ElementTuple& tuple) {
    const GenericityReport rep = check_genericity(tuple);
    if (!rep.generic())
        throw DomainError(rep.violated.front(),
                          "tuple is not generic: " + rep.violated.front());

    const auto& e = tuple.items;
    const std::size_t n = e.size();
    const detail::InvariantChain chain{e};

    InvariantSet out;
    for (std::size_t j = 3; j < n; ++j) out.r.push_back(chain.r(j));
    if (n >= 6) {
        const Rat den = chain.omega_denominator();
        const Rat r4 = chain.r(3);
        for (std::size_t l = 5; l < n; ++l) {
            const Rat rl = chain.r(l);
            out.omega.push_back(((r4 * r4 - r4) * chain.tau(l) - (rl * rl - rl)) / den);
        }
    }
    return out;
}

} // namespace projconn
