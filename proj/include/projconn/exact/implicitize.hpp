#pragma once

#include <array>
#include <string>
#include <vector>

#include "projconn/exact/error.hpp"
#include "projconn/exact/forms.hpp"
#include "projconn/exact/matrix.hpp"
#include "projconn/exact/poly.hpp"

namespace projconn {

namespace detail {

// Coefficients of a binary form, ascending t-degree: index k holds the
// coefficient of s^(n-k) t^k for a form of degree n.
using BinCoeffs = std::vector<Rat>;

inline BinCoeffs bin_mul(const BinCoeffs& a, const BinCoeffs& b) {
    BinCoeffs r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline BinCoeffs bin_pow(const BinCoeffs& a, unsigned e) {
    BinCoeffs acc{Rat(1)};
    BinCoeffs base = a;
    for (; e; e >>= 1) {
        if (e & 1) acc = bin_mul(acc, base);
        if (e > 1) base = bin_mul(base, base);
    }
    return acc;
}

inline BinCoeffs cubic_coeffs(const BinaryForm3& f) {
    return {f.c0.constant_value(), f.c1.constant_value(), f.c2.constant_value(),
            f.c3.constant_value()};
}

// Exponent tuples (i,j,k) with i+j+k = d, ascending lexicographic order.
inline std::vector<std::array<unsigned, 3>> monomials_of_degree(unsigned d) {
    std::vector<std::array<unsigned, 3>> out;
    for (unsigned i = 0; i <= d; ++i)
        for (unsigned j = 0; i + j <= d; ++j) out.push_back({i, j, d - i - j});
    return out;
}

} // namespace detail

// Implicit equation of the rational plane curve (s:t) ↦ [u(s,t):v(s,t):w(s,t)]
// cut out by three binary cubics with scalar coefficients.  Returns the
// primitive homogeneous polynomial of least degree (≤ 3) in the named output
// variables that vanishes identically on the image; when the image is a line,
// that is the linear form of the line.  Throws DomainError "degenerate-image"
// when the three forms are proportional (the image degenerates to a point).
inline PolyMV implicitize_cubic_curve(const BinaryForm3& u, const BinaryForm3& v,
                                      const BinaryForm3& w,
                                      const std::vector<std::string>& out_vars = {"U", "V",
                                                                                  "W"}) {
    if (out_vars.size() != 3) throw ShapeError("implicitization needs three output variables");
    const std::array<detail::BinCoeffs, 3> forms{detail::cubic_coeffs(u),
                                                 detail::cubic_coeffs(v),
                                                 detail::cubic_coeffs(w)};
    // All three forms proportional -> the image is a single point.
    {
        MatQ coef(3, 4, Rat(0));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 4; ++c) coef.at(r, c) = forms[r][c];
        if (rank(coef) <= 1)
            throw DomainError("degenerate-image",
                              "curve parametrization degenerates to a point");
    }

    for (unsigned d = 1; d <= 3; ++d) {
        const auto monos = detail::monomials_of_degree(d);
        // Row r: coefficient of the r-th (s,t) monomial of degree 3d; one
        // column per candidate monomial in the output variables.
        MatQ system(3 * d + 1, monos.size(), Rat(0));
        for (std::size_t c = 0; c < monos.size(); ++c) {
            detail::BinCoeffs prod{Rat(1)};
            for (std::size_t f = 0; f < 3; ++f)
                if (monos[c][f]) prod = detail::bin_mul(prod, detail::bin_pow(forms[f], monos[c][f]));
            // prod has degree 3d exactly (each factor contributes degree 3).
            for (std::size_t r = 0; r < prod.size(); ++r) system.at(r, c) = prod[r];
        }
        const auto kernel = kernel_basis(system);
        if (kernel.empty()) continue;
        if (kernel.size() > 1)
            throw DomainError("degenerate-image",
                              "curve image admits several independent equations of minimal degree");
        PolyMV result(out_vars);
        for (std::size_t c = 0; c < monos.size(); ++c)
            result += PolyMV::monomial(out_vars, {monos[c][0], monos[c][1], monos[c][2]},
                                       kernel[0][c]);
        return result.primitive();
    }
    // Unreachable for genuine cubic parametrizations: at degree 3 the system
    // has 10 unknowns and 10 equations and the image always satisfies a cubic.
    throw DomainError("degenerate-image", "no implicit equation of degree at most 3 found");
}

} // namespace projconn
