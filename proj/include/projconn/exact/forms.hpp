#pragma once

#include <string>
#include <vector>

#include "projconn/exact/error.hpp"
#include "projconn/exact/matrix.hpp"
#include "projconn/exact/poly.hpp"

namespace projconn {

// Binary cubic form  c0·s³ + c1·s²t + c2·st² + c3·t³  whose coefficients are
// themselves polynomials (possibly constants).  Leading/trailing coefficients
// may be the zero polynomial; the representation is always "degree 3".
struct BinaryForm3 {
    PolyMV c0, c1, c2, c3;

    BinaryForm3(PolyMV a0, PolyMV a1, PolyMV a2, PolyMV a3)
        : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)), c3(std::move(a3)) {
        if (c0.vars() != c1.vars() || c0.vars() != c2.vars() || c0.vars() != c3.vars())
            throw ShapeError("binary form coefficients over different variable lists");
    }

    static BinaryForm3 constants(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3) {
        const std::vector<std::string> no_vars{};
        return BinaryForm3(PolyMV::constant(no_vars, a0), PolyMV::constant(no_vars, a1),
                           PolyMV::constant(no_vars, a2), PolyMV::constant(no_vars, a3));
    }

    // Evaluate at a parameter point (s:t) with scalar coefficient forms.
    Rat eval_constants(const Rat& s, const Rat& t) const {
        return c0.constant_value() * s.pow(3) + c1.constant_value() * s.pow(2) * t +
               c2.constant_value() * s * t.pow(2) + c3.constant_value() * t.pow(3);
    }
};

// Discriminant of a binary cubic: vanishes exactly when the form has a
// repeated root over the algebraic closure.
inline PolyMV discriminant3(const BinaryForm3& f) {
    const PolyMV& c0 = f.c0;
    const PolyMV& c1 = f.c1;
    const PolyMV& c2 = f.c2;
    const PolyMV& c3 = f.c3;
    return Rat(18) * c0 * c1 * c2 * c3 - Rat(4) * c1.pow(3) * c3 + c1.pow(2) * c2.pow(2) -
           Rat(4) * c0 * c2.pow(3) - Rat(27) * c0.pow(2) * c3.pow(2);
}

// Sylvester resultant of p and q with respect to `var`.
//
// Sign convention (fixed for reproducible outputs): the Sylvester matrix is
// laid out with the rows of p first and coefficients in ascending order, so
// resultant(x−1, x−2, x) = +1.
inline PolyMV resultant(const PolyMV& p, const PolyMV& q, const std::string& var) {
    const std::vector<PolyMV> pc = p.coeffs_in(var);
    const std::vector<PolyMV> qc = q.coeffs_in(var);
    const std::size_t m = pc.size() - 1;
    const std::size_t n = qc.size() - 1;
    if (m == 0 || n == 0)
        throw DomainError("degree-zero-in-variable",
                          "resultant requires positive degree in '" + var + "'");
    const PolyMV zero = PolyMV::zero(p.vars());
    MatR s(m + n, m + n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s.at(i, i + k) = pc[k];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k <= n; ++k) s.at(n + j, j + k) = qc[k];
    return s.det();
}

} // namespace projconn
