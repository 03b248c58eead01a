#pragma once

#include <variant>
#include <vector>

#include "projconn/exact/error.hpp"
#include "projconn/exact/matrix.hpp"
#include "projconn/exact/rat.hpp"

namespace projconn {

// Frame coefficient sets for the supported surface classes. Each struct
// records the scalar coefficients of the defining second-order linear system
// at a fixed point of the surface.

// Non-developable surface whose parametric net is asymptotic:
//   y_xx + c·y + 2a·y_x + 2b·y_u = 0,
//   y_uu + c1·y + 2a1·y_x + 2b1·y_u = 0.
struct AsymptoticNet {
    Rat a, b, c, a1, b1, c1;
};

// Surface carrying a conjugate net: y_xu + a·y_x + b·y_u + c·y = 0.
struct LaplaceNet {
    Rat a, b, c;
};

// Surface with one family of asymptotics: y_uu = a·y_x + b·y_u + c·y.
struct Parabolic {
    Rat a, b, c;
};

// Surface whose second osculating space has full dimension five; no scalar
// relations among the second-order frame vectors.
struct GeneralSurface {};

// Plane surface: completely integrable system
//   y_xu = c·y + a·y_x + b·y_u,
//   y_xx = p·y + alpha·y_x + beta·y_u,
//   y_uu = q·y + r·y_x + s·y_u.
struct PlaneSurface {
    Rat c, a, b, p, alpha, beta, q, r, s;
};

// Developable surface (data only; no incidence construction applies):
//   y_xu = beta·y + a·y_x + b·y_u,  y_xx = p·y + alpha·y_x.
struct Developable {
    Rat beta, a, b, p, alpha;
};

using SurfaceFrameModel =
    std::variant<AsymptoticNet, LaplaceNet, Parabolic, GeneralSurface, PlaneSurface,
                 Developable>;

// Second-order jet of a surface parametrization at a point: homogeneous
// coordinate tuples of y and its partials, all of a common length.
struct SurfaceJet {
    std::vector<Rat> y, y_x, y_u, y_xx, y_xu, y_uu;

    SurfaceJet(std::vector<Rat> y_, std::vector<Rat> yx_, std::vector<Rat> yu_,
               std::vector<Rat> yxx_, std::vector<Rat> yxu_, std::vector<Rat> yuu_)
        : y(std::move(y_)), y_x(std::move(yx_)), y_u(std::move(yu_)),
          y_xx(std::move(yxx_)), y_xu(std::move(yxu_)), y_uu(std::move(yuu_)) {
        const std::size_t n = y.size();
        if (n == 0) throw ShapeError("surface jet needs nonempty coordinate tuples");
        for (const auto* t : {&y_x, &y_u, &y_xx, &y_xu, &y_uu})
            if (t->size() != n) throw ShapeError("surface jet tuples must share a length");
        bool nonzero = false;
        for (const auto& c : y) nonzero = nonzero || !c.is_zero();
        if (!nonzero) throw ShapeError("surface jet base point must be nonzero");
    }
};

// Coefficients of the asymptotic-curve equation L·dx² + 2M·dxdu + N·du² = 0.
struct AsymptoticForm {
    Rat L, M, N;
};

namespace detail {

inline Rat det4(const std::vector<Rat>& r0, const std::vector<Rat>& r1,
                const std::vector<Rat>& r2, const std::vector<Rat>& r3) {
    MatQ m(4, 4, Rat(0));
    const std::vector<Rat>* rows[] = {&r0, &r1, &r2, &r3};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = (*rows[i])[j];
    return m.det();
}

} // namespace detail

// L = det(y_xx, y, y_x, y_u), M = det(y_xu, y, y_x, y_u),
// N = det(y_uu, y, y_x, y_u); requires ambient dimension three (4-tuples).
inline AsymptoticForm asymptotic_form(const SurfaceJet& j) {
    if (j.y.size() != 4)
        throw ShapeError("asymptotic form needs ambient dimension three (4-tuples)");
    return AsymptoticForm{detail::det4(j.y_xx, j.y, j.y_x, j.y_u),
                          detail::det4(j.y_xu, j.y, j.y_x, j.y_u),
                          detail::det4(j.y_uu, j.y, j.y_x, j.y_u)};
}

// A surface is developable exactly when L·N − M² vanishes.
inline bool is_developable(const AsymptoticForm& f) {
    return (f.L * f.N - f.M * f.M).is_zero();
}

} // namespace projconn
