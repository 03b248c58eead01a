#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "projconn/connection/connection.hpp"
#include "projconn/exact/error.hpp"
#include "projconn/exact/matrix.hpp"
#include "projconn/exact/poly.hpp"
#include "projconn/exact/rat.hpp"
#include "projconn/osculating/models.hpp"

namespace projconn {

// Line in three-space through two points at infinity, by Plücker coordinates
// p_ij = α_iβ_j − α_jβ_i (components 12, 13, 14, 23, 42, 34). The quadratic
// relation p12·p34 + p13·p42 + p14·p23 = 0 is enforced on construction.
class PluckerLine {
public:
    PluckerLine(Rat p12, Rat p13, Rat p14, Rat p23, Rat p42, Rat p34)
        : p12_(std::move(p12)), p13_(std::move(p13)), p14_(std::move(p14)),
          p23_(std::move(p23)), p42_(std::move(p42)), p34_(std::move(p34)) {
        if (!(p12_ * p34_ + p13_ * p42_ + p14_ * p23_).is_zero())
            throw DomainError("line-relation-violated",
                              "p12·p34 + p13·p42 + p14·p23 must vanish");
    }

    static PluckerLine from_points(const std::array<Rat, 4>& a,
                                   const std::array<Rat, 4>& b) {
        auto m = [&](std::size_t i, std::size_t j) {
            return a[i - 1] * b[j - 1] - a[j - 1] * b[i - 1];
        };
        return PluckerLine(m(1, 2), m(1, 3), m(1, 4), m(2, 3), m(4, 2), m(3, 4));
    }

    const Rat& p12() const { return p12_; }
    const Rat& p13() const { return p13_; }
    const Rat& p14() const { return p14_; }
    const Rat& p23() const { return p23_; }
    const Rat& p42() const { return p42_; }
    const Rat& p34() const { return p34_; }

    // Signed component lookup for arbitrary index order.
    Rat p(std::size_t i, std::size_t j) const {
        if (i == j) return Rat(0);
        if (i > j) return -p(j, i);
        if (i == 1 && j == 2) return p12_;
        if (i == 1 && j == 3) return p13_;
        if (i == 1 && j == 4) return p14_;
        if (i == 2 && j == 3) return p23_;
        if (i == 2 && j == 4) return -p42_;
        if (i == 3 && j == 4) return p34_;
        throw ShapeError("line component index out of range");
    }

private:
    Rat p12_, p13_, p14_, p23_, p42_, p34_;
};

// Pencil of planes through a fixed point and the moving point
// (β + β′·du/dx) of a point range, normalized so that β3′ = β4′ = 0.
// The plane of the pencil meets the tangent plane properly exactly when
// α3β4 − α4β3 ≠ 0, enforced on construction.
class PencilData {
public:
    PencilData(std::array<Rat, 4> alpha, std::array<Rat, 4> beta,
               std::array<Rat, 4> beta_prime)
        : alpha_(std::move(alpha)), beta_(std::move(beta)),
          beta_prime_(std::move(beta_prime)) {
        if (!beta_prime_[2].is_zero() || !beta_prime_[3].is_zero())
            throw ShapeError("pencil data must be normalized with β3′ = β4′ = 0");
        if ((alpha_[2] * beta_[3] - alpha_[3] * beta_[2]).is_zero())
            throw DomainError("tangent-plane-intersection",
                              "pencil plane meets the tangent plane in a line "
                              "(α3β4 − α4β3 = 0)");
    }

    const std::array<Rat, 4>& alpha() const { return alpha_; }
    const std::array<Rat, 4>& beta() const { return beta_; }
    const std::array<Rat, 4>& beta_prime() const { return beta_prime_; }

    // p_ij = α_iβ_j − α_jβ_i and p′_ij = α_iβ′_j − α_jβ′_i (1-based).
    Rat p(std::size_t i, std::size_t j) const {
        return alpha_[i - 1] * beta_[j - 1] - alpha_[j - 1] * beta_[i - 1];
    }
    Rat p_prime(std::size_t i, std::size_t j) const {
        return alpha_[i - 1] * beta_prime_[j - 1] - alpha_[j - 1] * beta_prime_[i - 1];
    }

private:
    std::array<Rat, 4> alpha_, beta_, beta_prime_;
};

// Plane in four-space spanned by three points at infinity, by Grassmann
// coordinates p_ikl = det of the (i,k,l) columns of the 3×5 row matrix.
// The full family of quadratic exchange relations is enforced on
// construction.
class GrassmannPlane {
public:
    // Component order: 123, 124, 125, 134, 135, 145, 234, 235, 245, 345.
    explicit GrassmannPlane(std::array<Rat, 10> p) : p_(std::move(p)) {
        check_relations();
    }

    static GrassmannPlane from_rows(const std::array<Rat, 5>& a,
                                    const std::array<Rat, 5>& b,
                                    const std::array<Rat, 5>& c) {
        std::array<Rat, 10> p;
        std::size_t pos = 0;
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t k = i + 1; k <= 4; ++k)
                for (std::size_t l = k + 1; l <= 5; ++l)
                    p[pos++] = a[i - 1] * (b[k - 1] * c[l - 1] - b[l - 1] * c[k - 1]) -
                               a[k - 1] * (b[i - 1] * c[l - 1] - b[l - 1] * c[i - 1]) +
                               a[l - 1] * (b[i - 1] * c[k - 1] - b[k - 1] * c[i - 1]);
        return GrassmannPlane(std::move(p));
    }

    // Signed component lookup for arbitrary index order; zero on repeats.
    Rat p(std::size_t i, std::size_t k, std::size_t l) const {
        if (i == k || i == l || k == l) return Rat(0);
        int sign = 1;
        std::array<std::size_t, 3> s{i, k, l};
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = x + 1; y < 3; ++y)
                if (s[x] > s[y]) {
                    std::swap(s[x], s[y]);
                    sign = -sign;
                }
        const Rat& v = p_[sorted_index(s[0], s[1], s[2])];
        return sign > 0 ? v : -v;
    }

    const std::array<Rat, 10>& components() const { return p_; }

private:
    static std::size_t sorted_index(std::size_t i, std::size_t k, std::size_t l) {
        std::size_t pos = 0;
        for (std::size_t a = 1; a <= 3; ++a)
            for (std::size_t b = a + 1; b <= 4; ++b)
                for (std::size_t c = b + 1; c <= 5; ++c) {
                    if (a == i && b == k && c == l) return pos;
                    ++pos;
                }
        throw ShapeError("plane component index out of range");
    }

    // Exchange relations: for every index pair (a1 < a2) and every 4-subset
    // (j0 < j1 < j2 < j3): Σ_t (−1)^t · p(a1,a2,j_t) · p(j \ j_t) = 0.
    void check_relations() const {
        for (std::size_t a1 = 1; a1 <= 5; ++a1)
            for (std::size_t a2 = a1 + 1; a2 <= 5; ++a2)
                for (std::size_t skip = 1; skip <= 5; ++skip) {
                    std::vector<std::size_t> j;
                    for (std::size_t x = 1; x <= 5; ++x)
                        if (x != skip) j.push_back(x);
                    Rat acc(0);
                    int sign = 1;
                    for (std::size_t t = 0; t < 4; ++t) {
                        std::array<std::size_t, 3> rest;
                        std::size_t pos = 0;
                        for (std::size_t x = 0; x < 4; ++x)
                            if (x != t) rest[pos++] = j[x];
                        acc += Rat(sign) * p(a1, a2, j[t]) * p(rest[0], rest[1], rest[2]);
                        sign = -sign;
                    }
                    if (!acc.is_zero())
                        throw DomainError("plane-relation-violated",
                                          "Grassmann exchange relation fails");
                }
    }

    std::array<Rat, 10> p_;
};

// Output of the incidence construction: the expanded determinant with the
// geometry folded in, the normalized incidence cubic
//   dx·d²u − du·d²x − A·dx³ − B·dx²du − C·dx·du² − D·du³
// in variables (dx, du, d2x, d2u), the connection read off from it, and the
// connection given by the transcribed coefficient map of the source text
// (kept as a cross-check; the determinant expansion is authoritative).
struct IncidenceResult {
    PolyMV determinant;
    PolyMV cubic;
    ProjConnection connection;
    ProjConnection transcribed;
};

namespace detail {

inline std::size_t name_index(const std::vector<std::string>& vars,
                              const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw ShapeError("unknown variable " + name);
}

inline PolyMV mono(const std::vector<std::string>& vars,
                   std::initializer_list<std::pair<const char*, unsigned>> powers,
                   const Rat& c) {
    std::vector<unsigned> e(vars.size(), 0);
    for (const auto& [name, k] : powers) e[name_index(vars, name)] = k;
    return PolyMV::monomial(vars, e, c);
}

// Re-express a polynomial supported on the first `keep` variables over that
// shorter variable list.
inline PolyMV take_front_vars(const PolyMV& p, std::size_t keep) {
    std::vector<std::string> vars(p.vars().begin(), p.vars().begin() + keep);
    PolyMV out(vars);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = keep; i < e.size(); ++i)
            if (e[i] != 0) throw ShapeError("polynomial not supported on prefix");
        out += PolyMV::monomial(vars, std::vector<unsigned>(e.begin(), e.begin() + keep),
                                c);
    }
    return out;
}

// Read (A,B,C,D) off an incidence polynomial κ·(dx·d²u − du·d²x) − κ·(A·dx³ +
// B·dx²du + C·dx·du² + D·du³) over variables (dx, du, d2x, d2u); rejects any
// other monomial shape.
struct IncidenceReadoff {
    PolyMV cubic;  // normalized by κ
    ProjConnection connection;
};

inline IncidenceReadoff read_off_connection(const PolyMV& q) {
    const Rat kappa = q.coeff({1, 0, 0, 1});
    if (kappa.is_zero())
        throw DomainError("tangent-plane-intersection",
                          "incidence form lacks the dx·d²u − du·d²x part");
    for (const auto& [e, c] : q.terms()) {
        const bool skew = (e == std::vector<unsigned>{1, 0, 0, 1}) ||
                          (e == std::vector<unsigned>{0, 1, 1, 0});
        const bool pure = (e[2] == 0 && e[3] == 0 && e[0] + e[1] == 3);
        if (!skew && !pure) throw ShapeError("unexpected incidence monomial");
    }
    if (q.coeff({0, 1, 1, 0}) != -kappa)
        throw ShapeError("incidence form is not skew in (dx,d²u)·(du,d²x)");
    const Rat inv = kappa.inverse();
    const Rat A = -q.coeff({3, 0, 0, 0}) * inv;
    const Rat B = -q.coeff({2, 1, 0, 0}) * inv;
    const Rat C = -q.coeff({1, 2, 0, 0}) * inv;
    const Rat D = -q.coeff({0, 3, 0, 0}) * inv;
    return IncidenceReadoff{q * inv, ProjConnection(A, B, C, D)};
}

} // namespace detail

// Conjugate-net case. The osculating plane of a curve meets the given line's
// plane exactly when the 4×4 determinant
//   | dx           du           0    0   |
//   | d²x−2a·dxdu  d²u−2b·dxdu  dx²  du² |
//   | α1           α2           α3   α4  |
//   | β1           β2           β3   β4  |
// vanishes; it is expanded symbolically and contracted with the line's
// Plücker coordinates.
inline IncidenceResult incidence_form(const LaplaceNet& model, const PluckerLine& line) {
    using detail::mono;
    const std::vector<std::string> vars{"dx", "du", "d2x", "d2u",
                                        "al1", "al2", "al3", "al4",
                                        "be1", "be2", "be3", "be4"};
    auto V = [&](const char* n) { return PolyMV::variable(vars, n); };
    MatR m(4, 4, PolyMV::zero(vars));
    m.at(0, 0) = V("dx");
    m.at(0, 1) = V("du");
    m.at(1, 0) = V("d2x") - mono(vars, {{"dx", 1}, {"du", 1}}, Rat(2) * model.a);
    m.at(1, 1) = V("d2u") - mono(vars, {{"dx", 1}, {"du", 1}}, Rat(2) * model.b);
    m.at(1, 2) = mono(vars, {{"dx", 2}}, Rat(1));
    m.at(1, 3) = mono(vars, {{"du", 2}}, Rat(1));
    const char* al[] = {"al1", "al2", "al3", "al4"};
    const char* be[] = {"be1", "be2", "be3", "be4"};
    for (std::size_t j = 0; j < 4; ++j) {
        m.at(2, j) = V(al[j]);
        m.at(3, j) = V(be[j]);
    }
    const PolyMV det = m.det();

    PolyMV contracted = PolyMV::zero(vars);
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = i + 1; j <= 4; ++j)
            contracted +=
                det.coefficient_of({{al[i - 1], 1}, {be[j - 1], 1}}) * line.p(i, j);
    const PolyMV q = detail::take_front_vars(contracted, 4);

    auto ro = detail::read_off_connection(q);
    ProjConnection transcribed(-line.p42(), Rat(-2) * model.b - line.p14(),
                               Rat(-2) * model.a - line.p23(), line.p13());
    return IncidenceResult{q, std::move(ro.cubic), std::move(ro.connection),
                           std::move(transcribed)};
}

// Parabolic case. The moving plane of the pencil meets the osculating plane
// exactly when the 4×4 determinant
//   | dx           du           0      0     |
//   | d²x+a·du²    d²u+b·du²    dx²    2dxdu |
//   | α1           α2           α3     α4    |
//   | β1dx+β1′du   β2dx+β2′du   β3dx   β4dx  |
// vanishes. The determinant is divisible by dx; the quotient is the
// incidence cubic.
inline IncidenceResult incidence_form(const Parabolic& model, const PencilData& pencil) {
    using detail::mono;
    const std::vector<std::string> vars{"dx", "du", "d2x", "d2u",
                                        "al1", "al2", "al3", "al4",
                                        "ro1", "ro2", "ro3", "ro4"};
    auto V = [&](const char* n) { return PolyMV::variable(vars, n); };
    MatR m(4, 4, PolyMV::zero(vars));
    m.at(0, 0) = V("dx");
    m.at(0, 1) = V("du");
    m.at(1, 0) = V("d2x") + mono(vars, {{"du", 2}}, model.a);
    m.at(1, 1) = V("d2u") + mono(vars, {{"du", 2}}, model.b);
    m.at(1, 2) = mono(vars, {{"dx", 2}}, Rat(1));
    m.at(1, 3) = mono(vars, {{"dx", 1}, {"du", 1}}, Rat(2));
    const char* al[] = {"al1", "al2", "al3", "al4"};
    const char* ro[] = {"ro1", "ro2", "ro3", "ro4"};
    for (std::size_t j = 0; j < 4; ++j) {
        m.at(2, j) = V(al[j]);
        m.at(3, j) = V(ro[j]);
    }
    const PolyMV det = m.det();

    const PolyMV dx = PolyMV::variable(vars, "dx");
    const PolyMV du = PolyMV::variable(vars, "du");
    PolyMV contracted = PolyMV::zero(vars);
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = i + 1; j <= 4; ++j) {
            const PolyMV moving = dx * pencil.p(i, j) + du * pencil.p_prime(i, j);
            contracted += det.coefficient_of({{al[i - 1], 1}, {ro[j - 1], 1}}) * moving;
        }
    const PolyMV quartic = detail::take_front_vars(contracted, 4);

    auto quotient = quartic.try_divide(detail::take_front_vars(dx, 4));
    if (!quotient) throw ShapeError("incidence determinant not divisible by dx");

    auto ro_ = detail::read_off_connection(*quotient);
    ProjConnection transcribed(
        -pencil.p(4, 2),
        -(Rat(2) * pencil.p(2, 3) + pencil.p(1, 4) + pencil.p_prime(4, 2)),
        Rat(2) * pencil.p(1, 3) - model.b -
            (Rat(2) * pencil.p_prime(2, 3) + pencil.p_prime(1, 4)),
        model.a + Rat(2) * pencil.p_prime(1, 3));
    return IncidenceResult{quartic, std::move(ro_.cubic), std::move(ro_.connection),
                           std::move(transcribed)};
}

// General-surface case. The osculating plane meets the given three-space
// exactly when the 5×5 determinant
//   | d²x  d²u  dx²  2dxdu  du² |
//   | dx   du   0    0      0   |
//   | α1   …               α5  |
//   | β1   …               β5  |
//   | γ1   …               γ5  |
// vanishes; it is expanded symbolically and contracted with the plane's
// Grassmann coordinates.
inline IncidenceResult incidence_form(const GeneralSurface&, const GrassmannPlane& plane) {
    using detail::mono;
    std::vector<std::string> vars{"dx", "du", "d2x", "d2u"};
    const char* al[] = {"al1", "al2", "al3", "al4", "al5"};
    const char* be[] = {"be1", "be2", "be3", "be4", "be5"};
    const char* ga[] = {"ga1", "ga2", "ga3", "ga4", "ga5"};
    for (auto* row : {al, be, ga})
        for (std::size_t j = 0; j < 5; ++j) vars.push_back(row[j]);

    auto V = [&](const char* n) { return PolyMV::variable(vars, n); };
    MatR m(5, 5, PolyMV::zero(vars));
    m.at(0, 0) = V("d2x");
    m.at(0, 1) = V("d2u");
    m.at(0, 2) = mono(vars, {{"dx", 2}}, Rat(1));
    m.at(0, 3) = mono(vars, {{"dx", 1}, {"du", 1}}, Rat(2));
    m.at(0, 4) = mono(vars, {{"du", 2}}, Rat(1));
    m.at(1, 0) = V("dx");
    m.at(1, 1) = V("du");
    for (std::size_t j = 0; j < 5; ++j) {
        m.at(2, j) = V(al[j]);
        m.at(3, j) = V(be[j]);
        m.at(4, j) = V(ga[j]);
    }
    const PolyMV det = m.det();

    PolyMV contracted = PolyMV::zero(vars);
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t k = i + 1; k <= 5; ++k)
            for (std::size_t l = k + 1; l <= 5; ++l)
                contracted +=
                    det.coefficient_of({{al[i - 1], 1}, {be[k - 1], 1}, {ga[l - 1], 1}}) *
                    plane.p(i, k, l);
    const PolyMV q = detail::take_front_vars(contracted, 4);

    auto ro = detail::read_off_connection(q);
    ProjConnection transcribed(plane.p(2, 4, 5),
                               -(Rat(2) * plane.p(2, 3, 5) + plane.p(1, 4, 5)),
                               Rat(2) * plane.p(1, 3, 5) + plane.p(2, 3, 4),
                               -plane.p(1, 3, 4));
    return IncidenceResult{q, std::move(ro.cubic), std::move(ro.connection),
                           std::move(transcribed)};
}

// Inverse coefficient maps. Each reproduces its connection through
// incidence_form exactly; underdetermined cases expose their free parameters
// with all-zero defaults.

// Conjugate-net case: unique once p34 = 1; p12 closes the quadratic relation.
inline PluckerLine geometry_from_connection(const LaplaceNet& model,
                                            const ProjConnection& k) {
    const Rat p42 = -k.A();
    const Rat p14 = Rat(2) * model.b - k.B();
    const Rat p23 = Rat(-2) * model.a - k.C();
    const Rat p13 = k.D();
    const Rat p12 = -(p13 * p42 + p14 * p23);
    return PluckerLine(p12, p13, p14, p23, p42, Rat(1));
}

// Parabolic case: three free parameters (α1, β3, β2′).
inline PencilData geometry_from_connection(const Parabolic& model,
                                           const ProjConnection& k,
                                           const Rat& alpha1 = Rat(0),
                                           const Rat& beta3 = Rat(0),
                                           const Rat& beta2_prime = Rat(0)) {
    const Rat beta2 = (k.B() + Rat(2) * k.A() * beta3 + alpha1) / Rat(2);
    const Rat beta1 = alpha1 * beta3 + beta2_prime - (k.C() + model.b) / Rat(2);
    const Rat beta1_prime = (model.a - k.D()) / Rat(2);
    return PencilData({alpha1, k.A(), Rat(1), Rat(0)},
                      {beta1, beta2, beta3, Rat(1)},
                      {beta1_prime, beta2_prime, Rat(0), Rat(0)});
}

// General-surface case: two free parameters (α1, γ2).
inline GrassmannPlane geometry_from_connection(const GeneralSurface&,
                                               const ProjConnection& k,
                                               const Rat& alpha1 = Rat(0),
                                               const Rat& gamma2 = Rat(0)) {
    return GrassmannPlane::from_rows(
        {alpha1, k.A(), Rat(1), Rat(0), Rat(0)},
        {(gamma2 - k.C()) / Rat(2), (k.B() + alpha1) / Rat(2), Rat(0), Rat(1), Rat(0)},
        {-k.D(), gamma2, Rat(0), Rat(0), Rat(1)});
}

} // namespace projconn
