#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projconn/exact/error.hpp"
#include "projconn/exact/rat.hpp"

namespace projconn {

// Exact multivariate polynomial over Rat.
//
// A polynomial carries an ordered list of variable names; terms map exponent
// tuples (one entry per variable) to nonzero coefficients.  The term order is
// the ascending lexicographic order on exponent tuples, which doubles as the
// canonical serialization order.  All arithmetic requires operands over the
// same variable list.
class PolyMV {
public:
    using Exps = std::vector<unsigned>;
    using TermMap = std::map<Exps, Rat>;

    explicit PolyMV(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static PolyMV zero(const std::vector<std::string>& vars) { return PolyMV(vars); }

    static PolyMV constant(const std::vector<std::string>& vars, const Rat& c) {
        PolyMV p(vars);
        if (!c.is_zero()) p.terms_[Exps(vars.size(), 0)] = c;
        return p;
    }

    static PolyMV variable(const std::vector<std::string>& vars, const std::string& name) {
        PolyMV p(vars);
        Exps e(vars.size(), 0);
        e[p.var_index(name)] = 1;
        p.terms_[e] = Rat(1);
        return p;
    }

    static PolyMV monomial(const std::vector<std::string>& vars, Exps exps, const Rat& c) {
        PolyMV p(vars);
        if (exps.size() != vars.size())
            throw ShapeError("monomial exponent tuple does not match variable list");
        if (!c.is_zero()) p.terms_[std::move(exps)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exps(vars_.size(), 0));
    }

    // Value of a constant polynomial (shape error otherwise).
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw ShapeError("polynomial is not constant");
        return terms_.begin()->second;
    }

    std::size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ShapeError("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - vars_.begin());
    }

    Rat coeff(const Exps& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    PolyMV operator-() const {
        PolyMV r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    PolyMV& operator+=(const PolyMV& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyMV& operator-=(const PolyMV& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend PolyMV operator+(PolyMV a, const PolyMV& b) { return a += b; }
    friend PolyMV operator-(PolyMV a, const PolyMV& b) { return a -= b; }

    friend PolyMV operator*(const PolyMV& a, const PolyMV& b) {
        a.check_same_vars(b);
        PolyMV r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend PolyMV operator*(const PolyMV& a, const Rat& s) {
        PolyMV r(a.vars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
        return r;
    }
    friend PolyMV operator*(const Rat& s, const PolyMV& a) { return a * s; }

    PolyMV pow(unsigned e) const {
        PolyMV acc = constant(vars_, Rat(1));
        PolyMV base(*this);
        for (; e; e >>= 1) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
        }
        return acc;
    }

    // Full evaluation; `point` is parallel to vars().
    Rat eval(const std::vector<Rat>& point) const {
        if (point.size() != vars_.size())
            throw ShapeError("evaluation point does not match variable list");
        Rat total(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) t *= point[i].pow(e[i]);
            total += t;
        }
        return total;
    }

    // Substitute a single variable by a scalar; the variable stays in the
    // variable list with exponent zero.
    PolyMV substitute(const std::string& name, const Rat& value) const {
        const std::size_t idx = var_index(name);
        PolyMV r(vars_);
        for (const auto& [e, c] : terms_) {
            Exps ne(e);
            Rat nc = c * value.pow(e[idx]);
            ne[idx] = 0;
            r.add_term(ne, nc);
        }
        return r;
    }

    unsigned deg_in(const std::string& name) const {
        const std::size_t idx = var_index(name);
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (unsigned x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    // View as univariate in `name`: element k is the coefficient of name^k
    // (a polynomial over the same variable list, exponent of `name` zeroed).
    std::vector<PolyMV> coeffs_in(const std::string& name) const {
        const std::size_t idx = var_index(name);
        std::vector<PolyMV> out(deg_in(name) + 1, PolyMV(vars_));
        for (const auto& [e, c] : terms_) {
            Exps ne(e);
            const unsigned k = ne[idx];
            ne[idx] = 0;
            out[k].add_term(ne, c);
        }
        return out;
    }

    // Coefficient extraction: collect the terms whose exponents match `spec`
    // exactly on the named variables, zeroing those exponents in the result.
    PolyMV coefficient_of(const std::vector<std::pair<std::string, unsigned>>& spec) const {
        std::vector<std::pair<std::size_t, unsigned>> idx;
        idx.reserve(spec.size());
        for (const auto& [name, e] : spec) idx.emplace_back(var_index(name), e);
        PolyMV r(vars_);
        for (const auto& [e, c] : terms_) {
            bool match = true;
            for (const auto& [i, want] : idx)
                if (e[i] != want) { match = false; break; }
            if (!match) continue;
            Exps ne(e);
            for (const auto& [i, want] : idx) ne[i] = 0;
            r.add_term(ne, c);
        }
        return r;
    }

    // Exact division by a single divisor; nullopt when not divisible.
    std::optional<PolyMV> try_divide(const PolyMV& g) const {
        check_same_vars(g);
        if (g.is_zero()) throw ShapeError("division by zero polynomial");
        PolyMV f(*this), q(vars_);
        const auto& [ge, gc] = *g.terms_.rbegin();
        while (!f.is_zero()) {
            const auto& [fe, fc] = *f.terms_.rbegin();
            Exps qe(fe);
            for (std::size_t i = 0; i < qe.size(); ++i) {
                if (fe[i] < ge[i]) return std::nullopt;
                qe[i] = fe[i] - ge[i];
            }
            const Rat qc = fc / gc;
            q.add_term(qe, qc);
            f -= PolyMV::monomial(vars_, qe, qc) * g;
        }
        return q;
    }

    // Rational content: the positive rational c with (*this)/c integral,
    // coprime coefficients.  Zero polynomial has content 0.
    Rat content() const {
        if (terms_.empty()) return Rat(0);
        mpz_class g(0), l(1);
        for (const auto& [e, c] : terms_) {
            g = gcd(g, c.num());
            l = lcm(l, c.den());
        }
        return Rat(::abs(g), l);
    }

    // Content-free representative with canonical sign: integer coprime
    // coefficients, the first term in canonical order positive.
    PolyMV primitive() const {
        if (terms_.empty()) return *this;
        PolyMV r = *this * content().inverse();
        if (r.terms_.begin()->second.sign() < 0) r = -r;
        return r;
    }

    friend bool operator==(const PolyMV& a, const PolyMV& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PolyMV& a, const PolyMV& b) { return !(a == b); }

    // Proportionality over Rat (both zero counts as proportional).
    bool proportional_to(const PolyMV& o) const {
        check_same_vars(o);
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        if (terms_.size() != o.terms_.size()) return false;
        const Rat anchor = o.coeff(terms_.begin()->first);
        if (anchor.is_zero()) return false; // supports differ at the first term
        const Rat ratio = terms_.begin()->second / anchor;
        for (const auto& [e, c] : terms_)
            if (o.coeff(e) * ratio != c) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                os << "*" << vars_[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const PolyMV& p) { return os << p.str(); }

private:
    void check_same_vars(const PolyMV& o) const {
        if (vars_ != o.vars_)
            throw ShapeError("polynomial operands over different variable lists");
    }

    void add_term(const Exps& e, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

} // namespace projconn
