#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

#include "projconn/exact/error.hpp"

namespace projconn {

// Arbitrary-precision rational scalar.  Always canonical: positive
// denominator, coprime numerator/denominator (maintained by GMP).
// Immutable in spirit; all arithmetic returns fresh values.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}                       // NOLINT: implicit by design
    Rat(long n, long d) {
        if (d == 0) throw ShapeError("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw ShapeError("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "p/q", and exact decimal strings like "-12.375"
    // (converted with a power-of-ten denominator, never through binary
    // floating point).
    static Rat parse(const std::string& text) {
        if (text.empty()) throw ShapeError("empty rational literal");
        const auto slash = text.find('/');
        try {
            // Base 10 is forced everywhere: the default auto-detecting base
            // would read a leading zero ("0.25" -> digits "025") as octal.
            if (slash != std::string::npos) {
                const std::string ns = text.substr(0, slash);
                const std::string ds = text.substr(slash + 1);
                if (ns.empty() || ds.empty()) throw std::invalid_argument(text);
                return Rat(mpz_class(ns, 10), mpz_class(ds, 10));
            }
            const auto dot = text.find('.');
            if (dot == std::string::npos) return Rat(mpz_class(text, 10));
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            const std::size_t frac_len = text.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+")
                throw std::invalid_argument(text);
            mpz_class den(1);
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rat(mpz_class(digits, 10), den);
        } catch (const std::invalid_argument&) {
            throw ShapeError("malformed rational literal: '" + text + "'");
        }
    }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DomainError("division-by-zero", "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    Rat inverse() const { return Rat(1) / *this; }

    Rat pow(unsigned e) const {
        Rat acc(1), base(*this);
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    // Canonical form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class q_;
};

} // namespace projconn
