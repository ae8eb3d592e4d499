#pragma once

#include <complex>
#include <string>

#include "linham/poly.hpp"

namespace linham {

// Rational function of t over Q(i) in canonical form: gcd(num, den) = 1 and
// den monic, so equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(long c) : num_(Poly(c)), den_(Poly::one()) {}                 // NOLINT(google-explicit-constructor)
    RatFunc(GaussianRational c) : num_(Poly(std::move(c))), den_(Poly::one()) {} // NOLINT(google-explicit-constructor)
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}        // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    GaussianRational constant_value() const { // pre: is_constant()
        return num_.constant_term();
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc& operator+=(const RatFunc& o) { return add_scaled(o, false); }
    RatFunc& operator-=(const RatFunc& o) { return add_scaled(o, true); }
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o) {
        if (o.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero rational function");
        RatFunc inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        GaussianRational lead = inv.den_.lead();
        if (!lead.is_one()) {
            GaussianRational s = lead.inverse();
            inv.num_ = inv.num_ * s;
            inv.den_ = inv.den_ * s;
        }
        return *this *= inv;
    }

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const {
        RatFunc r = one();
        r /= *this;
        return r;
    }

    // d/dt by the quotient rule, result canonical.
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Horner evaluation; raises PoleAt when |den(t0)| <= pole_threshold.
    std::complex<double> eval(const std::complex<double>& t0, double pole_threshold = 1e-12) const;

    GaussianRational eval_exact(const GaussianRational& t0) const; // raises PoleAt on exact pole

    std::string str() const;

private:
    void normalize();
    RatFunc& add_scaled(const RatFunc& o, bool subtract);
    Poly num_;
    Poly den_;
};

} // namespace linham
