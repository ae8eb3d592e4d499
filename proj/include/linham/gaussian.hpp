#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <string>

#include "linham/error.hpp"

namespace linham {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q(i). Denominators are kept positive and in lowest terms
// by the underlying rational type; equality is structural.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}                       // NOLINT(google-explicit-constructor)
    GaussianRational(const Rational& re) : re_(re) {}          // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(Rational(1)); }
    static GaussianRational from_ints(long p, long q) { return GaussianRational(Rational(p, q)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    // |z|^2; a rational number.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero in Q(i)");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        GaussianRational r = one();
        r /= *this;
        return r;
    }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re_), static_cast<double>(im_)};
    }

    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

// Exact square roots inside the coefficient field.  Empty when no root exists
// (the value is then unreachable over Q(i) and callers surface a typed error).
std::optional<Rational> exact_sqrt(const Rational& x);
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

std::string rational_str(const Rational& r);

} // namespace linham
