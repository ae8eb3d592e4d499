#pragma once

#include <complex>
#include <string>
#include <vector>

#include "linham/gaussian.hpp"

namespace linham {

// Univariate polynomial in t over Q(i), dense coefficient vector with no
// trailing zeros.  Degree of the zero polynomial is the sentinel -1.
class Poly {
public:
    Poly() = default;
    Poly(GaussianRational c) { // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    Poly(long c) : Poly(GaussianRational(c)) {} // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(GaussianRational::one()); }
    static Poly t() { return monomial(1, GaussianRational::one()); }
    static Poly monomial(int deg, GaussianRational c) {
        Poly p;
        if (c.is_zero()) return p;
        p.coeffs_.assign(static_cast<size_t>(deg) + 1, GaussianRational::zero());
        p.coeffs_.back() = std::move(c);
        return p;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return GaussianRational::zero();
        return coeffs_[static_cast<size_t>(k)];
    }
    const GaussianRational& lead() const { return coeffs_.back(); } // pre: nonzero
    GaussianRational constant_term() const { return coeff(0); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const GaussianRational& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; b must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    friend Poly operator/(const Poly& a, const Poly& b); // exact division; raises on remainder
    Poly derivative() const;
    Poly monic() const; // pre: nonzero
    Poly pow(int e) const;

    std::complex<double> eval(const std::complex<double>& t) const;
    GaussianRational eval_exact(const GaussianRational& t) const;

    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<GaussianRational> coeffs_;
};

Poly gcd(const Poly& a, const Poly& b); // monic gcd; gcd(0,0) = 0
Poly lcm(const Poly& a, const Poly& b);

} // namespace linham
