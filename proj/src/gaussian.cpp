#include "linham/gaussian.hpp"

#include <sstream>

namespace linham {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "*i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rational_str(re_) + "+" + imag;
    return rational_str(re_) + imag; // the imaginary part carries its own sign
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    BigInt n = numerator(x), d = denominator(x);
    BigInt rn = boost::multiprecision::sqrt(n);
    if (rn * rn != n) return std::nullopt;
    BigInt rd = boost::multiprecision::sqrt(d);
    if (rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational::zero();
    if (z.im() == 0) {
        if (auto r = exact_sqrt(z.re())) return GaussianRational(*r);
        // sqrt of a negative rational is purely imaginary when -re is a square
        if (auto r = exact_sqrt(Rational(-z.re()))) return GaussianRational(Rational(0), *r);
        return std::nullopt;
    }
    // (p + qi)^2 = z requires p^2 = (re + |z|)/2 with |z| = sqrt(norm) rational.
    auto nrm = exact_sqrt(z.norm());
    if (!nrm) return std::nullopt;
    Rational half = Rational(1, 2);
    auto p2 = exact_sqrt(Rational((z.re() + *nrm) * half));
    if (p2 && *p2 != 0) {
        Rational p = *p2;
        Rational q = z.im() / (2 * p);
        GaussianRational cand(p, q);
        if (cand * cand == z) return cand;
    }
    auto q2 = exact_sqrt(Rational((*nrm - z.re()) * half));
    if (q2 && *q2 != 0) {
        Rational q = *q2;
        Rational p = z.im() / (2 * q);
        GaussianRational cand(p, q);
        if (cand * cand == z) return cand;
    }
    return std::nullopt;
}

} // namespace linham
