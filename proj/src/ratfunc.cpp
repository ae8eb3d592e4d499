#include "linham/ratfunc.hpp"

#include <sstream>

namespace linham {

// Addition with the denominator-gcd shortcut: with g = gcd(den_a, den_b) the
// only factor the sum can share with the new denominator divides g, so the
// final reduction works on small polynomials.
RatFunc& RatFunc::add_scaled(const RatFunc& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        if (subtract) num_ = -num_;
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    Poly da = g.is_one() ? den_ : den_ / g;
    Poly db = g.is_one() ? o.den_ : o.den_ / g;
    Poly num = subtract ? num_ * db - o.num_ * da : num_ * db + o.num_ * da;
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return *this;
    }
    Poly den = den_ * db;
    if (!g.is_one()) {
        Poly h = gcd(num, g);
        if (!h.is_one()) {
            num = num / h;
            den = den / h;
        }
    }
    num_ = std::move(num);
    den_ = std::move(den);
    GaussianRational lead = den_.lead();
    if (!lead.is_one()) {
        GaussianRational s = lead.inverse();
        num_ = num_ * s;
        den_ = den_ * s;
    }
    return *this;
}

// Multiplication with cross-cancellation; operands canonical, so the result
// needs no further reduction.
RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return *this;
    }
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly na = g1.is_one() ? num_ : num_ / g1;
    Poly nb = g2.is_one() ? o.num_ : o.num_ / g2;
    Poly da = g2.is_one() ? den_ : den_ / g2;
    Poly db = g1.is_one() ? o.den_ : o.den_ / g1;
    num_ = na * nb;
    den_ = da * db;
    GaussianRational lead = den_.lead();
    if (!lead.is_one()) {
        GaussianRational s = lead.inverse();
        num_ = num_ * s;
        den_ = den_ * s;
    }
    return *this;
}

void RatFunc::normalize() {
    if (den_.is_zero()) raise(ErrorKind::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    GaussianRational lead = den_.lead();
    if (!lead.is_one()) {
        GaussianRational inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

std::complex<double> RatFunc::eval(const std::complex<double>& t0, double pole_threshold) const {
    std::complex<double> d = den_.eval(t0);
    if (std::abs(d) <= pole_threshold) {
        std::ostringstream os;
        os << "denominator vanishes at t = " << t0.real();
        if (t0.imag() != 0) os << (t0.imag() > 0 ? "+" : "") << t0.imag() << "i";
        raise(ErrorKind::PoleAt, os.str());
    }
    return num_.eval(t0) / d;
}

GaussianRational RatFunc::eval_exact(const GaussianRational& t0) const {
    GaussianRational d = den_.eval_exact(t0);
    if (d.is_zero()) raise(ErrorKind::PoleAt, "exact pole at rational sample point");
    return num_.eval_exact(t0) / d;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    bool wrap_num = num_.degree() > 0 || !num_.coeff(0).is_real() || num_.coeff(0).re() < 0;
    os << (wrap_num ? "(" + num_.str() + ")" : num_.str());
    os << "/(" << den_.str() << ")";
    return os.str();
}

} // namespace linham
