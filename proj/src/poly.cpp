#include "linham/poly.hpp"

#include <sstream>

namespace linham {

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] -= b.coeffs_[k];
    }
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const GaussianRational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    q = Poly();
    r = a;
    if (a.degree() < b.degree()) return;
    std::vector<GaussianRational> qc(static_cast<size_t>(a.degree() - b.degree()) + 1);
    GaussianRational inv_lead = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        GaussianRational f = r.lead() * inv_lead;
        qc[static_cast<size_t>(shift)] = f;
        r = r - Poly::monomial(shift, f) * b;
    }
    q = Poly(std::move(qc));
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    if (!r.is_zero()) raise(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<GaussianRational> c(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
    return Poly(std::move(c));
}

Poly Poly::monic() const {
    return *this * lead().inverse();
}

Poly Poly::pow(int e) const {
    Poly r = Poly::one();
    Poly base = *this;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * base;
        base = base * base;
    }
    return r;
}

std::complex<double> Poly::eval(const std::complex<double>& t) const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k].to_complex();
    return acc;
}

GaussianRational Poly::eval_exact(const GaussianRational& t) const {
    GaussianRational acc;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
    return acc;
}

namespace {

// Rescale so that all coefficients become Gaussian integers with no common
// rational factor.  Keeps Euclidean remainder chains from blowing up.
Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    BigInt den_lcm = 1, num_gcd = 0;
    for (int k = 0; k <= p.degree(); ++k) {
        const GaussianRational& c = p.coeff(k);
        for (const Rational* r : {&c.re(), &c.im()}) {
            if (*r == 0) continue;
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(*r));
        }
    }
    for (int k = 0; k <= p.degree(); ++k) {
        const GaussianRational& c = p.coeff(k);
        for (const Rational* r : {&c.re(), &c.im()}) {
            if (*r == 0) continue;
            BigInt scaled = numerator(*r) * (den_lcm / denominator(*r));
            num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
        }
    }
    return p * GaussianRational(Rational(den_lcm, num_gcd));
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::one();
    Poly x = primitive_part(a);
    Poly y = primitive_part(b);
    while (!y.is_zero()) {
        Poly q, r;
        Poly::divmod(x, y, q, r);
        x = y;
        y = r.is_zero() ? r : primitive_part(r);
    }
    return x.is_zero() ? x : x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return ((a * b) / gcd(a, b)).monic();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        GaussianRational c = coeff(k);
        if (c.is_zero()) continue;
        std::string cs;
        bool negated = false;
        if (c.is_real() && !first && c.re() < 0) {
            negated = true;
            c = -c;
        }
        if (!first) os << (negated ? " - " : " + ");
        bool needs_coeff = !(c.is_one() && k > 0);
        if (needs_coeff) {
            cs = c.str();
            bool wrap = !c.is_real() || (c.re() < 0 && k > 0);
            os << (wrap ? "(" + cs + ")" : cs);
            if (k > 0) os << "*";
        }
        if (k == 1)
            os << "t";
        else if (k > 1)
            os << "t^" << k;
        first = false;
    }
    return os.str();
}

} // namespace linham
