#pragma once

#include <random>

#include "linham/symplectic.hpp"

namespace linham::testutil {

inline GaussianRational rand_gauss(std::mt19937_64& rng, int span = 5) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 3);
    return GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

// Random coefficient functions as they appear in real systems: small-degree
// numerators over a pool of simple denominators.
inline RatFunc rand_ratfunc(std::mt19937_64& rng, int maxdeg = 2) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    int deg = d(rng);
    std::vector<GaussianRational> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = rand_gauss(rng, 3);
    Poly num{std::move(c)};
    static const Poly dens[] = {Poly::one(), Poly::t(), Poly::t() + Poly(1),
                                Poly::t() * Poly::t() + Poly(1), Poly::t() - Poly(2)};
    std::uniform_int_distribution<int> pick(0, 4);
    return RatFunc(num, dens[pick(rng)]);
}

template <class R, class Gen>
QuadraticHamiltonian<R> rand_ham(std::mt19937_64& rng, int n, Gen&& coeff) {
    Mat<R> a(n, n), b(n, n), c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c(i, j) = coeff(rng);
            if (j >= i) {
                a(i, j) = coeff(rng);
                a(j, i) = a(i, j);
                b(i, j) = coeff(rng);
                b(j, i) = b(i, j);
            }
        }
    return QuadraticHamiltonian<R>(n, std::move(a), std::move(b), std::move(c));
}

inline QuadraticHamiltonian<GaussianRational> rand_ham_const(std::mt19937_64& rng, int n) {
    return rand_ham<GaussianRational>(rng, n, [](std::mt19937_64& g) { return rand_gauss(g, 4); });
}

inline QuadraticHamiltonian<RatFunc> rand_ham_ratfunc(std::mt19937_64& rng, int n) {
    return rand_ham<RatFunc>(rng, n, [](std::mt19937_64& g) { return RatFunc(rand_ratfunc(g, 2)); });
}

// Independent Poisson-bracket oracle: literal partial derivatives of the
// Gram forms.  F_{z_k} is row k of Q_F; the product of two linear forms
// a^t z * b^t z has Gram (a b^t + b a^t).
template <class R>
QuadraticHamiltonian<R> bracket_oracle(const QuadraticHamiltonian<R>& f,
                                       const QuadraticHamiltonian<R>& g) {
    int n = f.n;
    Mat<R> qf = f.gram(), qg = g.gram();
    Mat<R> q(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        // F_{x_i} = row i of qf, G_{y_i} = row n+i of qg, etc.
        for (int r = 0; r < 2 * n; ++r)
            for (int c = 0; c < 2 * n; ++c) {
                q(r, c) += qf(i, r) * qg(n + i, c) + qf(i, c) * qg(n + i, r);
                q(r, c) -= qf(n + i, r) * qg(i, c) + qf(n + i, c) * qg(i, r);
            }
    }
    return QuadraticHamiltonian<R>::from_gram(n, q);
}

// Monomial helpers for building small Hamiltonians in tests.
inline QuadraticHamiltonian<GaussianRational> mono_xx(int n, int i, int j) {
    // x_i * x_j  (i == j gives x_i^2)
    Mat<GaussianRational> a(n, n), b(n, n), c(n, n);
    if (i == j)
        a(i, i) = GaussianRational(2);
    else {
        a(i, j) = GaussianRational::one();
        a(j, i) = GaussianRational::one();
    }
    return {n, a, b, c};
}

inline QuadraticHamiltonian<GaussianRational> mono_yy(int n, int i, int j) {
    Mat<GaussianRational> a(n, n), b(n, n), c(n, n);
    if (i == j)
        b(i, i) = GaussianRational(2);
    else {
        b(i, j) = GaussianRational::one();
        b(j, i) = GaussianRational::one();
    }
    return {n, a, b, c};
}

inline QuadraticHamiltonian<GaussianRational> mono_xy(int n, int i, int j) {
    Mat<GaussianRational> a(n, n), b(n, n), c(n, n);
    c(i, j) = GaussianRational::one();
    return {n, a, b, c};
}

} // namespace linham::testutil
