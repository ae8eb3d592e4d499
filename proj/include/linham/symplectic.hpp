#pragma once

#include <string>
#include <vector>

#include "linham/matrix.hpp"

namespace linham {

// Standard symplectic structure matrix J = ((0, I), (-I, 0)), size 2n.
template <class R>
Mat<R> standard_J(int n) {
    if (n < 1) raise(ErrorKind::InvalidArgument, "standard_J needs n >= 1");
    Mat<R> j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = RingOps<R>::one();
        j(n + i, i) = -RingOps<R>::one();
    }
    return j;
}

// Membership in sp(2n): M^t J + J M = 0, exactly in the scalar ring.  In
// blocks M = ((P, Q), (R, S)) the condition reads Q = Q^t, R = R^t, S = -P^t.
template <class R>
bool is_hamiltonian_matrix(const Mat<R>& m) {
    if (!m.is_square()) raise(ErrorKind::NonSquare, "sp membership needs a square matrix");
    if (m.rows() % 2 != 0) raise(ErrorKind::OddDimension, "sp membership needs even size");
    int n = m.rows() / 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m(i, n + j) != m(j, n + i)) return false;
            if (m(n + i, j) != m(n + j, i)) return false;
            if (!RingOps<R>::is_zero(m(n + i, n + j) + m(j, i))) return false;
        }
    return true;
}

// Membership in Sp(2n): S^t J S = J, exactly (time-dependent frames are
// checked as identities in t).
template <class R>
bool is_symplectic(const Mat<R>& s) {
    if (!s.is_square()) raise(ErrorKind::NonSquare, "Sp membership needs a square matrix");
    if (s.rows() % 2 != 0) raise(ErrorKind::OddDimension, "Sp membership needs even size");
    Mat<R> j = standard_J<R>(s.rows() / 2);
    return s.transpose() * j * s == j;
}

// Inverse of a symplectic matrix: S^{-1} = J^{-1} S^t J = -J S^t J.
template <class R>
Mat<R> symplectic_inverse(const Mat<R>& s) {
    Mat<R> j = standard_J<R>(s.rows() / 2);
    return -(j * s.transpose() * j);
}

// Homogeneous quadratic Hamiltonian
//   H = sum a_ij x_i x_j / 2 + b_ij y_i y_j / 2 + c_ij x_i y_j,
// stored as the blocks A (symmetric), B (symmetric), C.
template <class R>
struct QuadraticHamiltonian {
    int n = 0;
    Mat<R> A, B, C;

    QuadraticHamiltonian() = default;
    QuadraticHamiltonian(int n_, Mat<R> a, Mat<R> b, Mat<R> c)
        : n(n_), A(std::move(a)), B(std::move(b)), C(std::move(c)) {
        if (A.rows() != n || A.cols() != n || B.rows() != n || B.cols() != n || C.rows() != n ||
            C.cols() != n)
            raise(ErrorKind::DimensionMismatch, "Hamiltonian blocks must be n x n");
        if (A != A.transpose() || B != B.transpose())
            raise(ErrorKind::AsymmetricBlock, "A and B blocks must be symmetric");
    }

    static QuadraticHamiltonian zero(int n) {
        return QuadraticHamiltonian(n, Mat<R>(n, n), Mat<R>(n, n), Mat<R>(n, n));
    }

    bool is_zero() const { return A.is_zero() && B.is_zero() && C.is_zero(); }

    friend bool operator==(const QuadraticHamiltonian& f, const QuadraticHamiltonian& g) {
        return f.n == g.n && f.A == g.A && f.B == g.B && f.C == g.C;
    }
    friend bool operator!=(const QuadraticHamiltonian& f, const QuadraticHamiltonian& g) {
        return !(f == g);
    }

    QuadraticHamiltonian operator+(const QuadraticHamiltonian& o) const {
        return QuadraticHamiltonian(n, A + o.A, B + o.B, C + o.C);
    }
    QuadraticHamiltonian operator-(const QuadraticHamiltonian& o) const {
        return QuadraticHamiltonian(n, A - o.A, B - o.B, C - o.C);
    }
    QuadraticHamiltonian scaled(const R& s) const {
        return QuadraticHamiltonian(n, A.scaled(s), B.scaled(s), C.scaled(s));
    }

    // Symmetric Gram matrix Q with H = z^t Q z / 2 in coordinates (x, y).
    Mat<R> gram() const {
        Mat<R> q(2 * n, 2 * n);
        Mat<R> ct = C.transpose();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                q(i, j) = A(i, j);
                q(n + i, n + j) = B(i, j);
                q(i, n + j) = C(i, j);
                q(n + i, j) = ct(i, j);
            }
        return q;
    }

    static QuadraticHamiltonian from_gram(int n, const Mat<R>& q) {
        Mat<R> a(n, n), b(n, n), c(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a(i, j) = q(i, j);
                b(i, j) = q(n + i, n + j);
                c(i, j) = q(i, n + j);
            }
        return QuadraticHamiltonian(n, std::move(a), std::move(b), std::move(c));
    }

    std::string str(const std::string& x = "x", const std::string& y = "y") const;
};

// 2n x 2n matrix constrained to sp(2n); the right-hand side of the linear
// motion equations d/dt (x, y) = M(t) (x, y).
template <class R>
class HamiltonianMatrix {
public:
    HamiltonianMatrix() = default;
    explicit HamiltonianMatrix(Mat<R> m) : m_(std::move(m)) {
        if (!is_hamiltonian_matrix(m_))
            raise(ErrorKind::NotHamiltonian, "matrix is not in sp(2n)");
        n_ = m_.rows() / 2;
    }

    int n() const { return n_; }
    const Mat<R>& mat() const { return m_; }

    friend bool operator==(const HamiltonianMatrix& a, const HamiltonianMatrix& b) {
        return a.m_ == b.m_;
    }

private:
    int n_ = 0;
    Mat<R> m_;
};

// The dictionary: H = (A, B, C) maps to M = ((C^t, B), (-A, -C)).
template <class R>
HamiltonianMatrix<R> ham_to_matrix(const QuadraticHamiltonian<R>& h) {
    int n = h.n;
    Mat<R> m(2 * n, 2 * n);
    Mat<R> ct = h.C.transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m(i, j) = ct(i, j);
            m(i, n + j) = h.B(i, j);
            m(n + i, j) = -h.A(i, j);
            m(n + i, n + j) = -h.C(i, j);
        }
    return HamiltonianMatrix<R>(std::move(m));
}

// Exact inverse of ham_to_matrix.
template <class R>
QuadraticHamiltonian<R> matrix_to_ham(const HamiltonianMatrix<R>& hm) {
    int n = hm.n();
    const Mat<R>& m = hm.mat();
    Mat<R> a(n, n), b(n, n), c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a(i, j) = -m(n + i, j);
            b(i, j) = m(i, n + j);
            c(i, j) = -m(n + i, n + j);
        }
    return QuadraticHamiltonian<R>(n, std::move(a), std::move(b), std::move(c));
}

template <class R>
QuadraticHamiltonian<R> matrix_to_ham(const Mat<R>& m) {
    return matrix_to_ham(HamiltonianMatrix<R>(m));
}

// Poisson bracket {F, G} = sum_i (F_{x_i} G_{y_i} - F_{y_i} G_{x_i}) of
// quadratic forms, written out on the (A, B, C) blocks.  The result is
// cross-checked against the dictionary identity M_{F,G} = [M_F, M_G].
template <class R>
QuadraticHamiltonian<R> poisson_bracket(const QuadraticHamiltonian<R>& f,
                                        const QuadraticHamiltonian<R>& g) {
    if (f.n != g.n) raise(ErrorKind::DimensionMismatch, "bracket of Hamiltonians with different n");
    Mat<R> a = f.A * g.C.transpose() + g.C * f.A - f.C * g.A - g.A * f.C.transpose();
    Mat<R> b = f.C.transpose() * g.B + g.B * f.C - f.B * g.C - g.C.transpose() * f.B;
    Mat<R> c = f.A * g.B + g.C * f.C - g.A * f.B - f.C * g.C;
    QuadraticHamiltonian<R> h(f.n, std::move(a), std::move(b), std::move(c));
    if (ham_to_matrix(h).mat() != commutator(ham_to_matrix(f).mat(), ham_to_matrix(g).mat()))
        raise(ErrorKind::Internal, "bracket routes disagree");
    return h;
}

// The bracket through the dictionary alone; used as an independent route.
template <class R>
QuadraticHamiltonian<R> poisson_bracket_via_commutator(const QuadraticHamiltonian<R>& f,
                                                       const QuadraticHamiltonian<R>& g) {
    if (f.n != g.n) raise(ErrorKind::DimensionMismatch, "bracket of Hamiltonians with different n");
    return matrix_to_ham(commutator(ham_to_matrix(f).mat(), ham_to_matrix(g).mat()));
}

// Motion equations of a time-dependent quadratic Hamiltonian: the system
// matrix M(t) = ((C^t, B), (-A, -C)) with RatFunc entries.
inline HamiltonianMatrix<RatFunc> motion_matrix(const QuadraticHamiltonian<RatFunc>& h) {
    return ham_to_matrix(h);
}

template <class R>
std::string QuadraticHamiltonian<R>::str(const std::string& x, const std::string& y) const {
    std::vector<std::string> terms;
    auto add_term = [&terms](const R& coeff, const std::string& mono) {
        if (RingOps<R>::is_zero(coeff)) return;
        std::string cs = RingOps<R>::str(coeff);
        if (cs == "1")
            terms.push_back(mono);
        else if (cs == "-1")
            terms.push_back("-" + mono);
        else
            terms.push_back("(" + cs + ")*" + mono);
    };
    const GaussianRational half(Rational(1, 2));
    auto var = [](const std::string& base, int k) { return base + std::to_string(k + 1); };
    for (int i = 0; i < n; ++i) {
        add_term(A(i, i) * half, var(x, i) + "^2");
        for (int j = i + 1; j < n; ++j) add_term(A(i, j), var(x, i) + "*" + var(x, j));
    }
    for (int i = 0; i < n; ++i) {
        add_term(B(i, i) * half, var(y, i) + "^2");
        for (int j = i + 1; j < n; ++j) add_term(B(i, j), var(y, i) + "*" + var(y, j));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) add_term(C(i, j), var(x, i) + "*" + var(y, j));
    if (terms.empty()) return "0";
    std::string s = terms[0];
    for (size_t k = 1; k < terms.size(); ++k) {
        if (terms[k][0] == '-')
            s += " - " + terms[k].substr(1);
        else
            s += " + " + terms[k];
    }
    return s;
}

} // namespace linham
