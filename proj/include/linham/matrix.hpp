#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "linham/error.hpp"
#include "linham/gaussian.hpp"
#include "linham/parampoly.hpp"
#include "linham/ratfunc.hpp"

namespace linham {

// Ring glue for the scalar types a matrix can hold.
template <class R>
struct RingOps;

template <>
struct RingOps<GaussianRational> {
    static constexpr bool is_field = true;
    static GaussianRational zero() { return GaussianRational::zero(); }
    static GaussianRational one() { return GaussianRational::one(); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static std::string str(const GaussianRational& x) { return x.str(); }
};

template <>
struct RingOps<RatFunc> {
    static constexpr bool is_field = true;
    static RatFunc zero() { return RatFunc::zero(); }
    static RatFunc one() { return RatFunc::one(); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static std::string str(const RatFunc& x) { return x.str(); }
};

template <>
struct RingOps<ParamPoly> {
    static constexpr bool is_field = false;
    static ParamPoly zero() { return ParamPoly(); }
    static ParamPoly one() {
        raise(ErrorKind::Internal, "ParamPoly matrices have no canonical one without a context");
    }
    static bool is_zero(const ParamPoly& x) { return x.is_zero(); }
    static std::string str(const ParamPoly& x) { return x.str(); }
};

template <>
struct RingOps<std::complex<double>> {
    static constexpr bool is_field = true;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }
    static std::string str(const std::complex<double>& x) {
        return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
    }
};

// Dense rectangular matrix with value semantics, one scalar ring per matrix.
template <class R>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, RingOps<R>::zero()) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = RingOps<R>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    R& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const R& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const R& x : a_)
            if (!RingOps<R>::is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat operator-() const {
        Mat r = *this;
        for (R& x : r.a_) x = -x;
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same_shape(a, b);
        Mat r = a;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same_shape(a, b);
        Mat r = a;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) raise(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                if (RingOps<R>::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    Mat scaled(const R& s) const {
        Mat r = *this;
        for (R& x : r.a_) x = x * s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    R trace() const {
        R s = RingOps<R>::zero();
        for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    Mat pow(int e) const {
        Mat r = identity(rows_);
        Mat base = *this;
        for (int k = e; k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    // Cofactor determinant; works over any commutative ring (sizes are small).
    R det_cofactor() const {
        if (!is_square()) raise(ErrorKind::NonSquare, "determinant of a non-square matrix");
        int n = rows_;
        if (n == 1) return (*this)(0, 0);
        R s = RingOps<R>::zero();
        for (int j = 0; j < n; ++j) {
            if (RingOps<R>::is_zero((*this)(0, j))) continue;
            Mat sub(n - 1, n - 1);
            for (int i = 1; i < n; ++i) {
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub(i - 1, cc++) = (*this)(i, c);
                }
            }
            R term = (*this)(0, j) * sub.det_cofactor();
            if (j % 2 == 0)
                s += term;
            else
                s -= term;
        }
        return s;
    }

    // Row-reduced echelon form in place; returns pivot columns.  Field rings only.
    std::vector<int> rref() {
        static_assert(RingOps<R>::is_field);
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (!RingOps<R>::is_zero((*this)(i, col))) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
            R inv = RingOps<R>::one() / (*this)(row, col);
            for (int j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || RingOps<R>::is_zero((*this)(i, col))) continue;
                R f = (*this)(i, col);
                for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Mat m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Basis of the right kernel, as columns. Field rings only.
    std::vector<std::vector<R>> kernel() const {
        Mat m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
        for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
        std::vector<std::vector<R>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[static_cast<size_t>(free)]) continue;
            std::vector<R> v(static_cast<size_t>(cols_), RingOps<R>::zero());
            v[static_cast<size_t>(free)] = RingOps<R>::one();
            for (size_t r = 0; r < pivots.size(); ++r)
                v[static_cast<size_t>(pivots[r])] = -m(static_cast<int>(r), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Mat inverse() const {
        static_assert(RingOps<R>::is_field);
        if (!is_square()) raise(ErrorKind::NonSquare, "inverse of a non-square matrix");
        int n = rows_;
        Mat aug(n, 2 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = RingOps<R>::one();
        }
        std::vector<int> pivots = aug.rref();
        if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
            raise(ErrorKind::DivisionByZero, "singular matrix");
        Mat inv(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        return inv;
    }

    template <class S, class F>
    Mat<S> map(F&& f) const {
        Mat<S> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + RingOps<R>::str((*this)(i, j));
        }
        return s + "]";
    }

private:
    static void check_same_shape(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            raise(ErrorKind::DimensionMismatch, "matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<R> a_;
};

template <class R>
Mat<R> commutator(const Mat<R>& a, const Mat<R>& b) {
    return a * b - b * a;
}

using MatQ = Mat<GaussianRational>;
using MatF = Mat<RatFunc>;
using MatC = Mat<std::complex<double>>;

} // namespace linham
