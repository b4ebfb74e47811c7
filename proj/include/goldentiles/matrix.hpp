#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "goldentiles/errors.hpp"
#include "goldentiles/golden.hpp"

namespace goldentiles {

/// Small dense matrix over an exact field (Rational or GoldenNumber).
/// Elimination is fraction-free Bareiss with the pivot chosen as the first
/// nonzero entry scanning down from the current row, so results are
/// deterministic for identical input.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(size_t r, size_t c) : r_(r), c_(c), d_(r * c) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        d_.reserve(r_ * c_);
        for (const auto& row : rows)
            for (const auto& v : row) d_.push_back(v);
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    T& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

    Mat transpose() const {
        Mat t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> row(size_t i) const {
        std::vector<T> out(c_);
        for (size_t j = 0; j < c_; ++j) out[j] = (*this)(i, j);
        return out;
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> out(r_);
        for (size_t i = 0; i < r_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    bool operator==(const Mat&) const = default;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T{}) continue;
            for (size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <class T>
Mat<T> operator*(const T& s, const Mat<T>& a) {
    Mat<T> out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

template <class T>
Mat<T> mat_pow(const Mat<T>& m, unsigned k) {
    Mat<T> acc = Mat<T>::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

/// Determinant by Bareiss elimination (exact, deterministic).
template <class T>
T det(Mat<T> m) {
    size_t n = m.rows();
    if (n == 0) return T(1);
    T prev = T(1);
    int sign_flips = 0;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && m(p, k) == T{}) ++p;
        if (p == n) return T{};
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            ++sign_flips;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = T{};
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return (sign_flips % 2) ? -d : d;
}

/// Column rank via echelon reduction.
template <class T>
size_t rank(Mat<T> m) {
    size_t n = m.rows(), c = m.cols(), r = 0;
    for (size_t col = 0; col < c && r < n; ++col) {
        size_t p = r;
        while (p < n && m(p, col) == T{}) ++p;
        if (p == n) continue;
        if (p != r)
            for (size_t j = 0; j < c; ++j) std::swap(m(p, j), m(r, j));
        for (size_t i = r + 1; i < n; ++i) {
            if (m(i, col) == T{}) continue;
            T f = m(i, col) / m(r, col);
            for (size_t j = col; j < c; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Solve A·X = B exactly for square A (Bareiss forward pass, exact
/// back-substitution). Throws SingularMatrix.
template <class T>
Mat<T> solve_left(Mat<T> a, Mat<T> b) {
    size_t n = a.rows();
    if (a.cols() != n || b.rows() != n)
        throw std::invalid_argument("solve_left: shape mismatch");
    size_t m = b.cols();
    T prev = T(1);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a(p, k) == T{}) ++p;
        if (p == n) throw SingularMatrix("pivot column " + std::to_string(k) + " vanished");
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            for (size_t j = 0; j < m; ++j) std::swap(b(p, j), b(k, j));
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            for (size_t j = 0; j < m; ++j)
                b(i, j) = (a(k, k) * b(i, j) - a(i, k) * b(k, j)) / prev;
            a(i, k) = T{};
        }
        prev = a(k, k);
    }
    Mat<T> x(n, m);
    for (size_t col = 0; col < m; ++col)
        for (size_t ii = n; ii-- > 0;) {
            T acc = b(ii, col);
            for (size_t j = ii + 1; j < n; ++j) acc = acc - a(ii, j) * x(j, col);
            x(ii, col) = acc / a(ii, ii);
        }
    return x;
}

/// Solve X·A = B exactly (the reconstruction convention): transpose, solve,
/// transpose back.
template <class T>
Mat<T> solve_exact(const Mat<T>& a, const Mat<T>& b) {
    return solve_left(a.transpose(), b.transpose()).transpose();
}

using RationalMatrix = Mat<Rational>;
using GoldenMatrix = Mat<GoldenNumber>;

/// Lift a rational matrix into Q[τ] entries.
GoldenMatrix to_golden(const RationalMatrix&);
/// Project a Q[τ] matrix to rationals when every τ-part vanishes.
bool try_to_rational(const GoldenMatrix&, RationalMatrix* out);

} // namespace goldentiles
