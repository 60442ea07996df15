#ifndef STARDEF_LINALG_HPP
#define STARDEF_LINALG_HPP

// Dense Eigen matrices over Q and Q(i), and exact Gaussian elimination over
// those fields. Elimination skips zero entries, which keeps the sparse
// coboundary matrices cheap.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "stardef/scalars.hpp"

namespace Eigen {

template <>
struct NumTraits<stardef::QI> : GenericNumTraits<stardef::QI> {
    using Real = stardef::QI;
    using NonInteger = stardef::QI;
    using Literal = stardef::QI;
    using Nested = stardef::QI;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    // Exact arithmetic: no rounding digits to report when printing.
    static int digits10() { return 0; }
};

template <>
struct NumTraits<stardef::Rational> : GenericNumTraits<stardef::Rational> {
    using Real = stardef::Rational;
    using NonInteger = stardef::Rational;
    using Literal = stardef::Rational;
    using Nested = stardef::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 16
    };
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace stardef {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatrixQI = Mat<QI>;
using VectorQI = Vec<QI>;
using MatrixQ = Mat<Rational>;
using VectorQ = Vec<Rational>;

template <class T>
Mat<T> zeros(Eigen::Index rows, Eigen::Index cols)
{
    return Mat<T>::Constant(rows, cols, T(0));
}

template <class T>
Mat<T> identity_matrix(Eigen::Index n)
{
    Mat<T> m = zeros<T>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
}

/// Entrywise conjugate transpose.
inline MatrixQI adjoint(const MatrixQI& a)
{
    MatrixQI out(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
    return out;
}

template <class T>
bool is_zero_matrix(const Mat<T>& a)
{
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == T(0))) return false;
    return true;
}

/// Product that skips zero entries of the left factor.
template <class T>
Mat<T> multiply(const Mat<T>& a, const Mat<T>& b)
{
    Mat<T> out = zeros<T>(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k) == T(0)) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (!(b(k, j) == T(0))) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <class T>
struct Echelon {
    Mat<T> reduced;                 // reduced row echelon form
    std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <class T>
Echelon<T> row_reduce(Mat<T> a)
{
    Echelon<T> e;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index r = 0;
    std::vector<Eigen::Index> support;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!(a(i, c) == T(0))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        const T inv = T(1) / a(r, c);
        support.clear();
        for (Eigen::Index j = c; j < cols; ++j)
            if (!(a(r, j) == T(0))) {
                a(r, j) = a(r, j) * inv;
                support.push_back(j);
            }
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == T(0)) continue;
            const T factor = a(i, c);
            for (Eigen::Index j : support) a(i, j) = a(i, j) - factor * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(a);
    return e;
}

template <class T>
Eigen::Index rank(const Mat<T>& a)
{
    return row_reduce(a).rank();
}

/// Basis of the kernel as columns; free variables set to unit vectors.
template <class T>
Mat<T> nullspace(const Mat<T>& a)
{
    Echelon<T> e = row_reduce(a);
    const Eigen::Index cols = a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    Mat<T> basis = zeros<T>(cols, static_cast<Eigen::Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        const Eigen::Index f = free[k];
        basis(f, static_cast<Eigen::Index>(k)) = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis(e.pivots[r], static_cast<Eigen::Index>(k)) = -e.reduced(static_cast<Eigen::Index>(r), f);
    }
    return basis;
}

/// Some x with a x = b, free variables zero; nullopt when inconsistent.
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& a, const Vec<T>& b)
{
    Mat<T> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    Echelon<T> e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vec<T> x = Vec<T>::Constant(a.cols(), T(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(static_cast<Eigen::Index>(r), a.cols());
    return x;
}

/// Columns of `a` forming a basis of its column space.
template <class T>
Mat<T> column_basis(const Mat<T>& a)
{
    Echelon<T> e = row_reduce(a);
    Mat<T> out(a.rows(), e.rank());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = a.col(e.pivots[k]);
    return out;
}

/// [a | b] horizontally.
template <class T>
Mat<T> hstack(const Mat<T>& a, const Mat<T>& b)
{
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    Mat<T> out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

/// Coefficients of det(t I - a), lowest degree first (Faddeev-LeVerrier).
template <class T>
std::vector<T> characteristic_polynomial(const Mat<T>& a)
{
    const Eigen::Index n = a.rows();
    std::vector<T> c(static_cast<std::size_t>(n + 1), T(0));
    c[static_cast<std::size_t>(n)] = T(1);
    Mat<T> m = zeros<T>(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
        Mat<T> next = multiply<T>(a, m);
        for (Eigen::Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        m = std::move(next);
        Mat<T> am = multiply<T>(a, m);
        T tr(0);
        for (Eigen::Index i = 0; i < n; ++i) tr += am(i, i);
        c[static_cast<std::size_t>(n - k)] = -tr / T(static_cast<long>(k));
    }
    return c;
}

}  // namespace stardef

#endif
