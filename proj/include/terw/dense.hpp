#ifndef TERW_DENSE_HPP
#define TERW_DENSE_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

#include "terw/errors.hpp"
#include "terw/rational.hpp"

namespace terw {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = DenseMatrix<Rational>;
using Vec = DenseVector<Rational>;
using Index = Eigen::Index;

/// Column j of a matrix holds the coefficients of the image of basis
/// vector j: "M v_j = sum_i M(i,j) v_i". All constructors in this project
/// follow that convention.

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m.derived().coeff(i, j) != 0) return false;
    return true;
}

template <typename DerivedA, typename DerivedB>
bool same_matrix(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a.derived().coeff(i, j) != b.derived().coeff(i, j)) return false;
    return true;
}

/// Checked exact product.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> mat_mul(const Eigen::MatrixBase<DerivedA>& a,
                                               const Eigen::MatrixBase<DerivedB>& b) {
    if (a.cols() != b.rows())
        throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    return a.derived() * b.derived();
}

/// Exact commutator ab - ba of square matrices of equal size.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> commutator(const Eigen::MatrixBase<DerivedA>& a,
                                                  const Eigen::MatrixBase<DerivedB>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw ShapeError("commutator requires square matrices of equal size");
    return a.derived() * b.derived() - b.derived() * a.derived();
}

/// Kronecker product with the leftmost factor slowest-varying:
/// out(i1*rb + i2, j1*cb + j2) = a(i1, j1) * b(i2, j2).
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    const DenseMatrix<Scalar> ae = a.derived();
    const DenseMatrix<Scalar> be = b.derived();
    DenseMatrix<Scalar> out(ae.rows() * be.rows(), ae.cols() * be.cols());
    for (Index i = 0; i < ae.rows(); ++i)
        for (Index j = 0; j < ae.cols(); ++j)
            out.block(i * be.rows(), j * be.cols(), be.rows(), be.cols()) = ae(i, j) * be;
    return out;
}

template <typename Scalar>
DenseMatrix<Scalar> kron_all(const std::vector<DenseMatrix<Scalar>>& factors) {
    if (factors.empty()) throw ShapeError("kron_all: no factors");
    DenseMatrix<Scalar> out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
    return out;
}

Mat identity(Index n);
Mat zero(Index rows, Index cols);

/// Text serialization: header line "rows cols", then one line "i j value"
/// per nonzero entry (0-based, value printed as num or num/den), lines
/// sorted by (i, j).
std::string write_matrix_text(const Mat& m);
Mat read_matrix_text(const std::string& text);

}  // namespace terw

#endif
