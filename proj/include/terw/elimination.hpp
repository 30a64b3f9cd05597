#ifndef TERW_ELIMINATION_HPP
#define TERW_ELIMINATION_HPP

#include <optional>
#include <vector>

#include "terw/dense.hpp"

namespace terw {

/// Fraction-free (Bareiss) row echelon form. Rows are scaled to integers
/// first; every intermediate entry is a minor of the scaled matrix, which
/// keeps coefficient growth polynomial instead of the exponential blowup
/// of naive rational elimination.
struct EchelonForm {
    std::vector<std::vector<Integer>> rows;  // echelon rows, zero rows included
    std::vector<Index> pivot_cols;           // strictly increasing
    Index cols = 0;

    Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

EchelonForm echelon(const Mat& m);

Index rank(const Mat& m);

bool is_invertible(const Mat& m);

/// Exact null-space basis. Vectors are ordered by their free column index
/// and each is scaled so its first nonzero coordinate equals 1; the result
/// is empty iff m is injective.
std::vector<Vec> kernel_basis(const Mat& m);

/// Solves a * X = rhs where a has full column rank. Returns nullopt when
/// the system is inconsistent (rhs outside the column space). Throws
/// DomainError when a is column-rank deficient, since the solution would
/// not be unique.
std::optional<Mat> solve_exact(const Mat& a, const Mat& rhs);

/// Exact inverse of a square invertible matrix. Throws SingularityError.
Mat inverse(const Mat& m);

}  // namespace terw

#endif
