#ifndef TERW_KRON_OPERATOR_HPP
#define TERW_KRON_OPERATOR_HPP

#include <vector>

#include "terw/dense.hpp"

namespace terw {

enum class KronMode { Sum, Product };

/// Implicit Kronecker operator over an ordered list of small factors,
/// leftmost factor slowest-varying. In Product mode it represents
/// A_1 (x) A_2 (x) ... (x) A_n; in Sum mode (square factors only) it
/// represents sum_k I (x) ... (x) A_k (x) ... (x) I. Application works
/// factor by factor and never forms the full matrix, so memory stays
/// proportional to the vector length.
class KronSumOperator {
public:
    KronSumOperator(std::vector<Mat> factors, KronMode mode);

    Index rows() const;
    Index cols() const;
    KronMode mode() const { return mode_; }
    const std::vector<Mat>& factors() const { return factors_; }

    /// Throws ShapeError unless v.size() == cols().
    Vec apply(const Vec& v) const;

    /// Reference expansion for cross-checks at small sizes.
    Mat materialize() const;

private:
    std::vector<Mat> factors_;
    KronMode mode_;
};

}  // namespace terw

#endif
