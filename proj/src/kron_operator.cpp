#include "terw/kron_operator.hpp"

namespace terw {

namespace {

// Applies one factor along tensor position `k` of a vector whose current
// shape is `dims` (leftmost slowest). Returns the new vector; the shape at
// position k becomes f.rows().
Vec apply_mode(const Mat& f, std::size_t k, const Vec& v, const std::vector<Index>& dims) {
    Index outer = 1, inner = 1;
    for (std::size_t t = 0; t < k; ++t) outer *= dims[t];
    for (std::size_t t = k + 1; t < dims.size(); ++t) inner *= dims[t];
    const Index in_mid = f.cols();
    const Index out_mid = f.rows();

    Vec out = Vec::Zero(outer * out_mid * inner);
    for (Index o = 0; o < outer; ++o) {
        const Index in_base = o * in_mid * inner;
        const Index out_base = o * out_mid * inner;
        for (Index i = 0; i < out_mid; ++i) {
            for (Index j = 0; j < in_mid; ++j) {
                const Rational& a = f(i, j);
                if (a == 0) continue;
                const Index src = in_base + j * inner;
                const Index dst = out_base + i * inner;
                for (Index t = 0; t < inner; ++t) out(dst + t) += a * v(src + t);
            }
        }
    }
    return out;
}

}  // namespace

KronSumOperator::KronSumOperator(std::vector<Mat> factors, KronMode mode)
    : factors_(std::move(factors)), mode_(mode) {
    if (factors_.empty()) throw ShapeError("KronSumOperator: no factors");
    if (mode_ == KronMode::Sum) {
        for (const Mat& f : factors_)
            if (f.rows() != f.cols())
                throw ShapeError("KronSumOperator: sum mode requires square factors");
    }
}

Index KronSumOperator::rows() const {
    Index n = 1;
    for (const Mat& f : factors_) n *= f.rows();
    return n;
}

Index KronSumOperator::cols() const {
    Index n = 1;
    for (const Mat& f : factors_) n *= f.cols();
    return n;
}

Vec KronSumOperator::apply(const Vec& v) const {
    if (v.size() != cols())
        throw ShapeError("KronSumOperator::apply: expected length " + std::to_string(cols()) +
                         ", got " + std::to_string(v.size()));
    std::vector<Index> dims(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k) dims[k] = factors_[k].cols();

    if (mode_ == KronMode::Sum) {
        Vec out = Vec::Zero(v.size());
        for (std::size_t k = 0; k < factors_.size(); ++k) out += apply_mode(factors_[k], k, v, dims);
        return out;
    }
    Vec out = v;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        out = apply_mode(factors_[k], k, out, dims);
        dims[k] = factors_[k].rows();
    }
    return out;
}

Mat KronSumOperator::materialize() const {
    if (mode_ == KronMode::Product) return kron_all(factors_);
    Mat out = Mat::Zero(rows(), cols());
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        std::vector<Mat> term;
        for (std::size_t t = 0; t < factors_.size(); ++t)
            term.push_back(t == k ? factors_[t] : identity(factors_[t].rows()));
        out += kron_all(term);
    }
    return out;
}

}  // namespace terw
