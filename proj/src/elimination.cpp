#include "terw/elimination.hpp"

#include <cassert>

namespace terw {

namespace {

// Scales each row by the lcm of its denominators so elimination can run
// over the integers. Row scaling changes neither the row space, the rank,
// nor the kernel.
std::vector<std::vector<Integer>> integer_rows(const Mat& m) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) {
        Integer scale(1);
        for (Index j = 0; j < m.cols(); ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
        auto& row = rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m.cols()));
        for (Index j = 0; j < m.cols(); ++j)
            row[static_cast<std::size_t>(j)] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }
    return rows;
}

}  // namespace

EchelonForm echelon(const Mat& m) {
    EchelonForm ec;
    ec.cols = m.cols();
    ec.rows = integer_rows(m);
    const Index nrows = m.rows();
    const Index ncols = m.cols();

    Index r = 0;
    Integer prev(1);
    for (Index c = 0; c < ncols && r < nrows; ++c) {
        Index pr = -1;
        for (Index i = r; i < nrows; ++i) {
            if (ec.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(ec.rows[static_cast<std::size_t>(r)], ec.rows[static_cast<std::size_t>(pr)]);
        const auto& pivot_row = ec.rows[static_cast<std::size_t>(r)];
        const Integer& pivot = pivot_row[static_cast<std::size_t>(c)];
        for (Index i = r + 1; i < nrows; ++i) {
            auto& row = ec.rows[static_cast<std::size_t>(i)];
            const Integer lead = row[static_cast<std::size_t>(c)];
            for (Index j = c + 1; j < ncols; ++j) {
                Integer t = row[static_cast<std::size_t>(j)] * pivot -
                            lead * pivot_row[static_cast<std::size_t>(j)];
                assert(t % prev == 0);
                row[static_cast<std::size_t>(j)] = t / prev;
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pivot;
        ec.pivot_cols.push_back(c);
        ++r;
    }
    return ec;
}

Index rank(const Mat& m) { return echelon(m).rank(); }

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

namespace {

// Back-substitutes one coordinate vector against the echelon rows; entries
// at columns > `limit` other than the preset ones are zero on entry.
void back_substitute(const EchelonForm& ec, Vec& v) {
    for (Index t = ec.rank() - 1; t >= 0; --t) {
        const auto& row = ec.rows[static_cast<std::size_t>(t)];
        const Index p = ec.pivot_cols[static_cast<std::size_t>(t)];
        Rational sum(0);
        for (Index j = p + 1; j < ec.cols; ++j) {
            if (v(j) != 0 && row[static_cast<std::size_t>(j)] != 0)
                sum += Rational(row[static_cast<std::size_t>(j)]) * v(j);
        }
        v(p) = -sum / Rational(row[static_cast<std::size_t>(p)]);
    }
}

void normalize_leading_one(Vec& v) {
    for (Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0) {
            const Rational lead = v(i);
            for (Index j = i; j < v.size(); ++j) v(j) /= lead;
            return;
        }
    }
}

}  // namespace

std::vector<Vec> kernel_basis(const Mat& m) {
    const EchelonForm ec = echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index p : ec.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Vec> basis;
    for (Index f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v = Vec::Zero(m.cols());
        v(f) = 1;
        back_substitute(ec, v);
        normalize_leading_one(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> solve_exact(const Mat& a, const Mat& rhs) {
    if (a.rows() != rhs.rows())
        throw ShapeError("solve_exact: row mismatch");
    Mat aug(a.rows(), a.cols() + rhs.cols());
    aug.leftCols(a.cols()) = a;
    aug.rightCols(rhs.cols()) = rhs;
    const EchelonForm ec = echelon(aug);

    Index lhs_pivots = 0;
    bool rhs_pivot = false;
    for (Index p : ec.pivot_cols) {
        if (p < a.cols())
            ++lhs_pivots;
        else
            rhs_pivot = true;
    }
    if (lhs_pivots < a.cols())
        throw DomainError("solve_exact: coefficient matrix is column-rank deficient");
    if (rhs_pivot) return std::nullopt;  // a pivot in the rhs block: inconsistent

    Mat x(a.cols(), rhs.cols());
    for (Index col = 0; col < rhs.cols(); ++col) {
        // Solve the triangular system row by row, bottom up.
        for (Index t = lhs_pivots - 1; t >= 0; --t) {
            const auto& row = ec.rows[static_cast<std::size_t>(t)];
            const Index p = ec.pivot_cols[static_cast<std::size_t>(t)];
            Rational sum = Rational(row[static_cast<std::size_t>(a.cols() + col)]);
            for (Index j = t + 1; j < lhs_pivots; ++j) {
                const Index pj = ec.pivot_cols[static_cast<std::size_t>(j)];
                if (row[static_cast<std::size_t>(pj)] != 0)
                    sum -= Rational(row[static_cast<std::size_t>(pj)]) * x(pj, col);
            }
            x(p, col) = sum / Rational(row[static_cast<std::size_t>(p)]);
        }
    }
    return x;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse: matrix not square");
    auto x = solve_exact(m, identity(m.rows()));
    if (!x) throw SingularityError("inverse: matrix is singular");
    return *x;
}

}  // namespace terw
