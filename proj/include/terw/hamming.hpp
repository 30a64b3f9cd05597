#ifndef TERW_HAMMING_HPP
#define TERW_HAMMING_HPP

#include <vector>

#include "terw/dense.hpp"
#include "terw/kron_operator.hpp"

namespace terw {

/// H(D, q): vertices are q-ary D-tuples, adjacent iff they differ in
/// exactly one coordinate. Vertices are enumerated lexicographically with
/// the leftmost coordinate slowest-varying, matching the tensor
/// factorization of the standard module. All dual objects are taken with
/// respect to the all-zeros base vertex; vertex-transitivity makes that
/// choice lossless.
struct HammingGraph {
    int D;
    int q;
};

/// Throws DomainError unless D >= 1 and q >= 3.
HammingGraph hamming_graph(int D, int q);

using VertexTuple = std::vector<int>;

/// Number of differing coordinates. Throws DomainError if a coordinate is
/// outside {0, ..., q-1} or the tuples have different lengths.
int hamming_distance(const VertexTuple& x, const VertexTuple& y, int q);

Index vertex_count(const HammingGraph& g);
VertexTuple vertex_of_index(const HammingGraph& g, Index idx);
Index index_of_vertex(const HammingGraph& g, const VertexTuple& x);
int distance_from_base(const HammingGraph& g, Index idx);

/// Largest vertex count for which q^D x q^D matrices may be materialized.
/// Defaults to 20000; override with the TERW_MATERIALIZE_CAP environment
/// variable. Beyond the cap only the implicit Kronecker operators apply.
Index materialization_cap();
void require_materializable(const HammingGraph& g);

/// Eigenvalue D(q-1) - q*i of the adjacency matrix; the dual adjacency
/// matrix has the same spectrum.
Rational eigenvalue(const HammingGraph& g, int i);

/// Adjacency matrix, built from pairwise distances and cross-checked
/// against the Kronecker-sum recursion over D tensor positions.
Mat adjacency(const HammingGraph& g);

/// Diagonal dual adjacency matrix D(q-1) - q*dist(base, y). Cross-checked
/// against the tensor recursion and against q^D times the base-vertex row
/// of the first primitive idempotent.
Mat dual_adjacency(const HammingGraph& g);

/// Implicit operators for cap-exceeding sizes.
KronSumOperator adjacency_operator(const HammingGraph& g);
KronSumOperator dual_adjacency_operator(const HammingGraph& g);

/// Distance matrices A_0 .. A_D.
std::vector<Mat> distance_matrices(const HammingGraph& g);

/// Primitive idempotents E_0 .. E_D by the tensor recursion from the
/// one-dimensional base case E_0 = J/q, E_1 = I - J/q.
std::vector<Mat> idempotents(const HammingGraph& g);

/// Independent construction: entry at (x, y) depends only on dist(x, y)
/// through the eigenmatrix coefficients of the scheme. Used to cross-check
/// the recursion.
std::vector<Mat> idempotents_entrywise(const HammingGraph& g);

/// Dual primitive idempotents: 0/1 diagonal shell indicators, built
/// directly and cross-checked against the tensor recursion.
std::vector<Mat> dual_idempotents(const HammingGraph& g);

struct IntersectionNumbers {
    std::vector<long> a, b, c;  // indices 0..D
};

/// Intersection numbers a_i = i(q-2), b_i = (D-i)(q-1), c_i = i, verified
/// combinatorially over all vertex pairs. Throws ConsistencyError if any
/// brute-force count disagrees with the formulas.
IntersectionNumbers intersection_numbers(const HammingGraph& g);

struct QPolyReport {
    bool pass = true;
    int first_bad_i = -1;
    Index bad_row = -1, bad_col = -1;
    std::string detail;
    std::vector<int> checked;  // the indices i that were verified
};

/// Verifies the three-term Hadamard-product recurrence
/// E_1 ∘ E_i = q^{-D} (b*_{i-1} E_{i-1} + a*_i E_i + c*_{i+1} E_{i+1})
/// for every i, with out-of-range terms equal to zero.
QPolyReport q_polynomial_check(const HammingGraph& g);

struct SchemeMatrices {
    Mat adjacency;
    Mat dual_adjacency;
    std::vector<Mat> distance;
    std::vector<Mat> idem;
    std::vector<Mat> dual_idem;
};

SchemeMatrices scheme_matrices(const HammingGraph& g);

}  // namespace terw

#endif
