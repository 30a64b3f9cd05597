#include <doctest.h>

#include "terw/elimination.hpp"
#include "terw/kron_operator.hpp"
#include "test_util.hpp"

using namespace terw;

namespace {

// Complete graph adjacency J - I on q letters.
Mat complete_graph(Index q) {
    Mat m = test::ones(q, q);
    for (Index i = 0; i < q; ++i) m(i, i) = 0;
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("exactlin");

TEST_CASE("rational construction stays canonical") {
    CHECK(to_string(rat(2, 4)) == "1/2");
    CHECK(to_string(rat(-2, -4)) == "1/2");
    CHECK(to_string(rat(3, -6)) == "-1/2");
    CHECK(to_string(rat(0, 7)) == "0");
    CHECK(to_string(rat(5)) == "5");
    CHECK_THROWS_AS(rat(1, 0), DomainError);

    auto g = test::rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        Rational a = test::random_rational(g, 20, 9);
        Rational b = test::random_rational(g, 20, 9);
        Rational s = a + b;
        // (a/b)+(c/d) = (ad+bc)/bd, reduced
        Rational expect = rat(a.get_num() * b.get_den() + b.get_num() * a.get_den(),
                              a.get_den() * b.get_den());
        CHECK(s == expect);
        CHECK(s.get_den() > 0);
        Integer g0;
        mpz_gcd(g0.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
        CHECK(g0 == 1);
    }
}

TEST_CASE("rational parse and print round trip") {
    CHECK(parse_rational("2/3") == rat(2, 3));
    CHECK(parse_rational("-7") == rat(-7));
    CHECK(parse_rational("-4/6") == rat(-2, 3));
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("a/b"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);

    auto g = test::rng(12);
    for (int iter = 0; iter < 100; ++iter) {
        Rational x = test::random_rational(g, 50, 17);
        CHECK(parse_rational(to_string(x)) == x);
    }
}

TEST_CASE("mat_mul examples and shape error") {
    auto g = test::rng(13);
    Mat m = test::random_matrix(g, 2, 2);
    CHECK(same_matrix(mat_mul(identity(2), m), m));

    Mat d(2, 2);
    d << 1, 0, 0, -1;
    CHECK(same_matrix(mat_mul(d, d), identity(2)));

    Mat ones2 = test::ones(2, 2);
    Mat twos(2, 2);
    twos.setConstant(Rational(2));
    CHECK(same_matrix(mat_mul(ones2, ones2), twos));

    CHECK_THROWS_AS(mat_mul(test::random_matrix(g, 2, 3), test::random_matrix(g, 2, 3)), ShapeError);
}

TEST_CASE("commutator examples") {
    auto g = test::rng(14);
    Mat m = test::random_matrix(g, 3, 3);
    CHECK(is_zero(commutator(m, m)));

    // Raising/lowering/weight matrices on the 2-dimensional module.
    Mat e(2, 2), f(2, 2), h(2, 2);
    e << 0, 1, 0, 0;
    f << 0, 0, 1, 0;
    h << 1, 0, 0, -1;
    CHECK(same_matrix(commutator(e, f), h));

    // Tridiagonal/diagonal generator pair at omega = 1/3, dimension 2.
    Mat a(2, 2), b(2, 2), c(2, 2);
    a << rat(-1, 6), rat(2, 3), rat(1, 3), rat(1, 6);
    b << rat(1, 2), 0, 0, rat(-1, 2);
    c << 0, rat(-2, 3), rat(1, 3), 0;
    CHECK(same_matrix(commutator(a, b), c));

    CHECK_THROWS_AS(commutator(test::random_matrix(g, 2, 3), test::random_matrix(g, 2, 3)),
                    ShapeError);
    CHECK_THROWS_AS(commutator(test::random_matrix(g, 2, 2), test::random_matrix(g, 3, 3)),
                    ShapeError);
}

TEST_CASE("kernel_basis examples") {
    auto zero3 = kernel_basis(zero(3, 3));
    CHECK(zero3.size() == 3);
    for (Index f = 0; f < 3; ++f) {
        CHECK(zero3[static_cast<std::size_t>(f)] == Vec::Unit(3, f));
    }

    CHECK(kernel_basis(identity(3)).empty());

    // theta = q-1 = 2 is a simple eigenvalue of the complete graph on 3
    // letters; its eigenspace is spanned by the all-ones vector.
    Mat shifted = complete_graph(3) - Rational(2) * identity(3);
    auto ker = kernel_basis(shifted);
    REQUIRE(ker.size() == 1);
    Vec ones3(3);
    ones3 << 1, 1, 1;
    CHECK(ker[0] == ones3);
}

TEST_CASE("kernel and rank invariants on random matrices") {
    auto g = test::rng(15);
    for (int iter = 0; iter < 60; ++iter) {
        std::uniform_int_distribution<Index> size(1, 7);
        const Index rows = size(g), cols = size(g);
        Mat m = test::random_matrix(g, rows, cols, 2, 2);
        // bias toward rank deficiency: duplicate a column sometimes
        if (cols >= 2 && iter % 3 == 0) m.col(cols - 1) = m.col(0);
        auto ker = kernel_basis(m);
        CHECK(rank(m) + static_cast<Index>(ker.size()) == cols);
        for (const Vec& v : ker) {
            CHECK(is_zero(mat_mul(m, v)));
            // leading entry normalized to one
            for (Index i = 0; i < v.size(); ++i) {
                if (v(i) != 0) {
                    CHECK(v(i) == 1);
                    break;
                }
            }
        }
    }
}

TEST_CASE("solve_exact behaviour") {
    Mat a(3, 2);
    a << 1, 2, 0, 1, 1, 0;
    Mat x(2, 1);
    x << rat(3, 2), rat(-1, 3);
    Mat rhs = mat_mul(a, x);
    auto sol = solve_exact(a, rhs);
    REQUIRE(sol.has_value());
    CHECK(same_matrix(*sol, x));

    // rhs outside the column space
    Mat a1(3, 1);
    a1 << 1, 1, 1;
    Mat rhs1(3, 1);
    rhs1 << 1, 1, 2;
    CHECK(!solve_exact(a1, rhs1).has_value());

    Mat deficient(3, 2);
    deficient << 1, 1, 2, 2, 3, 3;
    CHECK_THROWS_AS(solve_exact(deficient, rhs), DomainError);

    // (J - I)^{-1} = J/2 - I on three letters
    Mat expect_inv = Rational(1, 2) * Mat(test::ones(3, 3)) - identity(3);
    CHECK(same_matrix(inverse(complete_graph(3)), expect_inv));
}

TEST_CASE("kron examples") {
    CHECK(same_matrix(kron(identity(2), identity(3)), identity(6)));

    // Two tensor positions over a 3-letter alphabet: the Kronecker-sum of
    // two complete-graph factors is the distance-1 matrix on pairs.
    Mat a1 = complete_graph(3);
    Mat lhs = kron(a1, identity(3)) + kron(identity(3), a1);
    Mat expect(9, 9);
    for (Index u = 0; u < 9; ++u) {
        for (Index v = 0; v < 9; ++v) {
            const int diffs = (u / 3 != v / 3) + (u % 3 != v % 3);
            expect(u, v) = (diffs == 1) ? 1 : 0;
        }
    }
    CHECK(same_matrix(lhs, expect));

    Mat e0 = Rational(1, 3) * Mat(test::ones(3, 3));
    CHECK(rank(kron(e0, e0)) == 1);
}

TEST_CASE("kron bilinearity and mixed product on random instances") {
    auto g = test::rng(16);
    for (int iter = 0; iter < 20; ++iter) {
        Mat a = test::random_matrix(g, 2, 3), b = test::random_matrix(g, 3, 2);
        Mat c = test::random_matrix(g, 3, 2), d = test::random_matrix(g, 2, 3);
        Rational s = test::random_rational(g);
        CHECK(same_matrix(kron(Mat(a + s * d), b), kron(a, b) + s * kron(d, b)));
        CHECK(same_matrix(kron(a, Mat(b + s * c)), kron(a, b) + s * kron(a, c)));
        // mixed product: (a (x) b)(c (x) d) = ac (x) bd
        CHECK(same_matrix(mat_mul(kron(a, b), kron(c, d)), kron(mat_mul(a, c), mat_mul(b, d))));
    }
}

TEST_CASE("kron_apply single factor and pair examples") {
    Mat a1 = complete_graph(3);
    KronSumOperator single({a1}, KronMode::Sum);
    Vec e0 = Vec::Unit(3, 0);
    CHECK(single.apply(e0) == Vec(a1.col(0)));

    KronSumOperator pair({a1, a1}, KronMode::Sum);
    Vec e00 = Vec::Unit(9, 0);
    Vec got = pair.apply(e00);
    // neighbors of (0,0): (0,1),(0,2),(1,0),(2,0)
    Vec expect = Vec::Zero(9);
    expect(1) = expect(2) = expect(3) = expect(6) = 1;
    CHECK(got == expect);

    KronSumOperator triple({a1, a1, a1}, KronMode::Sum);
    Vec ones27(27);
    ones27.setConstant(Rational(1));
    Vec sums = triple.apply(ones27);
    for (Index i = 0; i < 27; ++i) CHECK(sums(i) == 6);

    CHECK_THROWS_AS(pair.apply(ones27), ShapeError);
}

TEST_CASE("kron_apply agrees with materialized operators") {
    auto g = test::rng(17);
    for (int q : {3, 4}) {
        for (int d = 1; d <= 4; ++d) {
            std::vector<Mat> factors;
            for (int t = 0; t < d; ++t) factors.push_back(test::random_matrix(g, q, q, 2, 2));
            for (KronMode mode : {KronMode::Sum, KronMode::Product}) {
                KronSumOperator op(factors, mode);
                Mat full = op.materialize();
                const Index n = op.cols();
                for (Index basis = 0; basis < n; ++basis) {
                    Vec v = Vec::Unit(n, basis);
                    CHECK(op.apply(v) == Vec(full.col(basis)));
                }
            }
        }
    }
}

TEST_CASE("rectangular kron product application") {
    auto g = test::rng(18);
    std::vector<Mat> factors = {test::random_matrix(g, 2, 4), test::random_matrix(g, 3, 2)};
    KronSumOperator op(factors, KronMode::Product);
    Mat full = op.materialize();
    CHECK(full.rows() == 6);
    CHECK(full.cols() == 8);
    for (Index basis = 0; basis < 8; ++basis)
        CHECK(op.apply(Vec::Unit(8, basis)) == Vec(full.col(basis)));
    CHECK_THROWS_AS(KronSumOperator(factors, KronMode::Sum), ShapeError);
}

TEST_CASE("matrix text format") {
    Mat a1 = complete_graph(3);
    const std::string expect =
        "3 3\n"
        "0 1 1\n"
        "0 2 1\n"
        "1 0 1\n"
        "1 2 1\n"
        "2 0 1\n"
        "2 1 1\n";
    CHECK(write_matrix_text(a1) == expect);
    CHECK(same_matrix(read_matrix_text(expect), a1));

    Mat e0 = Rational(1, 3) * Mat(test::ones(2, 2));
    CHECK(write_matrix_text(e0) == "2 2\n0 0 1/3\n0 1 1/3\n1 0 1/3\n1 1 1/3\n");

    auto g = test::rng(19);
    for (int iter = 0; iter < 20; ++iter) {
        Mat m = test::random_matrix(g, 4, 5);
        CHECK(same_matrix(read_matrix_text(write_matrix_text(m)), m));
    }
    CHECK_THROWS_AS(read_matrix_text("not a header"), DomainError);
    CHECK_THROWS_AS(read_matrix_text("2 2\n5 0 1\n"), DomainError);
}

TEST_SUITE_END();
