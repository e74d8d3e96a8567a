#include <gtest/gtest.h>

#include <sstream>

#include <xsect/matrix.hpp>
#include <xsect/random.hpp>

#include "oracle.hpp"

namespace {

using namespace xsect;

const Mat kNine{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};

TEST(Schur, Examples) {
    EXPECT_EQ(schur(Mat{{1, 2}, {3, 4}}, Mat{{5, 6}, {7, 8}}), (Mat{{5, 12}, {21, 32}}));
    EXPECT_EQ(schur(kNine, Mat{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), kNine);
    EXPECT_THROW(schur(Mat(2, 2), Mat(3, 3)), ShapeError);
}

TEST(DeleteRc, Examples) {
    EXPECT_EQ(delete_rc(kNine, 1, 1), (Mat{{5, 6}, {8, 9}}));
    EXPECT_EQ(delete_rc(kNine, 3, 3), (Mat{{1, 2}, {4, 5}}));
    EXPECT_EQ(delete_rc(kNine, 2, 1), (Mat{{2, 3}, {8, 9}}));
    EXPECT_THROW(delete_rc(kNine, 0, 1), DomainError);
    EXPECT_THROW(delete_rc(kNine, 1, 4), DomainError);
    EXPECT_THROW(delete_rc(Mat(2, 2), 1, 1), ShapeError);
}

TEST(Det, Examples) {
    EXPECT_EQ(det(jordan3()), Scalar(0));
    EXPECT_EQ(det(Mat{{2, 3}, {5, 7}}), Scalar(-1));
    EXPECT_EQ(det(identity(3)), Scalar(1));
    EXPECT_THROW(det(Mat(2, 3)), ShapeError);
}

TEST(Det, MatchesLeibnizAtSizesUpToSix) {
    Sampler rng(11, 5);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int t = 0; t < 6; ++t) {
            Mat a = rng.matrix(n, n);
            if (t % 3 == 0 && n > 1) // force a dependent row now and then
                for (std::size_t j = 0; j < n; ++j)
                    a(n - 1, j) = a(0, j) * Scalar(2, 1);
            EXPECT_EQ(det(a), oracle::leibniz_det(a)) << "n=" << n;
        }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(jordan3()), 2u);
    EXPECT_EQ(rank(Mat{{2, 3, 4}, {3, 4, 5}, {4, 5, 6}}), 2u);
    EXPECT_EQ(rank(zero_mat(3, 3)), 0u);
}

TEST(Rank, MatchesMinorOracle) {
    Sampler rng(12, 3);
    for (int t = 0; t < 60; ++t) {
        const std::size_t m = 1 + static_cast<std::size_t>(rng.integer(0, 3));
        const std::size_t n = 1 + static_cast<std::size_t>(rng.integer(0, 4));
        Mat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = rng.coin(40) ? Scalar() : rng.scalar();
        EXPECT_EQ(rank(a), oracle::minor_rank(a));
        EXPECT_EQ(oracle::column_rank(a), oracle::minor_rank(a));
    }
}

TEST(Rank, TransposeInvariantAndDetCriterion) {
    Sampler rng(13, 4);
    for (int t = 0; t < 80; ++t) {
        Mat a = rng.matrix(3, 4);
        if (t % 2)
            for (std::size_t j = 0; j < 4; ++j)
                a(2, j) = a(0, j) - a(1, j);
        EXPECT_EQ(rank(a), rank(a.transpose()));

        Mat s = rng.matrix(3, 3);
        if (t % 3 == 0)
            for (std::size_t i = 0; i < 3; ++i)
                s(i, 2) = s(i, 0) * Scalar(0, 1);
        EXPECT_EQ(!det(s).is_zero(), rank(s) == 3);
    }
}

TEST(Product, Examples) {
    Mat expected(3, 3);
    expected(2, 0) = 1;
    EXPECT_EQ(jordan3() * jordan3(), expected);
    const Mat d = diag({1, Scalar::ratio(1, 2), Scalar::ratio(1, 3)});
    EXPECT_EQ(d * identity(3), d);
    EXPECT_THROW(product(Mat(3, 1), diag({1, 2, 3})), ShapeError);
}

TEST(Special, Shapes) {
    EXPECT_EQ(jordan3(), (Mat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    EXPECT_EQ(identity(2), (Mat{{1, 0}, {0, 1}}));
    EXPECT_EQ(diag({1, Scalar::ratio(1, 2), Scalar::ratio(1, 3)})(1, 1), Scalar::ratio(1, 2));
    EXPECT_THROW(diag({}), ShapeError);
    EXPECT_THROW(Mat(0, 3), ShapeError);
}

TEST(DeleteRc, CommutesWithTranspose) {
    Sampler rng(14);
    for (int t = 0; t < 20; ++t) {
        const Mat a = rng.matrix(3, 3);
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t l = 1; l <= 3; ++l)
                EXPECT_EQ(delete_rc(a, k, l).transpose(), delete_rc(a.transpose(), l, k));
    }
}

TEST(Schur, CommutativeAndAssociative) {
    Sampler rng(15);
    for (int t = 0; t < 30; ++t) {
        const Mat a = rng.matrix(3, 3), b = rng.matrix(3, 3), c = rng.matrix(3, 3);
        EXPECT_EQ(schur(a, b), schur(b, a));
        EXPECT_EQ(schur(schur(a, b), c), schur(a, schur(b, c)));
    }
}

TEST(MatrixText, RoundTripAndErrors) {
    Sampler rng(16, 100);
    const Mat a = rng.matrix(3, 4);
    std::istringstream in("\n" + format_matrix(a));
    EXPECT_EQ(read_matrix(in), a);

    std::istringstream ragged("(1,0) (2,0)\n(3,0)\n");
    try {
        read_matrix(ragged);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    std::istringstream bad("(1,0) (2,0)\n(3,0) (x,0)\n");
    EXPECT_THROW(read_matrix(bad), ParseError);
}

} // namespace
