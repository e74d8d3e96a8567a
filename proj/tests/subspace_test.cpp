#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include <xsect/random.hpp>
#include <xsect/shift.hpp>
#include <xsect/subspace.hpp>

#include "oracle.hpp"

namespace {

using namespace xsect;

Mat E(std::size_t i, std::size_t j) { return unit(3, 3, i, j); }

std::vector<Mat> all_units() {
    std::vector<Mat> out;
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j)
            out.push_back(E(i, j));
    return out;
}

TEST(SpanReduce, DependentPair) {
    const Subspace s = Subspace::span({E(1, 1), Scalar(2) * E(1, 1)});
    EXPECT_EQ(s.dim(), 1u);
    EXPECT_EQ(s.basis().front(), E(1, 1));
}

TEST(SpanReduce, StrongGeneratorsHaveDimensionFive) {
    const Delta d(1, Scalar::ratio(1, 2), Scalar::ratio(1, 3));
    const auto gens = shift_basis(d, StrongParams{1, 1, 1});
    const std::vector<Mat> family(gens.begin(), gens.end());
    ASSERT_EQ(oracle::family_rank(family), 5u); // independent oracle
    EXPECT_EQ(Subspace::span(family).dim(), 5u);
}

TEST(SpanReduce, EmptyFamilyNeedsShape) {
    EXPECT_EQ(Subspace::zero(3, 3).dim(), 0u);
    EXPECT_EQ(Subspace::span(3, 3, std::vector<Mat>{}).dim(), 0u);
    EXPECT_THROW(Subspace::span(std::vector<Mat>{}), ShapeError);
    EXPECT_THROW(Subspace::span(3, 3, std::vector<Mat>{Mat(2, 2)}), ShapeError);
}

TEST(SpanReduce, PivotPriorityForThreeByThree) {
    const Subspace s = Subspace::span(all_units());
    EXPECT_EQ(s.pivots(), (std::vector<std::size_t>{0, 1, 2, 5, 8, 3, 4, 6, 7}));
}

TEST(Contains, Examples) {
    const Subspace s = Subspace::span({E(1, 1), E(1, 2)});
    EXPECT_TRUE(s.contains(Mat{{3, -4, 0}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_FALSE(s.contains(E(2, 1)));
    EXPECT_TRUE(s.contains(zero_mat(3, 3)));
    EXPECT_TRUE(Subspace::zero(3, 3).contains(zero_mat(3, 3)));
    EXPECT_THROW(s.contains(Mat(2, 2)), ShapeError);
}

TEST(Equals, Examples) {
    EXPECT_EQ(Subspace::span({E(1, 1), E(1, 2)}), Subspace::span({E(1, 1) + E(1, 2), E(1, 1) - E(1, 2)}));
    EXPECT_NE(Subspace::span({E(1, 1)}), Subspace::span({E(1, 2)}));
    const Subspace s = Subspace::span({E(2, 1) + E(3, 3), E(1, 2)});
    EXPECT_EQ(s, s);
    EXPECT_THROW((void)(s == Subspace::zero(2, 2)), ShapeError);
}

TEST(ImageDeleteRc, PrintedQ1CornerVanishes) {
    const Subspace s = Subspace::span({Mat{{0, 0, 1}, {0, 0, 2}, {0, 0, 3}}});
    const Subspace img = image_delete_rc(s, 3, 3);
    EXPECT_EQ(img.dim(), 0u);
    EXPECT_EQ(img.rows(), 2u);
    EXPECT_THROW(image_delete_rc(s, 4, 1), DomainError);
}

// Random families of rank <= 4 in M_3, built as combinations of a few seeds.
std::vector<Mat> random_family(Sampler& rng) {
    const std::size_t seeds = 1 + static_cast<std::size_t>(rng.integer(0, 3));
    std::vector<Mat> base;
    for (std::size_t k = 0; k < seeds; ++k)
        base.push_back(rng.matrix(3, 3));
    std::vector<Mat> out;
    const std::size_t n = 1 + static_cast<std::size_t>(rng.integer(0, 4));
    for (std::size_t k = 0; k < n; ++k) {
        Mat m(3, 3);
        for (const auto& b : base)
            m += rng.scalar() * b;
        out.push_back(m);
    }
    return out;
}

TEST(SubspaceProperties, InvariantUnderInvertibleRecombination) {
    Sampler rng(21, 6);
    for (int t = 0; t < 40; ++t) {
        const auto fam = random_family(rng);
        // Upper unitriangular recombination, then a reversal.
        std::vector<Mat> mixed;
        for (std::size_t i = 0; i < fam.size(); ++i) {
            Mat m = fam[i];
            for (std::size_t j = i + 1; j < fam.size(); ++j)
                m += rng.scalar() * fam[j];
            mixed.insert(mixed.begin(), m);
        }
        const Subspace a = Subspace::span(fam);
        const Subspace b = Subspace::span(mixed);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.dim(), oracle::family_rank(fam));
    }
}

TEST(SubspaceProperties, EqualityIsMutualContainment) {
    Sampler rng(22, 4);
    for (int t = 0; t < 40; ++t) {
        const Subspace a = Subspace::span(random_family(rng));
        const Subspace b = t % 2 ? a : Subspace::span(random_family(rng));
        EXPECT_EQ(a == b, a.contains(b) && b.contains(a));
    }
}

TEST(SubspaceProperties, ImageCommutesWithCanonicalization) {
    Sampler rng(23, 4);
    for (int t = 0; t < 30; ++t) {
        const auto fam = random_family(rng);
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t l = 1; l <= 3; ++l) {
                std::vector<Mat> images;
                for (const auto& m : fam)
                    images.push_back(delete_rc(m, k, l));
                EXPECT_EQ(image_delete_rc(Subspace::span(fam), k, l), Subspace::span(2, 2, images));
            }
    }
}

TEST(SubspaceText, RoundTrip) {
    Sampler rng(24, 4);
    const Subspace s = Subspace::span(random_family(rng));
    std::istringstream in(format_subspace(s));
    EXPECT_EQ(read_subspace(in), s);

    std::istringstream wrong_count("dim 2\n\n(1,0) (0,0)\n(0,0) (0,0)\n");
    EXPECT_THROW(read_subspace(wrong_count), ParseError);
    std::istringstream dependent("dim 2\n\n(1,0) (0,0)\n(0,0) (0,0)\n\n(2,0) (0,0)\n(0,0) (0,0)\n");
    EXPECT_THROW(read_subspace(dependent), ParseError);
    std::istringstream no_header("(1,0)\n");
    EXPECT_THROW(read_subspace(no_header), ParseError);
}

TEST(Transitivity, RowSubspaceHasWitness) {
    const Subspace s = Subspace::span({E(1, 1), E(1, 2), E(1, 3)});
    const auto v = transitivity(s, 100, 1);
    ASSERT_FALSE(v.transitive());
    EXPECT_EQ(*v.witness, (std::vector<Scalar>{1, 0, 0}));
    EXPECT_LT(oracle::minor_rank(orbit_matrix(s, *v.witness)), 3u);
}

TEST(Transitivity, FullAlgebraIsTransitive) {
    const auto v = transitivity(Subspace::span(all_units()), 200, 5);
    EXPECT_TRUE(v.transitive());
    EXPECT_EQ(v.samples, 3u + 6u + 200u);
}

TEST(Transitivity, WitnessesAlwaysVerify) {
    Sampler rng(25, 3);
    for (int t = 0; t < 30; ++t) {
        const Subspace s = Subspace::span(random_family(rng));
        const auto v = transitivity(s, 20, static_cast<std::uint64_t>(t));
        if (!v.transitive()) {
            EXPECT_LT(oracle::minor_rank(orbit_matrix(s, *v.witness)), 3u);
        }
    }
}

TEST(Transitivity, DeterministicForFixedSeed) {
    Sampler rng(26, 3);
    const Subspace s = Subspace::span(random_family(rng));
    const auto a = transitivity(s, 50, 99);
    const auto b = transitivity(s, 50, 99);
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_EQ(a.witness, b.witness);
}

} // namespace
