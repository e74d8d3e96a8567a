#ifndef XSECT_RANDOM_HPP
#define XSECT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <xsect/matrix.hpp>
#include <xsect/scalar.hpp>

namespace xsect {

/// Seeded generator of height-bounded Gaussian rationals. Draws use only the
/// raw mt19937_64 stream (no std distributions), so a given seed yields the
/// same values on every standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, long height = 9) : engine_(seed), height_(height) {}

    long height() const noexcept { return height_; }

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    bool coin(unsigned percent) { return integer(0, 99) < static_cast<long>(percent); }

    /// n/d with |n| <= height and 1 <= d <= height.
    Rational rational() {
        Rational r(integer(-height_, height_), integer(1, height_));
        r.canonicalize();
        return r;
    }

    /// Real with probability 1/2, otherwise a genuinely complex value.
    Scalar scalar() {
        if (coin(50))
            return Scalar(rational());
        return Scalar(rational(), rational());
    }

    Scalar nonzero() {
        for (;;) {
            Scalar s = scalar();
            if (!s.is_zero())
                return s;
        }
    }

    /// `count` pairwise distinct nonzero scalars, all different from `avoid`.
    std::vector<Scalar> distinct_nonzero(std::size_t count, const std::vector<Scalar>& avoid = {}) {
        std::vector<Scalar> out;
        while (out.size() < count) {
            Scalar s = nonzero();
            bool clash = false;
            for (const auto& t : out)
                clash = clash || t == s;
            for (const auto& t : avoid)
                clash = clash || t == s;
            if (!clash)
                out.push_back(std::move(s));
        }
        return out;
    }

    Mat matrix(std::size_t rows, std::size_t cols) {
        Mat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = scalar();
        return m;
    }

    Mat nonzero_matrix(std::size_t rows, std::size_t cols) {
        Mat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = nonzero();
        return m;
    }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    long height_;
};

} // namespace xsect

#endif // XSECT_RANDOM_HPP
