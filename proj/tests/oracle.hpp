#ifndef XSECT_TESTS_ORACLE_HPP
#define XSECT_TESTS_ORACLE_HPP

// Reference computations used only by the tests. They deliberately avoid
// the library's elimination kernels.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <vector>

#include <xsect/matrix.hpp>

namespace oracle {

using xsect::Mat;
using xsect::Scalar;

/// Leibniz expansion over all permutations.
inline Scalar leibniz_det(const Mat& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        Scalar term = 1;
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
            term *= a(i, perm[i]);
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Rank as the largest k with a nonzero k x k minor (exhaustive).
inline std::size_t minor_rank(const Mat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t k = std::min(m, n); k > 0; --k) {
        std::vector<bool> rsel(m, false), csel(n, false);
        std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
            do {
                Mat sub(k, k);
                std::size_t si = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    if (!rsel[i])
                        continue;
                    std::size_t sj = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (csel[j])
                            sub(si, sj++) = a(i, j);
                    ++si;
                }
                if (!leibniz_det(sub).is_zero())
                    return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

/// Rank by plain Gaussian elimination with division, run on the columns
/// (i.e. on the transpose) so that it shares no pivot logic with the library.
/// minor_rank is the reference for small shapes; this one scales.
inline std::size_t column_rank(const Mat& a) {
    std::vector<std::vector<Scalar>> cols(a.cols(), std::vector<Scalar>(a.rows()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            cols[j][i] = a(i, j);
    std::size_t rank = 0;
    for (std::size_t i = a.rows(); i-- > 0 && rank < cols.size();) {
        std::size_t p = rank;
        while (p < cols.size() && cols[p][i].is_zero())
            ++p;
        if (p == cols.size())
            continue;
        std::swap(cols[p], cols[rank]);
        for (std::size_t j = rank + 1; j < cols.size(); ++j) {
            if (cols[j][i].is_zero())
                continue;
            const Scalar f = cols[j][i] / cols[rank][i];
            for (std::size_t k = 0; k <= i; ++k)
                cols[j][k] -= f * cols[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Rank of a family of equally shaped matrices after flattening.
inline std::size_t family_rank(const std::vector<Mat>& mats) {
    Mat stacked(mats.size(), mats.front().rows() * mats.front().cols());
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (std::size_t e = 0; e < mats[k].entries().size(); ++e)
            stacked(k, e) = mats[k].entries()[e];
    return column_rank(stacked);
}

/// Coefficient of the monomial prod_{k in S} x_k (other coordinates set to
/// zero) of a multilinear-in-S polynomial, by inclusion-exclusion over the
/// {0,1} cube on S.
template <class F>
Scalar cube_coefficient(F&& f, const std::vector<std::size_t>& vars) {
    Scalar total;
    const std::size_t n = vars.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::array<Scalar, 5> at{};
        std::size_t ones = 0;
        for (std::size_t b = 0; b < n; ++b)
            if (mask >> b & 1) {
                at[vars[b]] = 1;
                ++ones;
            }
        const Scalar v = f(at);
        total += (n - ones) % 2 ? -v : v;
    }
    return total;
}

} // namespace oracle

#endif // XSECT_TESTS_ORACLE_HPP
