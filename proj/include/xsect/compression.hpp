#ifndef XSECT_COMPRESSION_HPP
#define XSECT_COMPRESSION_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <xsect/error.hpp>
#include <xsect/matrix.hpp>

namespace xsect {

// An operator on the basis-indexed Hilbert space is modelled by its N x N
// truncation; compressing to the span of {e_i : i in idx} is then principal
// submatrix selection. Indices are 1-based like e_1, e_2, ...

using IndexSet = std::vector<std::size_t>;

inline void check_index_set(const IndexSet& idx, std::size_t n) {
    if (idx.empty())
        throw DomainError("index set is empty");
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 1 || idx[k] > n)
            throw DomainError("index " + std::to_string(idx[k]) + " outside 1.." + std::to_string(n));
        if (k > 0 && idx[k] <= idx[k - 1])
            throw DomainError("index set must be strictly increasing");
    }
}

/// Principal submatrix of x on idx.
inline Mat compress(const Mat& x, const IndexSet& idx) {
    if (!x.is_square())
        throw ShapeError("compression needs a square truncation");
    check_index_set(idx, x.rows());
    Mat out(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            out(i, j) = x(idx[i] - 1, idx[j] - 1);
    return out;
}

/// A window of `width` consecutive basis vectors starting at e_start.
struct Window {
    std::size_t start;
    std::size_t width;

    IndexSet indices() const {
        IndexSet idx(width);
        for (std::size_t k = 0; k < width; ++k)
            idx[k] = start + k;
        return idx;
    }
};

inline Mat window(const Mat& x, Window w) {
    if (w.start < 1)
        throw DomainError("window start must be >= 1");
    if (w.start + w.width - 1 > x.rows())
        throw DomainError("window [" + std::to_string(w.start) + ", " + std::to_string(w.start + w.width - 1) +
                          "] exceeds truncation size " + std::to_string(x.rows()));
    return compress(x, w.indices());
}

/// Matrix of the compression to span{e_r, e_{r+1}, e_{r+2}}.
inline Mat window3(const Mat& x, std::size_t r) { return window(x, {r, 3}); }

/// Matrix of the compression to span{e_r, e_{r+1}}.
inline Mat window2(const Mat& x, std::size_t r) { return window(x, {r, 2}); }

/// Deleting the first row/column of the window at r, the 2-window at r+1,
/// and deleting the last row/column of the window at r+1 all agree.
inline bool check_partial_identity(const Mat& x, std::size_t r) {
    if (r < 1 || r + 3 > x.rows())
        throw DomainError("partial identity needs 1 <= r and r + 3 <= N");
    const Mat left = delete_rc(window3(x, r), 1, 1);
    const Mat middle = window2(x, r + 1);
    const Mat right = delete_rc(window3(x, r + 1), 3, 3);
    return left == middle && middle == right;
}

/// Compressing to E and then to F (as positions inside E) equals compressing
/// straight to F.
inline bool check_composition_identity(const Mat& x, const IndexSet& outer, const IndexSet& inner) {
    check_index_set(outer, x.rows());
    check_index_set(inner, x.rows());
    IndexSet local;
    local.reserve(inner.size());
    for (std::size_t f : inner) {
        auto it = std::find(outer.begin(), outer.end(), f);
        if (it == outer.end())
            throw DomainError("inner index set is not contained in the outer one");
        local.push_back(static_cast<std::size_t>(it - outer.begin()) + 1);
    }
    return compress(compress(x, outer), local) == compress(x, inner);
}

} // namespace xsect

#endif // XSECT_COMPRESSION_HPP
