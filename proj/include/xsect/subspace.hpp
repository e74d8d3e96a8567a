#ifndef XSECT_SUBSPACE_HPP
#define XSECT_SUBSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <xsect/error.hpp>
#include <xsect/matrix.hpp>
#include <xsect/random.hpp>

namespace xsect {

/// Order in which flattened (row-major) coordinates compete for pivots.
/// For 3x3 the positions (1,1),(1,2),(1,3),(2,3),(3,3) come first so that
/// the canonical cross-section bases are exactly the reduced echelon basis.
inline std::vector<std::size_t> pivot_priority(std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> order;
    order.reserve(rows * cols);
    if (rows == 3 && cols == 3) {
        order = {0, 1, 2, 5, 8, 3, 4, 6, 7};
        return order;
    }
    for (std::size_t k = 0; k < rows * cols; ++k)
        order.push_back(k);
    return order;
}

/// A linear subspace of rows x cols matrices, stored as its reduced echelon
/// basis under pivot_priority(). Equal subspaces have identical bases.
class Subspace {
public:
    static Subspace zero(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0)
            throw ShapeError("subspace ambient dimensions must be positive");
        return Subspace(rows, cols);
    }

    /// Span of a nonempty family. Use zero() or the shaped overload for
    /// possibly empty families.
    static Subspace span(std::span<const Mat> mats) {
        if (mats.empty())
            throw ShapeError("span of an empty family needs an explicit shape");
        return span(mats.front().rows(), mats.front().cols(), mats);
    }

    static Subspace span(std::size_t rows, std::size_t cols, std::span<const Mat> mats) {
        Subspace s = zero(rows, cols);
        const auto order = pivot_priority(rows, cols);
        std::vector<std::vector<Scalar>> vecs;
        vecs.reserve(mats.size());
        for (const auto& m : mats) {
            if (m.rows() != rows || m.cols() != cols)
                throw ShapeError("span members must share the declared shape");
            std::vector<Scalar> v(order.size());
            for (std::size_t k = 0; k < order.size(); ++k)
                v[k] = m.entries()[order[k]];
            vecs.push_back(std::move(v));
        }
        s.reduce(std::move(vecs), order);
        return s;
    }

    static Subspace span(std::initializer_list<Mat> mats) {
        return span(std::span<const Mat>(mats.begin(), mats.size()));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Mat>& basis() const noexcept { return basis_; }

    /// Flat row-major index of each basis element's pivot.
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Mat& m) const {
        if (m.rows() != rows_ || m.cols() != cols_)
            throw ShapeError("membership test with mismatched shape");
        std::vector<Scalar> v = m.entries();
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const Scalar f = v[pivots_[b]];
            if (f.is_zero())
                continue;
            const auto& e = basis_[b].entries();
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!e[k].is_zero())
                    v[k] -= f * e[k];
        }
        for (const auto& s : v)
            if (!s.is_zero())
                return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (const auto& b : other.basis_)
            if (!contains(b))
                return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeError("subspace comparison with mismatched ambient shape");
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    // Gauss-Jordan on coordinate vectors laid out in priority order.
    void reduce(std::vector<std::vector<Scalar>> vecs, const std::vector<std::size_t>& order) {
        const std::size_t width = order.size();
        std::size_t r = 0;
        for (std::size_t c = 0; c < width && r < vecs.size(); ++c) {
            std::size_t p = r;
            while (p < vecs.size() && vecs[p][c].is_zero())
                ++p;
            if (p == vecs.size())
                continue;
            std::swap(vecs[p], vecs[r]);
            const Scalar inv = vecs[r][c].inverse();
            for (std::size_t k = c; k < width; ++k)
                vecs[r][k] *= inv;
            for (std::size_t i = 0; i < vecs.size(); ++i) {
                if (i == r || vecs[i][c].is_zero())
                    continue;
                const Scalar f = vecs[i][c];
                for (std::size_t k = c; k < width; ++k)
                    if (!vecs[r][k].is_zero())
                        vecs[i][k] -= f * vecs[r][k];
            }
            pivots_.push_back(order[c]);
            ++r;
        }
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Scalar> flat(width);
            for (std::size_t k = 0; k < width; ++k)
                flat[order[k]] = vecs[i][k];
            basis_.emplace_back(rows_, cols_, std::move(flat));
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Mat> basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace span_reduce(std::span<const Mat> mats) { return Subspace::span(mats); }

inline bool contains(const Subspace& s, const Mat& m) { return s.contains(m); }

inline bool equals(const Subspace& a, const Subspace& b) { return a == b; }

/// Image of a 3x3 subspace under deletion of row k and column l.
inline Subspace image_delete_rc(const Subspace& s, std::size_t k, std::size_t l) {
    if (s.rows() != 3 || s.cols() != 3)
        throw ShapeError("image_delete_rc expects a 3x3 ambient space");
    std::vector<Mat> images;
    images.reserve(s.dim());
    for (const auto& b : s.basis())
        images.push_back(delete_rc(b, k, l));
    return Subspace::span(2, 2, images);
}

/// Matching of adjacent cross-sections: the (1,1)-deleted image of the left
/// section equals the (3,3)-deleted image of the right one.
inline bool adjacency_equal(const Subspace& left, const Subspace& right) {
    return image_delete_rc(left, 1, 1) == image_delete_rc(right, 3, 3);
}

// --- transitivity -------------------------------------------------------------

/// Result of the witness search. A witness x is a nonzero vector with
/// rank [B_1 x ... B_d x] < n; without one the subspace is only
/// "probably transitive" after `samples` probes.
struct TransitivityVerdict {
    std::optional<std::vector<Scalar>> witness;
    std::size_t samples = 0;

    bool transitive() const noexcept { return !witness.has_value(); }
};

/// The n x d matrix whose columns are B_k x over the basis.
inline Mat orbit_matrix(const Subspace& s, const std::vector<Scalar>& x) {
    if (x.size() != s.cols())
        throw ShapeError("vector length does not match subspace ambient columns");
    Mat col(s.cols(), 1, x);
    Mat out(s.rows(), std::max<std::size_t>(s.dim(), 1));
    for (std::size_t k = 0; k < s.dim(); ++k) {
        Mat bx = s.basis()[k] * col;
        for (std::size_t i = 0; i < s.rows(); ++i)
            out(i, k) = bx(i, 0);
    }
    return out;
}

inline bool is_witness(const Subspace& s, const std::vector<Scalar>& x) {
    bool nonzero = false;
    for (const auto& v : x)
        nonzero = nonzero || !v.is_zero();
    return nonzero && rank(orbit_matrix(s, x)) < s.rows();
}

/// Semi-decision of transitivity on a square ambient space. Probes the unit
/// vectors, all e_i +- e_j, then `trials` random height-bounded rational
/// vectors drawn from `seed`.
inline TransitivityVerdict transitivity(const Subspace& s, std::size_t trials, std::uint64_t seed) {
    if (s.rows() != s.cols())
        throw ShapeError("transitivity needs a square ambient space");
    const std::size_t n = s.rows();
    TransitivityVerdict verdict;
    auto probe = [&](std::vector<Scalar> x) {
        ++verdict.samples;
        if (is_witness(s, x)) {
            verdict.witness = std::move(x);
            return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> x(n);
        x[i] = 1;
        if (probe(std::move(x)))
            return verdict;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (long sign : {1L, -1L}) {
                std::vector<Scalar> x(n);
                x[i] = 1;
                x[j] = sign;
                if (probe(std::move(x)))
                    return verdict;
            }
    Sampler rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Scalar> x(n);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& v : x) {
                v = rng.scalar();
                nonzero = nonzero || !v.is_zero();
            }
        }
        if (probe(std::move(x)))
            return verdict;
    }
    return verdict;
}

// --- text format ----------------------------------------------------------------

/// `dim <d>` followed by d matrices, each preceded by one blank line.
inline std::string format_subspace(const Subspace& s) {
    std::string out = "dim " + std::to_string(s.dim()) + "\n";
    for (const auto& b : s.basis())
        out += "\n" + format_matrix(b);
    return out;
}

/// Reads the subspace file format. Matrices are separated by blank lines; a
/// `dim 0` file denotes the zero subspace of 3x3 matrices.
inline Subspace read_subspace(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t declared = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream hs(line);
        std::string word;
        long d = -1;
        std::string extra;
        if (!(hs >> word >> d) || word != "dim" || d < 0 || (hs >> extra))
            throw ParseError("expected header 'dim <d>'", 0, lineno);
        declared = static_cast<std::size_t>(d);
        have_header = true;
        break;
    }
    if (!have_header)
        throw ParseError("missing 'dim <d>' header", 0, lineno);

    std::vector<Mat> mats;
    std::vector<std::string> block;
    std::size_t block_start = 0;
    auto flush = [&] {
        if (!block.empty()) {
            mats.push_back(parse_matrix(block, block_start));
            block.clear();
        }
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
            continue;
        }
        if (block.empty())
            block_start = lineno;
        block.push_back(line);
    }
    flush();
    if (mats.size() != declared)
        throw ParseError("header declares " + std::to_string(declared) + " matrices, found " +
                             std::to_string(mats.size()),
                         0, lineno);
    if (mats.empty())
        return Subspace::zero(3, 3);
    for (const auto& m : mats)
        if (!m.same_shape(mats.front()))
            throw ParseError("basis matrices have different shapes", 0, lineno);
    Subspace s = Subspace::span(mats);
    if (s.dim() != declared)
        throw ParseError("basis matrices are linearly dependent", 0, lineno);
    return s;
}

} // namespace xsect

#endif // XSECT_SUBSPACE_HPP
