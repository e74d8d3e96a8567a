#ifndef XSECT_MATRIX_HPP
#define XSECT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <xsect/error.hpp>
#include <xsect/scalar.hpp>

namespace xsect {

/// Dense row-major matrix of exact scalars. Element access through
/// operator() is 0-based; delete_rc, compress and window take
/// 1-based indices.
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw ShapeError("matrix dimensions must be positive");
    }

    Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw ShapeError("matrix dimensions must be positive");
        if (data_.size() != rows * cols)
            throw ShapeError("entry count does not match matrix shape");
    }

    Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        if (rows_ == 0 || cols_ == 0)
            throw ShapeError("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw ShapeError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool same_shape(const Mat& o) const noexcept { return rows_ == o.rows_ && cols_ == o.cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Scalar>& entries() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero())
                return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Mat& operator+=(const Mat& o) {
        require_same_shape(o, "matrix addition");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        require_same_shape(o, "matrix subtraction");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }
    Mat& operator*=(const Scalar& s) {
        for (auto& e : data_)
            e *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }

    friend bool operator==(const Mat& a, const Mat& b) { return a.same_shape(b) && a.data_ == b.data_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    void require_same_shape(const Mat& o, const char* what) const {
        if (!same_shape(o))
            throw ShapeError(std::string("shape mismatch in ") + what);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// --- special matrices -------------------------------------------------------

inline Mat zero_mat(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

inline Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

inline Mat diag(const std::vector<Scalar>& values) {
    if (values.empty())
        throw ShapeError("diag needs at least one value");
    Mat m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i, i) = values[i];
    return m;
}

/// Lower Jordan cell: ones at (2,1) and (3,2).
inline Mat jordan3() {
    Mat m(3, 3);
    m(1, 0) = 1;
    m(2, 1) = 1;
    return m;
}

/// Matrix unit with a single 1 at 1-based position (i, j).
inline Mat unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Mat m(rows, cols);
    m(i - 1, j - 1) = 1;
    return m;
}

// --- kernels ----------------------------------------------------------------

/// Schur (Hadamard) product.
inline Mat schur(const Mat& a, const Mat& b) {
    if (!a.same_shape(b))
        throw ShapeError("schur product needs equal shapes");
    Mat out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) * b(i, j);
    return out;
}

inline Mat product(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matrix product needs a.cols == b.rows");
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

inline Mat operator*(const Mat& a, const Mat& b) { return product(a, b); }

/// Deletes row k and column l (1-based) of a 3x3 matrix.
inline Mat delete_rc(const Mat& a, std::size_t k, std::size_t l) {
    if (a.rows() != 3 || a.cols() != 3)
        throw ShapeError("delete_rc expects a 3x3 matrix");
    if (k < 1 || k > 3 || l < 1 || l > 3)
        throw DomainError("delete_rc indices must lie in 1..3");
    Mat out(2, 2);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == k - 1)
            continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == l - 1)
                continue;
            out(oi, oj++) = a(i, j);
        }
        ++oi;
    }
    return out;
}

namespace detail {

// Fraction-free (Bareiss) forward elimination in place. Pivot is the first
// nonzero entry, scanning rows from the current one downward, column by
// column. Returns the number of pivots; `swaps` counts row exchanges and
// `last_pivot` receives the final leading minor (the determinant up to sign
// when the matrix is square and nonsingular).
inline std::size_t bareiss(Mat& m, std::size_t& swaps, Scalar& last_pivot) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Scalar prev = 1;
    std::size_t r = 0;
    swaps = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(p, j), m(r, j));
            ++swaps;
        }
        const Scalar pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar factor = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * pivot - factor * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    last_pivot = prev;
    return r;
}

} // namespace detail

inline std::size_t rank(Mat a) {
    std::size_t swaps = 0;
    Scalar last;
    return detail::bareiss(a, swaps, last);
}

inline Scalar det(Mat a) {
    if (!a.is_square())
        throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 1)
        return a(0, 0);
    if (n == 2)
        return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (n == 3)
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    std::size_t swaps = 0;
    Scalar last;
    if (detail::bareiss(a, swaps, last) < n)
        return 0;
    return swaps % 2 ? -last : last;
}

// --- text format ------------------------------------------------------------

/// One row per line, entries separated by a single space.
inline std::string format_matrix(const Mat& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ' ';
            out += format_scalar(m(i, j));
        }
        out += '\n';
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << format_matrix(m); }

/// Parses whitespace-separated scalar rows. Blank lines are not allowed
/// inside a matrix; `first_line` offsets reported line numbers.
inline Mat parse_matrix(const std::vector<std::string>& lines, std::size_t first_line = 1) {
    std::vector<Scalar> entries;
    std::size_t cols = 0;
    for (std::size_t n = 0; n < lines.size(); ++n) {
        std::istringstream row(lines[n]);
        std::string token;
        std::size_t count = 0;
        while (row >> token) {
            try {
                entries.push_back(parse_scalar(token));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), e.position(), first_line + n);
            }
            ++count;
        }
        if (count == 0)
            throw ParseError("empty matrix row", 0, first_line + n);
        if (n == 0)
            cols = count;
        else if (count != cols)
            throw ParseError("row has " + std::to_string(count) + " entries, expected " + std::to_string(cols), 0,
                             first_line + n);
    }
    if (lines.empty())
        throw ParseError("empty matrix", 0, first_line);
    return Mat(lines.size(), cols, std::move(entries));
}

inline Mat read_matrix(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    std::size_t first = 1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (!lines.empty())
                break;
            ++first;
            continue;
        }
        lines.push_back(line);
    }
    return parse_matrix(lines, first);
}

} // namespace xsect

#endif // XSECT_MATRIX_HPP
