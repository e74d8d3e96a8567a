#ifndef XSECT_GENERAL_HPP
#define XSECT_GENERAL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <xsect/certificate.hpp>
#include <xsect/error.hpp>
#include <xsect/matrix.hpp>
#include <xsect/subspace.hpp>

namespace xsect {

/// Point data (mu_0, {lambda_k}, {mu_k}) of the two diagonal operators,
/// truncated to K terms. Indices are 1-based.
class GeneralSequence {
public:
    GeneralSequence(Scalar mu0, std::vector<Scalar> lambda, std::vector<Scalar> mu)
        : mu0_(std::move(mu0)), lambda_(std::move(lambda)), mu_(std::move(mu)) {
        if (lambda_.size() != mu_.size())
            throw DomainError("lambda and mu must have the same length");
        if (lambda_.empty())
            throw DomainError("sequence must have at least one term");
        std::vector<const Scalar*> all;
        for (const auto& s : lambda_)
            all.push_back(&s);
        for (const auto& s : mu_)
            all.push_back(&s);
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (*all[i] == mu0_)
                throw DomainError("every lambda_k and mu_k must differ from mu0");
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (*all[i] == *all[j])
                    throw DomainError("lambda and mu points must be pairwise distinct");
        }
    }

    std::size_t size() const noexcept { return mu_.size(); }
    const Scalar& mu0() const noexcept { return mu0_; }
    const std::vector<Scalar>& lambda() const noexcept { return lambda_; }
    const std::vector<Scalar>& mu() const noexcept { return mu_; }

    Scalar b(std::size_t i) const { return mu_.at(i - 1) - mu0_; }
    Scalar a(std::size_t j) const { return lambda_.at(j - 1) - mu0_; }
    /// b_i - a_j, which equals mu_i - lambda_j.
    Scalar c_hat(std::size_t i, std::size_t j) const { return mu_.at(i - 1) - lambda_.at(j - 1); }

    friend bool operator==(const GeneralSequence&, const GeneralSequence&) = default;

private:
    Scalar mu0_;
    std::vector<Scalar> lambda_;
    std::vector<Scalar> mu_;
};

/// The 3x3 block C^r with entries c_hat(r+i-1, r+j-1).
inline Mat c_block(const GeneralSequence& seq, std::size_t r) {
    if (r < 1 || r + 2 > seq.size())
        throw DomainError("block C^" + std::to_string(r) + " needs r + 2 <= K = " + std::to_string(seq.size()));
    Mat c(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            c(i, j) = seq.c_hat(r + i, r + j);
    return c;
}

/// Cross-ratio eta11 eta22 / (eta12 eta21) of a 2x2 matrix without zero entries.
inline Scalar rho(const Mat& y) {
    if (y.rows() != 2 || y.cols() != 2)
        throw ShapeError("rho expects a 2x2 matrix");
    for (const auto& e : y.entries())
        if (e.is_zero())
            throw DomainError("rho is undefined for matrices with a zero entry");
    return y(0, 0) * y(1, 1) / (y(0, 1) * y(1, 0));
}

/// rho of the 2x2 matrix left after deleting row k and column l of c.
inline Scalar rho_minor(const Mat& c, std::size_t k, std::size_t l) { return rho(delete_rc(c, k, l)); }

struct GeneralParams {
    Scalar p1, p2, q2, q3;

    void validate() const {
        if (p1.is_zero() || p2.is_zero() || q2.is_zero() || q3.is_zero())
            throw DomainError("C-normal parameters p1, p2, q2, q3 must be nonzero");
    }

    friend bool operator==(const GeneralParams&, const GeneralParams&) = default;
};

/// Which Q1 to use. `printed` is the column (1, q2, q3)^T in column 3;
/// `elementary` is the matrix unit at (1,3), which is what the displayed
/// general-element formula corresponds to. Only `printed` gives Schur
/// singular subspaces.
enum class Q1Form { printed, elementary };

inline void require_nonzero_entries(const Mat& c) {
    if (c.rows() != 3 || c.cols() != 3)
        throw ShapeError("C must be 3x3");
    for (const auto& e : c.entries())
        if (e.is_zero())
            throw DomainError("C must have only nonzero entries");
}

/// (L1, L2, Q1, Q2, Q3) of a C-normal subspace.
inline std::array<Mat, 5> c_normal_basis(const Mat& c, const GeneralParams& p, Q1Form form = Q1Form::printed) {
    require_nonzero_entries(c);
    p.validate();
    const Scalar r11 = rho_minor(c, 1, 1), r12 = rho_minor(c, 1, 2);
    const Scalar r21 = rho_minor(c, 2, 1), r22 = rho_minor(c, 2, 2);
    const Scalar r31 = rho_minor(c, 3, 1), r32 = rho_minor(c, 3, 2);

    Mat l1{{1, 0, 0}, {r32 * p.q2, 0, 0}, {r22 * p.q3, 0, 0}};
    Mat l2{{0, 1, 0}, {0, r31 * p.q2, 0}, {0, r21 * p.q3, 0}};
    Mat q1 = form == Q1Form::printed ? Mat{{0, 0, 1}, {0, 0, p.q2}, {0, 0, p.q3}} : unit(3, 3, 1, 3);
    Mat q2{{0, 0, 0}, {p.p1, p.p2, 1}, {0, 0, 0}};
    Mat q3{{0, 0, 0}, {0, 0, 0}, {r12 * p.p1, r11 * p.p2, 1}};
    return {std::move(l1), std::move(l2), std::move(q1), std::move(q2), std::move(q3)};
}

inline Subspace build_c_normal(const Mat& c, const GeneralParams& p, Q1Form form = Q1Form::printed) {
    const auto basis = c_normal_basis(c, p, form);
    return Subspace::span(basis);
}

inline Mat combine(const std::array<Mat, 5>& basis, const CoordVector& x) {
    const auto a = x.as_array();
    Mat out(basis[0].rows(), basis[0].cols());
    for (std::size_t k = 0; k < 5; ++k)
        if (!a[k].is_zero())
            out += a[k] * basis[k];
    return out;
}

/// z1 L1 + z2 L2 + w1 Q1 + w2 Q2 + w3 Q3.
inline Mat general_element(const Mat& c, const GeneralParams& p, const CoordVector& x,
                           Q1Form form = Q1Form::printed) {
    return combine(c_normal_basis(c, p, form), x);
}

inline constexpr std::array<std::size_t, 5> kCanonicalPivots{0, 1, 2, 5, 8};

inline bool has_canonical_pivots(const Subspace& s) {
    return s.rows() == 3 && s.cols() == 3 && s.dim() == 5 &&
           std::equal(s.pivots().begin(), s.pivots().end(), kCanonicalPivots.begin());
}

/// Parameters of the printed C-normal basis of s, or nullopt when s is not
/// C-normal. Candidate parameters are read off the reduced basis and the
/// subspace is rebuilt from them; equality of the rebuilt subspace checks
/// every remaining pattern entry.
inline std::optional<GeneralParams> recognize_c_normal(const Subspace& s, const Mat& c) {
    require_nonzero_entries(c);
    if (!has_canonical_pivots(s))
        return std::nullopt;
    const auto& basis = s.basis();
    GeneralParams p{basis[3](1, 0), basis[3](1, 1), basis[0](1, 0) / rho_minor(c, 3, 2),
                    basis[0](2, 0) / rho_minor(c, 2, 2)};
    if (p.p1.is_zero() || p.p2.is_zero() || p.q2.is_zero() || p.q3.is_zero())
        return std::nullopt;
    if (build_c_normal(c, p) != s)
        return std::nullopt;
    return p;
}

/// Certifies det(C o X) == 0 for every X in the span. Each coordinate lives
/// in a single row or column of X, so the determinant is multilinear and the
/// {0,1,2}^5 grid is more than enough.
inline GridCertificate schur_singular_identically(const Mat& c, const GeneralParams& p,
                                                  Q1Form form = Q1Form::printed) {
    const auto basis = c_normal_basis(c, p, form);
    return certify_on_grid([&](const CoordVector& x) { return det(schur(c, combine(basis, x))); },
                           {3, 3, 3, 3, 3});
}

/// rho(C_{2,1}) = rho(C_{1,1}) rho(C_{3,1}) and rho(C_{2,2}) = rho(C_{1,2}) rho(C_{3,2}).
inline bool rho_multiplicative(const Mat& c) {
    require_nonzero_entries(c);
    return rho_minor(c, 2, 1) == rho_minor(c, 1, 1) * rho_minor(c, 3, 1) &&
           rho_minor(c, 2, 2) == rho_minor(c, 1, 2) * rho_minor(c, 3, 2);
}

/// The two cross-ratio identities linking C^r and C^{r+1}.
inline bool rho_identities(const GeneralSequence& seq, std::size_t r) {
    if (r < 1 || r + 3 > seq.size())
        throw DomainError("rho identities need r + 3 <= K");
    const Mat c = c_block(seq, r);
    const Mat d = c_block(seq, r + 1);
    const bool first = rho_minor(c, 3, 1) * rho_minor(d, 3, 2) / rho_minor(c, 2, 1) == rho_minor(d, 3, 1);
    const bool second = rho_minor(d, 3, 2) / rho_minor(d, 3, 1) == rho_minor(c, 1, 1);
    return first && second;
}

/// q_{3,r} forced by matching: q_{2,r} q_{2,r+1} rho(C^{r+1}_{3,1}).
inline Scalar forced_q3(const GeneralSequence& seq, std::size_t r, const Scalar& q2_r, const Scalar& q2_next) {
    return q2_r * q2_next * rho_minor(c_block(seq, r + 1), 3, 1);
}

/// p_{1,r+1} forced by matching: p_{2,r} p_{2,r+1} rho(C^r_{1,1}).
inline Scalar forced_p1(const GeneralSequence& seq, std::size_t r, const Scalar& p2_r, const Scalar& p2_next) {
    return p2_r * p2_next * rho_minor(c_block(seq, r), 1, 1);
}

/// Both parameter recurrences between sections r and r+1.
inline bool connection_holds(const GeneralSequence& seq, std::size_t r, const GeneralParams& pr,
                             const GeneralParams& pr1) {
    if (r < 1 || r + 3 > seq.size())
        throw DomainError("connection check needs r + 3 <= K");
    return pr.q3 == forced_q3(seq, r, pr.q2, pr1.q2) && pr1.p1 == forced_p1(seq, r, pr.p2, pr1.p2);
}

} // namespace xsect

#endif // XSECT_GENERAL_HPP
