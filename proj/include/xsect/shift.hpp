#ifndef XSECT_SHIFT_HPP
#define XSECT_SHIFT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <xsect/certificate.hpp>
#include <xsect/error.hpp>
#include <xsect/general.hpp>
#include <xsect/matrix.hpp>
#include <xsect/subspace.hpp>

namespace xsect {

/// Distinct nonzero diagonal entries b_1, b_2, b_3.
class Delta {
public:
    Delta(Scalar b1, Scalar b2, Scalar b3) : b_{std::move(b1), std::move(b2), std::move(b3)} {
        for (std::size_t i = 0; i < 3; ++i) {
            if (b_[i].is_zero())
                throw DomainError("diagonal entries of Delta must be nonzero");
            for (std::size_t j = i + 1; j < 3; ++j)
                if (b_[i] == b_[j])
                    throw DomainError("diagonal entries of Delta must be distinct");
        }
    }

    const Scalar& b1() const noexcept { return b_[0]; }
    const Scalar& b2() const noexcept { return b_[1]; }
    const Scalar& b3() const noexcept { return b_[2]; }

    Mat matrix() const { return diag({b_[0], b_[1], b_[2]}); }

    friend bool operator==(const Delta&, const Delta&) = default;

private:
    std::array<Scalar, 3> b_;
};

/// (b_0, {b_k}) with D = sum b_k e_k (x) e_k. Indices are 1-based.
class ShiftSequence {
public:
    ShiftSequence(Scalar b0, std::vector<Scalar> b) : b0_(std::move(b0)), b_(std::move(b)) {
        if (b_.empty())
            throw DomainError("shift sequence needs at least one b_k");
        for (std::size_t i = 0; i < b_.size(); ++i) {
            if (b_[i].is_zero())
                throw DomainError("b_" + std::to_string(i + 1) + " must be nonzero");
            for (std::size_t j = i + 1; j < b_.size(); ++j)
                if (b_[i] == b_[j])
                    throw DomainError("b_k must be pairwise distinct");
        }
    }

    std::size_t size() const noexcept { return b_.size(); }
    const Scalar& b0() const noexcept { return b0_; }
    const std::vector<Scalar>& b() const noexcept { return b_; }
    const Scalar& b(std::size_t k) const { return b_.at(k - 1); }

    /// diag(b_r, b_{r+1}, b_{r+2}).
    Delta delta(std::size_t r) const {
        if (r < 1 || r + 2 > b_.size())
            throw DomainError("Delta_" + std::to_string(r) + " needs r + 2 <= K = " + std::to_string(b_.size()));
        return Delta(b(r), b(r + 1), b(r + 2));
    }

    friend bool operator==(const ShiftSequence&, const ShiftSequence&) = default;

private:
    Scalar b0_;
    std::vector<Scalar> b_;
};

/// (1/b3 - 1/b2, 1/b3 - 1/b1, 1/b2 - 1/b1).
inline std::array<Scalar, 3> b_delta(const Delta& d) {
    const Scalar i1 = d.b1().inverse(), i2 = d.b2().inverse(), i3 = d.b3().inverse();
    return {i3 - i2, i3 - i1, i2 - i1};
}

struct T1Params {
    Scalar x, y;
    friend bool operator==(const T1Params&, const T1Params&) = default;
};

struct T2Params {
    Scalar x, y, q, qp; // qp is q', allowed to be zero
    friend bool operator==(const T2Params&, const T2Params&) = default;
};

struct StrongParams {
    Scalar x, y, q;
    friend bool operator==(const StrongParams&, const StrongParams&) = default;
};

using ShiftParams = std::variant<T1Params, T2Params, StrongParams>;

inline const char* variant_name(const ShiftParams& p) {
    switch (p.index()) {
    case 0: return "t1";
    case 1: return "t2";
    default: return "strong";
    }
}

inline void validate(const ShiftParams& p) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if (v.x.is_zero() || v.y.is_zero())
                throw DomainError("shift parameters x and y must be nonzero");
            if constexpr (!std::is_same_v<T, T1Params>)
                if (v.q.is_zero())
                    throw DomainError("shift parameter q must be nonzero");
        },
        p);
}

/// Canonical basis (L1, L2, Q1, Q2, Q3). L2 carries (1,1) = 0 in every
/// variant so that a general element has independent (1,1) and (1,2)
/// entries.
inline std::array<Mat, 5> shift_basis(const Delta& d, const ShiftParams& p) {
    validate(p);
    const auto [bd1, bd2, bd3] = b_delta(d);
    const Scalar& b1 = d.b1();
    const Scalar& b2 = d.b2();
    const Scalar& b3 = d.b3();

    return std::visit(
        [&](const auto& v) -> std::array<Mat, 5> {
            using T = std::decay_t<decltype(v)>;
            const Scalar& x = v.x;
            const Scalar& y = v.y;
            Mat l1{{1, 0, 0}, {x, 0, 0}, {y, 0, 0}};
            Mat l2{{0, 1, 0}, {bd3 * x, x, 0}, {bd2 * y, y, 0}};
            if constexpr (std::is_same_v<T, T1Params>) {
                return {std::move(l1), std::move(l2), unit(3, 3, 1, 3),
                        Mat{{0, 0, 0}, {bd3 / b2, bd3, 1}, {0, 0, 0}},
                        Mat{{0, 0, 0}, {0, 0, 0}, {bd2 / b3, bd2, 1}}};
            } else if constexpr (std::is_same_v<T, T2Params>) {
                const Scalar qx = v.q / x;
                const Scalar qpx = v.qp / x;
                return {std::move(l1), std::move(l2),
                        Mat{{0, 0, 1}, {v.qp, v.q, 0}, {qpx * y + bd1 * qx * y, qx * y, 0}},
                        Mat{{0, 0, 0}, {bd3 / b2 - qpx, bd3 - qx, 1}, {0, 0, 0}},
                        Mat{{0, 0, 0}, {0, 0, 0}, {bd2 / b3 - bd1 * qx - qpx, bd2 - qx, 1}}};
            } else {
                const Scalar i2 = b2.inverse();
                const Scalar i3 = b3.inverse();
                return {std::move(l1), std::move(l2),
                        Mat{{0, 0, 1}, {v.q * i2, v.q, 0}, {-y / (b1 * b3), -y / b1, 0}},
                        Mat{{0, 0, 0}, {i2 * i2, i2, 1}, {0, 0, 0}},
                        Mat{{0, 0, 0}, {0, 0, 0}, {i3 * i3, i3, 1}}};
            }
        },
        p);
}

inline Subspace build_shift(const Delta& d, const ShiftParams& p) {
    const auto basis = shift_basis(d, p);
    return Subspace::span(basis);
}

inline Mat shift_general_element(const Delta& d, const ShiftParams& p, const CoordVector& x) {
    return combine(shift_basis(d, p), x);
}

/// Most specific canonical form of s relative to d (strong, then T2, then
/// T1), or nullopt.
inline std::optional<ShiftParams> recognize_shift(const Subspace& s, const Delta& d) {
    if (!has_canonical_pivots(s))
        return std::nullopt;
    const auto& basis = s.basis();
    const Scalar x = basis[0](1, 0);
    const Scalar y = basis[0](2, 0);
    const Scalar qp = basis[2](1, 0);
    const Scalar q = basis[2](1, 1);
    if (x.is_zero() || y.is_zero())
        return std::nullopt;

    std::vector<ShiftParams> candidates;
    if (!q.is_zero()) {
        candidates.emplace_back(StrongParams{x, y, q});
        candidates.emplace_back(T2Params{x, y, q, qp});
    }
    candidates.emplace_back(T1Params{x, y});
    for (auto& c : candidates)
        if (build_shift(d, c) == s)
            return std::move(c);
    return std::nullopt;
}

/// Certifies rank(Delta X - X J3) <= 2 on the whole span by checking that
/// the 3x3 determinant vanishes on a grid. Q1 may touch all three columns of
/// X and right multiplication by J3 shifts columns, so the determinant has
/// degree up to 3 in w1 and up to 2 in z2; the grid is sized accordingly.
inline GridCertificate rank_rule_identically(const Delta& d, const ShiftParams& p) {
    const auto basis = shift_basis(d, p);
    const Mat delta = d.matrix();
    const Mat j3 = jordan3();
    return certify_on_grid(
        [&](const CoordVector& c) {
            const Mat x = combine(basis, c);
            return det(delta * x - x * j3);
        },
        {3, 3, 4, 3, 3});
}

/// Parameter conditions for sections r and r+1 to match:
/// x_{r+1} = y_r / x_r and q_r = -x_r / b_r, plus q'_{r+1} = q_{r+1} / b_{r+2}
/// when the right section is given in T2 form (the strong form has it built
/// in). A T1 section on the left can never match and is rejected. On the
/// right only its P33 corner matters, which is that of T2 with q = q' = 0.
inline bool main_constraints(const ShiftSequence& seq, std::size_t r, const ShiftParams& pr,
                             const ShiftParams& pr1) {
    if (r < 1 || r + 3 > seq.size())
        throw DomainError("matching constraints need r + 3 <= K");
    if (std::holds_alternative<T1Params>(pr))
        throw DomainError("a type T1 section cannot be the left side of a junction");
    validate(pr);
    validate(pr1);
    auto xyq = [](const ShiftParams& p) {
        return std::visit(
            [](const auto& v) -> std::array<Scalar, 3> {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, T1Params>)
                    return {v.x, v.y, Scalar()};
                else
                    return {v.x, v.y, v.q};
            },
            p);
    };
    const auto [x, y, q] = xyq(pr);
    const auto [x1, y1, q1] = xyq(pr1);
    bool ok = x1 == y / x && q == -x / seq.b(r);
    if (const auto* t2 = std::get_if<T2Params>(&pr1))
        ok = ok && t2->qp == t2->q / seq.b(r + 2);
    return ok;
}

/// Rewrites T2 parameters with q = -x/b1 and q' = q/b2 in strong form.
inline StrongParams strongify(const Delta& d, const T2Params& p) {
    validate(ShiftParams(p));
    if (p.q != -p.x / d.b1())
        throw DomainError("strongify: q != -x/b1");
    if (p.qp != p.q / d.b2())
        throw DomainError("strongify: q' != q/b2");
    return StrongParams{p.x, p.y, p.q};
}

} // namespace xsect

#endif // XSECT_SHIFT_HPP
