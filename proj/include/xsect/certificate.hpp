#ifndef XSECT_CERTIFICATE_HPP
#define XSECT_CERTIFICATE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include <xsect/scalar.hpp>

namespace xsect {

/// Coefficients of a cross-section element in its canonical basis
/// (L1, L2, Q1, Q2, Q3).
struct CoordVector {
    Scalar z1, z2, w1, w2, w3;

    std::array<Scalar, 5> as_array() const { return {z1, z2, w1, w2, w3}; }
    static CoordVector from_array(const std::array<Scalar, 5>& a) { return {a[0], a[1], a[2], a[3], a[4]}; }

    friend bool operator==(const CoordVector&, const CoordVector&) = default;
};

inline std::string format_coords(const CoordVector& c) {
    std::string out;
    const auto a = c.as_array();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k)
            out += ',';
        out += format_scalar(a[k]);
    }
    return out;
}

struct GridWitness {
    CoordVector coords;
    Scalar value;
};

/// Outcome of evaluating a polynomial on a product grid. `holds()` means the
/// polynomial vanished at every grid point.
struct GridCertificate {
    std::optional<GridWitness> witness;
    std::size_t points = 0;

    bool holds() const noexcept { return !witness.has_value(); }
};

/// Evaluates `poly(CoordVector)` on {0..sizes[0]-1} x ... x {0..sizes[4]-1}.
/// A polynomial of degree < sizes[k] in coordinate k that vanishes on the
/// whole grid is the zero polynomial, so a clean run certifies an identity.
/// Stops at the first nonzero value.
template <class Poly>
GridCertificate certify_on_grid(Poly&& poly, const std::array<unsigned, 5>& sizes) {
    GridCertificate cert;
    std::array<unsigned, 5> at{};
    for (;;) {
        CoordVector c{Scalar(static_cast<long>(at[0])), Scalar(static_cast<long>(at[1])),
                      Scalar(static_cast<long>(at[2])), Scalar(static_cast<long>(at[3])),
                      Scalar(static_cast<long>(at[4]))};
        Scalar v = poly(c);
        ++cert.points;
        if (!v.is_zero()) {
            cert.witness = GridWitness{std::move(c), std::move(v)};
            return cert;
        }
        std::size_t k = 0;
        while (k < at.size() && ++at[k] == sizes[k]) {
            at[k] = 0;
            ++k;
        }
        if (k == at.size())
            return cert;
    }
}

} // namespace xsect

#endif // XSECT_CERTIFICATE_HPP
