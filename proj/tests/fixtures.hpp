#ifndef XSECT_TESTS_FIXTURES_HPP
#define XSECT_TESTS_FIXTURES_HPP

// Random admissible inputs shared by several test binaries.

#include <vector>

#include <xsect/general.hpp>
#include <xsect/random.hpp>
#include <xsect/shift.hpp>

namespace fixtures {

using namespace xsect;

inline GeneralSequence random_general_sequence(Sampler& rng, std::size_t K) {
    const auto pts = rng.distinct_nonzero(2 * K + 1);
    std::vector<Scalar> lambda(pts.begin() + 1, pts.begin() + 1 + static_cast<long>(K));
    std::vector<Scalar> mu(pts.begin() + 1 + static_cast<long>(K), pts.end());
    return GeneralSequence(pts[0], std::move(lambda), std::move(mu));
}

inline ShiftSequence random_shift_sequence(Sampler& rng, std::size_t K) {
    return ShiftSequence(rng.scalar(), rng.distinct_nonzero(K));
}

inline Delta random_delta(Sampler& rng) {
    const auto b = rng.distinct_nonzero(3);
    return Delta(b[0], b[1], b[2]);
}

inline GeneralParams random_general_params(Sampler& rng) {
    return {rng.nonzero(), rng.nonzero(), rng.nonzero(), rng.nonzero()};
}

/// A scalar different from `v` (and nonzero).
inline Scalar perturb(Sampler& rng, const Scalar& v) {
    Scalar out = v + rng.nonzero();
    while (out.is_zero() || out == v)
        out = v + rng.nonzero();
    return out;
}

} // namespace fixtures

#endif // XSECT_TESTS_FIXTURES_HPP
