#ifndef XSECT_SELFCHECK_HPP
#define XSECT_SELFCHECK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <xsect/chain.hpp>
#include <xsect/compression.hpp>
#include <xsect/general.hpp>
#include <xsect/random.hpp>
#include <xsect/shift.hpp>

namespace xsect {

/// mu0 = 0, mu_k = k, lambda_k = -k, so that c_hat(i, j) = i + j.
inline GeneralSequence integer_sum_sequence(std::size_t K) {
    std::vector<Scalar> lambda, mu;
    for (std::size_t k = 1; k <= K; ++k) {
        lambda.emplace_back(-static_cast<long>(k));
        mu.emplace_back(static_cast<long>(k));
    }
    return GeneralSequence(0, lambda, mu);
}

/// b_k = 1/k.
inline ShiftSequence harmonic_sequence(std::size_t K) {
    std::vector<Scalar> b;
    for (std::size_t k = 1; k <= K; ++k)
        b.push_back(Scalar::ratio(1, static_cast<long>(k)));
    return ShiftSequence(0, b);
}

/// Built-in identities on fixed data; every record should pass.
inline AuditReport selfcheck(std::uint64_t seed = 20240601) {
    AuditReport rep;
    rep.header.push_back("selfcheck rng_seed=" + std::to_string(seed));
    Sampler rng(seed);
    auto add = [&](std::string id, std::size_t r, bool pass, std::string detail) {
        rep.records.push_back({std::move(id), r, pass, std::move(detail)});
    };

    // Compression lemmas on a 12x12 truncation.
    const Mat x = rng.matrix(12, 12);
    for (std::size_t r = 1; r <= 9; ++r)
        add("partial_identity", r, check_partial_identity(x, r), "N=12");
    add("composition_identity", 0, check_composition_identity(x, {2, 3, 4, 5, 6, 7}, {3, 4}), "E=2..7 F=3,4");
    add("composition_identity", 0, check_composition_identity(x, {1, 4, 9, 12}, {4, 12}), "E=1,4,9,12 F=4,12");

    // Cross-ratio identities.
    const GeneralSequence sums = integer_sum_sequence(8);
    for (std::size_t r = 1; r + 3 <= sums.size(); ++r)
        add("rho_identities", r, rho_identities(sums, r), "c_hat=i+j");
    for (std::size_t r = 1; r + 2 <= sums.size(); ++r)
        add("rho_multiplicative", r, rho_multiplicative(c_block(sums, r)), "c_hat=i+j");
    const Mat random_c = rng.nonzero_matrix(3, 3);
    add("rho_multiplicative", 0, rho_multiplicative(random_c), "random C");

    // Grid certificates.
    const GeneralParams gp{2, Scalar(1, 1), Scalar::ratio(-1, 3), 5};
    const Mat c1 = c_block(sums, 1);
    const auto printed = schur_singular_identically(c1, gp, Q1Form::printed);
    add("schur_singular_printed", 1, printed.holds(), "grid_points=" + std::to_string(printed.points));
    const auto elementary = schur_singular_identically(c1, gp, Q1Form::elementary);
    add("schur_singular_elementary_fails", 1, !elementary.holds(),
        elementary.holds() ? "no witness" : "witness=" + format_coords(elementary.witness->coords));

    const Delta d(1, Scalar::ratio(1, 2), Scalar::ratio(1, 3));
    const auto holds = rank_rule_identically(d, StrongParams{1, 1, -1});
    add("rank_rule_strong", 1, holds.holds(), "q=-x/b1");
    const auto fails = rank_rule_identically(d, StrongParams{1, 1, 1});
    add("rank_rule_strong_off_gate_fails", 1, !fails.holds(), "q!=-x/b1");

    const StrongParams strong = strongify(d, T2Params{1, 1, -1, -2});
    add("strongify", 1, build_shift(d, T2Params{1, 1, -1, -2}) == build_shift(d, strong), "spans equal");

    // Short synthesized chains, both modes.
    AuditOptions opt{50, seed};
    const auto gchain = synth_general_chain(sums, 3, {{1, 2, Scalar(1, -1)}, {3, Scalar::ratio(1, 2), -1}, 1, 1});
    add("general_chain_audit", 0, audit(gchain, opt).clean(), "R=3");
    const auto schain = synth_shift_chain(harmonic_sequence(7), 4, {1, {3, 6, 2, Scalar(0, 1)}});
    add("shift_chain_audit", 0, audit(schain, opt).clean(), "R=4");
    return rep;
}

} // namespace xsect

#endif // XSECT_SELFCHECK_HPP
