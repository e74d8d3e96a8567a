#ifndef XSECT_CHAIN_HPP
#define XSECT_CHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <xsect/error.hpp>
#include <xsect/general.hpp>
#include <xsect/shift.hpp>
#include <xsect/subspace.hpp>

namespace xsect {

/// Sections r = 1..R of the general case over one sequence.
struct GeneralChain {
    GeneralSequence seq;
    std::vector<GeneralParams> params;

    std::size_t length() const noexcept { return params.size(); }
    friend bool operator==(const GeneralChain&, const GeneralChain&) = default;
};

/// Sections r = 1..R of the shift case over one sequence.
struct ShiftChain {
    ShiftSequence seq;
    std::vector<ShiftParams> params;

    std::size_t length() const noexcept { return params.size(); }
    friend bool operator==(const ShiftChain&, const ShiftChain&) = default;
};

using Chain = std::variant<GeneralChain, ShiftChain>;

inline void check_chain_length(std::size_t R, std::size_t K) {
    if (R == 0)
        throw DomainError("chain needs at least one section");
    if (R + 3 > K)
        throw DomainError("chain of " + std::to_string(R) + " sections needs K >= R + 3, have K = " +
                          std::to_string(K));
}

// --- synthesis ------------------------------------------------------------------

struct GeneralSeeds {
    std::vector<Scalar> q2; // q_{2,r}, r = 1..R
    std::vector<Scalar> p2; // p_{2,r}, r = 1..R
    Scalar p1_1;
    Scalar q3_R;
};

/// Fills in q_{3,r} (r < R) and p_{1,r+1} from the matching recurrences; the
/// free boundary values p_{1,1} and q_{3,R} come from the seeds.
inline GeneralChain synth_general_chain(const GeneralSequence& seq, std::size_t R, const GeneralSeeds& seeds) {
    check_chain_length(R, seq.size());
    if (seeds.q2.size() != R || seeds.p2.size() != R)
        throw DomainError("q2 and p2 seed lists must have R = " + std::to_string(R) + " entries");
    for (std::size_t r = 0; r < R; ++r)
        if (seeds.q2[r].is_zero() || seeds.p2[r].is_zero())
            throw DomainError("seed q2/p2 entry " + std::to_string(r + 1) + " is zero");
    if (seeds.p1_1.is_zero() || seeds.q3_R.is_zero())
        throw DomainError("seeds p1_1 and q3_R must be nonzero");

    GeneralChain chain{seq, {}};
    chain.params.resize(R);
    for (std::size_t r = 1; r <= R; ++r) {
        auto& p = chain.params[r - 1];
        p.q2 = seeds.q2[r - 1];
        p.p2 = seeds.p2[r - 1];
        p.p1 = r == 1 ? seeds.p1_1 : forced_p1(seq, r - 1, seeds.p2[r - 2], seeds.p2[r - 1]);
        p.q3 = r == R ? seeds.q3_R : forced_q3(seq, r, seeds.q2[r - 1], seeds.q2[r]);
    }
    return chain;
}

struct ShiftSeeds {
    Scalar x1;
    std::vector<Scalar> y; // y_r, r = 1..R
};

/// Strong sections with x_{r+1} = y_r / x_r and q_r = -x_r / b_r for every r,
/// including the last one, whose q is otherwise unconstrained.
inline ShiftChain synth_shift_chain(const ShiftSequence& seq, std::size_t R, const ShiftSeeds& seeds) {
    check_chain_length(R, seq.size());
    if (seeds.y.size() != R)
        throw DomainError("y seed list must have R = " + std::to_string(R) + " entries");
    if (seeds.x1.is_zero())
        throw DomainError("seed x1 must be nonzero");
    for (std::size_t r = 0; r < R; ++r)
        if (seeds.y[r].is_zero())
            throw DomainError("seed y_" + std::to_string(r + 1) + " is zero");

    ShiftChain chain{seq, {}};
    Scalar x = seeds.x1;
    for (std::size_t r = 1; r <= R; ++r) {
        const Scalar& y = seeds.y[r - 1];
        chain.params.emplace_back(StrongParams{x, y, -x / seq.b(r)});
        x = y / x;
    }
    return chain;
}

// --- audit ------------------------------------------------------------------------

struct CheckRecord {
    std::string id;
    std::size_t r = 0;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::vector<std::string> header;
    std::vector<CheckRecord> records;

    bool clean() const {
        for (const auto& rec : records)
            if (!rec.pass)
                return false;
        return true;
    }

    std::vector<CheckRecord> violations() const {
        std::vector<CheckRecord> out;
        for (const auto& rec : records)
            if (!rec.pass)
                out.push_back(rec);
        return out;
    }
};

struct AuditOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::uint64_t section_seed(std::uint64_t seed, std::size_t r) {
    return seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r));
}

inline CheckRecord transitivity_record(const Subspace& s, std::size_t r, const AuditOptions& opt) {
    const auto v = transitivity(s, opt.trials, section_seed(opt.seed, r));
    if (v.transitive())
        return {"transitive", r, true, "probably_transitive samples=" + std::to_string(v.samples)};
    std::string w;
    for (const auto& c : *v.witness)
        w += (w.empty() ? "" : ",") + format_scalar(c);
    return {"transitive", r, false, "not_transitive witness=" + w};
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

} // namespace detail

/// Checks every section and every junction; never stops at the first
/// failure.
inline AuditReport audit(const GeneralChain& chain, const AuditOptions& opt = {}) {
    const std::size_t R = chain.length();
    check_chain_length(R, chain.seq.size());
    AuditReport rep;
    rep.header.push_back("mode=general R=" + std::to_string(R) + " K=" + std::to_string(chain.seq.size()) +
                         " trials=" + std::to_string(opt.trials) + " rng_seed=" + std::to_string(opt.seed));
    rep.header.push_back("boundary: p1 of section 1 and q3 of section R are free seeds");

    std::vector<std::optional<Subspace>> sections(R);
    for (std::size_t r = 1; r <= R; ++r) {
        const Mat c = c_block(chain.seq, r);
        const GeneralParams& p = chain.params[r - 1];
        try {
            sections[r - 1] = build_c_normal(c, p);
        } catch (const DomainError& e) {
            rep.records.push_back({"build", r, false, e.what()});
            continue;
        }
        const Subspace& s = *sections[r - 1];
        rep.records.push_back({"dim", r, s.dim() == 5, "dim=" + std::to_string(s.dim())});
        const auto rec = recognize_c_normal(s, c);
        rep.records.push_back({"recognize", r, rec && *rec == p, rec ? "c_normal" : "none"});
        const auto cert = schur_singular_identically(c, p);
        rep.records.push_back({"schur_singular", r, cert.holds(),
                               cert.holds() ? "grid_points=" + std::to_string(cert.points)
                                            : "witness=" + format_coords(cert.witness->coords) +
                                                  " det=" + format_scalar(cert.witness->value)});
        rep.records.push_back(detail::transitivity_record(s, r, opt));
    }
    for (std::size_t r = 1; r < R; ++r) {
        if (!sections[r - 1] || !sections[r]) {
            rep.records.push_back({"junction", r, false, "missing section"});
            continue;
        }
        const bool adj = adjacency_equal(*sections[r - 1], *sections[r]);
        const bool rec = connection_holds(chain.seq, r, chain.params[r - 1], chain.params[r]);
        rep.records.push_back({"adjacency", r, adj, std::string("equal=") + detail::yes_no(adj)});
        rep.records.push_back({"recurrence", r, rec, std::string("holds=") + detail::yes_no(rec)});
        rep.records.push_back({"agreement", r, adj == rec,
                               std::string("adjacency=") + detail::yes_no(adj) + " recurrence=" + detail::yes_no(rec)});
    }
    return rep;
}

inline AuditReport audit(const ShiftChain& chain, const AuditOptions& opt = {}) {
    const std::size_t R = chain.length();
    check_chain_length(R, chain.seq.size());
    AuditReport rep;
    rep.header.push_back("mode=shift R=" + std::to_string(R) + " K=" + std::to_string(chain.seq.size()) +
                         " trials=" + std::to_string(opt.trials) + " rng_seed=" + std::to_string(opt.seed));
    rep.header.push_back("boundary: q of section R is pinned to -x_R/b_R");

    std::vector<std::optional<Subspace>> sections(R);
    for (std::size_t r = 1; r <= R; ++r) {
        const Delta d = chain.seq.delta(r);
        const ShiftParams& p = chain.params[r - 1];
        try {
            sections[r - 1] = build_shift(d, p);
        } catch (const DomainError& e) {
            rep.records.push_back({"build", r, false, e.what()});
            continue;
        }
        const Subspace& s = *sections[r - 1];
        rep.records.push_back({"dim", r, s.dim() == 5, "dim=" + std::to_string(s.dim())});

        const auto rec = recognize_shift(s, d);
        bool round_trip = rec && *rec == p;
        // A T2 section that satisfies both strong gates is reported as strong.
        if (rec && !round_trip && std::holds_alternative<StrongParams>(*rec))
            if (const auto* t2 = std::get_if<T2Params>(&p)) {
                try {
                    round_trip = ShiftParams(strongify(d, *t2)) == *rec;
                } catch (const DomainError&) {
                }
            }
        rep.records.push_back({"recognize", r, round_trip, rec ? variant_name(*rec) : "none"});

        const auto cert = rank_rule_identically(d, p);
        rep.records.push_back({"rank_rule", r, cert.holds(),
                               cert.holds() ? "grid_points=" + std::to_string(cert.points)
                                            : "witness=" + format_coords(cert.witness->coords) +
                                                  " det=" + format_scalar(cert.witness->value)});
        rep.records.push_back(detail::transitivity_record(s, r, opt));
    }
    for (std::size_t r = 1; r < R; ++r) {
        if (!sections[r - 1] || !sections[r]) {
            rep.records.push_back({"junction", r, false, "missing section"});
            continue;
        }
        const bool adj = adjacency_equal(*sections[r - 1], *sections[r]);
        bool rec = false;
        std::string why;
        try {
            rec = main_constraints(chain.seq, r, chain.params[r - 1], chain.params[r]);
            why = std::string("holds=") + detail::yes_no(rec);
        } catch (const DomainError& e) {
            why = e.what();
        }
        rep.records.push_back({"adjacency", r, adj, std::string("equal=") + detail::yes_no(adj)});
        rep.records.push_back({"recurrence", r, rec, why});
        rep.records.push_back({"agreement", r, adj == rec,
                               std::string("adjacency=") + detail::yes_no(adj) + " recurrence=" + detail::yes_no(rec)});
    }
    return rep;
}

inline AuditReport audit(const Chain& chain, const AuditOptions& opt = {}) {
    return std::visit([&](const auto& c) { return audit(c, opt); }, chain);
}

} // namespace xsect

#endif // XSECT_CHAIN_HPP
