// Builds a short strong chain over b_k = 1/k, audits it, then breaks one
// junction and audits again.

#include <iostream>

#include <xsect/xsect.hpp>

int main() {
    using namespace xsect;

    const ShiftSequence seq = harmonic_sequence(8);
    ShiftChain chain = synth_shift_chain(seq, 5, {1, {3, 6, 2, 4, 1}});

    AuditOptions opt{100, 42};
    std::cout << format_report(audit(chain, opt)) << "\n";

    auto& p = std::get<StrongParams>(chain.params[2]);
    p.x += 1;
    const AuditReport broken = audit(chain, opt);
    for (const auto& rec : broken.violations())
        std::cout << format_record(rec);
    return broken.clean() ? 1 : 0;
}
