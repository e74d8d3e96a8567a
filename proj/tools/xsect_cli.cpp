// Command line front end: self-check, chain synthesis and audit, canonical
// form recognition, and matrix windows.
//
// Exit status: 0 success, 1 rule violation / not recognized, 2 usage or
// input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <xsect/xsect.hpp>

namespace {

using namespace xsect;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

/// Input problem already reported as "file:line: message".
struct InputFailure {};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << path << ": cannot open file\n";
        throw InputFailure{};
    }
    return in;
}

template <class F>
auto with_file(const std::string& path, F&& read) {
    std::ifstream in = open_input(path);
    try {
        return read(in);
    } catch (const ParseError& e) {
        std::cerr << path << ":" << e.line() << ": " << e.what() << "\n";
        throw InputFailure{};
    } catch (const Error& e) {
        std::cerr << path << ": " << e.what() << "\n";
        throw InputFailure{};
    }
}

int run_selfcheck(std::uint64_t seed) {
    const AuditReport rep = selfcheck(seed);
    std::cout << format_report(rep);
    return rep.clean() ? kOk : kViolation;
}

int run_synth(const std::string& config, const std::string& out_path) {
    const RunConfig cfg = with_file(config, [](std::istream& in) { return load_run_config(in); });
    Chain chain = [&] {
        try {
            return synthesize(cfg);
        } catch (const Error& e) {
            std::cerr << config << ": " << e.what() << "\n";
            throw InputFailure{};
        }
    }();
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << out_path << ": cannot write file\n";
        return kInputError;
    }
    out << format_chain(chain, cfg.options);
    std::cout << "WROTE\t" << out_path << "\tR=" << cfg.R << "\n";
    return kOk;
}

int run_audit(const std::string& path, std::optional<std::size_t> trials, std::optional<std::uint64_t> seed) {
    LoadedChain loaded = with_file(path, [](std::istream& in) { return load_chain(in); });
    if (trials)
        loaded.options.trials = *trials;
    if (seed)
        loaded.options.seed = *seed;
    const AuditReport rep = audit(loaded.chain, loaded.options);
    std::cout << format_report(rep);
    return rep.clean() ? kOk : kViolation;
}

struct Context {
    Mode mode = Mode::general;
    std::optional<Mat> c;
    std::optional<Delta> delta;
    std::size_t r = 0;
};

Context load_context(std::istream& in) {
    const ConfigFile file = parse_config(in);
    const ConfigBlock& h = file.header;
    reject_unknown_keys(h, {"mode", "mu0", "lambda", "mu", "b0", "b", "r", "c", "delta"});
    Context ctx;
    ctx.mode = config_mode(h);
    if (const auto* r = h.find("r"))
        ctx.r = config_count(*r);
    try {
        if (ctx.mode == Mode::general) {
            if (const auto* c = h.find("c")) {
                auto entries = config_list(*c);
                if (entries.size() != 9)
                    throw ParseError("c needs 9 row-major entries", 0, c->line);
                ctx.c = Mat(3, 3, std::move(entries));
                require_nonzero_entries(*ctx.c);
            } else {
                ctx.c = c_block(config_general_sequence(h), ctx.r);
            }
        } else {
            if (const auto* d = h.find("delta")) {
                auto b = config_list(*d);
                if (b.size() != 3)
                    throw ParseError("delta needs 3 entries", 0, d->line);
                ctx.delta = Delta(b[0], b[1], b[2]);
            } else {
                ctx.delta = config_shift_sequence(h).delta(ctx.r);
            }
        }
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0, h.line);
    }
    return ctx;
}

std::string describe(const GeneralParams& p) {
    return "c_normal p1=" + format_scalar(p.p1) + " p2=" + format_scalar(p.p2) + " q2=" + format_scalar(p.q2) +
           " q3=" + format_scalar(p.q3);
}

std::string describe(const ShiftParams& p) {
    return std::visit(
        [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            std::string s = std::string(variant_name(p)) + " x=" + format_scalar(v.x) + " y=" + format_scalar(v.y);
            if constexpr (!std::is_same_v<V, T1Params>)
                s += " q=" + format_scalar(v.q);
            if constexpr (std::is_same_v<V, T2Params>)
                s += " qp=" + format_scalar(v.qp);
            return s;
        },
        p);
}

int run_recognize(const std::string& subspace_path, const std::string& context_path) {
    const Subspace s = with_file(subspace_path, [](std::istream& in) { return read_subspace(in); });
    const Context ctx = with_file(context_path, [](std::istream& in) { return load_context(in); });
    if (s.rows() != 3 || s.cols() != 3) {
        std::cerr << subspace_path << ": recognition needs 3x3 matrices\n";
        return kInputError;
    }
    AuditReport rep;
    rep.header.push_back("recognize dim=" + std::to_string(s.dim()));
    if (ctx.mode == Mode::general) {
        const auto p = recognize_c_normal(s, *ctx.c);
        rep.records.push_back({"recognize", ctx.r, p.has_value(), p ? describe(*p) : "none"});
    } else {
        const auto p = recognize_shift(s, *ctx.delta);
        rep.records.push_back({"recognize", ctx.r, p.has_value(), p ? describe(*p) : "none"});
    }
    std::cout << format_report(rep);
    return rep.clean() ? kOk : kViolation;
}

int run_window(const std::string& path, std::size_t r) {
    const Mat x = with_file(path, [](std::istream& in) { return read_matrix(in); });
    if (!x.is_square()) {
        std::cerr << path << ": matrix must be square\n";
        return kInputError;
    }
    try {
        std::cout << format_matrix(window3(x, r)) << "\n" << format_matrix(window2(x, r));
    } catch (const DomainError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kInputError;
    }
    if (r + 3 > x.rows())
        return kOk;
    AuditReport rep;
    rep.records.push_back({"partial_identity", r, check_partial_identity(x, r), "N=" + std::to_string(x.rows())});
    std::cout << "\n" << format_report(rep);
    return rep.clean() ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and audit of matrix cross-sections"};
    app.require_subcommand(1);

    std::uint64_t selfcheck_seed = 20240601;
    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the built-in identity checks");
    selfcheck_cmd->add_option("--seed", selfcheck_seed, "Seed for randomized data");

    std::string config, out;
    auto* synth_cmd = app.add_subcommand("synth", "Synthesize a chain from a run config");
    synth_cmd->add_option("--config", config, "Run config file")->required();
    synth_cmd->add_option("--out", out, "Chain file to write")->required();

    std::string chain_path;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    auto* audit_cmd = app.add_subcommand("audit", "Audit a chain file");
    audit_cmd->add_option("--chain", chain_path, "Chain file")->required();
    audit_cmd->add_option("--trials", trials, "Random transitivity probes per section");
    audit_cmd->add_option("--seed", seed, "Seed for transitivity probes");

    std::string subspace_path, context_path;
    auto* recognize_cmd = app.add_subcommand("recognize", "Recognize the canonical form of a subspace");
    recognize_cmd->add_option("--subspace", subspace_path, "Subspace file")->required();
    recognize_cmd->add_option("--context", context_path, "Context config (C or Delta)")->required();

    std::string matrix_path;
    std::size_t r = 1;
    auto* window_cmd = app.add_subcommand("window", "Print the 3- and 2-windows of a matrix at r");
    window_cmd->add_option("--matrix", matrix_path, "Square matrix file")->required();
    window_cmd->add_option("--r", r, "1-based window start")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*selfcheck_cmd)
            return run_selfcheck(selfcheck_seed);
        if (*synth_cmd)
            return run_synth(config, out);
        if (*audit_cmd)
            return run_audit(chain_path, trials, seed);
        if (*recognize_cmd)
            return run_recognize(subspace_path, context_path);
        if (*window_cmd)
            return run_window(matrix_path, r);
    } catch (const InputFailure&) {
        return kInputError;
    } catch (const xsect::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
