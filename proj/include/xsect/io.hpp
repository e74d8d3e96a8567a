#ifndef XSECT_IO_HPP
#define XSECT_IO_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <xsect/chain.hpp>
#include <xsect/error.hpp>
#include <xsect/general.hpp>
#include <xsect/shift.hpp>

namespace xsect {

// Config and chain files share one syntax:
//
//   # comment
//   key = value
//   [section 3]
//   key = value
//
// Values are scalars `(re,im)`, comma-separated scalar lists, or plain
// non-negative integers. Keys are unique within their block.

struct ConfigEntry {
    std::string value;
    std::size_t line = 0;
};

struct ConfigBlock {
    std::size_t line = 0;
    std::map<std::string, ConfigEntry> entries;

    const ConfigEntry* find(const std::string& key) const {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    }

    const ConfigEntry& require(const std::string& key) const {
        if (const auto* e = find(key))
            return *e;
        throw ParseError("missing key '" + key + "'", 0, line);
    }
};

struct ConfigFile {
    ConfigBlock header;
    std::map<std::size_t, ConfigBlock> sections; // keyed by section index
};

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace detail

inline ConfigFile parse_config(std::istream& in) {
    ConfigFile file;
    ConfigBlock* block = &file.header;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            std::size_t index = 0;
            const std::string prefix = "[section ";
            if (line.back() != ']' || line.rfind(prefix, 0) != 0)
                throw ParseError("expected '[section <r>]'", 0, lineno);
            const std::string num = line.substr(prefix.size(), line.size() - prefix.size() - 1);
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), index);
            if (ec != std::errc() || ptr != num.data() + num.size() || index == 0)
                throw ParseError("section index must be a positive integer", prefix.size(), lineno);
            if (file.sections.count(index))
                throw ParseError("duplicate section " + std::to_string(index), 0, lineno);
            block = &file.sections[index];
            block->line = lineno;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", 0, lineno);
        std::string key = detail::trim(std::string_view(line).substr(0, eq));
        std::string value = detail::trim(std::string_view(line).substr(eq + 1));
        if (key.empty())
            throw ParseError("empty key", 0, lineno);
        if (block->entries.count(key))
            throw ParseError("duplicate key '" + key + "'", 0, lineno);
        block->entries[key] = {std::move(value), lineno};
    }
    return file;
}

inline Scalar config_scalar(const ConfigEntry& e) {
    try {
        return parse_scalar(e.value);
    } catch (const ParseError& err) {
        throw ParseError(err.what(), err.position(), e.line);
    }
}

/// Splits on commas outside parentheses.
inline std::vector<Scalar> config_list(const ConfigEntry& e) {
    std::vector<Scalar> out;
    int depth = 0;
    std::string item;
    auto flush = [&] {
        std::string t = detail::trim(item);
        if (t.empty())
            throw ParseError("empty list item", 0, e.line);
        try {
            out.push_back(parse_scalar(t));
        } catch (const ParseError& err) {
            throw ParseError(err.what(), err.position(), e.line);
        }
        item.clear();
    };
    for (char ch : e.value) {
        if (ch == '(')
            ++depth;
        else if (ch == ')')
            --depth;
        if (ch == ',' && depth == 0)
            flush();
        else
            item += ch;
    }
    flush();
    return out;
}

inline std::uint64_t config_count(const ConfigEntry& e) {
    std::uint64_t v = 0;
    const auto& s = e.value;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("expected a non-negative integer, got '" + s + "'", 0, e.line);
    return v;
}

inline void reject_unknown_keys(const ConfigBlock& block, const std::set<std::string>& allowed) {
    for (const auto& [key, entry] : block.entries)
        if (!allowed.count(key))
            throw ParseError("unknown key '" + key + "'", 0, entry.line);
}

enum class Mode { general, shift };

inline Mode config_mode(const ConfigBlock& header) {
    const auto& e = header.require("mode");
    if (e.value == "general")
        return Mode::general;
    if (e.value == "shift")
        return Mode::shift;
    throw ParseError("mode must be 'general' or 'shift'", 0, e.line);
}

/// Builds the sequence of a mode, turning invariant violations into
/// diagnostics at the offending line.
inline GeneralSequence config_general_sequence(const ConfigBlock& h) {
    const auto& lam = h.require("lambda");
    try {
        return GeneralSequence(config_scalar(h.require("mu0")), config_list(lam), config_list(h.require("mu")));
    } catch (const DomainError& err) {
        throw ParseError(err.what(), 0, lam.line);
    }
}

inline ShiftSequence config_shift_sequence(const ConfigBlock& h) {
    const auto& b = h.require("b");
    const ConfigEntry zero{"(0,0)", 0};
    const auto* b0 = h.find("b0");
    try {
        return ShiftSequence(config_scalar(b0 ? *b0 : zero), config_list(b));
    } catch (const DomainError& err) {
        throw ParseError(err.what(), 0, b.line);
    }
}

// --- run configuration -----------------------------------------------------------

struct RunConfig {
    Mode mode = Mode::general;
    std::optional<GeneralSequence> general;
    std::optional<ShiftSequence> shift;
    std::size_t R = 0;
    GeneralSeeds general_seeds;
    ShiftSeeds shift_seeds;
    AuditOptions options;
};

inline const std::set<std::string> kRunKeys{"mode", "mu0", "lambda", "mu", "b0", "b",     "R",
                                           "q2",   "p2",  "p1_1",   "q3_R", "x1", "y", "trials", "rng_seed"};

inline void read_options(const ConfigBlock& h, AuditOptions& opt) {
    if (const auto* t = h.find("trials"))
        opt.trials = config_count(*t);
    if (const auto* s = h.find("rng_seed"))
        opt.seed = config_count(*s);
}

inline RunConfig load_run_config(std::istream& in) {
    const ConfigFile file = parse_config(in);
    if (!file.sections.empty())
        throw ParseError("run configs take no [section] blocks", 0, file.sections.begin()->second.line);
    const ConfigBlock& h = file.header;
    reject_unknown_keys(h, kRunKeys);
    RunConfig cfg;
    cfg.mode = config_mode(h);
    const auto& rkey = h.require("R");
    cfg.R = config_count(rkey);
    read_options(h, cfg.options);
    try {
        if (cfg.mode == Mode::general) {
            cfg.general = config_general_sequence(h);
            cfg.general_seeds = {config_list(h.require("q2")), config_list(h.require("p2")),
                                 config_scalar(h.require("p1_1")), config_scalar(h.require("q3_R"))};
            check_chain_length(cfg.R, cfg.general->size());
        } else {
            cfg.shift = config_shift_sequence(h);
            cfg.shift_seeds = {config_scalar(h.require("x1")), config_list(h.require("y"))};
            check_chain_length(cfg.R, cfg.shift->size());
        }
    } catch (const DomainError& err) {
        throw ParseError(err.what(), 0, rkey.line);
    }
    return cfg;
}

inline Chain synthesize(const RunConfig& cfg) {
    if (cfg.mode == Mode::general)
        return synth_general_chain(*cfg.general, cfg.R, cfg.general_seeds);
    return synth_shift_chain(*cfg.shift, cfg.R, cfg.shift_seeds);
}

// --- chain files ------------------------------------------------------------------

namespace detail {

inline std::string join(const std::vector<Scalar>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k)
        out += (k ? ", " : "") + format_scalar(xs[k]);
    return out;
}

inline void kv(std::string& out, const std::string& key, const std::string& value) {
    out += key + " = " + value + "\n";
}

} // namespace detail

inline std::string format_chain(const Chain& chain, const AuditOptions& opt) {
    std::string out = "# cross-section chain\n";
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, GeneralChain>) {
                detail::kv(out, "mode", "general");
                detail::kv(out, "mu0", format_scalar(c.seq.mu0()));
                detail::kv(out, "lambda", detail::join(c.seq.lambda()));
                detail::kv(out, "mu", detail::join(c.seq.mu()));
            } else {
                detail::kv(out, "mode", "shift");
                detail::kv(out, "b0", format_scalar(c.seq.b0()));
                detail::kv(out, "b", detail::join(c.seq.b()));
            }
            detail::kv(out, "R", std::to_string(c.length()));
            detail::kv(out, "trials", std::to_string(opt.trials));
            detail::kv(out, "rng_seed", std::to_string(opt.seed));
            for (std::size_t r = 1; r <= c.length(); ++r) {
                out += "\n[section " + std::to_string(r) + "]\n";
                const auto& p = c.params[r - 1];
                if constexpr (std::is_same_v<T, GeneralChain>) {
                    detail::kv(out, "p1", format_scalar(p.p1));
                    detail::kv(out, "p2", format_scalar(p.p2));
                    detail::kv(out, "q2", format_scalar(p.q2));
                    detail::kv(out, "q3", format_scalar(p.q3));
                } else {
                    detail::kv(out, "variant", variant_name(p));
                    std::visit(
                        [&](const auto& v) {
                            using V = std::decay_t<decltype(v)>;
                            detail::kv(out, "x", format_scalar(v.x));
                            detail::kv(out, "y", format_scalar(v.y));
                            if constexpr (!std::is_same_v<V, T1Params>)
                                detail::kv(out, "q", format_scalar(v.q));
                            if constexpr (std::is_same_v<V, T2Params>)
                                detail::kv(out, "qp", format_scalar(v.qp));
                        },
                        p);
                }
            }
        },
        chain);
    return out;
}

struct LoadedChain {
    Chain chain;
    AuditOptions options;
};

inline LoadedChain load_chain(std::istream& in) {
    const ConfigFile file = parse_config(in);
    const ConfigBlock& h = file.header;
    reject_unknown_keys(h, {"mode", "mu0", "lambda", "mu", "b0", "b", "R", "trials", "rng_seed"});
    const Mode mode = config_mode(h);
    const auto& rkey = h.require("R");
    const std::size_t R = config_count(rkey);
    AuditOptions opt;
    read_options(h, opt);

    for (const auto& [index, block] : file.sections)
        if (index > R)
            throw ParseError("section " + std::to_string(index) + " exceeds R = " + std::to_string(R), 0,
                             block.line);
    auto section = [&](std::size_t r) -> const ConfigBlock& {
        auto it = file.sections.find(r);
        if (it == file.sections.end())
            throw ParseError("missing [section " + std::to_string(r) + "]", 0, rkey.line);
        return it->second;
    };

    if (mode == Mode::general) {
        GeneralChain chain{config_general_sequence(h), {}};
        try {
            check_chain_length(R, chain.seq.size());
        } catch (const DomainError& err) {
            throw ParseError(err.what(), 0, rkey.line);
        }
        for (std::size_t r = 1; r <= R; ++r) {
            const auto& s = section(r);
            reject_unknown_keys(s, {"p1", "p2", "q2", "q3"});
            chain.params.push_back({config_scalar(s.require("p1")), config_scalar(s.require("p2")),
                                    config_scalar(s.require("q2")), config_scalar(s.require("q3"))});
        }
        return {std::move(chain), opt};
    }

    ShiftChain chain{config_shift_sequence(h), {}};
    try {
        check_chain_length(R, chain.seq.size());
    } catch (const DomainError& err) {
        throw ParseError(err.what(), 0, rkey.line);
    }
    for (std::size_t r = 1; r <= R; ++r) {
        const auto& s = section(r);
        const auto& variant = s.require("variant");
        const Scalar x = config_scalar(s.require("x"));
        const Scalar y = config_scalar(s.require("y"));
        if (variant.value == "t1") {
            reject_unknown_keys(s, {"variant", "x", "y"});
            chain.params.emplace_back(T1Params{x, y});
        } else if (variant.value == "t2") {
            reject_unknown_keys(s, {"variant", "x", "y", "q", "qp"});
            chain.params.emplace_back(T2Params{x, y, config_scalar(s.require("q")), config_scalar(s.require("qp"))});
        } else if (variant.value == "strong") {
            reject_unknown_keys(s, {"variant", "x", "y", "q"});
            chain.params.emplace_back(StrongParams{x, y, config_scalar(s.require("q"))});
        } else {
            throw ParseError("variant must be t1, t2 or strong", 0, variant.line);
        }
    }
    return {std::move(chain), opt};
}

// --- reports -------------------------------------------------------------------------

inline std::string format_record(const CheckRecord& rec) {
    return "CHECK\t" + rec.id + "\tr=" + std::to_string(rec.r) + "\t" + (rec.pass ? "PASS" : "FAIL") +
           "\tdetail=" + rec.detail + "\n";
}

inline std::string format_report(const AuditReport& rep) {
    std::string out;
    for (const auto& h : rep.header)
        out += "# " + h + "\n";
    for (const auto& rec : rep.records)
        out += format_record(rec);
    out += std::string("RESULT\t") + (rep.clean() ? "clean" : "violation") + "\n";
    return out;
}

} // namespace xsect

#endif // XSECT_IO_HPP
