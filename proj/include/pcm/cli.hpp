#pragma once

// Command-line front end: analyze, gen, axioms, table2, ri.
//
// Exit codes: 0 success, 1 usage/internal error, 2 input validation failure,
// 3 verdicts disagree with the reference table under --strict.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcm/pcm.hpp"

namespace pcm::cli {

enum ExitCode : int { ok = 0, usage_error = 1, invalid_input = 2, strict_mismatch = 3 };

enum class Format { table, json, csv };

struct CliConfig {
    Format format = Format::table;
    WeightMethod method = WeightMethod::geometric_mean;
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::uint64_t samples = 100'000;
    double tol = kReciprocityTolerance;
    bool strict = false;
};

/// Corner-matrix x values of the published sweep.
inline std::vector<double> default_table2_x() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 100}; }

/// One row of the corner-matrix sweep: x, RIC, CI, GWI, PLI, KII, GCI.
struct SweepRow {
    double x = 1.0;
    double ric = 0.0;
    double ci = 0.0;
    double gwi = 0.0;
    double pli = 0.0;
    double kii = 0.0;
    double gci = 0.0;
};

inline std::vector<SweepRow> corner_sweep(const std::vector<double>& xs, WeightMethod method) {
    std::vector<SweepRow> rows;
    for (double x : xs) {
        if (!(x >= 1.0) || !std::isfinite(x)) throw InvalidArgument("table2: x values must be >= 1");
        const auto m = ComparisonMatrix::corner({3, x});
        const auto w = priority_vector(m, method);
        rows.push_back({x, ric(m), pcm::ci(m), gwi(m, w), pli(m), kii(m), gci(m, w)});
    }
    return rows;
}

namespace detail {

using pcm::detail::format_number;

inline std::string fixed4(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << content;
}

inline EntryScale parse_scale(const std::string& s) {
    if (s == "saaty" || s == "saaty17") return SaatyDiscrete{};
    if (s.rfind("loguniform:", 0) == 0) {
        const auto rest = s.substr(11);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw InvalidArgument("scale must be loguniform:LO:HI");
        LogUniform lu{std::stod(rest.substr(0, colon)), std::stod(rest.substr(colon + 1))};
        check_scale(lu);
        return lu;
    }
    throw InvalidArgument("unknown scale '" + s + "' (use saaty or loguniform:LO:HI)");
}

// "5", "3..8" or "3-8".
inline std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    auto to_n = [&](const std::string& t) {
        std::size_t used = 0;
        const auto v = std::stoul(t, &used);
        if (used != t.size()) throw InvalidArgument("bad order range '" + s + "'");
        return static_cast<std::size_t>(v);
    };
    try {
        if (const auto dots = s.find(".."); dots != std::string::npos) {
            return {to_n(s.substr(0, dots)), to_n(s.substr(dots + 2))};
        }
        if (const auto dash = s.find('-'); dash != std::string::npos && dash > 0) {
            return {to_n(s.substr(0, dash)), to_n(s.substr(dash + 1))};
        }
        const auto n = to_n(s);
        return {n, n};
    } catch (const std::logic_error&) {
        throw InvalidArgument("bad order range '" + s + "'");
    }
}

}  // namespace detail

inline int cmd_analyze(const std::string& path, const std::string& ri_path, const CliConfig& cfg,
                       std::ostream& out) {
    const auto m = parse_csv(detail::read_file(path), cfg.tol);
    const RiTable ri = ri_path.empty() ? bundled_ri_table()
                                       : ri_table_from_json(nlohmann::json::parse(detail::read_file(ri_path)));
    const auto r = report(m, ri, cfg.method);

    if (cfg.format == Format::json) {
        out << to_json(r).dump(2) << '\n';
        return ok;
    }
    if (cfg.format == Format::csv) {
        out << "index,value\n";
        for (const auto& [name, v] : r.values) out << name << ',' << detail::format_number(v) << '\n';
        return ok;
    }
    out << "n = " << r.n << ", lambda_max = " << detail::fixed4(r.lambda_max)
        << ", weights = " << to_string(r.weight_method) << '\n';
    for (const char* name : {index_name::ci, index_name::cr, index_name::gwi, index_name::pli,
                             index_name::gci, index_name::kii, index_name::ric}) {
        if (const auto v = r.get(name)) out << std::left << std::setw(5) << name << detail::fixed4(*v) << '\n';
    }
    if (r.ri_used) {
        out << "R.I.(" << r.n << ") = " << detail::fixed4(*r.ri_used) << " (" << ri.provenance.source << ")\n";
    }
    out << "status: " << (r.consistent ? "consistent" : "inconsistent") << '\n';
    if (const auto c = r.get(index_name::cr)) {
        out << "info: CR " << (*c <= 0.10 ? "<=" : ">") << " 0.10 (conventional acceptance rule)\n";
    }
    return ok;
}

inline int cmd_table2(const std::vector<double>& xs, const CliConfig& cfg, std::ostream& out) {
    const auto rows = corner_sweep(xs, cfg.method);
    if (cfg.format == Format::csv) {
        out << "x,RIC,CI,GWI,PLI,KII,GCI\n";
        for (const auto& r : rows) {
            out << detail::format_number(r.x) << ',' << detail::format_number(r.ric) << ','
                << detail::format_number(r.ci) << ',' << detail::format_number(r.gwi) << ','
                << detail::format_number(r.pli) << ',' << detail::format_number(r.kii) << ','
                << detail::format_number(r.gci) << '\n';
        }
        return ok;
    }
    if (cfg.format == Format::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            j.push_back({{"x", r.x}, {"RIC", r.ric}, {"CI", r.ci}, {"GWI", r.gwi},
                         {"PLI", r.pli}, {"KII", r.kii}, {"GCI", r.gci}});
        }
        out << j.dump(2) << '\n';
        return ok;
    }
    // Indices as rows, x values as columns.
    auto line = [&](const std::string& label, auto field) {
        out << std::left << std::setw(5) << label;
        for (const auto& r : rows) out << std::right << std::setw(10) << field(r);
        out << '\n';
    };
    line("x", [](const SweepRow& r) { return detail::format_number(r.x); });
    line("RIC", [](const SweepRow& r) { return detail::fixed4(r.ric); });
    line("CI", [](const SweepRow& r) { return detail::fixed4(r.ci); });
    line("GWI", [](const SweepRow& r) { return detail::fixed4(r.gwi); });
    line("PLI", [](const SweepRow& r) { return detail::fixed4(r.pli); });
    line("KII", [](const SweepRow& r) { return detail::fixed4(r.kii); });
    line("GCI", [](const SweepRow& r) { return detail::fixed4(r.gci); });
    return ok;
}

inline int cmd_axioms(const std::vector<std::string>& names, const CliConfig& cfg, std::ostream& out,
                      std::ostream& err) {
    std::vector<IndexFunction> indices;
    const bool all = names.empty() || (names.size() == 1 && (names[0] == "all" || names[0] == "ALL"));
    if (all) {
        indices = standard_indices(cfg.method);
    } else {
        for (const auto& name : names) {
            auto f = find_index(name, cfg.method);
            if (!f) throw InvalidArgument("unknown index '" + name + "' (known: CI GWI GCI PLI RIC KII, all)");
            indices.push_back(std::move(*f));
        }
    }
    HarnessOptions opts;
    opts.trials = cfg.trials;
    opts.seed = cfg.seed;
    const auto table = verdict_table(indices, opts);

    if (cfg.format == Format::json) {
        out << to_json(table).dump(2) << '\n';
    } else {
        out << render_text(table);
        for (const auto& row : table.rows) {
            for (const auto& v : row.verdicts) {
                if (v.outcome == Outcome::fail) out << '\n' << describe(v) << '\n';
            }
        }
    }
    if (cfg.strict) {
        const auto bad = reference_mismatches(table);
        for (const auto& b : bad) err << "mismatch: " << b << '\n';
        if (!bad.empty()) return strict_mismatch;
    }
    return ok;
}

inline int cmd_ri(const std::string& range, const std::string& output, const CliConfig& cfg,
                  std::ostream& out) {
    const auto [lo, hi] = detail::parse_range(range);
    if (lo < 2 || hi < lo) throw InvalidArgument("ri: orders must satisfy 2 <= lo <= hi");
    if (cfg.samples < 100) throw InvalidArgument("ri: need at least 100 samples");

    std::vector<RiEstimate> estimates;
    RiTable table;
    table.provenance = {"monte-carlo", "saaty17", cfg.samples, cfg.seed};
    for (std::size_t n = lo; n <= hi; ++n) {
        estimates.push_back(estimate_ri(n, cfg.samples, cfg.seed));
        table.values[n] = estimates.back().mean_ci;
    }
    if (!output.empty()) detail::write_file(output, to_json(table).dump(2) + "\n");

    if (cfg.format == Format::json) {
        out << to_json(table).dump(2) << '\n';
    } else if (cfg.format == Format::csv) {
        out << "n,ri,std_error,samples\n";
        for (const auto& e : estimates) {
            out << e.n << ',' << detail::format_number(e.mean_ci) << ','
                << detail::format_number(e.std_error) << ',' << e.samples << '\n';
        }
    } else {
        out << std::left << std::setw(5) << "n" << std::setw(10) << "R.I." << std::setw(12) << "std.err"
            << "samples\n";
        for (const auto& e : estimates) {
            out << std::left << std::setw(5) << e.n << std::setw(10) << detail::fixed4(e.mean_ci)
                << std::setw(12) << detail::fixed4(e.std_error) << e.samples << '\n';
        }
    }
    return ok;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pairwise comparison matrices: inconsistency indices and axiom checks", "pcm"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    std::string format = "table";
    std::string method = "gm";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--method", method, "Weight method for GWI/GCI")->check(CLI::IsMember({"gm", "em"}));
    app.add_option("--seed", cfg.seed, "RNG seed");
    app.add_option("--tol", cfg.tol, "Reciprocity tolerance when reading matrices")->check(CLI::PositiveNumber);
    app.add_flag("--strict", cfg.strict, "Exit 3 if axiom verdicts disagree with the reference table");

    std::string analyze_path;
    std::string ri_path;
    auto* analyze = app.add_subcommand("analyze", "Report every index of a CSV matrix");
    analyze->add_option("file", analyze_path, "Matrix CSV")->required();
    analyze->add_option("--ri", ri_path, "R.I. table JSON (default: bundled)");

    std::string output;
    auto* gen = app.add_subcommand("gen", "Write a matrix as CSV");
    gen->require_subcommand(1);
    gen->add_option("-o,--output", output, "Output file (default: stdout)");
    std::size_t gen_n = 0;
    double gen_x = 1.0;
    auto* gen_corner = gen->add_subcommand("corner", "Corner matrix: all ones, a_1n = x");
    gen_corner->add_option("n", gen_n)->required();
    gen_corner->add_option("x", gen_x)->required();
    std::string gen_scale = "saaty";
    std::uint64_t gen_seed = 42;
    auto* gen_random = gen->add_subcommand("random", "Random reciprocal matrix");
    gen_random->add_option("n", gen_n)->required();
    gen_random->add_option("scale", gen_scale, "saaty | loguniform:LO:HI");
    gen_random->add_option("seed", gen_seed);
    std::vector<double> gen_w;
    auto* gen_weights = gen->add_subcommand("weights", "Consistent matrix a_ij = w_i / w_j");
    gen_weights->add_option("w", gen_w)->required();

    std::vector<std::string> index_names;
    auto* axioms = app.add_subcommand("axioms", "Check the six axioms for named indices or all");
    axioms->add_option("indices", index_names, "Index names (CI GWI GCI PLI RIC KII) or all");
    axioms->add_option("--trials", cfg.trials, "Random trials per axiom")->check(CLI::PositiveNumber);

    std::vector<double> xs;
    auto* table2 = app.add_subcommand("table2", "Index sweep over corner matrices of order 3");
    table2->add_option("--x", xs, "x values (default 1..10, 100)");

    std::string range;
    std::string ri_output;
    auto* ri_cmd = app.add_subcommand("ri", "Monte Carlo random index");
    ri_cmd->add_option("orders", range, "n or lo..hi")->required();
    ri_cmd->add_option("--samples", cfg.samples, "Samples per order");
    ri_cmd->add_option("-o,--output", ri_output, "Write the R.I. table as JSON");

    std::vector<const char*> argv{"pcm"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;
    cfg.method = method == "em" ? WeightMethod::eigenvector : WeightMethod::geometric_mean;

    try {
        if (*analyze) return cmd_analyze(analyze_path, ri_path, cfg, out);
        if (*gen) {
            ComparisonMatrix m = ComparisonMatrix::ones(2);
            if (*gen_corner) {
                m = ComparisonMatrix::corner({gen_n, gen_x});
            } else if (*gen_random) {
                m = random_reciprocal(gen_n, detail::parse_scale(gen_scale), gen_seed);
            } else {
                m = ComparisonMatrix::from_weights(gen_w);
            }
            const auto text = serialize_csv(m) + "\n";
            if (output.empty()) {
                out << text;
            } else {
                detail::write_file(output, text);
            }
            return ok;
        }
        if (*axioms) return cmd_axioms(index_names, cfg, out, err);
        if (*table2) return cmd_table2(xs.empty() ? default_table2_x() : xs, cfg, out);
        if (*ri_cmd) return cmd_ri(range, ri_output, cfg, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        for (const auto& c : e.cells()) err << "  " << describe(c) << '\n';
        return invalid_input;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace pcm::cli
