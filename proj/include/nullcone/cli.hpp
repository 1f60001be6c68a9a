#pragma once

// Front end shared by the nullcone executable and the tests.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nullcone/catalog.hpp"
#include "nullcone/engine.hpp"
#include "nullcone/errors.hpp"
#include "nullcone/oracle.hpp"
#include "nullcone/problem_json.hpp"
#include "nullcone/report.hpp"
#include "nullcone/root_data.hpp"
#include "nullcone/svg.hpp"

namespace nullcone::cli {

enum ExitCode : int { ok = 0, input_failure = 1, resource_failure = 2, verify_mismatch = 3 };

struct RunConfig {
    std::string command;  // stratify | candidates | tree | catalog-list | verify
    std::string input;    // problem file or catalog spec
    std::optional<std::string> json_path;
    std::optional<std::string> svg_path;
    bool fast = false;
    bool no_dedup = false;
    bool verify = false;
    std::optional<std::size_t> orbit_cap;
    unsigned threads = 1;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c = {"stratify", "candidates", "tree", "catalog-list", "verify"};
    return c;
}

/// A path that exists is read as a problem file; anything else must be a
/// catalog spec.
inline Problem load_input(const std::string& input) {
    if (input.empty()) throw InputError("no input given (problem file or catalog spec)");
    if (std::filesystem::exists(input)) return load_problem_file(input);
    if (!catalog::is_known_name(input))
        throw InputError("'" + input + "' is neither a readable file nor a catalog entry (see catalog-list)");
    return catalog::from_spec(input);
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ResourceError("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw ResourceError("write to '" + path + "' failed");
}

inline void list_catalog(std::ostream& out) {
    for (const auto& e : catalog::entries()) {
        out << e.name;
        if (!e.params.empty()) out << ":" << e.params;
        out << "\n    " << e.description << "\n";
    }
}

inline bool run_verification(const ValidatedProblem& p, const StratificationResult& res, const RunConfig& cfg,
                             std::ostream& out) {
    const EngineOptions opts{cfg.fast, !cfg.no_dedup, cfg.threads};
    auto rep = oracle::cross_check(p, res, !cfg.no_dedup);
    for (const auto& t : oracle::standard_transforms(p)) rep.merge(oracle::invariance_harness(p, t, opts));
    if (rep.ok()) {
        out << "verify: OK (candidate set matches brute force; tree, rank-2 and invariance checks pass)\n";
        return true;
    }
    out << "verify: MISMATCH\n";
    for (const auto& m : rep.mismatches)
        out << "  l = " << to_string(m.l) << " only in " << m.present_in << "\n";
    for (const auto& v : rep.law_violations) out << "  " << v << "\n";
    return false;
}

inline int run_or_throw(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "catalog-list") {
        list_catalog(out);
        return ok;
    }
    bool known = false;
    for (const auto& c : commands()) known = known || c == cfg.command;
    if (!known) throw InputError("unknown command '" + cfg.command + "'");

    Problem raw = load_input(cfg.input);
    if (cfg.orbit_cap) raw.orbit_cap = *cfg.orbit_cap;
    auto outcome = validate(raw);
    const ValidatedProblem& p = outcome.value();
    if (cfg.svg_path && p.rank() > 2)
        throw InputError("--svg needs rank <= 2; '" + cfg.input + "' has rank " + std::to_string(p.rank()));

    const EngineOptions opts{cfg.fast, !cfg.no_dedup, cfg.threads};
    const StratificationResult res = stratify(p, opts);
    const Report report = make_report(res);

    write_problem_header(out, p);
    if (cfg.command == "candidates") {
        write_weights(out, p);
        write_candidates(out, p, res);
    } else if (cfg.command == "tree") {
        std::size_t i = 0;
        for (const auto& c : report.candidates) {
            out << "l" << ++i << (c.stratifying ? " (stratifying)" : " (not stratifying)") << "\n";
            write_tree(out, c.tree, "  ");
        }
    } else {
        write_candidates(out, p, res);
        write_strata(out, p, res);
    }

    if (cfg.json_path) write_file(*cfg.json_path, to_json(report).dump(2) + "\n");
    if (cfg.svg_path) write_file(*cfg.svg_path, render_svg(p, report));

    if ((cfg.verify || cfg.command == "verify") && !run_verification(p, res, cfg, out)) return verify_mismatch;
    return ok;
}

/// Runs one command; errors go to `err` and select the exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return run_or_throw(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return input_failure;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return resource_failure;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return resource_failure;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return resource_failure;
    }
}

}  // namespace nullcone::cli
