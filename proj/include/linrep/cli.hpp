#pragma once

/*
 * Command implementations behind the linrep binary. Each cmd_* function
 * parses its text inputs, runs the pipeline, and returns both renderings
 * of the result: a JSON envelope and a human-readable block. The caller
 * (tools/linrep_main.cpp, or a test) decides which one to print.
 *
 * Envelope layout, stable under schema_version "1":
 *   { "schema_version": "1", "command": "...", "input": "...",
 *     "result": { ... }, "diagnostics": [ ... ] }
 *
 * Big integers appear in JSON as decimal strings, never as numbers: a
 * modulus outgrows IEEE doubles at modest n and must survive any JSON
 * consumer. Exit codes are part of the interface: 0 success, 1 failed
 * verification, 2 bad input, 3 rejected explicit x, 4 search budget
 * exhausted, 70 broken internal invariant.
 */

#include <optional>
#include <string>

#include <json.hpp>

#include "linrep/funcgraph.hpp"
#include "linrep/oracle.hpp"
#include "linrep/represent.hpp"

namespace linrep::cli {

inline constexpr const char* kSchemaVersion = "1";

struct CommandOutput {
    nlohmann::json envelope;
    std::string human;
    std::optional<std::string> csv;  // batch without --out: CSV destined for stdout
    int exit_code = 0;
};

struct ReprOptions {
    XChoice mode = XChoice::BoundDerived;
    std::optional<Int> explicit_x;
};

struct MinimalOptions {
    Int max_m = SearchBudget{}.max_m;
};

struct BatchOptions {
    std::size_t n = 0;
    XChoice mode = XChoice::BoundDerived;
    bool with_minimal = false;
    std::optional<std::string> out_path;
};

CommandOutput cmd_repr(const std::string& fn_text, const ReprOptions& opt);
CommandOutput cmd_verify(const std::string& fn_text, const std::string& m_text,
                         const std::string& a_text, const std::string& j_text);
CommandOutput cmd_charpoly(const std::string& fn_text);
CommandOutput cmd_minimal(const std::string& fn_text, const MinimalOptions& opt);
CommandOutput cmd_batch(const BatchOptions& opt);

// Strict decimal integer parse (optional sign); throws input_error.
Int parse_bigint(const std::string& text);

nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json poly_to_json(const IntPoly& p);

}  // namespace linrep::cli
