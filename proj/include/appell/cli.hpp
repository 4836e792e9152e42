#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace appell::cli {

inline constexpr const char* schema_version = "appell/1";

enum class Format { csv, json };

/// Everything a subcommand prints. Rationals are already rendered as "p/q".
struct OutputDocument {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::vector<std::string>> payload;
    std::optional<bool> passed;
};

/// JSON with fixed key order: schema-version, command, parameters, payload,
/// then status when present. Ends with a newline.
std::string render_json(const OutputDocument& doc);
/// One comma-separated line per payload row, then "status,pass|fail" when present.
std::string render_csv(const OutputDocument& doc);
std::string render(const OutputDocument& doc, Format format);

/// Runs the `appell` command line; args excludes the program name.
/// Returns 0 on success, 1 when a verified identity fails, 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace appell::cli
