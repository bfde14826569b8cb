#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/document.hpp"

namespace jetspace::cli {

enum class Format { Json, Text };

/// Command-line overrides. Unset values fall back to the first task of the
/// same command in the document, then to built-in defaults.
struct Options {
    std::optional<std::size_t> n;
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> window;
    std::optional<std::size_t> precision;
    std::optional<std::size_t> level;
    std::optional<std::size_t> q;
    std::optional<std::size_t> divisor_var;
    std::optional<std::string> arc;
    std::optional<std::string> dim_source;
    bool strict = false;
    Format format = Format::Json;
};

const std::vector<std::string>& command_names();

struct Outcome {
    Json report;
    bool precision_limited = false;
    bool failed = false;
};

/// Runs one command. `doc` may be null only for "catalog".
Outcome execute(const std::string& command, const ProblemDocument* doc, const Options& options);

/// Exit codes: 0 success, 1 invalid input, domain error or failed check,
/// 2 precision-limited result under --strict.
int run(const std::string& command, const std::optional<std::string>& document_path, const Options& options,
        std::ostream& out, std::ostream& err);

}  // namespace jetspace::cli
