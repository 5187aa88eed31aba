#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maint/code_model.hpp"

namespace maint {

struct ParseDiagnostic {
    enum class Severity { Warning, Error };
    Severity severity = Severity::Warning;
    std::string file;
    int line = 0;
    std::string message;
};

struct ParseOptions {
    std::string extension = ".java";
    std::string encoding = "utf-8"; // "utf-8" or "latin-1"
    std::vector<std::string> exclude_globs;
    int jobs = 1;
};

struct ParseResult {
    Snapshot snapshot;
    std::vector<ParseDiagnostic> diagnostics;

    bool has_errors() const {
        for (const auto &d : diagnostics)
            if (d.severity == ParseDiagnostic::Severity::Error) return true;
        return false;
    }
};

// Parses every file with the configured extension under `root`. Unparseable
// member-level constructs degrade to warnings; a file-level failure skips the
// file with an error diagnostic. Throws Error if `root` is unreadable.
ParseResult parse_tree(const std::filesystem::path &root, const ParseOptions &options = {},
                       std::string version_label = "");

// In-memory entry points used by tests and tools.
ParseResult parse_source(std::string_view source, const std::string &filename = "<memory>");
ParseResult parse_sources(const std::vector<std::pair<std::string, std::string>> &named_sources,
                          std::string version_label = "");

// Shell-style glob match ('*', '?', and '**' across separators) on '/' paths.
bool glob_match(std::string_view pattern, std::string_view path);

} // namespace maint
