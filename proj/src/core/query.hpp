#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/serialize.hpp"

namespace cohomlen {

inline constexpr int schema_version = 1;

enum class ExitStatus : int { ok = 0, usage = 64, data = 65, search = 66 };

ExitStatus exit_status_for(ErrorKind kind) noexcept;

struct Report {
  json body;
  ExitStatus status;
};

enum class OutputFormat { json, text };

// Queries understood by run(); see README for per-query parameters.
const std::vector<std::string>& query_names();

// Runs the query named in the document (or `query` when given, which takes
// precedence). `params` are key=value overrides merged into "parameters";
// values parse as JSON scalars when possible and as strings otherwise.
Report run(std::string_view document_text, const std::optional<std::string>& query = std::nullopt,
           const std::vector<std::pair<std::string, std::string>>& params = {});
Report run_document(json document);

// Validates every space in the document; exit ok iff no violations.
Report lint(std::string_view document_text);

// Canonical rendering: JSON with sorted keys and two-space indent, or a
// plain key/value listing. Both end in a newline and are deterministic.
std::string render(const Report& report, OutputFormat format);

}  // namespace cohomlen
