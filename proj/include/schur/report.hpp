#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/compose.hpp"
#include "schur/json_io.hpp"

namespace schur {

struct TraceEntry {
  std::string rule;
  std::string subject;
  std::string result;
  std::string detail;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

TraceEntry trace_entry(const TraceStep& step);

struct OracleCheck {
  FgAbelianGroup oracle;
  bool agrees = false;
  friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

/// Output of one CLI invocation.
struct Report {
  std::string command;
  std::string input;
  /// Subcommand-specific result fields, in output order.
  Json result = Json::object();
  std::vector<TraceEntry> trace;
  std::optional<OracleCheck> check;
  double elapsed_ms = 0.0;
  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
/// Inverse of to_json. Throws InvalidArgument on malformed input.
Report report_from_json(const Json& j);

/// Human-readable rendering; the trace is included when `with_trace` is set.
std::string render_text(const Report& r, bool with_trace);

}  // namespace schur
