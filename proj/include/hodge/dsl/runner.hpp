#pragma once

#include "hodge/dsl/ast.hpp"
#include "hodge/dsl/lexer.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace hodge::dsl {

enum class OutputFormat { text, json };

/// 0 success, 1 parse error, 2 validation or failed assertion/check,
/// 3 missing monodromy attestation.
enum ExitCode : int { kExitOk = 0, kExitParse = 1, kExitValidation = 2, kExitMonodromy = 3 };

struct RunOptions {
  OutputFormat format = OutputFormat::text;
  bool assume_trivial_monodromy = false;
  std::uint64_t seed = 20240601;
  /// When set, only queries with these verbs (or asserts wrapping them) run;
  /// bindings always run.
  std::optional<std::set<std::string>> verbs;
};

struct RunOutput {
  std::string output;
  int exit_code = kExitOk;
};

RunOutput run(const Script& script, const RunOptions& options);

/// Parses and runs. Parse diagnostics are rendered in the requested format
/// with exit code 1.
RunOutput run_source(std::string_view source, const RunOptions& options);

}  // namespace hodge::dsl
