#pragma once

// End-to-end orchestration of the five run modes.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "acrox/clock.hpp"
#include "acrox/errors.hpp"
#include "acrox/extract.hpp"
#include "acrox/llm_resolve.hpp"
#include "acrox/report.hpp"
#include "acrox/transport.hpp"

namespace acrox::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitLlmUnavailable = 3,
  kExitInvariantViolation = 4,
};

class RunError : public Error {
 public:
  RunError(int exit_code, const std::string& what) : Error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

enum class FixtureMode { kNone, kReplay, kRecord };

struct RunConfig {
  report::Mode mode = report::Mode::kRegexPre;
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output;  // empty: do not write
  double stopword_threshold = extract::kDefaultStopwordThreshold;
  llm::LlmConfig llm;  // llm.endpoint empty means no live endpoint
  std::optional<std::string> converter;  // e.g. "pdftotext -layout {input} -"
  std::optional<std::filesystem::path> fixture;
  FixtureMode fixture_mode = FixtureMode::kNone;
  std::optional<std::filesystem::path> stopwords_path;
  std::optional<std::filesystem::path> dictionary_path;
  std::optional<std::filesystem::path> abbreviations_path;
  bool spellcheck = false;
  std::size_t document_workers = 0;  // 0: hardware concurrency
};

// Test hooks: an injected transport replaces live/replay/record selection.
struct RunOverrides {
  llm::Transport* transport = nullptr;
  Clock* clock = nullptr;
};

// Runs the configured mode over every input and writes the report when an
// output path is set. Throws RunError carrying the process exit code.
report::RunReport run(const RunConfig& config, const RunOverrides& overrides = {});

// Reads an input, through the converter command for non-.txt files when
// one is configured. Throws RunError(kExitInputError).
std::string read_input(const std::filesystem::path& path,
                       const std::optional<std::string>& converter);

// Wraps `s` in single quotes for /bin/sh.
std::string shell_quote(const std::string& s);

}  // namespace acrox::cli
