// acrox: extract acronym expansions from plain-text documents.
//
//   acrox --mode combined --input a.txt b.txt --out report.json --endpoint URL
//   acrox stats --reports runs/*/report.json --out stats.csv

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acrox/analytics.hpp"
#include "acrox/run.hpp"

namespace fs = std::filesystem;
using namespace acrox;

namespace {

int run_stats(const std::vector<std::string>& report_paths, const std::string& out_path) {
  std::vector<std::pair<std::string, report::RunReport>> reports;
  for (const auto& p : report_paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      std::cerr << "acrox: cannot read report " << p << "\n";
      return cli::kExitInputError;
    }
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
      const auto domain = fs::absolute(p).parent_path().filename().string();
      reports.emplace_back(domain, report::parse_json(body));
    } catch (const Error& e) {
      std::cerr << "acrox: " << p << ": " << e.what() << "\n";
      return cli::kExitInputError;
    }
  }
  const auto csv = analytics::to_csv(analytics::aggregate(reports));
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
    return cli::kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!(out << csv)) {
    std::cerr << "acrox: cannot write " << out_path << "\n";
    return cli::kExitInputError;
  }
  return cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acronym expansion extractor"};
  app.set_version_flag("--version", "acrox 0.1.0");

  cli::RunConfig config;
  std::string mode_name;
  std::vector<std::string> inputs;
  std::string output;
  std::string fixture;
  bool replay = false;
  bool record = false;
  std::string converter, stopwords, dictionary, abbreviations;

  app.add_option("--mode", mode_name, "regex, regex-pre, llm, llm-pre or combined")
      ->check(CLI::IsMember({"regex", "regex-pre", "llm", "llm-pre", "combined"}));
  app.add_option("--input", inputs, "Input documents (.txt, or anything --converter handles)");
  app.add_option("--out", output, "Report path (JSON)");
  app.add_option("--stopword-threshold", config.stopword_threshold,
                 "Largest stopword share accepted in a forward expansion")
      ->capture_default_str();
  app.add_option("--chunk-size", config.llm.chunk_size, "Entries per model prompt (1-20)")
      ->capture_default_str();
  app.add_option("--text-chunk-chars", config.llm.text_chunk_chars,
                 "Passage size for the model-only modes")
      ->capture_default_str();
  app.add_option("--endpoint", config.llm.endpoint, "Chat-completion URL");
  app.add_option("--model", config.llm.model_name)->capture_default_str();
  app.add_option("--temperature", config.llm.temperature)->capture_default_str();
  app.add_option("--api-key-env", config.llm.api_key_env,
                 "Environment variable holding the API key")
      ->capture_default_str();
  app.add_option("--rate-limit", config.llm.requests_per_minute, "Requests per minute")
      ->capture_default_str();
  app.add_option("--max-concurrency", config.llm.max_concurrency)->capture_default_str();
  app.add_option("--max-retries", config.llm.max_retries)->capture_default_str();
  app.add_option("--timeout", config.llm.timeout_seconds, "Per-request timeout, seconds")
      ->capture_default_str();
  app.add_option("--fixture", fixture, "JSONL file of recorded model replies");
  auto* replay_flag = app.add_flag("--replay", replay, "Answer model calls from --fixture");
  app.add_flag("--record", record, "Append live replies to --fixture")->excludes(replay_flag);
  app.add_option("--converter", converter,
                 "Command turning a non-.txt input into text on stdout; {input} is the path");
  app.add_option("--stopwords", stopwords, "Stopword list, one word per line");
  app.add_option("--dictionary", dictionary, "Word list for --spellcheck");
  app.add_option("--abbreviations", abbreviations, "Abbreviations that never end a sentence");
  app.add_flag("--spellcheck", config.spellcheck, "Correct single-edit misspellings");
  app.add_option("--workers", config.document_workers, "Documents processed in parallel (0: auto)");

  auto* stats = app.add_subcommand("stats", "Aggregate reports into a CSV per domain and mode");
  std::vector<std::string> report_paths;
  std::string stats_out;
  stats->add_option("--reports", report_paths, "Report files; the parent directory names the domain")
      ->required();
  stats->add_option("--out", stats_out, "CSV path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitInputError;
  }

  if (stats->parsed()) return run_stats(report_paths, stats_out);

  if (mode_name.empty() || inputs.empty() || output.empty()) {
    std::cerr << "acrox: --mode, --input and --out are required\n" << app.help();
    return cli::kExitInputError;
  }
  config.mode = report::parse_mode(mode_name);
  for (const auto& i : inputs) config.inputs.emplace_back(i);
  config.output = output;
  if (!fixture.empty()) config.fixture = fixture;
  config.fixture_mode = replay ? cli::FixtureMode::kReplay
                        : record ? cli::FixtureMode::kRecord
                                 : cli::FixtureMode::kNone;
  if (!converter.empty()) config.converter = converter;
  if (!stopwords.empty()) config.stopwords_path = stopwords;
  if (!dictionary.empty()) config.dictionary_path = dictionary;
  if (!abbreviations.empty()) config.abbreviations_path = abbreviations;

  try {
    const auto rep = cli::run(config);
    std::fprintf(stderr, "acrox: %zu documents, %zu acronyms, %zu expanded (%.1f%%)\n",
                 rep.documents.size(), rep.summary.total_acronyms, rep.summary.expansions_found,
                 100.0 * rep.summary.percent_found);
    return cli::kExitOk;
  } catch (const cli::RunError& e) {
    std::cerr << "acrox: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "acrox: " << e.what() << "\n";
    return cli::kExitInvariantViolation;
  }
}
