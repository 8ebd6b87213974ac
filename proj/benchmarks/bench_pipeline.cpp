#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "acrox/extract.hpp"
#include "acrox/llm_resolve.hpp"
#include "acrox/pipeline.hpp"
#include "acrox/preprocess.hpp"

namespace {

std::string corpus_text() {
  std::string all;
  for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(ACROX_DATA_DIR) / "corpus")) {
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    all += (all.empty() ? "" : "\f") + ss.str();
  }
  return all;
}

const std::string& text() {
  static const std::string t = corpus_text();
  return t;
}

void BM_ScanAcronyms(benchmark::State& state) {
  const std::string s =
      "Samples were analysed by LC-MS and XPS (X-ray photoelectron spectroscopy) while the GNCS-INdAM "
      "group ran NASA and TCP benchmarks on LPARs.";
  for (auto _ : state) benchmark::DoNotOptimize(acrox::extract::scan_acronyms(s));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * s.size()));
}
BENCHMARK(BM_ScanAcronyms);

void BM_FullStack(benchmark::State& state) {
  const auto raw = acrox::ingest::parse_pages(text(), "corpus");
  for (auto _ : state) benchmark::DoNotOptimize(acrox::full_stack(raw));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text().size()));
}
BENCHMARK(BM_FullStack);

void BM_SplitSentences(benchmark::State& state) {
  const auto clean = acrox::full_stack(acrox::ingest::parse_pages(text(), "corpus"));
  for (auto _ : state) benchmark::DoNotOptimize(acrox::preprocess::split_sentences(clean));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * clean.text.size()));
}
BENCHMARK(BM_SplitSentences);

void BM_BuildTable(benchmark::State& state) {
  const auto stream = acrox::preprocess::split_sentences(acrox::full_stack(acrox::ingest::parse_pages(text(), "c")));
  const acrox::extract::ExtractOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(acrox::extract::build_table(stream, options));
}
BENCHMARK(BM_BuildTable);

void BM_ProcessDocument(benchmark::State& state) {
  const acrox::PipelineOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(acrox::process_document(text(), "corpus", options));
}
BENCHMARK(BM_ProcessDocument);

void BM_ChunkTable(benchmark::State& state) {
  const auto table = acrox::process_document(text(), "corpus", acrox::PipelineOptions{}).table;
  for (auto _ : state) benchmark::DoNotOptimize(acrox::llm::chunk_table(table, acrox::llm::kDefaultChunkSize));
}
BENCHMARK(BM_ChunkTable);

}  // namespace
BENCHMARK_MAIN();
