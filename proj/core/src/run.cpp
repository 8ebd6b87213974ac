#include "acrox/run.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <future>
#include <memory>
#include <sstream>
#include <thread>

#include "acrox/analytics.hpp"
#include "acrox/pipeline.hpp"
#include "acrox/rate_limit.hpp"
#include "acrox/text.hpp"
#include "acrox/word_list.hpp"

namespace acrox::cli {

namespace fs = std::filesystem;
using report::Mode;

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RunError(kExitInputError, "cannot read input: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw RunError(kExitInputError, "cannot read input: " + path.string());
  return ss.str();
}

std::string run_converter(const std::string& command_template, const fs::path& path) {
  const auto quoted = shell_quote(path.string());
  std::string command = command_template.find("{input}") != std::string::npos
                            ? text::replace_all(command_template, "{input}", quoted)
                            : command_template + " " + quoted;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"), ::pclose);
  if (!pipe) throw RunError(kExitInputError, "cannot start converter: " + command);
  std::string out;
  std::array<char, 8192> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe.release());
  if (status != 0) throw RunError(kExitInputError, "converter failed for " + path.string());
  return out;
}

}  // namespace

std::string read_input(const fs::path& path, const std::optional<std::string>& converter) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw RunError(kExitInputError, "cannot read input: " + path.string());
  if (converter && text::to_lower(path.extension().string()) != ".txt")
    return run_converter(*converter, path);
  return read_file(path);
}

namespace {

// Transport chain chosen from the config; owns whatever it builds.
struct TransportSet {
  std::unique_ptr<llm::Transport> base;
  std::unique_ptr<llm::Transport> recorder;
  llm::Transport* active = nullptr;
};

TransportSet make_transport(const RunConfig& config, const RunOverrides& overrides) {
  TransportSet set;
  if (overrides.transport) {
    set.active = overrides.transport;
    return set;
  }
  if (config.fixture_mode == FixtureMode::kReplay) {
    if (!config.fixture) throw RunError(kExitLlmUnavailable, "--replay needs --fixture");
    try {
      set.base = std::make_unique<llm::ReplayTransport>(llm::Fixture::load(*config.fixture));
    } catch (const Error& e) {
      throw RunError(kExitLlmUnavailable, e.what());
    }
    set.active = set.base.get();
    return set;
  }
  if (config.llm.endpoint.empty())
    throw RunError(kExitLlmUnavailable,
                   std::string("mode ") + std::string(report::to_string(config.mode)) +
                       " needs --endpoint or --fixture with --replay");
  try {
    set.base = std::make_unique<llm::LiveTransport>(config.llm);
  } catch (const Error& e) {
    throw RunError(kExitLlmUnavailable, e.what());
  }
  set.active = set.base.get();
  if (config.fixture_mode == FixtureMode::kRecord) {
    if (!config.fixture) throw RunError(kExitLlmUnavailable, "--record needs --fixture");
    set.recorder = std::make_unique<llm::RecordingTransport>(*set.base, *config.fixture);
    set.active = set.recorder.get();
  }
  return set;
}

report::Entry entry_from_table(const extract::TableEntry& t) {
  report::Entry e;
  e.canonical = t.canonical;
  for (const auto& occ : t.occurrences)
    if (std::find(e.surfaces.begin(), e.surfaces.end(), occ.surface) == e.surfaces.end())
      e.surfaces.push_back(occ.surface);
  e.occurrence_count = t.occurrences.size();
  for (const auto& x : t.expansions)
    e.expansions.push_back({x.text, x.method == extract::Method::kForward
                                         ? report::ExpansionMethod::kRegexForward
                                         : report::ExpansionMethod::kRegexBackward});
  if (!e.expansions.empty()) e.selected = e.expansions.front().text;
  e.context = t.context;
  return e;
}

// Folds the model's answer into a regex entry. A differing answer is added
// as an "llm" expansion and adopted; regex expansions are kept either way.
void merge_outcome(report::Entry& e, const llm::KeyOutcome& o) {
  if (!o.expansion) return;
  const auto same = std::find_if(e.expansions.begin(), e.expansions.end(), [&](const auto& x) {
    return text::iequals(x.text, *o.expansion);
  });
  if (same == e.expansions.end()) e.expansions.push_back({*o.expansion, report::ExpansionMethod::kLlm});
  e.selected = *o.expansion;
  e.context.reset();
}

std::vector<report::Exclusion> exclusions_of(const extract::AcronymTable& table) {
  std::vector<report::Exclusion> out;
  for (const auto& x : table.exclusions())
    out.push_back({x.occurrence.surface, x.occurrence.canonical,
                   std::string(extract::to_string(x.reason)), x.occurrence.sentence_index});
  return out;
}

PipelineOptions pipeline_options(const RunConfig& config) {
  PipelineOptions opts;
  opts.preprocess = report::uses_preprocessing(config.mode);
  opts.extract.stopword_threshold = config.stopword_threshold;
  try {
    if (config.stopwords_path) opts.extract.stopwords = load_word_set(*config.stopwords_path);
    if (config.abbreviations_path) opts.guard.entries = load_word_list(*config.abbreviations_path);
    if (config.spellcheck) {
      if (!config.dictionary_path) throw Error("--spellcheck needs --dictionary");
      opts.dictionary = load_word_set(*config.dictionary_path);
    }
  } catch (const RunError&) {
    throw;
  } catch (const Error& e) {
    throw RunError(kExitInputError, e.what());
  }
  return opts;
}

std::vector<DocumentProducts> process_all(const RunConfig& config, const PipelineOptions& opts) {
  const std::size_t n = config.inputs.size();
  std::vector<std::string> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = read_input(config.inputs[i], config.converter);

  std::vector<DocumentProducts> docs(n);
  std::size_t workers = config.document_workers ? config.document_workers
                                                : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(n, 1));

  auto one = [&](std::size_t i) {
    try {
      docs[i] = process_document(raw[i], config.inputs[i].filename().string(), opts);
    } catch (const EmptyDocumentError& e) {
      throw RunError(kExitInputError, e.what());
    }
  };
  for (std::size_t start = 0; start < n; start += workers) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = start; i < std::min(n, start + workers); ++i)
      batch.push_back(std::async(std::launch::async, one, i));
    for (auto& f : batch) f.get();
  }
  return docs;
}

}  // namespace

report::RunReport run(const RunConfig& config, const RunOverrides& overrides) {
  if (config.inputs.empty()) throw RunError(kExitInputError, "no input documents");
  if (!(config.stopword_threshold >= 0.0 && config.stopword_threshold <= 1.0))
    throw RunError(kExitInputError, "stopword threshold must be within [0, 1]");
  try {
    config.llm.validate();
  } catch (const std::invalid_argument& e) {
    throw RunError(kExitInputError, e.what());
  }

  // LLM availability is settled before any input is touched.
  TransportSet transport;
  if (report::uses_llm(config.mode)) transport = make_transport(config, overrides);

  const auto opts = pipeline_options(config);
  auto docs = process_all(config, opts);

  SteadyClock steady;
  Clock& clock = overrides.clock ? *overrides.clock : steady;
  std::optional<RateGate> gate;
  if (transport.active) gate.emplace(config.llm.requests_per_minute, clock);

  report::RunReport rep;
  rep.mode = config.mode;
  for (auto& d : docs) {
    report::DocumentReport doc;
    doc.source_id = d.source_id;
    doc.mode = config.mode;
    doc.content_stats = analytics::content_stats(d.clean, d.stream, d.table, opts.extract.stopwords);
    doc.exclusions = exclusions_of(d.table);

    switch (config.mode) {
      case Mode::kRegex:
      case Mode::kRegexPre:
        for (const auto& t : d.table.entries()) doc.entries.push_back(entry_from_table(t));
        break;
      case Mode::kCombined: {
        auto resolved = llm::resolve_all(d.table, config.llm, *transport.active, *gate);
        for (std::size_t i = 0; i < d.table.size(); ++i) {
          auto e = entry_from_table(d.table.entries()[i]);
          merge_outcome(e, resolved.outcomes[i]);
          doc.entries.push_back(std::move(e));
        }
        doc.warnings = std::move(resolved.warnings);
        break;
      }
      case Mode::kLlm:
      case Mode::kLlmPre: {
        const auto passages = llm::chunk_text(d.stream, config.llm.text_chunk_chars);
        auto found = llm::discover_all(passages, config.llm, *transport.active, *gate);
        for (auto& [key, values] : found.pairs) {
          report::Entry e;
          e.canonical = key;
          e.surfaces = {key};
          if (const auto* t = d.table.find(key)) e.occurrence_count = t->occurrences.size();
          for (auto& v : values) e.expansions.push_back({std::move(v), report::ExpansionMethod::kLlm});
          e.selected = e.expansions.front().text;
          doc.entries.push_back(std::move(e));
        }
        doc.warnings = std::move(found.warnings);
        break;
      }
    }
    doc.summary = analytics::result_summary(doc);
    rep.documents.push_back(std::move(doc));
  }
  rep.summary = analytics::corpus_summary(rep.documents, rep.mode);

  if (const auto problems = report::validate(rep); !problems.empty())
    throw RunError(kExitInvariantViolation, "report failed validation: " + problems.front());

  if (!config.output.empty()) {
    try {
      report::write_report(rep, config.output);
    } catch (const Error& e) {
      throw RunError(kExitInputError, e.what());
    }
  }
  return rep;
}

}  // namespace acrox::cli
