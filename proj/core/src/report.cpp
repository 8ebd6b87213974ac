#include "acrox/report.hpp"

#include <unistd.h>

#include <fstream>
#include <set>
#include <system_error>

#include <json.hpp>

#include "acrox/analytics.hpp"
#include "acrox/errors.hpp"

namespace acrox::report {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kRegex: return "regex";
    case Mode::kRegexPre: return "regex-pre";
    case Mode::kLlm: return "llm";
    case Mode::kLlmPre: return "llm-pre";
    case Mode::kCombined: return "combined";
  }
  return "regex";
}

Mode parse_mode(std::string_view name) {
  for (Mode m : {Mode::kRegex, Mode::kRegexPre, Mode::kLlm, Mode::kLlmPre, Mode::kCombined})
    if (to_string(m) == name) return m;
  throw Error("unknown mode: " + std::string(name));
}

bool uses_llm(Mode mode) {
  return mode == Mode::kLlm || mode == Mode::kLlmPre || mode == Mode::kCombined;
}

bool uses_preprocessing(Mode mode) {
  return mode == Mode::kRegexPre || mode == Mode::kLlmPre || mode == Mode::kCombined;
}

std::string_view to_string(ExpansionMethod method) {
  switch (method) {
    case ExpansionMethod::kRegexForward: return "regex-forward";
    case ExpansionMethod::kRegexBackward: return "regex-backward";
    case ExpansionMethod::kLlm: return "llm";
  }
  return "llm";
}

namespace {

ExpansionMethod parse_method(std::string_view name) {
  for (auto m : {ExpansionMethod::kRegexForward, ExpansionMethod::kRegexBackward, ExpansionMethod::kLlm})
    if (to_string(m) == name) return m;
  throw Error("unknown expansion method: " + std::string(name));
}

ordered_json optional_string(const std::optional<std::string>& s) {
  return s ? ordered_json(*s) : ordered_json(nullptr);
}

std::optional<std::string> read_optional(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<std::string>();
}

ordered_json summary_json(const ResultSummary& s) {
  ordered_json j = ordered_json::object();
  j["mode"] = to_string(s.mode);
  j["total_acronyms"] = s.total_acronyms;
  j["expansions_found"] = s.expansions_found;
  j["percent_found"] = s.percent_found;
  j["empty"] = s.empty;
  return j;
}

ResultSummary summary_from(const ordered_json& j) {
  ResultSummary s;
  s.mode = parse_mode(j.at("mode").get<std::string>());
  s.total_acronyms = j.at("total_acronyms").get<std::size_t>();
  s.expansions_found = j.at("expansions_found").get<std::size_t>();
  s.percent_found = j.at("percent_found").get<double>();
  s.empty = j.at("empty").get<bool>();
  return s;
}

ordered_json stats_json(const ContentStats& s) {
  ordered_json j = ordered_json::object();
  j["character_count"] = s.character_count;
  j["word_count"] = s.word_count;
  j["sentence_count"] = s.sentence_count;
  j["acronym_occurrence_count"] = s.acronym_occurrence_count;
  j["unique_acronym_count"] = s.unique_acronym_count;
  return j;
}

ContentStats stats_from(const ordered_json& j) {
  ContentStats s;
  s.character_count = j.at("character_count").get<std::size_t>();
  s.word_count = j.at("word_count").get<std::size_t>();
  s.sentence_count = j.at("sentence_count").get<std::size_t>();
  s.acronym_occurrence_count = j.at("acronym_occurrence_count").get<std::size_t>();
  s.unique_acronym_count = j.at("unique_acronym_count").get<std::size_t>();
  return s;
}

}  // namespace

std::string to_json(const RunReport& report) {
  ordered_json root = ordered_json::object();
  root["schema_version"] = kSchemaVersion;
  root["mode"] = to_string(report.mode);
  root["summary"] = summary_json(report.summary);

  ordered_json docs = ordered_json::array();
  for (const auto& d : report.documents) {
    ordered_json doc = ordered_json::object();
    doc["source_id"] = d.source_id;
    doc["mode"] = to_string(d.mode);
    doc["content_stats"] = stats_json(d.content_stats);
    doc["summary"] = summary_json(d.summary);

    ordered_json entries = ordered_json::array();
    for (const auto& e : d.entries) {
      ordered_json entry = ordered_json::object();
      entry["canonical"] = e.canonical;
      entry["surfaces"] = e.surfaces;
      entry["occurrence_count"] = e.occurrence_count;
      entry["status"] = e.resolved() ? "expanded" : "unresolved";
      ordered_json expansions = ordered_json::array();
      for (const auto& x : e.expansions) {
        ordered_json xj = ordered_json::object();
        xj["text"] = x.text;
        xj["method"] = to_string(x.method);
        expansions.push_back(std::move(xj));
      }
      entry["expansions"] = std::move(expansions);
      entry["selected"] = optional_string(e.selected);
      entry["context"] = optional_string(e.context);
      entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);

    ordered_json exclusions = ordered_json::array();
    for (const auto& x : d.exclusions) {
      ordered_json xj = ordered_json::object();
      xj["surface"] = x.surface;
      xj["canonical"] = x.canonical;
      xj["reason"] = x.reason;
      xj["sentence_index"] = x.sentence_index;
      exclusions.push_back(std::move(xj));
    }
    doc["exclusions"] = std::move(exclusions);
    doc["warnings"] = d.warnings;
    docs.push_back(std::move(doc));
  }
  root["documents"] = std::move(docs);
  return root.dump(2) + "\n";
}

RunReport parse_json(std::string_view text) {
  try {
    const auto root = ordered_json::parse(text);
    if (root.at("schema_version").get<std::string>() != kSchemaVersion)
      throw Error("unsupported report schema version");
    RunReport r;
    r.mode = parse_mode(root.at("mode").get<std::string>());
    r.summary = summary_from(root.at("summary"));
    for (const auto& dj : root.at("documents")) {
      DocumentReport d;
      d.source_id = dj.at("source_id").get<std::string>();
      d.mode = parse_mode(dj.at("mode").get<std::string>());
      d.content_stats = stats_from(dj.at("content_stats"));
      d.summary = summary_from(dj.at("summary"));
      for (const auto& ej : dj.at("entries")) {
        Entry e;
        e.canonical = ej.at("canonical").get<std::string>();
        e.surfaces = ej.at("surfaces").get<std::vector<std::string>>();
        e.occurrence_count = ej.at("occurrence_count").get<std::size_t>();
        for (const auto& xj : ej.at("expansions"))
          e.expansions.push_back({xj.at("text").get<std::string>(),
                                  parse_method(xj.at("method").get<std::string>())});
        e.selected = read_optional(ej, "selected");
        e.context = read_optional(ej, "context");
        d.entries.push_back(std::move(e));
      }
      for (const auto& xj : dj.at("exclusions"))
        d.exclusions.push_back({xj.at("surface").get<std::string>(),
                                xj.at("canonical").get<std::string>(),
                                xj.at("reason").get<std::string>(),
                                xj.at("sentence_index").get<std::size_t>()});
      d.warnings = dj.at("warnings").get<std::vector<std::string>>();
      r.documents.push_back(std::move(d));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::vector<std::string> validate(const RunReport& report) {
  std::vector<std::string> problems;
  for (const auto& d : report.documents) {
    const std::string where = "document " + d.source_id + ": ";
    std::set<std::string> seen;
    for (const auto& e : d.entries) {
      if (!seen.insert(e.canonical).second) problems.push_back(where + "duplicate key " + e.canonical);
      if (e.resolved() && e.context) problems.push_back(where + e.canonical + " has expansions and a context");
      if (e.resolved() && !e.selected) problems.push_back(where + e.canonical + " has no selected expansion");
      for (const auto& x : e.expansions)
        if (x.text.empty() || x.text.find_first_of("()") != std::string::npos)
          problems.push_back(where + e.canonical + " has a malformed expansion");
    }
    if (d.summary != analytics::result_summary(d))
      problems.push_back(where + "summary does not match its entries");
    if (d.content_stats.unique_acronym_count > d.content_stats.acronym_occurrence_count)
      problems.push_back(where + "unique acronyms exceed occurrences");
  }
  if (report.summary != analytics::corpus_summary(report.documents, report.mode))
    problems.push_back("corpus summary does not match documents");
  return problems;
}

void write_report(const RunReport& report, const std::filesystem::path& path) {
  const auto body = to_json(report);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write report: " + path.string());
    out << body;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error("cannot write report: " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot move report into place: " + path.string());
  }
}

}  // namespace acrox::report
