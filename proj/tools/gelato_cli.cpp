// gelato: two-level legislative NER pipeline tools.
//
// Subcommands cover the workflow end to end: ingest bill text, tokenize,
// validate tag files, compute dataset statistics, score predictions,
// compute pairwise annotator agreement, emit confusion matrices, run the
// LLM sublabel stage, and run the whole pipeline in one shot.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gelato/chat_client.hpp"
#include "gelato/congress_client.hpp"
#include "gelato/conll.hpp"
#include "gelato/errors.hpp"
#include "gelato/ontology.hpp"
#include "gelato/router.hpp"
#include "gelato/scoring.hpp"
#include "gelato/seqlabel.hpp"
#include "gelato/tokenizer.hpp"

namespace fs = std::filesystem;
using namespace gelato;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitConfig = 2;

void write_file(const std::string& path, const std::string& content) {
  if (const auto parent = fs::path(path).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RepairPolicy parse_policy(const std::string& name) {
  if (name == "conll") return RepairPolicy::Conll;
  if (name == "discard") return RepairPolicy::Discard;
  throw ConfigError("repair policy must be conll or discard, got: " + name);
}

Scheme parse_scheme(const std::string& name) {
  if (name == "bio") return Scheme::BIO;
  if (name == "io") return Scheme::IO;
  throw ConfigError("scheme must be bio or io, got: " + name);
}

// Shared endpoint/runtime options for the sublabel stage. Values resolve in
// the order environment, --config file, explicit flags.
struct SublabelOptions {
  std::string config_path;
  std::string cache_path;
  bool offline = false;
  int jobs = 0;  // 0 means use the endpoint default
  std::size_t window = kContextWindow;
  std::string base_url;
  std::string model;
  std::string api_key;
  double temperature = -1.0;
  int max_tokens = 0;
  int timeout = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file for the endpoint");
    cmd->add_option("--cache", cache_path, "transcript cache (JSONL), created if absent");
    cmd->add_flag("--offline", offline, "serve requests from the cache only");
    cmd->add_option("--jobs", jobs, "max parallel requests");
    cmd->add_option("--window", window, "context tokens on each side of a mention");
    cmd->add_option("--base-url", base_url, "chat endpoint base URL (env LLM_BASE_URL)");
    cmd->add_option("--model", model, "model name (env LLM_MODEL)");
    cmd->add_option("--api-key", api_key, "bearer token (env LLM_API_KEY)");
    cmd->add_option("--temperature", temperature, "sampling temperature (default 0)");
    cmd->add_option("--max-tokens", max_tokens, "max response tokens (default 1024)");
    cmd->add_option("--timeout", timeout, "request timeout in seconds");
  }

  EndpointConfig resolve() const {
    EndpointConfig config = EndpointConfig::from_env();
    if (!config_path.empty()) {
      const auto doc = nlohmann::json::parse(read_file(config_path), nullptr, false);
      if (doc.is_discarded()) throw ConfigError("config file is not JSON: " + config_path);
      config.base_url = doc.value("base_url", config.base_url);
      config.model = doc.value("model", config.model);
      config.api_key = doc.value("api_key", config.api_key);
      config.temperature = doc.value("temperature", config.temperature);
      config.max_tokens = doc.value("max_tokens", config.max_tokens);
      config.timeout_seconds = doc.value("timeout", config.timeout_seconds);
      config.max_parallel = doc.value("jobs", config.max_parallel);
    }
    if (!base_url.empty()) config.base_url = base_url;
    if (!model.empty()) config.model = model;
    if (!api_key.empty()) config.api_key = api_key;
    if (temperature >= 0.0) config.temperature = temperature;
    if (max_tokens > 0) config.max_tokens = max_tokens;
    if (timeout > 0) config.timeout_seconds = timeout;
    if (jobs > 0) config.max_parallel = jobs;
    return config;
  }
};

struct SublabelSummary {
  RouterRun run;
  std::int64_t parsed = 0;
};

SublabelSummary run_sublabel(const std::vector<Document>& docs,
                             const SublabelOptions& options) {
  const auto config = options.resolve();
  std::shared_ptr<TranscriptCache> cache;
  if (!options.cache_path.empty()) {
    cache = std::make_shared<TranscriptCache>(options.cache_path);
  } else if (options.offline) {
    throw ConfigError("--offline requires --cache");
  }
  LlmClient client(config, cache, options.offline);
  SublabelSummary summary;
  summary.run = classify_mentions(docs, client, config.max_parallel, options.window);
  for (const auto& result : summary.run.results) {
    if (result.outcome.kind == SublabelOutcome::Kind::Tag) ++summary.parsed;
  }
  return summary;
}

int validate_manifest(const SplitManifest& manifest, Scheme scheme, bool strict,
                      bool quiet) {
  std::int64_t total = 0;
  for (const auto& doc : manifest.documents) {
    std::vector<std::pair<std::string, Violation>> found;
    if (doc.level1_tags) {
      for (const auto& v :
           validate_tags(*doc.level1_tags, scheme, LabelUniverse::LevelOne)) {
        found.emplace_back("level1", v);
      }
    }
    if (doc.level2_tags) {
      for (const auto& v :
           validate_tags(*doc.level2_tags, scheme, LabelUniverse::LevelTwo)) {
        found.emplace_back("level2", v);
      }
      for (const auto& v : check_layer_consistency(*doc.level1_tags, *doc.level2_tags)) {
        found.emplace_back("cross-layer", v);
      }
    }
    total += static_cast<std::int64_t>(found.size());
    if (!quiet) {
      for (const auto& [layer, v] : found) {
        std::cout << doc.id << " token " << v.index << " [" << layer << "] "
                  << violation_kind_name(v.kind) << ": " << v.tag << "\n";
      }
    }
  }
  std::cout << total << " violation" << (total == 1 ? "" : "s") << " in "
            << manifest.documents.size() << " document"
            << (manifest.documents.size() == 1 ? "" : "s") << "\n";
  if (total > 0 && strict) return kExitViolations;
  return kExitOk;
}

std::vector<BillId> expand_bills(const std::vector<std::string>& bills,
                                 const std::vector<std::string>& ranges) {
  std::vector<BillId> ids;
  for (const auto& text : bills) ids.push_back(BillId::parse(text));
  for (const auto& text : ranges) {
    // 118-hr-100:200 means bill numbers 100 through 200 inclusive.
    const auto colon = text.rfind(':');
    if (colon == std::string::npos) {
      throw ConfigError("range must look like 118-hr-100:200, got: " + text);
    }
    BillId first = BillId::parse(text.substr(0, colon));
    const int last = std::stoi(text.substr(colon + 1));
    for (int n = first.number; n <= last; ++n) {
      BillId id = first;
      id.number = n;
      ids.push_back(id);
    }
  }
  if (ids.empty()) throw ConfigError("no bills requested (use --bill or --range)");
  return ids;
}

int cmd_ingest(const std::vector<std::string>& bills, const std::vector<std::string>& ranges,
               const std::string& out_dir, const std::string& base_url,
               const std::string& api_key, int timeout, int jobs) {
  CongressClientConfig config = CongressClientConfig::from_env();
  if (!base_url.empty()) config.base_url = base_url;
  if (!api_key.empty()) config.api_key = api_key;
  if (timeout > 0) config.timeout_seconds = timeout;
  if (jobs > 0) config.max_parallel = jobs;
  CongressClient client(config);
  const auto ids = expand_bills(bills, ranges);
  const auto texts = client.fetch_bills(ids);
  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto path = (fs::path(out_dir) / (ids[i].str() + ".txt")).string();
    write_file(path, texts[i]);
    std::cout << ids[i].str() << " -> " << path << " (" << texts[i].size()
              << " bytes)\n";
  }
  return kExitOk;
}

int cmd_tokenize(const std::vector<std::string>& inputs, const std::string& out_path,
                 const std::string& keep_file) {
  Tokenizer tokenizer;
  if (!keep_file.empty()) tokenizer.load_keep_file(keep_file);
  SplitManifest manifest;
  manifest.name = fs::path(out_path).stem().string();
  for (const auto& input : inputs) {
    Document doc;
    doc.id = fs::path(input).stem().string();
    doc.tokens = tokenizer.tokenize(read_file(input));
    manifest.documents.push_back(std::move(doc));
  }
  write_split(manifest, out_path);
  std::int64_t tokens = 0;
  for (const auto& doc : manifest.documents) {
    tokens += static_cast<std::int64_t>(doc.tokens.size());
  }
  std::cout << manifest.documents.size() << " documents, " << tokens << " tokens -> "
            << out_path << "\n";
  return kExitOk;
}

int cmd_stats(const std::vector<std::string>& split_paths, const std::string& json_path,
              const std::string& out_path) {
  std::vector<DatasetStats> all;
  for (const auto& path : split_paths) all.push_back(stats(read_split(path)));
  const auto table = stats_table(all);
  std::cout << table;
  if (!out_path.empty()) write_file(out_path, table);
  if (!json_path.empty()) write_file(json_path, stats_json(all));
  return kExitOk;
}

int cmd_score(const std::string& gold_path, const std::string& pred_path,
              const std::string& level, const std::string& repair,
              const std::string& json_path, const std::string& out_path) {
  const auto gold = read_split(gold_path);
  const auto pred = read_split(pred_path);
  std::optional<RepairPolicy> policy;
  if (!repair.empty()) policy = parse_policy(repair);
  const auto report = score(gold.documents, pred.documents,
                            level == "two" ? ScoreLevel::Two : ScoreLevel::One, policy);
  std::cout << report.to_text();
  if (!out_path.empty()) write_file(out_path, report.to_text());
  if (!json_path.empty()) write_file(json_path, report.to_json());
  return kExitOk;
}

int cmd_iaa(const std::string& a_path, const std::string& b_path, const std::string& pair,
            const std::string& repair, const std::string& json_path,
            const std::string& out_path) {
  const auto a = read_split(a_path);
  const auto b = read_split(b_path);
  const auto policy = repair.empty() ? RepairPolicy::Conll : parse_policy(repair);
  const auto io = iaa(a.documents, b.documents, IaaMode::IO, policy);
  const auto level1 = iaa(a.documents, b.documents, IaaMode::Level1, policy);
  const auto label = pair.empty() ? a.name + "-" + b.name : pair;
  const auto table = iaa_table({{label, io.f1, level1.f1}});
  std::cout << table;
  if (!out_path.empty()) write_file(out_path, table);
  if (!json_path.empty()) {
    nlohmann::json doc;
    doc["pair"] = label;
    doc["io_f1"] = io.f1.str();
    doc["level1_f1"] = level1.f1.str();
    write_file(json_path, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_confusion(const std::string& gold_path, const std::string& pred_path,
                  const std::string& repair, const std::string& csv_path,
                  const std::string& out_path) {
  const auto gold = read_split(gold_path);
  const auto pred = read_split(pred_path);
  std::optional<RepairPolicy> policy;
  if (!repair.empty()) policy = parse_policy(repair);
  const auto matrix = confusion(gold.documents, pred.documents, policy);
  std::cout << matrix.to_text();
  if (!out_path.empty()) write_file(out_path, matrix.to_text());
  if (!csv_path.empty()) write_file(csv_path, matrix.to_csv());
  return kExitOk;
}

int cmd_sublabel(const std::string& pred_path, const std::string& out_path,
                 const std::string& results_path, const std::string& repair,
                 const SublabelOptions& options) {
  auto pred = read_split(pred_path);
  if (!repair.empty()) {
    const auto policy = parse_policy(repair);
    for (auto& doc : pred.documents) {
      if (doc.level1_tags) {
        doc.level1_tags = repair_tags(*doc.level1_tags, Scheme::BIO, policy,
                                      LabelUniverse::LevelOne);
      }
    }
  }
  const auto summary = run_sublabel(pred.documents, options);
  SplitManifest out;
  out.name = pred.name;
  out.documents = summary.run.documents;
  write_split(out, out_path);
  if (!results_path.empty()) write_file(results_path, results_jsonl(summary.run.results));
  std::cout << summary.run.results.size() << " mentions: " << summary.parsed
            << " tagged, " << summary.run.refusals << " refusals, "
            << summary.run.transport_errors << " transport errors -> " << out_path
            << "\n";
  return kExitOk;
}

int cmd_pipeline(const std::string& gold_path, const std::string& pred_path,
                 const std::string& out_dir, const std::string& repair, bool strict,
                 const SublabelOptions& options) {
  fs::create_directories(out_dir);
  const auto gold = read_split(gold_path);
  auto pred = read_split(pred_path);

  // Stage 1: validate, repair when asked.
  const int validation = validate_manifest(pred, Scheme::BIO, strict, true);
  if (validation != kExitOk && repair.empty()) return validation;
  if (!repair.empty()) {
    const auto policy = parse_policy(repair);
    for (auto& doc : pred.documents) {
      if (doc.level1_tags) {
        doc.level1_tags = repair_tags(*doc.level1_tags, Scheme::BIO, policy,
                                      LabelUniverse::LevelOne);
      }
    }
  }
  SplitManifest level1_manifest;
  level1_manifest.name = pred.name;
  level1_manifest.documents = pred.documents;
  for (auto& doc : level1_manifest.documents) doc.level2_tags.reset();
  const auto level1_path = (fs::path(out_dir) / "pred.l1.conll").string();
  write_split(level1_manifest, level1_path);

  // Stage 2: sublabel.
  const auto summary = run_sublabel(level1_manifest.documents, options);
  SplitManifest level2_manifest;
  level2_manifest.name = pred.name;
  level2_manifest.documents = summary.run.documents;
  const auto level2_path = (fs::path(out_dir) / "pred.l2.conll").string();
  write_split(level2_manifest, level2_path);
  write_file((fs::path(out_dir) / "results.jsonl").string(),
             results_jsonl(summary.run.results));

  // Stage 3: score both levels and the confusion matrix.
  const auto level1_report =
      score(gold.documents, level1_manifest.documents, ScoreLevel::One);
  const auto level2_report =
      score(gold.documents, level2_manifest.documents, ScoreLevel::Two);
  const auto matrix = confusion(gold.documents, level1_manifest.documents);
  write_file((fs::path(out_dir) / "score.l1.txt").string(), level1_report.to_text());
  write_file((fs::path(out_dir) / "score.l1.json").string(), level1_report.to_json());
  write_file((fs::path(out_dir) / "score.l2.txt").string(), level2_report.to_text());
  write_file((fs::path(out_dir) / "score.l2.json").string(), level2_report.to_json());
  write_file((fs::path(out_dir) / "confusion.txt").string(), matrix.to_text());
  write_file((fs::path(out_dir) / "confusion.csv").string(), matrix.to_csv());

  std::cout << "level one F1 " << level1_report.f1.str() << ", level two F1 "
            << level2_report.f1.str() << " (" << summary.run.refusals
            << " refusals); reports in " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-level legislative NER pipeline"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "fetch bill text from the congress API");
  std::vector<std::string> ingest_bills;
  std::vector<std::string> ingest_ranges;
  std::string ingest_out = "bills";
  std::string ingest_base;
  std::string ingest_key;
  int ingest_timeout = 0;
  int ingest_jobs = 0;
  ingest->add_option("--bill", ingest_bills, "bill id like 118-hr-189 (repeatable)");
  ingest->add_option("--range", ingest_ranges, "bill range like 118-s-100:200");
  ingest->add_option("--out", ingest_out, "output directory");
  ingest->add_option("--base-url", ingest_base, "API base URL (env CONGRESS_BASE_URL)");
  ingest->add_option("--api-key", ingest_key, "API key (env CONGRESS_API_KEY)");
  ingest->add_option("--timeout", ingest_timeout, "request timeout in seconds");
  ingest->add_option("--jobs", ingest_jobs, "max parallel fetches");

  // tokenize
  auto* tok = app.add_subcommand("tokenize", "tokenize raw bill text into a split file");
  std::vector<std::string> tok_inputs;
  std::string tok_out;
  std::string tok_keep;
  tok->add_option("input", tok_inputs, "raw text files")->required()->check(CLI::ExistingFile);
  tok->add_option("--out", tok_out, "output split file")->required();
  tok->add_option("--keep-file", tok_keep, "extra abbreviations to keep whole");

  // validate
  auto* val = app.add_subcommand("validate", "check tag sequences and layer consistency");
  std::string val_file;
  std::string val_scheme = "bio";
  bool val_strict = false;
  bool val_quiet = false;
  val->add_option("file", val_file, "split file")->required()->check(CLI::ExistingFile);
  val->add_option("--scheme", val_scheme, "bio or io");
  val->add_flag("--strict", val_strict, "exit 1 when violations are found");
  val->add_flag("--quiet", val_quiet, "summary only");

  // stats
  auto* st = app.add_subcommand("stats", "dataset statistics per split");
  std::vector<std::string> st_splits;
  std::string st_json;
  std::string st_out;
  st->add_option("--split", st_splits, "split file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  st->add_option("--json", st_json, "write JSON report here");
  st->add_option("--out", st_out, "write the table here");

  // score
  auto* sc = app.add_subcommand("score", "entity-level precision/recall/F1");
  std::string sc_gold;
  std::string sc_pred;
  std::string sc_level = "one";
  std::string sc_repair;
  std::string sc_json;
  std::string sc_out;
  sc->add_option("--gold", sc_gold)->required()->check(CLI::ExistingFile);
  sc->add_option("--pred", sc_pred)->required()->check(CLI::ExistingFile);
  sc->add_option("--level", sc_level, "one or two");
  sc->add_option("--repair", sc_repair, "repair tags first: conll or discard");
  sc->add_option("--json", sc_json);
  sc->add_option("--out", sc_out);

  // iaa
  auto* ia = app.add_subcommand("iaa", "pairwise inter-annotator agreement");
  std::string ia_a;
  std::string ia_b;
  std::string ia_pair;
  std::string ia_repair;
  std::string ia_json;
  std::string ia_out;
  ia->add_option("--a", ia_a)->required()->check(CLI::ExistingFile);
  ia->add_option("--b", ia_b)->required()->check(CLI::ExistingFile);
  ia->add_option("--pair", ia_pair, "row label for the table");
  ia->add_option("--repair", ia_repair, "conll (default) or discard");
  ia->add_option("--json", ia_json);
  ia->add_option("--out", ia_out);

  // confusion
  auto* cf = app.add_subcommand("confusion", "token-level confusion matrix");
  std::string cf_gold;
  std::string cf_pred;
  std::string cf_repair;
  std::string cf_csv;
  std::string cf_out;
  cf->add_option("--gold", cf_gold)->required()->check(CLI::ExistingFile);
  cf->add_option("--pred", cf_pred)->required()->check(CLI::ExistingFile);
  cf->add_option("--repair", cf_repair);
  cf->add_option("--csv", cf_csv, "heatmap-ready CSV");
  cf->add_option("--out", cf_out);

  // sublabel
  auto* sl = app.add_subcommand("sublabel", "LLM level-two classification");
  std::string sl_pred;
  std::string sl_out;
  std::string sl_results;
  std::string sl_repair;
  SublabelOptions sl_options;
  sl->add_option("--pred", sl_pred, "level-1 tagged split")
      ->required()
      ->check(CLI::ExistingFile);
  sl->add_option("--out", sl_out, "output split with level-2 tags")->required();
  sl->add_option("--results", sl_results, "JSONL audit log");
  sl->add_option("--repair", sl_repair, "repair level-1 tags first");
  sl_options.attach(sl);

  // pipeline
  auto* pl = app.add_subcommand("pipeline", "validate, sublabel, score, report");
  std::string pl_gold;
  std::string pl_pred;
  std::string pl_outdir = "pipeline-out";
  std::string pl_repair;
  bool pl_strict = false;
  SublabelOptions pl_options;
  pl->add_option("--gold", pl_gold)->required()->check(CLI::ExistingFile);
  pl->add_option("--pred", pl_pred)->required()->check(CLI::ExistingFile);
  pl->add_option("--outdir", pl_outdir);
  pl->add_option("--repair", pl_repair, "repair predictions before sublabeling");
  pl->add_flag("--strict", pl_strict, "stop on validation violations");
  pl_options.attach(pl);

  // ontology dump (documentation surface)
  auto* onto = app.add_subcommand("ontology", "print the label system as JSON");
  std::string onto_out;
  onto->add_option("--out", onto_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitConfig;
  }

  try {
    if (*ingest) {
      return cmd_ingest(ingest_bills, ingest_ranges, ingest_out, ingest_base, ingest_key,
                        ingest_timeout, ingest_jobs);
    }
    if (*tok) return cmd_tokenize(tok_inputs, tok_out, tok_keep);
    if (*val) {
      return validate_manifest(read_split(val_file), parse_scheme(val_scheme), val_strict,
                               val_quiet);
    }
    if (*st) return cmd_stats(st_splits, st_json, st_out);
    if (*sc) return cmd_score(sc_gold, sc_pred, sc_level, sc_repair, sc_json, sc_out);
    if (*ia) return cmd_iaa(ia_a, ia_b, ia_pair, ia_repair, ia_json, ia_out);
    if (*cf) return cmd_confusion(cf_gold, cf_pred, cf_repair, cf_csv, cf_out);
    if (*sl) return cmd_sublabel(sl_pred, sl_out, sl_results, sl_repair, sl_options);
    if (*pl) {
      return cmd_pipeline(pl_gold, pl_pred, pl_outdir, pl_repair, pl_strict, pl_options);
    }
    if (*onto) {
      const auto doc = ontology_json();
      std::cout << doc;
      if (!onto_out.empty()) write_file(onto_out, doc);
      return kExitOk;
    }
  } catch (const ConfigError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitConfig;
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitViolations;
  }
  return kExitOk;
}
