#include "gelato/router.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <nlohmann/json.hpp>

#include "gelato/errors.hpp"
#include "gelato/seqlabel.hpp"

namespace gelato {

namespace {

struct Job {
  std::size_t doc_index = 0;
  SublabelRequest request;
};

void run_job(const Job& job, SublabelClient& client, SublabelResult& slot) {
  SublabelResult result;
  result.request = job.request;
  const auto messages = build_prompt(job.request);
  const auto start = std::chrono::steady_clock::now();
  try {
    result.raw_response = client.complete(messages.system, messages.user);
    result.outcome = parse_response(result.raw_response, job.request.routing);
  } catch (const Error& error) {
    result.outcome.kind = SublabelOutcome::Kind::TransportError;
    result.outcome.detail = error.what();
  }
  result.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  slot = std::move(result);
}

}  // namespace

RouterRun classify_mentions(const std::vector<Document>& docs, SublabelClient& client,
                            int max_parallel, std::size_t window) {
  if (max_parallel < 1) throw ConfigError("max_parallel must be >= 1");
  std::vector<Job> jobs;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    if (!docs[d].level1_tags) {
      throw AlignmentError(docs[d].id + " (missing level-1 tags)");
    }
    for (const auto& mention : decode_level1(*docs[d].level1_tags, Scheme::BIO)) {
      jobs.push_back(Job{d, build_request(docs[d], mention, window)});
    }
  }

  std::vector<SublabelResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      run_job(jobs[i], client, results[i]);
    }
  };
  const int threads = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(max_parallel), jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  RouterRun run;
  run.documents = docs;
  // The level-2 layer mirrors the level-1 B/I/O skeleton exactly.
  std::vector<std::vector<Span>> spans(docs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& result = results[i];
    std::string label = kUnresolvedSublabel;
    if (result.outcome.kind == SublabelOutcome::Kind::Tag) {
      label = std::string(prompt_name(*result.outcome.tag));
    } else if (result.outcome.kind == SublabelOutcome::Kind::Refusal) {
      run.refusals += 1;
    } else {
      run.transport_errors += 1;
    }
    spans[jobs[i].doc_index].push_back(
        Span{result.request.mention.start, result.request.mention.end, label});
  }
  for (std::size_t d = 0; d < docs.size(); ++d) {
    run.documents[d].level2_tags =
        encode_tags(spans[d], docs[d].tokens.size(), Scheme::BIO);
  }
  run.results = std::move(results);
  return run;
}

std::string results_jsonl(const std::vector<SublabelResult>& results) {
  std::string out;
  for (const auto& result : results) {
    nlohmann::json record;
    record["doc_id"] = result.request.doc_id;
    record["start"] = result.request.mention.start;
    record["end"] = result.request.mention.end;
    record["level1"] = std::string(name(result.request.mention.level1));
    record["mention"] = result.request.mention_text;
    switch (result.outcome.kind) {
      case SublabelOutcome::Kind::Tag:
        record["outcome"] = "tag";
        record["tag"] = std::string(prompt_name(*result.outcome.tag));
        break;
      case SublabelOutcome::Kind::Refusal:
        record["outcome"] = "refusal";
        record["tag"] = result.outcome.detail;
        break;
      case SublabelOutcome::Kind::TransportError:
        record["outcome"] = "transport-error";
        record["detail"] = result.outcome.detail;
        break;
    }
    record["latency_ms"] = result.latency_ms;
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace gelato
