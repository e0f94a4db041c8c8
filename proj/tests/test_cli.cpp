#include <doctest.h>

#include <httplib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gelato/conll.hpp"
#include "support/generators.hpp"

namespace fs = std::filesystem;
using namespace gelato;
using gelato::testing::Rng;

namespace {

std::string cli() {
  const char* env = std::getenv("GELATO_CLI");
  REQUIRE(env != nullptr);
  return env;
}

fs::path fixtures() {
  const char* env = std::getenv("GELATO_FIXTURES");
  REQUIRE(env != nullptr);
  return fs::path(env);
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "gelato-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, std::string* output = nullptr) {
  static int counter = 0;
  const auto out_path = scratch() / ("out" + std::to_string(counter++) + ".txt");
  const auto command =
      '"' + cli() + "\" " + args + " > \"" + out_path.string() + "\" 2>&1";
  const int status = std::system(command.c_str());
  if (output) {
    std::ifstream in(out_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *output = buffer.str();
  }
  return WEXITSTATUS(status);
}

std::string file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string quoted(const fs::path& path) { return '"' + path.string() + '"'; }

}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run("definitely-not-a-subcommand") == 2);
  CHECK(run("score") == 2);  // missing required flags
  CHECK(run("--help") == 0);
}

TEST_CASE("validate exit codes: clean 0, violations 1 only with --strict") {
  const auto gold = fixtures() / "replay" / "gold.conll";
  CHECK(run("validate --strict " + quoted(gold)) == 0);

  auto manifest = read_split(gold.string());
  (*manifest.documents[0].level1_tags)[0] = "I-Person";
  const auto broken = scratch() / "broken.conll";
  write_split(manifest, broken.string());
  std::string output;
  CHECK(run("validate " + quoted(broken), &output) == 0);
  CHECK(run("validate --strict " + quoted(broken), &output) == 1);
  CHECK(output.find("invalid-transition") != std::string::npos);
}

TEST_CASE("tokenize produces a split file with the expected tokens") {
  const auto raw = scratch() / "118-hr-189.txt";
  {
    std::ofstream out(raw);
    out << "Mr. Cardin introduced (19 U.S.C. 1677).\n";
  }
  const auto out_path = scratch() / "tokens.conll";
  CHECK(run("tokenize " + quoted(raw) + " --out " + quoted(out_path)) == 0);
  const auto manifest = read_split(out_path.string());
  REQUIRE(manifest.documents.size() == 1);
  CHECK(manifest.documents[0].id == "118-hr-189");
  CHECK(manifest.documents[0].tokens ==
        std::vector<std::string>{"Mr", ".", "Cardin", "introduced", "(", "19", "U.S.C.",
                                 "1677", ")", "."});
}

TEST_CASE("offline sublabel with a full cache needs no network and exits 0") {
  const auto dir = fixtures() / "replay";
  const auto out_path = scratch() / "l2.conll";
  std::string output;
  const int status = run("sublabel --pred " + quoted(dir / "pred.l1.conll") + " --out " +
                             quoted(out_path) + " --cache " +
                             quoted(dir / "transcript.jsonl") + " --offline --config " +
                             quoted(dir / "endpoint.json"),
                         &output);
  CHECK(status == 0);
  CHECK(output.find("0 transport errors") != std::string::npos);
  CHECK(file_bytes(out_path) == file_bytes(dir / "golden.l2.conll"));
}

TEST_CASE("offline sublabel without a cache is a configuration error") {
  const auto dir = fixtures() / "replay";
  CHECK(run("sublabel --pred " + quoted(dir / "pred.l1.conll") + " --out " +
            quoted(scratch() / "x.conll") + " --offline") == 2);
}

TEST_CASE("pipeline equals its stages byte-for-byte") {
  const auto dir = fixtures() / "replay";
  const auto pipe_dir = scratch() / "pipe";
  CHECK(run("pipeline --gold " + quoted(dir / "gold.conll") + " --pred " +
            quoted(dir / "pred.l1.conll") + " --outdir " + quoted(pipe_dir) +
            " --cache " + quoted(dir / "transcript.jsonl") + " --offline --config " +
            quoted(dir / "endpoint.json")) == 0);

  // Stage-wise: sublabel, then score both levels, then confusion.
  const auto stage_l2 = scratch() / "stage.l2.conll";
  CHECK(run("sublabel --pred " + quoted(dir / "pred.l1.conll") + " --out " +
            quoted(stage_l2) + " --cache " + quoted(dir / "transcript.jsonl") +
            " --offline --config " + quoted(dir / "endpoint.json")) == 0);
  const auto stage_score = scratch() / "stage.l2.json";
  CHECK(run("score --gold " + quoted(dir / "gold.conll") + " --pred " + quoted(stage_l2) +
            " --level two --json " + quoted(stage_score)) == 0);
  const auto stage_confusion = scratch() / "stage.confusion.csv";
  CHECK(run("confusion --gold " + quoted(dir / "gold.conll") + " --pred " +
            quoted(dir / "pred.l1.conll") + " --csv " + quoted(stage_confusion)) == 0);

  CHECK(file_bytes(pipe_dir / "pred.l2.conll") == file_bytes(stage_l2));
  CHECK(file_bytes(pipe_dir / "score.l2.json") == file_bytes(stage_score));
  CHECK(file_bytes(pipe_dir / "confusion.csv") == file_bytes(stage_confusion));

  // Reruns are bit-identical (replay determinism).
  const auto pipe_dir2 = scratch() / "pipe2";
  CHECK(run("pipeline --gold " + quoted(dir / "gold.conll") + " --pred " +
            quoted(dir / "pred.l1.conll") + " --outdir " + quoted(pipe_dir2) +
            " --cache " + quoted(dir / "transcript.jsonl") + " --offline --config " +
            quoted(dir / "endpoint.json")) == 0);
  CHECK(file_bytes(pipe_dir / "score.l2.json") == file_bytes(pipe_dir2 / "score.l2.json"));
  CHECK(file_bytes(pipe_dir / "pred.l2.conll") == file_bytes(pipe_dir2 / "pred.l2.conll"));
}

TEST_CASE("iaa subcommand prints the two-column table") {
  const auto dir = fixtures() / "replay";
  std::string output;
  CHECK(run("iaa --a " + quoted(dir / "gold.conll") + " --b " +
            quoted(dir / "pred.l1.conll") + " --pair 1-2", &output) == 0);
  CHECK(output.find("IO F1") != std::string::npos);
  CHECK(output.find("Level 1 F1") != std::string::npos);
  CHECK(output.find("1-2") != std::string::npos);
}

TEST_CASE("ontology subcommand emits the label system") {
  std::string output;
  CHECK(run("ontology", &output) == 0);
  CHECK(output.find("\"LegislativeBody\"") != std::string::npos);
  CHECK(output.find("\"Non-ProtectedClass\"") != std::string::npos);
}

TEST_CASE("ingest fetches bills through the API surface") {
  httplib::Server server;
  server.Get("/v3/bill/118/s/104/text",
             [](const httplib::Request& req, httplib::Response& res) {
               if (req.get_param_value("api_key") != "k") {
                 res.status = 403;
                 return;
               }
               nlohmann::json payload;
               payload["textVersions"] = nlohmann::json::array(
                   {{{"type", "Introduced in Senate"},
                     {"formats", nlohmann::json::array(
                                     {{{"type", "Formatted Text"},
                                       {"url", "/118/bills/s104.htm"}}})}}});
               res.set_content(payload.dump(), "application/json");
             });
  server.Get("/118/bills/s104.htm", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("<pre>S. 104 Introduced in Senate (IS)</pre>", "text/html");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread listener([&server] { server.listen_after_bind(); });
  server.wait_until_ready();

  const auto out_dir = scratch() / "bills";
  const int status = run("ingest --bill 118-s-104 --out " + quoted(out_dir) +
                         " --base-url http://127.0.0.1:" + std::to_string(port) +
                         " --api-key k");
  server.stop();
  listener.join();
  CHECK(status == 0);
  CHECK(file_bytes(out_dir / "118-s-104.txt") == "S. 104 Introduced in Senate (IS)");
}

TEST_CASE("ingest without an api key is a configuration error") {
  // Guard against an ambient key leaking into the subprocess.
  const int status = run("ingest --bill 118-s-104 --out " +
                         quoted(scratch() / "nokey") + " --api-key \"\"");
  if (std::getenv("CONGRESS_API_KEY") == nullptr) CHECK(status == 2);
}
