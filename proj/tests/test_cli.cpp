#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const fs::path kData = ACROX_DATA_DIR;

int acrox(const std::string& args) {
  const std::string cmd = std::string("\"") + ACROX_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus_args() {
  std::string out;
  for (const char* name : {"chemistry", "ecology", "genomics", "nlp", "physics"})
    out += " --input " + (kData / "corpus" / (std::string(name) + ".txt")).string();
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    work_ = fs::temp_directory_path() /
            (std::string("acrox_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(work_);
    fs::create_directories(work_);
  }
  void TearDown() override { fs::remove_all(work_); }

  fs::path work_;
};

}  // namespace

TEST_F(Cli, HelpAndUsage) {
  EXPECT_EQ(acrox("--help"), 0);
  EXPECT_EQ(acrox(""), 2);
  EXPECT_EQ(acrox("--mode bogus --input x --out y"), 2);
  EXPECT_EQ(acrox("--mode regex --out y"), 2);
  EXPECT_EQ(acrox("--mode combined --input a --out b --replay --record --fixture f"), 2);
}

TEST_F(Cli, RegexPreWritesGolden) {
  const auto out = work_ / "r.json";
  ASSERT_EQ(acrox("--mode regex-pre" + corpus_args() + " --out " + out.string()), 0);
  EXPECT_EQ(slurp(out), slurp(kData / "golden" / "regex-pre.json"));
}

TEST_F(Cli, CombinedReplayWritesGolden) {
  const auto out = work_ / "c.json";
  ASSERT_EQ(acrox("--mode combined" + corpus_args() + " --out " + out.string() + " --fixture " +
                  (kData / "fixtures" / "corpus.jsonl").string() + " --replay --max-concurrency 2"),
            0);
  EXPECT_EQ(slurp(out), slurp(kData / "golden" / "combined.json"));
}

TEST_F(Cli, ExitCodes) {
  const auto out = work_ / "x.json";
  EXPECT_EQ(acrox("--mode regex --input " + (work_ / "missing.txt").string() + " --out " + out.string()), 2);
  EXPECT_EQ(acrox("--mode llm" + corpus_args() + " --out " + out.string()), 3);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(acrox("--mode regex" + corpus_args() + " --out " + out.string() + " --stopword-threshold 2"), 2);
  EXPECT_EQ(acrox("--mode combined" + corpus_args() + " --out " + out.string() + " --chunk-size 0 --fixture " +
                  (kData / "fixtures" / "corpus.jsonl").string() + " --replay"),
            2);
}

TEST_F(Cli, StatsSubcommand) {
  fs::create_directories(work_ / "chemistry");
  fs::create_directories(work_ / "biology");
  const auto a = work_ / "chemistry" / "regex.json";
  const auto b = work_ / "biology" / "regex.json";
  ASSERT_EQ(acrox("--mode regex --input " + (kData / "corpus" / "chemistry.txt").string() + " --out " + a.string()), 0);
  ASSERT_EQ(acrox("--mode regex --input " + (kData / "corpus" / "genomics.txt").string() + " --out " + b.string()), 0);
  const auto csv = work_ / "stats.csv";
  ASSERT_EQ(acrox("stats --reports " + a.string() + " " + b.string() + " --out " + csv.string()), 0);
  const auto body = slurp(csv);
  EXPECT_EQ(body.rfind("domain,mode,documents,", 0), 0u);
  const auto second = body.find('\n') + 1;
  EXPECT_EQ(body.compare(second, 15, "biology,regex,1"), 0);
  EXPECT_NE(body.find("\nchemistry,regex,1,"), std::string::npos);
  EXPECT_EQ(acrox("stats --reports " + (work_ / "none.json").string() + " --out -"), 2);
}
