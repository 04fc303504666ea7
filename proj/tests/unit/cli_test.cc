// Copyright 2026 The Taxsem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the taxsem binary.

#include <string>

#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "taxsem/util.h"

namespace taxsem {
namespace {

using testing::CliPath;
using testing::SourcePath;

int Exec(const std::string &command, std::string *out = nullptr) {
  return testing::Run(command, out);
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new std::string(testing::ScratchDir("cli_test"));
    dict_ = new std::string(*dir_ + "/dict.tsv");
    ASSERT_EQ(Exec(Cmd("-q build-encodings --wordnet " + testing::WordNetDir() +
                      " --out " + *dict_)),
              0);
  }

  static std::string Cmd(const std::string &args) {
    return CliPath() + " " + args + " 2>/dev/null";
  }
  static std::string WithDict(const std::string &sub,
                              const std::string &args) {
    return Cmd("-q " + sub + " --dict " + *dict_ + " " + args);
  }

  static std::string *dir_;
  static std::string *dict_;
};

std::string *CliTest::dir_ = nullptr;
std::string *CliTest::dict_ = nullptr;

TEST_F(CliTest, BuildMatchesLibrary) {
  EXPECT_EQ(ReadFile(*dict_), testing::Dict().Serialize());
}

TEST_F(CliTest, HelpAndUsageErrors) {
  std::string out;
  EXPECT_EQ(Exec(Cmd("--help"), &out), 0);
  EXPECT_NE(out.find("convert"), std::string::npos);
  EXPECT_EQ(Exec(Cmd("")), 1);
  EXPECT_EQ(Exec(Cmd("convert --bogus")), 1);
  EXPECT_EQ(Exec(WithDict("convert", "--from xml /dev/null")), 1);
  EXPECT_EQ(Exec(WithDict("interpret", "--format lps /dev/null")), 1);
}

TEST_F(CliTest, DataErrorsExitTwo) {
  EXPECT_EQ(Exec(Cmd("-q convert --dict /nonexistent/dict.tsv /dev/null")), 2);
  EXPECT_EQ(Exec(WithDict("convert", SourcePath("data/examples/birdwatcher.lps") +
                                        " --from wid")),
            2);
}

TEST_F(CliTest, ConvertJohnLaughs) {
  std::string out;
  ASSERT_EQ(Exec(WithDict("convert", "--from lps --to wid " +
                                        SourcePath("data/examples/john_laughs.lps")),
                &out),
            0);
  EXPECT_EQ(out, ReadFile(SourcePath("data/examples/john_laughs.wid")));
  ASSERT_EQ(Exec(WithDict("convert", "--from lps --to tax " +
                                        SourcePath("data/examples/john_laughs.lps")),
                &out),
            0);
  EXPECT_EQ(out, ReadFile(SourcePath("data/examples/john_laughs.tax")));
}

TEST_F(CliTest, InterpretJohnLaughs) {
  std::string out;
  std::string trace = *dir_ + "/trace.tsv";
  ASSERT_EQ(Exec(WithDict("interpret", "--trace " + trace + " " +
                                          SourcePath("data/examples/john_laughs.tax")),
                &out),
            0);
  EXPECT_EQ(out, ReadFile(SourcePath("data/examples/john_laughs.lps")));
  EXPECT_EQ(ReadFile(trace).rfind("block\tline\tinput\tdecision", 0), 0u);
}

TEST_F(CliTest, ValidateBirdwatcher) {
  std::string out;
  ASSERT_EQ(Exec(WithDict("validate", SourcePath("data/examples/birdwatcher.lps")),
                &out),
            0);
  EXPECT_EQ(out, "blocks 1 ill_formed 1 IFR 100.0\n");
}

TEST_F(CliTest, SmatchSelf) {
  std::string john = SourcePath("data/examples/john_laughs.lps");
  std::string out;
  ASSERT_EQ(Exec(WithDict("smatch", "--gold " + john + " --pred " + john),
                &out),
            0);
  EXPECT_EQ(out, "P 100.0 R 100.0 F1 100.0 IFR 0.0\n");
  ASSERT_EQ(Exec(WithDict("smatch", "--mode soft --gold " + john +
                                       " --pred " + john),
                &out),
            0);
  EXPECT_EQ(out, "P 100.0 R 100.0 F1 100.0 IFR 0.0\n");
}

TEST_F(CliTest, JsonMirror) {
  std::string john = SourcePath("data/examples/john_laughs.lps");
  std::string report = *dir_ + "/items.tsv";
  ASSERT_EQ(Exec(WithDict("smatch", "--gold " + john + " --pred " + john +
                                       " --report " + report) +
                " && " + Cmd("--json -q smatch --dict " + *dict_ + " --gold " +
                             john + " --pred " + john + " --report " +
                             report)),
            0);
  EXPECT_NE(ReadFile(report + ".json").find("\"index\""), std::string::npos);
}

TEST_F(CliTest, Similarity) {
  std::string out;
  ASSERT_EQ(Exec(WithDict("similarity", "hobby.n.03 hobby.n.03"), &out), 0);
  EXPECT_EQ(out, "1.000\n");
  ASSERT_EQ(Exec(Cmd("similarity --source wordnet --wordnet " +
                    testing::WordNetDir() + " hobby.n.03 hobby.n.01"),
                &out),
            0);
  EXPECT_EQ(out, "0.087\n");
}

TEST_F(CliTest, ConceptIdAndSenses) {
  std::string pairs = *dir_ + "/pairs.tsv";
  WriteFileAtomic(pairs,
                  "category\tgold\tpredicted\nnoun\thobby.n.03\thobby.n.03\n");
  std::string out;
  ASSERT_EQ(Exec(WithDict("concept-id", "--pairs " + pairs), &out), 0);
  EXPECT_EQ(out, "system\tcategory\titems\tmean\n-\tnoun\t1\t1.000\n");
  ASSERT_EQ(Exec(Cmd("sense-dist " + SourcePath("data/examples/john_laughs.lps")),
                &out),
            0);
  EXPECT_EQ(out, "sense\tcount\n01\t1\n02\t1\n08\t1\n");
}

}  // namespace
}  // namespace taxsem
