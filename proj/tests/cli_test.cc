// Copyright 2026 The EdgeTok Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Drives the edgetok binary as a subprocess.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "edgetok/corpus.h"
#include "edgetok/obj_io.h"
#include "edgetok/token_file.h"
#include "edgetok/tokenizer.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace edgetok {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
  json Json() const { return json::parse(out); }
};

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  Result Run(const std::string &args, const std::string &env = "") const {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string command = env + " " + EDGETOK_CLI_PATH + " " + args +
                                " >" + out.string() + " 2>" + err.string();
    const int status = std::system(command.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, Slurp(out),
            Slurp(err)};
  }

  static std::string Data(const std::string &name) {
    return (fs::path(EDGETOK_TEST_DATA_DIR) / name).string();
  }
  std::string Tmp(const std::string &name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, TokenizeGolden) {
  const Result r = Run("tokenize " + Data("golden.obj") + " -o " +
                       Tmp("g.ertk"));
  ASSERT_EQ(r.code, 0) << r.err;
  const json stats = r.Json();
  EXPECT_EQ(stats["tokens"], 46);
  EXPECT_EQ(stats["subsequences"], 2);
  EXPECT_EQ(stats["faces"], 8);
  EXPECT_EQ(stats["vertices"], 9);
  for (const char *field : {"tokens_per_face", "compression_ratio",
                            "tokenize_seconds"}) {
    EXPECT_TRUE(stats.contains(field)) << field;
  }
  const TokenSequence seq = ReadTokenFile(Tmp("g.ertk"));
  EXPECT_EQ(seq.ids.size(), 46u);
  EXPECT_EQ(seq, Tokenize(PrepareMesh(ReadObjFile(Data("golden.obj")))));
}

TEST_F(CliTest, TokenizeAtResolution128) {
  const Result r = Run("tokenize " + Data("golden.obj") +
                       " -r 128 --format json -o " + Tmp("g.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const json ids = json::parse(Slurp(Tmp("g.json")));
  ASSERT_EQ(ids.size(), 46u);
  EXPECT_EQ(ids.front(), 128 + 3);
  EXPECT_EQ(ids.back(), 128 + 4);
  for (const json &id : ids) EXPECT_LT(id.get<int>(), 134);
  for (std::size_t i = 2; i < 11; ++i) EXPECT_LT(ids[i].get<int>(), 128);
}

TEST_F(CliTest, TokenizeErrors) {
  Result r = Run("tokenize " + Data("nonmanifold.obj"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("0->1"), std::string::npos) << r.err;

  std::ofstream(Tmp("bad.obj")) << "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 x\n";
  r = Run("tokenize " + Tmp("bad.obj"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;

  EXPECT_EQ(Run("tokenize " + Tmp("missing.obj")).code, 3);
  EXPECT_EQ(Run("tokenize " + Data("golden.obj") + " -o " +
                Tmp("no/such/dir/x.ertk"))
                .code,
            3);
}

TEST_F(CliTest, DetokenizeGolden) {
  ASSERT_EQ(Run("tokenize " + Data("golden.obj") + " -o " + Tmp("g.ertk"))
                .code,
            0);
  const Result r = Run("detokenize " + Tmp("g.ertk") + " -o " + Tmp("g.obj"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.Json()["vertices"], 9);
  EXPECT_EQ(r.Json()["faces"], 8);
  const RawMesh back = ReadObjFile(Tmp("g.obj"));
  EXPECT_EQ(back.vertices.size(), 9u);
  EXPECT_EQ(back.faces.size(), 8u);
}

TEST_F(CliTest, DetokenizeRejectsBadStreams) {
  TokenSequence seq = Tokenize(PrepareMesh(MakeGoldenMesh()));
  seq.ids[20] = Vocabulary(512).pad();
  WriteTokenFile(Tmp("pad.ertk"), seq);
  Result r = Run("detokenize " + Tmp("pad.ertk"));
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("position 20"), std::string::npos) << r.err;

  WriteTokenFile(Tmp("empty.ertk"), TokenSequence{512, {}});
  EXPECT_EQ(Run("detokenize " + Tmp("empty.ertk")).code, 4);

  std::ofstream(Tmp("junk.ertk")) << "not a token file";
  EXPECT_EQ(Run("detokenize " + Tmp("junk.ertk")).code, 3);
}

TEST_F(CliTest, RoundTrip) {
  Result r = Run("roundtrip " + Data("golden.obj"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.Json()["tokens"], 46);
  EXPECT_EQ(r.Json()["equal"], true);
  for (const char *name : {"cube_quads.obj", "octahedron.obj"}) {
    r = Run("roundtrip " + Data(name));
    EXPECT_EQ(r.code, 0) << name << r.err;
    EXPECT_EQ(r.Json()["orientation_consistent"], true);
  }
  WriteObjFile(Tmp("tet.obj"), MakeTetrahedron());
  r = Run("roundtrip " + Tmp("tet.obj"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.Json()["faces"], 4);
  EXPECT_GE(r.Json()["subsequences"].get<int>(), 1);
}

TEST_F(CliTest, Mask) {
  Result r = Run("mask --ids 515");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.Json(), json::array({512}));

  r = Run("mask --ids 515,512");
  ASSERT_EQ(r.code, 0);
  ASSERT_EQ(r.Json().size(), 512u);
  EXPECT_EQ(r.Json().front(), 0);
  EXPECT_EQ(r.Json().back(), 511);

  r = Run("mask --ids 131,128 -r 128");
  EXPECT_EQ(r.Json().size(), 128u);

  ASSERT_EQ(Run("tokenize " + Data("golden.obj") + " -o " + Tmp("g.ertk"))
                .code,
            0);
  r = Run("mask -i " + Tmp("g.ertk") + " --bitset " + Tmp("mask.bin"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.Json(), json::array());
  EXPECT_EQ(fs::file_size(Tmp("mask.bin")), (518u + 7) / 8);

  r = Run("mask -i " + Tmp("g.ertk") + " --prefix-length 11");
  EXPECT_EQ(r.Json(), json::array({512, 513, 514, 516}));

  EXPECT_EQ(Run("mask --ids 512").code, 4);
}

TEST_F(CliTest, BenchOnGoldenOnly) {
  fs::create_directories(Tmp("corpus"));
  fs::copy_file(Data("golden.obj"), Tmp("corpus/golden.obj"));
  const Result r = Run("bench " + Tmp("corpus") + " --jobs 1");
  ASSERT_EQ(r.code, 0) << r.err;
  const json report = r.Json();
  EXPECT_EQ(report["corpus"]["meshes"], 1);
  const json &rows = report["tokenizers"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["name"], "ours");
  EXPECT_NEAR(rows[0]["compression_ratio"].get<double>(), 0.611, 1e-3);
  EXPECT_EQ(rows[0]["subsequences"], 2.0);
  EXPECT_EQ(rows[1]["name"], "fixed-side");
  EXPECT_EQ(rows[1]["subsequences"], 5.0);
  EXPECT_EQ(rows[2]["name"], "naive");
  EXPECT_EQ(rows[2]["compression_ratio"], 1.0);
  EXPECT_EQ(rows[2]["tokens_per_face"], 9.0);
  EXPECT_NE(r.err.find("fixed-side"), std::string::npos);
}

TEST_F(CliTest, BenchStatisticsIndependentOfJobs) {
  ASSERT_EQ(Run("gen-corpus " + Tmp("corpus")).code, 0);
  const Result one = Run("bench " + Tmp("corpus") + " --jobs 1");
  const Result four = Run("bench " + Tmp("corpus"), "EDGETOK_JOBS=4");
  ASSERT_EQ(one.code, 0) << one.err;
  ASSERT_EQ(four.code, 0) << four.err;
  EXPECT_EQ(four.Json()["jobs"], 4);
  for (int row = 0; row < 3; ++row) {
    for (const char *field :
         {"compression_ratio", "subsequences", "tokens_per_face"}) {
      EXPECT_EQ(one.Json()["tokenizers"][row][field],
                four.Json()["tokenizers"][row][field]);
    }
  }
}

TEST_F(CliTest, BenchInvalidInputs) {
  fs::create_directories(Tmp("corpus"));
  EXPECT_EQ(Run("bench " + Tmp("corpus")).code, 3);
  fs::copy_file(Data("nonmanifold.obj"), Tmp("corpus/nonmanifold.obj"));
  EXPECT_EQ(Run("bench " + Tmp("corpus")).code, 2);
  fs::copy_file(Data("golden.obj"), Tmp("corpus/golden.obj"));
  const Result r = Run("bench " + Tmp("corpus") + " --skip-invalid");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.Json()["corpus"]["skipped"], 1);
  EXPECT_EQ(r.Json()["corpus"]["meshes"], 1);
}

TEST_F(CliTest, PrepIsDeterministicAndScales) {
  fs::create_directories(Tmp("in"));
  for (const char *name :
       {"golden.obj", "cube_quads.obj", "octahedron.obj", "nonmanifold.obj"}) {
    fs::copy_file(Data(name), Tmp(std::string("in/") + name));
  }
  const std::string flags = " --scale-jitter 0.75 0.95 --rotation 30 --seed 3";
  Result r = Run("prep " + Tmp("in") + " -o " + Tmp("a") + flags + " -j 1");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.Json()["written"], 3);
  EXPECT_EQ(r.Json()["skipped"], 1);
  ASSERT_EQ(Run("prep " + Tmp("in") + " -o " + Tmp("b") + flags + " -j 3")
                .code,
            0);
  for (const char *name : {"golden.obj", "cube_quads.obj", "octahedron.obj"}) {
    const std::string a = Slurp(Tmp(std::string("a/") + name));
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, Slurp(Tmp(std::string("b/") + name))) << name;
    // Longest side within the jitter range, up to one grid cell.
    const RawMesh mesh = ReadObjFile(Tmp(std::string("a/") + name));
    double extent = 0.0;
    for (int k = 0; k < 3; ++k) {
      double lo = 1.0, hi = 0.0;
      for (const Vec3d &p : mesh.vertices) {
        lo = std::min(lo, p[k]);
        hi = std::max(hi, p[k]);
      }
      extent = std::max(extent, hi - lo);
    }
    EXPECT_GE(extent, 0.75 - 1.0 / 512);
    EXPECT_LE(extent, 0.95 + 1.0 / 512);
  }
  EXPECT_EQ(Run("prep " + Tmp("in") + " -o " + Tmp("c") +
                " --scale-jitter 0.9 0.8")
                .code,
            64);
}

}  // namespace
}  // namespace edgetok
