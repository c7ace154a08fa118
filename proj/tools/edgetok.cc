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
// Command-line front end. Machine-readable JSON goes to stdout, diagnostics
// to stderr. Exit codes: 1 parse error, 2 mesh or non-manifold error, 3 I/O
// error, 4 ungrammatical token sequence, 5 round-trip mismatch, 64 bad
// argument values.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgetok/augment.h"
#include "edgetok/batch.h"
#include "edgetok/bench_harness.h"
#include "edgetok/corpus.h"
#include "edgetok/detokenizer.h"
#include "edgetok/errors.h"
#include "edgetok/grammar.h"
#include "edgetok/halfedge.h"
#include "edgetok/obj_io.h"
#include "edgetok/token_file.h"
#include "edgetok/tokenizer.h"
#include "nlohmann/json.hpp"

namespace edgetok {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

enum ExitCode {
  kOk = 0,
  kParse = 1,
  kMesh = 2,
  kIo = 3,
  kGrammar = 4,
  kMismatch = 5,
  kUsage = 64,
  kInternal = 70,
};

void PrintJson(const json &j) { std::cout << j.dump(2) << std::endl; }

json StatsJson(const TraversalStats &stats) {
  return {{"faces", stats.faces},
          {"vertices", stats.vertices},
          {"tokens", stats.token_count},
          {"subsequences", stats.subsequences},
          {"tokens_per_face", stats.tokens_per_face},
          {"compression_ratio", stats.compression_ratio},
          {"tokenize_seconds", stats.tokenize_seconds}};
}

QuantizedMesh LoadMesh(const fs::path &path, int32_t resolution,
                       bool prenormalized) {
  const RawMesh raw = ReadObjFile(path);
  if (prenormalized) return Clean(Quantize(raw, resolution));
  return PrepareMesh(raw, resolution);
}

struct Timed {
  TokenSequence seq;
  double seconds = 0.0;
};

Timed TimedTokenize(TokenizerKind kind, const QuantizedMesh &mesh) {
  const auto start = std::chrono::steady_clock::now();
  Timed out{TokenizeWith(kind, mesh)};
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

void WriteBytes(const fs::path &path, const std::vector<uint8_t> &bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

void WriteText(const fs::path &path, const std::string &text) {
  WriteBytes(path, std::vector<uint8_t>(text.begin(), text.end()));
}

std::vector<fs::path> ObjFiles(const fs::path &dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".obj") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

// tokenize ------------------------------------------------------------------

struct TokenizeArgs {
  std::string input;
  std::string output;
  std::string format = "ertk";
  std::string tokenizer = "ours";
  int32_t resolution = kDefaultResolution;
  bool prenormalized = false;
};

TokenizerKind ParseKind(const std::string &name) {
  for (TokenizerKind kind : {TokenizerKind::kEdgeBreaker,
                             TokenizerKind::kFixedSide, TokenizerKind::kNaive}) {
    if (TokenizerName(kind) == name) return kind;
  }
  throw Error("unknown tokenizer " + name);
}

int RunTokenize(const TokenizeArgs &args) {
  const QuantizedMesh mesh =
      LoadMesh(args.input, args.resolution, args.prenormalized);
  const Timed t = TimedTokenize(ParseKind(args.tokenizer), mesh);
  if (!args.output.empty()) {
    if (args.format == "json") {
      WriteText(args.output, json(t.seq.ids).dump() + "\n");
    } else {
      WriteTokenFile(args.output, t.seq);
    }
  }
  PrintJson(StatsJson(ComputeStats(t.seq, mesh, t.seconds)));
  return kOk;
}

// detokenize ----------------------------------------------------------------

struct DetokenizeArgs {
  std::string input;
  std::string output;
  bool keep_degenerate = false;
};

int RunDetokenize(const DetokenizeArgs &args) {
  const TokenSequence seq = ReadTokenFile(args.input);
  const QuantizedMesh mesh =
      Detokenize(seq, {.keep_degenerate = args.keep_degenerate});
  if (!args.output.empty()) WriteObjFile(args.output, mesh);
  PrintJson({{"vertices", mesh.vertices.size()},
             {"faces", mesh.faces.size()},
             {"tokens", seq.ids.size()},
             {"resolution", seq.resolution}});
  return kOk;
}

// roundtrip -----------------------------------------------------------------

struct RoundtripArgs {
  std::string input;
  int32_t resolution = kDefaultResolution;
  bool prenormalized = false;
};

int RunRoundtrip(const RoundtripArgs &args) {
  const QuantizedMesh mesh =
      LoadMesh(args.input, args.resolution, args.prenormalized);
  const Timed t = TimedTokenize(TokenizerKind::kEdgeBreaker, mesh);
  const QuantizedMesh back = Detokenize(t.seq);
  const bool equal = CanonicallyEqual(mesh, back);
  json report = StatsJson(ComputeStats(t.seq, mesh, t.seconds));
  report["equal"] = equal;
  report["orientation_consistent"] = CheckOrientation(back).consistent;
  PrintJson(report);
  if (!equal) {
    std::cerr << "edgetok: round trip mismatch for " << args.input << "\n";
    return kMismatch;
  }
  return kOk;
}

// mask ----------------------------------------------------------------------

struct MaskArgs {
  std::vector<TokenId> ids;
  std::string input;
  std::optional<std::size_t> prefix_length;
  int32_t resolution = kDefaultResolution;
  std::string bitset;
};

int RunMask(const MaskArgs &args) {
  TokenSequence prefix{args.resolution, args.ids};
  if (!args.input.empty()) prefix = ReadTokenFile(args.input);
  if (args.prefix_length && *args.prefix_length < prefix.ids.size()) {
    prefix.ids.resize(*args.prefix_length);
  }
  const Vocabulary vocab(prefix.resolution);
  const GrammarState state = ConsumePrefix(prefix.ids, vocab);
  const std::vector<bool> mask = AllowedNext(state, vocab);
  if (!args.bitset.empty()) WriteBytes(args.bitset, PackMask(mask));
  PrintJson(json(AllowedIds(state, vocab)));
  return kOk;
}

// bench ---------------------------------------------------------------------

struct BenchArgs {
  std::string corpus;
  int32_t resolution = kDefaultResolution;
  int jobs = 0;
  int repeat = 1;
  bool skip_invalid = false;
};

int RunBenchCommand(const BenchArgs &args) {
  const LoadedCorpus corpus =
      LoadCorpus(args.corpus, args.resolution, args.skip_invalid);
  for (const std::string &reason : corpus.skipped) {
    std::cerr << "edgetok: skipped " << reason << "\n";
  }
  if (corpus.meshes.empty()) {
    throw IoError("no loadable meshes in " + args.corpus);
  }
  BenchReport report =
      RunBench(corpus.meshes, {.jobs = args.jobs, .repeat = args.repeat});
  report.skipped = static_cast<int64_t>(corpus.skipped.size());

  json rows = json::array();
  for (const BenchRow &row : report.rows) {
    rows.push_back({{"name", row.name},
                    {"compression_ratio", row.mean_compression_ratio},
                    {"subsequences", row.mean_subsequences},
                    {"tokens_per_face", row.mean_tokens_per_face},
                    {"meshes_per_second", row.meshes_per_second}});
  }
  PrintJson({{"corpus",
              {{"meshes", report.mesh_count},
               {"min_faces", report.min_faces},
               {"max_faces", report.max_faces},
               {"resolution", report.resolution},
               {"skipped", report.skipped}}},
             {"jobs", report.jobs},
             {"repeat", report.repeat},
             {"tokenizers", rows}});
  std::cerr << FormatBenchTable(report);
  return kOk;
}

// prep ----------------------------------------------------------------------

struct PrepArgs {
  std::string input;
  std::string output;
  int32_t resolution = kDefaultResolution;
  std::vector<double> scale_jitter;
  double rotation = 0.0;
  uint64_t seed = 0;
  int jobs = 0;
};

int RunPrep(const PrepArgs &args) {
  AugmentOptions options;
  if (!args.scale_jitter.empty()) {
    options.scale_min = args.scale_jitter[0];
    options.scale_max = args.scale_jitter[1];
  }
  options.max_rotation_degrees = args.rotation;
  options.seed = args.seed;
  ValidateAugmentOptions(options);

  std::vector<std::string> names;
  std::vector<RawMesh> raw;
  int64_t skipped = 0;
  for (const fs::path &file : ObjFiles(args.input)) {
    try {
      raw.push_back(ReadObjFile(file));
      names.push_back(file.filename().string());
    } catch (const Error &e) {
      std::cerr << "edgetok: skipped " << file.filename().string() << ": "
                << e.what() << "\n";
      ++skipped;
    }
  }

  std::vector<std::string> errors;
  const std::vector<QuantizedMesh> prepared = PrepareAugmentedBatch(
      raw, options, args.resolution, args.jobs, &errors);

  std::error_code ec;
  fs::create_directories(args.output, ec);
  if (ec) throw IoError("cannot create " + args.output + ": " + ec.message());
  int64_t written = 0;
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    try {
      if (!errors[i].empty()) throw MeshError(errors[i]);
      HalfEdgeMesh::Build(prepared[i]);
    } catch (const MeshError &e) {
      std::cerr << "edgetok: skipped " << names[i] << ": " << e.what() << "\n";
      ++skipped;
      continue;
    }
    WriteObjFile(fs::path(args.output) / names[i], prepared[i]);
    ++written;
  }
  PrintJson({{"written", written}, {"skipped", skipped}});
  return kOk;
}

// gen-corpus ----------------------------------------------------------------

int RunGenCorpus(const std::string &output) {
  std::error_code ec;
  fs::create_directories(output, ec);
  if (ec) throw IoError("cannot create " + output + ": " + ec.message());
  int64_t written = 0;
  for (const NamedMesh &named : ProceduralCorpus()) {
    WriteObjFile(fs::path(output) / (named.name + ".obj"), named.mesh);
    ++written;
  }
  PrintJson({{"written", written}});
  return kOk;
}

template <typename Fn>
int Guarded(Fn fn) {
  try {
    return fn();
  } catch (const ParseError &e) {
    std::cerr << "edgetok: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const MeshError &e) {
    std::cerr << "edgetok: mesh error: " << e.what() << "\n";
    return kMesh;
  } catch (const IoError &e) {
    std::cerr << "edgetok: i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const GrammarError &e) {
    std::cerr << "edgetok: " << e.what() << "\n";
    return kGrammar;
  } catch (const Error &e) {
    std::cerr << "edgetok: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "edgetok: " << e.what() << "\n";
    return kInternal;
  }
}

int Main(int argc, char **argv) {
  CLI::App app{"Lossless triangle-mesh tokenizer"};
  app.require_subcommand(1);
  const auto resolution_check = CLI::Range(2, Vocabulary::kMaxResolution);

  TokenizeArgs tok;
  CLI::App *tokenize = app.add_subcommand("tokenize", "OBJ -> token file");
  tokenize->add_option("input", tok.input, "OBJ mesh")->required();
  tokenize->add_option("-o,--output", tok.output, "token file to write");
  tokenize->add_option("--format", tok.format)
      ->check(CLI::IsMember({"ertk", "json"}))
      ->capture_default_str();
  tokenize->add_option("--tokenizer", tok.tokenizer)
      ->check(CLI::IsMember({"ours", "fixed-side", "naive"}))
      ->capture_default_str();
  tokenize->add_option("-r,--resolution", tok.resolution)
      ->check(resolution_check)
      ->capture_default_str();
  tokenize->add_flag("--prenormalized", tok.prenormalized,
                     "coordinates already lie in the unit cube");

  DetokenizeArgs detok;
  CLI::App *detokenize =
      app.add_subcommand("detokenize", "token file -> OBJ");
  detokenize->add_option("input", detok.input, "ERTK file")->required();
  detokenize->add_option("-o,--output", detok.output, "OBJ to write");
  detokenize->add_flag("--keep-degenerate", detok.keep_degenerate);

  RoundtripArgs rt;
  CLI::App *roundtrip = app.add_subcommand(
      "roundtrip", "tokenize, detokenize and compare canonical meshes");
  roundtrip->add_option("input", rt.input, "OBJ mesh")->required();
  roundtrip->add_option("-r,--resolution", rt.resolution)
      ->check(resolution_check)
      ->capture_default_str();
  roundtrip->add_flag("--prenormalized", rt.prenormalized);

  MaskArgs mask_args;
  CLI::App *mask = app.add_subcommand("mask", "allowed next-token ids");
  auto *ids_opt = mask->add_option("--ids", mask_args.ids, "prefix ids")
                      ->delimiter(',');
  mask->add_option("-i,--input", mask_args.input, "prefix as an ERTK file")
      ->excludes(ids_opt);
  mask->add_option("--prefix-length", mask_args.prefix_length,
                   "use only the first N ids of the input");
  mask->add_option("-r,--resolution", mask_args.resolution)
      ->check(resolution_check)
      ->capture_default_str();
  mask->add_option("--bitset", mask_args.bitset,
                   "also write the packed mask to this file");

  BenchArgs bench_args;
  CLI::App *bench =
      app.add_subcommand("bench", "compare tokenizers over a corpus");
  bench->add_option("corpus", bench_args.corpus, "directory of OBJ files")
      ->required();
  bench->add_option("-j,--jobs", bench_args.jobs, "0 uses every core")
      ->envname("EDGETOK_JOBS")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("-r,--resolution", bench_args.resolution)
      ->check(resolution_check)
      ->capture_default_str();
  bench->add_option("--repeat", bench_args.repeat)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--skip-invalid", bench_args.skip_invalid);

  PrepArgs prep_args;
  CLI::App *prep = app.add_subcommand(
      "prep", "augment, normalize, quantize and clean a directory");
  prep->add_option("input", prep_args.input, "directory of OBJ files")
      ->required();
  prep->add_option("-o,--output", prep_args.output)->required();
  prep->add_option("-r,--resolution", prep_args.resolution)
      ->check(resolution_check)
      ->capture_default_str();
  prep->add_option("--scale-jitter", prep_args.scale_jitter,
                   "uniform scale range, e.g. 0.75 0.95")
      ->expected(2)
      ->check(CLI::Range(0.0, 1.0));
  prep->add_option("--rotation", prep_args.rotation,
                   "max rotation about the vertical axis, degrees")
      ->check(CLI::Range(0.0, 180.0));
  prep->add_option("--seed", prep_args.seed)->capture_default_str();
  prep->add_option("-j,--jobs", prep_args.jobs)
      ->envname("EDGETOK_JOBS")
      ->check(CLI::NonNegativeNumber);

  std::string gen_output;
  CLI::App *gen = app.add_subcommand(
      "gen-corpus", "write the procedural test corpus as OBJ files");
  gen->add_option("output", gen_output)->required();

  CLI11_PARSE(app, argc, argv);

  return Guarded([&] {
    if (*tokenize) return RunTokenize(tok);
    if (*detokenize) return RunDetokenize(detok);
    if (*roundtrip) return RunRoundtrip(rt);
    if (*mask) return RunMask(mask_args);
    if (*bench) return RunBenchCommand(bench_args);
    if (*prep) return RunPrep(prep_args);
    return RunGenCorpus(gen_output);
  });
}

}  // namespace
}  // namespace edgetok

int main(int argc, char **argv) { return edgetok::Main(argc, argv); }
