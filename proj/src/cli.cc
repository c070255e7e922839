// Copyright 2026 The tweetage Authors.
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

#include "tweetage/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tweetage/corpus.h"
#include "tweetage/errors.h"
#include "tweetage/evaluation.h"
#include "tweetage/lexer.h"
#include "tweetage/manifest.h"
#include "tweetage/model.h"
#include "tweetage/pipeline.h"
#include "tweetage/tsv.h"

namespace tweetage {

namespace {

struct Options {
  // global
  std::uint64_t seed = 0;
  std::string variant = "keep";
  std::string manifest_path;
  std::string stopwords_path;
  std::string pronouns_path;
  std::string contractions_path;

  std::string input;
  std::string output;
  std::vector<std::string> outputs;
  std::string text;
  bool debug = false;
  bool json = false;
  double fraction = 0.8;
  std::size_t n = 0;
  double ratio = 2834.0 / 8800.0;
  std::string id_prefix = "syn";

  int epochs = 10;
  int batch_size = 32;
  double lr = 5e-5;
  std::uint32_t dims = 1u << 18;
  std::uint32_t ngram_max = 2;
  bool class_weights = false;

  std::string model;
  double threshold = -1.0;  // < 0: use the model's threshold
  std::string pred;
  std::string gold;
  std::string name = "run";
  std::vector<std::string> runs;
  std::string train;
  std::string test;
  bool both = false;
};

class Context {
 public:
  Context(const Options &opts, std::ostream &out, std::ostream &err)
      : opts_(opts), out_(out), err_(err) {}

  const Options &opts() const { return opts_; }
  std::ostream &out() { return out_; }
  std::ostream &err() { return err_; }
  RunManifest &manifest() { return manifest_; }

  PronounVariant variant() const { return *ParseVariant(opts_.variant); }

  const Lexicons &lexicons() {
    if (!lexicons_) {
      lexicons_ = std::make_unique<Lexicons>(Lexicons::Load(
          opts_.stopwords_path, opts_.pronouns_path, opts_.contractions_path));
      manifest_.RecordLexicons(*lexicons_);
      for (const auto *p : {&opts_.stopwords_path, &opts_.pronouns_path,
                            &opts_.contractions_path}) {
        if (!p->empty()) manifest_.RecordInput(*p);
      }
    }
    return *lexicons_;
  }

  Corpus LoadInput(const std::string &path, bool expect_labels) {
    manifest_.RecordInput(path);
    return LoadCorpus(path, expect_labels);
  }

  // Writes to `path`, or to the output stream when `path` is empty.
  void Emit(const std::string &path, std::string_view content) {
    if (path.empty()) {
      out_ << content;
    } else {
      tsv::WriteFile(path, content);
    }
  }

 private:
  const Options &opts_;
  std::ostream &out_;
  std::ostream &err_;
  RunManifest manifest_;
  std::unique_ptr<Lexicons> lexicons_;
};

TrainConfig MakeTrainConfig(const Options &o, PronounVariant variant) {
  TrainConfig c;
  c.epochs = o.epochs;
  c.batch_size = o.batch_size;
  c.lr = o.lr;
  c.seed = o.seed;
  c.dims = o.dims;
  c.ngram_max = o.ngram_max;
  c.class_weighting = o.class_weights;
  c.variant = variant;
  return c;
}

std::string MetricsLine(const Metrics &m) {
  std::ostringstream s;
  s << "P=" << FormatRatio(m.precision) << " R=" << FormatRatio(m.recall)
    << " F1=" << FormatRatio(m.f1) << " tp=" << m.counts.tp << " fp=" << m.counts.fp
    << " fn=" << m.counts.fn << " tn=" << m.counts.tn << "\n";
  return s.str();
}

void CmdLex(Context &ctx) {
  const Options &o = ctx.opts();
  std::string text = o.text;
  if (!o.input.empty()) {
    ctx.manifest().RecordInput(o.input);
    text = tsv::ReadFile(o.input);
  }
  std::string out;
  for (const Token &t : Tokenize(text)) {
    if (o.debug) {
      out += std::string(TokenKindName(t.kind)) + "\t" + std::to_string(t.start) + "\t" +
             std::to_string(t.end) + "\t" + tsv::Escape(t.text) + "\n";
    } else if (t.kind != TokenKind::kWhitespace) {
      out += std::string(TokenKindName(t.kind)) + "\t" + tsv::Escape(t.text) + "\n";
    }
  }
  ctx.Emit(o.output, out);
}

void CmdPreprocess(Context &ctx) {
  const Corpus corpus = ctx.LoadInput(ctx.opts().input, false);
  ctx.Emit(ctx.opts().output,
           FormatNormalized(corpus, NormalizationConfig::ForVariant(ctx.variant()),
                            ctx.lexicons()));
}

void CmdExport(Context &ctx) {
  const Corpus corpus = ctx.LoadInput(ctx.opts().input, false);
  ExportNormalized(corpus, NormalizationConfig::ForVariant(ctx.variant()), ctx.lexicons(),
                   ctx.opts().output);
  ctx.err() << "exported " << corpus.size() << " record(s) to " << ctx.opts().output << "\n";
}

void CmdStats(Context &ctx) {
  const Corpus corpus = ctx.LoadInput(ctx.opts().input, false);
  const ClassDistribution dist = CountClasses(corpus);
  KindCounts kinds{};
  for (const auto &t : corpus.records) {
    const KindCounts c = CountKinds(Tokenize(t.text));
    for (std::size_t k = 0; k < kNumTokenKinds; ++k) kinds[k] += c[k];
  }

  if (ctx.opts().json) {
    nlohmann::json j{{"records", corpus.size()},
                     {"negative", dist.negative},
                     {"positive", dist.positive},
                     {"unlabeled", dist.unlabeled}};
    for (std::size_t k = 0; k < kNumTokenKinds; ++k) {
      j["tokens"][std::string(TokenKindName(static_cast<TokenKind>(k)))] = kinds[k];
    }
    ctx.out() << j.dump(2) << "\n";
    return;
  }
  std::ostringstream s;
  s << "records\t" << corpus.size() << "\nnegative\t" << dist.negative << "\npositive\t"
    << dist.positive << "\nunlabeled\t" << dist.unlabeled << "\n";
  for (std::size_t k = 0; k < kNumTokenKinds; ++k) {
    s << "tokens." << TokenKindName(static_cast<TokenKind>(k)) << "\t" << kinds[k] << "\n";
  }
  ctx.out() << s.str();
}

void CmdSplit(Context &ctx) {
  const Options &o = ctx.opts();
  const Corpus corpus = ctx.LoadInput(o.input, true);
  const auto [first, second] = StratifiedSplit(corpus, o.fraction, o.seed);
  SaveCorpus(first, o.outputs[0]);
  SaveCorpus(second, o.outputs[1]);
  ctx.err() << "split " << corpus.size() << " -> " << first.size() << " + " << second.size()
            << "\n";
}

void CmdSynth(Context &ctx) {
  const Options &o = ctx.opts();
  const Corpus corpus = GenerateSynthetic(o.n, o.ratio, o.seed, o.id_prefix);
  ctx.Emit(o.output, FormatCorpus(corpus));
}

void CmdTrain(Context &ctx) {
  const Options &o = ctx.opts();
  const Corpus corpus = ctx.LoadInput(o.input, true);
  const TrainResult r = Train(corpus, MakeTrainConfig(o, ctx.variant()), ctx.lexicons());
  ctx.err() << "initial loss " << r.initial_loss << "\n";
  for (std::size_t e = 0; e < r.epoch_losses.size(); ++e) {
    ctx.err() << "epoch " << (e + 1) << " loss " << r.epoch_losses[e] << "\n";
  }
  ctx.err() << "final loss " << r.final_loss << "\n";
  SaveModel(r.model, o.output);
}

void CmdPredict(Context &ctx) {
  const Options &o = ctx.opts();
  ctx.manifest().RecordInput(o.model);
  const Model model = LoadModel(o.model);
  const Corpus corpus = ctx.LoadInput(o.input, false);
  const double threshold = o.threshold < 0 ? model.threshold : o.threshold;
  ctx.Emit(o.output, FormatPredictions(PredictLabels(model, corpus, ctx.lexicons(), threshold)));
}

void CmdScore(Context &ctx) {
  const Options &o = ctx.opts();
  ctx.manifest().RecordInput(o.pred);
  ctx.manifest().RecordInput(o.gold);
  const VariantResult r{o.name, ScorePredictionFile(o.pred, o.gold)};
  if (o.json) {
    ctx.Emit(o.output, MetricsToJson(r).dump() + "\n");
  } else {
    ctx.Emit(o.output, MetricsLine(r.metrics));
  }
}

void CmdCompare(Context &ctx) {
  const Options &o = ctx.opts();
  std::vector<VariantResult> rows;
  for (const std::string &path : o.runs) {
    ctx.manifest().RecordInput(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(tsv::ReadFile(path));
    } catch (const nlohmann::json::parse_error &e) {
      throw DataError(path + ": invalid JSON: " + e.what());
    }
    if (j.is_array()) {
      for (const auto &item : j) rows.push_back(MetricsFromJson(item));
    } else {
      rows.push_back(MetricsFromJson(j));
    }
  }
  if (rows.empty()) throw DataError("no metrics records found in the given runs");
  const ComparisonReport report = CompareVariants(rows);
  ctx.Emit(o.output, o.json ? report.json.dump() + "\n" : report.text);
}

void CmdExperiment(Context &ctx) {
  const Options &o = ctx.opts();
  const Corpus train = ctx.LoadInput(o.train, true);
  const Corpus test = ctx.LoadInput(o.test, true);
  std::vector<PronounVariant> variants{ctx.variant()};
  if (o.both) variants = {PronounVariant::kKeepPronouns, PronounVariant::kRemovePronouns};

  std::vector<VariantResult> rows;
  for (PronounVariant v : variants) {
    const ExperimentResult r = EndToEnd(train, test, v, MakeTrainConfig(o, v), ctx.lexicons());
    ctx.err() << VariantName(v) << ": initial loss " << r.training.initial_loss
              << ", final loss " << r.training.final_loss << "\n";
    rows.push_back(r.row);
  }
  const ComparisonReport report = CompareVariants(rows);
  ctx.Emit(o.output, o.json ? report.json.dump() + "\n" : report.text);
}

void AddTrainingFlags(CLI::App *cmd, Options &o) {
  cmd->add_option("--epochs", o.epochs, "Training epochs")->check(CLI::PositiveNumber);
  cmd->add_option("--batch-size", o.batch_size, "Minibatch size")->check(CLI::PositiveNumber);
  cmd->add_option("--lr", o.lr, "Adam learning rate")->check(CLI::PositiveNumber);
  cmd->add_option("--dims", o.dims, "Hashed feature dimensionality (power of two)")
      ->check([](const std::string &s) -> std::string {
        try {
          const auto v = std::stoull(s);
          return IsPowerOfTwo(v) && v <= (1ull << 30) ? "" : "must be a power of two <= 2^30";
        } catch (...) {
          return "not an integer";
        }
      });
  cmd->add_option("--ngram-max", o.ngram_max, "Longest n-gram")->check(CLI::Range(1, 8));
  cmd->add_flag("--class-weights", o.class_weights, "Weight classes by n / (2 n_class)");
}

// Resolved flag values for the manifest, defaults included.
void CollectFlags(const CLI::App &app, std::map<std::string, std::string> &flags) {
  for (const CLI::Option *opt : app.get_options()) {
    const std::string name = opt->get_name();
    if (name == "--help" || name == "-h") continue;
    std::string value;
    if (opt->get_expected_max() == 0) {
      value = opt->count() > 0 ? "true" : "false";
    } else if (opt->count() > 0) {
      const auto &results = opt->results();
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? " " : "") + results[i];
    } else {
      value = opt->get_default_str();
    }
    flags[name] = value;
  }
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Exact-age tweet classification toolkit", "tweetage"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--seed", o.seed, "Seed for shuffling, splitting and generation");
  app.add_option("--variant", o.variant, "Pronoun handling: keep or remove")
      ->check(CLI::IsMember({"keep", "remove"}));
  app.add_option("--manifest", o.manifest_path, "Write the run manifest here (default: stderr)");
  app.add_option("--stopwords", o.stopwords_path, "Stopword list override")->check(CLI::ExistingFile);
  app.add_option("--pronouns", o.pronouns_path, "Pronoun list override")->check(CLI::ExistingFile);
  app.add_option("--contractions", o.contractions_path, "Contraction table override")
      ->check(CLI::ExistingFile);

  std::map<std::string, std::function<void(Context &)>> handlers;

  auto *lex = app.add_subcommand("lex", "Tokenize raw text");
  auto *lex_src = lex->add_option_group("source");
  lex_src->add_option("--input", o.input, "Text file to tokenize")->check(CLI::ExistingFile);
  lex_src->add_option("--text", o.text, "Literal text to tokenize");
  lex_src->require_option(1);
  lex->add_flag("--debug", o.debug, "Print KIND<TAB>start<TAB>end<TAB>text per token");
  lex->add_option("--output", o.output, "Output file (default: stdout)");
  handlers["lex"] = CmdLex;

  auto *pre = app.add_subcommand("preprocess", "Normalize a corpus to TSV");
  pre->add_option("--input", o.input, "Corpus TSV")->required()->check(CLI::ExistingFile);
  pre->add_option("--output", o.output, "Output file (default: stdout)");
  handlers["preprocess"] = CmdPreprocess;

  auto *stats = app.add_subcommand("stats", "Class distribution and token statistics");
  stats->add_option("--input", o.input, "Corpus TSV")->required()->check(CLI::ExistingFile);
  stats->add_flag("--json", o.json, "Machine-readable output");
  handlers["stats"] = CmdStats;

  auto *split = app.add_subcommand("split", "Stratified split into two corpora");
  split->add_option("--input", o.input, "Labeled corpus TSV")->required()->check(CLI::ExistingFile);
  split->add_option("--output", o.outputs, "First and second part paths")->required()->expected(2);
  split->add_option("--fraction", o.fraction, "Share of each class in the first part")
      ->check(CLI::Range(0.0, 1.0));
  handlers["split"] = CmdSplit;

  auto *synth = app.add_subcommand("synth", "Generate a synthetic labeled corpus");
  synth->add_option("--n", o.n, "Number of tweets")->required()->check(CLI::Range(2, 100000000));
  synth->add_option("--ratio", o.ratio, "Share of positives")->check(CLI::Range(0.0, 1.0));
  synth->add_option("--id-prefix", o.id_prefix, "Tweet id prefix");
  synth->add_option("--output", o.output, "Output file (default: stdout)");
  handlers["synth"] = CmdSynth;

  auto *exp = app.add_subcommand("export", "Write normalized text for external models");
  exp->add_option("--input", o.input, "Corpus TSV")->required()->check(CLI::ExistingFile);
  exp->add_option("--output", o.output, "Output TSV")->required();
  handlers["export"] = CmdExport;

  auto *train = app.add_subcommand("train", "Train the logistic-regression baseline");
  train->add_option("--input", o.input, "Labeled corpus TSV")->required()->check(CLI::ExistingFile);
  train->add_option("--output", o.output, "Model file")->required();
  AddTrainingFlags(train, o);
  handlers["train"] = CmdTrain;

  auto *predict = app.add_subcommand("predict", "Label a corpus with a trained model");
  predict->add_option("--model", o.model, "Model file")->required()->check(CLI::ExistingFile);
  predict->add_option("--input", o.input, "Corpus TSV")->required()->check(CLI::ExistingFile);
  predict->add_option("--output", o.output, "Prediction TSV (default: stdout)");
  predict->add_option("--threshold", o.threshold, "Decision threshold (default: model's)")
      ->check(CLI::Range(0.0, 1.0));
  handlers["predict"] = CmdPredict;

  auto *score = app.add_subcommand("score", "Score a prediction file against gold labels");
  score->add_option("--pred", o.pred, "Prediction TSV")->required()->check(CLI::ExistingFile);
  score->add_option("--gold", o.gold, "Gold TSV")->required()->check(CLI::ExistingFile);
  score->add_option("--name", o.name, "Row name in JSON output");
  score->add_flag("--json", o.json, "Machine-readable output");
  score->add_option("--output", o.output, "Output file (default: stdout)");
  handlers["score"] = CmdScore;

  auto *compare = app.add_subcommand("compare", "Tabulate metrics from several runs");
  compare->add_option("--run", o.runs, "Metrics JSON from score --json or experiment --json")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_flag("--json", o.json, "Machine-readable output");
  compare->add_option("--output", o.output, "Output file (default: stdout)");
  handlers["compare"] = CmdCompare;

  auto *experiment = app.add_subcommand("experiment", "Preprocess, train, predict and score");
  experiment->add_option("--train", o.train, "Labeled training corpus")
      ->required()
      ->check(CLI::ExistingFile);
  experiment->add_option("--test", o.test, "Labeled test corpus")->required()->check(CLI::ExistingFile);
  experiment->add_flag("--both", o.both, "Run both pronoun variants");
  experiment->add_flag("--json", o.json, "Machine-readable output");
  experiment->add_option("--output", o.output, "Output file (default: stdout)");
  AddTrainingFlags(experiment, o);
  handlers["experiment"] = CmdExperiment;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    if (e.get_exit_code() != 0) err << app.help();
    return kExitUsage;
  }

  CLI::App *cmd = app.get_subcommands().front();
  Context ctx(o, out, err);
  try {
    RunManifest &m = ctx.manifest();
    m.subcommand = cmd->get_name();
    m.seed = o.seed;
    CollectFlags(app, m.flags);
    CollectFlags(*cmd, m.flags);
    for (const CLI::App *group : cmd->get_subcommands({})) {
      if (group->get_name().empty()) CollectFlags(*group, m.flags);
    }

    handlers.at(cmd->get_name())(ctx);

    const std::string manifest = m.ToJson().dump(2) + "\n";
    if (o.manifest_path.empty()) {
      err << "manifest: " << m.ToJson().dump() << "\n";
    } else {
      tsv::WriteFile(o.manifest_path, manifest);
    }
  } catch (const DataError &e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const NumericError &e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace tweetage
