// src/cli/qps-cli.cc

// Copyright 2026  QPS project contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "cli/qps-cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qps/base.h"
#include "qps/ctc.h"
#include "qps/logit-io.h"
#include "qps/moshaf-attributes.h"
#include "qps/phonetizer.h"
#include "qps/quran-corpus.h"
#include "qps/sifat.h"
#include "qps/tasmeea.h"
#include "qps/utf8.h"

namespace qps {
namespace cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string quran, config, segments, dir, logits, ref, hyp;
  int sura = 0, aya = 0;
  bool pause_end = true, utterance_start = true;
  TasmeeaParams tasmeea;
  bool renormalize = false;
  std::string validate_path, print_path;
  bool defaults = false;
};

void AddContextFlags(CLI::App *c, Options *o) {
  c->add_option("--quran", o->quran, "Tanzil Uthmani text file")->required();
  c->add_option("--config", o->config, "Moshaf attribute file")->required();
  c->add_option("--sura", o->sura, "Only this sura (1-114)")
      ->check(CLI::Range(1, kNumSuras));
  c->add_option("--aya", o->aya, "Only this aya of --sura")->needs("--sura");
  c->add_flag("--pause-end,!--no-pause-end", o->pause_end,
              "Each aya ends with a pause (default) or connects onward");
  c->add_flag("--utterance-start,!--no-utterance-start", o->utterance_start,
              "Each aya starts an utterance (default) or continues one");
}

void AddTasmeeaFlags(CLI::App *c, Options *o) {
  c->add_option("--quran", o->quran, "Tanzil text file to match against")
      ->required();
  c->add_option("--window", o->tasmeea.window_words, "Window width in words")
      ->capture_default_str();
  c->add_option("--overlap", o->tasmeea.overlap_words,
                "Backward search reach in words")
      ->capture_default_str();
  c->add_option("--acceptance", o->tasmeea.acceptance_ratio,
                "Minimum accepted similarity ratio")
      ->capture_default_str();
  c->add_flag("--istiaatha", o->tasmeea.include_istiaatha,
              "First segment may be the istiaatha");
  c->add_flag("--sadaka", o->tasmeea.include_sadaka,
              "Last segment may be the closing formula");
}

std::unique_ptr<CLI::App> BuildApp(Options *o) {
  auto app = std::make_unique<CLI::App>(
      "Quran phonetic script toolkit: phonetization, sifat, transcript "
      "matching and CTC evaluation",
      "qps");
  app->require_subcommand(1);

  CLI::App *ph = app->add_subcommand("phonetize", "Aya text to phonemes");
  AddContextFlags(ph, o);
  CLI::App *sf =
      app->add_subcommand("sifat", "Aya text to phonemes and 10 sifat levels");
  AddContextFlags(sf, o);

  CLI::App *ma =
      app->add_subcommand("match", "Match transcript segments to one sura");
  AddTasmeeaFlags(ma, o);
  ma->add_option("--segments", o->segments, "One segment per line")
      ->required()
      ->check(CLI::ExistingFile);
  ma->add_option("--sura", o->sura, "Sura the segments recite")
      ->required()
      ->check(CLI::Range(1, kNumSuras));

  CLI::App *ve = app->add_subcommand(
      "verify", "Match a directory of NNN.txt segment files, one per sura");
  AddTasmeeaFlags(ve, o);
  ve->add_option("--dir", o->dir, "Directory of NNN.txt files")
      ->required()
      ->check(CLI::ExistingDirectory);

  CLI::App *de = app->add_subcommand("decode", "Greedy decode a QPSL file");
  de->add_option("--logits", o->logits, "QPSL logit file")
      ->required()
      ->check(CLI::ExistingFile);
  de->add_flag("--renormalize", o->renormalize,
               "Renormalize rows instead of rejecting them");

  CLI::App *ev = app->add_subcommand("eval-per", "Per-level PER report");
  ev->add_option("--ref", o->ref, "Reference records (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  ev->add_option("--hyp", o->hyp, "Hypothesis records (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App *co = app->add_subcommand("config", "Check or show attributes");
  co->add_option("--validate", o->validate_path, "Validate an attribute file");
  co->add_option("--print", o->print_path,
                 "Print the effective attributes of a file");
  co->add_flag("--defaults", o->defaults,
               "List every attribute with its default");
  co->require_option(1);  // exactly one of the three
  return app;
}

// One JSON object per line with fields in insertion order.  Ratios are
// written with exactly 6 decimals, which Json::dump cannot do.
class Record {
 public:
  template <typename T>
  Record &Add(const std::string &key, const T &value) {
    return Raw(key, Json(value).dump());
  }
  Record &Fixed6(const std::string &key, double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return Raw(key, buf);
  }
  Record &Raw(const std::string &key, const std::string &json) {
    text_ += text_.empty() ? "{" : ",";
    text_ += Json(key).dump() + ":" + json;
    return *this;
  }
  std::string str() const { return (text_.empty() ? "{" : text_) + "}"; }

 private:
  std::string text_;
};

std::string ReadFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

MoshafAttributes LoadConfig(const std::string &path) {
  MoshafAttributes a = ParseAttributesFile(path);
  std::vector<std::string> v = ValidateAttributes(a);
  if (!v.empty()) throw ConfigError(path + ": " + v.front());
  return a;
}

std::vector<const Verse *> SelectVerses(const QuranCorpus &corpus,
                                        const Options &o) {
  std::vector<const Verse *> out;
  if (o.sura == 0) {
    for (const Verse &v : corpus.verses()) out.push_back(&v);
    return out;
  }
  if (o.aya > 0) {
    const Verse *v = corpus.FindVerse(o.sura, o.aya);
    if (v == nullptr)
      throw InputError("no aya " + std::to_string(o.sura) + ":" +
                       std::to_string(o.aya));
    out.push_back(v);
    return out;
  }
  out = corpus.SuraVerses(o.sura);
  if (out.empty()) throw InputError("no sura " + std::to_string(o.sura));
  return out;
}

int Phonetize(const Options &o, bool with_sifat, std::ostream &out) {
  MoshafAttributes attrs = LoadConfig(o.config);
  QuranCorpus corpus = LoadTanzilFile(o.quran, ScriptKind::kUthmani);
  UtteranceContext ctx{o.utterance_start, o.pause_end};
  for (const Verse *v : SelectVerses(corpus, o)) {
    PhonemeSequence seq;
    try {
      seq = Phonetize(v->text, attrs, ctx);
    } catch (const Error &e) {
      throw Error(std::to_string(v->sura) + ":" + std::to_string(v->aya) +
                  ": " + e.what());
    }
    Json context;
    context["utterance_start"] = ctx.starts_utterance;
    context["pause_end"] = ctx.ends_with_pause;
    Record rec;
    rec.Add("sura", v->sura)
        .Add("aya_span", Json::array({v->aya, v->aya}))
        .Raw("context", context.dump())
        .Add("phonemes", PhonemeNames(seq.phonemes))
        .Add("phonetic_script", PhoneticScript(seq.phonemes));
    if (with_sifat) {
      std::string codes;
      for (const SifatVector &sv : ExtractSifat(seq, attrs))
        codes += (codes.empty() ? "" : " ") + CompactSifat(sv);
      rec.Add("sifat", codes);
    }
    out << rec.str() << '\n';
  }
  return kExitOk;
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::istringstream is(ReadFile(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string MatchRecord(int sura, size_t index, const MatchResult &r) {
  Record rec;
  rec.Add("sura", sura).Add("index", index).Fixed6("ratio", r.ratio);
  if (r.matched) {
    rec.Add("start_word", r.matched->start_word)
        .Add("word_count", r.matched->word_count)
        .Add("matched_text", r.matched->text);
  } else {
    rec.Raw("start_word", "null").Raw("word_count", "null")
        .Raw("matched_text", "null");
  }
  if (r.special != SpecialPhrase::kNone)
    rec.Add("special", r.special == SpecialPhrase::kIstiaatha ? "istiaatha"
                                                              : "sadaka");
  return rec.str();
}

// Returns the number of missing words.
int WriteMissing(const QuranCorpus &corpus, int sura,
                 const std::vector<MatchResult> &res, std::ostream &out) {
  Json gaps = Json::array();
  int words = 0;
  for (const WordGap &g : MissingPortions(res, corpus, sura)) {
    Json j;
    j["start_word"] = g.start_word;
    j["word_count"] = g.word_count;
    j["text"] = WordWindow(corpus, sura, g.start_word, g.word_count);
    gaps.push_back(j);
    words += g.word_count;
  }
  out << Record().Add("sura", sura).Raw("missing", gaps.dump()).str() << '\n';
  return words;
}

int Match(const Options &o, std::ostream &out) {
  o.tasmeea.Validate();
  QuranCorpus corpus = LoadTanzilFile(o.quran, ScriptKind::kUthmani);
  std::vector<MatchResult> res =
      MatchSegments(ReadLines(o.segments), o.sura, o.tasmeea, corpus);
  for (size_t i = 0; i < res.size(); i++)
    out << MatchRecord(o.sura, i, res[i]) << '\n';
  WriteMissing(corpus, o.sura, res, out);
  return kExitOk;
}

int Verify(const Options &o, std::ostream &out) {
  o.tasmeea.Validate();
  QuranCorpus corpus = LoadTanzilFile(o.quran, ScriptKind::kUthmani);
  std::map<int, std::string> files;
  for (const auto &e : std::filesystem::directory_iterator(o.dir)) {
    std::string name = e.path().filename().string();
    if (name.size() != 7 || name.substr(3) != ".txt") continue;
    int sura = 0;
    for (int i = 0; i < 3; i++) {
      if (name[i] < '0' || name[i] > '9') {
        sura = -1;
        break;
      }
      sura = sura * 10 + (name[i] - '0');
    }
    if (sura < 1 || sura > kNumSuras) continue;
    files[sura] = e.path().string();
  }
  if (files.empty()) throw InputError("no NNN.txt files in " + o.dir);
  int total_missing = 0;
  for (const auto &f : files) {
    std::vector<MatchResult> res =
        MatchSegments(ReadLines(f.second), f.first, o.tasmeea, corpus);
    for (size_t i = 0; i < res.size(); i++)
      out << MatchRecord(f.first, i, res[i]) << '\n';
    total_missing += WriteMissing(corpus, f.first, res, out);
  }
  out << Record()
             .Add("suras", files.size())
             .Add("missing_words", total_missing)
             .str()
      << '\n';
  return kExitOk;
}

// Label of token id t (1-based) on a level, when the vocabulary matches.
std::string TokenLabel(const std::string &level, int vocab, int t) {
  if (level == "phonemes") {
    if (vocab == kNumPhonemes + 1) return PhonemeName(Phoneme(t - 1));
    return "";
  }
  int l = SifaLevelIndex(level);
  if (l >= 0 && vocab == static_cast<int>(SifaLevelValues(l).size()) + 1)
    return SifaLevelValues(l)[t - 1];
  return "";
}

int Decode(const Options &o, std::ostream &out) {
  MultiLevelLogits levels = ReadLogitsFile(o.logits, o.renormalize);
  for (const NamedLogits &l : levels) {
    TokenSeq toks = GreedyDecode(l.logits);
    Json rec;
    rec["level"] = l.name;
    rec["tokens"] = toks;
    Json labels = Json::array();
    for (int t : toks) {
      std::string s = TokenLabel(l.name, l.logits.vocab, t);
      if (s.empty()) {
        labels = nullptr;
        break;
      }
      labels.push_back(s);
    }
    if (!labels.is_null()) rec["labels"] = labels;
    out << rec.dump() << '\n';
  }
  return kExitOk;
}

std::vector<Json> ReadRecords(const std::string &path) {
  std::vector<Json> recs;
  int n = 0;
  for (const std::string &line : ReadLines(path)) {
    n++;
    if (line.empty()) continue;
    try {
      recs.push_back(Json::parse(line));
    } catch (const Json::parse_error &e) {
      throw ParseError(path + ": " + e.what(), n);
    }
  }
  return recs;
}

// Token strings of one level of a phonetize/sifat record: the phoneme
// names, or the level's character of every compact sifat code.
std::vector<std::string> LevelTokens(const Json &rec, int level,
                                     const std::string &where) {
  const char *field = level == 0 ? "phonemes" : "sifat";
  auto it = rec.find(field);
  if (it == rec.end() || !it->is_string())
    throw InputError(where + ": no " + field + " field");
  std::vector<std::string> words = SplitWords(it->get<std::string>());
  if (level == 0) return words;
  std::vector<std::string> out;
  for (const std::string &w : words) {
    if (w.size() != static_cast<size_t>(kNumSifatLevels))
      throw InputError(where + ": bad sifat code '" + w + "'");
    out.push_back(w.substr(level - 1, 1));
  }
  return out;
}

TokenSeq Intern(const std::vector<std::string> &tokens,
                std::map<std::string, int> *ids) {
  TokenSeq seq;
  for (const std::string &s : tokens)
    seq.push_back(ids->emplace(s, static_cast<int>(ids->size()) + 1)
                      .first->second);
  return seq;
}

int EvalPer(const Options &o, std::ostream &out) {
  std::vector<Json> ref = ReadRecords(o.ref), hyp = ReadRecords(o.hyp);
  if (ref.size() != hyp.size())
    throw InputError("reference has " + std::to_string(ref.size()) +
                     " records, hypothesis " + std::to_string(hyp.size()));
  if (ref.empty()) throw InputError("no records");
  std::map<std::string, std::vector<SeqPair>> pairs;
  for (int l = 0; l < kNumLevels; l++) {
    std::map<std::string, int> ids;
    std::vector<SeqPair> &level = pairs[LevelNames()[l]];
    for (size_t i = 0; i < ref.size(); i++) {
      std::string where = "record " + std::to_string(i + 1);
      level.push_back({Intern(LevelTokens(ref[i], l, where), &ids),
                       Intern(LevelTokens(hyp[i], l, where), &ids)});
    }
  }
  PerReport r = ComputePerReport(pairs);
  Record rec;
  for (const auto &kv : r.per_level) rec.Fixed6("per_" + kv.first, kv.second);
  rec.Fixed6("average_per", r.average_per);
  out << rec.str() << '\n';
  return kExitOk;
}

int Config(const Options &o, std::ostream &out, std::ostream &err) {
  if (o.defaults) {
    for (const AttributeField &f : AttributeFields()) {
      std::string v = f.required ? "(required)"
                      : f.default_value.empty() ? "(derived)"
                                                : f.default_value;
      std::string allowed;
      for (const std::string &a : f.allowed)
        allowed += (allowed.empty() ? "" : "|") + a;
      out << f.name << " = " << v << "  # " << allowed << '\n';
    }
    return kExitOk;
  }
  const std::string &path =
      o.validate_path.empty() ? o.print_path : o.validate_path;
  MoshafAttributes a = ParseAttributesFile(path);
  std::vector<std::string> violations = ValidateAttributes(a);
  for (const std::string &w : AttributeWarnings(a))
    err << "warning: " << w << '\n';
  if (!violations.empty()) {
    for (const std::string &v : violations) out << "violation: " << v << '\n';
    err << "qps: " << path << ": " << violations.size()
        << " invariant violation(s)\n";
    return kExitData;
  }
  if (!o.print_path.empty())
    out << RenderAttributes(a);
  else
    out << "ok\n";
  return kExitOk;
}

}  // namespace

int Run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  Options o;
  std::unique_ptr<CLI::App> app = BuildApp(&o);
  try {
    app->parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    CLI::App *sub = app.get();
    for (CLI::App *s : app->get_subcommands()) sub = s;
    out << sub->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app->help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "qps: " << msg << '\n';
    return kExitUsage;
  }
  try {
    std::string cmd = app->get_subcommands().front()->get_name();
    if (cmd == "phonetize") return Phonetize(o, false, out);
    if (cmd == "sifat") return Phonetize(o, true, out);
    if (cmd == "match") return Match(o, out);
    if (cmd == "verify") return Verify(o, out);
    if (cmd == "decode") return Decode(o, out);
    if (cmd == "eval-per") return EvalPer(o, out);
    return Config(o, out, err);
  } catch (const std::exception &e) {
    std::string msg = e.what();
    for (char &c : msg)
      if (c == '\n') c = ' ';
    err << "qps: " << msg << '\n';
    return kExitData;
  }
}

std::vector<CommandFlags> DescribeFlags() {
  Options o;
  std::unique_ptr<CLI::App> app = BuildApp(&o);
  std::vector<CommandFlags> out;
  for (CLI::App *sub : app->get_subcommands({})) {
    CommandFlags cf;
    cf.command = sub->get_name();
    for (const CLI::Option *opt : sub->get_options()) {
      for (const std::string &ln : opt->get_lnames())
        cf.flags.push_back("--" + ln);
    }
    cf.help = sub->help();
    out.push_back(cf);
  }
  return out;
}

}  // namespace cli
}  // namespace qps
