// tests/acceptance-test.cc

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

// Acceptance suite: one PASS/FAIL line per criterion, then a note on the
// criterion that cannot be run here.  Exit status is 1 if any line failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qps/alphabet.h"
#include "qps/base.h"
#include "qps/ctc.h"
#include "qps/moshaf-attributes.h"
#include "qps/phonetizer.h"
#include "qps/quran-corpus.h"
#include "qps/sifat.h"
#include "qps/tasmeea.h"
#include "qps/utf8.h"

namespace qps {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string TestData(const std::string &name) {
  return std::string(QPS_TEST_DATA_DIR) + "/" + name;
}

const QuranCorpus &Corpus() {
  static const QuranCorpus c = LoadTanzilFile(
      std::string(QPS_DATA_DIR) + "/quran-uthmani.txt", ScriptKind::kUthmani);
  return c;
}

MoshafAttributes Attrs() {
  return DefaultAttributes({{"madd_monfasel_len", "4"},
                            {"madd_mottasel_len", "4"},
                            {"madd_mottasel_waqf", "4"},
                            {"madd_aared_len", "4"}});
}

std::vector<std::string> ReadFixtureLines(const std::string &name) {
  std::ifstream is(TestData(name));
  if (!is) throw InputError("cannot open fixture " + name);
  std::vector<std::string> out;
  for (std::string l; std::getline(is, l);)
    if (!l.empty() && l[0] != '#') out.push_back(l);
  return out;
}

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  for (std::string x; std::getline(ss, x, '\t');) f.push_back(x);
  return f;
}

std::string JoinNames(const std::vector<Phoneme> &p) { return PhonemeNames(p); }

// 1. Golden word table.
Outcome GoldenWord() {
  std::vector<std::string> lines = ReadFixtureLines("golden-word.tsv");
  std::string word = SplitTabs(lines[0])[1];
  // Value abbreviations as printed under the table.
  const std::map<std::string, std::string> abbrev = {
      {"jahr", "jahr"},          {"hams", "hams"},
      {"shd", "shadeed"},        {"rkh", "rikhw"},
      {"btw", "between"},        {"mrq", "moraqaq"},
      {"mo", "mofakham"},        {"mnf", "monfateh"},
      {"mtb", "motbaq"},         {"no", "no_safeer"},
      {"nql", "not_moqalqal"},   {"nkr", "not_mokarar"},
      {"ntf", "not_motafashie"}, {"nst", "not_mostateel"},
      {"nmg", "not_maghnoon"},   {"mg", "maghnoon"}};
  std::vector<Phoneme> want;
  std::vector<std::vector<std::string>> want_sifat;
  for (size_t i = 2; i < lines.size(); i++) {
    std::vector<std::string> f = SplitTabs(lines[i]);
    std::u32string glyph;
    for (char32_t c : Utf8ToU32(f[1]))
      if (c != 0x0640) glyph.push_back(c);  // drop the display kasheeda
    std::optional<Phoneme> p =
        glyph.size() == 1 ? PhonemeFromWorkingChar(wchar_t(glyph[0]))
                          : std::nullopt;
    if (!p) return {false, "fixture glyph " + f[1] + " is not a phoneme"};
    want.push_back(*p);
    std::vector<std::string> row;
    for (int l = 0; l < kNumSifatLevels; l++) row.push_back(abbrev.at(f[2 + l]));
    want_sifat.push_back(row);
  }

  auto t0 = std::chrono::steady_clock::now();
  PhonemeSequence seq = Phonetize(word, Attrs(), UtteranceContext{true, true});
  SifatSequence sifat = ExtractSifat(seq, Attrs());
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

  int cell_mismatch = 0, cells = 0;
  for (size_t i = 0; i < std::min(sifat.size(), want_sifat.size()); i++)
    for (int l = 0; l < kNumSifatLevels; l++) {
      cells++;
      if (SifaLevelValues(l)[sifat[i].Get(l)] != want_sifat[i][l])
        cell_mismatch++;
    }
  bool ok = seq.phonemes == want && cell_mismatch == 0 &&
            sifat.size() == want_sifat.size() && ms < 1.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f ms", ms);
  std::string detail = "table column [" + JoinNames(want) + "], produced [" +
                       JoinNames(seq.phonemes) + "]; " +
                       std::to_string(cell_mismatch) + "/" +
                       std::to_string(cells) +
                       " attribute cells differ over the overlapping rows; " +
                       buf;
  return {ok, detail};
}

// 2. Alphabet closure and |sifat| = |phonemes|.
Outcome Closure() {
  auto t0 = std::chrono::steady_clock::now();
  MoshafAttributes attrs = Attrs();
  int ayat = 0, bad = 0;
  for (int sura : {1, 36, 112, 113, 114}) {
    for (const Verse *v : Corpus().SuraVerses(sura)) {
      ayat++;
      PhonemeSequence seq = Phonetize(v->text, attrs, UtteranceContext{});
      SifatSequence s = ExtractSifat(seq, attrs);
      bool ok = s.size() == seq.size() && !seq.phonemes.empty();
      for (Phoneme p : seq.phonemes)
        if (static_cast<int>(p) >= kNumPhonemes) ok = false;
      if (!ok) bad++;
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                 .count();
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d ayat, %d bad, %.3f s", ayat, bad, s);
  return {bad == 0 && s < 1.0, buf};
}

// 3. Madd munfasil length.
Outcome MaddSensitivity() {
  // fii anfusikum: the only madd is the munfasil on the yaa.
  const std::string word = "فِيٓ أَنفُسِكُمۡ";
  std::vector<Phoneme> base;
  std::string detail;
  bool ok = true;
  for (int len : {2, 4, 5}) {
    MoshafAttributes a = Attrs();
    a.madd_monfasel_len = len;
    std::vector<Phoneme> p =
        Phonetize(word, a, UtteranceContext{true, true}).phonemes;
    // The madd site: the first run of madd vowels.
    size_t i = 0;
    while (i < p.size() && !IsMaddVowel(p[i])) i++;
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) j++;
    int run = static_cast<int>(j - i);
    std::vector<Phoneme> rest(p.begin(), p.begin() + i);
    rest.insert(rest.end(), p.begin() + j, p.end());
    if (base.empty()) base = rest;
    ok = ok && run == len && rest == base;
    detail += (detail.empty() ? "" : ", ") + std::to_string(len) + "->" +
              std::to_string(run);
  }
  return {ok, "run lengths " + detail + (ok ? ", rest identical" : "")};
}

// 4. Shadda noon/meem gives three maghnoon nasals.
Outcome ShaddaNasal() {
  MoshafAttributes attrs = Attrs();
  int expected_total = 0, found_total = 0;
  std::string bad;
  for (const std::string &line : ReadFixtureLines("shadda-nasal.txt")) {
    // Oracle: count noon/meem directly followed by shadda in the
    // canonical input (shadda is the first mark after its letter).
    std::u32string in = Utf8ToU32(PrepareInput(line).value);
    int expected = 0;
    for (size_t i = 0; i + 1 < in.size(); i++)
      if ((in[i] == U'ن' || in[i] == U'م') && in[i + 1] == 0x0651) expected++;
    PhonemeSequence seq = Phonetize(line, attrs, UtteranceContext{true, true});
    SifatSequence s = ExtractSifat(seq, attrs);
    int triples = 0;
    bool ok = true;
    for (size_t i = 0; i < seq.size();) {
      Phoneme p = seq.phonemes[i];
      size_t j = i;
      while (j < seq.size() && seq.phonemes[j] == p) j++;
      if ((p == Phoneme::kNoon || p == Phoneme::kMeem) && j - i >= 3) {
        if (j - i == 3) triples++;
        else ok = false;
        for (size_t k = i; k < j; k++)
          if (s[k].ghonna != Ghonna::kMaghnoon) ok = false;
      }
      i = j;
    }
    if (!ok || triples != expected) bad += " [" + line + "]";
    expected_total += expected;
    found_total += triples;
  }
  return {bad.empty() && expected_total > 0,
          std::to_string(expected_total) + " shadda nasals, " +
              std::to_string(found_total) + " maghnoon triples" +
              (bad.empty() ? "" : "; wrong:" + bad)};
}

// Plain-letter segment with edits at the given rate.  Every character,
// spaces included, is edited with probability rate: substituted, deleted,
// or followed by an inserted letter, each equally likely.
std::string Corrupt(const std::u32string &text, double rate, std::mt19937 *rng) {
  static const std::u32string letters =
      U"ابتثجحخدذرزسشصضطظعغفقكلمنهوي";
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::u32string out;
  for (char32_t c : text) {
    if (u(*rng) >= rate) {
      out.push_back(c);
      continue;
    }
    char32_t r = letters[(*rng)() % letters.size()];
    switch ((*rng)() % 3) {
      case 0:
        while (r == c) r = letters[(*rng)() % letters.size()];
        out.push_back(r);
        break;
      case 1:
        break;
      default:
        out.push_back(c);
        out.push_back(r);
    }
  }
  return U32ToUtf8(out);
}

// 5. Tasmeea recovery on sura 36.
Outcome TasmeeaRecovery() {
  auto t0 = std::chrono::steady_clock::now();
  const int sura = 36;
  const QuranCorpus &c = Corpus();
  const int n = c.NumSuraWords(sura);
  std::mt19937 rng(20240229);  // fixed before the first run
  std::vector<std::pair<int, int>> spans;
  std::vector<std::u32string> plain;
  for (int s = 0; s < n;) {
    int w = std::min(n - s, 20 + int(rng() % 21));
    std::u32string text;
    for (int k = s; k < s + w; k++) {
      if (k > s) text.push_back(U' ');
      text += NormalizeForMatching(c.SuraWords(sura)[k].text).value;
    }
    plain.push_back(text);
    spans.push_back({s, w});
    s += w;
  }
  TasmeeaParams params;
  std::vector<std::string> light, heavy;
  for (const std::u32string &t : plain) {
    light.push_back(Corrupt(t, 0.05, &rng));
    heavy.push_back(Corrupt(t, 0.60, &rng));
  }
  std::vector<MatchResult> rl = MatchSegments(light, sura, params, c);
  int exact = 0;
  double min_ratio = 1.0;
  std::string misses;
  for (size_t i = 0; i < rl.size(); i++) {
    min_ratio = std::min(min_ratio, rl[i].ratio);
    if (rl[i].matched && rl[i].ratio >= 0.9 &&
        rl[i].matched->start_word == spans[i].first &&
        rl[i].matched->word_count == spans[i].second) {
      exact++;
    } else {
      misses += " [" + std::to_string(spans[i].first) + "+" +
                std::to_string(spans[i].second) + " got " +
                (rl[i].matched ? std::to_string(rl[i].matched->start_word) +
                                     "+" +
                                     std::to_string(rl[i].matched->word_count)
                               : std::string("null")) +
                " ratio " + std::to_string(rl[i].ratio).substr(0, 6) + "]";
    }
  }
  std::vector<MatchResult> rh = MatchSegments(heavy, sura, params, c);
  int rejected = 0;
  double max_ratio = 0.0;
  for (const MatchResult &r : rh) {
    max_ratio = std::max(max_ratio, r.ratio);
    if (!r.matched && r.ratio < 0.5) rejected++;
  }

  // Hand trace: exact [0,30), garbage, exact [30,60).
  TasmeeaMatcher m(c, sura, params);
  const std::vector<IndexedWord> &w = c.SuraWords(sura);
  int aya_len = 0;
  for (const IndexedWord &iw : w) aya_len += iw.aya == w[30].aya;
  bool trace = true;
  MatchResult a = m.Next(WordWindow(c, sura, 0, 30), true, false);
  trace &= a.matched && m.state().aya_word_cursor == 30 && m.state().penalty == 0;
  MatchResult b = m.Next("xyz qwerty 12345", false, false);
  trace &= !b.matched && b.ratio < 0.5 && m.state().penalty == 40 &&
           m.state().aya_word_cursor == 30 + aya_len;
  MatchResult d = m.Next(WordWindow(c, sura, 30, 30), false, true);
  trace &= d.matched && d.matched->start_word == 30 &&
           d.matched->word_count == 30 && m.state().penalty == 0;

  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                 .count();
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%zu segments; 5%%: %d exact, min ratio %.4f; 60%%: %d "
                "rejected, max ratio %.4f; penalty trace %s; %.2f s",
                spans.size(), exact, min_ratio, rejected, max_ratio,
                trace ? "ok" : "WRONG", s);
  bool ok = exact == int(spans.size()) && rejected == int(spans.size()) &&
            trace && s < 10.0;
  return {ok, buf + (misses.empty() ? "" : "; 5% misses:" + misses)};
}

// 6. CTC forward loss against path enumeration.
Outcome CtcOracle() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  double worst = 0.0;
  long checks = 0, inf_mismatch = 0;
  for (int draw = 0; draw < 100; draw++) {
    for (int T = 1; T <= 6; T++) {
      for (int V = 2; V <= 4; V++) {
        LogProbMatrix m(T, V);
        for (double &x : m.values) x = std::log(u(rng));
        m.Renormalize();
        // Probability of every collapsed label sequence, by enumeration.
        std::map<TokenSeq, double> prob;
        std::vector<int> path(T, 0);
        while (true) {
          TokenSeq col;
          double lp = 0.0;
          for (int t = 0; t < T; t++) {
            lp += m.at(t, path[t]);
            if (path[t] != 0 && (t == 0 || path[t] != path[t - 1]))
              col.push_back(path[t]);
          }
          prob[col] += std::exp(lp);
          int t = 0;
          while (t < T && ++path[t] == V) path[t++] = 0;
          if (t == T) break;
        }
        // All targets of length <= 3.
        std::vector<TokenSeq> targets = {{}};
        for (size_t i = 0; i < targets.size(); i++)
          if (targets[i].size() < 3)
            for (int x = 1; x < V; x++) {
              TokenSeq t = targets[i];
              t.push_back(x);
              targets.push_back(t);
            }
        for (const TokenSeq &target : targets) {
          double loss = CtcForwardLoss(m, target);
          auto it = prob.find(target);
          checks++;
          if (it == prob.end()) {
            if (!std::isinf(loss)) inf_mismatch++;
            continue;
          }
          worst = std::max(worst, std::fabs(loss + std::log(it->second)));
        }
      }
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                 .count();
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%ld comparisons, max |diff| %.3g, %ld infeasibility "
                "mismatches, %.2f s",
                checks, worst, inf_mismatch, s);
  return {worst < 1e-9 && inf_mismatch == 0 && s < 30.0, buf};
}

// 7. Multi-level weighting.
Outcome Weighting() {
  LevelWeights w;
  MultiLevelLogits logits;
  std::map<std::string, TokenSeq> targets;
  for (const std::string &name : LevelNames()) {
    // T = 1 and an empty target: loss = -log p(blank).
    LogProbMatrix m(1, 2);
    double loss = name == "phonemes" ? 1.0 : 0.0;
    m.at(0, 0) = -loss;
    m.at(0, 1) = loss == 0.0 ? -INFINITY : std::log1p(-std::exp(-loss));
    logits.push_back({name, m});
    targets[name] = {};
  }
  double total = MultiLevelLoss(logits, targets, w);
  double sum = w.Sum();
  char buf[128];
  std::snprintf(buf, sizeof(buf), "loss %.17g, weight sum %.17g", total, sum);
  return {total == 0.4 && std::fabs(sum - 1.0) <= 1e-12, buf};
}

// 8. PER properties.
Outcome PerProperties() {
  std::mt19937 rng(8);
  bool ok = true;
  TokenSeq ref;
  for (int i = 0; i < 50; i++) ref.push_back(1 + rng() % 43);
  ok &= PhonemeErrorRate(ref, ref) == 0.0;
  ok &= PhonemeErrorRate(ref, {}) == 1.0;

  // Corpora with k substitutions by a token outside the alphabet: the
  // distance of each pair is exactly its k.
  std::map<std::string, std::vector<SeqPair>> pairs;
  std::vector<double> hand;
  for (const std::string &level : LevelNames()) {
    long edits = 0, len = 0;
    for (int u = 0; u < 20; u++) {
      SeqPair p;
      int n = 5 + rng() % 30;
      for (int i = 0; i < n; i++) p.reference.push_back(1 + rng() % 10);
      p.hypothesis = p.reference;
      int k = rng() % 4;
      std::vector<int> pos(n);
      for (int i = 0; i < n; i++) pos[i] = i;
      std::shuffle(pos.begin(), pos.end(), rng);
      for (int i = 0; i < k; i++) p.hypothesis[pos[i]] = 99;
      edits += k;
      len += n;
      pairs[level].push_back(p);
    }
    hand.push_back(double(edits) / double(len));
  }
  PerReport r = ComputePerReport(pairs);
  double mean = 0.0;
  for (size_t i = 0; i < hand.size(); i++) {
    ok &= r.per_level[i].second == hand[i];
    mean += hand[i];
  }
  mean /= kNumLevels;
  ok &= r.average_per == mean;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "per_phonemes %.6f, average_per %.6f",
                r.per_level[0].second, r.average_per);
  return {ok, buf};
}

}  // namespace
}  // namespace qps

int main() {
  using qps::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {{"golden word phonemes and sifat", qps::GoldenWord},
       {"alphabet closure and sifat parallelism", qps::Closure},
       {"madd munfasil length 2/4/5", qps::MaddSensitivity},
       {"shadda noon/meem as three maghnoon nasals", qps::ShaddaNasal},
       {"tasmeea recovery on sura 36", qps::TasmeeaRecovery},
       {"CTC forward loss equals path enumeration", qps::CtcOracle},
       {"multi-level weighting", qps::Weighting},
       {"PER properties", qps::PerProperties}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); i++) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s - %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf(
      "criterion 9: NOT REPRODUCIBLE - the reference PER figures need the "
      "trained acoustic model and its held-out audio; criteria 1-8 stand in "
      "for it and eval-per scores such a model's output\n");
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
