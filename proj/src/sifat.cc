// src/sifat.cc

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

#include "qps/sifat.h"

#include <cstring>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qps {

namespace {

const char *kLevelNames[kNumSifatLevels] = {
  "hams_or_jahr", "shidda_or_rakhawa", "tafkheem_or_taqeeq", "itbaq",
  "safeer", "qalqla", "tikraar", "tafashie", "istitala", "ghonna",
};

const std::vector<std::string> kLevelValues[kNumSifatLevels] = {
  {"hams", "jahr"},
  {"shadeed", "between", "rikhw"},
  {"mofakham", "moraqaq"},
  {"monfateh", "motbaq"},
  {"safeer", "no_safeer"},
  {"moqalqal", "not_moqalqal"},
  {"mokarar", "not_mokarar"},
  {"motafashie", "not_motafashie"},
  {"mostateel", "not_mostateel"},
  {"maghnoon", "not_maghnoon"},
};

// Compact code characters, value order as above.
const char *kCompact[kNumSifatLevels] = {
  "hj", "sbr", "fq", "nt", "sn", "qn", "kn", "tn", "sn", "gn",
};

enum class TafkheemRule { kFixed, kRaa, kLam, kInherit, kNext };

struct TableRow {
  PartialSifat base;
  TafkheemRule tafkheem = TafkheemRule::kFixed;
  bool qalqla_letter = false;
  bool nasal = false;
};

struct Table {
  TableRow rows[kNumPhonemes];
};

int ValueIndex(int level, const std::string &name) {
  const std::vector<std::string> &v = kLevelValues[level];
  for (size_t i = 0; i < v.size(); i++)
    if (v[i] == name) return static_cast<int>(i);
  return -1;
}

// The table is compiled in; a malformed one is a build defect.
Table ParseTable() {
  Table t;
  bool seen[kNumPhonemes] = {};
  std::istringstream in(SifatTableText());
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) f.push_back(cell);
    if (f.size() != kNumSifatLevels + 1)
      throw std::logic_error("sifat table: bad row: " + line);
    if (header) {
      for (int l = 0; l < kNumSifatLevels; l++)
        if (f[l + 1] != kLevelNames[l])
          throw std::logic_error("sifat table: bad header " + f[l + 1]);
      header = false;
      continue;
    }
    std::optional<Phoneme> p = PhonemeFromName(f[0]);
    if (!p) throw std::logic_error("sifat table: unknown phoneme " + f[0]);
    TableRow &row = t.rows[PhonemeIndex(*p)];
    if (seen[PhonemeIndex(*p)])
      throw std::logic_error("sifat table: duplicate " + f[0]);
    seen[PhonemeIndex(*p)] = true;
    for (int l = 0; l < kNumSifatLevels; l++) {
      const std::string &v = f[l + 1];
      int idx = ValueIndex(l, v);
      row.base.values[l] = idx;
      if (idx >= 0) continue;
      if (l == 2 && v == "raa") row.tafkheem = TafkheemRule::kRaa;
      else if (l == 2 && v == "lam") row.tafkheem = TafkheemRule::kLam;
      else if (l == 2 && v == "inherit") row.tafkheem = TafkheemRule::kInherit;
      else if (l == 2 && v == "next") row.tafkheem = TafkheemRule::kNext;
      else if (l == 5 && v == "potential") row.qalqla_letter = true;
      else if (l == 9 && v == "potential") row.nasal = true;
      else
        throw std::logic_error("sifat table: bad value " + v + " for " +
                               f[0]);
    }
  }
  for (int i = 0; i < kNumPhonemes; i++)
    if (!seen[i])
      throw std::logic_error(std::string("sifat table: no row for ") +
                             PhonemeName(PhonemeAt(i)));
  return t;
}

const Table &GetTable() {
  static const Table t = ParseTable();
  return t;
}

bool Is(const std::vector<Phoneme> &p, long i, Phoneme x) {
  return i >= 0 && i < static_cast<long>(p.size()) && p[i] == x;
}

bool IsIstila(Phoneme p) {
  switch (p) {
    case Phoneme::kKhaa: case Phoneme::kSaad: case Phoneme::kDaad:
    case Phoneme::kGhyn: case Phoneme::kTaaMofakhama: case Phoneme::kQaf:
    case Phoneme::kZaaMofakhama:
      return true;
    default:
      return false;
  }
}

// True if p[end - pattern.size(), end) equals pattern.
bool EndsWith(const std::vector<Phoneme> &p, size_t end,
              std::initializer_list<Phoneme> pattern) {
  if (end < pattern.size()) return false;
  size_t i = end - pattern.size();
  for (Phoneme x : pattern)
    if (p[i++] != x) return false;
  return true;
}

Tafkheem FromChoice(RaaChoice c, Tafkheem wasl_fallback) {
  switch (c) {
    case RaaChoice::kTafkheem: return Tafkheem::kMofakham;
    case RaaChoice::kTarqeeq: return Tafkheem::kMoraqaq;
    default: return wasl_fallback;
  }
}

// Tafkheem of a raa run p[i, j).
Tafkheem RaaTafkheem(const PhonemeSequence &seq, size_t i, size_t j,
                     const std::vector<bool> &word_start,
                     const MoshafAttributes &attrs) {
  using P = Phoneme;
  const std::vector<Phoneme> &p = seq.phonemes;
  const size_t n = p.size();
  if (j < n) {
    switch (p[j]) {
      case P::kFatha: case P::kDama: case P::kDamaMokhtalasa:
      case P::kAlif: case P::kWawMadd:
        return Tafkheem::kMofakham;
      case P::kKasra: case P::kYaaMadd: case P::kFathaMomala:
      case P::kAlifMomala:
        return Tafkheem::kMoraqaq;
      default:
        break;
    }
  }
  // Sakin raa.  فِرۡقࣲ has its own attribute.
  if (EndsWith(p, i + 2, {P::kFaa, P::kKasra, P::kRaa}) && Is(p, j, P::kQaf))
    return attrs.raa_firq == RaaFirq::kTarqeeq ? Tafkheem::kMoraqaq
                                               : Tafkheem::kMofakham;
  const bool final = j == n;
  if (final) {
    if (EndsWith(p, j, {P::kMeem, P::kKasra, P::kSaad, P::kRaa}))
      return FromChoice(attrs.raa_misr, Tafkheem::kMofakham);
    if (EndsWith(p, j, {P::kQaf, P::kKasra, P::kTaaMofakhama, P::kRaa}) ||
        EndsWith(p, j,
                 {P::kQaf, P::kKasra, P::kTaaMofakhama, P::kQlqla, P::kRaa}))
      return FromChoice(attrs.raa_alqitr, Tafkheem::kMoraqaq);
    if (EndsWith(p, j, {P::kWaw, P::kFatha, P::kNoon, P::kDama, P::kThaal,
                        P::kDama, P::kRaa}))
      return FromChoice(attrs.raa_nudhur, Tafkheem::kMoraqaq);
    if (EndsWith(p, j, {P::kYaa, P::kFatha, P::kSeen, P::kRaa}) ||
        EndsWith(p, j, {P::kHamza, P::kFatha, P::kSeen, P::kRaa}))
      return FromChoice(attrs.raa_yasr, Tafkheem::kMoraqaq);
  }
  if (i == 0) return Tafkheem::kMofakham;
  size_t k = i - 1;
  if (p[k] == P::kKasra) {
    // A kasra of the previous word, or of a hamzat wasl the utterance
    // starts with, does not thin the raa.
    if (word_start[i]) return Tafkheem::kMofakham;
    if (k == 1 && p[0] == P::kHamza && seq.source_text.rfind("ٱ", 0) == 0)
      return Tafkheem::kMofakham;
    if (j < n && !word_start[j] && IsIstila(p[j])) return Tafkheem::kMofakham;
    return Tafkheem::kMoraqaq;
  }
  if (p[k] == P::kYaaMadd) return Tafkheem::kMoraqaq;
  if (p[k] == P::kYaa) {
    size_t m = k;
    while (m > 0 && p[m - 1] == P::kYaa) m--;
    if (m > 0 && p[m - 1] == P::kFatha) return Tafkheem::kMoraqaq;
  }
  if (final && k >= 1) {
    // Raa after a sakin letter at a pause follows the vowel before it.
    size_t q = k;
    if (p[q] == P::kQlqla && q >= 1) q--;
    if (IsConsonant(p[q]) && q >= 1) {
      if (p[q - 1] == P::kKasra)
        return IsIstila(p[q]) ? Tafkheem::kMofakham : Tafkheem::kMoraqaq;
      if (p[q - 1] == P::kFathaMomala) return Tafkheem::kMoraqaq;
      return Tafkheem::kMofakham;
    }
  }
  if (p[k] == P::kFathaMomala || p[k] == P::kAlifMomala)
    return Tafkheem::kMoraqaq;
  return Tafkheem::kMofakham;
}

}  // namespace

const char *SifaLevelName(int level) { return kLevelNames[level]; }

const std::vector<std::string> &SifaLevelValues(int level) {
  return kLevelValues[level];
}

int SifaLevelIndex(const std::string &name) {
  for (int l = 0; l < kNumSifatLevels; l++)
    if (name == kLevelNames[l]) return l;
  return -1;
}

int SifatVector::Get(int level) const {
  switch (level) {
    case 0: return static_cast<int>(hams_or_jahr);
    case 1: return static_cast<int>(shidda_or_rakhawa);
    case 2: return static_cast<int>(tafkheem_or_taqeeq);
    case 3: return static_cast<int>(itbaq);
    case 4: return static_cast<int>(safeer);
    case 5: return static_cast<int>(qalqla);
    case 6: return static_cast<int>(tikraar);
    case 7: return static_cast<int>(tafashie);
    case 8: return static_cast<int>(istitala);
    case 9: return static_cast<int>(ghonna);
  }
  throw std::out_of_range("sifa level");
}

void SifatVector::Set(int level, int value) {
  if (value < 0 || value >= static_cast<int>(kLevelValues[level].size()))
    throw std::out_of_range("sifa value");
  auto v = static_cast<unsigned char>(value);
  switch (level) {
    case 0: hams_or_jahr = static_cast<HamsJahr>(v); return;
    case 1: shidda_or_rakhawa = static_cast<Shidda>(v); return;
    case 2: tafkheem_or_taqeeq = static_cast<Tafkheem>(v); return;
    case 3: itbaq = static_cast<Itbaq>(v); return;
    case 4: safeer = static_cast<Safeer>(v); return;
    case 5: qalqla = static_cast<Qalqla>(v); return;
    case 6: tikraar = static_cast<Tikraar>(v); return;
    case 7: tafashie = static_cast<Tafashie>(v); return;
    case 8: istitala = static_cast<Istitala>(v); return;
    case 9: ghonna = static_cast<Ghonna>(v); return;
  }
  throw std::out_of_range("sifa level");
}

PartialSifat BaseSifat(Phoneme p) {
  return GetTable().rows[PhonemeIndex(p)].base;
}

SifatSequence ExtractSifat(const PhonemeSequence &seq,
                           const MoshafAttributes &attrs) {
  using P = Phoneme;
  const Table &table = GetTable();
  const std::vector<Phoneme> &p = seq.phonemes;
  const size_t n = p.size();
  SifatSequence out(n);
  std::vector<bool> word_start(n + 1, false);
  for (int w : seq.word_starts)
    if (w >= 0 && static_cast<size_t>(w) <= n) word_start[w] = true;

  for (size_t i = 0; i < n; i++) {
    const TableRow &row = table.rows[PhonemeIndex(p[i])];
    for (int l = 0; l < kNumSifatLevels; l++)
      if (row.base.IsSet(l)) out[i].Set(l, row.base.values[l]);
  }

  // Lam of the divine name: two lams, fatha, alif run, haa.
  for (size_t i = 0; i + 4 < n; i++) {
    if (p[i] != P::kLam || p[i + 1] != P::kLam || p[i + 2] != P::kFatha ||
        p[i + 3] != P::kAlif)
      continue;
    size_t k = i + 3;
    while (k < n && p[k] == P::kAlif) k++;
    if (k >= n || p[k] != P::kHaa) continue;
    if (i > 0 && p[i - 1] == P::kKasra) continue;
    out[i].tafkheem_or_taqeeq = Tafkheem::kMofakham;
    out[i + 1].tafkheem_or_taqeeq = Tafkheem::kMofakham;
  }

  for (size_t i = 0; i < n; i++) {
    if (p[i] != P::kRaa || (i > 0 && p[i - 1] == P::kRaa)) continue;
    size_t j = i;
    while (j < n && p[j] == P::kRaa) j++;
    Tafkheem t = RaaTafkheem(seq, i, j, word_start, attrs);
    for (size_t k = i; k < j; k++) out[k].tafkheem_or_taqeeq = t;
  }

  // noon_mokhfah takes the emphasis of the letter it hides before.
  for (size_t i = n; i-- > 0;) {
    if (table.rows[PhonemeIndex(p[i])].tafkheem != TafkheemRule::kNext)
      continue;
    if (i + 1 < n) out[i].tafkheem_or_taqeeq = out[i + 1].tafkheem_or_taqeeq;
  }

  // Vowels and qlqla follow the nearest preceding consonant.
  Tafkheem last = Tafkheem::kMoraqaq;
  for (size_t i = 0; i < n; i++) {
    if (table.rows[PhonemeIndex(p[i])].tafkheem == TafkheemRule::kInherit)
      out[i].tafkheem_or_taqeeq = last;
    else if (IsConsonant(p[i]))
      last = out[i].tafkheem_or_taqeeq;
  }

  for (size_t i = 0; i < n; i++) {
    if (p[i] != P::kQlqla) continue;
    if (i > 0 && table.rows[PhonemeIndex(p[i - 1])].qalqla_letter)
      out[i - 1].qalqla = Qalqla::kMoqalqal;
  }

  // Ghunna: a nasal held for three beats, and hinted idgham sites.
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j < n && p[j] == p[i]) j++;
    if ((p[i] == P::kNoon || p[i] == P::kMeem) && j - i >= 3)
      for (size_t k = i; k < j; k++) out[k].ghonna = Ghonna::kMaghnoon;
    i = j;
  }
  for (int h : seq.ghunna_hints)
    if (h >= 0 && static_cast<size_t>(h) < n)
      out[h].ghonna = Ghonna::kMaghnoon;
  return out;
}

std::string CompactSifat(const SifatVector &v) {
  std::string s;
  for (int l = 0; l < kNumSifatLevels; l++) s += kCompact[l][v.Get(l)];
  return s;
}

SifatVector ParseCompactSifat(const std::string &code) {
  if (code.size() != kNumSifatLevels)
    throw std::invalid_argument("compact sifat code must have 10 characters");
  SifatVector v;
  for (int l = 0; l < kNumSifatLevels; l++) {
    const char *c = kCompact[l];
    const char *hit = strchr(c, code[l]);
    if (!hit || code[l] == '\0')
      throw std::invalid_argument("bad compact sifat code " + code);
    v.Set(l, static_cast<int>(hit - c));
  }
  return v;
}

}  // namespace qps
