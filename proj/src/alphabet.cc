// src/alphabet.cc

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

#include "qps/alphabet.h"

namespace qps {

namespace {

struct PhonemeInfo {
  const char *name;
  const char *glyph;
  wchar_t working;
};

// Order must follow enum Phoneme.
const PhonemeInfo kInfo[kNumPhonemes] = {
  {"hamza", "ء", ch::kHamza},
  {"baa", "ب", ch::kBaa},
  {"taa", "ت", ch::kTaa},
  {"thaa", "ث", ch::kThaa},
  {"jeem", "ج", ch::kJeem},
  {"haa_mohmala", "ح", ch::kHaaMohmala},
  {"khaa", "خ", ch::kKhaa},
  {"daal", "د", ch::kDaal},
  {"thaal", "ذ", ch::kThaal},
  {"raa", "ر", ch::kRaa},
  {"zay", "ز", ch::kZay},
  {"seen", "س", ch::kSeen},
  {"sheen", "ش", ch::kSheen},
  {"saad", "ص", ch::kSaad},
  {"daad", "ض", ch::kDaad},
  {"taa_mofakhama", "ط", ch::kTaaMofakhama},
  {"zaa_mofakhama", "ظ", ch::kZaaMofakhama},
  {"ayn", "ع", ch::kAyn},
  {"ghyn", "غ", ch::kGhyn},
  {"faa", "ف", ch::kFaa},
  {"qaf", "ق", ch::kQaf},
  {"kaf", "ك", ch::kKaf},
  {"lam", "ل", ch::kLam},
  {"meem", "م", ch::kMeem},
  {"noon", "ن", ch::kNoon},
  {"haa", "ه", ch::kHaa},
  {"waw", "و", ch::kWaw},
  {"yaa", "ي", ch::kYaa},
  {"alif", "ا", ch::kAlif},
  {"yaa_madd", "ۦ", ch::kYaaMadd},
  {"waw_madd", "ۥ", ch::kWawMadd},
  {"fatha", "َ", ch::kFatha},
  {"dama", "ُ", ch::kDamma},
  {"kasra", "ِ", ch::kKasra},
  {"fatha_momala", "۪", ch::kFathaMomala},
  {"alif_momala", "ـ", ch::kAlifMomala},
  {"hamza_mosahala", "ٲ", ch::kHamzaMosahala},
  {"qlqla", "ڇ", ch::kQlqla},
  {"noon_mokhfah", "ں", ch::kNoonMokhfah},
  {"meem_mokhfah", "۾", ch::kMeemMokhfah},
  {"sakt", "ۜ", ch::kSakt},
  {"dama_mokhtalasa", "ؙ", ch::kDamaMokhtalasa},
};

}  // namespace

const char *PhonemeName(Phoneme p) { return kInfo[PhonemeIndex(p)].name; }

const char *PhonemeGlyph(Phoneme p) { return kInfo[PhonemeIndex(p)].glyph; }

wchar_t PhonemeWorkingChar(Phoneme p) {
  return kInfo[PhonemeIndex(p)].working;
}

std::optional<Phoneme> PhonemeFromName(std::string_view name) {
  for (int i = 0; i < kNumPhonemes; i++)
    if (name == kInfo[i].name) return PhonemeAt(i);
  return std::nullopt;
}

std::optional<Phoneme> PhonemeFromWorkingChar(wchar_t c) {
  for (int i = 0; i < kNumPhonemes; i++)
    if (c == kInfo[i].working) return PhonemeAt(i);
  return std::nullopt;
}

bool IsMaddVowel(Phoneme p) {
  return p == Phoneme::kAlif || p == Phoneme::kWawMadd ||
         p == Phoneme::kYaaMadd || p == Phoneme::kAlifMomala;
}

bool IsShortVowel(Phoneme p) {
  return p == Phoneme::kFatha || p == Phoneme::kDama || p == Phoneme::kKasra ||
         p == Phoneme::kFathaMomala || p == Phoneme::kDamaMokhtalasa;
}

bool IsVowel(Phoneme p) { return IsMaddVowel(p) || IsShortVowel(p); }

bool IsConsonant(Phoneme p) {
  return PhonemeIndex(p) <= PhonemeIndex(Phoneme::kYaa) ||
         p == Phoneme::kHamzaMosahala || p == Phoneme::kNoonMokhfah ||
         p == Phoneme::kMeemMokhfah;
}

}  // namespace qps
