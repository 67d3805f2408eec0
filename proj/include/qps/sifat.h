// include/qps/sifat.h

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

#ifndef QPS_SIFAT_H_
#define QPS_SIFAT_H_

#include <array>
#include <string>
#include <vector>

#include "qps/alphabet.h"
#include "qps/moshaf-attributes.h"
#include "qps/phonetizer.h"

namespace qps {

// Value order inside each enum is the CTC token order of that level
// (token = value + 1, 0 is blank).
enum class HamsJahr : unsigned char { kHams, kJahr };
enum class Shidda : unsigned char { kShadeed, kBetween, kRikhw };
enum class Tafkheem : unsigned char { kMofakham, kMoraqaq };
enum class Itbaq : unsigned char { kMonfateh, kMotbaq };
enum class Safeer : unsigned char { kSafeer, kNoSafeer };
enum class Qalqla : unsigned char { kMoqalqal, kNotMoqalqal };
enum class Tikraar : unsigned char { kMokarar, kNotMokarar };
enum class Tafashie : unsigned char { kMotafashie, kNotMotafashie };
enum class Istitala : unsigned char { kMostateel, kNotMostateel };
enum class Ghonna : unsigned char { kMaghnoon, kNotMaghnoon };

constexpr int kNumSifatLevels = 10;

// "hams_or_jahr", "shidda_or_rakhawa", ... in the order of SifatVector.
const char *SifaLevelName(int level);
// Value names of a level in enum order, e.g. {"hams", "jahr"}.
const std::vector<std::string> &SifaLevelValues(int level);
// Level index for a name, or -1.
int SifaLevelIndex(const std::string &name);

struct SifatVector {
  HamsJahr hams_or_jahr = HamsJahr::kJahr;
  Shidda shidda_or_rakhawa = Shidda::kRikhw;
  Tafkheem tafkheem_or_taqeeq = Tafkheem::kMoraqaq;
  Itbaq itbaq = Itbaq::kMonfateh;
  Safeer safeer = Safeer::kNoSafeer;
  Qalqla qalqla = Qalqla::kNotMoqalqal;
  Tikraar tikraar = Tikraar::kNotMokarar;
  Tafashie tafashie = Tafashie::kNotMotafashie;
  Istitala istitala = Istitala::kNotMostateel;
  Ghonna ghonna = Ghonna::kNotMaghnoon;

  int Get(int level) const;
  void Set(int level, int value);
  bool operator==(const SifatVector &o) const = default;
};

using SifatSequence = std::vector<SifatVector>;

// The attributes a phoneme has on its own.  values[level] is -1 where
// context decides: tafkheem_or_taqeeq of raa, lam, vowels, qlqla and
// noon_mokhfah; qalqla of the five qalqla letters; ghonna of noon and meem.
struct PartialSifat {
  std::array<int, kNumSifatLevels> values{};
  bool IsSet(int level) const { return values[level] >= 0; }
};

PartialSifat BaseSifat(Phoneme p);

// One vector per phoneme.  Context rules: raa (including the raa_*
// attributes), the lam of the divine name, vowels and qlqla inheriting the
// emphasis of their consonant, qalqla on the letter echoed by a qlqla
// phoneme, ghonna on nasal runs of three, the mokhfah nasals and hinted
// idgham sites.
SifatSequence ExtractSifat(const PhonemeSequence &seq,
                           const MoshafAttributes &attrs);

// Ten characters, one per level; legend in docs/alphabet.md.
std::string CompactSifat(const SifatVector &v);
SifatVector ParseCompactSifat(const std::string &code);

// The raw table the base sifat come from (data/sifat_base.tsv).
const char *SifatTableText();

}  // namespace qps

#endif  // QPS_SIFAT_H_
