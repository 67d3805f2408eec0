// include/qps/alphabet.h

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

#ifndef QPS_ALPHABET_H_
#define QPS_ALPHABET_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace qps {

// Phoneme inventory, in the reference model's vocabulary order.  The CTC
// token id of a phoneme is its index plus one (0 is the blank).
enum class Phoneme : unsigned char {
  kHamza, kBaa, kTaa, kThaa, kJeem, kHaaMohmala, kKhaa, kDaal, kThaal, kRaa,
  kZay, kSeen, kSheen, kSaad, kDaad, kTaaMofakhama, kZaaMofakhama, kAyn,
  kGhyn, kFaa, kQaf, kKaf, kLam, kMeem, kNoon, kHaa, kWaw, kYaa, kAlif,
  kYaaMadd, kWawMadd, kFatha, kDama, kKasra, kFathaMomala, kAlifMomala,
  kHamzaMosahala, kQlqla, kNoonMokhfah, kMeemMokhfah, kSakt, kDamaMokhtalasa
};

constexpr int kNumPhonemes = 42;

// Snake-case name, e.g. "haa_mohmala".
const char *PhonemeName(Phoneme p);
std::optional<Phoneme> PhonemeFromName(std::string_view name);

// UTF-8 display glyph used in the human-readable phonetic script.  Letters
// and short vowels use their Arabic glyphs; the special phonemes use the
// glyphs listed in docs/alphabet.md.
const char *PhonemeGlyph(Phoneme p);

// Working character emitted by the last pipeline stage for each phoneme
// (Arabic letters and harakat, Private Use Area for the rest).
wchar_t PhonemeWorkingChar(Phoneme p);
std::optional<Phoneme> PhonemeFromWorkingChar(wchar_t c);

bool IsMaddVowel(Phoneme p);     // alif, waw_madd, yaa_madd, alif_momala.
bool IsShortVowel(Phoneme p);    // fatha, dama, kasra, fatha_momala,
                                 // dama_mokhtalasa.
bool IsVowel(Phoneme p);         // either of the above.
bool IsConsonant(Phoneme p);     // the 28 letters plus the mokhfah nasals and
                                 // hamza_mosahala.

inline int PhonemeIndex(Phoneme p) { return static_cast<int>(p); }
inline Phoneme PhonemeAt(int i) { return static_cast<Phoneme>(i); }

// Code points of the Uthmani script and of the internal markers.
namespace ch {
constexpr wchar_t kHamza = 0x0621;
constexpr wchar_t kAlifMadda = 0x0622;
constexpr wchar_t kAlifHamzaAbove = 0x0623;
constexpr wchar_t kWawHamza = 0x0624;
constexpr wchar_t kAlifHamzaBelow = 0x0625;
constexpr wchar_t kYaaHamza = 0x0626;
constexpr wchar_t kAlif = 0x0627;
constexpr wchar_t kBaa = 0x0628;
constexpr wchar_t kTaaMarbuta = 0x0629;
constexpr wchar_t kTaa = 0x062A;
constexpr wchar_t kThaa = 0x062B;
constexpr wchar_t kJeem = 0x062C;
constexpr wchar_t kHaaMohmala = 0x062D;
constexpr wchar_t kKhaa = 0x062E;
constexpr wchar_t kDaal = 0x062F;
constexpr wchar_t kThaal = 0x0630;
constexpr wchar_t kRaa = 0x0631;
constexpr wchar_t kZay = 0x0632;
constexpr wchar_t kSeen = 0x0633;
constexpr wchar_t kSheen = 0x0634;
constexpr wchar_t kSaad = 0x0635;
constexpr wchar_t kDaad = 0x0636;
constexpr wchar_t kTaaMofakhama = 0x0637;
constexpr wchar_t kZaaMofakhama = 0x0638;
constexpr wchar_t kAyn = 0x0639;
constexpr wchar_t kGhyn = 0x063A;
constexpr wchar_t kTatweel = 0x0640;
constexpr wchar_t kFaa = 0x0641;
constexpr wchar_t kQaf = 0x0642;
constexpr wchar_t kKaf = 0x0643;
constexpr wchar_t kLam = 0x0644;
constexpr wchar_t kMeem = 0x0645;
constexpr wchar_t kNoon = 0x0646;
constexpr wchar_t kHaa = 0x0647;
constexpr wchar_t kWaw = 0x0648;
constexpr wchar_t kAlifMaksura = 0x0649;
constexpr wchar_t kYaa = 0x064A;
constexpr wchar_t kFathatan = 0x064B;
constexpr wchar_t kDammatan = 0x064C;
constexpr wchar_t kKasratan = 0x064D;
constexpr wchar_t kFatha = 0x064E;
constexpr wchar_t kDamma = 0x064F;
constexpr wchar_t kKasra = 0x0650;
constexpr wchar_t kShadda = 0x0651;
constexpr wchar_t kSukunRound = 0x0652;
constexpr wchar_t kMaddaAbove = 0x0653;
constexpr wchar_t kHamzaAbove = 0x0654;
constexpr wchar_t kHamzaBelow = 0x0655;
constexpr wchar_t kDaggerAlif = 0x0670;
constexpr wchar_t kAlifWasla = 0x0671;
constexpr wchar_t kSmallHighSeen = 0x06DC;
constexpr wchar_t kRubElHizb = 0x06DE;
constexpr wchar_t kRoundZero = 0x06DF;
constexpr wchar_t kRectZero = 0x06E0;
constexpr wchar_t kSukun = 0x06E1;       // small high dotless head of khah
constexpr wchar_t kSmallHighMeem = 0x06E2;
constexpr wchar_t kSmallLowSeen = 0x06E3;
constexpr wchar_t kSmallHighMadda = 0x06E4;
constexpr wchar_t kSmallWaw = 0x06E5;
constexpr wchar_t kSmallYaa = 0x06E6;
constexpr wchar_t kSmallHighYaa = 0x06E7;
constexpr wchar_t kSmallHighNoon = 0x06E8;
constexpr wchar_t kSajdaMark = 0x06E9;
constexpr wchar_t kImalaMark = 0x06EA;
constexpr wchar_t kIshmamMark = 0x06EB;
constexpr wchar_t kTasheelMark = 0x06EC;
constexpr wchar_t kSmallLowMeem = 0x06ED;
constexpr wchar_t kOpenFathatan = 0x08F0;
constexpr wchar_t kOpenDammatan = 0x08F1;
constexpr wchar_t kOpenKasratan = 0x08F2;

// Private Use Area assignments.  E001..E00A are phonemes; E020.. are
// pipeline-internal markers that never reach the phoneme stream.
constexpr wchar_t kWawMadd = 0xE001;
constexpr wchar_t kYaaMadd = 0xE002;
constexpr wchar_t kFathaMomala = 0xE003;
constexpr wchar_t kAlifMomala = 0xE004;
constexpr wchar_t kHamzaMosahala = 0xE005;
constexpr wchar_t kQlqla = 0xE006;
constexpr wchar_t kNoonMokhfah = 0xE007;
constexpr wchar_t kMeemMokhfah = 0xE008;
constexpr wchar_t kSakt = 0xE009;
constexpr wchar_t kDamaMokhtalasa = 0xE00A;
constexpr wchar_t kPauseBoundary = 0xE020;  // waqf inside one input text
constexpr wchar_t kAynLeen = 0xE022;        // leen of the spelled letter ayn
constexpr wchar_t kPauseSukun = 0xE023;     // sukun produced by waqf
constexpr wchar_t kGhunnaHint = 0xE045;     // previous phoneme is nasalised
}  // namespace ch

}  // namespace qps

#endif  // QPS_ALPHABET_H_
