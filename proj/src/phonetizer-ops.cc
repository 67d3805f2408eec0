// src/phonetizer-ops.cc

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

#include "phonetizer-ops.h"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "qps/base.h"
#include "qps/utf8.h"
#include "rewrite.h"

namespace qps {
namespace internal {

using std::wstring;
using namespace ch;  // NOLINT

namespace {

// Pattern fragments.  Letters include the private-use consonants that exist
// from operation 18 on; marks include every private-use marker that sits
// after a letter.
const wstring kLetterSet =
    L"\u0621-\u063A\u0641-\u064A\u0671\uE005\uE007\uE008";
const wstring kMarkSet =
    L"\u064B-\u065F\u0670\u06D6-\u06ED\u08F0-\u08F2"
    L"\uE00A\uE022\uE023\uE045";
const wstring kLetter = L"[" + kLetterSet + L"]";
const wstring kNoMark = L"(?![" + kMarkSet + L"])";
const wstring kHarakat = L"[\u064E\u064F\u0650]";
const wstring kTanween = L"[\u064B\u064C\u064D\u08F0\u08F1\u08F2]";
const wstring kIqlabMark = L"[\u06E2\u06ED]";
const wstring kIkhfaLetters =
    L"[\u062A\u062B\u062C\u062F\u0630\u0632\u0633\u0634\u0635\u0636"
    L"\u0637\u0638\u0641\u0642\u0643]";

struct Env {
  const MoshafAttributes &attrs;
  UtteranceContext ctx;
};

wstring W(wchar_t c) { return wstring(1, c); }

int MarkRank(wchar_t c) {
  if (c == kShadda) return 0;
  if (c == kSmallHighSeen || c == kSmallLowSeen) return 1;
  if ((c >= kFathatan && c <= kKasra) ||
      (c >= kOpenFathatan && c <= kOpenKasratan))
    return 2;
  if (c == kSukun || c == kRoundZero || c == kRectZero) return 3;
  return 4;
}

// Marks that form a sortable cluster after a letter.  The dagger alif,
// madda and iqlab marks keep their written position.
bool IsClusterMark(wchar_t c) {
  return (c >= kFathatan && c <= kSukunRound) || c == kHamzaAbove ||
         c == kHamzaBelow || c == kSmallHighSeen || c == kSmallLowSeen ||
         c == kRoundZero || c == kRectZero || c == kSukun ||
         c == kImalaMark || c == kIshmamMark || c == kTasheelMark ||
         (c >= kOpenFathatan && c <= kOpenKasratan);
}

bool IsCarrier(wchar_t c) {
  return c == kTatweel || c == kAlif || c == kWaw || c == kYaa ||
         c == kAlifMaksura || c == kDaggerAlif;
}

// Literal keys and replacements are written by hand; put them in the same
// mark order as the text they are matched against.
wstring K(const char *utf8) {
  wstring w = Utf8ToWide(utf8);
  CanonicalizeMarks(&w);
  return w;
}

std::vector<wstring> Words(const wstring &s) {
  std::vector<wstring> out;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(L' ', i);
    if (j == wstring::npos) j = s.size();
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

wstring Join(const std::vector<wstring> &words) {
  wstring out;
  for (size_t i = 0; i < words.size(); i++) {
    if (i) out += L' ';
    out += words[i];
  }
  return out;
}

// Base letters of a word, marks dropped.
wstring Skeleton(const wstring &w) {
  wstring out;
  for (wchar_t c : w)
    if (IsLetterChar(c)) out += c;
  return out;
}

// Word-anchored pattern for a literal key.
wstring WordKey(const wstring &key) { return L"(^| )" + key + L"(?= |$)"; }

void ReplaceWord(wstring *s, const wstring &key, const wstring &repl) {
  Rewrite(s, WordKey(key), L"$1" + repl);
}

// ---------------------------------------------------------------- op 1

struct Initial {
  const char *skeleton;
  const char *spelled;
};

// Letter names follow the Hafs reading; a name ending in a sakin letter is
// joined to the next name by the junction pass below.
const Initial kInitials[] = {
  {"الم", "أَلِفۡ لَآمۡ مِيٓمۡ"},
  {"المص", "أَلِفۡ لَآمۡ مِيٓمۡ صَآدۡ"},
  {"الر", "أَلِفۡ لَآمۡ رَا"},
  {"المر", "أَلِفۡ لَآمۡ مِيٓمۡ رَا"},
  {"كهيعص", "كَآفۡ هَا يَا عَيۡنۡ صَآدۡ"},
  {"طه", "طَا هَا"},
  {"طسم", "طَا سِيٓنۡ مِيٓمۡ"},
  {"طس", "طَا سِيٓنۡ"},
  {"يس", "يَا سِيٓنۡ"},
  {"ص", "صَآدۡ"},
  {"حم", "حَا مِيٓمۡ"},
  {"عسق", "عَيۡنۡ سِيٓنۡ قَآفۡ"},
  {"ق", "قَآفۡ"},
  {"ن", "نُوٓنۡ"},
};

void DisassembleHrofMoqatta(wstring *s, const Env &) {
  std::vector<wstring> words = Words(*s);
  std::vector<wstring> out;
  std::vector<bool> spelled;
  for (const wstring &w : words) {
    bool only_letters = true;
    wstring skel;
    for (wchar_t c : w) {
      if (c == kMaddaAbove) continue;
      if (!IsLetterChar(c)) only_letters = false;
      skel += c;
    }
    const Initial *hit = nullptr;
    if (only_letters) {
      for (const Initial &in : kInitials)
        if (skel == Utf8ToWide(in.skeleton)) hit = &in;
    }
    if (!hit) {
      out.push_back(w);
      spelled.push_back(false);
      continue;
    }
    for (const wstring &name : Words(K(hit->spelled))) {
      out.push_back(name);
      spelled.push_back(true);
    }
  }
  // Junctions: a spelled sakin letter merges into an identical next letter
  // (noon into meem, daal into thaal as well) and a sakin noon before an
  // ikhfa letter loses its sukun.
  const wstring ikhfa = Utf8ToWide("تثجدذزسشصضطظفقك");
  for (size_t i = 0; i + 1 < out.size(); i++) {
    wstring &w = out[i];
    if (!spelled[i] || w.size() < 2 || w.back() != kSukun) continue;
    wchar_t x = w[w.size() - 2];
    wchar_t y = out[i + 1][0];
    bool idgham = y == x || (x == kNoon && y == kMeem) ||
                  (x == kDaal && y == kThaal);
    if (idgham) {
      w.pop_back();
      if (out[i + 1].size() < 2 || out[i + 1][1] != kShadda)
        out[i + 1].insert(1, 1, kShadda);
    } else if (x == kNoon && ikhfa.find(y) != wstring::npos) {
      w.pop_back();
    }
  }
  *s = Join(out);
}

// ---------------------------------------------------------------- op 2

bool EndsText(const wstring &s, const wstring &key) {
  return s.size() >= key.size() &&
         s.compare(s.size() - key.size(), key.size(), key) == 0;
}

// Word-specific rulings.  Each is keyed on the exact canonical spelling.
void SpecialCases(wstring *s, const Env &e) {
  const MoshafAttributes &a = e.attrs;
  const wstring pause = W(kPauseBoundary);
  const wstring sakt = W(kSakt);

  // Seen or saad.
  auto seen_saad = [&](const char *key, const char *seen, const char *saad,
                       SeenSaad v) {
    Rewrite(s, K(key), K(v == SeenSaad::kSeen ? seen : saad));
  };
  seen_saad("يَبۡصُۜط", "يَبۡسُط", "يَبۡصُط", a.yabsut);
  seen_saad("بَصۜۡطَة", "بَسۡطَة", "بَصۡطَة", a.bastah);
  seen_saad("مُصَۜيۡطِر", "مُسَيۡطِر", "مُصَيۡطِر", a.almusaytirun);
  seen_saad("بِمُصَيۡطِر", "بِمُسَيۡطِر", "بِمُصَيۡطِر", a.bimusaytir);

  // The second hamza of ءَآلذَّكَرَيۡنِ, ءَآللَّهُ, ءَآلۡـَٰٔنَ.
  if (a.tasheel_or_madd == TasheelOrMadd::kTasheel)
    Rewrite(s, L"(^| )" + K("ءَآل"), L"$1" + K("ءَا۬ل"));

  auto izhar_idgham_waqf = [&](const char *key, const char *izhar,
                               const char *left, const char *right,
                               IzharIdghamWaqf v) {
    if (v == IzharIdghamWaqf::kIzhar)
      ReplaceWord(s, K(key), K(izhar));
    else if (v == IzharIdghamWaqf::kWaqf)
      ReplaceWord(s, K(key), K(left) + pause + K(right));
  };
  izhar_idgham_waqf("يَلۡهَث ذَّـٰلِكَ", "يَلۡهَثۡ ذَـٰلِكَ", "يَلۡهَثۡ",
                    "ذَـٰلِكَ", a.yalhath_dhalik);
  izhar_idgham_waqf("ٱرۡكَب مَّعَنَا", "ٱرۡكَبۡ مَعَنَا", "ٱرۡكَبۡ", "مَعَنَا",
                    a.irkab_maana);

  // Ishmam is a lip gesture with no sound; it reads as the plain form.
  if (a.noon_tamna == NoonTamna::kIshmam)
    ReplaceWord(s, K("تَأۡمَ۫نَّا"), K("تَأۡمَنَّا"));
  else
    ReplaceWord(s, K("تَأۡمَ۫نَّا"),
                K("تَأۡمَن") + W(kDamaMokhtalasa) + K("نَا"));

  if (a.harakat_daaf == HarakatDaaf::kDam) {
    for (const char *phrase :
         {"مِّن ضَعۡفࣲ", "بَعۡدِ ضَعۡفࣲ", "قُوَّةࣲ ضَعۡفࣰا"}) {
      wstring key = K(phrase);
      wstring repl = key;
      size_t p = repl.find(K("ضَعۡف"));
      repl[p + 1] = kDamma;
      ReplaceWord(s, key, repl);
    }
  }

  // Word-final forms that depend on stopping at the end of the text.
  if (e.ctx.ends_with_pause) {
    wstring k = K("سَلَٰسِلَا۟");
    if (EndsText(*s, k))
      s->replace(s->size() - k.size(), k.size(),
                 K(a.alif_salasila == AlifSalasila::kHadhf ? "سَلَٰسِلَ"
                                                           : "سَلَٰسِلَا"));
    k = K("ءَاتَىٰنِۦَ");
    if (EndsText(*s, k))
      s->replace(s->size() - k.size(), k.size(),
                 K(a.yaa_ataan == YaaAtaan::kHadhf ? "ءَاتَىٰنِ"
                                                   : "ءَاتَىٰنِي"));
  }
  if (e.ctx.starts_utterance) {
    wstring k = K("ٱلِٱسۡمُ");
    if (s->compare(0, k.size(), k) == 0)
      s->replace(0, k.size(),
                 K(a.start_with_ism == StartWithIsm::kLism ? "لِسۡمُ"
                                                           : "ءَلِسۡمُ"));
  }

  // Sakt sites.  key is the word with the sakt mark; connected is the
  // reading without any stop, next the word it connects to.
  struct SaktSite {
    const char *key;
    const char *next;       // "" if the site does not depend on it
    const char *connected;  // replacement for "key next" (or key)
    int choice;             // 0 sakt, 1 waqf, 2 connected
  };
  auto sc = [](SaktChoice c) {
    return c == SaktChoice::kSakt ? 0 : c == SaktChoice::kWaqf ? 1 : 2;
  };
  int maleeyah = a.sakt_maleeyah == MaleeyahChoice::kSakt   ? 0
                 : a.sakt_maleeyah == MaleeyahChoice::kWaqf ? 1
                                                            : 2;
  const SaktSite sites[] = {
    {"عِوَجَاۜ", "", "عِوَجࣰا", sc(a.sakt_iwaja)},
    {"مَّرۡقَدِنَاۜ", "", "مَّرۡقَدِنَا", sc(a.sakt_marqdena)},
    {"مَنۡۜ", "رَاقࣲ", "مَن رَّاقࣲ", sc(a.sakt_man_raq)},
    {"بَلۡۜ", "رَانَ", "بَل رَّانَ", sc(a.sakt_bal_ran)},
    {"مَالِيَهۡۜ", "هَلَكَ", "مَالِيَه هَّلَكَ", maleeyah},
  };
  for (const SaktSite &site : sites) {
    wstring key = K(site.key);
    wstring plain = key;
    plain.erase(std::remove(plain.begin(), plain.end(), kSmallHighSeen),
                plain.end());
    wstring next = K(site.next);
    wstring tail = next.empty() ? L"" : L" " + next;
    // Only a stop inside the text is a choice; at the end the text stops.
    wstring follow = next.empty() ? L"(?= )" : L"(?= " + next + L"(?: |$))";
    wstring pat = L"(^| )" + key + follow;
    switch (site.choice) {
      case 0:
        Rewrite(s, pat, L"$1" + plain + sakt);
        break;
      case 1:
        Rewrite(s, pat + L" ", L"$1" + plain + pause);
        break;
      default:
        if (next.empty())
          Rewrite(s, pat, L"$1" + K(site.connected));
        else
          Rewrite(s, L"(^| )" + key + L" " + next + L"(?= |$)",
                  L"$1" + K(site.connected));
    }
    (void)tail;
  }

  {
    wstring key = K("عَلِيمٌۢ بَرَآءَةࣱ");
    if (a.between_anfal_and_tawba == AnfalTawba::kWaqf)
      ReplaceWord(s, key, K("عَلِيمٌۢ") + pause + K("بَرَآءَةࣱ"));
    else if (a.between_anfal_and_tawba == AnfalTawba::kSakt)
      ReplaceWord(s, key, K("عَلِيمۡ") + sakt + K(" بَرَآءَةࣱ"));
  }

  {
    // الٓمٓ ٱللَّهُ after operation 1.
    wstring key = K("مِّيٓمۡ ٱللَّهُ");
    switch (a.meem_aal_imran) {
      case MeemAalImran::kWaqf:
        ReplaceWord(s, key, K("مِّيٓمۡ") + pause + K("ٱللَّهُ"));
        break;
      case MeemAalImran::kWasl2:
        ReplaceWord(s, key, K("مِّيمَ ٱللَّهُ"));
        break;
      case MeemAalImran::kWasl6:
        ReplaceWord(s, key, K("مِّيٓمَ ٱللَّهُ"));
        break;
    }
  }

  if (a.noon_and_yaseen == IzharIdgham::kIdgham) {
    Rewrite(s, L"(^| )" + K("سِيٓنۡ") + L"(?= " + W(kWaw) + L")",
            L"$1" + K("سِيٓن"));
    Rewrite(s, L"(^| )" + K("نُوٓنۡ") + L"(?= " + W(kWaw) + L")",
            L"$1" + K("نُوٓن"));
  }

  if (a.idgham_nakhluqkum == NakhluqkumIdgham::kIdghamNaqis)
    Rewrite(s, K("نَخۡلُقكُّم"), K("نَخۡلُقكُم"));

  if (a.saken_before_hamz != SakenBeforeHamz::kTahqeeq) {
    const wstring hamzas = L"[ءأؤإئ]";
    // The article before a hamza, and shay'.
    Rewrite(s, L"(^| )([وفبك]?[َِ]?"
               L"[ٱال]?لۡ)(?=" + hamzas + L")",
            L"$1$2" + sakt);
    Rewrite(s, K("شَيۡ") + L"(?=" + hamzas + L")", K("شَيۡ") + sakt);
    if (a.saken_before_hamz == SakenBeforeHamz::kGeneralSakt)
      Rewrite(s, L"(" + kLetter + L"ۡ)(?= " + hamzas + L")",
              L"$1" + sakt);
  }

  // Any sakt or seen mark left over is spelling only.
  Rewrite(s, L"[ۣۜ]", L"");
  CanonicalizeMarks(s);
}

// ---------------------------------------------------------------- op 3

bool StartsWith(const wstring &s, const wstring &p) {
  return s.compare(0, p.size(), p) == 0;
}

void BeginWithHamzatWasl(wstring *s, const Env &e) {
  if (!e.ctx.starts_utterance || s->empty() || (*s)[0] != kAlifWasla)
    return;
  size_t end = s->find(L' ');
  wstring w = s->substr(0, end);
  wstring rest = end == wstring::npos ? L"" : s->substr(end);
  wstring skel = Skeleton(w);

  auto with = [&](const char *vowel) { return K("ء") + K(vowel); };
  if (StartsWith(w, K("ٱئۡ"))) {
    w = K("ءِي") + w.substr(3);
  } else if (StartsWith(w, K("ٱؤۡ"))) {
    w = K("ءُو") + w.substr(3);
  } else if (StartsWith(skel, Utf8ToWide("ٱلت")) &&
             StartsWith(w, K("ٱلۡتَقَ"))) {
    // ٱلۡتَقَى and its forms are verbs, not the article.
    w = with("ِ") + w.substr(1);
  } else if (skel.size() > 1 && skel[1] == kLam) {
    w = with("َ") + w.substr(1);
  } else {
    // Nouns and a few verbs take kasra; other verbs follow the vowel of the
    // third letter.
    static const char *kKasraStems[] = {"ٱبن", "ٱسم", "ٱمرأ", "ٱمرؤ", "ٱمرئ",
                                       "ٱثن", "ٱمشوا", "ٱقضوا", "ٱمضوا"};
    bool kasra = false;
    for (const char *stem : kKasraStems)
      if (StartsWith(skel, Utf8ToWide(stem))) kasra = true;
    if (!kasra) {
      // Index of the third letter: ٱ, the sakin letter, then this one.
      int seen = 0;
      for (size_t i = 0; i < w.size(); i++) {
        if (!IsLetterChar(w[i])) continue;
        if (++seen == 3) {
          size_t j = i + 1;
          while (j < w.size() && IsMarkChar(w[j]) && w[j] != kDamma) j++;
          kasra = !(j < w.size() && w[j] == kDamma);
          break;
        }
      }
    }
    w = with(kasra ? "ِ" : "ُ") + w.substr(1);
  }
  *s = w + rest;
}

// ---------------------------------------------------------------- op 4

void BeginWithSaken(wstring *s, const Env &e) {
  if (!e.ctx.starts_utterance) return;
  if (s->size() >= 2 && IsLetterChar((*s)[0]) && (*s)[1] == kSukun)
    s->insert(0, K("ءِ"));
}

// ---------------------------------------------------------------- ops 5-14

void ConvertAlifMaksora(wstring *s, const Env &) {
  ApplyRules({
    RewriteRule(L"ىٰ", L"ا"),
    // Voweled, or after kasra: a consonant or madd yaa.
    RewriteRule(L"\u0649(?=[\u064B-\u0652\u06E1\u08F0-\u08F2])", L"\u064A"),
    RewriteRule(L"ِى", L"ِي"),
    RewriteRule(L"ى", L"ا"),
  }, s);
}

void NormalizeHmazat(wstring *s, const Env &) {
  Rewrite(s, L"[أؤإئ]", L"ء");
}

void IthbatYaaYohie(wstring *s, const Env &e) {
  if (!e.ctx.ends_with_pause) return;
  Rewrite(s, L"(حۡيِ)ۦ?ٓ?$", L"$1ي");
}

void RemoveKasheeda(wstring *s, const Env &) {
  Rewrite(s, L"ـ", L"");
}

void RemoveHmzatWaslMiddle(wstring *s, const Env &) {
  Rewrite(s, L"ٱ", L"");
}

void RemoveSkoonMostadeer(wstring *s, const Env &) {
  Rewrite(s, kLetter + L"۟", L"");
}

void SkoonMostateel(wstring *s, const Env &e) {
  if (e.ctx.ends_with_pause)
    Rewrite(s, L"(" + kLetter + L")۠$", L"$1");
  Rewrite(s, kLetter + L"۠", L"");
}

void MaddAlewad(wstring *s, const Env &e) {
  const wstring fath = L"[ًࣰ]";
  if (e.ctx.ends_with_pause) {
    // Taa marbuta keeps its tanween for CleanEnd.
    Rewrite(s,
            L"([\u0621-\u0628\u062A-\u063A\u0641-\u064A])(\u0651?)" + fath +
                kIqlabMark + L"?ا?$",
            L"$1$2َا");
  }
  Rewrite(s, L"(" + fath + kIqlabMark + L"?)ا", L"$1");
}

void WawAlsallah(wstring *s, const Env &) {
  Rewrite(s, L"وٰ", L"ا");
}

void EnlargeSmallLetters(wstring *s, const Env &e) {
  // At a pause the silah of haa is dropped by CleanEnd, so it is left
  // alone here.
  wstring keep = e.ctx.ends_with_pause ? L"(?!ٓ?$)" : L"";
  ApplyRules({
    RewriteRule(L"ٰ", L"ا"),
    RewriteRule(L"(?<!هُ)ۥ" , L"و"),
    RewriteRule(L"(?<=هُ)ۥ" + keep, L"و"),
    RewriteRule(L"(?<!هِ)ۦ", L"ي"),
    RewriteRule(L"(?<=هِ)ۦ" + keep, L"ي"),
    RewriteRule(L"ۧ", L"ي"),
    RewriteRule(L"ۨ", L"ن"),
  }, s);
}

// ---------------------------------------------------------------- op 15

void CleanEnd(wstring *s, const Env &e) {
  Rewrite(s, L"^ +| +$", L"");
  if (!e.ctx.ends_with_pause || s->empty()) return;
  const wstring ps = W(kPauseSukun);
  ApplyRules({
    RewriteRule(L"ه[ُِ][ۥۦ]ٓ?$", L"ه" + ps),
    RewriteRule(kTanween + kIqlabMark + L"?$", ps),
    RewriteRule(kHarakat + L"$", ps),
    RewriteRule(L"([\u0621-\u0626\u0628-\u063A\u0641-\u0647])$", L"$1" + ps),
  }, s);
}

// ---------------------------------------------------------------- ops 16-20

void NormalizeTaa(wstring *s, const Env &) {
  ApplyRules({
    RewriteRule(L"ة(?=)", L"ه"),
    RewriteRule(L"ة", L"ت"),
  }, s);
}

void AddAlifIsmAllah(wstring *s, const Env &) {
  Rewrite(s, L"(ل[َِ]?لَّ)(?=ه(?!ۡ))",
          L"$1ا");
}

void PrepareGhonnaIdghamIqlab(wstring *s, const Env &) {
  ApplyRules({
    // Iqlab.
    RewriteRule(L"ن" + kIqlabMark, L"م"),
    RewriteRule(L"[ًࣰ]" + kIqlabMark, L"َم"),
    RewriteRule(L"[ٌࣱ]" + kIqlabMark, L"ُم"),
    RewriteRule(L"[ٍࣲ]" + kIqlabMark, L"ِم"),
    // Open tanween: a bare noon for idgham and ikhfa in operation 21.
    RewriteRule(L"ࣰ", L"َن"),
    RewriteRule(L"ࣱ", L"ُن"),
    RewriteRule(L"ࣲ", L"ِن"),
    // Izhar tanween.
    RewriteRule(L"ً", L"َنۡ"),
    RewriteRule(L"ٌ", L"ُنۡ"),
    RewriteRule(L"ٍ", L"ِنۡ"),
    // Idgham without ghunna: a bare letter before the letter it merges
    // into.  Taa mofakhama keeps its itbaq (idgham naqis).
    RewriteRule(L"[\u0621-\u0626\u0628-\u0636\u0638-\u063A\u0641-\u0644\u0647]" +
                    kNoMark +
                    L"( ?)(?=" + kLetter + L"ّ)",
                L"$1"),
  }, s);
}

void ItiqaaAlsaknan(wstring *s, const Env &) {
  const wstring next = L"(?= " + kLetter + L"[ّۡ])";
  ApplyRules({
    RewriteRule(L"(َ)آ?" + next, L"$1"),
    RewriteRule(L"(\u064F)\u0648\u0653?" + next, L"$1"),
    RewriteRule(L"(\u0650)\u064A\u0653?" + next, L"$1"),
    RewriteRule(L"(" + kLetter + L")ۡ" + next, L"$1ِ"),
  }, s);
}

void DeleteShaddaAtBeginning(wstring *s, const Env &e) {
  if (!e.ctx.starts_utterance) return;
  Rewrite(s, L"^(" + kLetter + L")ّ", L"$1");
}

// ---------------------------------------------------------------- op 21

void Ghonna(wstring *s, const Env &e) {
  const wstring n = L"ن" + kNoMark;
  const wstring m = L"م" + kNoMark;
  const wstring hint = W(kGhunnaHint);
  const bool lam_raa_ghonna =
      e.attrs.ghonna_lam_and_raa == GhonnaLamRaa::kGhonna;
  const wstring mm = e.attrs.meem_mokhfah == MeemMokhfah::kMeem
                         ? L"ممم"
                         : L"";
  ApplyRules({
    // Idgham with ghunna into yaa and waw: the letter is doubled and the
    // first copy nasalised.
    RewriteRule(n + L"( ?)([يو])", L"$1$2" + hint + L"$2"),
    lam_raa_ghonna
        ? RewriteRule(n + L"( ?)([لر])ّ", L"$1$2" + hint + L"$2")
        : RewriteRule(n + L"( ?)(?=[لر]ّ)", L"$1"),
    RewriteRule(n + L"( ?)(?=[نم]ّ)", L"$1"),
    RewriteRule(n + L"( ?)(?=" + kIkhfaLetters + L")",
                L"$1"),
    RewriteRule(n, L"نۡ"),
    RewriteRule(m + L"( ?)(?=ب)", mm + L"$1"),
    RewriteRule(m + L"( ?)(?=مّ)", L"$1"),
    RewriteRule(m, L"مۡ"),
    // Shadda on a nasal: three beats of ghunna.
    RewriteRule(L"نّ", L"ننن"),
    RewriteRule(L"مّ", L"ممم"),
  }, s);
}

// ---------------------------------------------------------------- ops 22-23

void Tasheel(wstring *s, const Env &) {
  Rewrite(s, L"\u0627\u06EC", L"\uE005\u064E");
}

void Imala(wstring *s, const Env &) {
  ApplyRules({
    RewriteRule(L"۪ا", L""),
    RewriteRule(L"۪", L""),
  }, s);
}

// ---------------------------------------------------------------- op 24

wchar_t At(const wstring &s, size_t i) { return i < s.size() ? s[i] : 0; }

size_t WordStart(const wstring &s, size_t i) {
  while (i > 0 && s[i - 1] != L' ') i--;
  return i;
}

// True if nothing but marks follows position i up to the end and the last
// of them is the pause sukun.
bool PauseFinal(const wstring &s, size_t i) {
  for (size_t k = i; k < s.size(); k++)
    if (!IsMarkChar(s[k])) return false;
  return !s.empty() && s.back() == kPauseSukun;
}

// The vocative yaa and the haa of attention are separate words written
// joined to the next hamza: the madd is munfasil.
bool MunfasilHukmi(const wstring &s, size_t vowel_pos) {
  size_t w = WordStart(s, vowel_pos);
  wstring prefix = s.substr(w, vowel_pos + 1 - w);
  static const wstring kPrefixes[] = {
    K("يَ"), K("هَ"), K("وَيَ"), K("وَهَ"), K("فَيَ"), K("فَهَ"),
  };
  bool hit = false;
  for (const wstring &p : kPrefixes)
    if (prefix == p) hit = true;
  if (!hit) return false;
  // هَآؤُمُ is one word.
  static const wstring kHaaum = K("هَآءُمُ");
  return s.compare(w, kHaaum.size(), kHaaum) != 0;
}

void Madd(wstring *s, const Env &e) {
  const MoshafAttributes &a = e.attrs;
  const wstring &t = *s;
  wstring out;
  size_t i = 0;
  while (i < t.size()) {
    wchar_t c = t[i];
    wchar_t l = At(t, i + 1);
    wchar_t sym = 0;
    if (c == kFatha && l == kAlif) sym = kAlif;
    else if (c == kDamma && l == kWaw) sym = kWawMadd;
    else if (c == kKasra && l == kYaa) sym = kYaaMadd;
    else if (c == kFathaMomala && l == kAlifMomala) sym = kAlifMomala;
    wchar_t after = At(t, i + 2);
    if (sym && (after == kMaddaAbove || !IsMarkChar(after))) {
      size_t j = i + 2;
      bool madda = after == kMaddaAbove;
      if (madda) j++;
      wchar_t n1 = At(t, j), n2 = At(t, j + 1), n3 = At(t, j + 2);
      int len = 2;
      if (madda) {
        if (n1 == kHamza) {
          if (MunfasilHukmi(t, i))
            len = a.madd_monfasel_len;
          else if (e.ctx.ends_with_pause && PauseFinal(t, j + 1))
            len = a.madd_mottasel_waqf;
          else
            len = a.madd_mottasel_len;
        } else if (n1 == L' ' && n2 == kHamza) {
          len = a.madd_monfasel_len;
        } else if (n1 && n1 != L' ') {
          len = 6;  // lazim kalimi
        } else if (n1 == L' ' && (n3 == kShadda || n3 == kSukun ||
                                  n3 == kGhunnaHint || n3 == n2)) {
          // Lazim across a spelled initial: the next letter is sakin or
          // doubled (a shadda that operation 21 already expanded).
          len = 6;
        }
      } else if (IsLetterChar(n1) &&
                 PauseFinal(t, j + 1)) {
        len = a.madd_aared_len;
      }
      out += c;
      out.append(len, sym);
      i = j;
      continue;
    }
    // Leen: fatha, sakin waw or yaa.
    if (c == kFatha && (l == kWaw || l == kYaa) && after == kSukun) {
      if (l == kYaa && At(t, i + 3) == kAynLeen) {
        out += c;
        out.append(a.madd_yaa_alayn_alharfy, kYaa);
        i += 4;
        continue;
      }
      if (IsLetterChar(At(t, i + 3)) && PauseFinal(t, i + 4)) {
        out += c;
        out.append(a.madd_alleen_len, l);
        i += 3;
        continue;
      }
    }
    out += c;
    i++;
  }
  *s = out;
}

// ---------------------------------------------------------------- ops 25-26

void Qalqla(wstring *s, const Env &) {
  Rewrite(s, L"([قطبجد]ّ?[ۡ])"
             L"(?!)",
          L"$1");
}

void RemoveRasHaaAndShadda(wstring *s, const Env &) {
  ApplyRules({
    RewriteRule(L"(" + kLetter + L")ّ", L"$1$1"),
    RewriteRule(L"[ۡ]", L""),
  }, s);
}

using OpFn = void (*)(wstring *, const Env &);

struct OpInfo {
  const char *name;
  OpFn fn;
};

const OpInfo kOps[kNumOperations] = {
  {"DisassembleHrofMoqatta", DisassembleHrofMoqatta},
  {"SpecialCases", SpecialCases},
  {"BeginWithHamzatWasl", BeginWithHamzatWasl},
  {"BeginWithSaken", BeginWithSaken},
  {"ConvertAlifMaksora", ConvertAlifMaksora},
  {"NormalizeHmazat", NormalizeHmazat},
  {"IthbatYaaYohie", IthbatYaaYohie},
  {"RemoveKasheeda", RemoveKasheeda},
  {"RemoveHmzatWaslMiddle", RemoveHmzatWaslMiddle},
  {"RemoveSkoonMostadeer", RemoveSkoonMostadeer},
  {"SkoonMostateel", SkoonMostateel},
  {"MaddAlewad", MaddAlewad},
  {"WawAlsallah", WawAlsallah},
  {"EnlargeSmallLetters", EnlargeSmallLetters},
  {"CleanEnd", CleanEnd},
  {"NormalizeTaa", NormalizeTaa},
  {"AddAlifIsmAllah", AddAlifIsmAllah},
  {"PrepareGhonnaIdghamIqlab", PrepareGhonnaIdghamIqlab},
  {"ItiqaaAlsaknan", ItiqaaAlsaknan},
  {"DeleteShaddaAtBeginning", DeleteShaddaAtBeginning},
  {"Ghonna", Ghonna},
  {"Tasheel", Tasheel},
  {"Imala", Imala},
  {"Madd", Madd},
  {"Qalqla", Qalqla},
  {"RemoveRasHaaAndShadda", RemoveRasHaaAndShadda},
};

}  // namespace

bool IsLetterChar(wchar_t c) {
  return (c >= 0x0621 && c <= 0x063A) || (c >= 0x0641 && c <= 0x064A) ||
         c == kAlifWasla || c == kHamzaMosahala || c == kNoonMokhfah ||
         c == kMeemMokhfah;
}

bool IsMarkChar(wchar_t c) {
  return (c >= 0x064B && c <= 0x065F) || c == kDaggerAlif ||
         (c >= 0x06D6 && c <= 0x06ED) ||
         (c >= kOpenFathatan && c <= kOpenKasratan) ||
         c == kDamaMokhtalasa || c == kAynLeen || c == kPauseSukun ||
         c == kGhunnaHint;
}

void CanonicalizeMarks(wstring *text) {
  // Precomposed alif with madda is alif followed by the madda mark.
  // Alif with hamza and madda is a hamza followed by a madd alif.
  for (size_t i = 0; i < text->size(); i++) {
    if ((*text)[i] == kAlifMadda) text->replace(i, 1, {kAlif, kMaddaAbove});
    if ((*text)[i] == kAlifHamzaAbove && i + 1 < text->size() &&
        (*text)[i + 1] == kMaddaAbove)
      text->replace(i, 2, {kHamza, kFatha, kAlif});
  }
  wstring &s = *text;
  wstring out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    wchar_t c = s[i];
    if (IsCarrier(c)) {
      // Hamza written as a mark on a carrier, possibly past other marks
      // and a dagger alif: ٱلۡـَٰٔنَ, شَيۡـًٔا, ٱللُّؤۡلُوِٕ.
      size_t j = i + 1;
      bool hamza = false;
      while (j < s.size() && (IsClusterMark(s[j]) || s[j] == kDaggerAlif)) {
        if (s[j] == kHamzaAbove || s[j] == kHamzaBelow) hamza = true;
        j++;
      }
      if (hamza) {
        out += kHamza;
        for (size_t k = i + 1; k < j; k++)
          if (s[k] != kHamzaAbove && s[k] != kHamzaBelow) out += s[k];
        i = j;
        continue;
      }
    }
    if (IsClusterMark(c)) {
      size_t j = i;
      while (j < s.size() && IsClusterMark(s[j])) j++;
      wstring cluster = s.substr(i, j - i);
      std::stable_sort(cluster.begin(), cluster.end(),
                       [](wchar_t x, wchar_t y) {
                         return MarkRank(x) < MarkRank(y);
                       });
      out += cluster;
      i = j;
      continue;
    }
    out += c;
    i++;
  }
  s.swap(out);
}

const char *OperationNameInternal(int op_id) { return kOps[op_id - 1].name; }

void RunOperation(int op_id, wstring *text, const MoshafAttributes &attrs,
                  const UtteranceContext &ctx) {
  const OpInfo &op = kOps[op_id - 1];
  if (op_id <= 2) {
    op.fn(text, Env{attrs, ctx});
    return;
  }
  // Pieces separated by a waqf the text itself asked for.  Every piece
  // after such a stop starts a new utterance; every piece before one ends
  // with a pause.
  std::vector<wstring> pieces;
  size_t start = 0;
  while (true) {
    size_t p = text->find(kPauseBoundary, start);
    pieces.push_back(text->substr(start, p == wstring::npos ? wstring::npos
                                                            : p - start));
    if (p == wstring::npos) break;
    start = p + 1;
  }
  for (size_t i = 0; i < pieces.size(); i++) {
    UtteranceContext pc;
    pc.starts_utterance = i == 0 ? ctx.starts_utterance : true;
    pc.ends_with_pause = i + 1 == pieces.size() ? ctx.ends_with_pause : true;
    op.fn(&pieces[i], Env{attrs, pc});
  }
  wstring out;
  for (size_t i = 0; i < pieces.size(); i++) {
    if (i) out += op_id == kNumOperations ? W(L' ') : W(kPauseBoundary);
    out += pieces[i];
  }
  text->swap(out);
}

}  // namespace internal
}  // namespace qps
