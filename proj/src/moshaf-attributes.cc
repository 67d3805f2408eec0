// src/moshaf-attributes.cc

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

#include "qps/moshaf-attributes.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qps/base.h"

namespace qps {

namespace {

template <typename E>
AttributeField EnumField(const char *name, const char *arabic,
                         E MoshafAttributes::*member,
                         std::vector<std::string> names, E def) {
  AttributeField f;
  f.name = name;
  f.arabic_name = arabic;
  f.allowed = names;
  f.default_value = names[static_cast<size_t>(def)];
  f.get = [member, names](const MoshafAttributes &a) -> std::string {
    size_t i = static_cast<size_t>(a.*member);
    return i < names.size() ? names[i] : std::string("?");
  };
  f.set = [member, names](MoshafAttributes *a, const std::string &v) {
    auto it = std::find(names.begin(), names.end(), v);
    if (it == names.end()) return false;
    a->*member = static_cast<E>(it - names.begin());
    return true;
  };
  return f;
}

AttributeField IntField(const char *name, const char *arabic,
                        int MoshafAttributes::*member, std::vector<int> values,
                        bool required, int def) {
  AttributeField f;
  f.name = name;
  f.arabic_name = arabic;
  for (int v : values) f.allowed.push_back(std::to_string(v));
  f.required = required;
  if (!required && def > 0) f.default_value = std::to_string(def);
  f.get = [member](const MoshafAttributes &a) {
    return std::to_string(a.*member);
  };
  f.set = [member, values](MoshafAttributes *a, const std::string &v) {
    for (int x : values) {
      if (v == std::to_string(x)) {
        a->*member = x;
        return true;
      }
    }
    return false;
  };
  return f;
}

std::vector<AttributeField> BuildFields() {
  using A = MoshafAttributes;
  const std::vector<std::string> sakt = {"sakt", "waqf", "idraj"};
  const std::vector<std::string> seen_saad = {"seen", "saad"};
  const std::vector<std::string> izhar_idgham_waqf = {"izhar", "idgham",
                                                      "waqf"};
  const std::vector<std::string> raa = {"wasl", "tafkheem", "tarqeeq"};
  std::vector<AttributeField> f;
  f.push_back(EnumField("rewaya", "الرواية", &A::rewaya, {"hafs"},
                        Rewaya::kHafs));
  f.push_back(EnumField("recitation_speed", "سرعة التلاوة",
                        &A::recitation_speed,
                        {"mujawad", "above_murattal", "murattal", "hadr"},
                        RecitationSpeed::kMurattal));
  f.push_back(EnumField("takbeer", "التكبير", &A::takbeer,
                        {"no_takbeer", "beginning_of_sharh", "end_of_doha",
                         "general_takbeer"},
                        Takbeer::kNoTakbeer));
  // The attribute table lists 2..5 for the separated madd while the variant
  // discussion mentions 6; both ends are accepted, 3 and 6 are flagged.
  f.push_back(IntField("madd_monfasel_len", "مد المنفصل",
                       &A::madd_monfasel_len, {2, 3, 4, 5, 6}, true, 0));
  f.push_back(IntField("madd_mottasel_len", "مقدار المد المتصل",
                       &A::madd_mottasel_len, {4, 5, 6}, true, 0));
  f.push_back(IntField("madd_mottasel_waqf", "مقدار المد المتصل وقفا",
                       &A::madd_mottasel_waqf, {4, 5, 6}, true, 0));
  f.push_back(IntField("madd_aared_len", "مقدار المد العارض",
                       &A::madd_aared_len, {2, 4, 6}, true, 0));
  // Defaults to madd_aared_len; see DefaultAttributes.
  f.push_back(IntField("madd_alleen_len", "مقدار مد اللين",
                       &A::madd_alleen_len, {2, 4, 6}, false, 0));
  f.push_back(IntField("madd_yaa_alayn_alharfy",
                       "مقدار المد اللازم الحرفي للعين",
                       &A::madd_yaa_alayn_alharfy, {2, 4, 6}, false, 6));
  f.push_back(EnumField("ghonna_lam_and_raa", "غنة اللام و الراء",
                        &A::ghonna_lam_and_raa, {"ghonna", "no_ghonna"},
                        GhonnaLamRaa::kNoGhonna));
  f.push_back(EnumField("meem_aal_imran", "ميم آل عمران",
                        &A::meem_aal_imran, {"waqf", "wasl_2", "wasl_6"},
                        MeemAalImran::kWaqf));
  f.push_back(EnumField("saken_before_hamz", "الساكن قبل الهمز",
                        &A::saken_before_hamz,
                        {"tahqeeq", "general_sakt", "local_sakt"},
                        SakenBeforeHamz::kTahqeeq));
  f.push_back(EnumField("sakt_iwaja", "السكت عند عوجا", &A::sakt_iwaja, sakt,
                        SaktChoice::kWaqf));
  f.push_back(EnumField("sakt_marqdena", "السكت عند مرقدنا",
                        &A::sakt_marqdena, sakt, SaktChoice::kWaqf));
  f.push_back(EnumField("sakt_man_raq", "السكت عند من راق", &A::sakt_man_raq,
                        sakt, SaktChoice::kSakt));
  f.push_back(EnumField("sakt_bal_ran", "السكت عند بل ران", &A::sakt_bal_ran,
                        sakt, SaktChoice::kSakt));
  f.push_back(EnumField("sakt_maleeyah", "ماليه هلك", &A::sakt_maleeyah,
                        {"sakt", "waqf", "idgham"}, MaleeyahChoice::kWaqf));
  f.push_back(EnumField("between_anfal_and_tawba", "بين الأنفال والتوبة",
                        &A::between_anfal_and_tawba, {"waqf", "sakt", "wasl"},
                        AnfalTawba::kWaqf));
  f.push_back(EnumField("noon_and_yaseen", "النون عند الواو في يس ون",
                        &A::noon_and_yaseen, {"izhar", "idgham"},
                        IzharIdgham::kIzhar));
  f.push_back(EnumField("yaa_ataan", "ياء آتان", &A::yaa_ataan,
                        {"wasl", "hadhf", "ithbat"}, YaaAtaan::kWasl));
  f.push_back(EnumField("start_with_ism", "البدء بالاسم", &A::start_with_ism,
                        {"wasl", "lism", "alism"}, StartWithIsm::kWasl));
  f.push_back(EnumField("yabsut", "يبسط", &A::yabsut, seen_saad,
                        SeenSaad::kSeen));
  f.push_back(EnumField("bastah", "بسطة", &A::bastah, seen_saad,
                        SeenSaad::kSeen));
  f.push_back(EnumField("almusaytirun", "المصيطرون", &A::almusaytirun,
                        seen_saad, SeenSaad::kSaad));
  f.push_back(EnumField("bimusaytir", "بمصيطر", &A::bimusaytir, seen_saad,
                        SeenSaad::kSaad));
  f.push_back(EnumField("tasheel_or_madd", "التسهيل أو المد",
                        &A::tasheel_or_madd, {"tasheel", "madd"},
                        TasheelOrMadd::kMadd));
  f.push_back(EnumField("yalhath_dhalik", "يلهث ذلك", &A::yalhath_dhalik,
                        izhar_idgham_waqf, IzharIdghamWaqf::kIdgham));
  f.push_back(EnumField("irkab_maana", "اركب معنا", &A::irkab_maana,
                        izhar_idgham_waqf, IzharIdghamWaqf::kIdgham));
  f.push_back(EnumField("noon_tamna", "لا تأمنا", &A::noon_tamna,
                        {"ishmam", "rawm"}, NoonTamna::kIshmam));
  f.push_back(EnumField("harakat_daaf", "ضعف", &A::harakat_daaf,
                        {"fath", "dam"}, HarakatDaaf::kFath));
  f.push_back(EnumField("alif_salasila", "سلاسل", &A::alif_salasila,
                        {"hadhf", "ithbat", "wasl"}, AlifSalasila::kWasl));
  f.push_back(EnumField("idgham_nakhluqkum", "نخلقكم", &A::idgham_nakhluqkum,
                        {"idgham_kamil", "idgham_naqis"},
                        NakhluqkumIdgham::kIdghamKamil));
  f.push_back(EnumField("raa_firq", "فرق", &A::raa_firq,
                        {"waqf", "tafkheem", "tarqeeq"}, RaaFirq::kTafkheem));
  f.push_back(EnumField("raa_alqitr", "القطر", &A::raa_alqitr, raa,
                        RaaChoice::kWasl));
  f.push_back(EnumField("raa_misr", "مصر", &A::raa_misr, raa,
                        RaaChoice::kWasl));
  f.push_back(EnumField("raa_nudhur", "نذر", &A::raa_nudhur, raa,
                        RaaChoice::kTafkheem));
  f.push_back(EnumField("raa_yasr", "يسر", &A::raa_yasr, raa,
                        RaaChoice::kTarqeeq));
  f.push_back(EnumField("meem_mokhfah", "الميم المخفاة", &A::meem_mokhfah,
                        {"meem", "ikhfaa"}, MeemMokhfah::kIkhfaa));
  return f;
}

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string AllowedList(const AttributeField &f) {
  std::string s;
  for (size_t i = 0; i < f.allowed.size(); i++)
    s += (i ? ", " : "") + f.allowed[i];
  return s;
}

}  // namespace

const std::vector<AttributeField> &AttributeFields() {
  static const std::vector<AttributeField> fields = BuildFields();
  return fields;
}

const AttributeField *FindAttributeField(const std::string &name) {
  for (const AttributeField &f : AttributeFields())
    if (f.name == name) return &f;
  return nullptr;
}

MoshafAttributes DefaultAttributes(
    const std::map<std::string, std::string> &fields) {
  MoshafAttributes a;
  for (const auto &kv : fields) {
    const AttributeField *f = FindAttributeField(kv.first);
    if (f == nullptr) throw ConfigError("unknown attribute " + kv.first);
    if (!f->set(&a, kv.second))
      throw ConfigError("illegal value '" + kv.second + "' for " + kv.first +
                        " (allowed: " + AllowedList(*f) + ")");
  }
  for (const AttributeField &f : AttributeFields())
    if (f.required && fields.count(f.name) == 0)
      throw ConfigError(f.name + " required");
  if (fields.count("madd_alleen_len") == 0)
    a.madd_alleen_len = a.madd_aared_len;
  return a;
}

MoshafAttributes ParseAttributes(const std::string &text) {
  std::map<std::string, std::string> values;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    line_no++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key = value", line_no);
    std::string key = Trim(line.substr(0, eq));
    std::string value = Trim(line.substr(eq + 1));
    const AttributeField *f = FindAttributeField(key);
    if (f == nullptr) throw ParseError("unknown key " + key, line_no);
    if (values.count(key)) throw ParseError("duplicate key " + key, line_no);
    MoshafAttributes probe;
    if (!f->set(&probe, value))
      throw ParseError("illegal value '" + value + "' for " + key +
                       " (allowed: " + AllowedList(*f) + ")", line_no);
    values[key] = value;
  }
  return DefaultAttributes(values);
}

MoshafAttributes ParseAttributesFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ParseAttributes(ss.str());
}

std::string RenderAttributes(const MoshafAttributes &attrs) {
  std::string out;
  for (const AttributeField &f : AttributeFields())
    out += f.name + " = " + f.get(attrs) + "\n";
  return out;
}

std::vector<std::string> ValidateAttributes(const MoshafAttributes &attrs) {
  std::vector<std::string> v;
  for (const AttributeField &f : AttributeFields()) {
    std::string value = f.get(attrs);
    if (std::find(f.allowed.begin(), f.allowed.end(), value) ==
        f.allowed.end()) {
      if (f.required && value == "0")
        v.push_back(f.name + " required");
      else
        v.push_back(f.name + " = " + value + " not in {" + AllowedList(f) +
                    "}");
    }
  }
  if (attrs.madd_alleen_len > attrs.madd_aared_len)
    v.push_back("madd_alleen_len > madd_aared_len");
  return v;
}

std::vector<std::string> AttributeWarnings(const MoshafAttributes &attrs) {
  std::vector<std::string> w;
  if (attrs.madd_monfasel_len == 3)
    w.push_back("madd_monfasel_len = 3 is in the attribute table but not "
                "among the recited lengths 2, 4, 5, 6");
  if (attrs.madd_monfasel_len == 6)
    w.push_back("madd_monfasel_len = 6 is not in the attribute table "
                "(2, 3, 4, 5)");
  return w;
}

uint64_t AttributesFingerprint(const MoshafAttributes &attrs) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : RenderAttributes(attrs)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qps
