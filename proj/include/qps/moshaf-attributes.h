// include/qps/moshaf-attributes.h

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

#ifndef QPS_MOSHAF_ATTRIBUTES_H_
#define QPS_MOSHAF_ATTRIBUTES_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qps {

enum class Rewaya { kHafs };
enum class RecitationSpeed { kMujawad, kAboveMurattal, kMurattal, kHadr };
enum class Takbeer {
  kNoTakbeer, kBeginningOfSharh, kEndOfDoha, kGeneralTakbeer
};
enum class GhonnaLamRaa { kGhonna, kNoGhonna };
enum class MeemAalImran { kWaqf, kWasl2, kWasl6 };
enum class SakenBeforeHamz { kTahqeeq, kGeneralSakt, kLocalSakt };
enum class SaktChoice { kSakt, kWaqf, kIdraj };
enum class MaleeyahChoice { kSakt, kWaqf, kIdgham };
enum class AnfalTawba { kWaqf, kSakt, kWasl };
enum class IzharIdgham { kIzhar, kIdgham };
enum class YaaAtaan { kWasl, kHadhf, kIthbat };
enum class StartWithIsm { kWasl, kLism, kAlism };
enum class SeenSaad { kSeen, kSaad };
enum class TasheelOrMadd { kTasheel, kMadd };
enum class IzharIdghamWaqf { kIzhar, kIdgham, kWaqf };
enum class NoonTamna { kIshmam, kRawm };
enum class HarakatDaaf { kFath, kDam };
enum class AlifSalasila { kHadhf, kIthbat, kWasl };
enum class NakhluqkumIdgham { kIdghamKamil, kIdghamNaqis };
enum class RaaFirq { kWaqf, kTafkheem, kTarqeeq };
enum class RaaChoice { kWasl, kTafkheem, kTarqeeq };
enum class MeemMokhfah { kMeem, kIkhfaa };

// Recitation-variant configuration of one Moshaf (riwayat Hafs).  Integer
// madd lengths are in beats; 0 marks a required field that was not given.
// recitation_speed and takbeer are stored but do not change phonetization.
struct MoshafAttributes {
  Rewaya rewaya = Rewaya::kHafs;
  RecitationSpeed recitation_speed = RecitationSpeed::kMurattal;
  Takbeer takbeer = Takbeer::kNoTakbeer;
  int madd_monfasel_len = 0;
  int madd_mottasel_len = 0;
  int madd_mottasel_waqf = 0;
  int madd_aared_len = 0;
  int madd_alleen_len = 0;
  int madd_yaa_alayn_alharfy = 6;
  GhonnaLamRaa ghonna_lam_and_raa = GhonnaLamRaa::kNoGhonna;
  MeemAalImran meem_aal_imran = MeemAalImran::kWaqf;
  SakenBeforeHamz saken_before_hamz = SakenBeforeHamz::kTahqeeq;
  SaktChoice sakt_iwaja = SaktChoice::kWaqf;
  SaktChoice sakt_marqdena = SaktChoice::kWaqf;
  SaktChoice sakt_man_raq = SaktChoice::kSakt;
  SaktChoice sakt_bal_ran = SaktChoice::kSakt;
  MaleeyahChoice sakt_maleeyah = MaleeyahChoice::kWaqf;
  AnfalTawba between_anfal_and_tawba = AnfalTawba::kWaqf;
  IzharIdgham noon_and_yaseen = IzharIdgham::kIzhar;
  YaaAtaan yaa_ataan = YaaAtaan::kWasl;
  StartWithIsm start_with_ism = StartWithIsm::kWasl;
  SeenSaad yabsut = SeenSaad::kSeen;
  SeenSaad bastah = SeenSaad::kSeen;
  SeenSaad almusaytirun = SeenSaad::kSaad;
  SeenSaad bimusaytir = SeenSaad::kSaad;
  TasheelOrMadd tasheel_or_madd = TasheelOrMadd::kMadd;
  IzharIdghamWaqf yalhath_dhalik = IzharIdghamWaqf::kIdgham;
  IzharIdghamWaqf irkab_maana = IzharIdghamWaqf::kIdgham;
  NoonTamna noon_tamna = NoonTamna::kIshmam;
  HarakatDaaf harakat_daaf = HarakatDaaf::kFath;
  AlifSalasila alif_salasila = AlifSalasila::kWasl;
  NakhluqkumIdgham idgham_nakhluqkum = NakhluqkumIdgham::kIdghamKamil;
  RaaFirq raa_firq = RaaFirq::kTafkheem;
  RaaChoice raa_alqitr = RaaChoice::kWasl;
  RaaChoice raa_misr = RaaChoice::kWasl;
  RaaChoice raa_nudhur = RaaChoice::kTafkheem;
  RaaChoice raa_yasr = RaaChoice::kTarqeeq;
  MeemMokhfah meem_mokhfah = MeemMokhfah::kIkhfaa;

  bool operator==(const MoshafAttributes &o) const = default;
};

// Reflection entry for one attribute, used by the parser, the renderer and
// the CLI.  Values are the lower-case ASCII names; integers are decimal.
struct AttributeField {
  std::string name;
  std::string arabic_name;
  std::vector<std::string> allowed;
  bool required = false;         // no default value
  std::string default_value;     // empty when required or derived
  std::function<std::string(const MoshafAttributes &)> get;
  // Returns false when value is not in allowed.
  std::function<bool(MoshafAttributes *, const std::string &)> set;
};

const std::vector<AttributeField> &AttributeFields();
const AttributeField *FindAttributeField(const std::string &name);

// Builds attributes from the required fields (and optionally any other
// field); everything else takes its default and madd_alleen_len copies
// madd_aared_len when not given.  Throws ConfigError naming the first
// missing or illegal field.
MoshafAttributes DefaultAttributes(
    const std::map<std::string, std::string> &fields);

// Parses "key = value" lines with '#' comments.  Throws ParseError naming the
// key and line for unknown keys, illegal values and duplicates, and
// ConfigError for missing required keys.
MoshafAttributes ParseAttributes(const std::string &text);
MoshafAttributes ParseAttributesFile(const std::string &path);

// Renders every field, one "key = value" line each, in registry order.
std::string RenderAttributes(const MoshafAttributes &attrs);

// Every violated invariant; empty means valid.
std::vector<std::string> ValidateAttributes(const MoshafAttributes &attrs);

// Non-fatal remarks.  madd_monfasel_len accepts 2..6; 3 and 6 are flagged
// because the two documented value lists disagree on them.
std::vector<std::string> AttributeWarnings(const MoshafAttributes &attrs);

// FNV-1a 64 of RenderAttributes.
uint64_t AttributesFingerprint(const MoshafAttributes &attrs);

}  // namespace qps

#endif  // QPS_MOSHAF_ATTRIBUTES_H_
