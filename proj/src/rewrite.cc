// src/rewrite.cc

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

#include "rewrite.h"

#include <mutex>
#include <unordered_map>

#include "qps/base.h"

namespace qps {
namespace internal {

namespace {
// A correct rule set reaches its fixpoint in a handful of passes; hitting
// this bound means two rewrites feed each other.
const int kMaxPasses = 64;

// Rules are rebuilt for every call with attribute-dependent formats, so
// compiled patterns are shared.  boost::basic_regex copies share their
// state.
boost::wregex Compile(const std::wstring &pattern) {
  static std::mutex mu;
  static std::unordered_map<std::wstring, boost::wregex> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(pattern);
  if (it == cache.end())
    it = cache.emplace(pattern, boost::wregex(pattern, boost::regex::perl))
             .first;
  return it->second;
}
}  // namespace

RewriteRule::RewriteRule(const std::wstring &pattern,
                         const std::wstring &format)
    : re_(Compile(pattern)), format_(format) {}

RewriteRule::RewriteRule(const std::wstring &pattern, Callback callback)
    : re_(Compile(pattern)), callback_(std::move(callback)) {}

bool RewriteRule::Apply(std::wstring *text) const {
  bool changed = false;
  for (int pass = 0; pass < kMaxPasses; pass++) {
    std::wstring out;
    if (callback_) {
      out = boost::regex_replace(
          *text, re_,
          [this](const boost::wsmatch &m) { return callback_(m); });
    } else {
      out = boost::regex_replace(*text, re_, format_,
                                 boost::format_perl);
    }
    if (out == *text) return changed;
    text->swap(out);
    changed = true;
  }
  throw PipelineError("rewrite rule did not reach a fixpoint");
}

bool Rewrite(std::wstring *text, const std::wstring &pattern,
             const std::wstring &format) {
  return RewriteRule(pattern, format).Apply(text);
}

void ApplyRules(const std::vector<RewriteRule> &rules, std::wstring *text) {
  for (const RewriteRule &r : rules) r.Apply(text);
}

}  // namespace internal
}  // namespace qps
