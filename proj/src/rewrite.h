// src/rewrite.h

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

#ifndef QPS_REWRITE_H_
#define QPS_REWRITE_H_

#include <functional>
#include <string>
#include <vector>

#include <boost/regex.hpp>

namespace qps {
namespace internal {

// One pattern-rewrite rule over UTF-32 text.  Apply() replaces every
// non-overlapping match left to right and repeats until the text stops
// changing, so a rule whose output creates a new match is applied again.
class RewriteRule {
 public:
  using Callback = std::function<std::wstring(const boost::wsmatch &)>;

  // format uses Perl syntax ($1, $2, ...).
  RewriteRule(const std::wstring &pattern, const std::wstring &format);
  RewriteRule(const std::wstring &pattern, Callback callback);

  // Returns true if the text changed.
  bool Apply(std::wstring *text) const;

 private:
  boost::wregex re_;
  std::wstring format_;
  Callback callback_;
};

// Shorthand for a single rule.
bool Rewrite(std::wstring *text, const std::wstring &pattern,
             const std::wstring &format);

// Applies the rules in order, each to its own fixpoint.
void ApplyRules(const std::vector<RewriteRule> &rules, std::wstring *text);

}  // namespace internal
}  // namespace qps

#endif  // QPS_REWRITE_H_
