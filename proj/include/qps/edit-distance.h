// include/qps/edit-distance.h

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

#ifndef QPS_EDIT_DISTANCE_H_
#define QPS_EDIT_DISTANCE_H_

#include <algorithm>
#include <cstdint>
#include <vector>

namespace qps {

// Levenshtein distance with unit insertion, deletion and substitution costs.
// Works on any random-access sequence whose elements compare with ==.
template <typename Seq>
int64_t LevenshteinDistance(const Seq &a, const Seq &b) {
  const size_t n = a.size(), m = b.size();
  if (n == 0) return static_cast<int64_t>(m);
  if (m == 0) return static_cast<int64_t>(n);
  std::vector<int64_t> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; j++) prev[j] = static_cast<int64_t>(j);
  for (size_t i = 1; i <= n; i++) {
    cur[0] = static_cast<int64_t>(i);
    for (size_t j = 1; j <= m; j++) {
      int64_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// Distances from a to every prefix b[0..j), j = 0..|b|, in one O(|a||b|) pass.
// Used by the matcher to score all window widths at one start position.
template <typename Seq>
std::vector<int64_t> LevenshteinToPrefixes(const Seq &a, const Seq &b) {
  const size_t n = a.size(), m = b.size();
  // Rows run over b so that the last column of each row is dist(a, b[0..j)).
  std::vector<int64_t> col(n + 1), next(n + 1), out(m + 1);
  for (size_t i = 0; i <= n; i++) col[i] = static_cast<int64_t>(i);
  out[0] = static_cast<int64_t>(n);
  for (size_t j = 1; j <= m; j++) {
    next[0] = static_cast<int64_t>(j);
    for (size_t i = 1; i <= n; i++) {
      int64_t sub = col[i - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      next[i] = std::min({col[i] + 1, next[i - 1] + 1, sub});
    }
    std::swap(col, next);
    out[j] = col[n];
  }
  return out;
}

}  // namespace qps

#endif  // QPS_EDIT_DISTANCE_H_
