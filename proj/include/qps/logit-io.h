// include/qps/logit-io.h

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

#ifndef QPS_LOGIT_IO_H_
#define QPS_LOGIT_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "qps/ctc.h"

namespace qps {

// QPSL binary layout, all integers little-endian:
//   "QPSL" u8:version u8:num_levels
//   per level: u8:name_len name u32:T u32:V f32[T*V] (time-major)
constexpr unsigned char kQpslVersion = 1;

// Rows are checked for normalization within 1e-6; with renormalize set
// they are renormalized instead.  Throws InputError with a byte offset on
// a malformed file and ValidationError on unnormalized rows.
MultiLevelLogits ReadLogits(std::istream &is, bool renormalize = false);
MultiLevelLogits ReadLogitsFile(const std::string &path,
                                bool renormalize = false);

void WriteLogits(const MultiLevelLogits &logits, std::ostream &os);
void WriteLogitsFile(const MultiLevelLogits &logits, const std::string &path);

}  // namespace qps

#endif  // QPS_LOGIT_IO_H_
