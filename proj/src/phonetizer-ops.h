// src/phonetizer-ops.h

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

#ifndef QPS_PHONETIZER_OPS_H_
#define QPS_PHONETIZER_OPS_H_

#include <string>

#include "qps/moshaf-attributes.h"
#include "qps/phonetizer.h"

namespace qps {
namespace internal {

// Moves hamza written on a carrier (tatweel, alif, waw, yaa) as a combining
// mark onto a bare hamza, and sorts every cluster of combining marks into
// the order the rewrite rules assume: shadda, small seen, harakah or
// tanween, sukun-like marks, the rest.
void CanonicalizeMarks(std::wstring *text);

bool IsLetterChar(wchar_t c);
bool IsMarkChar(wchar_t c);

const char *OperationNameInternal(int op_id);

// Runs operation op_id (1..26) in place.  Operations 1 and 2 see the whole
// text; they may split it at U+E020 where a ruling asks for waqf.  From
// operation 3 on every pause-delimited piece is processed with its own
// context and operation 26 joins the pieces with a space.
void RunOperation(int op_id, std::wstring *text,
                  const MoshafAttributes &attrs, const UtteranceContext &ctx);

}  // namespace internal
}  // namespace qps

#endif  // QPS_PHONETIZER_OPS_H_
