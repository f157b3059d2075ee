/*
 *   Copyright 2026 the operadica authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#pragma once

#include <string>

namespace operadica {

//! The word families the tool knows about.  FCat carries a parameter k;
//! TN, TN2 and TN3 are the full word operads over nat-add, mod-2 and mod-3.
enum class FamilyId {
  End,    // every letter <= arity - 1               (nat-add)
  FP,     // sorted letters s satisfy s_i <= i - 1   (nat-add)
  MT,     // letters form an interval {0..max}       (nat-add)
  APE,    // first 0, then 1 <= next <= prev + 1     (nat-add)
  FCat,   // first 0, then 0 <= next <= prev + k     (nat-add)
  Schr,   // nearest strictly smaller neighbour is b-1 (nat-add)
  Motz,   // first/last 0, steps in {-1, 0, 1}       (nat-add)
  Comp,   // first letter 0                          (mod-2)
  SComp,  // first letter 0                          (mod-3)
  AnD,    // closure of {00, 01} over mod-3; no letterwise test
  Dias,   // exactly one letter 1                    (bool-mult)
  TN,     // all words over nat-add
  TN2,    // all words over mod-2
  TN3     // all words over mod-3
};

//! Canonical registry spelling ("fcat:<k>" for FCat).
std::string family_name(FamilyId id, int k = 0);

}  // namespace operadica
