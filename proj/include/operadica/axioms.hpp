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

#include <cstdint>
#include <string>
#include <vector>

#include "operadica/word.hpp"

namespace operadica {

struct AxiomCheck {
  std::string axiom;
  long long cases = 0;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct AxiomReport {
  std::string monoid;
  std::string mode;  // "exhaustive" or "sampled"
  int max_arity = 0;
  long long samples = 0;
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  std::string to_text() const;
};

//! Verifies the operad laws of the word operad over m: sequential and
//! parallel associativity of grafting, unit neutrality, the symmetric-group
//! right action, both equivariance identities (via explicitly constructed
//! block permutations) and functoriality of letterwise morphism application.
//!
//! With samples == 0 the check is exhaustive over all words of arity
//! <= max_arity, which requires a finite monoid.  With samples > 0 it runs
//! that many seeded random instances per axiom (any monoid; letters are
//! drawn from a small window of the carrier).
AxiomReport check_operad_axioms(const Monoid& m, long long samples,
                                std::uint64_t seed, int max_arity);

//! All words of the given arity over a finite monoid, in lexicographic
//! order.
std::vector<Word> all_words(const Monoid& m, int arity);

}  // namespace operadica
