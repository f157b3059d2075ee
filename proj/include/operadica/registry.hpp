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

//! The operad registry: every built-in word family by name, with whatever
//! realizations it has (generator closure, letterwise characterization,
//! counting oracle), plus image comparisons between registered operads.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operadica/characterize.hpp"
#include "operadica/closure.hpp"
#include "operadica/combinatorics.hpp"
#include "operadica/family_id.hpp"
#include "operadica/word.hpp"

namespace operadica {

//! One registry entry.  `family` is set when the operad is finitely
//! generated, `predicate` when a letterwise membership test exists, and
//! `full_word_operad` marks an entire word operad over one monoid.
struct OperadInfo {
  std::string name;
  FamilyId id = FamilyId::TN;
  int k = 0;
  Monoid monoid = Monoid::nat_add();
  std::optional<OperadFamily> family;
  std::optional<FamilyPredicate> predicate;
  bool full_word_operad = false;

  bool has_oracle() const {
    return !full_word_operad || monoid.finite();
  }
};

//! Looks a name up: the registered families (end, fp, mt, ape, fcat:<k>,
//! schr, motz, comp, scomp, and, dias, tn, tn2, tn3), or a bare monoid
//! spec ("mod:<k>", "nat-add", ...) denoting the full word operad over
//! that monoid.  Unknown names raise UsageError listing the choices.
OperadInfo lookup_operad(const std::string& name);

std::vector<std::string> operad_names();

//! All members of the given arity, sorted; prefers the closure
//! realization, falls back to the characterization or a finite carrier.
//! Operads with infinitely many words per arity raise DomainError.
std::vector<Letters> operad_slice(const OperadInfo& info, int arity,
                                  const ResourceGuard& guard = {});

//! Slice sizes for arities 1..max_arity.
std::vector<long long> operad_counts(const OperadInfo& info, int max_arity,
                                     const ResourceGuard& guard = {});

//! Oracle sizes for arities 1..max_arity from the closed-form counters.
std::vector<long long> operad_oracle(const OperadInfo& info, int max_arity);

//! Membership with a diagnostic clause where a characterization exists;
//! closure-backed otherwise.  The word must live over the operad's monoid.
MembershipResult operad_membership(const OperadInfo& info, const Word& x,
                                   const ResourceGuard& guard = {});

//! The closure realization, or DomainError naming what is missing.
const OperadFamily& require_family(const OperadInfo& info);

//! Parses a morphism spec ("identity" or "mod:<k>") against a source.
MonoidMorphism parse_map(const std::string& spec, const Monoid& source);

//! Gradewise comparison of theta(from) with `to`: containment and
//! equality per arity, with the first witness either way.
struct MorphismComparison {
  std::string from;
  std::string to;
  std::string map;
  int max_arity = 0;
  std::vector<long long> image_counts;
  std::vector<long long> target_counts;
  bool contained = true;
  bool equal = true;
  std::string witness;

  std::string to_text() const;
};

MorphismComparison compare_image(const OperadInfo& from,
                                 const MonoidMorphism& theta,
                                 const OperadInfo& to, int max_arity,
                                 const ResourceGuard& guard = {});

//! The operad a presentation preset is checked against when the caller
//! names none (comp -> comp, fcat-two-gen -> fcat:1, ...).
std::string preset_default_operad(const std::string& preset);

}  // namespace operadica
