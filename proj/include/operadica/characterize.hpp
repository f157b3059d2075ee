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

//! Direct letterwise characterizations of the built-in word families, with
//! machinery to confirm that each characterization carves out exactly the
//! words produced by generator closure.

#pragma once

#include <string>
#include <vector>

#include "operadica/closure.hpp"
#include "operadica/family_id.hpp"
#include "operadica/word.hpp"

namespace operadica {

//! Outcome of a membership test.  On failure `clause` names the condition
//! that broke and `position` the 1-indexed letter it broke at (0 when the
//! condition is not tied to a single position).
struct MembershipResult {
  bool member = true;
  std::string clause;
  int position = 0;
};

//! A letterwise membership predicate for one family.  Families whose
//! members are only known through closure (and the free-monoid carriers)
//! have no predicate; constructing one throws DomainError.
class FamilyPredicate {
 public:
  explicit FamilyPredicate(FamilyId id, int k = 0);

  FamilyId id() const { return id_; }
  int parameter() const { return k_; }
  const Monoid& monoid() const { return monoid_; }
  std::string name() const { return family_name(id_, k_); }

  //! Tests the predicate; throws DomainError if `x` lives over the wrong
  //! monoid.
  MembershipResult membership(const Word& x) const;
  bool contains(const Word& x) const { return membership(x).member; }

  //! All members of the given arity in lexicographic order.
  std::vector<Letters> slice(int arity) const;
  long long slice_size(int arity) const;

 private:
  FamilyId id_;
  int k_;
  Monoid monoid_;
};

//! Gradewise comparison of a predicate against a generator closure.
struct CrossValidation {
  std::string family;
  int max_arity = 0;
  std::vector<long long> predicate_counts;
  std::vector<long long> closure_counts;
  bool agree = true;
  std::string witness;  // first discrepancy, empty when the sets agree

  std::string to_text() const;
};

//! Compares predicate slices with closure grades for every arity up to
//! `max_arity`; the first mismatching word (either direction) is reported
//! as a witness.
CrossValidation cross_validate(const FamilyPredicate& predicate,
                               const OperadFamily& family, int max_arity,
                               const ResourceGuard& guard = {});

}  // namespace operadica
