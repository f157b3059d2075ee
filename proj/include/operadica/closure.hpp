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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "operadica/word.hpp"

namespace operadica {

enum class ClosureMode { NonSymmetric, Symmetric };

//! Caps enumeration work.  max_elements bounds the size of any single
//! arity slice; exceeding it raises ResourceError naming the arity.
struct ResourceGuard {
  std::size_t max_elements = 10'000'000;
};

//! A finitely generated family: the sub-operad of words over a monoid
//! spanned by the listed generators (all of arity >= 2) under grafting,
//! and additionally under the positional action in symmetric mode.
struct OperadFamily {
  std::string name;
  Monoid monoid;
  std::vector<Word> generators;
  ClosureMode mode = ClosureMode::NonSymmetric;
  bool include_unit = true;

  OperadFamily(std::string name, Monoid monoid, std::vector<Word> generators,
               ClosureMode mode = ClosureMode::NonSymmetric,
               bool include_unit = true);
};

//! Words grouped by arity, each slice sorted lexicographically.
class GradedSet {
 public:
  GradedSet(Monoid monoid, std::vector<std::vector<Letters>> grades);

  const Monoid& monoid() const noexcept { return monoid_; }
  int max_arity() const noexcept {
    return static_cast<int>(grades_.size()) - 1;
  }

  //! Sorted letter lists of the given arity (1 <= n <= max_arity()).
  const std::vector<Letters>& grade(int n) const;

  //! Slice sizes for arities 1..max_arity(), in order.
  std::vector<long long> counts() const;

  bool contains(int arity, const Letters& letters) const;
  bool contains(const Word& w) const;

  //! Total number of stored words.
  long long size() const;

 private:
  Monoid monoid_;
  std::vector<std::vector<Letters>> grades_;  // grades_[n] holds arity n
};

//! All family members of arity <= max_arity, computed grade by grade.
//! Since every generator has arity >= 2, grafting two non-unit members
//! strictly increases arity, so each grade is complete once filled from
//! the grades below it; symmetric mode closes each grade under all letter
//! rearrangements before it is used (bounded to max_arity <= 8).
GradedSet generate(const OperadFamily& f, int max_arity,
                   const ResourceGuard& guard = {});

//! Membership of x in the family, deciding via generate at x's arity.
bool contains(const OperadFamily& f, const Word& x,
              const ResourceGuard& guard = {});

//! Letterwise image of generate(f, max_arity) under theta, re-deduplicated
//! per grade.  theta must start at f's monoid.
GradedSet image_under(const MonoidMorphism& theta, const OperadFamily& f,
                      int max_arity, const ResourceGuard& guard = {});

}  // namespace operadica
