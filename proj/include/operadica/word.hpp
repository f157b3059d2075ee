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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "operadica/monoid.hpp"

namespace operadica {

//! Letter sequence of a word; index 0 holds the first letter.
using Letters = std::vector<Element>;

//! A nonempty word over a monoid.  The arity of a word is its length.
class Word {
 public:
  //! Validates that letters is nonempty and every letter lies in the carrier.
  Word(Monoid monoid, Letters letters);

  const Monoid& monoid() const noexcept { return monoid_; }
  int arity() const noexcept { return static_cast<int>(letters_.size()); }
  const Letters& letters() const noexcept { return letters_; }

  //! 1-indexed letter access.
  Element letter(int i) const;

  //! Comma-separated rendering, e.g. "0,1,2".
  std::string to_text() const;

  //! Parses a comma-separated letter list over the given monoid.
  static Word parse(const Monoid& m, std::string_view text);

  friend bool operator==(const Word& a, const Word& b) {
    return a.monoid_ == b.monoid_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  //! Orders by (arity, letters); only meaningful among words over one monoid.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.arity() != b.arity()) return a.arity() < b.arity();
    return a.letters_ < b.letters_;
  }

 private:
  Monoid monoid_;
  Letters letters_;
};

//! The arity-1 word holding the identity of m; neutral for grafting.
Word unit(const Monoid& m);

//! Partial composition: substitutes y into the i-th position of x (1-indexed).
//! The i-th letter of x multiplies every letter of y from the left:
//!   graft(x, i, y) = (x_1, ..., x_{i-1}, x_i*y_1, ..., x_i*y_m, x_{i+1}, ..., x_n).
Word graft(const Word& x, int i, const Word& y);

//! A permutation of {1, ..., n} in one-line notation.
class Permutation {
 public:
  //! Validates that one_line holds each of 1..n exactly once.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  //! Parses comma-separated one-line notation, e.g. "2,3,5,1,4".
  static Permutation parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(one_line_.size()); }

  //! 1-indexed image sigma_j.
  int image(int j) const;

  const std::vector<int>& one_line() const noexcept { return one_line_; }
  bool is_identity() const;

  //! Composition (sigma tau)_j = sigma_{tau_j}, matching the right action:
  //! (x . sigma) . tau = x . (sigma tau).
  Permutation compose(const Permutation& tau) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.one_line_ == b.one_line_;
  }

 private:
  std::vector<int> one_line_;
};

//! Right action by position selection: (x . sigma)_j = x_{sigma_j}.
Word act(const Word& x, const Permutation& sigma);

//! Letterwise application of a monoid morphism; the direct functorial image.
Word map_word(const MonoidMorphism& theta, const Word& x);

//! The permutation of degree n+m-1 obtained from sigma (degree n) by blowing
//! the value sigma_i up into the block sigma_i, ..., sigma_i+m-1 placed at
//! positions i, ..., i+m-1, every other value above sigma_i shifting up by
//! m-1.  It is the unique witness of equivariance:
//!   act(x, sigma) grafted with y at i == act(graft(x, sigma_i, y), result).
Permutation block_substitution(const Permutation& sigma, int i, int m);

//! The permutation of degree n+m-1 acting as tau (degree m) inside the block
//! at positions i, ..., i+m-1 of a grafting with an arity-n outer word, and
//! as the identity elsewhere; witness of inner equivariance:
//!   graft(x, i, act(y, tau)) == act(graft(x, i, y), result).
Permutation block_inner(int n, int i, const Permutation& tau);

//! All permutations of degree n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

//! Joins letters with commas; shared by reports and the CLI.
std::string letters_to_text(const Letters& letters);

//! Parses a comma-separated integer list.
Letters parse_letters(std::string_view text);

}  // namespace operadica
