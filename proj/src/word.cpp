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

#include "operadica/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

namespace operadica {

Word::Word(Monoid monoid, Letters letters)
    : monoid_(std::move(monoid)), letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw DomainError("words have arity >= 1; empty letter list");
  }
  for (Element v : letters_) {
    if (!monoid_.contains(v)) {
      throw DomainError("letter " + std::to_string(v) +
                        " outside the carrier of " + monoid_.name());
    }
  }
}

Element Word::letter(int i) const {
  if (i < 1 || i > arity()) {
    throw IndexError("letter index " + std::to_string(i) +
                     " out of range 1.." + std::to_string(arity()));
  }
  return letters_[static_cast<std::size_t>(i - 1)];
}

std::string Word::to_text() const { return letters_to_text(letters_); }

Word Word::parse(const Monoid& m, std::string_view text) {
  return Word(m, parse_letters(text));
}

Word unit(const Monoid& m) { return Word(m, {m.identity()}); }

Word graft(const Word& x, int i, const Word& y) {
  if (x.monoid() != y.monoid()) {
    throw DomainError("grafting words over different monoids (" +
                      x.monoid().name() + " vs " + y.monoid().name() + ")");
  }
  const int n = x.arity();
  if (i < 1 || i > n) {
    throw IndexError("grafting position " + std::to_string(i) +
                     " out of range 1.." + std::to_string(n));
  }
  const Monoid& m = x.monoid();
  const Letters& xs = x.letters();
  const Letters& ys = y.letters();
  Letters out;
  out.reserve(xs.size() + ys.size() - 1);
  out.insert(out.end(), xs.begin(), xs.begin() + (i - 1));
  const Element base = xs[static_cast<std::size_t>(i - 1)];
  for (Element v : ys) out.push_back(m.combine(base, v));
  out.insert(out.end(), xs.begin() + i, xs.end());
  return Word(m, std::move(out));
}

Permutation::Permutation(std::vector<int> one_line)
    : one_line_(std::move(one_line)) {
  const int n = degree();
  if (n == 0) {
    throw DomainError("permutations have degree >= 1");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("one-line notation is not a permutation of 1.." +
                        std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) line[static_cast<std::size_t>(j - 1)] = j;
  return Permutation(std::move(line));
}

Permutation Permutation::parse(std::string_view text) {
  const Letters values = parse_letters(text);
  std::vector<int> line;
  line.reserve(values.size());
  for (Element v : values) line.push_back(static_cast<int>(v));
  return Permutation(std::move(line));
}

int Permutation::image(int j) const {
  if (j < 1 || j > degree()) {
    throw IndexError("permutation index " + std::to_string(j) +
                     " out of range 1.." + std::to_string(degree()));
  }
  return one_line_[static_cast<std::size_t>(j - 1)];
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= degree(); ++j) {
    if (one_line_[static_cast<std::size_t>(j - 1)] != j) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& tau) const {
  if (degree() != tau.degree()) {
    throw DomainError("composing permutations of different degrees");
  }
  std::vector<int> line(one_line_.size());
  for (int j = 1; j <= degree(); ++j) {
    line[static_cast<std::size_t>(j - 1)] = image(tau.image(j));
  }
  return Permutation(std::move(line));
}

Word act(const Word& x, const Permutation& sigma) {
  if (sigma.degree() != x.arity()) {
    throw DomainError("permutation degree " + std::to_string(sigma.degree()) +
                      " does not match arity " + std::to_string(x.arity()));
  }
  const Letters& xs = x.letters();
  Letters out(xs.size());
  for (int j = 1; j <= x.arity(); ++j) {
    out[static_cast<std::size_t>(j - 1)] =
        xs[static_cast<std::size_t>(sigma.image(j) - 1)];
  }
  return Word(x.monoid(), std::move(out));
}

Word map_word(const MonoidMorphism& theta, const Word& x) {
  if (theta.source() != x.monoid()) {
    throw DomainError("morphism source " + theta.source().name() +
                      " does not match the word's monoid " +
                      x.monoid().name());
  }
  Letters out;
  out.reserve(x.letters().size());
  for (Element v : x.letters()) out.push_back(theta.apply(v));
  return Word(theta.target(), std::move(out));
}

Permutation block_substitution(const Permutation& sigma, int i, int m) {
  const int n = sigma.degree();
  if (i < 1 || i > n) {
    throw IndexError("block position " + std::to_string(i) +
                     " out of range 1.." + std::to_string(n));
  }
  if (m < 1) {
    throw DomainError("block size must be >= 1");
  }
  const int pivot = sigma.image(i);
  auto lift = [&](int v) { return v < pivot ? v : v + m - 1; };
  std::vector<int> line;
  line.reserve(static_cast<std::size_t>(n + m - 1));
  for (int q = 1; q < i; ++q) line.push_back(lift(sigma.image(q)));
  for (int r = 0; r < m; ++r) line.push_back(pivot + r);
  for (int q = i + 1; q <= n; ++q) line.push_back(lift(sigma.image(q)));
  return Permutation(std::move(line));
}

Permutation block_inner(int n, int i, const Permutation& tau) {
  if (i < 1 || i > n) {
    throw IndexError("block position " + std::to_string(i) +
                     " out of range 1.." + std::to_string(n));
  }
  const int m = tau.degree();
  std::vector<int> line;
  line.reserve(static_cast<std::size_t>(n + m - 1));
  for (int q = 1; q < i; ++q) line.push_back(q);
  for (int r = 1; r <= m; ++r) line.push_back(i - 1 + tau.image(r));
  for (int q = i + 1; q <= n; ++q) line.push_back(q + m - 1);
  return Permutation(std::move(line));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) line[static_cast<std::size_t>(j - 1)] = j;
  std::vector<Permutation> out;
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::string letters_to_text(const Letters& letters) {
  std::ostringstream os;
  for (std::size_t p = 0; p < letters.size(); ++p) {
    if (p > 0) os << ',';
    os << letters[p];
  }
  return os.str();
}

Letters parse_letters(std::string_view text) {
  Letters out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    Element value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw UsageError("cannot parse integer from \"" + std::string(field) +
                       "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace operadica
