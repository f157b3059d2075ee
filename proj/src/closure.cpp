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

#include "operadica/closure.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace operadica {

namespace {

constexpr int kSymmetricArityBound = 8;

void check_budget(const std::set<Letters>& slice, int arity,
                  const ResourceGuard& guard, const std::string& name) {
  if (slice.size() > guard.max_elements) {
    throw ResourceError("closure of " + name + " exceeds " +
                            std::to_string(guard.max_elements) +
                            " elements at arity " + std::to_string(arity),
                        arity);
  }
}

//! Inserts every distinct rearrangement of the letters; this is the orbit
//! under the full positional action, enumerated without repetition.
void close_under_action(std::set<Letters>& slice, int arity,
                        const ResourceGuard& guard, const std::string& name) {
  std::set<Letters> orbit;
  for (const Letters& w : slice) {
    Letters sorted = w;
    std::sort(sorted.begin(), sorted.end());
    do {
      orbit.insert(sorted);
      check_budget(orbit, arity, guard, name);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
  }
  slice = std::move(orbit);
}

}  // namespace

OperadFamily::OperadFamily(std::string name_in, Monoid monoid_in,
                           std::vector<Word> generators_in, ClosureMode mode_in,
                           bool include_unit_in)
    : name(std::move(name_in)),
      monoid(std::move(monoid_in)),
      generators(std::move(generators_in)),
      mode(mode_in),
      include_unit(include_unit_in) {
  for (const Word& g : generators) {
    if (g.monoid() != monoid) {
      throw DomainError("generator (" + g.to_text() + ") of " + name +
                        " is not a word over " + monoid.name());
    }
    if (g.arity() < 2) {
      throw DomainError("generators must have arity >= 2; (" + g.to_text() +
                        ") has arity " + std::to_string(g.arity()));
    }
  }
}

GradedSet::GradedSet(Monoid monoid, std::vector<std::vector<Letters>> grades)
    : monoid_(std::move(monoid)), grades_(std::move(grades)) {}

const std::vector<Letters>& GradedSet::grade(int n) const {
  if (n < 1 || n > max_arity()) {
    throw IndexError("arity " + std::to_string(n) + " out of range 1.." +
                     std::to_string(max_arity()));
  }
  return grades_[static_cast<std::size_t>(n)];
}

std::vector<long long> GradedSet::counts() const {
  std::vector<long long> out;
  out.reserve(grades_.size() - 1);
  for (int n = 1; n <= max_arity(); ++n) {
    out.push_back(static_cast<long long>(grade(n).size()));
  }
  return out;
}

bool GradedSet::contains(int arity, const Letters& letters) const {
  if (arity < 1 || arity > max_arity()) return false;
  const std::vector<Letters>& slice = grades_[static_cast<std::size_t>(arity)];
  return std::binary_search(slice.begin(), slice.end(), letters);
}

bool GradedSet::contains(const Word& w) const {
  if (w.monoid() != monoid_) return false;
  return contains(w.arity(), w.letters());
}

long long GradedSet::size() const {
  long long total = 0;
  for (int n = 1; n <= max_arity(); ++n) {
    total += static_cast<long long>(grade(n).size());
  }
  return total;
}

GradedSet generate(const OperadFamily& f, int max_arity,
                   const ResourceGuard& guard) {
  if (max_arity < 1) {
    throw DomainError("generate requires max_arity >= 1");
  }
  if (f.mode == ClosureMode::Symmetric && max_arity > kSymmetricArityBound) {
    throw DomainError("symmetric closure is bounded to arity " +
                      std::to_string(kSymmetricArityBound) + "; asked for " +
                      std::to_string(max_arity));
  }

  std::vector<std::set<Letters>> grade(static_cast<std::size_t>(max_arity) + 1);
  if (f.include_unit) grade[1].insert({f.monoid.identity()});
  for (const Word& g : f.generators) {
    if (g.arity() <= max_arity) {
      grade[static_cast<std::size_t>(g.arity())].insert(g.letters());
    }
  }

  for (int n = 2; n <= max_arity; ++n) {
    auto& slice = grade[static_cast<std::size_t>(n)];
    // a + b - 1 = n with both factors of arity >= 2; unit grafts are no-ops.
    for (int a = 2; a <= n - 1; ++a) {
      const int b = n + 1 - a;
      const auto& lo = grade[static_cast<std::size_t>(a)];
      const auto& hi = grade[static_cast<std::size_t>(b)];
      for (const Letters& xs : lo) {
        const Word x(f.monoid, xs);
        for (const Letters& ys : hi) {
          const Word y(f.monoid, ys);
          for (int i = 1; i <= a; ++i) {
            slice.insert(graft(x, i, y).letters());
            check_budget(slice, n, guard, f.name);
          }
        }
      }
    }
    if (f.mode == ClosureMode::Symmetric) {
      close_under_action(slice, n, guard, f.name);
    }
  }

  std::vector<std::vector<Letters>> out(static_cast<std::size_t>(max_arity) +
                                        1);
  for (int n = 1; n <= max_arity; ++n) {
    const auto& slice = grade[static_cast<std::size_t>(n)];
    out[static_cast<std::size_t>(n)].assign(slice.begin(), slice.end());
  }
  return GradedSet(f.monoid, std::move(out));
}

bool contains(const OperadFamily& f, const Word& x, const ResourceGuard& guard) {
  if (x.monoid() != f.monoid) {
    throw DomainError("membership query for a word over " + x.monoid().name() +
                      " in a family over " + f.monoid.name());
  }
  return generate(f, x.arity(), guard).contains(x);
}

GradedSet image_under(const MonoidMorphism& theta, const OperadFamily& f,
                      int max_arity, const ResourceGuard& guard) {
  if (theta.source() != f.monoid) {
    throw DomainError("morphism source " + theta.source().name() +
                      " does not match the family's monoid " +
                      f.monoid.name());
  }
  const GradedSet closure = generate(f, max_arity, guard);
  std::vector<std::vector<Letters>> out(static_cast<std::size_t>(max_arity) +
                                        1);
  for (int n = 1; n <= max_arity; ++n) {
    std::set<Letters> slice;
    for (const Letters& xs : closure.grade(n)) {
      Letters image;
      image.reserve(xs.size());
      for (Element v : xs) image.push_back(theta.apply(v));
      slice.insert(std::move(image));
    }
    out[static_cast<std::size_t>(n)].assign(slice.begin(), slice.end());
  }
  return GradedSet(theta.target(), std::move(out));
}

}  // namespace operadica
